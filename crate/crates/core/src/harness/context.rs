use super::{CorpusEntry, HarnessError};
use crate::charinv::{
    normal_subgroups, profile_characters, CharacterProfile, InvError, SubgroupData,
    SubnormalLattice, DEFAULT_LATTICE_CAP,
};
use crate::chartable::{CharacterTable, TableError, TableOptions, DEFAULT_RETRY_BUDGET};
use crate::permgroup::{ClassData, FinGroup};

/// Everything the suites need about one corpus group.
#[derive(Clone, Debug)]
pub struct GroupContext {
    pub name: String,
    pub tags: Vec<String>,
    pub group: FinGroup,
    pub classes: ClassData,
    pub table: CharacterTable,
    pub solvable: bool,
    pub options: TableOptions,
    /// Character profiles; `p_special_for` is only filled for solvable groups
    /// built with lemma data.
    pub profiles: Vec<CharacterProfile>,
    /// Proper nontrivial normal subgroups with their tables (lemma data only).
    pub normals: Vec<SubgroupData>,
    pub lattice: Option<SubnormalLattice>,
}

impl GroupContext {
    pub fn build(
        entry: &CorpusEntry,
        seed: u64,
        max_order: usize,
        lemma_data: bool,
    ) -> Result<Self, HarnessError> {
        let name = entry.name.clone();
        let table_err = |source: TableError| HarnessError::Table {
            group: name.clone(),
            source,
        };
        let inv_err = |source: InvError| HarnessError::Inv {
            group: name.clone(),
            source,
        };
        let group = entry.group(max_order)?;
        let classes = ClassData::new(&group);
        let options = TableOptions {
            seed,
            retry_budget: DEFAULT_RETRY_BUDGET,
            max_order,
        };
        let table = CharacterTable::compute(&group, &classes, &options).map_err(table_err)?;
        let solvable = group.is_solvable();

        let lattice = if lemma_data && solvable {
            Some(SubnormalLattice::build(&group, &options, DEFAULT_LATTICE_CAP).map_err(inv_err)?)
        } else {
            None
        };
        let profiles = profile_characters(&group, &table, lattice.as_ref()).map_err(inv_err)?;
        let mut normals = Vec::new();
        if lemma_data {
            for n in normal_subgroups(&group, &classes) {
                if n.order() == 1 || n.order() == group.order() {
                    continue;
                }
                let cached = lattice
                    .as_ref()
                    .and_then(|l| l.members().iter().find(|m| m.group == n));
                normals.push(match cached {
                    Some(m) => m.clone(),
                    None => SubgroupData::new(n, &options).map_err(inv_err)?,
                });
            }
        }
        Ok(GroupContext {
            name: entry.name.clone(),
            tags: entry.tags.clone(),
            group,
            classes,
            table,
            solvable,
            options,
            profiles,
            normals,
            lattice,
        })
    }

    pub fn feit(&self, row: usize) -> u64 {
        self.profiles[row].feit
    }
}
