//! Exact ordinary character tables and the class-function operations built on
//! them: inner products, restriction, induction and decomposition.

mod classfn;
mod dixon;
mod modp;

use std::fmt::Write as _;

use thiserror::Error;

pub use classfn::{
    class_fusion, constituents, induce, inner_product, inner_product_value, permutation_character,
    regular_character, restrict, trivial_character, ClassFunction,
};
pub use dixon::ClassConstants;

use crate::cyclotomic::Cyclo;
use crate::permgroup::{ClassData, FinGroup, GroupError, GroupId, DEFAULT_ORDER_CAP};

/// Random combinations tried per eigenspace before giving up.
pub const DEFAULT_RETRY_BUDGET: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("lifting to Q(ζ_e) failed: {0}")]
    LiftFailure(String),
    #[error("group of order {order} exceeds the cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("could not split a {dim}-dimensional eigenspace after {attempts} attempts")]
    SplittingFailed { dim: usize, attempts: usize },
    #[error("class function belongs to a different group")]
    GroupMismatch,
    #[error("class function is not a character: {0}")]
    NotACharacter(String),
    #[error("inner product is not rational")]
    NotRational,
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Copy, Debug)]
pub struct TableOptions {
    pub seed: u64,
    pub retry_budget: usize,
    pub max_order: usize,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            seed: 0,
            retry_budget: DEFAULT_RETRY_BUDGET,
            max_order: DEFAULT_ORDER_CAP,
        }
    }
}

/// The irreducible characters of a group, one row per character, columns
/// indexed by the classes of the accompanying [`ClassData`].
///
/// Row 0 is the trivial character; the remaining rows are sorted by degree and
/// then by the rendering of their values, so the table does not depend on the
/// seed used to build it.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    classes: ClassData,
    prime: u64,
    rows: Vec<Vec<Cyclo>>,
    degrees: Vec<u64>,
}

/// Computes `Irr(group)` with default options and the given seed.
pub fn compute_character_table(
    group: &FinGroup,
    cd: &ClassData,
    seed: u64,
) -> Result<CharacterTable, TableError> {
    CharacterTable::compute(
        group,
        cd,
        &TableOptions {
            seed,
            ..TableOptions::default()
        },
    )
}

impl CharacterTable {
    pub fn compute(
        group: &FinGroup,
        cd: &ClassData,
        opts: &TableOptions,
    ) -> Result<Self, TableError> {
        if group.order() > opts.max_order {
            return Err(TableError::CapExceeded {
                order: group.order(),
                cap: opts.max_order,
            });
        }
        if cd.group_id() != group.id() {
            return Err(TableError::GroupMismatch);
        }
        let out = dixon::dixon_schneider(group, cd, opts.seed, opts.retry_budget)?;
        let mut keyed: Vec<(u64, Vec<String>, Vec<Cyclo>)> = out
            .rows
            .into_iter()
            .zip(out.degrees)
            .map(|(row, d)| (d, row.iter().map(ToString::to_string).collect(), row))
            .collect();
        // trivial character first, then by degree and rendering
        let is_trivial = |cells: &[String]| cells.iter().all(|c| c == "1");
        keyed.sort_by(|a, b| (!is_trivial(&a.1), a.0, &a.1).cmp(&(!is_trivial(&b.1), b.0, &b.1)));
        let (degrees, rows) = keyed.into_iter().map(|(d, _, row)| (d, row)).unzip();
        Ok(CharacterTable {
            classes: cd.clone(),
            prime: out.prime,
            rows,
            degrees,
        })
    }

    pub fn class_data(&self) -> &ClassData {
        &self.classes
    }

    pub fn group_id(&self) -> GroupId {
        self.classes.group_id()
    }

    pub fn group_order(&self) -> u64 {
        self.classes.group_order()
    }

    pub fn exponent(&self) -> u64 {
        self.classes.exponent()
    }

    /// The prime ℓ the eigenspace splitting ran over.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Cyclo>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Cyclo] {
        &self.rows[i]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.degrees[i]
    }

    pub fn character(&self, i: usize) -> ClassFunction {
        ClassFunction::new(self.group_id(), self.rows[i].clone())
    }

    /// Index of the row equal to `values`, if any.
    pub fn find_row(&self, values: &[Cyclo]) -> Option<usize> {
        self.rows.iter().position(|r| r.as_slice() == values)
    }

    /// Indices of the linear characters.
    pub fn linear_rows(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.degrees[i] == 1).collect()
    }

    /// One line per character, values in `E(n)` notation separated by tabs.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", cells.join("\t"));
        }
        out
    }
}
