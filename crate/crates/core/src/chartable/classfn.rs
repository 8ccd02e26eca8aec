use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{CharacterTable, TableError};
use crate::cyclotomic::Cyclo;
use crate::permgroup::{ClassData, FinGroup, GroupError, GroupId};

/// A function on the conjugacy classes of one particular group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    group: GroupId,
    values: Vec<Cyclo>,
}

impl ClassFunction {
    pub fn new(group: GroupId, values: Vec<Cyclo>) -> Self {
        ClassFunction { group, values }
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Cyclo> {
        self.values
    }

    pub fn degree(&self) -> Option<i64> {
        self.values.first().and_then(Cyclo::to_i64)
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction, TableError> {
        if self.group != other.group || self.values.len() != other.values.len() {
            return Err(TableError::GroupMismatch);
        }
        Ok(ClassFunction {
            group: self.group,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction, TableError> {
        if self.group != other.group || self.values.len() != other.values.len() {
            return Err(TableError::GroupMismatch);
        }
        Ok(ClassFunction {
            group: self.group,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }
}

pub fn trivial_character(cd: &ClassData) -> ClassFunction {
    ClassFunction::new(cd.group_id(), vec![Cyclo::one(1); cd.len()])
}

pub fn regular_character(cd: &ClassData) -> ClassFunction {
    let mut values = vec![Cyclo::zero(1); cd.len()];
    values[0] = Cyclo::from_int(1, cd.group_order() as i64);
    ClassFunction::new(cd.group_id(), values)
}

/// Fixed-point counts of the natural action on points.
pub fn permutation_character(group: &FinGroup, cd: &ClassData) -> ClassFunction {
    let values = cd
        .reps()
        .iter()
        .map(|&r| {
            let g = group.element(r);
            let fixed = (0..group.degree()).filter(|&i| g.image(i) == i).count();
            Cyclo::from_int(1, fixed as i64)
        })
        .collect();
    ClassFunction::new(group.id(), values)
}

/// `(1/|G|)·Σ_c |c|·α(c)·conj(β(c))` as a cyclotomic value.
pub fn inner_product_value(
    cd: &ClassData,
    alpha: &ClassFunction,
    beta: &ClassFunction,
) -> Result<Cyclo, TableError> {
    if alpha.group != cd.group_id()
        || beta.group != cd.group_id()
        || alpha.values.len() != cd.len()
        || beta.values.len() != cd.len()
    {
        return Err(TableError::GroupMismatch);
    }
    let mut sum = Cyclo::zero(1);
    for ((a, b), &size) in alpha.values.iter().zip(&beta.values).zip(cd.sizes()) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        sum = &sum + &(a * &b.conj()).scale_int(size as i64);
    }
    Ok(sum.div_int(cd.group_order() as i64))
}

/// Inner product of two class functions whose product sum is rational, such
/// as any two characters.
pub fn inner_product(
    cd: &ClassData,
    alpha: &ClassFunction,
    beta: &ClassFunction,
) -> Result<BigRational, TableError> {
    inner_product_value(cd, alpha, beta)?
        .to_rational()
        .ok_or(TableError::NotRational)
}

/// For each class of `sub`, the class of `group` containing it.
pub fn class_fusion(
    group: &FinGroup,
    cd: &ClassData,
    sub: &FinGroup,
    sub_cd: &ClassData,
) -> Result<Vec<usize>, TableError> {
    if sub_cd.group_id() != sub.id() || cd.group_id() != group.id() {
        return Err(TableError::GroupMismatch);
    }
    if !sub.is_subgroup_of(group) {
        return Err(GroupError::NotSubgroup.into());
    }
    Ok(sub_cd
        .reps()
        .iter()
        .map(|&r| {
            let idx = group
                .index_of(sub.element(r))
                .expect("subgroup elements lie in the group");
            cd.class_of(idx)
        })
        .collect())
}

/// Restriction of `chi` to `sub`, together with the class fusion used.
pub fn restrict(
    chi: &ClassFunction,
    group: &FinGroup,
    cd: &ClassData,
    sub: &FinGroup,
    sub_cd: &ClassData,
) -> Result<(ClassFunction, Vec<usize>), TableError> {
    if chi.group != group.id() {
        return Err(TableError::GroupMismatch);
    }
    let fusion = class_fusion(group, cd, sub, sub_cd)?;
    let values = fusion.iter().map(|&c| chi.values[c].clone()).collect();
    Ok((ClassFunction::new(sub.id(), values), fusion))
}

/// Induction from `sub` to `group`:
/// `θ^G(c) = |G|/(|H|·|c|) · Σ_{d ⊆ c} |d|·θ(d)` over the `H`-classes `d`
/// fusing into `c`.
pub fn induce(
    theta: &ClassFunction,
    sub: &FinGroup,
    sub_cd: &ClassData,
    group: &FinGroup,
    cd: &ClassData,
) -> Result<ClassFunction, TableError> {
    if theta.group != sub.id() {
        return Err(TableError::GroupMismatch);
    }
    let fusion = class_fusion(group, cd, sub, sub_cd)?;
    let mut sums = vec![Cyclo::zero(1); cd.len()];
    for (d, &c) in fusion.iter().enumerate() {
        sums[c] = &sums[c] + &theta.values[d].scale_int(sub_cd.sizes()[d] as i64);
    }
    let g = group.order() as i64;
    let h = sub.order() as i64;
    let values = sums
        .iter()
        .zip(cd.sizes())
        .map(|(s, &size)| {
            s.scale(&BigRational::new(
                BigInt::from(g),
                BigInt::from(h * size as i64),
            ))
        })
        .collect();
    Ok(ClassFunction::new(group.id(), values))
}

/// Decomposes a character into irreducible constituents `(row, multiplicity)`,
/// omitting rows of multiplicity zero.
pub fn constituents(
    alpha: &ClassFunction,
    table: &CharacterTable,
) -> Result<Vec<(usize, u64)>, TableError> {
    let cd = table.class_data();
    let mut out = Vec::new();
    for i in 0..table.len() {
        let m = inner_product_value(cd, alpha, &table.character(i))?;
        let m = m
            .to_rational()
            .filter(|q| q.is_integer() && !q.is_negative())
            .ok_or_else(|| TableError::NotACharacter(format!("multiplicity of row {i} is {m}")))?;
        if !m.is_zero() {
            out.push((i, m.to_integer().to_u64().expect("fits in u64")));
        }
    }
    Ok(out)
}
