//! Exact character theory for small permutation groups.

pub mod charinv;
pub mod chartable;
pub mod cyclotomic;
pub mod harness;
pub mod permgroup;

pub use charinv::{CharacterProfile, InvError};
pub use chartable::{CharacterTable, ClassFunction, TableError, TableOptions};
pub use cyclotomic::Cyclo;
pub use harness::{CheckResult, CorpusEntry, HarnessError, Report};
pub use permgroup::{ClassData, FinGroup, GroupError, Permutation};
