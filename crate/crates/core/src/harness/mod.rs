//! Corpus ingestion, the verification suites and report emission.

mod checks;
mod context;
mod corpus;
mod report;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

pub use checks::{check_amit_chillag, check_lemmas, check_theorem_a, SylowData};
pub use context::GroupContext;
pub use corpus::{parse_corpus, render_corpus, CorpusEntry, BUNDLED_CORPUS};
pub use report::{corpus_digest, emit_report, CheckKind, CheckResult, Format, Report, Summary};

use crate::charinv::InvError;
use crate::chartable::TableError;
use crate::permgroup::{prime_divisors, GroupError, DEFAULT_ORDER_CAP};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate group name {0:?}")]
    DuplicateName(String),
    #[error("no group named {0:?} in the corpus")]
    UnknownGroup(String),
    #[error("{group}: {source}")]
    Group { group: String, source: GroupError },
    #[error("{group}: {source}")]
    Table { group: String, source: TableError },
    #[error("{group}: {source}")]
    Inv { group: String, source: InvError },
}

/// Which suites to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckSelection {
    TheoremA,
    AmitChillag,
    Lemmas,
    All,
}

impl CheckSelection {
    fn theorem_a(self) -> bool {
        matches!(self, CheckSelection::TheoremA | CheckSelection::All)
    }

    fn amit_chillag(self) -> bool {
        matches!(self, CheckSelection::AmitChillag | CheckSelection::All)
    }

    fn lemmas(self) -> bool {
        matches!(self, CheckSelection::Lemmas | CheckSelection::All)
    }
}

impl FromStr for CheckSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "theoremA" => Ok(CheckSelection::TheoremA),
            "amitchillag" => Ok(CheckSelection::AmitChillag),
            "lemmas" => Ok(CheckSelection::Lemmas),
            "all" => Ok(CheckSelection::All),
            _ => Err(format!(
                "unknown check {s:?} (expected theoremA, amitchillag, lemmas or all)"
            )),
        }
    }
}

/// Primes to test: every prime divisor of `|G|`, or one given prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeSelection {
    All,
    Prime(u64),
}

impl FromStr for PrimeSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(PrimeSelection::All);
        }
        match s.parse::<u64>() {
            Ok(p) if crate::permgroup::is_prime(p) => Ok(PrimeSelection::Prime(p)),
            _ => Err(format!("{s:?} is not a prime")),
        }
    }
}

impl fmt::Display for PrimeSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSelection::All => f.write_str("all"),
            PrimeSelection::Prime(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub checks: CheckSelection,
    pub primes: PrimeSelection,
    pub seed: u64,
    pub max_order: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            checks: CheckSelection::All,
            primes: PrimeSelection::All,
            seed: 0,
            max_order: DEFAULT_ORDER_CAP,
        }
    }
}

/// Results of a run, plus the entries left out for exceeding the order cap.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub results: Vec<CheckResult>,
    pub skipped: Vec<String>,
}

/// Theorem A primes for a group of order `n`. In "all" mode these are the
/// prime divisors of `n` plus the least prime not dividing it, where the
/// check degenerates to an element-order test on `G`.
fn theorem_a_primes(n: u64, sel: PrimeSelection) -> Vec<u64> {
    match sel {
        PrimeSelection::Prime(p) => vec![p],
        PrimeSelection::All => {
            let mut ps = prime_divisors(n);
            let extra = (2..)
                .find(|&q| crate::permgroup::is_prime(q) && !n.is_multiple_of(q))
                .expect("infinitely many primes");
            ps.push(extra);
            ps
        }
    }
}

fn lemma_primes(n: u64, sel: PrimeSelection) -> Vec<u64> {
    match sel {
        PrimeSelection::Prime(p) => vec![p],
        PrimeSelection::All => prime_divisors(n),
    }
}

/// Runs the selected suites on one entry. `None` when the group exceeds the
/// order cap.
pub fn run_entry(
    entry: &CorpusEntry,
    opts: &RunOptions,
) -> Result<Option<Vec<CheckResult>>, HarnessError> {
    let ctx = match GroupContext::build(entry, opts.seed, opts.max_order, opts.checks.lemmas()) {
        Ok(ctx) => ctx,
        Err(HarnessError::Group {
            source: GroupError::ClosureExceedsCap { .. },
            ..
        }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let n = ctx.group.order() as u64;
    let mut out = Vec::new();
    if opts.checks.theorem_a() {
        for p in theorem_a_primes(n, opts.primes) {
            out.extend(check_theorem_a(&ctx, p)?);
        }
    }
    if opts.checks.amit_chillag() {
        out.extend(check_amit_chillag(&ctx));
    }
    if opts.checks.lemmas() {
        for p in lemma_primes(n, opts.primes) {
            out.extend(check_lemmas(&ctx, p)?);
        }
    }
    Ok(Some(out))
}

/// Runs every entry, in parallel, with results in corpus order.
pub fn run_corpus(entries: &[CorpusEntry], opts: &RunOptions) -> Result<RunOutcome, HarnessError> {
    let per_entry = entries
        .par_iter()
        .map(|e| run_entry(e, opts))
        .collect::<Result<Vec<_>, _>>()?;
    let mut results = Vec::new();
    let mut skipped = Vec::new();
    for (e, r) in entries.iter().zip(per_entry) {
        match r {
            Some(r) => results.extend(r),
            None => skipped.push(e.name.clone()),
        }
    }
    Ok(RunOutcome { results, skipped })
}

/// Parses `text`, runs the suites and assembles the report.
pub fn verify_corpus(text: &str, opts: &RunOptions) -> Result<(Report, Vec<String>), HarnessError> {
    let entries = parse_corpus(text)?;
    let outcome = run_corpus(&entries, opts)?;
    Ok((
        Report::new(outcome.results, opts.seed, corpus_digest(text)),
        outcome.skipped,
    ))
}

/// The entry called `name`.
pub fn find_entry<'a>(
    entries: &'a [CorpusEntry],
    name: &str,
) -> Result<&'a CorpusEntry, HarnessError> {
    entries
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| HarnessError::UnknownGroup(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selections_parse() {
        assert_eq!("lemmas".parse(), Ok(CheckSelection::Lemmas));
        assert!("theorema".parse::<CheckSelection>().is_err());
        assert_eq!("all".parse(), Ok(PrimeSelection::All));
        assert_eq!("7".parse(), Ok(PrimeSelection::Prime(7)));
        assert!("9".parse::<PrimeSelection>().is_err());
    }

    #[test]
    fn all_mode_adds_one_coprime_prime() {
        assert_eq!(theorem_a_primes(48, PrimeSelection::All), vec![2, 3, 5]);
        assert_eq!(theorem_a_primes(1, PrimeSelection::All), vec![2]);
        assert_eq!(lemma_primes(1, PrimeSelection::All), Vec::<u64>::new());
    }

    #[test]
    fn cap_skips_entries() {
        let entries = parse_corpus(BUNDLED_CORPUS).unwrap();
        let s5: Vec<_> = entries.into_iter().filter(|e| e.name == "S5").collect();
        let opts = RunOptions {
            max_order: 100,
            ..Default::default()
        };
        let out = run_corpus(&s5, &opts).unwrap();
        assert!(out.results.is_empty());
        assert_eq!(out.skipped, vec!["S5"]);
    }
}
