use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CheckKind {
    #[serde(rename = "theoremA")]
    TheoremA,
    #[serde(rename = "amitchillag")]
    AmitChillag,
    #[serde(rename = "lemma1")]
    Lemma1,
    #[serde(rename = "lemma2")]
    Lemma2,
    #[serde(rename = "lemma3")]
    Lemma3,
    #[serde(rename = "lemma4")]
    Lemma4,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::TheoremA => "theoremA",
            CheckKind::AmitChillag => "amitchillag",
            CheckKind::Lemma1 => "lemma1",
            CheckKind::Lemma2 => "lemma2",
            CheckKind::Lemma3 => "lemma3",
            CheckKind::Lemma4 => "lemma4",
        }
    }
}

/// One verified statement about one group (and prime and character, where
/// they apply).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub group: String,
    pub check: CheckKind,
    pub p: Option<u64>,
    pub char_index: Option<usize>,
    pub degree: Option<u64>,
    pub feit: Option<u64>,
    pub holds: bool,
    pub hypothesis_met: bool,
    pub witness: Option<String>,
    pub details: serde_json::Value,
}

impl CheckResult {
    pub fn failed(&self) -> bool {
        self.hypothesis_met && !self.holds
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub hypothesis_violated: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Self {
        let mut s = Summary::default();
        for r in results {
            match (r.hypothesis_met, r.holds) {
                (false, _) => s.hypothesis_violated += 1,
                (true, true) => s.pass += 1,
                (true, false) => s.fail += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub version: String,
    pub seed: u64,
    pub corpus_digest: String,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(results: Vec<CheckResult>, seed: u64, corpus_digest: String) -> Self {
        let summary = Summary::of(&results);
        Report {
            version: VERSION.to_string(),
            seed,
            corpus_digest,
            results,
            summary,
        }
    }
}

/// Hex SHA-256 of the corpus text.
pub fn corpus_digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn emit_report(report: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(report).expect("report serializes");
            out.push(b'\n');
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "feitlab {}  seed {}  corpus {}",
                report.version,
                report.seed,
                &report.corpus_digest[..report.corpus_digest.len().min(16)]
            );
            let _ = writeln!(out, "group\tcheck\tp\tchar\tdegree\tfeit\tstatus\twitness");
            for r in &report.results {
                let status = match (r.hypothesis_met, r.holds) {
                    (true, true) => "pass",
                    (true, false) => "FAIL",
                    (false, true) => "n/a:holds",
                    (false, false) => "n/a:fails",
                };
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.group,
                    r.check.as_str(),
                    opt(r.p),
                    opt(r.char_index),
                    opt(r.degree),
                    opt(r.feit),
                    status,
                    r.witness.as_deref().unwrap_or("-")
                );
            }
            let s = report.summary;
            let _ = writeln!(
                out,
                "pass {}  fail {}  hypothesis not met {}",
                s.pass, s.fail, s.hypothesis_violated
            );
            out.into_bytes()
        }
    }
}
