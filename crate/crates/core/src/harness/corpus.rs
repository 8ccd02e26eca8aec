use std::collections::HashSet;

use serde::Serialize;

use super::HarnessError;
use crate::permgroup::{FinGroup, Permutation};

/// The corpus shipped with the crate.
pub const BUNDLED_CORPUS: &str = include_str!("../../data/corpus.txt");

/// One `group … end` block of a corpus file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub name: String,
    pub degree: usize,
    /// Generators in canonical 1-based cycle notation.
    pub generators: Vec<String>,
    pub tags: Vec<String>,
}

impl CorpusEntry {
    pub fn permutations(&self) -> Vec<Permutation> {
        self.generators
            .iter()
            .map(|g| Permutation::parse_cycles(g, self.degree).expect("validated at parse time"))
            .collect()
    }

    pub fn group(&self, cap: usize) -> Result<FinGroup, HarnessError> {
        FinGroup::closure(self.degree, &self.permutations(), cap).map_err(|source| {
            HarnessError::Group {
                group: self.name.clone(),
                source,
            }
        })
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }
}

struct Partial {
    name: String,
    line: usize,
    degree: Option<usize>,
    generators: Vec<String>,
    tags: Vec<String>,
}

/// Parses corpus text. Blank lines and `#` comments are ignored.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, HarnessError> {
    let mut entries = Vec::new();
    let mut names = HashSet::new();
    let mut current: Option<Partial> = None;
    let perr = |line: usize, message: String| HarnessError::Parse { line, message };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = match content.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (content, ""),
        };
        match (keyword, current.as_mut()) {
            ("group", None) => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(perr(line, format!("bad group name {rest:?}")));
                }
                current = Some(Partial {
                    name: rest.to_string(),
                    line,
                    degree: None,
                    generators: Vec::new(),
                    tags: Vec::new(),
                });
            }
            ("group", Some(_)) => return Err(perr(line, "missing 'end' before 'group'".into())),
            ("degree", Some(p)) => {
                if p.degree.is_some() {
                    return Err(perr(line, "duplicate 'degree'".into()));
                }
                let d: usize = rest
                    .parse()
                    .ok()
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| perr(line, format!("bad degree {rest:?}")))?;
                p.degree = Some(d);
            }
            ("tag", Some(p)) => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(perr(line, format!("bad tag {rest:?}")));
                }
                p.tags.push(rest.to_string());
            }
            ("gen", Some(p)) => {
                let degree = p
                    .degree
                    .ok_or_else(|| perr(line, "'gen' before 'degree'".into()))?;
                let perm = Permutation::parse_cycles(rest, degree)
                    .map_err(|e| perr(line, e.to_string()))?;
                p.generators.push(perm.to_string());
            }
            ("end", Some(_)) => {
                let p = current.take().expect("inside a block");
                let degree = p
                    .degree
                    .ok_or_else(|| perr(line, format!("group {} has no degree", p.name)))?;
                if p.generators.is_empty() {
                    return Err(perr(line, format!("group {} has no generators", p.name)));
                }
                if !names.insert(p.name.clone()) {
                    return Err(HarnessError::DuplicateName(p.name));
                }
                entries.push(CorpusEntry {
                    name: p.name,
                    degree,
                    generators: p.generators,
                    tags: p.tags,
                });
            }
            (kw, None) => return Err(perr(line, format!("{kw:?} outside a group block"))),
            (kw, Some(_)) => return Err(perr(line, format!("unknown keyword {kw:?}"))),
        }
    }
    if let Some(p) = current {
        return Err(perr(p.line, format!("group {} is missing 'end'", p.name)));
    }
    Ok(entries)
}

/// Canonical corpus text for `entries`.
pub fn render_corpus(entries: &[CorpusEntry]) -> String {
    let mut out = String::new();
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("group {}\ndegree {}\n", e.name, e.degree));
        for t in &e.tags {
            out.push_str(&format!("tag {t}\n"));
        }
        for g in &e.generators {
            out.push_str(&format!("gen {g}\n"));
        }
        out.push_str("end\n");
    }
    out
}
