//! JSON-lines corpora of knots with expected invariant values.
//!
//! One entry per line:
//!
//! ```json
//! {"name": "12n750", "braid": "aaabAbaaabAb", "expect": {"signature": -4, "alex_degree": 4, "g4top": 2}}
//! {"name": "torus", "matrix": [[0, 1], [0, -1]], "expect": {"g4top": 0}}
//! ```

use std::fmt;

use rayon::prelude::*;
use serde::Deserialize;
use serde_json::Value;

use crate::bounds::{report, InvariantReport};
use crate::braid::{canonical_seifert_matrix, parse_braid};
use crate::error::{Error, Result};
use crate::intmat::IntMatrix;
use crate::json::matrix_from_value;
use crate::seifert::SeifertMatrix;

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    pub signature: Option<i64>,
    pub alex_degree: Option<u64>,
    pub g4top: Option<u64>,
    pub seifert_genus: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusInput {
    Braid { word: String, strands: Option<usize> },
    Matrix(IntMatrix),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub input: CorpusInput,
    pub expect: Expectations,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    braid: Option<String>,
    strands: Option<usize>,
    matrix: Option<Value>,
    #[serde(default)]
    expect: Expectations,
}

impl CorpusEntry {
    pub fn parse(line: &str) -> Result<CorpusEntry> {
        let raw: RawEntry = serde_json::from_str(line)?;
        let input = match (raw.braid, raw.matrix) {
            (Some(word), None) => CorpusInput::Braid { word, strands: raw.strands },
            (None, Some(m)) => {
                if raw.strands.is_some() {
                    return Err(Error::Json("\"strands\" only applies to braid entries".into()));
                }
                CorpusInput::Matrix(matrix_from_value(&m)?)
            }
            _ => return Err(Error::Json("exactly one of \"braid\" or \"matrix\" is required".into())),
        };
        Ok(CorpusEntry { name: raw.name, input, expect: raw.expect })
    }

    /// The Seifert matrix the entry describes; for braids, that of the
    /// canonical surface.
    pub fn seifert_matrix(&self) -> Result<SeifertMatrix> {
        match &self.input {
            CorpusInput::Braid { word, strands } => {
                Ok(canonical_seifert_matrix(&parse_braid(word, *strands)?)?.seifert_matrix)
            }
            CorpusInput::Matrix(m) => SeifertMatrix::new(m.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub field: &'static str,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug)]
pub struct CorpusRow {
    /// 1-based line number in the corpus file.
    pub line: usize,
    pub name: String,
    pub report: Option<InvariantReport>,
    pub checks: Vec<Check>,
    pub error: Option<String>,
}

impl CorpusRow {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for CorpusRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {:>4}  {}", self.line, self.name)?;
        if let Some(e) = &self.error {
            return write!(f, "  error: {e}");
        }
        for c in &self.checks {
            let mark = if c.passed() { "" } else { " (!)" };
            write!(f, "  {}={} expected {}{mark}", c.field, c.actual, c.expected)?;
        }
        Ok(())
    }
}

fn evaluate_entry(line: usize, entry: &CorpusEntry) -> CorpusRow {
    let mut row = CorpusRow { line, name: entry.name.clone(), report: None, checks: Vec::new(), error: None };
    let r = match entry.seifert_matrix().and_then(|m| report(&m, false)) {
        Ok(r) => r,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    let e = &entry.expect;
    let mut check = |field: &'static str, expected: Option<String>, actual: String| {
        if let Some(expected) = expected {
            row.checks.push(Check { field, expected, actual });
        }
    };
    check("signature", e.signature.map(|x| x.to_string()), r.signature.to_string());
    check("alex_degree", e.alex_degree.map(|x| x.to_string()), r.alexander_degree.to_string());
    check(
        "g4top",
        e.g4top.map(|x| x.to_string()),
        r.bounds.determined_g4top.map_or_else(|| "undetermined".to_string(), |x| x.to_string()),
    );
    check("seifert_genus", e.seifert_genus.map(|x| x.to_string()), r.bounds.seifert_genus.to_string());
    row.report = Some(r);
    row
}

/// Evaluates every non-blank line; malformed lines become failing rows.
/// Entries are processed in parallel and returned in input order.
pub fn evaluate_corpus(text: &str) -> Vec<CorpusRow> {
    let lines: Vec<(usize, &str)> =
        text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()).map(|(i, l)| (i + 1, l)).collect();
    lines
        .par_iter()
        .map(|&(line, text)| match CorpusEntry::parse(text) {
            Ok(entry) => evaluate_entry(line, &entry),
            Err(e) => CorpusRow {
                line,
                name: String::from("<malformed>"),
                report: None,
                checks: Vec::new(),
                error: Some(e.to_string()),
            },
        })
        .collect()
}
