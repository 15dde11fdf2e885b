//! Output records shared by the command-line front end and the examples.
//!
//! JSON output is newline-delimited with keys in a fixed order:
//! `kind, msg, frobenius, genus, gaps, elements`. For ℕ the Frobenius number is
//! reported as `-1`.

use std::fmt;

use serde::Serialize;

use crate::apery::{semigroup_from_theta, AperyVector};
use crate::error::Result;
use crate::partition::SolutionSet;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordKind {
    Semigroup,
    SolutionSet,
    AperyVector,
}

/// One emitted result.
///
/// `msg`, `frobenius`, `genus` and `gaps` always describe a semigroup: the
/// semigroup itself, the complement of a solution set, or the semigroup that
/// an Apéry vector determines. `elements` holds the solution set or the
/// vector coordinates and is empty for plain semigroups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub kind: RecordKind,
    pub msg: Vec<u32>,
    pub frobenius: i64,
    pub genus: u32,
    pub gaps: Vec<u32>,
    pub elements: Vec<u32>,
}

impl OutputRecord {
    fn describe(kind: RecordKind, s: &NumericalSemigroup, elements: Vec<u32>) -> Self {
        OutputRecord {
            kind,
            msg: s.msg().to_vec(),
            frobenius: if s.is_full() { -1 } else { s.frobenius() as i64 },
            genus: s.genus(),
            gaps: s.gaps(),
            elements,
        }
    }

    pub fn semigroup(s: &NumericalSemigroup) -> Self {
        Self::describe(RecordKind::Semigroup, s, Vec::new())
    }

    pub fn solution(k: &SolutionSet) -> Self {
        Self::describe(RecordKind::SolutionSet, &k.complement(), k.elements().to_vec())
    }

    pub fn apery(v: &AperyVector) -> Result<Self> {
        let s = semigroup_from_theta(v)?;
        Ok(Self::describe(RecordKind::AperyVector, &s, v.coords().to_vec()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

fn list(f: &mut fmt::Formatter<'_>, open: &str, xs: &[u32], close: &str) -> fmt::Result {
    write!(f, "{open}")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "{close}")
}

/// Text form, one record per line:
/// `<4,6,9> | F=11 g=6 gaps={1,2,3,5,7,11}` for semigroups; solution sets and
/// Apéry vectors prefix the same fields with `{…} |` or `(…) |`.
impl fmt::Display for OutputRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RecordKind::Semigroup => {}
            RecordKind::SolutionSet => {
                list(f, "{", &self.elements, "}")?;
                write!(f, " | ")?;
            }
            RecordKind::AperyVector => {
                list(f, "(", &self.elements, ")")?;
                write!(f, " | ")?;
            }
        }
        list(f, "<", &self.msg, ">")?;
        write!(f, " | F={} g={} gaps=", self.frobenius, self.genus)?;
        list(f, "{", &self.gaps, "}")
    }
}
