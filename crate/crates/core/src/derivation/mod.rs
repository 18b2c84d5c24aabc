//! Proof logs: ordered steps of exact identities and congruences modulo an
//! opaque subgroup `T`, plus an independent verifier.

mod builder;
pub(crate) mod engine;
mod verify;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub(crate) use builder::{mat_literal, LogBuilder};
pub use verify::{verify_derivation_log, RejectReason, Rejection};

pub const LOG_SCHEMA: u32 = 1;

/// Whether `T` is the trivial subgroup (congruence is equality and the
/// hypothesis is checked) or opaque (the hypothesis is taken as given).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subgroup {
    Trivial,
    Opaque,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogContext {
    pub ring: String,
    pub k: u64,
    /// Matrix size; expressions then live in `M_size(R[X])`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    /// Truncation order; expressions then live in `R[X]/(X^{t+1})`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub subgroup: Subgroup,
    pub hypothesis: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Step {
    #[serde(rename = "EXACT")]
    Exact { lhs: String, rhs: String },
    #[serde(rename = "HYPOTHESIS")]
    Hypothesis { label: String, stmt: String },
    #[serde(rename = "CONG")]
    Cong {
        stmt: String,
        rule: String,
        cites: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        param: Option<String>,
    },
    #[serde(rename = "AXIOM")]
    Axiom {
        name: String,
        stmt: String,
        cites: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        param: Option<String>,
    },
}

impl Step {
    pub fn statement(&self) -> String {
        match self {
            Step::Exact { lhs, rhs } => format!("{lhs} = {rhs}"),
            Step::Hypothesis { stmt, .. } | Step::Cong { stmt, .. } | Step::Axiom { stmt, .. } => stmt.clone(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Step::Exact { .. } => "EXACT",
            Step::Hypothesis { .. } => "HYPOTHESIS",
            Step::Cong { .. } => "CONG",
            Step::Axiom { .. } => "AXIOM",
        }
    }

    pub fn cites(&self) -> &[usize] {
        match self {
            Step::Cong { cites, .. } | Step::Axiom { cites, .. } => cites,
            _ => &[],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationLog {
    pub schema: u32,
    pub context: LogContext,
    pub steps: Vec<Step>,
    pub conclusion: String,
}

impl DerivationLog {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("log serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn hypothesis_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, Step::Hypothesis { .. }))
            .count()
    }

    pub fn exact_count(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, Step::Exact { .. })).count()
    }
}

/// `"[lhs] ≡ [rhs] (mod T)"`, leaving a bare identity side unbracketed.
pub(crate) fn cong_stmt(lhs: &str, rhs: &str) -> String {
    fn side(s: &str) -> String {
        if s == "1" || s == "I" {
            s.to_string()
        } else {
            format!("[{}]", strip_group(s))
        }
    }
    format!("{} ≡ {} (mod T)", side(lhs), side(rhs))
}

/// `"(a + b)"` becomes `"a + b"` when the parentheses enclose everything.
fn strip_group(s: &str) -> &str {
    let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) else {
        return s;
    };
    let mut depth = 0i32;
    for c in inner.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return s;
        }
    }
    inner
}
