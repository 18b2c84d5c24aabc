use std::collections::BTreeMap;

use super::{cong_stmt, DerivationLog, LogContext, Step, Subgroup, LOG_SCHEMA};
use crate::error::{Error, Result};
use crate::expr::{Env, Value};
use crate::linalg::Mat;
use crate::ring::{Repr, RingDescriptor};

/// Accumulates steps and replays every EXACT step before accepting it.
pub(crate) struct LogBuilder {
    context: LogContext,
    steps: Vec<Step>,
    eval_ring: RingDescriptor,
    matrices: BTreeMap<char, Mat<Repr>>,
}

impl LogBuilder {
    pub(crate) fn series(base: &RingDescriptor, t: usize, k: u64, subgroup: Subgroup, hypothesis: String) -> Self {
        LogBuilder {
            context: LogContext {
                ring: base.to_string(),
                k,
                size: None,
                t: Some(t),
                subgroup,
                hypothesis,
                matrices: BTreeMap::new(),
            },
            steps: Vec::new(),
            eval_ring: RingDescriptor::truncated(base, t),
            matrices: BTreeMap::new(),
        }
    }

    pub(crate) fn matrix(
        base: &RingDescriptor,
        poly_ring: &RingDescriptor,
        k: u64,
        hypothesis: String,
        named: &[(char, Mat<Repr>, String)],
    ) -> Self {
        let size = named.first().map_or(0, |(_, m, _)| m.len());
        LogBuilder {
            context: LogContext {
                ring: base.to_string(),
                k,
                size: Some(size),
                t: None,
                subgroup: Subgroup::Opaque,
                hypothesis,
                matrices: named.iter().map(|(c, _, text)| (c.to_string(), text.clone())).collect(),
            },
            steps: Vec::new(),
            eval_ring: poly_ring.clone(),
            matrices: named.iter().map(|(c, m, _)| (*c, m.clone())).collect(),
        }
    }

    fn eval(&self, s: &str) -> Result<Value> {
        let env = Env {
            ring: &self.eval_ring,
            size: self.context.size,
            matrices: self.matrices.clone(),
        };
        env.eval_normalized(s)
    }

    fn push(&mut self, step: Step) -> usize {
        self.steps.push(step);
        self.steps.len() - 1
    }

    pub(crate) fn exact(&mut self, lhs: String, rhs: String) -> Result<usize> {
        let (l, r) = (self.eval(&lhs)?, self.eval(&rhs)?);
        if l != r {
            return Err(Error::Internal(format!("emitted identity fails: {lhs} = {rhs}")));
        }
        Ok(self.push(Step::Exact { lhs, rhs }))
    }

    pub(crate) fn hypothesis(&mut self, label: &str) -> usize {
        let stmt = self.context.hypothesis.clone();
        self.push(Step::Hypothesis {
            label: label.to_string(),
            stmt,
        })
    }

    pub(crate) fn cong(&mut self, lhs: &str, rhs: &str, rule: &str, cites: &[usize], param: Option<String>) -> usize {
        self.push(Step::Cong {
            stmt: cong_stmt(lhs, rhs),
            rule: rule.to_string(),
            cites: cites.to_vec(),
            param,
        })
    }

    pub(crate) fn axiom_literal(&mut self, stmt: String, cites: &[usize], param: String) -> usize {
        self.push(Step::Axiom {
            name: "endo_scale".to_string(),
            stmt,
            cites: cites.to_vec(),
            param: Some(param),
        })
    }

    pub(crate) fn axiom(&mut self, lhs: &str, rhs: &str, cites: &[usize], param: String) -> usize {
        self.axiom_literal(cong_stmt(lhs, rhs), cites, param)
    }

    pub(crate) fn finish(self) -> DerivationLog {
        let conclusion = self.steps.last().map(Step::statement).unwrap_or_default();
        DerivationLog {
            schema: LOG_SCHEMA,
            context: self.context,
            steps: self.steps,
            conclusion,
        }
    }
}

pub(crate) fn mat_literal(ring: &RingDescriptor, m: &Mat<Repr>) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|x| ring.render_bare(x)).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}
