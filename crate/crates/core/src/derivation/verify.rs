use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use super::{DerivationLog, Step, Subgroup, LOG_SCHEMA};
use crate::expr::{Env, Value};
use crate::linalg::{self, Mat};
use crate::ring::{Repr, RingDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RejectReason {
    IdentityFails,
    BadCitation,
    UnknownRule,
    UnknownAxiom,
    MalformedStatement,
    RuleMismatch,
    HypothesisMismatch,
    ConclusionMismatch,
    BadContext,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RejectReason::IdentityFails => "identity fails",
            RejectReason::BadCitation => "bad citation",
            RejectReason::UnknownRule => "unknown rule",
            RejectReason::UnknownAxiom => "unknown axiom",
            RejectReason::MalformedStatement => "malformed statement",
            RejectReason::RuleMismatch => "rule mismatch",
            RejectReason::HypothesisMismatch => "hypothesis mismatch",
            RejectReason::ConclusionMismatch => "conclusion mismatch",
            RejectReason::BadContext => "bad context",
        })
    }
}

/// Why a log was rejected. `step` is `None` for context and conclusion
/// failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub step: Option<usize>,
    pub reason: RejectReason,
    pub detail: String,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(i) => write!(f, "step {i}: {}: {}", self.reason, self.detail),
            None => write!(f, "{}: {}", self.reason, self.detail),
        }
    }
}

fn reject(step: Option<usize>, reason: RejectReason, detail: impl Into<String>) -> Rejection {
    Rejection {
        step,
        reason,
        detail: detail.into(),
    }
}

#[derive(Clone)]
enum Fact {
    Equal(Value, Value),
    Cong(Value, Value),
}

struct Scope {
    base: RingDescriptor,
    ring: RingDescriptor,
    size: Option<usize>,
    matrices: BTreeMap<char, Mat<Repr>>,
    k: Repr,
}

impl Scope {
    fn from_log(log: &DerivationLog) -> Result<Self, Rejection> {
        let bad = |d: String| reject(None, RejectReason::BadContext, d);
        if log.schema != LOG_SCHEMA {
            return Err(bad(format!("unsupported schema {}", log.schema)));
        }
        let ctx = &log.context;
        let base: RingDescriptor = ctx.ring.parse().map_err(|e| bad(format!("{e}")))?;
        if ctx.k == 0 {
            return Err(bad("k must be positive".into()));
        }
        let k = base.from_int(&ctx.k.into());
        let (ring, size) = match (ctx.size, ctx.t) {
            (Some(n), None) => {
                let r = RingDescriptor::polynomial(&base, &["X"]).map_err(|e| bad(format!("{e}")))?;
                (r, Some(n))
            }
            (None, Some(t)) => {
                if !ctx.matrices.is_empty() {
                    return Err(bad("series logs take no matrices".into()));
                }
                (RingDescriptor::truncated(&base, t), None)
            }
            _ => return Err(bad("exactly one of size and t must be given".into())),
        };
        let mut matrices = BTreeMap::new();
        for (name, text) in &ctx.matrices {
            let mut chars = name.chars();
            let c = match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_uppercase() && c != 'I' && c != 'X' => c,
                _ => return Err(bad(format!("bad matrix name {name:?}"))),
            };
            let m = match Env::scalar(&ring).eval_str(text) {
                Ok(Value::Matrix(m)) => m,
                _ => return Err(bad(format!("matrix {name} does not parse"))),
            };
            if Some(m.len()) != size || !linalg::is_square(&m) {
                return Err(bad(format!("matrix {name} is not {}x{0}", size.unwrap_or(0))));
            }
            matrices.insert(c, m);
        }
        Ok(Scope {
            base,
            ring,
            size,
            matrices,
            k,
        })
    }

    fn eval(&self, s: &str) -> Option<Value> {
        let env = Env {
            ring: &self.ring,
            size: self.size,
            matrices: self.matrices.clone(),
        };
        env.eval_normalized(s).ok()
    }

    fn mul(&self, a: &Value, b: &Value) -> Option<Value> {
        let r = &self.ring;
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Some(Value::Scalar(r.mul(x, y))),
            (Value::Matrix(x), Value::Matrix(y)) if x.len() == y.len() => Some(Value::Matrix(linalg::mul(r, x, y))),
            _ => None,
        }
    }

    fn pow(&self, a: &Value, e: &BigUint) -> Value {
        match a {
            Value::Scalar(x) => Value::Scalar(self.ring.pow(x, e)),
            Value::Matrix(m) => Value::Matrix(linalg::pow(&self.ring, m, e)),
        }
    }

    /// Image under the endomorphism `X -> c X`.
    fn scale(&self, a: &Value, c: &Repr) -> Value {
        let s = |x: &Repr| self.ring.scale_var(x, "X", c).expect("scope ring has X");
        match a {
            Value::Scalar(x) => Value::Scalar(s(x)),
            Value::Matrix(m) => Value::Matrix(m.iter().map(|row| row.iter().map(s).collect()).collect()),
        }
    }
}

fn normalize(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Splits `"A ≡ B (mod T)"` into its two sides.
fn split_cong(stmt: &str) -> Option<(&str, &str)> {
    let body = stmt.trim().strip_suffix("(mod T)")?;
    let mut parts = body.split('≡');
    let (a, b) = (parts.next()?, parts.next()?);
    if parts.next().is_some() {
        return None;
    }
    Some((a.trim(), b.trim()))
}

/// Replays a log step by step. Each EXACT step is evaluated on both sides;
/// each CONG step must follow from the facts it cites by its rule; AXIOM
/// steps may only scale `X` by `k` or `1/k`.
pub fn verify_derivation_log(log: &DerivationLog) -> Result<(), Rejection> {
    use RejectReason::*;
    let scope = Scope::from_log(log)?;
    let mut facts: Vec<Fact> = Vec::with_capacity(log.steps.len());

    for (i, step) in log.steps.iter().enumerate() {
        let at = Some(i);
        let eval = |s: &str| {
            scope
                .eval(s)
                .ok_or_else(|| reject(at, MalformedStatement, format!("cannot evaluate {s:?}")))
        };
        let sides = |stmt: &str| -> Result<(Value, Value), Rejection> {
            let (a, b) = split_cong(stmt).ok_or_else(|| reject(at, MalformedStatement, format!("{stmt:?}")))?;
            Ok((eval(a)?, eval(b)?))
        };
        let cited = |cites: &[usize], n: usize| -> Result<Vec<Fact>, Rejection> {
            if cites.len() != n {
                return Err(reject(
                    at,
                    BadCitation,
                    format!("expected {n} citations, got {}", cites.len()),
                ));
            }
            cites
                .iter()
                .map(|&c| {
                    if c >= i {
                        Err(reject(at, BadCitation, format!("step {c} does not precede step {i}")))
                    } else {
                        Ok(facts[c].clone())
                    }
                })
                .collect()
        };
        let cong = |f: &Fact| -> Result<(Value, Value), Rejection> {
            match f {
                Fact::Cong(a, b) => Ok((a.clone(), b.clone())),
                Fact::Equal(..) => Err(reject(
                    at,
                    BadCitation,
                    "cited an exact identity where a congruence is needed",
                )),
            }
        };
        let mismatch = |rule: &str| reject(at, RuleMismatch, format!("statement does not follow by {rule}"));

        let fact = match step {
            Step::Exact { lhs, rhs } => {
                let (l, r) = (eval(lhs)?, eval(rhs)?);
                if l != r {
                    return Err(reject(at, IdentityFails, format!("{lhs} = {rhs}")));
                }
                Fact::Equal(l, r)
            }
            Step::Hypothesis { stmt, .. } => {
                if normalize(stmt) != normalize(&log.context.hypothesis) {
                    return Err(reject(at, HypothesisMismatch, format!("{stmt:?}")));
                }
                let (a, b) = sides(stmt)?;
                if log.context.subgroup == Subgroup::Trivial && a != b {
                    return Err(reject(
                        at,
                        IdentityFails,
                        "hypothesis is false for the trivial subgroup",
                    ));
                }
                Fact::Cong(a, b)
            }
            Step::Cong {
                stmt,
                rule,
                cites,
                param,
            } => {
                let (a, b) = sides(stmt)?;
                let ok = match rule.as_str() {
                    "refl" => {
                        cited(cites, 0)?;
                        a == b
                    }
                    "exact" => match &cited(cites, 1)?[0] {
                        Fact::Equal(l, r) => (a == *l && b == *r) || (a == *r && b == *l),
                        Fact::Cong(..) => return Err(reject(at, BadCitation, "exact rule must cite an EXACT step")),
                    },
                    "symm" => {
                        let (x, y) = cong(&cited(cites, 1)?[0])?;
                        a == y && b == x
                    }
                    "trans" => {
                        let fs = cited(cites, 2)?;
                        let ((x, y), (y2, z)) = (cong(&fs[0])?, cong(&fs[1])?);
                        y == y2 && a == x && b == z
                    }
                    "mul" => {
                        let fs = cited(cites, 2)?;
                        let ((x, y), (z, w)) = (cong(&fs[0])?, cong(&fs[1])?);
                        scope.mul(&x, &z).as_ref() == Some(&a) && scope.mul(&y, &w).as_ref() == Some(&b)
                    }
                    "pow" => {
                        let (x, y) = cong(&cited(cites, 1)?[0])?;
                        let e: BigUint = param
                            .as_deref()
                            .and_then(|p| p.trim().parse().ok())
                            .ok_or_else(|| reject(at, MalformedStatement, "pow needs a nonnegative integer param"))?;
                        a == scope.pow(&x, &e) && b == scope.pow(&y, &e)
                    }
                    other => return Err(reject(at, UnknownRule, other.to_string())),
                };
                if !ok {
                    return Err(mismatch(rule));
                }
                Fact::Cong(a, b)
            }
            Step::Axiom {
                name,
                stmt,
                cites,
                param,
            } => {
                if name != "endo_scale" {
                    return Err(reject(at, UnknownAxiom, name.clone()));
                }
                let (a, b) = sides(stmt)?;
                let (x, y) = cong(&cited(cites, 1)?[0])?;
                let c = param
                    .as_deref()
                    .and_then(|p| Env::scalar(&scope.base).eval_str(p).ok())
                    .and_then(|v| match v {
                        Value::Scalar(c) => Some(c),
                        Value::Matrix(_) => None,
                    })
                    .ok_or_else(|| reject(at, MalformedStatement, "endo_scale needs a scalar param"))?;
                let b_ring = &scope.base;
                if c != scope.k && !b_ring.is_one(&b_ring.mul(&c, &scope.k)) {
                    return Err(reject(at, RuleMismatch, "scale factor is neither k nor 1/k"));
                }
                if a != scope.scale(&x, &c) || b != scope.scale(&y, &c) {
                    return Err(mismatch("endo_scale"));
                }
                Fact::Cong(a, b)
            }
        };
        facts.push(fact);
    }

    match log.steps.last() {
        Some(last) if normalize(&last.statement()) == normalize(&log.conclusion) => Ok(()),
        Some(_) => Err(reject(None, ConclusionMismatch, "conclusion is not the last statement")),
        None => Err(reject(None, ConclusionMismatch, "log has no steps")),
    }
}
