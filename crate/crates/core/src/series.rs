//! Factorizations of truncated series `1 + X^r P(X)` and the series-level
//! k-torsion derivation.

use num_bigint::BigUint;

use crate::derivation::engine::{Render, Rounds, SeriesRender};
use crate::derivation::{DerivationLog, LogBuilder, Subgroup};
use crate::error::{Error, Result};
use crate::ring::{RingElem, TruncatedPoly};
use crate::witt::SeriesUnit;

/// Splits `f = 1 + X^r P` as `(1 + X^r P(0)) (1 + X^{r+1} Q)` in `R_t`.
/// Returns `P(0)` and `Q`, with `deg Q < t − r`.
pub fn lemma3_factor(f: &TruncatedPoly, r: usize) -> Result<(RingElem, TruncatedPoly)> {
    let t = f.t();
    if r == 0 {
        return Err(Error::BadShape("r must be positive".into()));
    }
    if r > t {
        return Err(Error::TruncationTooSmall { r, t });
    }
    if !f.coeff(0).is_one() || (1..r).any(|i| !f.coeff(i).is_zero()) {
        return Err(Error::BadShape(format!("{f} is not of the form 1 + X^{r} P(X)")));
    }
    let base = f.base().clone();
    let p0 = f.coeff(r);

    // (1 + X^r P0)^{-1} = Σ_j (−P0 X^r)^j
    let step = TruncatedPoly::one_plus_monomial(&-&p0, r, t).sub(&TruncatedPoly::one(&base, t));
    let mut inv = TruncatedPoly::one(&base, t);
    let mut term = TruncatedPoly::one(&base, t);
    for _ in 0..t / r {
        term = term.mul(&step);
        inv = inv.add(&term);
    }
    let tail = inv.mul(f);
    if (1..=r).any(|i| !tail.coeff(i).is_zero()) {
        return Err(Error::Internal(format!("tail of {f} has low-order terms")));
    }
    let q_coeffs: Vec<RingElem> = (r + 1..=t).map(|i| tail.coeff(i)).collect();
    let q = TruncatedPoly::from_coeffs(&base, t, &q_coeffs)?;
    if q.degree().is_some_and(|d| d + r >= t) {
        return Err(Error::Internal(format!("deg Q too large for r = {r}, t = {t}")));
    }
    let head = TruncatedPoly::one_plus_monomial(&p0, r, t);
    if head.mul(&TruncatedPoly::one(&base, t).add(&q.shift(r + 1))) != *f {
        return Err(Error::Internal(format!("factorization of {f} does not multiply back")));
    }
    Ok((p0, q))
}

/// The unique `a_1..a_t` with `f = Π (1 + a_i X^i)` in `R_t`.
pub fn canonical_product(f: &SeriesUnit) -> Vec<RingElem> {
    let base = f.base().clone();
    let t = f.t();
    let mut residual = f.poly().clone();
    let mut out = Vec::with_capacity(t);
    for i in 1..=t {
        let a = residual.coeff(i);
        let factor = TruncatedPoly::one_plus_monomial(&a, i, t);
        residual = residual.mul(&factor.trunc_inv().expect("1 + aX^i is a unit"));
        out.push(a);
    }
    let product = out
        .iter()
        .enumerate()
        .fold(TruncatedPoly::one(&base, t), |acc, (i, a)| {
            acc.mul(&TruncatedPoly::one_plus_monomial(a, i + 1, t))
        });
    assert_eq!(&product, f.poly(), "canonical product does not multiply back");
    out
}

/// An assumed congruence `[f^k] ≡ 1 (mod T)`. With a trivial subgroup the
/// assumption is checked; otherwise it is carried into the log unexamined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisToken {
    pub label: String,
    pub subgroup: Subgroup,
}

impl HypothesisToken {
    pub fn new(label: &str, subgroup: Subgroup) -> Self {
        HypothesisToken {
            label: label.to_string(),
            subgroup,
        }
    }
}

fn series_hypothesis(f: &TruncatedPoly, k: u64) -> String {
    crate::derivation::cong_stmt(&format!("{}^{k}", SeriesRender.elem(f)), "1")
}

/// `k` as a unit of `base`, and its inverse.
pub(crate) fn unit_k(base: &crate::ring::RingDescriptor, k: u64) -> Result<RingElem> {
    if k == 0 {
        return Err(Error::NotAUnit("k = 0".into()));
    }
    RingElem::from_int(base, k)
        .inv()
        .map_err(|_| Error::NotAUnit(format!("k = {k} is not a unit of {base}")))
}

/// One round at level `r`: from `[f^k] ≡ 1 (mod T)` derive
/// `[f] ≡ [1 + X^{r+1} Q] (mod T)`. Returns `Q` and the log.
pub fn lemma4_step(
    f: &TruncatedPoly,
    r: usize,
    k: u64,
    hyp: &HypothesisToken,
) -> Result<(TruncatedPoly, DerivationLog)> {
    let k_inv = unit_k(f.base(), k)?;
    lemma3_factor(f, r)?;
    if hyp.subgroup == Subgroup::Trivial && !f.pow(&BigUint::from(k)).is_one() {
        return Err(Error::PreconditionFailed(format!("({f})^{k} is not 1")));
    }
    let mut builder = LogBuilder::series(f.base(), f.t(), k, hyp.subgroup, series_hypothesis(f, k));
    let h = builder.hypothesis(&hyp.label);
    let mut rounds = Rounds {
        builder: &mut builder,
        render: &SeriesRender,
        k,
        k_inv,
    };
    let (next, _) = rounds.round(f, r, h)?;
    let coeffs: Vec<RingElem> = (r + 1..=f.t()).map(|i| next.coeff(i)).collect();
    let q = TruncatedPoly::from_coeffs(f.base(), f.t(), &coeffs)?;
    Ok((q, builder.finish()))
}

/// For `f` with `f^k = 1` exactly in `R_t` and `k` a unit, derives `f = 1`
/// by rounds `r = 1..t`.
pub fn trivialize_k_torsion(f: &SeriesUnit, k: u64) -> Result<DerivationLog> {
    let poly = f.poly();
    let k_inv = unit_k(f.base(), k)?;
    if !poly.pow(&BigUint::from(k)).is_one() {
        return Err(Error::PreconditionFailed(format!(
            "({poly})^{k} is not 1 in R_{}",
            f.t()
        )));
    }
    let mut builder = LogBuilder::series(f.base(), f.t(), k, Subgroup::Trivial, series_hypothesis(poly, k));
    let h = builder.hypothesis("H");
    let mut rounds = Rounds {
        builder: &mut builder,
        render: &SeriesRender,
        k,
        k_inv,
    };
    let (last, _) = rounds.run(poly, 1..=f.t(), h)?;
    if !last.is_one() {
        return Err(Error::Internal(format!("rounds ended at {last}, not 1")));
    }
    builder.exact(poly.to_string(), "1".into())?;
    Ok(builder.finish())
}
