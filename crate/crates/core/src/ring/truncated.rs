use std::fmt;

use num_bigint::BigUint;

use super::descriptor::{RingDescriptor, RingKind};
use super::elem::RingElem;
use super::repr::Repr;
use crate::error::{Error, Result};

/// An element of `R_t = R[X]/(X^{t+1})`, stored as exactly `t + 1`
/// coefficients over the base ring `R`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedPoly {
    elem: RingElem,
}

impl TruncatedPoly {
    pub fn from_elem(elem: RingElem) -> Result<Self> {
        match elem.ring().kind() {
            RingKind::Truncated { .. } => Ok(TruncatedPoly { elem }),
            _ => Err(Error::InvalidRing(format!("{} is not a truncated ring", elem.ring()))),
        }
    }

    pub(crate) fn from_coeff_reprs(base: &RingDescriptor, t: usize, mut coeffs: Vec<Repr>) -> Self {
        coeffs.resize(t + 1, base.zero());
        coeffs.truncate(t + 1);
        let ring = RingDescriptor::truncated(base, t);
        TruncatedPoly {
            elem: RingElem::from_repr(ring, Repr::Dense(coeffs)),
        }
    }

    /// Builds `c_0 + c_1 X + ...`; missing coefficients are zero and those
    /// beyond degree `t` are dropped.
    pub fn from_coeffs(base: &RingDescriptor, t: usize, coeffs: &[RingElem]) -> Result<Self> {
        let mut reprs = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            if c.ring() != base {
                return Err(Error::MixedRings(c.ring().to_string(), base.to_string()));
            }
            reprs.push(c.repr().clone());
        }
        Ok(Self::from_coeff_reprs(base, t, reprs))
    }

    pub fn parse(base: &RingDescriptor, t: usize, s: &str) -> Result<Self> {
        let ring = RingDescriptor::truncated(base, t);
        Self::from_elem(RingElem::parse(&ring, s)?)
    }

    pub fn zero(base: &RingDescriptor, t: usize) -> Self {
        Self::from_coeff_reprs(base, t, vec![])
    }

    pub fn one(base: &RingDescriptor, t: usize) -> Self {
        Self::from_coeff_reprs(base, t, vec![base.one()])
    }

    /// `1 + c X^r`.
    pub fn one_plus_monomial(c: &RingElem, r: usize, t: usize) -> Self {
        let base = c.ring();
        let mut coeffs = vec![base.zero(); t + 1];
        coeffs[0] = base.one();
        if r <= t {
            coeffs[r] = base.add(&coeffs[r], c.repr());
        }
        Self::from_coeff_reprs(base, t, coeffs)
    }

    pub fn as_elem(&self) -> &RingElem {
        &self.elem
    }

    pub fn ring(&self) -> &RingDescriptor {
        self.elem.ring()
    }

    pub fn base(&self) -> &RingDescriptor {
        self.ring().base().expect("truncated ring has a base")
    }

    pub fn t(&self) -> usize {
        self.coeff_reprs().len() - 1
    }

    pub(crate) fn coeff_reprs(&self) -> &[Repr] {
        self.elem.repr().as_dense()
    }

    pub fn coeff(&self, i: usize) -> RingElem {
        let base = self.base().clone();
        match self.coeff_reprs().get(i) {
            Some(c) => RingElem::from_repr(base, c.clone()),
            None => RingElem::zero(&base),
        }
    }

    pub fn coeffs(&self) -> Vec<RingElem> {
        (0..=self.t()).map(|i| self.coeff(i)).collect()
    }

    /// Highest index with a nonzero coefficient, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        let base = self.base();
        self.coeff_reprs().iter().rposition(|c| !base.is_zero(c))
    }

    pub fn is_one(&self) -> bool {
        self.elem.is_one()
    }

    fn wrap(&self, repr: Repr) -> Self {
        TruncatedPoly {
            elem: RingElem::from_repr(self.ring().clone(), repr),
        }
    }

    fn check(&self, other: &TruncatedPoly) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(Error::MixedRings(self.ring().to_string(), other.ring().to_string()))
        }
    }

    pub fn checked_mul(&self, other: &TruncatedPoly) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul(other))
    }

    /// Product in `R_t`. Panics on mixed rings.
    pub fn mul(&self, other: &TruncatedPoly) -> Self {
        self.wrap(self.ring().mul(self.elem.repr(), other.elem.repr()))
    }

    pub fn add(&self, other: &TruncatedPoly) -> Self {
        self.wrap(self.ring().add(self.elem.repr(), other.elem.repr()))
    }

    pub fn sub(&self, other: &TruncatedPoly) -> Self {
        self.wrap(self.ring().sub(self.elem.repr(), other.elem.repr()))
    }

    pub fn neg(&self) -> Self {
        self.wrap(self.ring().neg(self.elem.repr()))
    }

    pub fn pow(&self, e: &BigUint) -> Self {
        self.wrap(self.ring().pow(self.elem.repr(), e))
    }

    /// Inverse in `R_t` by the truncated geometric series
    /// `c_0^{-1} Σ_{i≤t} (−c_0^{-1}(f − c_0))^i`.
    pub fn trunc_inv(&self) -> Result<Self> {
        self.ring()
            .inv(self.elem.repr())
            .map(|r| self.wrap(r))
            .map_err(|_| Error::NotAUnit(format!("constant term of {self} is not a unit")))
    }

    /// The endomorphism `X -> c X`: coefficient `c_i` becomes `c^i c_i`.
    pub fn scale_x(&self, c: &RingElem) -> Result<Self> {
        if c.ring() != self.base() {
            return Err(Error::MixedRings(c.ring().to_string(), self.base().to_string()));
        }
        let scaled = self
            .ring()
            .scale_var(self.elem.repr(), "X", c.repr())
            .expect("truncated ring has variable X");
        Ok(self.wrap(scaled))
    }

    /// Multiplies by `X^s`, discarding overflow past degree `t`.
    pub fn shift(&self, s: usize) -> Self {
        let base = self.base();
        let mut v = vec![base.zero(); s.min(self.t() + 1)];
        v.extend(self.coeff_reprs().iter().cloned());
        Self::from_coeff_reprs(base, self.t(), v)
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.elem.to_bare_string())
    }
}

impl fmt::Debug for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring())
    }
}
