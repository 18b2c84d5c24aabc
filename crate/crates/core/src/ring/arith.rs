//! Canonical-form arithmetic on [`Repr`] values, dispatched on the ring
//! descriptor. Every function here assumes its operands already belong to
//! `self`; ring agreement is checked one level up, in [`super::RingElem`].

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::descriptor::{RingDescriptor, RingKind};
use super::repr::{Monomial, Repr};
use crate::error::{Error, Result};

/// Geometric-series inversion gives up after this many terms when the ring
/// does not guarantee nilpotence.
const UNIT_SERIES_BOUND: usize = 64;

impl RingDescriptor {
    pub(crate) fn zero(&self) -> Repr {
        match self.kind() {
            RingKind::Integers | RingKind::ModularInteger(_) => Repr::Int(BigInt::zero()),
            RingKind::Rationals => Repr::Rat(BigRational::zero()),
            RingKind::PolynomialQuotient { .. } => Repr::Poly(BTreeMap::new()),
            RingKind::Truncated { base, t } => Repr::Dense(vec![base.zero(); t + 1]),
        }
    }

    pub(crate) fn one(&self) -> Repr {
        self.from_int(&BigInt::one())
    }

    #[allow(clippy::wrong_self_convention)]
    pub(crate) fn from_int(&self, n: &BigInt) -> Repr {
        match self.kind() {
            RingKind::Integers => Repr::Int(n.clone()),
            RingKind::ModularInteger(m) => Repr::Int(n.mod_floor(m)),
            RingKind::Rationals => Repr::Rat(BigRational::from_integer(n.clone())),
            RingKind::PolynomialQuotient { base, .. } | RingKind::Truncated { base, .. } => self.lift(base.from_int(n)),
        }
    }

    #[cfg(test)]
    #[allow(clippy::wrong_self_convention)]
    pub(crate) fn from_i64(&self, n: i64) -> Repr {
        self.from_int(&BigInt::from(n))
    }

    /// Embeds an element of the coefficient ring as a constant.
    pub(crate) fn lift(&self, c: Repr) -> Repr {
        match self.kind() {
            RingKind::PolynomialQuotient { base, vars, .. } => {
                let mut m = BTreeMap::new();
                if !base.is_zero(&c) {
                    m.insert(Monomial::one(vars.len()), c);
                }
                Repr::Poly(m)
            }
            RingKind::Truncated { base, t } => {
                let mut v = vec![base.zero(); t + 1];
                v[0] = c;
                Repr::Dense(v)
            }
            _ => panic!("lift called on a ring without a coefficient ring"),
        }
    }

    /// The coefficient-ring value of a constant element, `None` if `a`
    /// involves the ring's own variables.
    pub(crate) fn constant_value(&self, a: &Repr) -> Option<Repr> {
        match self.kind() {
            RingKind::PolynomialQuotient { base, vars, .. } => {
                let m = a.as_poly();
                match m.len() {
                    0 => Some(base.zero()),
                    1 => m.get(&Monomial::one(vars.len())).cloned(),
                    _ => None,
                }
            }
            RingKind::Truncated { base, .. } => {
                let v = a.as_dense();
                v[1..].iter().all(|c| base.is_zero(c)).then(|| v[0].clone())
            }
            _ => Some(a.clone()),
        }
    }

    pub(crate) fn is_zero(&self, a: &Repr) -> bool {
        match (self.kind(), a) {
            (RingKind::Truncated { base, .. }, Repr::Dense(v)) => v.iter().all(|c| base.is_zero(c)),
            (_, Repr::Int(v)) => v.is_zero(),
            (_, Repr::Rat(v)) => v.is_zero(),
            (_, Repr::Poly(m)) => m.is_empty(),
            (_, Repr::Dense(_)) => unreachable!("dense value outside a truncated ring"),
        }
    }

    pub(crate) fn is_one(&self, a: &Repr) -> bool {
        *a == self.one()
    }

    pub(crate) fn add(&self, a: &Repr, b: &Repr) -> Repr {
        match self.kind() {
            RingKind::Integers => Repr::Int(a.as_int() + b.as_int()),
            RingKind::ModularInteger(m) => Repr::Int((a.as_int() + b.as_int()).mod_floor(m)),
            RingKind::Rationals => Repr::Rat(a.as_rat() + b.as_rat()),
            RingKind::PolynomialQuotient { base, .. } => {
                let mut out = a.as_poly().clone();
                for (mono, c) in b.as_poly() {
                    accumulate(base, &mut out, mono.clone(), c);
                }
                Repr::Poly(out)
            }
            RingKind::Truncated { base, .. } => Repr::Dense(
                a.as_dense()
                    .iter()
                    .zip(b.as_dense())
                    .map(|(x, y)| base.add(x, y))
                    .collect(),
            ),
        }
    }

    pub(crate) fn neg(&self, a: &Repr) -> Repr {
        match self.kind() {
            RingKind::Integers => Repr::Int(-a.as_int()),
            RingKind::ModularInteger(m) => Repr::Int((-a.as_int()).mod_floor(m)),
            RingKind::Rationals => Repr::Rat(-a.as_rat()),
            RingKind::PolynomialQuotient { base, .. } => {
                Repr::Poly(a.as_poly().iter().map(|(k, c)| (k.clone(), base.neg(c))).collect())
            }
            RingKind::Truncated { base, .. } => Repr::Dense(a.as_dense().iter().map(|c| base.neg(c)).collect()),
        }
    }

    pub(crate) fn sub(&self, a: &Repr, b: &Repr) -> Repr {
        self.add(a, &self.neg(b))
    }

    pub(crate) fn mul(&self, a: &Repr, b: &Repr) -> Repr {
        match self.kind() {
            RingKind::Integers => Repr::Int(a.as_int() * b.as_int()),
            RingKind::ModularInteger(m) => Repr::Int((a.as_int() * b.as_int()).mod_floor(m)),
            RingKind::Rationals => Repr::Rat(a.as_rat() * b.as_rat()),
            RingKind::PolynomialQuotient { base, truncation, .. } => {
                let mut out = BTreeMap::new();
                for (ma, ca) in a.as_poly() {
                    for (mb, cb) in b.as_poly() {
                        let mono = ma.mul(mb);
                        let killed = mono
                            .0
                            .iter()
                            .zip(truncation)
                            .any(|(e, bound)| bound.is_some_and(|b| *e >= b));
                        if !killed {
                            accumulate(base, &mut out, mono, &base.mul(ca, cb));
                        }
                    }
                }
                Repr::Poly(out)
            }
            RingKind::Truncated { base, t } => Repr::Dense(dense_mul(base, a.as_dense(), b.as_dense(), t + 1)),
        }
    }

    pub(crate) fn pow(&self, a: &Repr, e: &BigUint) -> Repr {
        let mut result = self.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    pub(crate) fn pow_u64(&self, a: &Repr, e: u64) -> Repr {
        self.pow(a, &BigUint::from(e))
    }

    /// Multiplicative inverse, or `NotAUnit` / `NotSupported`.
    pub(crate) fn inv(&self, a: &Repr) -> Result<Repr> {
        let not_unit = || Error::NotAUnit(format!("{} is not a unit in {self}", self.render(a)));
        match self.kind() {
            RingKind::Integers => {
                if a.as_int().abs().is_one() {
                    Ok(a.clone())
                } else {
                    Err(not_unit())
                }
            }
            RingKind::Rationals => {
                if a.as_rat().is_zero() {
                    Err(not_unit())
                } else {
                    Ok(Repr::Rat(a.as_rat().recip()))
                }
            }
            RingKind::ModularInteger(m) => {
                let g = a.as_int().extended_gcd(m);
                if g.gcd.is_one() {
                    Ok(Repr::Int(g.x.mod_floor(m)))
                } else {
                    Err(not_unit())
                }
            }
            RingKind::Truncated { base, t } => {
                let v = a.as_dense();
                let c0_inv = base.inv(&v[0]).map_err(|_| not_unit())?;
                // c0^{-1} * sum_{i<=t} (-c0^{-1} (f - c0))^i
                let mut m: Vec<Repr> = v.iter().map(|c| base.neg(&base.mul(&c0_inv, c))).collect();
                m[0] = base.zero();
                let m = Repr::Dense(m);
                let mut term = self.one();
                let mut sum = self.one();
                for _ in 0..*t {
                    term = self.mul(&term, &m);
                    sum = self.add(&sum, &term);
                }
                Ok(self.mul(&self.lift(c0_inv), &sum))
            }
            RingKind::PolynomialQuotient { base, vars, truncation } => {
                let poly = a.as_poly();
                let one = Monomial::one(vars.len());
                let c0 = poly.get(&one).cloned().unwrap_or_else(|| base.zero());
                let c0_inv = base.inv(&c0).map_err(|e| match e {
                    Error::NotAUnit(_) => not_unit(),
                    other => other,
                })?;
                let free_var_term = poly.keys().any(|mono| {
                    mono.0
                        .iter()
                        .zip(truncation)
                        .any(|(e, bound)| *e > 0 && bound.is_none())
                });
                if free_var_term && base.is_reduced() {
                    return Err(not_unit());
                }
                // a = c0 (1 - m) with m nilpotent when the series terminates.
                let c0_inv_lifted = self.lift(c0_inv);
                let m = self.sub(&self.one(), &self.mul(&c0_inv_lifted, a));
                let mut term = self.one();
                let mut sum = self.one();
                for _ in 0..UNIT_SERIES_BOUND {
                    term = self.mul(&term, &m);
                    if self.is_zero(&term) {
                        return Ok(self.mul(&c0_inv_lifted, &sum));
                    }
                    sum = self.add(&sum, &term);
                }
                Err(Error::NotSupported(format!(
                    "cannot decide whether {} is a unit in {self}",
                    self.render(a)
                )))
            }
        }
    }

    /// The element named `name`: a variable of this ring or of a coefficient
    /// ring further down, lifted to this ring.
    pub(crate) fn var(&self, name: &str) -> Option<Repr> {
        match self.kind() {
            RingKind::PolynomialQuotient { base, vars, truncation } => {
                if let Some(i) = vars.iter().position(|v| v == name) {
                    let mut m = BTreeMap::new();
                    if truncation[i] != Some(1) {
                        m.insert(Monomial::var(vars.len(), i), base.one());
                    }
                    Some(Repr::Poly(m))
                } else {
                    base.var(name).map(|c| self.lift(c))
                }
            }
            RingKind::Truncated { base, t } => {
                if name == "X" {
                    let mut v = vec![base.zero(); t + 1];
                    if *t >= 1 {
                        v[1] = base.one();
                    }
                    Some(Repr::Dense(v))
                } else {
                    base.var(name).map(|c| self.lift(c))
                }
            }
            _ => None,
        }
    }

    /// Applies the coefficient-ring endomorphism `var -> c * var`, where
    /// `var` is one of this ring's own variables and `c` a coefficient.
    pub(crate) fn scale_var(&self, a: &Repr, name: &str, c: &Repr) -> Option<Repr> {
        match self.kind() {
            RingKind::PolynomialQuotient { base, vars, .. } => {
                let i = vars.iter().position(|v| v == name)?;
                let mut out = BTreeMap::new();
                for (mono, coeff) in a.as_poly() {
                    let f = base.pow_u64(c, u64::from(mono.0[i]));
                    accumulate(base, &mut out, mono.clone(), &base.mul(&f, coeff));
                }
                Some(Repr::Poly(out))
            }
            RingKind::Truncated { base, .. } if name == "X" => {
                let mut factor = base.one();
                let mut out = Vec::with_capacity(a.as_dense().len());
                for coeff in a.as_dense() {
                    out.push(base.mul(&factor, coeff));
                    factor = base.mul(&factor, c);
                }
                Some(Repr::Dense(out))
            }
            _ => None,
        }
    }

    /// All elements of a finite ring, in a fixed order.
    pub(crate) fn elements(&self) -> Option<Vec<Repr>> {
        match self.kind() {
            RingKind::ModularInteger(m) => {
                let n: u64 = m.try_into().ok()?;
                Some((0..n).map(|i| Repr::Int(BigInt::from(i))).collect())
            }
            _ => None,
        }
    }
}

fn accumulate(base: &RingDescriptor, out: &mut BTreeMap<Monomial, Repr>, mono: Monomial, c: &Repr) {
    if base.is_zero(c) {
        return;
    }
    match out.get_mut(&mono) {
        Some(existing) => {
            let sum = base.add(existing, c);
            if base.is_zero(&sum) {
                out.remove(&mono);
            } else {
                *existing = sum;
            }
        }
        None => {
            out.insert(mono, c.clone());
        }
    }
}

/// Product of two coefficient vectors, keeping the first `len` terms.
pub(crate) fn dense_mul(base: &RingDescriptor, a: &[Repr], b: &[Repr], len: usize) -> Vec<Repr> {
    let mut out = vec![base.zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if base.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if base.is_zero(y) {
                continue;
            }
            out[i + j] = base.add(&out[i + j], &base.mul(x, y));
        }
    }
    out
}
