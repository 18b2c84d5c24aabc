//! Truncated big Witt vectors.
//!
//! A Witt vector of length `t` is stored by its coordinates `a_1..a_t`, the
//! unique elements with `f = Π_n (1 − a_n X^n)^{-1}` in `R_t`. Addition is
//! multiplication of series; the product is the bilinear extension of
//!
//! ```text
//! (1 − a X^m)^{-1} * (1 − b X^n)^{-1} = (1 − a^{n/r} b^{m/r} X^{mn/r})^{-r},  r = gcd(m, n)
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ring::{dense_mul, Repr, RingDescriptor, RingElem, TruncatedPoly};

/// An element of `1 + X R[X]` truncated at degree `t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeriesUnit(TruncatedPoly);

impl SeriesUnit {
    pub fn new(f: TruncatedPoly) -> Result<Self> {
        if f.coeff(0).is_one() {
            Ok(SeriesUnit(f))
        } else {
            Err(Error::BadShape(format!("{f} does not have constant term 1")))
        }
    }

    pub fn parse(base: &RingDescriptor, t: usize, s: &str) -> Result<Self> {
        Self::new(TruncatedPoly::parse(base, t, s)?)
    }

    pub fn one(base: &RingDescriptor, t: usize) -> Self {
        SeriesUnit(TruncatedPoly::one(base, t))
    }

    pub fn poly(&self) -> &TruncatedPoly {
        &self.0
    }

    pub fn into_poly(self) -> TruncatedPoly {
        self.0
    }

    pub fn t(&self) -> usize {
        self.0.t()
    }

    pub fn base(&self) -> &RingDescriptor {
        self.0.base()
    }

    pub fn mul(&self, other: &SeriesUnit) -> Result<SeriesUnit> {
        Ok(SeriesUnit(self.0.checked_mul(&other.0)?))
    }

    pub fn inv(&self) -> SeriesUnit {
        SeriesUnit(self.0.trunc_inv().expect("constant term 1 is a unit"))
    }
}

impl fmt::Display for SeriesUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for SeriesUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WittVector {
    base: RingDescriptor,
    coords: Vec<Repr>,
}

impl WittVector {
    /// `coords[n-1]` is `a_n`. Requires `t = coords.len() ≥ 1`.
    pub fn from_coords(base: &RingDescriptor, coords: &[RingElem]) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::TruncationTooSmall { r: 1, t: 0 });
        }
        let mut reprs = Vec::with_capacity(coords.len());
        for c in coords {
            if c.ring() != base {
                return Err(Error::MixedRings(c.ring().to_string(), base.to_string()));
            }
            reprs.push(c.repr().clone());
        }
        Ok(WittVector {
            base: base.clone(),
            coords: reprs,
        })
    }

    pub fn zero(base: &RingDescriptor, t: usize) -> Self {
        WittVector {
            base: base.clone(),
            coords: vec![base.zero(); t],
        }
    }

    /// The ring identity, with series `(1 − X)^{-1}`.
    pub fn one(base: &RingDescriptor, t: usize) -> Self {
        Self::generator(&RingElem::one(base), 1, t)
    }

    /// The vector whose series is `(1 − a X^level)^{-1}`.
    pub fn generator(a: &RingElem, level: usize, t: usize) -> Self {
        let mut w = Self::zero(a.ring(), t);
        if (1..=t).contains(&level) {
            w.coords[level - 1] = a.repr().clone();
        }
        w
    }

    pub fn base(&self) -> &RingDescriptor {
        &self.base
    }

    pub fn t(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> Vec<RingElem> {
        self.coords
            .iter()
            .map(|c| RingElem::from_repr(self.base.clone(), c.clone()))
            .collect()
    }

    fn check(&self, other: &WittVector) -> Result<()> {
        if self.base != other.base || self.t() != other.t() {
            return Err(Error::MixedRings(
                format!("W_{}({})", self.t(), self.base),
                format!("W_{}({})", other.t(), other.base),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| self.base.render_bare(c)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in W_{}({})", self.t(), self.base)
    }
}

/// `(1 − c X^level)^{-r}` as a dense coefficient vector of length `t + 1`.
fn generator_power(base: &RingDescriptor, c: &Repr, level: usize, r: u64, t: usize) -> Vec<Repr> {
    let mut out = vec![base.zero(); t + 1];
    out[0] = base.one();
    // binom(r + j − 1, j) c^j at degree level·j
    let mut binom = BigInt::from(1);
    let mut cj = base.one();
    let mut j: u64 = 1;
    while level * j as usize <= t {
        binom = binom * BigInt::from(r + j - 1) / BigInt::from(j);
        cj = base.mul(&cj, c);
        out[level * j as usize] = base.mul(&base.from_int(&binom), &cj);
        j += 1;
    }
    out
}

/// The series `Π_n (1 − a_n X^n)^{-1}` mod `X^{t+1}`.
pub fn witt_series(w: &WittVector) -> SeriesUnit {
    let base = &w.base;
    let t = w.t();
    let mut acc = vec![base.one()];
    acc.resize(t + 1, base.zero());
    for (i, a) in w.coords.iter().enumerate() {
        if !base.is_zero(a) {
            acc = dense_mul(base, &acc, &generator_power(base, a, i + 1, 1, t), t + 1);
        }
    }
    SeriesUnit(TruncatedPoly::from_coeff_reprs(base, t, acc))
}

/// Coordinates of a series, by stripping one level at a time: `a_n` is the
/// coefficient of `X^n` in the residual, which is then multiplied by
/// `1 − a_n X^n`.
pub fn witt_coords(f: &SeriesUnit) -> WittVector {
    let base = f.base().clone();
    let t = f.t();
    let mut residual = f.poly().coeff_reprs().to_vec();
    let mut coords = Vec::with_capacity(t);
    for n in 1..=t {
        let a = residual[n].clone();
        if !base.is_zero(&a) {
            // residual *= 1 − a X^n
            for i in (n..=t).rev() {
                let term = base.mul(&a, &residual[i - n]);
                residual[i] = base.sub(&residual[i], &term);
            }
        }
        coords.push(a);
    }
    WittVector { base, coords }
}

pub fn witt_add(u: &WittVector, v: &WittVector) -> Result<WittVector> {
    u.check(v)?;
    let s = witt_series(u).poly().mul(witt_series(v).poly());
    Ok(witt_coords(&SeriesUnit(s)))
}

pub fn witt_neg(u: &WittVector) -> WittVector {
    witt_coords(&witt_series(u).inv())
}

pub fn witt_mul(u: &WittVector, v: &WittVector) -> Result<WittVector> {
    u.check(v)?;
    let base = &u.base;
    let t = u.t();
    let mut acc = vec![base.one()];
    acc.resize(t + 1, base.zero());
    for (i, a) in u.coords.iter().enumerate() {
        if base.is_zero(a) {
            continue;
        }
        let m = i + 1;
        for (j, b) in v.coords.iter().enumerate() {
            let n = j + 1;
            if base.is_zero(b) || m.lcm(&n) > t {
                continue;
            }
            let r = m.gcd(&n);
            let c = base.mul(&base.pow_u64(a, (n / r) as u64), &base.pow_u64(b, (m / r) as u64));
            if base.is_zero(&c) {
                continue;
            }
            let factor = generator_power(base, &c, m * n / r, r as u64, t);
            acc = dense_mul(base, &acc, &factor, t + 1);
        }
    }
    Ok(witt_coords(&SeriesUnit(TruncatedPoly::from_coeff_reprs(base, t, acc))))
}

/// Ghost components `w_1..w_t`: the coefficients of `X f'/f`, found from
/// `X f' = f · Σ w_n X^n` by forward substitution.
pub fn ghost(f: &SeriesUnit) -> Vec<RingElem> {
    let base = f.base();
    let c = f.poly().coeff_reprs();
    let t = f.t();
    let mut w: Vec<Repr> = Vec::with_capacity(t);
    for n in 1..=t {
        let mut wn = base.mul(&base.from_int(&BigInt::from(n)), &c[n]);
        for i in 1..n {
            wn = base.sub(&wn, &base.mul(&c[i], &w[n - i - 1]));
        }
        w.push(wn);
    }
    w.into_iter().map(|x| RingElem::from_repr(base.clone(), x)).collect()
}
