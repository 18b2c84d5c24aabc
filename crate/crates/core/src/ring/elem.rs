use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};

use super::descriptor::RingDescriptor;
use super::repr::Repr;
use crate::error::{Error, Result};
use crate::expr::{Env, Value};

/// An element of an exact commutative ring, in canonical form: two elements
/// are equal iff their descriptors and representations are identical.
///
/// The operator impls panic on mixed rings; use [`ring_arith`] or the
/// `checked_*` methods to get a [`Error::MixedRings`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    ring: RingDescriptor,
    repr: Repr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary ring operation.
pub fn ring_arith(op: RingOp, a: &RingElem, b: &RingElem) -> Result<RingElem> {
    a.same_ring(b)?;
    let r = &a.ring;
    let repr = match op {
        RingOp::Add => r.add(&a.repr, &b.repr),
        RingOp::Sub => r.sub(&a.repr, &b.repr),
        RingOp::Mul => r.mul(&a.repr, &b.repr),
    };
    Ok(RingElem::from_repr(r.clone(), repr))
}

impl RingElem {
    pub(crate) fn from_repr(ring: RingDescriptor, repr: Repr) -> Self {
        RingElem { ring, repr }
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.repr
    }

    pub fn zero(ring: &RingDescriptor) -> Self {
        Self::from_repr(ring.clone(), ring.zero())
    }

    pub fn one(ring: &RingDescriptor) -> Self {
        Self::from_repr(ring.clone(), ring.one())
    }

    pub fn from_int(ring: &RingDescriptor, n: impl Into<BigInt>) -> Self {
        Self::from_repr(ring.clone(), ring.from_int(&n.into()))
    }

    /// A variable of the ring (or of one of its coefficient rings).
    pub fn var(ring: &RingDescriptor, name: &str) -> Result<Self> {
        ring.var(name)
            .map(|r| Self::from_repr(ring.clone(), r))
            .ok_or_else(|| Error::Parse(format!("{ring} has no variable {name}")))
    }

    /// Parses an element in the text grammar, e.g. `3 mod 8`, `2/3`,
    /// `1 + 2*X + X^3`.
    pub fn parse(ring: &RingDescriptor, s: &str) -> Result<Self> {
        match Env::scalar(ring).eval_str(s)? {
            Value::Scalar(r) => Ok(Self::from_repr(ring.clone(), r)),
            Value::Matrix(_) => Err(Error::Parse(format!("expected a ring element, got a matrix: {s:?}"))),
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    fn same_ring(&self, other: &RingElem) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings(self.ring.to_string(), other.ring.to_string()))
        }
    }

    pub fn checked_add(&self, other: &RingElem) -> Result<RingElem> {
        ring_arith(RingOp::Add, self, other)
    }

    pub fn checked_sub(&self, other: &RingElem) -> Result<RingElem> {
        ring_arith(RingOp::Sub, self, other)
    }

    pub fn checked_mul(&self, other: &RingElem) -> Result<RingElem> {
        ring_arith(RingOp::Mul, self, other)
    }

    /// Multiplicative inverse. `NotAUnit` when none exists, `NotSupported`
    /// when unit detection is undecided for this ring.
    pub fn inv(&self) -> Result<RingElem> {
        self.ring.inv(&self.repr).map(|r| Self::from_repr(self.ring.clone(), r))
    }

    pub fn is_unit(&self) -> bool {
        self.inv().is_ok()
    }

    pub fn pow(&self, e: u64) -> RingElem {
        Self::from_repr(self.ring.clone(), self.ring.pow_u64(&self.repr, e))
    }

    pub fn pow_big(&self, e: &BigUint) -> RingElem {
        Self::from_repr(self.ring.clone(), self.ring.pow(&self.repr, e))
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.repr)
    }

    pub fn is_one(&self) -> bool {
        self.ring.is_one(&self.repr)
    }

    /// Lifts a coefficient-ring element into this polynomial/truncated ring.
    pub fn lift_into(&self, ring: &RingDescriptor) -> Result<RingElem> {
        match ring.base() {
            Some(b) if *b == self.ring => Ok(Self::from_repr(ring.clone(), ring.lift(self.repr.clone()))),
            _ => Err(Error::MixedRings(self.ring.to_string(), ring.to_string())),
        }
    }

    /// For an element of `R[vars]` or `R_t` that is a constant, its value in
    /// `R`.
    pub fn constant_value(&self) -> Option<RingElem> {
        let base = self.ring.base()?;
        self.ring
            .constant_value(&self.repr)
            .map(|c| Self::from_repr(base.clone(), c))
    }

    /// Text without the top-level `mod n` suffix.
    pub fn to_bare_string(&self) -> String {
        self.ring.render_bare(&self.repr)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.render(&self.repr))
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait<&RingElem> for &RingElem {
            type Output = RingElem;
            fn $method(self, rhs: &RingElem) -> RingElem {
                ring_arith($op, self, rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<RingElem> for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, RingOp::Add);
binop!(Sub, sub, RingOp::Sub);
binop!(Mul, mul, RingOp::Mul);

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem::from_repr(self.ring.clone(), self.ring.neg(&self.repr))
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(ring: &str, s: &str) -> RingElem {
        RingElem::parse(&ring.parse().unwrap(), s).unwrap()
    }

    #[test]
    fn modular_product() {
        assert_eq!(el("Z/8", "3") * el("Z/8", "3"), el("Z/8", "1"));
        assert_eq!(el("Z/8", "3 mod 8").to_string(), "3 mod 8");
        assert_eq!(el("Z/8", "-1"), el("Z/8", "7"));
    }

    #[test]
    fn rational_product_reduces() {
        assert_eq!(el("Q", "2/3") * el("Q", "3/4"), el("Q", "1/2"));
        assert_eq!(el("Q", "2/4").to_string(), "1/2");
        assert_eq!(el("Q", "3/-6").to_string(), "-1/2");
    }

    #[test]
    fn inverses() {
        assert_eq!(el("Z/8", "3").inv().unwrap(), el("Z/8", "3"));
        assert_eq!(el("Q", "2/5").inv().unwrap(), el("Q", "5/2"));
        assert_eq!(el("Z", "-1").inv().unwrap(), el("Z", "-1"));
        assert_eq!(el("Z", "2").inv().unwrap_err().name(), "NotAUnit");
    }

    #[test]
    fn two_is_not_a_unit_mod_8_by_brute_force() {
        let two = el("Z/8", "2");
        let witnesses = (0..8).filter(|i| (&two * &el("Z/8", &i.to_string())).is_one()).count();
        assert_eq!(witnesses, 0);
        assert_eq!(two.inv().unwrap_err().name(), "NotAUnit");
    }

    #[test]
    fn polynomial_units() {
        // 1 + 3X is a unit of Z/9[X]: (1+3X)(1-3X) = 1 - 9X^2 = 1.
        let u = el("Z/9[X]", "1 + 3*X");
        assert_eq!(u.inv().unwrap(), el("Z/9[X]", "1 - 3*X"));
        assert_eq!(el("Z[X]", "1 + X").inv().unwrap_err().name(), "NotAUnit");
        assert_eq!(el("Z[X,Y]/(X^3)", "1 + X*Y").inv().unwrap_err().name(), "NotAUnit");
        let w = el("Q[X,Y]/(X^3,Y^2)", "2 + X + Y");
        assert!((&w * &w.inv().unwrap()).is_one());
        assert_eq!(el("Z/8[X]", "2 + X").inv().unwrap_err().name(), "NotAUnit");
    }

    #[test]
    fn mixed_rings_rejected() {
        let err = ring_arith(RingOp::Add, &el("Z/8", "1"), &el("Z/9", "1")).unwrap_err();
        assert_eq!(err.name(), "MixedRings");
    }

    #[test]
    fn polynomial_printing() {
        assert_eq!(el("Z[X,Y]", "X*Y - 1 + X^2").to_string(), "-1 + X^2 + X*Y");
        assert_eq!(el("Q[X]", "1 - X/2").to_string(), "1 - 1/2*X");
        assert_eq!(el("Z/2[Y][X]", "1 - X*Y").to_string(), "1 + Y*X");
        assert_eq!(el("Z[Y][X]", "1 - X*Y + X*Y^2").to_string(), "1 + (-Y + Y^2)*X");
        assert_eq!(el("Z[X]/(X^3)", "(1+X)^5").to_string(), "1 + 5*X + 10*X^2");
        assert_eq!(el("Z/4", "0").to_string(), "0 mod 4");
    }
}
