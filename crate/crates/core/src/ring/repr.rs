use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exponent vector of a monomial, one entry per ring variable.
///
/// Ordered by total degree first; within a degree, earlier variables come
/// first (`X` before `Y`, `X^2` before `X*Y`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub(crate) fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub(crate) fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub(crate) fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical value of a ring element. Its meaning depends on the descriptor
/// it is paired with:
///
/// * `Int` for integers and for residues in `[0, n)` of `Z/n`,
/// * `Rat` for rationals (always reduced, positive denominator),
/// * `Poly` for polynomial quotients (zero coefficients pruned),
/// * `Dense` for `R[X]/(X^{t+1})`, exactly `t + 1` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Repr {
    Int(BigInt),
    Rat(BigRational),
    Poly(BTreeMap<Monomial, Repr>),
    Dense(Vec<Repr>),
}

impl Repr {
    pub(crate) fn as_int(&self) -> &BigInt {
        match self {
            Repr::Int(v) => v,
            other => panic!("expected integer representation, found {other:?}"),
        }
    }

    pub(crate) fn as_rat(&self) -> &BigRational {
        match self {
            Repr::Rat(v) => v,
            other => panic!("expected rational representation, found {other:?}"),
        }
    }

    pub(crate) fn as_poly(&self) -> &BTreeMap<Monomial, Repr> {
        match self {
            Repr::Poly(v) => v,
            other => panic!("expected polynomial representation, found {other:?}"),
        }
    }

    pub(crate) fn as_dense(&self) -> &[Repr] {
        match self {
            Repr::Dense(v) => v,
            other => panic!("expected truncated representation, found {other:?}"),
        }
    }
}
