use std::fmt;

use crate::error::{Error, Result};
use crate::expr::{Env, Value};
use crate::linalg::{self, Mat};
use crate::ring::{Monomial, Repr, RingDescriptor, RingElem};

/// `base[X]`, the entry ring of polynomial matrices over `base`.
pub fn poly_ring(base: &RingDescriptor) -> Result<RingDescriptor> {
    RingDescriptor::polynomial(base, &["X"])
}

/// A square matrix over `R[X]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    base: RingDescriptor,
    ring: RingDescriptor,
    rows: Mat<Repr>,
}

impl PolyMatrix {
    pub(crate) fn from_rows(base: &RingDescriptor, ring: &RingDescriptor, rows: Mat<Repr>) -> Self {
        PolyMatrix {
            base: base.clone(),
            ring: ring.clone(),
            rows,
        }
    }

    /// Parses a row-major literal such as `[[1 + X, 0], [0, 1]]`.
    pub fn parse(base: &RingDescriptor, s: &str) -> Result<Self> {
        let ring = poly_ring(base)?;
        match Env::scalar(&ring).eval_str(s)? {
            Value::Matrix(m) if linalg::is_square(&m) => Ok(Self::from_rows(base, &ring, m)),
            Value::Matrix(_) => Err(Error::BadShape(format!("{s} is not square"))),
            Value::Scalar(_) => Err(Error::BadShape(format!("{s} is not a matrix literal"))),
        }
    }

    /// Entries may live in `base` or in `base[X]`.
    pub fn from_entries(base: &RingDescriptor, entries: &[Vec<RingElem>]) -> Result<Self> {
        let ring = poly_ring(base)?;
        let mut rows = Vec::with_capacity(entries.len());
        for row in entries {
            if row.len() != entries.len() {
                return Err(Error::BadShape("matrix is not square".into()));
            }
            let mut out = Vec::with_capacity(row.len());
            for e in row {
                if e.ring() == &ring {
                    out.push(e.repr().clone());
                } else if e.ring() == base {
                    out.push(ring.lift(e.repr().clone()));
                } else {
                    return Err(Error::MixedRings(e.ring().to_string(), ring.to_string()));
                }
            }
            rows.push(out);
        }
        if rows.is_empty() {
            return Err(Error::BadShape("empty matrix".into()));
        }
        Ok(Self::from_rows(base, &ring, rows))
    }

    pub fn identity(base: &RingDescriptor, n: usize) -> Result<Self> {
        let ring = poly_ring(base)?;
        Ok(Self::from_rows(base, &ring, linalg::identity(&ring, n)))
    }

    pub fn zero(base: &RingDescriptor, n: usize) -> Result<Self> {
        let ring = poly_ring(base)?;
        Ok(Self::from_rows(base, &ring, linalg::zeros(&ring, n, n)))
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn base(&self) -> &RingDescriptor {
        &self.base
    }

    /// The entry ring `base[X]`.
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub(crate) fn rows(&self) -> &Mat<Repr> {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Mat<Repr> {
        &mut self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> RingElem {
        RingElem::from_repr(self.ring.clone(), self.rows[i][j].clone())
    }

    /// Largest power of `X` in any entry; 0 for constant matrices.
    pub fn degree(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .flat_map(|e| e.as_poly().keys().map(|m| m.0[0] as usize))
            .max()
            .unwrap_or(0)
    }

    /// The constant matrix of `X^d` coefficients.
    pub fn coefficient(&self, d: usize) -> PolyMatrix {
        let key = Monomial(vec![d as u32]);
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e.as_poly().get(&key) {
                        Some(c) => self.ring.lift(c.clone()),
                        None => self.ring.zero(),
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(&self.base, &self.ring, rows)
    }

    /// Multiplies every entry by `X^d`.
    pub fn shift(&self, d: usize) -> PolyMatrix {
        let xd = self
            .ring
            .pow_u64(&self.ring.var("X").expect("entry ring has X"), d as u64);
        Self::from_rows(&self.base, &self.ring, linalg::scale(&self.ring, &xd, &self.rows))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == linalg::identity(&self.ring, self.size())
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_matrix(&self.ring, &self.rows)
    }

    fn check(&self, other: &PolyMatrix) -> Result<()> {
        if self.base != other.base {
            return Err(Error::MixedRings(self.base.to_string(), other.base.to_string()));
        }
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!("{} vs {}", self.size(), other.size())));
        }
        Ok(())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.check(other)?;
        Ok(Self::from_rows(
            &self.base,
            &self.ring,
            linalg::mul(&self.ring, &self.rows, &other.rows),
        ))
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.check(other)?;
        Ok(Self::from_rows(
            &self.base,
            &self.ring,
            linalg::add(&self.ring, &self.rows, &other.rows),
        ))
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyMatrix {
        Self::from_rows(&self.base, &self.ring, linalg::neg(&self.ring, &self.rows))
    }

    pub fn pow(&self, e: u64) -> PolyMatrix {
        Self::from_rows(&self.base, &self.ring, linalg::pow(&self.ring, &self.rows, &e.into()))
    }

    /// `self ⊥ other`.
    pub fn direct_sum(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.base != other.base {
            return Err(Error::MixedRings(self.base.to_string(), other.base.to_string()));
        }
        Ok(Self::from_rows(
            &self.base,
            &self.ring,
            linalg::direct_sum(&self.ring, &self.rows, &other.rows),
        ))
    }

    /// `self ⊥ I` of total size `n ≥ size`.
    pub fn pad(&self, n: usize) -> PolyMatrix {
        let extra = linalg::identity(&self.ring, n.saturating_sub(self.size()));
        Self::from_rows(
            &self.base,
            &self.ring,
            linalg::direct_sum(&self.ring, &self.rows, &extra),
        )
    }

    /// Determinant in `R[X]`, division free.
    pub fn det(&self) -> RingElem {
        RingElem::from_repr(self.ring.clone(), linalg::det(&self.ring, &self.rows))
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::derivation::mat_literal(&self.ring, &self.rows))
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(base: &str, s: &str) -> PolyMatrix {
        PolyMatrix::parse(&base.parse().unwrap(), s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let a = m("Z", "[[1 + X^2, -X], [0, 1]]");
        assert_eq!(a.to_string(), "[[1 + X^2, -X], [0, 1]]");
        assert_eq!(a.degree(), 2);
        assert_eq!(a.coefficient(2), m("Z", "[[1, 0], [0, 0]]"));
        assert_eq!(a.coefficient(0), m("Z", "[[1, 0], [0, 1]]"));
        assert!(PolyMatrix::parse(&"Z".parse().unwrap(), "[[1, 2]]").is_err());
        assert!(PolyMatrix::parse(&"Z[X]".parse().unwrap(), "[[1]]").is_err());
    }

    #[test]
    fn determinant() {
        assert_eq!(m("Z", "[[2, 0], [0, 1]]").det().to_string(), "2");
        assert_eq!(m("Z/5", "[[1 + X, X], [X, 1 + X]]").det().to_string(), "1 + 2*X");
    }

    #[test]
    fn padding_and_sums() {
        let a = m("Z/6", "[[X]]");
        assert_eq!(a.pad(3), m("Z/6", "[[X, 0, 0], [0, 1, 0], [0, 0, 1]]"));
        assert_eq!(a.direct_sum(&a).unwrap(), m("Z/6", "[[X, 0], [0, X]]"));
        assert_eq!(a.mul(&a.pad(2)).unwrap_err().name(), "SizeMismatch");
    }
}
