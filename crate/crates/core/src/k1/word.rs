use std::fmt;

use super::matrix::{poly_ring, PolyMatrix};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::ring::{Repr, RingDescriptor, RingElem};

/// `E_ij(λ) = I + λ e_ij`, indices from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transvection {
    pub i: usize,
    pub j: usize,
    pub lambda: RingElem,
}

impl fmt::Display for Transvection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({},{}; {})", self.i, self.j, self.lambda.to_bare_string())
    }
}

/// The product `E(l_1) E(l_2) ... E(l_k)` of its letters, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElemWord {
    base: RingDescriptor,
    size: usize,
    letters: Vec<Transvection>,
}

impl ElemWord {
    pub fn empty(base: &RingDescriptor, size: usize) -> Self {
        ElemWord {
            base: base.clone(),
            size,
            letters: Vec::new(),
        }
    }

    /// Letters' `λ` may live in `base` or `base[X]`.
    pub fn new(base: &RingDescriptor, size: usize, letters: Vec<Transvection>) -> Result<Self> {
        let ring = poly_ring(base)?;
        let mut w = Self::empty(base, size);
        for l in letters {
            if l.i == l.j || l.i >= size || l.j >= size {
                return Err(Error::BadShape(format!(
                    "bad transvection ({}, {}) in size {size}",
                    l.i, l.j
                )));
            }
            let lambda = if l.lambda.ring() == &ring {
                l.lambda
            } else {
                l.lambda.lift_into(&ring)?
            };
            w.letters.push(Transvection { lambda, ..l });
        }
        Ok(w)
    }

    pub(crate) fn push(&mut self, i: usize, j: usize, lambda: Repr) {
        debug_assert!(i != j && i < self.size && j < self.size);
        let ring = poly_ring(&self.base).expect("word base admits X");
        self.letters.push(Transvection {
            i,
            j,
            lambda: RingElem::from_repr(ring, lambda),
        });
    }

    pub fn base(&self) -> &RingDescriptor {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn letters(&self) -> &[Transvection] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reversed, with every `λ` negated.
    pub fn inverse(&self) -> ElemWord {
        ElemWord {
            base: self.base.clone(),
            size: self.size,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Transvection {
                    lambda: -&l.lambda,
                    ..l.clone()
                })
                .collect(),
        }
    }

    /// The same word read in a larger size.
    pub fn widen(&self, size: usize) -> ElemWord {
        ElemWord {
            size: size.max(self.size),
            ..self.clone()
        }
    }

    /// `self` followed by `other`, both widened to the larger size.
    pub fn then(&self, other: &ElemWord) -> ElemWord {
        let mut w = self.widen(other.size);
        w.letters.extend(other.letters.iter().cloned());
        w
    }

    pub fn product(&self) -> PolyMatrix {
        let id = PolyMatrix::identity(&self.base, self.size).expect("word base admits X");
        elem_apply(self, &id).expect("sizes agree")
    }

    /// Appends the letters of `[[I, B], [0, I]]`, `B` an `n x n` block,
    /// row-major over the nonzero entries of `B`.
    pub(crate) fn push_upper(&mut self, n: usize, b: &Mat<Repr>) {
        let ring = poly_ring(&self.base).expect("word base admits X");
        for (i, row) in b.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !ring.is_zero(x) {
                    self.push(i, n + j, x.clone());
                }
            }
        }
    }

    /// Appends the letters of `[[I, 0], [C, I]]`.
    pub(crate) fn push_lower(&mut self, n: usize, c: &Mat<Repr>) {
        let ring = poly_ring(&self.base).expect("word base admits X");
        for (i, row) in c.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !ring.is_zero(x) {
                    self.push(n + i, j, x.clone());
                }
            }
        }
    }
}

fn check(w: &ElemWord, a: &PolyMatrix) -> Result<()> {
    if w.base != *a.base() {
        return Err(Error::MixedRings(w.base.to_string(), a.base().to_string()));
    }
    if w.size != a.size() {
        return Err(Error::SizeMismatch(format!(
            "word of size {} on a {}x{1} matrix",
            w.size,
            a.size()
        )));
    }
    Ok(())
}

/// `w · α`, by row operations from the last letter to the first.
pub fn elem_apply(w: &ElemWord, a: &PolyMatrix) -> Result<PolyMatrix> {
    check(w, a)?;
    let ring = a.ring().clone();
    let mut out = a.clone();
    let rows = out.rows_mut();
    for l in w.letters.iter().rev() {
        let lam = l.lambda.repr();
        let src = rows[l.j].clone();
        for (x, y) in rows[l.i].iter_mut().zip(&src) {
            *x = ring.add(x, &ring.mul(lam, y));
        }
    }
    Ok(out)
}

/// `α · w`, by column operations from the first letter to the last.
pub fn apply_right(a: &PolyMatrix, w: &ElemWord) -> Result<PolyMatrix> {
    check(w, a)?;
    let ring = a.ring().clone();
    let mut out = a.clone();
    let rows = out.rows_mut();
    for l in &w.letters {
        let lam = l.lambda.repr();
        for row in rows.iter_mut() {
            let add = ring.mul(&row[l.i], lam);
            row[l.j] = ring.add(&row[l.j], &add);
        }
    }
    Ok(out)
}

/// A word of size `2n` whose product is `α ⊥ α^{-1}`, from
///
/// ```text
/// [[α,0],[0,α⁻¹]] = [[I,α],[0,I]] [[I,0],[−α⁻¹,I]] [[I,α],[0,I]] [[I,−I],[0,I]] [[I,0],[I,I]] [[I,−I],[0,I]]
/// ```
pub fn whitehead_word(a: &PolyMatrix, a_inv: &PolyMatrix) -> Result<ElemWord> {
    let n = a.size();
    if !a.mul(a_inv)?.is_identity() {
        return Err(Error::NotInverse);
    }
    let base = a.base();
    let ring = a.ring();
    let id = crate::linalg::identity(ring, n);
    let neg_id = crate::linalg::neg(ring, &id);
    let mut w = ElemWord::empty(base, 2 * n);
    w.push_upper(n, a.rows());
    w.push_lower(n, a_inv.neg().rows());
    w.push_upper(n, a.rows());
    w.push_upper(n, &neg_id);
    w.push_lower(n, &id);
    w.push_upper(n, &neg_id);
    if w.product() != a.direct_sum(a_inv)? {
        return Err(Error::Internal("Whitehead word does not multiply out".into()));
    }
    Ok(w)
}
