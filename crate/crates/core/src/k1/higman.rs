use super::matrix::PolyMatrix;
use super::word::{apply_right, elem_apply, ElemWord};
use crate::error::{Error, Result};
use crate::linalg;

/// Witness that `left · (source ⊥ I) · right = target ⊥ I` in size `size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableEquivCert {
    size: usize,
    left: ElemWord,
    right: ElemWord,
    source: PolyMatrix,
    target: PolyMatrix,
}

impl StableEquivCert {
    pub fn new(size: usize, left: ElemWord, right: ElemWord, source: PolyMatrix, target: PolyMatrix) -> Result<Self> {
        if source.size() > size || target.size() > size || left.size() > size || right.size() > size {
            return Err(Error::SizeMismatch(format!("certificate of size {size} is too small")));
        }
        if source.base() != target.base() || left.base() != source.base() || right.base() != source.base() {
            return Err(Error::MixedRings(source.base().to_string(), target.base().to_string()));
        }
        Ok(StableEquivCert {
            size,
            left: left.widen(size),
            right: right.widen(size),
            source,
            target,
        })
    }

    /// The trivial certificate relating `a` to itself.
    pub fn identity(a: &PolyMatrix) -> Self {
        StableEquivCert {
            size: a.size(),
            left: ElemWord::empty(a.base(), a.size()),
            right: ElemWord::empty(a.base(), a.size()),
            source: a.clone(),
            target: a.clone(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }
    pub fn left(&self) -> &ElemWord {
        &self.left
    }
    pub fn right(&self) -> &ElemWord {
        &self.right
    }
    pub fn source(&self) -> &PolyMatrix {
        &self.source
    }
    pub fn target(&self) -> &PolyMatrix {
        &self.target
    }

    /// Multiplies the certificate out and compares exactly.
    pub fn replay(&self) -> bool {
        let lhs = elem_apply(&self.left, &self.source.pad(self.size)).and_then(|m| apply_right(&m, &self.right));
        matches!(lhs, Ok(m) if m == self.target.pad(self.size))
    }

    /// Given `self: α ~ β` and `next: β ~ γ`, the certificate for `α ~ γ`.
    pub fn compose(&self, next: &StableEquivCert) -> Result<StableEquivCert> {
        if next.source.pad(self.size.max(next.size)) != self.target.pad(self.size.max(next.size)) {
            return Err(Error::Internal("certificates do not chain".into()));
        }
        let size = self.size.max(next.size);
        StableEquivCert::new(
            size,
            next.left.then(&self.left),
            self.right.then(&next.right),
            self.source.clone(),
            next.target.clone(),
        )
    }
}

/// One degree reduction: for `α = a_0 + ... + a_n X^n`, `n ≥ 2`, of size `r`,
///
/// ```text
/// [[I, −a_n X], [0, I]] (α ⊥ I) [[I, 0], [X^{n−1} I, I]] = [[a_0 + ... + a_{n−1} X^{n−1}, −a_n X], [X^{n−1} I, I]]
/// ```
pub fn higman_reduce_step(a: &PolyMatrix) -> Result<(PolyMatrix, StableEquivCert)> {
    let n = a.degree();
    if n <= 1 {
        return Err(Error::AlreadyLinear(n));
    }
    let r = a.size();
    let ring = a.ring();
    let top = a.coefficient(n).shift(n);
    let low = a.sub(&top)?;
    let neg_top_x = a.coefficient(n).shift(1).neg();
    let id = PolyMatrix::identity(a.base(), r)?;
    let xn1 = id.shift(n - 1);

    let mut rows = linalg::zeros(ring, 2 * r, 2 * r);
    for i in 0..r {
        for j in 0..r {
            rows[i][j] = low.rows()[i][j].clone();
            rows[i][r + j] = neg_top_x.rows()[i][j].clone();
            rows[r + i][j] = xn1.rows()[i][j].clone();
            rows[r + i][r + j] = id.rows()[i][j].clone();
        }
    }
    let a1 = PolyMatrix::from_rows(a.base(), ring, rows);

    let mut left = ElemWord::empty(a.base(), 2 * r);
    left.push_upper(r, neg_top_x.rows());
    let mut right = ElemWord::empty(a.base(), 2 * r);
    right.push_lower(r, xn1.rows());
    let cert = StableEquivCert::new(2 * r, left, right, a.clone(), a1.clone())?;
    if !cert.replay() {
        return Err(Error::Internal("reduction certificate does not replay".into()));
    }
    Ok((a1, cert))
}

/// Repeats [`higman_reduce_step`] until the matrix is linear. A degree `n`
/// input of size `r` ends at size `r · 2^{n−1}`.
pub fn higman_linearize(a: &PolyMatrix) -> Result<(PolyMatrix, StableEquivCert)> {
    let mut cert = StableEquivCert::identity(a);
    let mut cur = a.clone();
    while cur.degree() > 1 {
        let (next, step) = higman_reduce_step(&cur)?;
        cert = cert.compose(&step)?;
        cur = next;
    }
    if !cert.replay() {
        return Err(Error::Internal("linearization certificate does not replay".into()));
    }
    Ok((cur, cert))
}

pub const DEFAULT_NILPOTENCY_FACTOR: usize = 16;

/// Least `m ≥ 1` with `N^m = 0`, searching up to `bound` (default
/// `16 · size`).
pub fn nilpotency_index(n: &PolyMatrix, bound: Option<usize>) -> Result<usize> {
    let bound = bound.unwrap_or(DEFAULT_NILPOTENCY_FACTOR * n.size());
    let mut p = n.clone();
    for m in 1..=bound {
        if p.is_zero() {
            return Ok(m);
        }
        p = p.mul(n)?;
    }
    Err(Error::NotNilpotent { bound })
}

/// The result of [`unipotent_normalize`]: `α ~ I + N X` with `N^nilindex = 0`.
#[derive(Clone, Debug)]
pub struct Unipotent {
    pub n: PolyMatrix,
    pub cert: StableEquivCert,
    pub nilindex: usize,
}

/// For `α(0) = I`, linearizes to `I + N X` and checks `N` is nilpotent.
/// A supplied inverse is checked first.
pub fn unipotent_normalize(a: &PolyMatrix, inverse: Option<&PolyMatrix>, bound: Option<usize>) -> Result<Unipotent> {
    if !a.coefficient(0).is_identity() {
        return Err(Error::NotUnipotentAtZero);
    }
    if let Some(inv) = inverse {
        if !a.mul(inv)?.is_identity() {
            return Err(Error::NotInverse);
        }
    }
    let (beta, cert) = higman_linearize(a)?;
    let n = beta.coefficient(1);
    let id = PolyMatrix::identity(a.base(), beta.size())?;
    if beta != id.add(&n.shift(1))? {
        return Err(Error::Internal("linearized matrix is not I + NX".into()));
    }
    let nilindex = nilpotency_index(&n, bound)?;
    Ok(Unipotent { n, cert, nilindex })
}
