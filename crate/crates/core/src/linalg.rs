//! Dense matrix helpers over any commutative [`Arith`] structure.

use num_bigint::BigUint;

use crate::ring::{Repr, RingDescriptor};

pub(crate) type Mat<E> = Vec<Vec<E>>;

/// Minimal commutative-ring interface the matrix routines need.
pub(crate) trait Arith {
    type Elem: Clone + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

impl Arith for RingDescriptor {
    type Elem = Repr;

    fn zero(&self) -> Repr {
        RingDescriptor::zero(self)
    }
    fn one(&self) -> Repr {
        RingDescriptor::one(self)
    }
    fn add(&self, a: &Repr, b: &Repr) -> Repr {
        RingDescriptor::add(self, a, b)
    }
    fn neg(&self, a: &Repr) -> Repr {
        RingDescriptor::neg(self, a)
    }
    fn mul(&self, a: &Repr, b: &Repr) -> Repr {
        RingDescriptor::mul(self, a, b)
    }
    fn is_zero(&self, a: &Repr) -> bool {
        RingDescriptor::is_zero(self, a)
    }
}

pub(crate) fn is_square<E>(m: &Mat<E>) -> bool {
    m.iter().all(|row| row.len() == m.len())
}

pub(crate) fn zeros<A: Arith>(ar: &A, rows: usize, cols: usize) -> Mat<A::Elem> {
    vec![vec![ar.zero(); cols]; rows]
}

pub(crate) fn identity<A: Arith>(ar: &A, n: usize) -> Mat<A::Elem> {
    scalar_matrix(ar, n, &ar.one())
}

pub(crate) fn scalar_matrix<A: Arith>(ar: &A, n: usize, s: &A::Elem) -> Mat<A::Elem> {
    let mut m = zeros(ar, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = s.clone();
    }
    m
}

pub(crate) fn add<A: Arith>(ar: &A, a: &Mat<A::Elem>, b: &Mat<A::Elem>) -> Mat<A::Elem> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| ar.add(x, y)).collect())
        .collect()
}

pub(crate) fn neg<A: Arith>(ar: &A, a: &Mat<A::Elem>) -> Mat<A::Elem> {
    a.iter().map(|row| row.iter().map(|x| ar.neg(x)).collect()).collect()
}

pub(crate) fn scale<A: Arith>(ar: &A, s: &A::Elem, a: &Mat<A::Elem>) -> Mat<A::Elem> {
    a.iter().map(|row| row.iter().map(|x| ar.mul(s, x)).collect()).collect()
}

pub(crate) fn mul<A: Arith>(ar: &A, a: &Mat<A::Elem>, b: &Mat<A::Elem>) -> Mat<A::Elem> {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(ar, a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if ar.is_zero(x) {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                if !ar.is_zero(y) {
                    out[i][j] = ar.add(&out[i][j], &ar.mul(x, y));
                }
            }
        }
    }
    out
}

pub(crate) fn pow<A: Arith>(ar: &A, a: &Mat<A::Elem>, e: &BigUint) -> Mat<A::Elem> {
    let mut result = identity(ar, a.len());
    for i in (0..e.bits()).rev() {
        result = mul(ar, &result, &result);
        if e.bit(i) {
            result = mul(ar, &result, a);
        }
    }
    result
}

pub(crate) fn is_zero_matrix<A: Arith>(ar: &A, a: &Mat<A::Elem>) -> bool {
    a.iter().flatten().all(|x| ar.is_zero(x))
}

/// Division-free determinant (Berkowitz), valid over any commutative ring.
pub(crate) fn det<A: Arith>(ar: &A, m: &Mat<A::Elem>) -> A::Elem {
    let n = m.len();
    if n == 0 {
        return ar.one();
    }
    // Characteristic polynomial coefficients of the leading r x r block,
    // highest degree first.
    let mut charpoly = vec![ar.one(), ar.neg(&m[0][0])];
    for r in 1..n {
        let mut column = vec![ar.one(), ar.neg(&m[r][r])];
        let mut v: Vec<A::Elem> = (0..r).map(|i| m[i][r].clone()).collect();
        for _ in 0..r {
            let dot = (0..r).fold(ar.zero(), |acc, j| ar.add(&acc, &ar.mul(&m[r][j], &v[j])));
            column.push(ar.neg(&dot));
            v = (0..r)
                .map(|i| (0..r).fold(ar.zero(), |acc, j| ar.add(&acc, &ar.mul(&m[i][j], &v[j]))))
                .collect();
        }
        charpoly = (0..r + 2)
            .map(|i| (0..=i.min(r)).fold(ar.zero(), |acc, j| ar.add(&acc, &ar.mul(&column[i - j], &charpoly[j]))))
            .collect();
    }
    if n % 2 == 0 {
        charpoly[n].clone()
    } else {
        ar.neg(&charpoly[n])
    }
}

/// Block diagonal sum `a ⊥ b`.
pub(crate) fn direct_sum<A: Arith>(ar: &A, a: &Mat<A::Elem>, b: &Mat<A::Elem>) -> Mat<A::Elem> {
    let n = a.len() + b.len();
    let mut out = zeros(ar, n, n);
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            out[i][j] = x.clone();
        }
    }
    let off = a.len();
    for (i, row) in b.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            out[off + i][off + j] = x.clone();
        }
    }
    out
}
