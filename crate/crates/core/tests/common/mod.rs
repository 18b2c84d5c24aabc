//! Seeded generators and naive reference arithmetic shared by the
//! integration tests.
#![allow(dead_code)]

use ktorsion::{ElemWord, PolyMatrix, RingDescriptor, RingElem, SeriesUnit, Transvection, TruncatedPoly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(s: &str) -> RingDescriptor {
    s.parse().unwrap()
}

/// A small random scalar: integers in `[-9, 9]`, and over `Q` fractions with
/// denominators up to 5.
pub fn elem<R: Rng>(rng: &mut R, base: &RingDescriptor) -> RingElem {
    let n: i64 = rng.gen_range(-9..=9);
    if base.to_string() == "Q" {
        let d: i64 = rng.gen_range(1..=5);
        RingElem::parse(base, &format!("{n}/{d}")).unwrap()
    } else {
        RingElem::from_int(base, n)
    }
}

pub fn nonzero_elem<R: Rng>(rng: &mut R, base: &RingDescriptor) -> RingElem {
    loop {
        let e = elem(rng, base);
        if !e.is_zero() {
            return e;
        }
    }
}

pub fn unit<R: Rng>(rng: &mut R, base: &RingDescriptor) -> RingElem {
    loop {
        let e = elem(rng, base);
        if e.is_unit() {
            return e;
        }
    }
}

pub fn coeffs<R: Rng>(rng: &mut R, base: &RingDescriptor, n: usize) -> Vec<RingElem> {
    (0..n).map(|_| elem(rng, base)).collect()
}

/// A series `1 + a_1 X + ... + a_t X^t`.
pub fn unit_series<R: Rng>(rng: &mut R, base: &RingDescriptor, t: usize) -> SeriesUnit {
    let mut c = vec![RingElem::one(base)];
    c.extend(coeffs(rng, base, t));
    SeriesUnit::new(TruncatedPoly::from_coeffs(base, t, &c).unwrap()).unwrap()
}

/// Schoolbook product of coefficient lists, cut at degree `t`.
pub fn naive_mul(a: &[RingElem], b: &[RingElem], t: usize) -> Vec<RingElem> {
    let base = a[0].ring().clone();
    let mut out = vec![RingElem::zero(&base); t + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j <= t {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

pub fn naive_pow(a: &[RingElem], e: u64, t: usize) -> Vec<RingElem> {
    let base = a[0].ring().clone();
    let mut out = vec![RingElem::zero(&base); t + 1];
    out[0] = RingElem::one(&base);
    for _ in 0..e {
        out = naive_mul(&out, a, t);
    }
    out
}

/// A random polynomial in `base[X]` of degree at most `deg`.
pub fn poly<R: Rng>(rng: &mut R, base: &RingDescriptor, deg: usize, zero_constant: bool) -> String {
    let mut terms = Vec::new();
    for d in 0..=deg {
        if d == 0 && zero_constant {
            continue;
        }
        let c = elem(rng, base).to_string();
        if c != "0" {
            terms.push(format!("({c})*X^{d}"));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn matrix<R: Rng>(rng: &mut R, base: &RingDescriptor, n: usize, deg: usize) -> PolyMatrix {
    let rows: Vec<String> = (0..n)
        .map(|_| {
            let row: Vec<String> = (0..n).map(|_| poly(rng, base, deg, false)).collect();
            format!("[{}]", row.join(", "))
        })
        .collect();
    PolyMatrix::parse(base, &format!("[{}]", rows.join(", "))).unwrap()
}

fn letter<R: Rng>(rng: &mut R, base: &RingDescriptor, n: usize, lambda: &str) -> Transvection {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let &(i, j) = pairs.choose(rng).unwrap();
    let ring = ktorsion::poly_ring(base).unwrap();
    Transvection {
        i,
        j,
        lambda: RingElem::parse(&ring, lambda).unwrap(),
    }
}

/// Multiplies out `E(l_1)...E(l_k)` entry by entry, without the library's
/// row operations.
pub fn naive_product(base: &RingDescriptor, n: usize, letters: &[Transvection]) -> PolyMatrix {
    let ring = ktorsion::poly_ring(base).unwrap();
    let mut m: Vec<Vec<RingElem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        RingElem::one(&ring)
                    } else {
                        RingElem::zero(&ring)
                    }
                })
                .collect()
        })
        .collect();
    for l in letters {
        // right multiplication by I + λ e_ij adds λ·(column i) to column j
        for row in m.iter_mut() {
            let add = &row[l.i] * &l.lambda;
            row[l.j] = &row[l.j] + &add;
        }
    }
    PolyMatrix::from_entries(base, &m).unwrap()
}

/// `α` with `α(0) = I`, built as a short word in letters with `λ(0) = 0`,
/// together with its inverse. Entries have degree at most `max_deg`.
pub fn unipotent_pair<R: Rng>(
    rng: &mut R,
    base: &RingDescriptor,
    n: usize,
    max_deg: usize,
) -> (PolyMatrix, PolyMatrix) {
    loop {
        let k = if n == 1 { 0 } else { rng.gen_range(1..=3) };
        let letters: Vec<Transvection> = (0..k)
            .map(|_| {
                let d = rng.gen_range(1..=2);
                let p = poly(rng, base, d, true);
                letter(rng, base, n, &p)
            })
            .collect();
        let a = naive_product(base, n, &letters);
        if a.degree() > max_deg {
            continue;
        }
        let inv_letters: Vec<Transvection> = letters
            .iter()
            .rev()
            .map(|l| Transvection {
                i: l.i,
                j: l.j,
                lambda: -&l.lambda,
            })
            .collect();
        return (a, naive_product(base, n, &inv_letters));
    }
}

/// A random constant invertible matrix: a word times a diagonal of units.
pub fn invertible_pair<R: Rng>(rng: &mut R, base: &RingDescriptor, n: usize) -> (PolyMatrix, PolyMatrix) {
    let count = if n == 1 { 0 } else { rng.gen_range(0..=4) };
    let letters: Vec<Transvection> = (0..count)
        .map(|_| {
            let c = elem(rng, base).to_string();
            letter(rng, base, n, &c)
        })
        .collect();
    let diag: Vec<RingElem> = (0..n).map(|_| unit(rng, base)).collect();
    let ring = ktorsion::poly_ring(base).unwrap();
    let d = |inv: bool| {
        let rows: Vec<Vec<RingElem>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i != j {
                            RingElem::zero(&ring)
                        } else if inv {
                            diag[i].inv().unwrap().lift_into(&ring).unwrap()
                        } else {
                            diag[i].lift_into(&ring).unwrap()
                        }
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::from_entries(base, &rows).unwrap()
    };
    let w = naive_product(base, n, &letters);
    let inv_letters: Vec<Transvection> = letters
        .iter()
        .rev()
        .map(|l| Transvection {
            i: l.i,
            j: l.j,
            lambda: -&l.lambda,
        })
        .collect();
    let w_inv = naive_product(base, n, &inv_letters);
    (w.mul(&d(false)).unwrap(), d(true).mul(&w_inv).unwrap())
}

/// A strictly upper triangular constant matrix with random entries.
pub fn strict_upper<R: Rng>(rng: &mut R, base: &RingDescriptor, n: usize) -> PolyMatrix {
    let rows: Vec<String> = (0..n)
        .map(|i| {
            let row: Vec<String> = (0..n)
                .map(|j| if j > i { elem(rng, base).to_string() } else { "0".into() })
                .map(|s| format!("({s})"))
                .collect();
            format!("[{}]", row.join(", "))
        })
        .collect();
    PolyMatrix::parse(base, &format!("[{}]", rows.join(", "))).unwrap()
}

/// Whether the word over `ElemWord` multiplies out to `target`, checked
/// with [`naive_product`].
pub fn word_is(w: &ElemWord, target: &PolyMatrix) -> bool {
    naive_product(w.base(), w.size(), w.letters()) == *target
}
