//! A completion of the unimodular row `(1 − XY, X^2)` and determinant checks.

use super::matrix::PolyMatrix;
use crate::error::Result;
use crate::ring::{Repr, RingDescriptor, RingElem, RingKind};

fn fixture_base(ring: &RingDescriptor) -> Result<RingDescriptor> {
    RingDescriptor::polynomial(ring, &["Y"])
}

/// `[[1 − XY, X^2], [−Y^2, 1 + XY]]` over `ring[Y][X]`.
pub fn mennicke_fixture(ring: &RingDescriptor) -> Result<PolyMatrix> {
    PolyMatrix::parse(&fixture_base(ring)?, "[[1 - XY, X^2], [-Y^2, 1 + XY]]")
}

/// `[[1 + XY, −X^2], [Y^2, 1 − XY]]`, the inverse of [`mennicke_fixture`].
pub fn mennicke_inverse(ring: &RingDescriptor) -> Result<PolyMatrix> {
    PolyMatrix::parse(&fixture_base(ring)?, "[[1 + XY, -X^2], [Y^2, 1 - XY]]")
}

/// Total degrees of the terms of `a`, across nested polynomial rings.
fn term_degrees(ring: &RingDescriptor, a: &Repr, shift: u64, out: &mut Vec<u64>) {
    match ring.kind() {
        RingKind::PolynomialQuotient { base, .. } => {
            for (mono, c) in a.as_poly() {
                term_degrees(base, c, shift + mono.degree(), out);
            }
        }
        RingKind::Truncated { base, .. } => {
            for (i, c) in a.as_dense().iter().enumerate() {
                if !base.is_zero(c) {
                    term_degrees(base, c, shift + i as u64, out);
                }
            }
        }
        _ => out.push(shift),
    }
}

/// Whether every term of every entry has even total degree, i.e. the
/// matrix lies over the subring generated by squares and products of two
/// variables.
pub fn has_even_total_degree(a: &PolyMatrix) -> bool {
    let mut degs = Vec::new();
    for row in a.rows() {
        for e in row {
            term_degrees(a.ring(), e, 0, &mut degs);
        }
    }
    degs.iter().all(|d| d % 2 == 0)
}

/// The determinant and whether it is 1.
pub fn sk1_det_check(a: &PolyMatrix) -> (RingElem, bool) {
    let d = a.det();
    let one = d.is_one();
    (d, one)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_properties() {
        for r in ["Z", "Q", "Z/2"] {
            let ring: RingDescriptor = r.parse().unwrap();
            let a = mennicke_fixture(&ring).unwrap();
            assert!(sk1_det_check(&a).1, "det over {r}");
            assert!(has_even_total_degree(&a));
            assert!(a.mul(&mennicke_inverse(&ring).unwrap()).unwrap().is_identity());
        }
    }

    #[test]
    fn odd_degree_detected() {
        let a = PolyMatrix::parse(&"Z[Y]".parse().unwrap(), "[[1 + X, 0], [0, Y^2]]").unwrap();
        assert!(!has_even_total_degree(&a));
        let (d, one) = sk1_det_check(&PolyMatrix::parse(&"Z".parse().unwrap(), "[[2, 0], [0, 1]]").unwrap());
        assert_eq!(d.to_string(), "2");
        assert!(!one);
    }
}
