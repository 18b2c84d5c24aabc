//! Brute-force enumeration of `k`-torsion in `1 + X R_t` for finite `R`.

use std::fmt;
use std::thread;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ring::{Repr, RingDescriptor, TruncatedPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReport {
    pub scanned: u64,
    pub k: u64,
    /// The series `f` with `f^k = 1`, in enumeration order.
    pub torsion: Vec<TruncatedPoly>,
}

impl TorsionReport {
    pub fn only_identity(&self) -> bool {
        self.torsion.len() == 1 && self.torsion[0].is_one()
    }
}

impl fmt::Display for TorsionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.torsion.len();
        write!(f, "{} series scanned, {n} k-torsion element", self.scanned)?;
        if n != 1 {
            write!(f, "s")?;
        }
        if self.only_identity() {
            return write!(f, " (the identity)");
        }
        if n > 0 {
            write!(f, ":")?;
            for p in &self.torsion {
                write!(f, "\n  {p}")?;
            }
        }
        Ok(())
    }
}

/// Series number `idx`: the base-`|R|` digits of `idx` are the
/// coefficients of `X, X^2, ..., X^t`.
fn series_at(base: &RingDescriptor, elems: &[Repr], t: usize, mut idx: u64) -> TruncatedPoly {
    let q = elems.len() as u64;
    let mut coeffs = vec![base.one()];
    for _ in 0..t {
        coeffs.push(elems[(idx % q) as usize].clone());
        idx /= q;
    }
    TruncatedPoly::from_coeff_reprs(base, t, coeffs)
}

/// Scans every `f = 1 + a_1X + ... + a_tX^t` over a finite `Z/n` for
/// `f^k = 1`. Worker `w` takes the indices `≡ w (mod workers)`; the report
/// is the same for every worker count.
pub fn torsion_scan(base: &RingDescriptor, t: usize, k: u64, workers: usize) -> Result<TorsionReport> {
    let elems = base
        .elements()
        .ok_or_else(|| Error::InvalidRing(format!("{base} is not a finite ring Z/n")))?;
    let total = (elems.len() as u64)
        .checked_pow(t as u32)
        .ok_or_else(|| Error::NotSupported(format!("|{base}|^{t} series is too many to enumerate")))?;
    let workers = workers.clamp(1, total.max(1) as usize) as u64;
    let e = BigUint::from(k);

    let mut hits: Vec<(u64, TruncatedPoly)> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let (elems, e) = (&elems, &e);
                s.spawn(move || {
                    let mut found = Vec::new();
                    let mut idx = w;
                    while idx < total {
                        let f = series_at(base, elems, t, idx);
                        if f.pow(e).is_one() {
                            found.push((idx, f));
                        }
                        idx += workers;
                    }
                    found
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });
    hits.sort_by_key(|(i, _)| *i);
    Ok(TorsionReport {
        scanned: total,
        k,
        torsion: hits.into_iter().map(|(_, f)| f).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z5_has_no_2_torsion() {
        let r = torsion_scan(&"Z/5".parse().unwrap(), 3, 2, 1).unwrap();
        assert_eq!(r.to_string(), "125 series scanned, 1 k-torsion element (the identity)");
    }

    #[test]
    fn independent_of_workers() {
        let base: RingDescriptor = "Z/8".parse().unwrap();
        let one = torsion_scan(&base, 2, 2, 1).unwrap();
        for w in [2, 3, 7, 100] {
            assert_eq!(torsion_scan(&base, 2, 2, w).unwrap(), one);
        }
        assert!(one.torsion.len() > 1);
        assert!(one.to_string().contains("\n  1 + 4*X\n"));
    }

    #[test]
    fn infinite_ring_rejected() {
        assert_eq!(
            torsion_scan(&"Z".parse().unwrap(), 2, 2, 1).unwrap_err().name(),
            "InvalidRing"
        );
    }
}
