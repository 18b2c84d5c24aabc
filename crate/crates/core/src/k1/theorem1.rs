//! Conditional derivation of `[I + NX] ≡ I (mod T)` from
//! `[(I + NX)^k] ≡ I (mod T)` for nilpotent `N` and a unit `k`.
//!
//! Every matrix in the argument is a polynomial in `M = NX`, so the work is
//! done in `R[M]/(M^m)` (`m` the nilpotency index) and rendered back as
//! matrix expressions in `N` and `X`.

use super::higman::nilpotency_index;
use super::matrix::PolyMatrix;
use crate::derivation::engine::{MatrixRender, Render, Rounds};
use crate::derivation::{DerivationLog, LogBuilder};
use crate::error::{Error, Result};
use crate::ring::{RingElem, TruncatedPoly};
use crate::series::unit_k;

pub fn theorem1_derivation(n: &PolyMatrix, k: u64) -> Result<DerivationLog> {
    if n.degree() > 0 {
        return Err(Error::BadShape("N must have constant entries".into()));
    }
    let base = n.base().clone();
    let k_inv = unit_k(&base, k)?;
    let m = nilpotency_index(n, None)?;
    let t = m - 1;
    let render = MatrixRender { symbol: 'N' };
    let e = |p: &TruncatedPoly| render.elem(p);

    let hypothesis = format!("[(I+NX)^{k}] ≡ I (mod T)");
    let mut b = LogBuilder::matrix(
        &base,
        n.ring(),
        k,
        hypothesis,
        &[('N', n.rows().clone(), n.to_string())],
    );
    let h = b.hypothesis("H");

    let k_elem = RingElem::from_int(&base, k);
    let one_m = TruncatedPoly::one_plus_monomial(&RingElem::one(&base), 1, t);
    let ak = TruncatedPoly::one_plus_monomial(&k_elem, 1, t);
    let g = one_m.pow(&k.into()).mul(&ak.trunc_inv()?);
    let (eak, eg) = (e(&ak), e(&g));

    // (I+NX)^k = (I+kNX) G, and with H: [(I+kNX) G] ≡ I
    let lhs = format!("(I+NX)^{k}");
    let prod = format!("{eak}*{eg}");
    let e2 = b.exact(lhs.clone(), prod.clone())?;
    let c = b.cong(&lhs, &prod, "exact", &[e2], None);
    let s = b.cong(&prod, &lhs, "symm", &[c], None);
    let a = b.cong(&prod, "I", "trans", &[s, h], None);

    // X -> kX carries H to [(I+kNX)^k] ≡ I; cancel it against A^k
    let eak_k = format!("{eak}^{k}");
    let scaled = b.axiom(&eak_k, "I", &[h], k_elem.to_bare_string());
    let w = ak.pow(&k.into()).trunc_inv()?;
    let ew = e(&w);
    b.exact(format!("{ew}*{eak_k}"), "I".into())?;
    let pa = b.cong(&format!("({prod})^{k}"), "I", "pow", &[a], Some(k.to_string()));
    let rw = b.cong(&ew, &ew, "refl", &[], None);
    let eg_k = format!("{eg}^{k}");
    let m1 = b.cong(&eg_k, &ew, "mul", &[pa, rw], None);
    let m2 = b.cong("I", &ew, "mul", &[scaled, rw], None);
    let s2 = b.cong(&ew, "I", "symm", &[m2], None);
    let gk = b.cong(&eg_k, "I", "trans", &[m1, s2], None);

    // G = 1 + O(M^2): rounds r = 2..m−1 reach 1
    let mut rounds = Rounds {
        builder: &mut b,
        render: &render,
        k,
        k_inv: k_inv.clone(),
    };
    let (last, chain) = rounds.run(&g, 2..=t, gk)?;
    if !last.is_one() {
        return Err(Error::Internal(format!("rounds ended at {}", render.body(&last))));
    }
    let z = match chain {
        Some(z) => z,
        None => b.cong(&eg, "I", "refl", &[], None),
    };

    // cancel G: [I+kNX] ≡ I, then X -> X/k
    let ginv = g.trunc_inv()?;
    let eginv = e(&ginv);
    let rg = b.cong(&eginv, &eginv, "refl", &[], None);
    let x1 = b.cong(&eak, &eginv, "mul", &[a, rg], None);
    let x2 = b.cong("I", &eginv, "mul", &[z, rg], None);
    let x3 = b.cong(&eginv, "I", "symm", &[x2], None);
    let x4 = b.cong(&eak, "I", "trans", &[x1, x3], None);
    b.axiom_literal("[I+NX] ≡ I (mod T)".into(), &[x4], k_inv.to_bare_string());
    Ok(b.finish())
}
