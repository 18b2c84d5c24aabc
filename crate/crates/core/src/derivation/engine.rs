//! The round structure shared by the series and matrix derivations.
//!
//! Values live in `R_t`; a [`Render`] turns them into log text, either as
//! series in `X` or as polynomials in `M = NX`. One round takes
//! `g = 1 + M^r h` with a fact `[g^k] ≡ 1` and derives `[g] ≡ [g']` with
//! `g' = 1 + M^{r+1} h'`.

use num_bigint::BigUint;

use super::LogBuilder;
use crate::error::{Error, Result};
use crate::ring::{RingElem, TruncatedPoly};
use crate::series::lemma3_factor;

pub(crate) trait Render {
    /// Text of the identity.
    fn id(&self) -> &'static str;
    fn body(&self, p: &TruncatedPoly) -> String;

    /// Text safe to use as an operand of `*` and `^`.
    fn elem(&self, p: &TruncatedPoly) -> String {
        let b = self.body(p);
        if b.contains(' ') || b.starts_with('-') {
            format!("({b})")
        } else {
            b
        }
    }
}

pub(crate) struct SeriesRender;

impl Render for SeriesRender {
    fn id(&self) -> &'static str {
        "1"
    }
    fn body(&self, p: &TruncatedPoly) -> String {
        p.to_string()
    }
}

/// Renders `Σ c_i M^i` with `M = NX` for a named matrix `N`.
pub(crate) struct MatrixRender {
    pub symbol: char,
}

impl Render for MatrixRender {
    fn id(&self) -> &'static str {
        "I"
    }
    fn body(&self, p: &TruncatedPoly) -> String {
        let n = self.symbol;
        let mut out = String::new();
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => "I".to_string(),
                1 => format!("{n}X"),
                _ => format!("{n}^{i}X^{i}"),
            };
            let text = c.to_bare_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, text),
            };
            let term = if mag == "1" {
                mono
            } else if mag.contains(' ') {
                format!("({mag})*{mono}")
            } else {
                format!("{mag}*{mono}")
            };
            match (out.is_empty(), neg) {
                (true, false) => out = term,
                (true, true) => out = format!("-{term}"),
                (false, false) => out = format!("{out} + {term}"),
                (false, true) => out = format!("{out} - {term}"),
            }
        }
        if out.is_empty() {
            "0*I".into()
        } else {
            out
        }
    }
}

pub(crate) struct Rounds<'a, R: Render> {
    pub builder: &'a mut LogBuilder,
    pub render: &'a R,
    pub k: u64,
    pub k_inv: RingElem,
}

impl<R: Render> Rounds<'_, R> {
    fn e(&self, p: &TruncatedPoly) -> String {
        self.render.elem(p)
    }

    /// One round at level `r`; `fact` states `[g^k] ≡ 1`. Returns `g'` and
    /// the index of `[g] ≡ [g']`.
    pub(crate) fn round(&mut self, g: &TruncatedPoly, r: usize, fact: usize) -> Result<(TruncatedPoly, usize)> {
        let id = self.render.id();
        let base = g.base().clone();
        let t = g.t();
        let k_big = BigUint::from(self.k);
        let kr = k_big.pow(r as u32);

        let (c, q) = lemma3_factor(g, r)?;
        let a = TruncatedPoly::one_plus_monomial(&c, r, t);
        let tail = TruncatedPoly::one(&base, t).add(&q.shift(r + 1));
        let (eg, ea, etail) = (self.e(g), self.e(&a), self.e(&tail));
        let e1 = self.builder.exact(self.render.body(g), format!("{ea}*{etail}"))?;

        let g_kr = format!("{eg}^{kr}");
        let f2 = self
            .builder
            .cong(&g_kr, id, "pow", &[fact], Some(k_big.pow(r as u32 - 1).to_string()));

        let kr_elem = RingElem::from_int(&base, num_bigint::BigInt::from(kr.clone()));
        let a_k = TruncatedPoly::one_plus_monomial(&(&kr_elem * &c), r, t);
        let a_pow = a.pow(&kr);
        let a_k_inv = a_k.trunc_inv()?;
        let rem = a_pow.mul(&a_k_inv);
        let ea_k = self.e(&a_k);
        self.builder
            .exact(format!("{ea}^{kr}"), format!("{ea_k}*{}", self.e(&rem)))?;

        let u = rem.mul(&tail.pow(&kr));
        let eu = self.e(&u);
        let ak_u = format!("{ea_k}*{eu}");
        let e4 = self.builder.exact(g_kr.clone(), ak_u.clone())?;
        let c5 = self.builder.cong(&g_kr, &ak_u, "exact", &[e4], None);
        let c6 = self.builder.cong(&ak_u, &g_kr, "symm", &[c5], None);
        let c7 = self.builder.cong(&ak_u, id, "trans", &[c6, f2], None);

        let v = u.trunc_inv()?;
        let ev = self.e(&v);
        self.builder.exact(format!("{eu}*{ev}"), id.to_string())?;
        let c9 = self.builder.cong(&ev, &ev, "refl", &[], None);
        let c10 = self.builder.cong(&ea_k, &ev, "mul", &[c7, c9], None);

        let v_s = v.scale_x(&self.k_inv)?;
        let ev_s = self.e(&v_s);
        let a11 = self.builder.axiom(&ea, &ev_s, &[c10], self.k_inv.to_bare_string());

        let g_next = v_s.mul(&tail);
        if (1..=r.min(t)).any(|i| !g_next.coeff(i).is_zero()) {
            return Err(Error::Internal(format!("round {r} did not raise the order of {g}")));
        }
        let eg_next = self.e(&g_next);
        self.builder
            .exact(format!("{ev_s}*{etail}"), self.render.body(&g_next))?;
        let c13 = self.builder.cong(&etail, &etail, "refl", &[], None);
        let a_tail = format!("{ea}*{etail}");
        let c14 = self.builder.cong(&a_tail, &eg_next, "mul", &[a11, c13], None);
        let c15 = self.builder.cong(&eg, &a_tail, "exact", &[e1], None);
        let c16 = self.builder.cong(&eg, &eg_next, "trans", &[c15, c14], None);
        Ok((g_next, c16))
    }

    /// From `[g] ≡ [g']` (at `link`) and `[g^k] ≡ 1` (at `fact`), derives
    /// `[g'^k] ≡ 1`.
    pub(crate) fn carry(&mut self, g: &TruncatedPoly, g_next: &TruncatedPoly, link: usize, fact: usize) -> usize {
        let k = self.k;
        let (a, b) = (format!("{}^{k}", self.e(g)), format!("{}^{k}", self.e(g_next)));
        let p = self.builder.cong(&a, &b, "pow", &[link], Some(k.to_string()));
        let s = self.builder.cong(&b, &a, "symm", &[p], None);
        self.builder.cong(&b, self.render.id(), "trans", &[s, fact], None)
    }

    /// Runs rounds `levels` in order starting from `g`, returning the last
    /// value and the index of `[g] ≡ [last]` (`None` if no round ran).
    pub(crate) fn run(
        &mut self,
        g: &TruncatedPoly,
        levels: impl Iterator<Item = usize>,
        mut fact: usize,
    ) -> Result<(TruncatedPoly, Option<usize>)> {
        let start = self.e(g);
        let mut cur = g.clone();
        let mut chain: Option<usize> = None;
        let mut levels = levels.peekable();
        while let Some(r) = levels.next() {
            let (next, link) = self.round(&cur, r, fact)?;
            chain = Some(match chain {
                None => link,
                Some(c) => self.builder.cong(&start, &self.e(&next), "trans", &[c, link], None),
            });
            if levels.peek().is_some() {
                fact = self.carry(&cur, &next, link, fact);
            }
            cur = next;
        }
        Ok((cur, chain))
    }
}
