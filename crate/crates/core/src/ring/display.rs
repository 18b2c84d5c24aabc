use num_traits::One;

use super::descriptor::{RingDescriptor, RingKind};
use super::repr::{Monomial, Repr};

impl RingDescriptor {
    /// Text form of `a` in the element grammar. Top-level residues carry a
    /// `mod n` suffix; coefficients inside polynomials do not.
    pub(crate) fn render(&self, a: &Repr) -> String {
        match self.kind() {
            RingKind::ModularInteger(m) => format!("{} mod {m}", a.as_int()),
            _ => self.render_bare(a),
        }
    }

    pub(crate) fn render_bare(&self, a: &Repr) -> String {
        match self.kind() {
            RingKind::Integers | RingKind::ModularInteger(_) => a.as_int().to_string(),
            RingKind::Rationals => {
                let q = a.as_rat();
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            RingKind::PolynomialQuotient { base, vars, .. } => {
                let terms = a.as_poly().iter().map(|(mono, c)| (monomial_text(vars, mono), c));
                join_terms(base, terms)
            }
            RingKind::Truncated { base, .. } => {
                let vars = ["X".to_string()];
                let terms = a
                    .as_dense()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !base.is_zero(c))
                    .map(|(i, c)| (monomial_text(&vars, &Monomial(vec![i as u32])), c));
                join_terms(base, terms)
            }
        }
    }
}

fn monomial_text(vars: &[String], mono: &Monomial) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(&mono.0)
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    parts.join("*")
}

fn is_compound(s: &str) -> bool {
    s[1..].contains(" + ") || s[1..].contains(" - ")
}

fn join_terms<'a>(base: &RingDescriptor, terms: impl Iterator<Item = (String, &'a Repr)>) -> String {
    let mut out = String::new();
    for (mono, c) in terms {
        let coeff = base.render_bare(c);
        let term = if mono.is_empty() {
            if is_compound(&coeff) {
                format!("({coeff})")
            } else {
                coeff
            }
        } else if base.is_one(c) {
            mono
        } else if base.is_one(&base.neg(c)) && !matches!(base.kind(), RingKind::ModularInteger(_)) {
            format!("-{mono}")
        } else if is_compound(&coeff) {
            format!("({coeff})*{mono}")
        } else {
            format!("{coeff}*{mono}")
        };
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
