//! Graded elements and the homotopy `θ(a_0 + a_1 + ...) = a_0 + a_1 X + ...`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::{Monomial, Repr, RingDescriptor, RingElem, RingKind};

/// An element of a polynomial ring graded by total degree, split into its
/// homogeneous components (`components[i]` has degree `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElem {
    ring: RingDescriptor,
    components: Vec<RingElem>,
}

fn graded_vars(ring: &RingDescriptor) -> Result<usize> {
    match ring.kind() {
        RingKind::PolynomialQuotient { base, vars, .. }
            if matches!(
                base.kind(),
                RingKind::Integers | RingKind::Rationals | RingKind::ModularInteger(_)
            ) =>
        {
            Ok(vars.len())
        }
        _ => Err(Error::InvalidRing(format!(
            "{ring} is not a polynomial ring over Z, Q or Z/n"
        ))),
    }
}

/// Homogeneous parts of `a`, indexed by degree.
fn split(a: &Repr) -> Vec<Repr> {
    let mut parts: Vec<BTreeMap<Monomial, Repr>> = Vec::new();
    for (mono, c) in a.as_poly() {
        let d = mono.degree() as usize;
        if parts.len() <= d {
            parts.resize(d + 1, BTreeMap::new());
        }
        parts[d].insert(mono.clone(), c.clone());
    }
    parts.into_iter().map(Repr::Poly).collect()
}

impl GradedElem {
    pub fn from_components(ring: &RingDescriptor, components: Vec<RingElem>) -> Result<Self> {
        graded_vars(ring)?;
        for (i, c) in components.iter().enumerate() {
            if c.ring() != ring {
                return Err(Error::MixedRings(c.ring().to_string(), ring.to_string()));
            }
            if let Some(mono) = c.repr().as_poly().keys().find(|m| m.degree() as usize != i) {
                return Err(Error::NotHomogeneous(format!(
                    "component {i} has a term of degree {}",
                    mono.degree()
                )));
            }
        }
        Ok(GradedElem {
            ring: ring.clone(),
            components,
        })
    }

    pub fn from_elem(a: &RingElem) -> Result<Self> {
        graded_vars(a.ring())?;
        let ring = a.ring().clone();
        let components = split(a.repr())
            .into_iter()
            .map(|r| RingElem::from_repr(ring.clone(), r))
            .collect();
        Ok(GradedElem { ring, components })
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn components(&self) -> &[RingElem] {
        &self.components
    }

    pub fn to_elem(&self) -> RingElem {
        self.components
            .iter()
            .fold(RingElem::zero(&self.ring), |acc, c| &acc + c)
    }

    pub fn add(&self, other: &GradedElem) -> Result<GradedElem> {
        Self::from_elem(&self.to_elem().checked_add(&other.to_elem())?)
    }

    pub fn mul(&self, other: &GradedElem) -> Result<GradedElem> {
        Self::from_elem(&self.to_elem().checked_mul(&other.to_elem())?)
    }
}

/// The ring `θ` lands in: `ring[X]`, or `ring[T]` when `X` is taken.
pub fn theta_ring(ring: &RingDescriptor) -> Result<RingDescriptor> {
    let var = if ring.var("X").is_some() { "T" } else { "X" };
    RingDescriptor::polynomial(ring, &[var])
}

pub fn swan_weibel_theta(a: &GradedElem) -> Result<RingElem> {
    let target = theta_ring(&a.ring)?;
    let mut terms = BTreeMap::new();
    for (i, c) in a.components.iter().enumerate() {
        if !c.is_zero() {
            terms.insert(Monomial(vec![i as u32]), c.repr().clone());
        }
    }
    Ok(RingElem::from_repr(target, Repr::Poly(terms)))
}

/// Substitutes 1 for the variable of a one-variable polynomial ring.
pub fn evaluate_at_one(p: &RingElem) -> Result<RingElem> {
    match p.ring().kind() {
        RingKind::PolynomialQuotient { base, vars, .. } if vars.len() == 1 => {
            let sum = p
                .repr()
                .as_poly()
                .values()
                .fold(base.zero(), |acc, c| base.add(&acc, c));
            Ok(RingElem::from_repr(base.clone(), sum))
        }
        _ => Err(Error::InvalidRing(format!(
            "{} is not a one-variable polynomial ring",
            p.ring()
        ))),
    }
}
