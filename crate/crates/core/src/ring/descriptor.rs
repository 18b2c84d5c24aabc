use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Structural description of an exact commutative ring with identity.
///
/// Descriptors are cheap to clone and compare structurally. The compact text
/// form is `Z`, `Q`, `Z/8`, `Z/2[X,Y]`, `Z[X,Y]/(X^3)`, `Z/5[X]/(X^4)`,
/// `Z/2[Y][X]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingDescriptor(Arc<RingKind>);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    Rationals,
    ModularInteger(BigInt),
    /// `base[vars]`, optionally modulo `var^e` for some variables.
    PolynomialQuotient {
        base: RingDescriptor,
        vars: Vec<String>,
        truncation: Vec<Option<u32>>,
    },
    /// `base[X]/(X^{t+1})`.
    Truncated {
        base: RingDescriptor,
        t: usize,
    },
}

impl RingDescriptor {
    fn from_kind(kind: RingKind) -> Self {
        RingDescriptor(Arc::new(kind))
    }

    pub fn integers() -> Self {
        Self::from_kind(RingKind::Integers)
    }

    pub fn rationals() -> Self {
        Self::from_kind(RingKind::Rationals)
    }

    pub fn modular(modulus: impl Into<BigInt>) -> Result<Self> {
        let modulus = modulus.into();
        if modulus < BigInt::from(2) {
            return Err(Error::InvalidRing(format!("modulus must be at least 2, got {modulus}")));
        }
        Ok(Self::from_kind(RingKind::ModularInteger(modulus)))
    }

    /// The polynomial ring `base[vars]` with no truncation.
    pub fn polynomial(base: &RingDescriptor, vars: &[&str]) -> Result<Self> {
        Self::polynomial_quotient(base, vars, &vec![None; vars.len()])
    }

    /// `base[vars]` modulo the monomials `var^e` for every `Some(e)`.
    ///
    /// A single variable `X` with a truncation is normalised to
    /// [`RingKind::Truncated`], so both spellings compare equal.
    pub fn polynomial_quotient(base: &RingDescriptor, vars: &[&str], truncation: &[Option<u32>]) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("polynomial ring needs a variable".into()));
        }
        if vars.len() != truncation.len() {
            return Err(Error::InvalidRing(
                "one truncation entry per variable is required".into(),
            ));
        }
        for (i, v) in vars.iter().enumerate() {
            let mut chars = v.chars();
            let ok = matches!((chars.next(), chars.next()), (Some(c), None) if c.is_ascii_alphabetic());
            if !ok || *v == "I" {
                return Err(Error::InvalidRing(format!(
                    "variable names are single letters other than I, got {v:?}"
                )));
            }
            if vars[..i].contains(v) || base.has_var(v) {
                return Err(Error::InvalidRing(format!("variable {v} is used twice")));
            }
        }
        if truncation.contains(&Some(0)) {
            return Err(Error::InvalidRing("truncation exponents must be positive".into()));
        }
        if vars == ["X"] {
            if let Some(e) = truncation[0] {
                return Ok(Self::truncated(base, e as usize - 1));
            }
        }
        Ok(Self::from_kind(RingKind::PolynomialQuotient {
            base: base.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
            truncation: truncation.to_vec(),
        }))
    }

    /// `R_t = base[X]/(X^{t+1})`.
    pub fn truncated(base: &RingDescriptor, t: usize) -> Self {
        Self::from_kind(RingKind::Truncated { base: base.clone(), t })
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    /// Coefficient ring of a polynomial or truncated ring.
    pub fn base(&self) -> Option<&RingDescriptor> {
        match self.kind() {
            RingKind::PolynomialQuotient { base, .. } | RingKind::Truncated { base, .. } => Some(base),
            _ => None,
        }
    }

    /// Truncation order `t` of `R_t`.
    pub fn truncation_order(&self) -> Option<usize> {
        match self.kind() {
            RingKind::Truncated { t, .. } => Some(*t),
            _ => None,
        }
    }

    pub(crate) fn has_var(&self, name: &str) -> bool {
        match self.kind() {
            RingKind::PolynomialQuotient { base, vars, .. } => vars.iter().any(|v| v == name) || base.has_var(name),
            RingKind::Truncated { base, .. } => name == "X" || base.has_var(name),
            _ => false,
        }
    }

    /// The `Z/n` at the bottom of a tower of polynomial constructions.
    pub(crate) fn scalar_modulus(&self) -> Option<&BigInt> {
        match self.kind() {
            RingKind::ModularInteger(n) => Some(n),
            RingKind::PolynomialQuotient { base, .. } | RingKind::Truncated { base, .. } => base.scalar_modulus(),
            _ => None,
        }
    }

    /// Whether the ring is known to have no nonzero nilpotents.
    pub(crate) fn is_reduced(&self) -> bool {
        match self.kind() {
            RingKind::Integers | RingKind::Rationals => true,
            RingKind::ModularInteger(n) => is_squarefree(n),
            RingKind::PolynomialQuotient { base, truncation, .. } => {
                base.is_reduced() && truncation.iter().all(|e| e.is_none_or(|e| e == 1))
            }
            RingKind::Truncated { base, t } => *t == 0 && base.is_reduced(),
        }
    }

    /// Number of elements, for finite rings small enough to enumerate.
    pub fn cardinality(&self) -> Option<BigInt> {
        match self.kind() {
            RingKind::ModularInteger(n) => Some(n.clone()),
            RingKind::Truncated { base, t } => base.cardinality().map(|c| num_traits::pow(c, t + 1)),
            _ => None,
        }
    }
}

fn is_squarefree(n: &BigInt) -> bool {
    let mut n = n.abs();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            n /= &p;
            if (&n % &p).is_zero() {
                return false;
            }
        }
        p += BigInt::one();
    }
    true
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            RingKind::Integers => write!(f, "Z"),
            RingKind::Rationals => write!(f, "Q"),
            RingKind::ModularInteger(n) => write!(f, "Z/{n}"),
            RingKind::PolynomialQuotient { base, vars, truncation } => {
                write!(f, "{base}[{}]", vars.join(","))?;
                let parts: Vec<String> = vars
                    .iter()
                    .zip(truncation)
                    .filter_map(|(v, e)| e.map(|e| format!("{v}^{e}")))
                    .collect();
                if !parts.is_empty() {
                    write!(f, "/({})", parts.join(","))?;
                }
                Ok(())
            }
            RingKind::Truncated { base, t } => write!(f, "{base}[X]/(X^{})", t + 1),
        }
    }
}

impl fmt::Debug for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingDescriptor({self})")
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = DescParser { chars, pos: 0 };
        let ring = p.desc()?;
        if p.pos != p.chars.len() {
            return Err(p.err("trailing input"));
        }
        Ok(ring)
    }
}

struct DescParser {
    chars: Vec<char>,
    pos: usize,
}

impl DescParser {
    fn err(&self, what: &str) -> Error {
        let rest: String = self.chars[self.pos.min(self.chars.len())..].iter().collect();
        Error::Parse(format!("ring descriptor: {what} at {rest:?}"))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("digits"))
    }

    fn var(&mut self) -> Result<String> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                Ok(c.to_string())
            }
            _ => Err(self.err("expected a variable name")),
        }
    }

    fn desc(&mut self) -> Result<RingDescriptor> {
        let mut ring = match self.peek() {
            Some('Z') => {
                self.pos += 1;
                if self.peek() == Some('/') && self.chars.get(self.pos + 1) != Some(&'(') {
                    self.pos += 1;
                    RingDescriptor::modular(self.int()?)?
                } else {
                    RingDescriptor::integers()
                }
            }
            Some('Q') => {
                self.pos += 1;
                RingDescriptor::rationals()
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.desc()?;
                self.expect(')')?;
                inner
            }
            _ => return Err(self.err("expected Z, Q, Z/n or a parenthesised ring")),
        };
        while self.eat('[') {
            let mut vars = vec![self.var()?];
            while self.eat(',') {
                vars.push(self.var()?);
            }
            self.expect(']')?;
            let mut trunc = vec![None; vars.len()];
            if self.peek() == Some('/') && self.chars.get(self.pos + 1) == Some(&'(') {
                self.pos += 2;
                loop {
                    let v = self.var()?;
                    self.expect('^')?;
                    let e: u32 = self
                        .int()?
                        .try_into()
                        .map_err(|_| self.err("truncation exponent too large"))?;
                    let idx = vars
                        .iter()
                        .position(|x| *x == v)
                        .ok_or_else(|| self.err(&format!("unknown variable {v}")))?;
                    if trunc[idx].is_some() {
                        return Err(self.err(&format!("variable {v} truncated twice")));
                    }
                    trunc[idx] = Some(e);
                    if !self.eat(',') {
                        break;
                    }
                }
                self.expect(')')?;
            }
            let names: Vec<&str> = vars.iter().map(String::as_str).collect();
            ring = RingDescriptor::polynomial_quotient(&ring, &names, &trunc)?;
        }
        Ok(ring)
    }
}
