//! Text grammar for ring elements, polynomials, matrices and the
//! expressions that appear in derivation logs.
//!
//! ```text
//! expr  := ['-'] term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary | power)*      juxtaposition multiplies
//! unary := '-' unary | power
//! power := atom ('^' INT)*
//! atom  := INT ['mod' INT] | LETTER | '(' expr ')' | '[' expr ']'
//!        | '[' '[' expr, ... ']' (',' '[' expr, ... ']')* ']'
//! ```
//!
//! Letters are single-character symbols, so `NX` reads as `N*X`. `I` is the
//! identity matrix when a matrix size is in scope; other letters are ring
//! variables or named matrices from the environment.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::ring::{Repr, RingDescriptor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Expr {
    Int(BigInt),
    ModLit(BigInt, BigInt),
    Symbol(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, BigUint),
    Matrix(Vec<Vec<Expr>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Sym(char),
    Mod,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Int(digits.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if word == "mod" {
                out.push(Tok::Mod);
            } else {
                out.extend(word.chars().map(Tok::Sym));
            }
        } else if "+-*/^()[],".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    src: String,
}

impl Parser {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} (token {}) in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn peek_op(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Op(c))
    }

    fn eat_op(&mut self, c: char) -> bool {
        if self.peek_op(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_op(&mut self, c: char) -> Result<()> {
        if self.eat_op(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_)) | Some(Tok::Sym(_)) | Some(Tok::Op('(')) | Some(Tok::Op('['))
        )
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_op('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_op('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat_op('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat_op('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if self.starts_atom() {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_op('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let mut base = self.atom()?;
        while self.eat_op('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let e = n.to_biguint().ok_or_else(|| self.err("negative exponent"))?;
                    base = Expr::Pow(Box::new(base), e);
                }
                _ => return Err(self.err("expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Mod) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(m)) => {
                            self.pos += 1;
                            Ok(Expr::ModLit(n, m))
                        }
                        _ => Err(self.err("expected modulus after 'mod'")),
                    }
                } else {
                    Ok(Expr::Int(n))
                }
            }
            Some(Tok::Sym(c)) => {
                self.pos += 1;
                Ok(Expr::Symbol(c))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_op(')')?;
                Ok(e)
            }
            Some(Tok::Op('[')) => {
                self.pos += 1;
                if self.peek_op('[') {
                    let mut rows = vec![self.row()?];
                    while self.eat_op(',') {
                        rows.push(self.row()?);
                    }
                    self.expect_op(']')?;
                    Ok(Expr::Matrix(rows))
                } else {
                    let e = self.expr()?;
                    self.expect_op(']')?;
                    Ok(e)
                }
            }
            _ => Err(self.err("expected a number, symbol or bracket")),
        }
    }

    fn row(&mut self) -> Result<Vec<Expr>> {
        self.expect_op('[')?;
        let mut items = vec![self.expr()?];
        while self.eat_op(',') {
            items.push(self.expr()?);
        }
        self.expect_op(']')?;
        Ok(items)
    }
}

pub(crate) fn parse(s: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
        src: s.to_string(),
    };
    if p.toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Result of evaluating an expression: a ring element or a matrix over the
/// ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Value {
    Scalar(Repr),
    Matrix(Mat<Repr>),
}

/// Evaluation scope: the ring, the size of `I` (if matrices are in play) and
/// named matrices.
pub(crate) struct Env<'a> {
    pub ring: &'a RingDescriptor,
    pub size: Option<usize>,
    pub matrices: BTreeMap<char, Mat<Repr>>,
}

impl<'a> Env<'a> {
    pub(crate) fn scalar(ring: &'a RingDescriptor) -> Self {
        Env {
            ring,
            size: None,
            matrices: BTreeMap::new(),
        }
    }

    fn shape_err(&self, what: &str) -> Error {
        Error::SizeMismatch(what.to_string())
    }

    pub(crate) fn eval(&self, e: &Expr) -> Result<Value> {
        let r = self.ring;
        match e {
            Expr::Int(n) => Ok(Value::Scalar(r.from_int(n))),
            Expr::ModLit(n, m) => match r.scalar_modulus() {
                Some(modulus) if modulus == m => Ok(Value::Scalar(r.from_int(n))),
                _ => Err(Error::Parse(format!("literal {n} mod {m} does not belong to {r}"))),
            },
            Expr::Symbol(c) => {
                if let Some(m) = self.matrices.get(c) {
                    return Ok(Value::Matrix(m.clone()));
                }
                if *c == 'I' {
                    return match self.size {
                        Some(n) => Ok(Value::Matrix(linalg::identity(r, n))),
                        None => Ok(Value::Scalar(r.one())),
                    };
                }
                r.var(&c.to_string())
                    .map(Value::Scalar)
                    .ok_or_else(|| Error::Parse(format!("unknown symbol {c} in {r}")))
            }
            Expr::Neg(a) => Ok(match self.eval(a)? {
                Value::Scalar(x) => Value::Scalar(r.neg(&x)),
                Value::Matrix(m) => Value::Matrix(linalg::neg(r, &m)),
            }),
            Expr::Add(a, b) => self.add(self.eval(a)?, self.eval(b)?),
            Expr::Sub(a, b) => {
                let nb = self.eval(&Expr::Neg(b.clone()))?;
                self.add(self.eval(a)?, nb)
            }
            Expr::Mul(a, b) => self.mul(self.eval(a)?, self.eval(b)?),
            Expr::Div(a, b) => match self.eval(b)? {
                Value::Scalar(d) => {
                    let inv = r.inv(&d)?;
                    self.mul(self.eval(a)?, Value::Scalar(inv))
                }
                Value::Matrix(_) => Err(Error::NotSupported("division by a matrix".into())),
            },
            Expr::Pow(a, e) => Ok(match self.eval(a)? {
                Value::Scalar(x) => Value::Scalar(r.pow(&x, e)),
                Value::Matrix(m) => {
                    if !linalg::is_square(&m) {
                        return Err(self.shape_err("power of a non-square matrix"));
                    }
                    Value::Matrix(linalg::pow(r, &m, e))
                }
            }),
            Expr::Matrix(rows) => {
                let width = rows[0].len();
                let mut out = Vec::with_capacity(rows.len());
                for row in rows {
                    if row.len() != width {
                        return Err(self.shape_err("ragged matrix literal"));
                    }
                    let mut vals = Vec::with_capacity(width);
                    for item in row {
                        match self.eval(item)? {
                            Value::Scalar(x) => vals.push(x),
                            Value::Matrix(_) => return Err(Error::Parse("matrix entries must be scalars".into())),
                        }
                    }
                    out.push(vals);
                }
                Ok(Value::Matrix(out))
            }
        }
    }

    fn add(&self, a: Value, b: Value) -> Result<Value> {
        let r = self.ring;
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(r.add(&x, &y))),
            (Value::Matrix(x), Value::Matrix(y)) => {
                if x.len() != y.len() || x[0].len() != y[0].len() {
                    return Err(self.shape_err("sum of matrices of different shapes"));
                }
                Ok(Value::Matrix(linalg::add(r, &x, &y)))
            }
            (Value::Scalar(s), Value::Matrix(m)) | (Value::Matrix(m), Value::Scalar(s)) => {
                if !linalg::is_square(&m) {
                    return Err(self.shape_err("scalar plus non-square matrix"));
                }
                let si = linalg::scalar_matrix(r, m.len(), &s);
                Ok(Value::Matrix(linalg::add(r, &si, &m)))
            }
        }
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value> {
        let r = self.ring;
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(r.mul(&x, &y))),
            (Value::Matrix(x), Value::Matrix(y)) => {
                if x[0].len() != y.len() {
                    return Err(self.shape_err("product of incompatible matrices"));
                }
                Ok(Value::Matrix(linalg::mul(r, &x, &y)))
            }
            (Value::Scalar(s), Value::Matrix(m)) | (Value::Matrix(m), Value::Scalar(s)) => {
                Ok(Value::Matrix(linalg::scale(r, &s, &m)))
            }
        }
    }

    pub(crate) fn eval_str(&self, s: &str) -> Result<Value> {
        self.eval(&parse(s)?)
    }

    /// Evaluates and promotes scalars to scalar matrices when a size is in
    /// scope, so that `1` and `I` compare equal.
    pub(crate) fn eval_normalized(&self, s: &str) -> Result<Value> {
        match (self.eval_str(s)?, self.size) {
            (Value::Scalar(x), Some(n)) => Ok(Value::Matrix(linalg::scalar_matrix(self.ring, n, &x))),
            (v, _) => Ok(v),
        }
    }
}
