//! Sparse multivariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Variable names used at the text boundary, e.g. `zeta1, zeta2, y1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarNames {
    names: Vec<String>,
}

impl VarNames {
    /// `prefix1, ..., prefix{count}`.
    pub fn role(prefix: &str, count: usize) -> Self {
        VarNames::joint(&[(prefix, count)])
    }

    /// Concatenation of several role blocks, each numbered from 1.
    pub fn joint(blocks: &[(&str, usize)]) -> Self {
        let mut names = Vec::new();
        for (prefix, count) in blocks {
            for i in 1..=*count {
                names.push(format!("{prefix}{i}"));
            }
        }
        VarNames { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A polynomial in a fixed number of variables. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::term(Monomial::one(arity), c)
    }

    pub fn var(arity: usize, i: usize) -> Self {
        Self::term(Monomial::var(arity, i), Rational::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero(m.arity());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(arity);
        for (m, c) in terms {
            assert_eq!(m.arity(), arity, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term in graded-lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Returns the constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.arity(), self.arity);
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, c: &Rational) {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    /// Exact product; fails on arity mismatch.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        let mut out = Polynomial::zero(self.arity);
        for (m, a) in &self.terms {
            for (k, b) in &other.terms {
                out.add_term(m.mul(k), a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.arity);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e > 0 {
                out.add_term(m.with_exp(i, e - 1), c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Mixed partial derivative `∂^d`.
    pub fn derivative_multi(&self, d: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in &self.terms {
            if let Some(q) = m.div(d) {
                let mut f = c.clone();
                for (i, &di) in d.exps().iter().enumerate() {
                    for t in 0..di {
                        f *= Rational::from_integer((m.exp(i) - t).into());
                    }
                }
                out.add_term(q, f);
            }
        }
        out
    }

    /// Sets variable `i` to zero and removes it from the ring.
    pub fn restrict_zero(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.arity - 1);
        for (m, c) in &self.terms {
            if m.exp(i) == 0 {
                out.add_term(m.remove(i), c.clone());
            }
        }
        out
    }

    /// Moves the polynomial into a ring of arity `arity`, its variables
    /// occupying positions `offset..offset+self.arity()`.
    pub fn embed(&self, offset: usize, arity: usize) -> Polynomial {
        assert!(offset + self.arity <= arity, "embedding out of range");
        Polynomial {
            arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.embed(offset, arity), c.clone()))
                .collect(),
        }
    }

    /// Substitutes rational values for all variables.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.arity);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Canonical text, leading term first: `zeta1^2 + 2*zeta1*zeta2 - 1/2`.
    pub fn to_text(&self, names: &VarNames) -> String {
        assert_eq!(names.len(), self.arity, "variable names do not match arity");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let factors: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names.name(i).to_string()
                    } else {
                        format!("{}^{}", names.name(i), e)
                    }
                })
                .collect();
            write_term(&mut out, k == 0, c, &factors);
        }
        out
    }

    /// Parses the canonical text form produced by [`Polynomial::to_text`].
    pub fn parse(text: &str, names: &VarNames) -> Result<Polynomial> {
        let arity = names.len();
        let mut p = Polynomial::zero(arity);
        for (c, factors) in split_terms(text)? {
            let mut exps = vec![0u32; arity];
            for (name, e) in factors {
                let i = names
                    .index_of(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                exps[i] += e;
            }
            p.add_term(Monomial::new(exps), c);
        }
        Ok(p)
    }
}

/// Appends one signed term to a sum being printed.
pub(crate) fn write_term(out: &mut String, first: bool, c: &Rational, factors: &[String]) {
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let a = c.abs();
    if factors.is_empty() {
        out.push_str(&format_rational(&a));
    } else {
        if !a.is_one() {
            out.push_str(&format_rational(&a));
            out.push('*');
        }
        out.push_str(&factors.join("*"));
    }
}

/// One parsed product: a coefficient and `(name, exponent)` factors.
pub(crate) type RawTerm = (Rational, Vec<(String, u32)>);

/// Splits a sum of products into terms.
pub(crate) fn split_terms(text: &str) -> Result<Vec<RawTerm>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    if s == "0" {
        return Ok(Vec::new());
    }
    let mut pieces = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'*' | b'^' | b'/') {
            pieces.push(&s[start..i]);
            start = i;
        }
    }
    pieces.push(&s[start..]);
    let mut out = Vec::new();
    for piece in pieces {
        let (neg, body) = match piece.as_bytes()[0] {
            b'-' => (true, &piece[1..]),
            b'+' => (false, &piece[1..]),
            _ => (false, piece),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {text:?}")));
        }
        let mut c = Rational::one();
        let mut factors = Vec::new();
        for f in body.split('*') {
            if f.is_empty() {
                return Err(Error::Parse(format!("empty factor in {text:?}")));
            }
            if f.as_bytes()[0].is_ascii_digit() {
                c *= parse_rational(f)?;
            } else {
                let (name, e) = match f.split_once('^') {
                    Some((n, e)) => {
                        let e: u32 = e
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent in {f:?}")))?;
                        (n, e)
                    }
                    None => (f, 1),
                };
                factors.push((name.to_string(), e));
            }
        }
        if neg {
            c = -c;
        }
        out.push((c, factors));
    }
    Ok(out)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&VarNames::role("x", self.arity)))
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs)
            .expect("arity mismatch in polynomial product")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// Exact product of two polynomials of equal arity.
pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.checked_mul(b)
}
