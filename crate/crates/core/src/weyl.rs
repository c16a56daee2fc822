//! Weyl algebra of polynomial-coefficient differential operators, its
//! algebraic Fourier transform and the symbol map.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{
    binomial, int, split_terms, write_term, Monomial, Polynomial, Rational, VarNames,
};
use crate::error::{Error, Result};

/// `sum_b c_b(x) d^b` in normal order (coefficients left of derivatives).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElement {
    arity: usize,
    terms: BTreeMap<Monomial, Polynomial>,
}

impl WeylElement {
    pub fn zero(arity: usize) -> Self {
        WeylElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(arity: usize) -> Self {
        WeylElement::multiplication(Polynomial::one(arity))
    }

    pub fn scalar(arity: usize, c: Rational) -> Self {
        WeylElement::multiplication(Polynomial::constant(arity, c))
    }

    /// Multiplication by `p`.
    pub fn multiplication(p: Polynomial) -> Self {
        let arity = p.arity();
        WeylElement::term(p, Monomial::one(arity))
    }

    /// `p(x) d^d`.
    pub fn term(p: Polynomial, d: Monomial) -> Self {
        let arity = p.arity();
        assert_eq!(d.arity(), arity, "derivative arity");
        let mut w = WeylElement::zero(arity);
        w.add_term(d, &p);
        w
    }

    /// `d/dx_i`.
    pub fn derivative(arity: usize, i: usize) -> Self {
        WeylElement::term(Polynomial::one(arity), Monomial::var(arity, i))
    }

    /// Multiplication by `x_i`.
    pub fn variable(arity: usize, i: usize) -> Self {
        WeylElement::multiplication(Polynomial::var(arity, i))
    }

    /// Euler operator `theta_i = x_i d/dx_i`.
    pub fn theta(arity: usize, i: usize) -> Self {
        WeylElement::term(Polynomial::var(arity, i), Monomial::var(arity, i))
    }

    /// Euler homogeneity operator over the variable range `vars`.
    pub fn euler(arity: usize, vars: std::ops::Range<usize>) -> Self {
        let mut e = WeylElement::zero(arity);
        for i in vars {
            e = e.add(&WeylElement::theta(arity, i));
        }
        e
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(derivative multidegree, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Polynomial)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &Monomial) -> Polynomial {
        self.terms
            .get(d)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.arity))
    }

    /// Highest derivative order occurring.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, d: Monomial, p: &Polynomial) {
        if p.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(d.clone())
            .or_insert_with(|| Polynomial::zero(p.arity()));
        slot.add_scaled(p, &Rational::one());
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = self.clone();
        for (d, p) in &other.terms {
            out.add_term(d.clone(), p);
        }
        out
    }

    pub fn sub(&self, other: &WeylElement) -> WeylElement {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> WeylElement {
        if c.is_zero() {
            return WeylElement::zero(self.arity);
        }
        WeylElement {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(d, p)| (d.clone(), p.scale(c)))
                .collect(),
        }
    }

    /// Left multiplication by a polynomial: `p * D`.
    pub fn left_mul(&self, p: &Polynomial) -> WeylElement {
        let mut out = WeylElement::zero(self.arity);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), &(p * c));
        }
        out
    }

    fn check(&self, arity: usize) -> Result<()> {
        if self.arity != arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: arity,
            });
        }
        Ok(())
    }

    /// Applies the operator to a polynomial.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check(p.arity())?;
        let mut out = Polynomial::zero(self.arity);
        for (d, c) in &self.terms {
            let dp = p.derivative_multi(d);
            if !dp.is_zero() {
                out.add_scaled(&(c * &dp), &Rational::one());
            }
        }
        Ok(out)
    }

    /// Normal-ordered product `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check(other.arity)?;
        let mut out = WeylElement::zero(self.arity);
        for (b, a) in &self.terms {
            for (k, weight) in sub_indices(b) {
                let rest = b.div(&k).unwrap();
                for (d, c) in &other.terms {
                    let dc = c.derivative_multi(&k);
                    if dc.is_zero() {
                        continue;
                    }
                    let coef = (a * &dc).scale(&weight);
                    out.add_term(rest.mul(d), &coef);
                }
            }
        }
        Ok(out)
    }

    /// `[self, other] = self ∘ other - other ∘ self`.
    pub fn commutator(&self, other: &WeylElement) -> Result<WeylElement> {
        Ok(self.compose(other)?.sub(&other.compose(self)?))
    }

    /// Algebraic Fourier transform: `d/dz_i -> -zeta_i`, `z_i -> d/dzeta_i`.
    pub fn fourier(&self) -> WeylElement {
        self.fourier_partial(0..self.arity)
    }

    /// Fourier transform in the variables of `vars` only; the remaining
    /// variables are left untouched.
    pub fn fourier_partial(&self, vars: std::ops::Range<usize>) -> WeylElement {
        let n = self.arity;
        let mut out = WeylElement::zero(n);
        for (b, c) in &self.terms {
            let mut b_kept = vec![0u32; n];
            let mut b_moved = vec![0u32; n];
            for i in 0..n {
                if vars.contains(&i) {
                    b_moved[i] = b.exp(i);
                } else {
                    b_kept[i] = b.exp(i);
                }
            }
            let b_moved = Monomial::new(b_moved);
            let sign = if b_moved.degree().is_multiple_of(2) {
                int(1)
            } else {
                int(-1)
            };
            let right = WeylElement::term(Polynomial::term(b_moved, sign), Monomial::new(b_kept));
            for (a, coef) in c.terms() {
                let mut a_kept = vec![0u32; n];
                let mut a_moved = vec![0u32; n];
                for i in 0..n {
                    if vars.contains(&i) {
                        a_moved[i] = a.exp(i);
                    } else {
                        a_kept[i] = a.exp(i);
                    }
                }
                let left = WeylElement::term(
                    Polynomial::term(Monomial::new(a_kept), coef.clone()),
                    Monomial::new(a_moved),
                );
                out = out.add(&left.compose(&right).unwrap());
            }
        }
        out
    }

    pub fn is_constant_coefficient(&self) -> bool {
        self.terms.values().all(|p| p.as_constant().is_some())
    }

    /// Symbol of a constant-coefficient operator: `d/dz_i -> zeta_i`.
    pub fn symb(&self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.arity);
        for (d, p) in &self.terms {
            let c = p.as_constant().ok_or(Error::NonConstantCoefficient)?;
            out.add_term(d.clone(), c);
        }
        Ok(out)
    }

    /// Constant-coefficient operator with the given symbol.
    pub fn symb_inverse(p: &Polynomial) -> WeylElement {
        let mut out = WeylElement::zero(p.arity());
        for (m, c) in p.terms() {
            out.add_term(m.clone(), &Polynomial::constant(p.arity(), c.clone()));
        }
        out
    }

    /// Moves the operator into a ring of arity `arity` at variable offset `offset`.
    pub fn embed(&self, offset: usize, arity: usize) -> WeylElement {
        WeylElement {
            arity,
            terms: self
                .terms
                .iter()
                .map(|(d, p)| (d.embed(offset, arity), p.embed(offset, arity)))
                .collect(),
        }
    }

    /// Text form with coefficient variables from `names` and `d<i>` for
    /// `d/d(variable i)`.
    pub fn to_text(&self, names: &VarNames) -> String {
        assert_eq!(names.len(), self.arity);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (d, p) in self.terms.iter().rev() {
            let dfactors: Vec<String> = d
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("d{}", i + 1)
                    } else {
                        format!("d{}^{e}", i + 1)
                    }
                })
                .collect();
            for (m, c) in p.terms().rev() {
                let mut factors: Vec<String> = m
                    .exps()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            names.name(i).to_string()
                        } else {
                            format!("{}^{e}", names.name(i))
                        }
                    })
                    .collect();
                factors.extend(dfactors.iter().cloned());
                write_term(&mut out, first, c, &factors);
                first = false;
            }
        }
        out
    }

    /// Parses the text form of [`WeylElement::to_text`].
    pub fn parse(text: &str, names: &VarNames) -> Result<WeylElement> {
        let n = names.len();
        let mut out = WeylElement::zero(n);
        for (c, factors) in split_terms(text)? {
            let mut a = vec![0u32; n];
            let mut b = vec![0u32; n];
            for (name, e) in factors {
                if let Some(i) = names.index_of(&name) {
                    a[i] += e;
                    continue;
                }
                let idx = name
                    .strip_prefix('d')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|&i| (1..=n).contains(&i))
                    .ok_or_else(|| Error::Parse(format!("unknown symbol {name:?}")))?;
                b[idx - 1] += e;
            }
            out.add_term(Monomial::new(b), &Polynomial::term(Monomial::new(a), c));
        }
        Ok(out)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&VarNames::role("z", self.arity)))
    }
}

/// All `k <= b` with the weight `prod_i C(b_i, k_i)`.
fn sub_indices(b: &Monomial) -> Vec<(Monomial, Rational)> {
    let mut out = vec![(Vec::new(), Rational::one())];
    for &e in b.exps() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for (prefix, w) in &out {
            for k in 0..=e {
                let mut p = prefix.clone();
                p.push(k);
                next.push((
                    p,
                    w * Rational::from_integer(binomial(e as u64, k as u64).into()),
                ));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(v, w)| (Monomial::new(v), w))
        .collect()
}

/// Applies `d` to `p`.
pub fn weyl_apply(d: &WeylElement, p: &Polynomial) -> Result<Polynomial> {
    d.apply(p)
}

/// `a ∘ b` in normal order.
pub fn weyl_compose(a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
    a.compose(b)
}

/// Algebraic Fourier transform of `d`.
pub fn fourier(d: &WeylElement) -> WeylElement {
    d.fourier()
}

/// Symbol of a constant-coefficient operator.
pub fn symb(d: &WeylElement) -> Result<Polynomial> {
    d.symb()
}

/// Constant-coefficient operator with symbol `p`.
pub fn symb_inverse(p: &Polynomial) -> WeylElement {
    WeylElement::symb_inverse(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn names(n: usize) -> VarNames {
        VarNames::role("z", n)
    }

    #[test]
    fn apply_examples() {
        let p = Polynomial::parse("z1^2", &names(1)).unwrap();
        let d = WeylElement::derivative(1, 0);
        assert_eq!(d.apply(&p).unwrap().to_text(&names(1)), "2*z1");
        let q = Polynomial::parse("z1^3*z2^2", &names(2)).unwrap();
        assert_eq!(
            WeylElement::theta(2, 0).apply(&q).unwrap(),
            q.scale(&int(3))
        );
        assert_eq!(
            WeylElement::euler(2, 0..2).apply(&q).unwrap(),
            q.scale(&int(5))
        );
    }

    #[test]
    fn compose_examples() {
        let d = WeylElement::derivative(1, 0);
        let z = WeylElement::variable(1, 0);
        let dz = d.compose(&z).unwrap();
        assert_eq!(dz.to_text(&names(1)), "z1*d1 + 1");
        assert_eq!(d.compose(&WeylElement::identity(1)).unwrap(), d);
        let d2 = WeylElement::derivative(2, 1);
        assert!(WeylElement::derivative(2, 0)
            .commutator(&d2)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn fourier_examples() {
        let d = WeylElement::derivative(1, 0);
        assert_eq!(d.fourier(), WeylElement::variable(1, 0).scale(&int(-1)));
        assert_eq!(WeylElement::variable(1, 0).fourier(), d);
        let t = WeylElement::theta(1, 0).fourier();
        assert_eq!(t.to_text(&names(1)), "-z1*d1 - 1");
    }

    #[test]
    fn symbols() {
        let n = names(2);
        let d = WeylElement::parse("d1*d2", &n).unwrap();
        assert_eq!(d.symb().unwrap().to_text(&n), "z1*z2");
        assert_eq!(
            WeylElement::symb_inverse(&Polynomial::one(2)),
            WeylElement::identity(2)
        );
        let bad = WeylElement::parse("z1*d1", &n).unwrap();
        assert_eq!(bad.symb(), Err(Error::NonConstantCoefficient));
    }

    #[test]
    fn text_round_trip() {
        let n = VarNames::role("x", 2);
        let text = "-1/2*x1^2*d1*d2^2 + 3*x2*d2 + x1 - 7";
        let w = WeylElement::parse(text, &n).unwrap();
        assert_eq!(w.to_text(&n), text);
        assert_eq!(w.scale(&rat(0, 1)), WeylElement::zero(2));
    }
}
