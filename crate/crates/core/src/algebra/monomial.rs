//! Monomials with graded-lexicographic order.

use std::cmp::Ordering;

use super::rational::{factorial, Rational};

/// Exponent vector of fixed arity.
///
/// Ordering is graded-lexicographic: higher total degree is larger, ties are
/// broken lexicographically with the first variable most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1`.
    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: vec![0; arity],
        }
    }

    /// The variable with 0-based index `i`.
    pub fn var(arity: usize, i: usize) -> Self {
        let mut exps = vec![0; arity];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.arity(), other.arity());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    /// Multi-index factorial `l_1! l_2! ...`.
    pub fn factorial(&self) -> Rational {
        let mut acc = Rational::from_integer(1.into());
        for &e in &self.exps {
            acc *= factorial(e);
        }
        acc
    }

    /// Places the exponents at `offset` inside a zero vector of arity `arity`.
    pub fn embed(&self, offset: usize, arity: usize) -> Monomial {
        let mut exps = vec![0; arity];
        exps[offset..offset + self.exps.len()].copy_from_slice(&self.exps);
        Monomial { exps }
    }

    /// The exponents in the index range `[start, end)`.
    pub fn slice(&self, start: usize, end: usize) -> Monomial {
        Monomial {
            exps: self.exps[start..end].to_vec(),
        }
    }

    /// Drops the variable `i`.
    pub fn remove(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.remove(i);
        Monomial { exps }
    }

    /// Inserts a variable at position `i` with exponent `e`.
    pub fn insert(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps.insert(i, e);
        Monomial { exps }
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = e;
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of exact total `degree` in `arity` variables, leading
/// monomial first (for arity 2, degree 1: `[v1, v2]`).
pub fn monomial_basis(arity: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; arity];
    fill(&mut cur, 0, degree, &mut out);
    out
}

fn fill(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Monomial>) {
    let arity = cur.len();
    if arity == 0 {
        if left == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    if pos + 1 == arity {
        cur[pos] = left;
        out.push(Monomial::new(cur.clone()));
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

/// All monomials of total degree at most `degree`, by increasing degree.
pub fn monomials_up_to(arity: usize, degree: u32) -> Vec<Monomial> {
    (0..=degree)
        .flat_map(|d| monomial_basis(arity, d))
        .collect()
}
