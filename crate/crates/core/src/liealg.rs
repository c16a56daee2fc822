//! Matrix realization of `sl(n+1)` / `gl(n+1)`, the subalgebra `g'` of
//! upper-left `n x n` blocks, and the Gelfand-Naimark decomposition
//! `g = n- + l + n+` attached to the grading element `H0`.
//!
//! Indices are 0-based: row/column 0 is the distinguished first coordinate,
//! so `N_j^+ = E_{0,j}` and `N_j^- = E_{j,0}` for `j = 1..=n`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{int, rat, Polynomial, Rational};
use crate::error::{Error, Result};

#[derive(
    Clone,
    Copy,
    Debug,
    PartialEq,
    Eq,
    Hash,
    PartialOrd,
    Ord,
    Serialize,
    Deserialize,
    clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    #[serde(rename = "sl")]
    #[value(name = "sl")]
    SL,
    #[serde(rename = "gl")]
    #[value(name = "gl")]
    GL,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::SL => "sl",
            Flavor::GL => "gl",
        })
    }
}

/// A square rational matrix tagged with its flavor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    flavor: Flavor,
    size: usize,
    entries: Vec<Rational>,
}

impl LieElement {
    pub fn zero(flavor: Flavor, size: usize) -> Self {
        LieElement {
            flavor,
            size,
            entries: vec![Rational::zero(); size * size],
        }
    }

    /// Builds an element from row-major entries; SL elements must be traceless.
    pub fn from_entries(flavor: Flavor, size: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::SizeMismatch(format!(
                "{} entries for size {size}",
                entries.len()
            )));
        }
        let x = LieElement {
            flavor,
            size,
            entries,
        };
        if flavor == Flavor::SL && !x.trace().is_zero() {
            return Err(Error::NotInAlgebra("sl (nonzero trace)"));
        }
        Ok(x)
    }

    /// Off-diagonal matrix unit `E_{ij}`, or a GL diagonal unit.
    pub fn unit(flavor: Flavor, size: usize, i: usize, j: usize) -> Self {
        assert!(flavor == Flavor::GL || i != j, "diagonal unit is not in sl");
        let mut x = LieElement::zero(flavor, size);
        x.entries[i * size + j] = Rational::one();
        x
    }

    pub fn diag(flavor: Flavor, values: Vec<Rational>) -> Result<Self> {
        let size = values.len();
        let mut entries = vec![Rational::zero(); size * size];
        for (i, v) in values.into_iter().enumerate() {
            entries[i * size + i] = v;
        }
        LieElement::from_entries(flavor, size, entries)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn trace(&self) -> Rational {
        (0..self.size).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn check_same(&self, other: &LieElement) -> Result<()> {
        if self.size != other.size || self.flavor != other.flavor {
            return Err(Error::SizeMismatch(format!(
                "{}({}) vs {}({})",
                self.flavor, self.size, other.flavor, other.size
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        self.check_same(other).expect("incompatible Lie elements");
        LieElement {
            flavor: self.flavor,
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> LieElement {
        LieElement {
            flavor: self.flavor,
            size: self.size,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    fn matmul(&self, other: &LieElement) -> Vec<Rational> {
        let n = self.size;
        let mut out = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Commutator `XY - YX`.
    pub fn bracket(&self, other: &LieElement) -> Result<LieElement> {
        self.check_same(other)?;
        let xy = self.matmul(other);
        let yx = other.matmul(self);
        Ok(LieElement {
            flavor: self.flavor,
            size: self.size,
            entries: xy.into_iter().zip(yx).map(|(a, b)| a - b).collect(),
        })
    }
}

/// `[X, Y] = XY - YX`.
pub fn bracket(x: &LieElement, y: &LieElement) -> Result<LieElement> {
    x.bracket(y)
}

/// Parabolic data for `G = SL(n+1)` or `GL(n+1)` with the maximal parabolic
/// of the grading element `H0`, and the subgroup `G'` of upper-left blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicData {
    pub n: usize,
    pub flavor: Flavor,
}

impl ParabolicData {
    pub fn new(n: usize, flavor: Flavor) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!(
                "n must be at least 2, got {n}"
            )));
        }
        Ok(ParabolicData { n, flavor })
    }

    /// Matrix size `n + 1`.
    pub fn size(&self) -> usize {
        self.n + 1
    }

    fn unit(&self, i: usize, j: usize) -> LieElement {
        LieElement::unit(self.flavor, self.size(), i, j)
    }

    fn diag(&self, values: Vec<Rational>) -> LieElement {
        LieElement::diag(self.flavor, values).expect("diagonal element")
    }

    /// `N_j^+ = E_{0,j}`, `j = 1..=n`.
    pub fn n_plus(&self, j: usize) -> LieElement {
        assert!((1..=self.n).contains(&j));
        self.unit(0, j)
    }

    /// `N_j^- = E_{j,0}`, `j = 1..=n`.
    pub fn n_minus(&self, j: usize) -> LieElement {
        assert!((1..=self.n).contains(&j));
        self.unit(j, 0)
    }

    /// `H0 = (1/n) diag(n, -1, ..., -1)`.
    pub fn h0(&self) -> LieElement {
        let n = self.n as i64;
        let mut v = vec![int(1)];
        v.extend((0..self.n).map(|_| rat(-1, n)));
        self.diag(v)
    }

    /// `H0' = (1/(n-1)) diag(n-1, -1, ..., -1, 0)`.
    pub fn h0_prime(&self) -> LieElement {
        let m = self.n as i64 - 1;
        let mut v = vec![int(1)];
        v.extend((0..self.n - 1).map(|_| rat(-1, m)));
        v.push(int(0));
        self.diag(v)
    }

    /// `J0 = (1/n) diag(0, 1, ..., 1)` (GL only).
    pub fn j0(&self) -> LieElement {
        assert_eq!(self.flavor, Flavor::GL);
        let n = self.n as i64;
        let mut v = vec![int(0)];
        v.extend((0..self.n).map(|_| rat(1, n)));
        self.diag(v)
    }

    /// `J0' = (1/(n-1)) diag(0, 1, ..., 1, 0)` (GL only).
    pub fn j0_prime(&self) -> LieElement {
        assert_eq!(self.flavor, Flavor::GL);
        let m = self.n as i64 - 1;
        let mut v = vec![int(0)];
        v.extend((0..self.n - 1).map(|_| rat(1, m)));
        v.push(int(0));
        self.diag(v)
    }

    /// Standard basis of the algebra on the leading `k x k` block: the
    /// off-diagonal units, then either the diagonal units (GL) or
    /// `E_ii - E_{i+1,i+1}` (SL).
    fn block_basis(&self, k: usize) -> Vec<LieElement> {
        let size = self.size();
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    out.push(self.unit(i, j));
                }
            }
        }
        match self.flavor {
            Flavor::GL => out.extend((0..k).map(|i| self.unit(i, i))),
            Flavor::SL => {
                for i in 0..k - 1 {
                    let mut v = vec![Rational::zero(); size];
                    v[i] = int(1);
                    v[i + 1] = int(-1);
                    out.push(self.diag(v));
                }
            }
        }
        out
    }

    /// Standard basis of `g`.
    pub fn basis_g(&self) -> Vec<LieElement> {
        self.block_basis(self.size())
    }

    /// Standard basis of `g'` (last row and column zero).
    pub fn basis_gprime(&self) -> Vec<LieElement> {
        self.block_basis(self.n)
    }

    /// Basis of the Levi part `l` of `g` (`rank = n`) or of `l'` (`rank = n-1`).
    pub fn basis_levi(&self, rank: usize) -> Vec<LieElement> {
        let basis = self.block_basis(rank + 1);
        basis.into_iter().filter(|x| self.is_levi(x)).collect()
    }

    fn is_levi(&self, x: &LieElement) -> bool {
        (1..self.size()).all(|j| x.get(0, j).is_zero() && x.get(j, 0).is_zero())
    }

    pub fn contains_g(&self, x: &LieElement) -> bool {
        x.size() == self.size() && x.flavor() == self.flavor
    }

    pub fn contains_gprime(&self, x: &LieElement) -> bool {
        let last = self.n;
        self.contains_g(x)
            && (0..self.size()).all(|i| x.get(i, last).is_zero() && x.get(last, i).is_zero())
    }

    /// Splits `X` into its `n-`, `l` and `n+` components.
    pub fn gn_project(&self, x: &LieElement) -> (LieElement, LieElement, LieElement) {
        let size = self.size();
        let mut minus = LieElement::zero(self.flavor, size);
        let mut plus = LieElement::zero(self.flavor, size);
        let mut levi = x.clone();
        for j in 1..size {
            minus.entries[j * size] = x.get(j, 0).clone();
            plus.entries[j] = x.get(0, j).clone();
            levi.entries[j * size] = Rational::zero();
            levi.entries[j] = Rational::zero();
        }
        (minus, levi, plus)
    }

    /// `Ad(exp(-sum x_j N_j^-)) X` for a rational point `x` of length `n`.
    pub fn ad_exp_minus(&self, x: &[Rational], big_x: &LieElement) -> LieElement {
        assert_eq!(x.len(), self.n);
        let mut a = LieElement::zero(self.flavor, self.size());
        for (j, xj) in x.iter().enumerate() {
            a = a.add(&self.n_minus(j + 1).scale(xj));
        }
        let mut total = big_x.clone();
        let mut term = big_x.clone();
        for k in 1.. {
            term = a.bracket(&term).unwrap().scale(&rat(-1, k));
            if term.is_zero() {
                break;
            }
            total = total.add(&term);
        }
        total
    }
}

/// Square matrix with polynomial entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMatrix {
    size: usize,
    entries: Vec<Polynomial>,
}

impl SymbolicMatrix {
    pub fn from_element(x: &LieElement, arity: usize) -> Self {
        SymbolicMatrix {
            size: x.size(),
            entries: x
                .entries()
                .iter()
                .map(|c| Polynomial::constant(arity, c.clone()))
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.size + j]
    }

    fn arity(&self) -> usize {
        self.entries[0].arity()
    }

    fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    fn matmul(&self, other: &SymbolicMatrix) -> SymbolicMatrix {
        let n = self.size;
        let mut entries = vec![Polynomial::zero(self.arity()); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let p = a * b;
                        entries[i * n + j].add_scaled(&p, &Rational::one());
                    }
                }
            }
        }
        SymbolicMatrix { size: n, entries }
    }

    fn combine(&self, other: &SymbolicMatrix, c: &Rational) -> SymbolicMatrix {
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            a.add_scaled(b, c);
        }
        out
    }

    /// Evaluates every entry at a rational point.
    pub fn eval(&self, point: &[Rational], flavor: Flavor) -> LieElement {
        let entries = self.entries.iter().map(|p| p.eval(point)).collect();
        LieElement {
            flavor,
            size: self.size,
            entries,
        }
    }
}

/// `Ad(exp(-sum_{j<=rank} x_j N_j^-)) X` with symbolic coordinates: variable
/// `j - 1` of a ring of the given arity stands for `x_j`.
pub fn ad_exp_minus_symbolic(x: &LieElement, rank: usize, arity: usize) -> SymbolicMatrix {
    assert!(rank < x.size() && rank <= arity);
    let size = x.size();
    let mut a_entries = vec![Polynomial::zero(arity); size * size];
    for j in 1..=rank {
        a_entries[j * size] = Polynomial::var(arity, j - 1);
    }
    let a = SymbolicMatrix {
        size,
        entries: a_entries,
    };
    let mut total = SymbolicMatrix::from_element(x, arity);
    let mut term = total.clone();
    for k in 1.. {
        let comm = a.matmul(&term).combine(&term.matmul(&a), &-Rational::one());
        term = SymbolicMatrix::from_element(&LieElement::zero(x.flavor(), size), arity)
            .combine(&comm, &rat(-1, k));
        if term.is_zero() {
            break;
        }
        total = total.combine(&term, &Rational::one());
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets() {
        let pd = ParabolicData::new(2, Flavor::SL).unwrap();
        let h = pd.n_plus(1).bracket(&pd.n_minus(1)).unwrap();
        let expect = LieElement::diag(Flavor::SL, vec![int(1), int(-1), int(0)]).unwrap();
        assert_eq!(h, expect);
        assert!(pd.n_minus(1).bracket(&pd.n_minus(2)).unwrap().is_zero());
        let e = pd.h0().bracket(&pd.n_plus(1)).unwrap();
        assert_eq!(e, pd.n_plus(1).scale(&rat(3, 2)));
    }

    #[test]
    fn projections() {
        let pd = ParabolicData::new(2, Flavor::GL).unwrap();
        let x = pd.unit(1, 0).add(&pd.unit(1, 1));
        let (m, l, p) = pd.gn_project(&x);
        assert_eq!(m, pd.unit(1, 0));
        assert_eq!(l, pd.unit(1, 1));
        assert!(p.is_zero());
        let (m, l, p) = pd.gn_project(&pd.n_plus(1));
        assert!(m.is_zero() && l.is_zero());
        assert_eq!(p, pd.n_plus(1));
    }

    #[test]
    fn ad_series() {
        let pd = ParabolicData::new(2, Flavor::SL).unwrap();
        let y = pd.ad_exp_minus(&[int(1), int(0)], &pd.h0());
        assert_eq!(y, pd.h0().sub(&pd.n_minus(1).scale(&rat(3, 2))));
        let x = pd.n_plus(2);
        assert_eq!(pd.ad_exp_minus(&[int(0), int(0)], &x), x);
        assert_eq!(
            pd.ad_exp_minus(&[int(2), int(-1)], &pd.n_minus(1)),
            pd.n_minus(1)
        );
        let s = ad_exp_minus_symbolic(&x, 2, 2);
        let pt = [rat(1, 3), int(-2)];
        assert_eq!(s.eval(&pt, Flavor::SL), pd.ad_exp_minus(&pt, &x));
    }

    #[test]
    fn bases() {
        let sl = ParabolicData::new(3, Flavor::SL).unwrap();
        assert_eq!(sl.basis_g().len(), 15);
        assert_eq!(sl.basis_gprime().len(), 8);
        assert_eq!(sl.basis_levi(3).len(), 15 - 6);
        assert_eq!(sl.basis_levi(2).len(), 8 - 4);
        let gl = ParabolicData::new(3, Flavor::GL).unwrap();
        assert_eq!(gl.basis_g().len(), 16);
        assert_eq!(gl.basis_levi(2).len(), 9 - 4);
        assert!(gl.basis_gprime().iter().all(|x| gl.contains_gprime(x)));
    }
}
