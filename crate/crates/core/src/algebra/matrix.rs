//! Dense exact matrices, reduced row echelon form and nullspaces.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from equal-length rows. An empty row list yields a
    /// `0 x cols` matrix only through [`Matrix::zeros`].
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = Rational::one() / m.get(r, c);
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            let pivot_row: Vec<Rational> = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (k, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        let v = m.get(i, c + k) - &f * pv;
                        m.set(i, c + k, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel. One vector per free column (in increasing column
    /// order), each scaled so that its first nonzero entry equals 1.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -r.get(row, f).clone();
            }
            normalize_first(&mut v);
            basis.push(v);
        }
        basis
    }
}

/// Scales a vector so that its first nonzero entry is 1.
pub fn normalize_first(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x = &*x / &lead;
        }
    }
}

/// Kernel basis of `m`; see [`Matrix::nullspace`].
pub fn nullspace(m: &Matrix) -> Vec<Vec<Rational>> {
    m.nullspace()
}

/// Coefficient matrix with one column per polynomial and one row per
/// monomial occurring in any of them (rows in descending monomial order).
pub fn coefficient_matrix(polys: &[Polynomial]) -> (Matrix, Vec<Monomial>) {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            index.entry(m.clone()).or_insert(0);
        }
    }
    let monos: Vec<Monomial> = index.keys().rev().cloned().collect();
    for (i, m) in monos.iter().enumerate() {
        index.insert(m.clone(), i);
    }
    let mut mat = Matrix::zeros(monos.len(), polys.len());
    for (j, p) in polys.iter().enumerate() {
        for (m, c) in p.terms() {
            mat.set(index[m], j, c.clone());
        }
    }
    (mat, monos)
}

/// Dimension of the span of the given polynomials.
pub fn span_rank(polys: &[Polynomial]) -> usize {
    if polys.is_empty() {
        return 0;
    }
    coefficient_matrix(polys).0.rank()
}

/// Canonical basis of the span: the nonzero rows of the RREF of the matrix
/// whose rows are the coefficient vectors (leading monomial first).
pub fn canonical_basis(polys: &[Polynomial]) -> Vec<Polynomial> {
    let Some(first) = polys.first() else {
        return Vec::new();
    };
    let arity = first.arity();
    let (cm, monos) = coefficient_matrix(polys);
    let mut t = Matrix::zeros(cm.cols(), cm.rows());
    for i in 0..cm.rows() {
        for j in 0..cm.cols() {
            t.set(j, i, cm.get(i, j).clone());
        }
    }
    let (r, pivots) = t.rref();
    (0..pivots.len())
        .map(|i| {
            Polynomial::from_terms(
                arity,
                monos
                    .iter()
                    .enumerate()
                    .map(|(k, m)| (m.clone(), r.get(i, k).clone())),
            )
        })
        .collect()
}

/// True if `a` and `b` span the same subspace.
pub fn same_span(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    let all: Vec<Polynomial> = a.iter().chain(b).cloned().collect();
    ra == rb && span_rank(&all) == ra
}
