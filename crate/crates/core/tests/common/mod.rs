//! Closed-form oracles shared by the integration tests. Nothing here calls
//! the solver; every expected value is written down directly.

#![allow(dead_code)]

use fmethod::algebra::{factorial, int, monomial_basis, Monomial, Polynomial, Rational};
use fmethod::liealg::LieElement;
use fmethod::weyl::WeylElement;

/// `sum_{|a| = l} c(a) zeta'^a y^a`, times `zeta_n^m`, on the joint ring
/// `(zeta_1..zeta_n, y_1..y_{n-1})`; the weight `c(a)` is chosen by `coef`.
fn zeta_y_sum(n: usize, m: u32, l: u32, coef: impl Fn(&Monomial) -> Rational) -> Polynomial {
    if l == 0 {
        return Polynomial::monomial(Monomial::var(n, n - 1).with_exp(n - 1, m));
    }
    let arity = 2 * n - 1;
    let mut p = Polynomial::zero(arity);
    for a in monomial_basis(n - 1, l) {
        let mut e = vec![0u32; arity];
        e[..n - 1].copy_from_slice(a.exps());
        e[n - 1] = m;
        e[n..].copy_from_slice(a.exps());
        p.add_term(Monomial::new(e), coef(&a));
    }
    p
}

/// Solution of the F-system for `D_(m,l)`, `n >= 3`: multinomial weights.
pub fn psi(n: usize, m: u32, l: u32) -> Polynomial {
    if n == 2 {
        return Polynomial::monomial(Monomial::new(vec![l, m]));
    }
    zeta_y_sum(n, m, l, |a| factorial(l) / a.factorial())
}

/// `F_c(Phi_(m,l))`: weights `1/a!`.
pub fn fc_phi(n: usize, m: u32, l: u32) -> Polynomial {
    zeta_y_sum(n, m, l, |a| int(1) / a.factorial())
}

/// `dpi_lambda(X)` of a matrix `X` of size `n+1`, read off entry by entry:
/// `X_0j x_j (E + l1)`, `-X_j0 d_j`, `-X_ij x_j d_i`, `X_00 (E + l1)`,
/// and `l2 tr X`.
pub fn dpi_closed_form(x: &LieElement, l1: &Rational, l2: &Rational) -> WeylElement {
    let size = x.size();
    let n = size - 1;
    let euler = WeylElement::euler(n, 0..n);
    let e_plus = euler.add(&WeylElement::scalar(n, l1.clone()));
    let mut out = WeylElement::zero(n);
    for j in 1..=n {
        let xj = WeylElement::variable(n, j - 1);
        let c = x.get(0, j);
        if !num_traits::Zero::is_zero(c) {
            out = out.add(&xj.compose(&e_plus).unwrap().scale(c));
        }
        let c = x.get(j, 0);
        out = out.sub(&WeylElement::derivative(n, j - 1).scale(c));
        for i in 1..=n {
            let c = x.get(i, j);
            let t = WeylElement::variable(n, j - 1)
                .compose(&WeylElement::derivative(n, i - 1))
                .unwrap();
            out = out.sub(&t.scale(c));
        }
    }
    out = out.add(&e_plus.scale(x.get(0, 0)));
    out.add(&WeylElement::scalar(n, l2 * x.trace()))
}

/// Invariant vectors of `Im(phi_{p+1}) ⊂ M(p)` for `n = 2`, per weight:
/// two at `-(d+2)` for `d <= p`, one at `-1` and at `-j` for `j >= p + 3`.
pub fn image_invariants_n2(p: u32, floor: i64) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    for w in (floor..=-1).rev() {
        let j = -w;
        let c = if j == 1 {
            1
        } else if j as u32 <= p + 2 {
            2
        } else {
            1
        };
        out.push((w, c));
    }
    out
}
