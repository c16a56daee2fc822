//! Infinitesimal actions on polynomial models of induced representations.
//!
//! All actions come from one construction: for `X` in the algebra of the
//! relevant group, write `Y(x) = Ad(exp(-sum x_j N_j^-)) X`, split it into
//! `n-`, Levi and `n+` parts and set
//!
//! ```text
//! dpi(X) = chi(Y_l) + dfiber(Y_m) - sum_j Y_{j0}(x) d/dx_j.
//! ```
//!
//! Vector-valued sections are encoded as polynomials in the base variables
//! `x_1..x_r` followed by fiber variables `y_1..y_r`; a component on the basis
//! vector `~y_l = y^l / l!` is stored as the coefficient of that product.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, int, Monomial, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::liealg::{ad_exp_minus_symbolic, Flavor, LieElement, ParabolicData};
use crate::params::SignPair;
use crate::weyl::WeylElement;

/// Weight of a character of the split part of a Levi subgroup: `(first,
/// second)` with `chi(Z) = first * Z_00 + second * tr(Z)`. For SL the second
/// entry is always zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    #[serde(with = "crate::report::rational_str")]
    pub first: Rational,
    #[serde(with = "crate::report::rational_str")]
    pub second: Rational,
}

impl Weight {
    pub fn sl(v: Rational) -> Self {
        Weight {
            first: v,
            second: Rational::zero(),
        }
    }

    pub fn gl(a: Rational, b: Rational) -> Self {
        Weight {
            first: a,
            second: b,
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            first: -&self.first,
            second: -&self.second,
        }
    }

    /// `lambda` for SL, `(lambda1,lambda2)` for GL.
    pub fn label(&self, flavor: Flavor) -> String {
        match flavor {
            Flavor::SL => format_rational(&self.first),
            Flavor::GL => format!(
                "({},{})",
                format_rational(&self.first),
                format_rational(&self.second)
            ),
        }
    }

    pub fn eval(&self, z: &LieElement, rank: usize) -> Rational {
        let tr: Rational = (0..=rank).map(|i| z.get(i, i).clone()).sum();
        &self.first * z.get(0, 0) + &self.second * tr
    }
}

/// Source data `I(triv, lambda)^alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScalarRepParams {
    pub n: usize,
    pub flavor: Flavor,
    pub alpha: SignPair,
    pub lambda: Weight,
}

impl ScalarRepParams {
    pub fn sl(n: usize, alpha: crate::params::Sign, lambda: Rational) -> Self {
        ScalarRepParams {
            n,
            flavor: Flavor::SL,
            alpha: SignPair::sl(alpha),
            lambda: Weight::sl(lambda),
        }
    }

    pub fn gl(n: usize, alpha: SignPair, lambda: Weight) -> Self {
        ScalarRepParams {
            n,
            flavor: Flavor::GL,
            alpha,
            lambda,
        }
    }

    pub fn parabolic(&self) -> Result<ParabolicData> {
        ParabolicData::new(self.n, self.flavor)
    }
}

/// Target data `J(poly^l_{n-1}, nu)^beta` of the subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TargetRepParams {
    pub n: usize,
    pub flavor: Flavor,
    pub beta: SignPair,
    pub nu: Weight,
    pub ell: u32,
}

impl TargetRepParams {
    pub fn sl(n: usize, beta: crate::params::Sign, ell: u32, nu: Rational) -> Self {
        TargetRepParams {
            n,
            flavor: Flavor::SL,
            beta: SignPair::sl(beta),
            nu: Weight::sl(nu),
            ell,
        }
    }

    pub fn gl(n: usize, beta: SignPair, ell: u32, nu: Weight) -> Self {
        TargetRepParams {
            n,
            flavor: Flavor::GL,
            beta,
            nu,
            ell,
        }
    }

    /// For `n = 2` the fiber `poly^l_1` is a sign character only, so the
    /// label is moved into the sign: `(beta; poly^l) = (beta + l; triv)`.
    pub fn canonical(&self) -> TargetRepParams {
        if self.n != 2 || self.ell == 0 {
            return self.clone();
        }
        let beta = match self.flavor {
            Flavor::SL => self.beta.shift_first(self.ell as i64),
            Flavor::GL => self.beta.shift_second(self.ell as i64),
        };
        TargetRepParams {
            beta,
            ell: 0,
            ..self.clone()
        }
    }
}

/// Fiber of an induced model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fiber {
    /// Polynomials of the given degree in the fiber variables, with the
    /// contragredient of the standard action.
    Poly(u32),
    /// Symmetric tensors of the given degree, standard action.
    Sym(u32),
}

impl Fiber {
    pub fn degree(&self) -> u32 {
        match *self {
            Fiber::Poly(d) | Fiber::Sym(d) => d,
        }
    }

    pub fn dual(&self) -> Fiber {
        match *self {
            Fiber::Poly(d) => Fiber::Sym(d),
            Fiber::Sym(d) => Fiber::Poly(d),
        }
    }
}

/// Number of fiber variables: none for a scalar fiber, else one per base variable.
pub fn fiber_vars(rank: usize, degree: u32) -> usize {
    if degree == 0 {
        0
    } else {
        rank
    }
}

/// Polynomial model of a representation induced from the maximal parabolic of
/// `G` (`rank = n`) or of `G'` (`rank = n - 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedModel {
    pub pd: ParabolicData,
    pub rank: usize,
    pub fiber: Fiber,
    pub chi: Weight,
}

impl InducedModel {
    pub fn new(pd: ParabolicData, rank: usize, fiber: Fiber, chi: Weight) -> Self {
        assert!(rank == pd.n || rank + 1 == pd.n, "rank must be n or n-1");
        InducedModel {
            pd,
            rank,
            fiber,
            chi,
        }
    }

    /// `I(triv, lambda)` on `n` variables.
    pub fn source(p: &ScalarRepParams) -> Result<Self> {
        Ok(InducedModel::new(
            p.parabolic()?,
            p.n,
            Fiber::Poly(0),
            p.lambda.clone(),
        ))
    }

    /// `J(poly^l_{n-1}, nu)` on `n - 1` base variables.
    pub fn target(p: &TargetRepParams) -> Result<Self> {
        let pd = ParabolicData::new(p.n, p.flavor)?;
        Ok(InducedModel::new(
            pd,
            p.n - 1,
            Fiber::Poly(p.ell),
            p.nu.clone(),
        ))
    }

    pub fn fiber_vars(&self) -> usize {
        fiber_vars(self.rank, self.fiber.degree())
    }

    pub fn arity(&self) -> usize {
        self.rank + self.fiber_vars()
    }

    /// The dual twist `(sigma, chi)* = (sigma^dual, 2 rho - chi)`.
    pub fn dual(&self) -> InducedModel {
        let r = self.rank as i64;
        let chi = Weight {
            first: int(r + 1) - &self.chi.first,
            second: int(-1) - &self.chi.second,
        };
        InducedModel {
            pd: self.pd,
            rank: self.rank,
            fiber: self.fiber.dual(),
            chi,
        }
    }

    fn check(&self, x: &LieElement) -> Result<()> {
        let ok = if self.rank == self.pd.n {
            self.pd.contains_g(x)
        } else {
            self.pd.contains_gprime(x)
        };
        if ok {
            Ok(())
        } else if self.rank == self.pd.n {
            Err(Error::NotInAlgebra("g"))
        } else {
            Err(Error::NotInAlgebra("g'"))
        }
    }

    /// The operator `dpi(X)` on the joint ring (base, fiber).
    pub fn operator(&self, x: &LieElement) -> Result<WeylElement> {
        self.check(x)?;
        let r = self.rank;
        let arity = self.arity();
        let y = ad_exp_minus_symbolic(x, r, arity);
        let mut scalar = y.get(0, 0).scale(&self.chi.first);
        if !self.chi.second.is_zero() {
            for i in 0..=r {
                scalar.add_scaled(y.get(i, i), &self.chi.second);
            }
        }
        let mut op = WeylElement::multiplication(scalar);
        for j in 1..=r {
            let c = y.get(j, 0);
            if !c.is_zero() {
                op = op.sub(&WeylElement::term(c.clone(), Monomial::var(arity, j - 1)));
            }
        }
        if self.fiber_vars() > 0 {
            let block: Vec<Vec<Polynomial>> = (1..=r)
                .map(|i| (1..=r).map(|j| y.get(i, j).clone()).collect())
                .collect();
            op = op.add(&self.fiber_part(&block, arity, r));
        }
        Ok(op)
    }

    /// Fiber action of a Levi element `Z`, on the fiber variables alone.
    pub fn fiber_operator(&self, z: &LieElement) -> Result<WeylElement> {
        self.check(z)?;
        let r = self.rank;
        let f = self.fiber_vars();
        let mut op = WeylElement::scalar(f, self.chi.eval(z, r));
        if f > 0 {
            let block: Vec<Vec<Polynomial>> = (1..=r)
                .map(|i| {
                    (1..=r)
                        .map(|j| Polynomial::constant(f, z.get(i, j).clone()))
                        .collect()
                })
                .collect();
            op = op.add(&self.fiber_part(&block, f, 0));
        }
        Ok(op)
    }

    /// Derivation of the fiber induced by the traceless part of `block`,
    /// with fiber variables starting at `offset`.
    fn fiber_part(&self, block: &[Vec<Polynomial>], arity: usize, offset: usize) -> WeylElement {
        let r = self.rank;
        let mut tr = Polynomial::zero(arity);
        for (i, row) in block.iter().enumerate() {
            tr.add_scaled(&row[i], &Rational::one());
        }
        let shift = tr.scale(&(Rational::one() / int(r as i64)));
        let mut op = WeylElement::zero(arity);
        for (i, row) in block.iter().enumerate().take(r) {
            for (j, entry) in row.iter().enumerate().take(r) {
                let mut b = entry.clone();
                if i == j {
                    b = &b - &shift;
                }
                if b.is_zero() {
                    continue;
                }
                let (mul, der, sign) = match self.fiber {
                    Fiber::Poly(_) => (offset + j, offset + i, -Rational::one()),
                    Fiber::Sym(_) => (offset + i, offset + j, Rational::one()),
                };
                let coef = (&b * &Polynomial::var(arity, mul)).scale(&sign);
                op = op.add(&WeylElement::term(coef, Monomial::var(arity, der)));
            }
        }
        op
    }

    /// Fourier transform of the operator in the base variables only.
    pub fn fourier_operator(&self, x: &LieElement) -> Result<WeylElement> {
        Ok(self.operator(x)?.fourier_partial(0..self.rank))
    }
}

/// `dpi_lambda(X)` on `C[x_1..x_n]`.
pub fn dpi_lambda(x: &LieElement, p: &ScalarRepParams) -> Result<WeylElement> {
    InducedModel::source(p)?.operator(x)
}

/// The dual-twisted action `dpi_{lambda*}(X)`; its character is `2 rho - lambda`,
/// i.e. `(n + 1) - lambda` for SL.
pub fn dpi_lambda_star(x: &LieElement, p: &ScalarRepParams) -> Result<WeylElement> {
    InducedModel::source(p)?.dual().operator(x)
}

/// Fourier transform of [`dpi_lambda_star`], acting on `C[zeta_1..zeta_n]`.
pub fn dpi_hat(x: &LieElement, p: &ScalarRepParams) -> Result<WeylElement> {
    Ok(dpi_lambda_star(x, p)?.fourier())
}

/// Action of `X` in `g'` on `J(poly^l, nu)`, on the joint ring `(x', y)`.
pub fn dpi_target(x: &LieElement, p: &TargetRepParams) -> Result<WeylElement> {
    InducedModel::target(p)?.operator(x)
}

/// Element of `Pol(base) ⊗ W` on the `~y_l` basis of the fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorValuedPolynomial {
    base_arity: usize,
    fiber_rank: usize,
    fiber_degree: u32,
    components: BTreeMap<Monomial, Polynomial>,
}

impl VectorValuedPolynomial {
    pub fn zero(base_arity: usize, fiber_rank: usize, fiber_degree: u32) -> Self {
        VectorValuedPolynomial {
            base_arity,
            fiber_rank,
            fiber_degree,
            components: BTreeMap::new(),
        }
    }

    pub fn scalar(p: Polynomial, fiber_rank: usize) -> Self {
        let mut v = VectorValuedPolynomial::zero(p.arity(), fiber_rank, 0);
        v.add_component(Monomial::one(fiber_rank), &p);
        v
    }

    pub fn base_arity(&self) -> usize {
        self.base_arity
    }

    pub fn fiber_rank(&self) -> usize {
        self.fiber_rank
    }

    pub fn fiber_degree(&self) -> u32 {
        self.fiber_degree
    }

    pub fn components(&self) -> impl Iterator<Item = (&Monomial, &Polynomial)> {
        self.components.iter()
    }

    pub fn component(&self, label: &Monomial) -> Polynomial {
        self.components
            .get(label)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.base_arity))
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn add_component(&mut self, label: Monomial, p: &Polynomial) {
        assert_eq!(label.arity(), self.fiber_rank);
        assert_eq!(
            label.degree(),
            self.fiber_degree,
            "label outside the fiber basis"
        );
        assert_eq!(p.arity(), self.base_arity);
        if p.is_zero() {
            return;
        }
        let slot = self
            .components
            .entry(label.clone())
            .or_insert_with(|| Polynomial::zero(p.arity()));
        slot.add_scaled(p, &Rational::one());
        if slot.is_zero() {
            self.components.remove(&label);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out =
            VectorValuedPolynomial::zero(self.base_arity, self.fiber_rank, self.fiber_degree);
        for (l, p) in &self.components {
            out.add_component(l.clone(), &p.scale(c));
        }
        out
    }

    /// Joint polynomial `sum_l f_l * y^l / l!`.
    pub fn to_joint(&self) -> Polynomial {
        let fv = fiber_vars(self.fiber_rank, self.fiber_degree);
        let arity = self.base_arity + fv;
        let mut out = Polynomial::zero(arity);
        for (label, p) in &self.components {
            let inv = Rational::one() / label.factorial();
            let y = if fv == 0 {
                Monomial::one(arity)
            } else {
                label.embed(self.base_arity, arity)
            };
            out.add_scaled(&p.embed(0, arity).mul_monomial(&y, &Rational::one()), &inv);
        }
        out
    }

    /// Inverse of [`VectorValuedPolynomial::to_joint`].
    pub fn from_joint(
        p: &Polynomial,
        base_arity: usize,
        fiber_rank: usize,
        fiber_degree: u32,
    ) -> Result<Self> {
        let fv = fiber_vars(fiber_rank, fiber_degree);
        if p.arity() != base_arity + fv {
            return Err(Error::ArityMismatch {
                left: p.arity(),
                right: base_arity + fv,
            });
        }
        let mut out = VectorValuedPolynomial::zero(base_arity, fiber_rank, fiber_degree);
        for (m, c) in p.terms() {
            let label = if fv == 0 {
                Monomial::one(fiber_rank)
            } else {
                m.slice(base_arity, base_arity + fv)
            };
            if label.degree() != fiber_degree {
                return Err(Error::InvalidParams(format!(
                    "fiber degree {} where {} was expected",
                    label.degree(),
                    fiber_degree
                )));
            }
            let base = m.slice(0, base_arity);
            out.add_component(
                label.clone(),
                &Polynomial::term(base, c * label.factorial()),
            );
        }
        Ok(out)
    }
}
