//! Constant-coefficient vector-valued differential operators: the symmetry
//! breaking operators `D_(m,l)`, the invariant operators `D_k`, the
//! projection `Proj_(m,l)`, and the checks built on them (equivariance,
//! factorization identities, images of finite-dimensional submodules).
//!
//! An operator is a finite sum `sum c * d^a ⊗ ~y_l`, optionally followed by
//! restriction to `x_n = 0`. Labels `l` index the `~y_l = y^l / l!` basis of
//! the target fiber.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    factorial, int, monomial_basis, monomials_up_to, span_rank, Monomial, Polynomial, Rational,
    VarNames,
};
use crate::error::{Error, Result};
use crate::fmethod::Target;
use crate::liealg::{Flavor, LieElement, ParabolicData};
use crate::params::{IdoTargetParams, Sign};
use crate::rep::{Fiber, InducedModel, ScalarRepParams, TargetRepParams, VectorValuedPolynomial};
use crate::weyl::WeylElement;

/// `sum c * d^a ⊗ ~y_l` on `C[x_1..x_n]`, restricted to `x_n = 0` if `restrict`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOperator {
    n: usize,
    restrict: bool,
    fiber_rank: usize,
    fiber_degree: u32,
    /// `(label, derivative) -> coefficient`.
    terms: BTreeMap<(Monomial, Monomial), Rational>,
}

impl DiffOperator {
    pub fn new(n: usize, restrict: bool, fiber_rank: usize, fiber_degree: u32) -> Self {
        DiffOperator {
            n,
            restrict,
            fiber_rank,
            fiber_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, label: Monomial, derivative: Monomial, c: Rational) {
        assert_eq!(label.arity(), self.fiber_rank);
        assert_eq!(derivative.arity(), self.n);
        let key = (label, derivative);
        let v = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn restricts(&self) -> bool {
        self.restrict
    }

    pub fn fiber_rank(&self) -> usize {
        self.fiber_rank
    }

    pub fn fiber_degree(&self) -> u32 {
        self.fiber_degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &Rational)> {
        self.terms.iter().map(|((l, d), c)| (l, d, c))
    }

    /// Number of base variables of the output.
    pub fn out_arity(&self) -> usize {
        if self.restrict {
            self.n - 1
        } else {
            self.n
        }
    }

    pub fn apply(&self, f: &Polynomial) -> Result<VectorValuedPolynomial> {
        if f.arity() != self.n {
            return Err(Error::ArityMismatch {
                left: f.arity(),
                right: self.n,
            });
        }
        let mut out =
            VectorValuedPolynomial::zero(self.out_arity(), self.fiber_rank, self.fiber_degree);
        for ((label, d), c) in &self.terms {
            let mut g = f.derivative_multi(d).scale(c);
            if self.restrict {
                g = g.restrict_zero(self.n - 1);
            }
            out.add_component(label.clone(), &g);
        }
        Ok(out)
    }

    /// Symbol components: label `l` -> polynomial in `zeta_1..zeta_n`.
    pub fn symbol(&self) -> VectorValuedPolynomial {
        let mut out = VectorValuedPolynomial::zero(self.n, self.fiber_rank, self.fiber_degree);
        for ((label, d), c) in &self.terms {
            out.add_component(label.clone(), &Polynomial::term(d.clone(), c.clone()));
        }
        out
    }

    /// Text form, e.g. `Rest[x3=0] (d1*d3 ⊗ y1 + d2*d3 ⊗ y2)`.
    pub fn to_text(&self) -> String {
        let dn = VarNames::role("d", self.n);
        let yn = VarNames::role("y", self.fiber_rank);
        let mut parts = Vec::new();
        for ((label, d), c) in &self.terms {
            let dt = Polynomial::term(d.clone(), c.clone()).to_text(&dn);
            if label.arity() == 0 || label.is_one() {
                parts.push(dt);
            } else {
                parts.push(format!(
                    "({dt}) ⊗ {}",
                    Polynomial::monomial(label.clone()).to_text(&yn)
                ));
            }
        }
        let body = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        };
        if self.restrict {
            format!("Rest[x{}=0] ({body})", self.n)
        } else {
            body
        }
    }
}

/// The symmetry breaking operator `D_(m,l) = Rest d_n^m sum_l d^l ⊗ ~y_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sbo {
    pub m: u32,
    pub ell: u32,
    pub op: DiffOperator,
}

/// The invariant operator `D_k = sum_k d^k ⊗ ~y_k` on `C[x_1..x_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ido {
    pub k: u32,
    pub op: DiffOperator,
}

/// `Proj_(m,l)`: keep the components `~y_(l, m)` of a section with fiber
/// degree `m + l`, relabel them by `l` and restrict to `x_n = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjOp {
    pub m: u32,
    pub ell: u32,
    pub n: usize,
}

fn fiber_labels(rank: usize, degree: u32) -> Vec<Monomial> {
    monomial_basis(rank, degree)
}

pub fn build_sbo(m: u32, ell: u32, n: usize) -> Sbo {
    let mut op = DiffOperator::new(n, true, n - 1, ell);
    for l in fiber_labels(n - 1, ell) {
        let d = l.insert(n - 1, m);
        op.add_term(l, d, Rational::one());
    }
    Sbo { m, ell, op }
}

pub fn apply_sbo(d: &Sbo, f: &Polynomial) -> Result<VectorValuedPolynomial> {
    d.op.apply(f)
}

pub fn build_ido(k: u32, n: usize) -> Ido {
    let mut op = DiffOperator::new(n, false, n, k);
    for l in fiber_labels(n, k) {
        op.add_term(l.clone(), l, Rational::one());
    }
    Ido { k, op }
}

pub fn apply_ido(d: &Ido, f: &Polynomial) -> Result<VectorValuedPolynomial> {
    d.op.apply(f)
}

impl ProjOp {
    pub fn new(m: u32, ell: u32, n: usize) -> Self {
        ProjOp { m, ell, n }
    }

    pub fn apply(&self, v: &VectorValuedPolynomial) -> Result<VectorValuedPolynomial> {
        let n = self.n;
        if v.base_arity() != n || v.fiber_rank() != n || v.fiber_degree() != self.m + self.ell {
            return Err(Error::SizeMismatch(format!(
                "projection expects {n} base variables and fiber degree {}",
                self.m + self.ell
            )));
        }
        let mut out = VectorValuedPolynomial::zero(n - 1, n - 1, self.ell);
        for (label, p) in v.components() {
            if label.exp(n - 1) == self.m {
                out.add_component(label.remove(n - 1), &p.restrict_zero(n - 1));
            }
        }
        Ok(out)
    }
}

/// `Rest ∘ symb^{-1}`: the operator whose symbol components are those of `psi`.
pub fn sbo_from_solution(psi: &VectorValuedPolynomial) -> DiffOperator {
    let n = psi.base_arity();
    let mut op = DiffOperator::new(n, true, psi.fiber_rank(), psi.fiber_degree());
    for (label, p) in psi.components() {
        for (d, c) in p.terms() {
            op.add_term(label.clone(), d.clone(), c.clone());
        }
    }
    op
}

/// Same as [`sbo_from_solution`] through the Weyl algebra, component by
/// component: `symb^{-1}` then restriction.
pub fn rest_symb_inverse(
    psi: &VectorValuedPolynomial,
    f: &Polynomial,
) -> Result<VectorValuedPolynomial> {
    let n = psi.base_arity();
    let mut out = VectorValuedPolynomial::zero(n - 1, psi.fiber_rank(), psi.fiber_degree());
    for (label, p) in psi.components() {
        let g = WeylElement::symb_inverse(p).apply(f)?.restrict_zero(n - 1);
        out.add_component(label.clone(), &g);
    }
    Ok(out)
}

/// A pair `(X, f)` where the intertwining identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub element: String,
    pub monomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivarianceReport {
    pub n: usize,
    pub operator: String,
    pub degree_cap: u32,
    pub checked: usize,
    pub status: Status,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn ok(self) -> bool {
        self == Status::Pass
    }
}

/// Readable name of a basis element such as `E_12` or `E_00-E_11`.
pub fn element_name(x: &LieElement) -> String {
    let size = x.size();
    let mut parts = Vec::new();
    for i in 0..size {
        for j in 0..size {
            let c = x.get(i, j);
            if c.is_zero() {
                continue;
            }
            let unit = format!("E_{i}{j}");
            let term = if c.is_one() {
                unit
            } else if *c == -Rational::one() {
                format!("-{unit}")
            } else {
                format!("{}*{unit}", crate::algebra::format_rational(c))
            };
            parts.push(term);
        }
    }
    parts.join("+").replace("+-", "-")
}

/// Checks `D(dpi_lambda(X) f) = dpi_target(X)(D f)` for every standard basis
/// element `X` of the target algebra and every monomial `f` of degree `<= cap`.
/// Stops collecting violations after `max_violations`.
pub fn check_equivariance(
    d: &DiffOperator,
    source: &ScalarRepParams,
    target: &Target,
    degree_cap: u32,
    max_violations: usize,
) -> Result<EquivarianceReport> {
    let pd = source.parabolic()?;
    let n = source.n;
    let (model, basis) = match target {
        Target::Restricted(t) => {
            if !d.restrict {
                return Err(Error::InvalidParams(
                    "a symmetry breaking target needs restriction".into(),
                ));
            }
            (InducedModel::target(t)?, pd.basis_gprime())
        }
        Target::Full(t) => {
            if d.restrict {
                return Err(Error::InvalidParams(
                    "an invariant operator does not restrict".into(),
                ));
            }
            (
                InducedModel::new(pd, n, Fiber::Poly(t.k), t.tau.clone()),
                pd.basis_g(),
            )
        }
    };
    if model.fiber.degree() != d.fiber_degree || (d.fiber_degree > 0 && model.rank != d.fiber_rank)
    {
        return Err(Error::SizeMismatch(
            "operator fiber does not match the target".into(),
        ));
    }
    let src = InducedModel::source(source)?;
    let monos = monomials_up_to(n, degree_cap);
    let mut checked = 0;
    let mut violations = Vec::new();
    for x in &basis {
        let a = src.operator(x)?;
        let b = model.operator(x)?;
        let results: Vec<Result<bool>> = monos
            .par_iter()
            .map(|m| {
                let f = Polynomial::monomial(m.clone());
                let lhs = d.apply(&a.apply(&f)?)?.to_joint();
                let rhs = b.apply(&d.apply(&f)?.to_joint())?;
                Ok(lhs == rhs)
            })
            .collect();
        for (m, r) in monos.iter().zip(results) {
            checked += 1;
            if !r? && violations.len() < max_violations {
                violations.push(Violation {
                    element: element_name(x),
                    monomial: Polynomial::monomial(m.clone()).to_text(&VarNames::role("x", n)),
                });
            }
        }
    }
    Ok(EquivarianceReport {
        n,
        operator: d.to_text(),
        degree_cap,
        checked,
        status: Status::from_bool(violations.is_empty()),
        violations,
    })
}

/// Report of an operator identity checked on monomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub n: usize,
    pub m: u32,
    pub l: u32,
    pub degree_cap: u32,
    pub checked: usize,
    pub status: Status,
    pub counterexample: Option<String>,
}

fn check_on_monomials(
    identity: &str,
    n: usize,
    m: u32,
    l: u32,
    degree_cap: u32,
    eq: impl Fn(&Polynomial) -> Result<bool> + Sync,
) -> Result<IdentityReport> {
    let monos = monomials_up_to(n, degree_cap);
    let res: Vec<Result<bool>> = monos
        .par_iter()
        .map(|mo| eq(&Polynomial::monomial(mo.clone())))
        .collect();
    let mut counterexample = None;
    for (mo, r) in monos.iter().zip(res) {
        if !r? && counterexample.is_none() {
            counterexample =
                Some(Polynomial::monomial(mo.clone()).to_text(&VarNames::role("x", n)));
        }
    }
    Ok(IdentityReport {
        identity: identity.to_string(),
        n,
        m,
        l,
        degree_cap,
        checked: monos.len(),
        status: Status::from_bool(counterexample.is_none()),
        counterexample,
    })
}

/// `D_(m,l) = D'_l ∘ D_(m,0)` and `D_(m,l) = Proj_(m,l) ∘ D_(m+l)` on all
/// monomials of degree `<= cap`. The operators carry no group data, so the
/// same identities serve SL and GL.
pub fn verify_factorization_sbo(
    m: u32,
    ell: u32,
    n: usize,
    degree_cap: u32,
) -> Result<Vec<IdentityReport>> {
    let d = build_sbo(m, ell, n);
    let d0 = build_sbo(m, 0, n);
    let dprime = build_ido(ell, n - 1);
    let big = build_ido(m + ell, n);
    let proj = ProjOp::new(m, ell, n);
    let first = check_on_monomials("D(m,l) = D'(l) o D(m,0)", n, m, ell, degree_cap, |f| {
        let scalar = d0.op.apply(f)?.component(&Monomial::one(n - 1));
        Ok(dprime.op.apply(&scalar)? == d.op.apply(f)?)
    })?;
    let second = check_on_monomials("D(m,l) = Proj(m,l) o D(m+l)", n, m, ell, degree_cap, |f| {
        Ok(proj.apply(&big.op.apply(f)?)? == d.op.apply(f)?)
    })?;
    Ok(vec![first, second])
}

/// `F_G(1-k)`: polynomials of degree `< k`, as a monomial basis.
pub fn fg_submodule(k: u32, n: usize) -> Vec<Polynomial> {
    if k == 0 {
        return Vec::new();
    }
    monomials_up_to(n, k - 1)
        .into_iter()
        .map(Polynomial::monomial)
        .collect()
}

/// `dpi_{1-k}(X)` maps `F_G(1-k)` into itself for every basis element `X`.
pub fn fg_stable(k: u32, n: usize, flavor: Flavor) -> Result<bool> {
    let pd = ParabolicData::new(n, flavor)?;
    let p = ScalarRepParams {
        n,
        flavor,
        alpha: crate::params::SignPair::sl(Sign::Plus),
        lambda: crate::rep::Weight::sl(Rational::from_integer((1 - k as i64).into())),
    };
    let model = InducedModel::source(&p)?;
    for x in pd.basis_g() {
        let op = model.operator(&x)?;
        for f in fg_submodule(k, n) {
            let g = op.apply(&f)?;
            if g.degree().is_some_and(|d| d >= k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Finite image statements for `D_(m,l)` and `k = m + l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImagesReport {
    pub n: usize,
    pub m: u32,
    pub l: u32,
    /// `F_G(1-k)` is stable under `dpi_{1-k}`.
    pub stable: bool,
    /// `D_(m,l)` kills `F_G(1-k)`.
    pub annihilated: bool,
    /// Rank of `D_(m,0)(F_G(1-k))` and of the degree `< l` polynomials on `n-1` variables.
    pub image_rank: usize,
    pub expected_rank: usize,
    pub onto: bool,
    /// `D_(m,0) x_n^m`, expected `m!`.
    pub witness: String,
    /// `D_(m,0)` maps degree `<= d + m` onto degree `<= d` for all `d <= surjectivity_cap`.
    pub surjectivity_cap: u32,
    pub surjective: bool,
    pub status: Status,
}

pub fn image_computations(
    m: u32,
    ell: u32,
    n: usize,
    surjectivity_cap: u32,
) -> Result<ImagesReport> {
    let k = m + ell;
    let stable = k == 0 || fg_stable(k, n, Flavor::SL)?;
    let d = build_sbo(m, ell, n);
    let d0 = build_sbo(m, 0, n);
    let fg = fg_submodule(k, n);
    let mut annihilated = true;
    let mut image = Vec::new();
    for f in &fg {
        annihilated &= d.op.apply(f)?.is_zero();
        image.push(d0.op.apply(f)?.component(&Monomial::one(n - 1)));
    }
    let image_rank = span_rank(&image);
    let expected: Vec<Polynomial> = fg_submodule(ell, n - 1);
    let expected_rank = expected.len();
    let mut combined = image.clone();
    combined.extend(expected.iter().cloned());
    let onto = image_rank == expected_rank && span_rank(&combined) == expected_rank;
    let xm = Polynomial::monomial(Monomial::var(n, n - 1)).pow(m);
    let w = d0.op.apply(&xm)?.component(&Monomial::one(n - 1));
    let witness_ok = w.as_constant() == Some(factorial(m));
    let mut surjective = true;
    for top in 0..=surjectivity_cap {
        let imgs: Vec<Polynomial> = monomials_up_to(n, top + m)
            .into_iter()
            .map(|mo| {
                d0.op
                    .apply(&Polynomial::monomial(mo))
                    .map(|v| v.component(&Monomial::one(n - 1)))
            })
            .collect::<Result<_>>()?;
        surjective &= span_rank(&imgs) == monomials_up_to(n - 1, top).len();
    }
    let ok = stable && annihilated && onto && witness_ok && surjective;
    Ok(ImagesReport {
        n,
        m,
        l: ell,
        stable,
        annihilated,
        image_rank,
        expected_rank,
        onto,
        witness: w.to_text(&VarNames::role("x", n - 1)),
        surjectivity_cap,
        surjective,
        status: Status::from_bool(ok),
    })
}

/// Target of `D_(m,l)` from the source `(alpha, lambda)`:
/// `nu = lambda + (m + n l/(n-1), -l/(n-1))`, `beta = alpha + m + l`.
pub fn sbo_target(source: &ScalarRepParams, m: u32, ell: u32) -> TargetRepParams {
    let n = source.n;
    let frac = Rational::new((ell as i64).into(), ((n - 1) as i64).into());
    let first = &source.lambda.first + int(m as i64) + int(ell as i64) + &frac;
    let nu = match source.flavor {
        Flavor::SL => crate::rep::Weight::sl(first),
        Flavor::GL => crate::rep::Weight::gl(first, &source.lambda.second - &frac),
    };
    let beta = source.alpha.shift_first((m + ell) as i64);
    TargetRepParams {
        n,
        flavor: source.flavor,
        beta,
        nu,
        ell,
    }
}

/// Convenience: the target of `D_k` for `lambda = 1 - k`.
pub fn ido_target(n: usize, flavor: Flavor, k: u32, source: &ScalarRepParams) -> IdoTargetParams {
    let nn = n as i64;
    let kk = k as i64;
    let frac = Rational::new(kk.into(), nn.into());
    let tau = crate::rep::Weight {
        first: Rational::one() + &frac,
        second: if flavor == Flavor::SL {
            Rational::zero()
        } else {
            &source.lambda.second - &frac
        },
    };
    IdoTargetParams {
        n,
        flavor,
        delta: source.alpha.shift_first(kk),
        tau,
        k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::params::Sign;
    use crate::rep::TargetRepParams;

    fn x(n: usize, text: &str) -> Polynomial {
        Polynomial::parse(text, &VarNames::role("x", n)).unwrap()
    }

    #[test]
    fn sbo_examples() {
        let d = build_sbo(2, 0, 3);
        let v = apply_sbo(&d, &x(3, "x3^2")).unwrap();
        assert_eq!(
            v.component(&Monomial::one(2)),
            Polynomial::constant(2, int(2))
        );

        let d = build_sbo(1, 1, 2);
        let v = apply_sbo(&d, &x(2, "x1*x2")).unwrap();
        assert_eq!(v.component(&Monomial::new(vec![1])), Polynomial::one(1));

        let d = build_sbo(1, 1, 3);
        let v = apply_sbo(&d, &x(3, "x1*x2*x3")).unwrap();
        assert_eq!(v.component(&Monomial::new(vec![1, 0])), x(2, "x2"));
        assert_eq!(v.component(&Monomial::new(vec![0, 1])), x(2, "x1"));
        assert!(!apply_sbo(&d, &x(3, "x1*x3")).unwrap().is_zero());
        assert!(apply_sbo(&d, &x(3, "x1")).unwrap().is_zero());
    }

    #[test]
    fn ido_examples() {
        let d2 = build_ido(2, 2);
        let v = apply_ido(&d2, &x(2, "x1^2")).unwrap();
        assert_eq!(
            v.to_joint()
                .to_text(&VarNames::joint(&[("x", 2), ("y", 2)])),
            "y1^2"
        );
        let d0 = build_ido(0, 3);
        let f = x(3, "x1*x2 + 3*x3");
        assert_eq!(apply_ido(&d0, &f).unwrap().component(&Monomial::one(3)), f);
    }

    #[test]
    fn equivariance_examples() {
        let s = ScalarRepParams::sl(3, Sign::Plus, int(5));
        let good = Target::Restricted(TargetRepParams::sl(3, Sign::Minus, 0, int(6)));
        let d = build_sbo(1, 0, 3);
        assert!(check_equivariance(&d.op, &s, &good, 4, 3)
            .unwrap()
            .status
            .ok());
        let s2 = ScalarRepParams::sl(3, Sign::Plus, int(-2));
        let t2 = Target::Restricted(TargetRepParams::sl(3, Sign::Minus, 1, rat(3, 2)));
        assert!(check_equivariance(&build_sbo(2, 1, 3).op, &s2, &t2, 4, 3)
            .unwrap()
            .status
            .ok());
        let bad = Target::Restricted(TargetRepParams::sl(3, Sign::Minus, 0, int(7)));
        let r = check_equivariance(&d.op, &s, &bad, 4, 3).unwrap();
        assert!(!r.status.ok());
        assert!(!r.violations.is_empty());
    }

    #[test]
    fn sbo_targets_are_members() {
        use crate::params::{in_lambda_gl, in_lambda_sl, GLTuple, SLQuadruple, SignPair};
        for n in 2..=4 {
            for (m, l) in [(0, 0), (2, 0), (1, 1), (0, 2), (2, 2)] {
                let lam = int(1 - (m + l) as i64);
                let s = ScalarRepParams::sl(n, Sign::Plus, lam.clone());
                let t = sbo_target(&s, m, l);
                assert!(
                    in_lambda_sl(&SLQuadruple::from_params(&s, &t), n).is_member(),
                    "n={n} m={m} l={l} {t:?}"
                );
                let d = build_sbo(m, l, n);
                let r = check_equivariance(&d.op, &s, &Target::Restricted(t), 4, 1).unwrap();
                assert!(r.status.ok(), "sl n={n} m={m} l={l}: {:?}", r.violations);
                let g = ScalarRepParams::gl(
                    n,
                    SignPair(Sign::Minus, Sign::Plus),
                    crate::rep::Weight::gl(lam, rat(1, 2)),
                );
                let t = sbo_target(&g, m, l);
                assert!(in_lambda_gl(&GLTuple::from_params(&g, &t), n).is_member());
                let r = check_equivariance(&d.op, &g, &Target::Restricted(t), 4, 1).unwrap();
                assert!(r.status.ok(), "gl n={n} m={m} l={l}: {:?}", r.violations);
            }
        }
    }

    #[test]
    fn ido_equivariance() {
        let s = ScalarRepParams::sl(2, Sign::Plus, int(-1));
        let t = ido_target(2, Flavor::SL, 2, &s);
        assert!(
            check_equivariance(&build_ido(2, 2).op, &s, &Target::Full(t), 4, 1)
                .unwrap()
                .status
                .ok()
        );
    }

    #[test]
    fn factorization_small() {
        for r in verify_factorization_sbo(1, 1, 2, 5).unwrap() {
            assert!(r.status.ok(), "{r:?}");
            assert_eq!(r.checked, 21);
        }
    }

    #[test]
    fn images_small() {
        let r = image_computations(1, 2, 3, 3).unwrap();
        assert!(r.status.ok(), "{r:?}");
        assert_eq!(r.witness, "1");
        assert!(fg_stable(1, 2, Flavor::SL).unwrap());
    }
}
