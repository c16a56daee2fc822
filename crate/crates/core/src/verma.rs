//! Generalized Verma modules in the Fourier picture and their homomorphisms.
//!
//! `M(sym^l, s)` of `G` (rank `n`) or `G'` (rank `n - 1`) is modeled on
//! `C[zeta_1..zeta_rank] ⊗ Sym^l`, the fiber written with variables
//! `e_1..e_rank`. The algebra acts by the Fourier transform, in the base
//! variables, of the dual-twisted action on `I(poly^l, -s)`; in particular
//! `N_j^-` acts by multiplication by `zeta_j`, so `N^{-k} ⊗ v` is `zeta^k ⊗ v`.
//!
//! A homomorphism is fixed by the images of the fiber monomials `e^l` and
//! extended by `p(zeta') ⊗ e^l -> p(zeta) * image(e^l)`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    binomial, monomial_basis, rat, span_rank, Monomial, Polynomial, Rational, VarNames,
};
use crate::error::{Error, Result};
use crate::fmethod::{classify, levi_character, sign_generators, ClassRow, ClassifyConfig};
use crate::liealg::{Flavor, ParabolicData};
use crate::operators::{element_name, IdentityReport, Status, Violation};
use crate::params::SignPair;
use crate::rep::{fiber_vars, Fiber, InducedModel, VectorValuedPolynomial, Weight};
use crate::weyl::WeylElement;

/// `M(sym^l, s)^sign` of `G` (`rank = n`) or `G'` (`rank = n - 1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VermaModule {
    pub n: usize,
    pub flavor: Flavor,
    pub rank: usize,
    pub fiber_degree: u32,
    pub weight: Weight,
    pub sign: SignPair,
}

impl VermaModule {
    /// Scalar `M(s)` of `G`.
    pub fn scalar(n: usize, flavor: Flavor, s: Weight, sign: SignPair) -> Self {
        VermaModule {
            n,
            flavor,
            rank: n,
            fiber_degree: 0,
            weight: s,
            sign,
        }
    }

    /// `M(sym^l_n, s)` of `G`.
    pub fn vector(n: usize, flavor: Flavor, l: u32, s: Weight, sign: SignPair) -> Self {
        VermaModule {
            n,
            flavor,
            rank: n,
            fiber_degree: l,
            weight: s,
            sign,
        }
    }

    /// `M'(sym^l_{n-1}, r)` of `G'`.
    pub fn subgroup(n: usize, flavor: Flavor, l: u32, r: Weight, sign: SignPair) -> Self {
        VermaModule {
            n,
            flavor,
            rank: n - 1,
            fiber_degree: l,
            weight: r,
            sign,
        }
    }

    fn model(&self) -> Result<InducedModel> {
        let pd = ParabolicData::new(self.n, self.flavor)?;
        Ok(InducedModel::new(
            pd,
            self.rank,
            Fiber::Poly(self.fiber_degree),
            self.weight.neg(),
        )
        .dual())
    }

    pub fn fiber_vars(&self) -> usize {
        fiber_vars(self.rank, self.fiber_degree)
    }

    pub fn arity(&self) -> usize {
        self.rank + self.fiber_vars()
    }

    pub fn is_subgroup(&self) -> bool {
        self.rank + 1 == self.n
    }

    /// Action of `X` on the joint ring `(zeta, e)`.
    pub fn action(&self, x: &crate::liealg::LieElement) -> Result<WeylElement> {
        self.model()?.fourier_operator(x)
    }

    /// Fiber basis `e^l`, `|l| = fiber_degree`.
    pub fn fiber_basis(&self) -> Vec<Monomial> {
        if self.fiber_vars() == 0 {
            vec![Monomial::one(0)]
        } else {
            monomial_basis(self.rank, self.fiber_degree)
        }
    }

    fn joint(&self, z: &Monomial, e: &Monomial) -> Monomial {
        let mut v = z.exps().to_vec();
        v.extend_from_slice(e.exps());
        Monomial::new(v)
    }

    /// Basis of grade `k`: `zeta^a ⊗ e^l` with `|a| = k`.
    pub fn grade(&self, k: u32) -> Vec<Polynomial> {
        let fibers = self.fiber_basis();
        let mut out = Vec::new();
        for z in monomial_basis(self.rank, k) {
            for e in &fibers {
                out.push(Polynomial::monomial(self.joint(&z, e)));
            }
        }
        out
    }

    /// `C(k + rank - 1, rank - 1) * dim(fiber)`.
    pub fn grade_dim(&self, k: u32) -> usize {
        let r = self.rank as u64;
        let fib = if self.fiber_vars() == 0 {
            1
        } else {
            binomial(self.fiber_degree as u64 + r - 1, r - 1)
        };
        (binomial(k as u64 + r - 1, r - 1) * fib) as usize
    }

    pub fn names(&self) -> VarNames {
        VarNames::joint(&[("zeta", self.rank), ("e", self.fiber_vars())])
    }
}

/// A homomorphism between Fourier-picture Verma modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaHom {
    pub source: VermaModule,
    pub target: VermaModule,
    /// Image of each fiber monomial `e^l` of the source.
    pub images: BTreeMap<Monomial, Polynomial>,
}

impl VermaHom {
    /// Evaluates the homomorphism on an element of the source joint ring.
    pub fn apply(&self, v: &Polynomial) -> Result<Polynomial> {
        let s = &self.source;
        if v.arity() != s.arity() {
            return Err(Error::ArityMismatch {
                left: v.arity(),
                right: s.arity(),
            });
        }
        let ta = self.target.arity();
        let mut out = Polynomial::zero(ta);
        for (m, c) in v.terms() {
            let base = m.slice(0, s.rank).embed(0, ta);
            let label = if s.fiber_vars() == 0 {
                Monomial::one(0)
            } else {
                m.slice(s.rank, s.arity())
            };
            let img = self
                .images
                .get(&label)
                .ok_or_else(|| Error::SizeMismatch("fiber label without image".into()))?;
            out.add_scaled(
                &img.mul_monomial(&base, &Rational::from_integer(1.into())),
                c,
            );
        }
        Ok(out)
    }

    /// `F_c` of a homomorphism into a scalar module: the polynomial with
    /// component `image(e^l)` on `~y_l`.
    pub fn fc(&self) -> Result<VectorValuedPolynomial> {
        if self.target.fiber_vars() != 0 {
            return Err(Error::SizeMismatch("F_c needs a scalar target".into()));
        }
        let s = &self.source;
        let mut v = VectorValuedPolynomial::zero(self.target.rank, s.fiber_vars(), s.fiber_degree);
        for (label, p) in &self.images {
            v.add_component(label.clone(), p);
        }
        Ok(v)
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &VermaHom) -> Result<VermaHom> {
        let mut images = BTreeMap::new();
        for (label, p) in &self.images {
            images.insert(label.clone(), g.apply(p)?);
        }
        Ok(VermaHom {
            source: self.source.clone(),
            target: g.target.clone(),
            images,
        })
    }
}

fn weight(flavor: Flavor, first: Rational, second: Rational) -> Weight {
    match flavor {
        Flavor::SL => Weight::sl(first),
        Flavor::GL => Weight::gl(first, second),
    }
}

/// `Phi_(m,l): M'(sym^l, r) -> M(s)`, `e^l -> zeta_n^m zeta^l`.
pub fn build_phi(m: u32, l: u32, source: VermaModule, target: VermaModule) -> Result<VermaHom> {
    let n = target.n;
    if !source.is_subgroup()
        || target.rank != n
        || target.fiber_degree != 0
        || source.fiber_degree != l
    {
        return Err(Error::InvalidParams(
            "Phi maps M'(sym^l) to a scalar M(s)".into(),
        ));
    }
    let mut images = BTreeMap::new();
    for e in source.fiber_basis() {
        let z = if e.arity() == 0 {
            Monomial::one(n - 1)
        } else {
            e.clone()
        };
        images.insert(e, Polynomial::monomial(z.insert(n - 1, m)));
    }
    Ok(VermaHom {
        source,
        target,
        images,
    })
}

/// `phi_k: M(sym^k, u) -> M(s)` (rank `n`) or `M'(sym^k, u) -> M'(s)`
/// (rank `n - 1`), `e^k -> zeta^k`.
pub fn build_phi_k(k: u32, source: VermaModule, target: VermaModule) -> Result<VermaHom> {
    if source.rank != target.rank || target.fiber_degree != 0 || source.fiber_degree != k {
        return Err(Error::InvalidParams(
            "phi_k maps M(sym^k) to a scalar module of equal rank".into(),
        ));
    }
    let mut images = BTreeMap::new();
    for e in source.fiber_basis() {
        let z = if e.arity() == 0 {
            Monomial::one(target.rank)
        } else {
            e.clone()
        };
        images.insert(e, Polynomial::monomial(z));
    }
    Ok(VermaHom {
        source,
        target,
        images,
    })
}

/// `Emb_(m,l): M'(sym^l, r) -> M(sym^{m+l}, u)`, `e^l -> e_n^m e^l` in grade 0.
pub fn build_emb(m: u32, l: u32, source: VermaModule, target: VermaModule) -> Result<VermaHom> {
    let n = target.n;
    if !source.is_subgroup()
        || target.rank != n
        || target.fiber_degree != m + l
        || source.fiber_degree != l
    {
        return Err(Error::InvalidParams(
            "Emb maps M'(sym^l) to M(sym^(m+l))".into(),
        ));
    }
    let ta = target.arity();
    let mut images = BTreeMap::new();
    for e in source.fiber_basis() {
        let fib = if e.arity() == 0 {
            Monomial::one(n - 1)
        } else {
            e.clone()
        };
        let full = fib.insert(n - 1, m);
        let img = if target.fiber_vars() == 0 {
            Monomial::one(ta)
        } else {
            full.embed(n, ta)
        };
        images.insert(e, Polynomial::monomial(img));
    }
    Ok(VermaHom {
        source,
        target,
        images,
    })
}

/// The modules of the factorization diagram at the critical parameters:
/// `s = m + l - 1`, `r = -(1 + l/(n-1))`.
#[derive(Clone, Debug)]
pub struct FactorizationModules {
    pub source: VermaModule,
    pub target: VermaModule,
    /// `M'(s')`, `s' = l - 1`.
    pub middle_subgroup: VermaModule,
    /// `M(sym^{m+l}, u)`, `u = -(1 + (m+l)/n)`.
    pub middle_vector: VermaModule,
}

pub fn factorization_modules(
    m: u32,
    l: u32,
    n: usize,
    flavor: Flavor,
    alpha: SignPair,
) -> FactorizationModules {
    let nn = n as i64;
    let (mi, li) = (m as i64, l as i64);
    let s = weight(
        flavor,
        Rational::from_integer((mi + li - 1).into()),
        Rational::zero(),
    );
    let r = weight(flavor, -(rat(1, 1) + rat(li, nn - 1)), rat(li, nn - 1));
    let u = weight(flavor, -(rat(1, 1) + rat(mi + li, nn)), rat(mi + li, nn));
    let sp = weight(
        flavor,
        Rational::from_integer((li - 1).into()),
        Rational::zero(),
    );
    let beta = alpha.shift_first(mi + li);
    FactorizationModules {
        source: VermaModule::subgroup(n, flavor, l, r, beta),
        target: VermaModule::scalar(n, flavor, s, alpha),
        middle_subgroup: VermaModule::subgroup(n, flavor, 0, sp, alpha.shift_first(mi)),
        middle_vector: VermaModule::vector(n, flavor, m + l, u, beta),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomReport {
    pub source: VermaModule,
    pub target: VermaModule,
    pub degree_cap: u32,
    pub checked: usize,
    pub sign_ok: bool,
    pub status: Status,
    pub violations: Vec<Violation>,
}

/// Checks `h(X v) = X h(v)` for every standard basis element `X` of the
/// algebra of the source and every basis vector `v` of grade `<= cap`, plus
/// the parity of the images under the sign generators of the source Levi.
pub fn check_hom_equivariance(
    h: &VermaHom,
    degree_cap: u32,
    max_violations: usize,
) -> Result<HomReport> {
    let s = &h.source;
    let t = &h.target;
    let pd = ParabolicData::new(s.n, s.flavor)?;
    let basis = if s.is_subgroup() {
        pd.basis_gprime()
    } else {
        pd.basis_g()
    };
    let vectors: Vec<Polynomial> = (0..=degree_cap).flat_map(|k| s.grade(k)).collect();
    let mut checked = 0;
    let mut violations = Vec::new();
    for x in &basis {
        let a = s.action(x)?;
        let b = t.action(x)?;
        let res: Vec<Result<bool>> = vectors
            .par_iter()
            .map(|v| Ok(h.apply(&a.apply(v)?)? == b.apply(&h.apply(v)?)?))
            .collect();
        for (v, r) in vectors.iter().zip(res) {
            checked += 1;
            if !r? && violations.len() < max_violations {
                violations.push(Violation {
                    element: element_name(x),
                    monomial: v.to_text(&s.names()),
                });
            }
        }
    }
    let sign_ok = sign_check(h);
    Ok(HomReport {
        source: s.clone(),
        target: t.clone(),
        degree_cap,
        checked,
        sign_ok,
        status: Status::from_bool(violations.is_empty() && sign_ok),
        violations,
    })
}

/// Every term `zeta^a e^b` of `image(e^l)` must transform under the sign
/// generators as the product of the two characters.
fn sign_check(h: &VermaHom) -> bool {
    let s = &h.source;
    let t = &h.target;
    for g in sign_generators(s.flavor, s.n, s.rank) {
        let want = levi_character(t.sign, t.flavor, &g, t.rank)
            * levi_character(s.sign, s.flavor, &g, s.rank);
        for (label, img) in &h.images {
            let label_sign: i32 = (0..label.arity())
                .map(|i| g[i + 1].pow(label.exp(i)))
                .product();
            for (m, _) in img.terms() {
                let mut sign = label_sign;
                for j in 0..t.rank {
                    sign *= (g[0] * g[j + 1]).pow(m.exp(j));
                }
                for i in 0..t.fiber_vars() {
                    sign *= g[i + 1].pow(m.exp(t.rank + i));
                }
                if sign != want {
                    return false;
                }
            }
        }
    }
    true
}

/// `Phi_(m,l) = Phi_(m,0) ∘ phi'_l = phi_(m+l) ∘ Emb_(m,l)` on all source
/// vectors of grade `<= cap`, plus equivariance of every map involved.
pub fn verify_factorization_verma(
    m: u32,
    l: u32,
    n: usize,
    flavor: Flavor,
    degree_cap: u32,
) -> Result<IdentityReport> {
    let alpha = SignPair::all(flavor)[0];
    let fm = factorization_modules(m, l, n, flavor, alpha);
    let phi = build_phi(m, l, fm.source.clone(), fm.target.clone())?;
    let phi_l = build_phi_k(l, fm.source.clone(), fm.middle_subgroup.clone())?;
    let phi_m0 = build_phi(m, 0, fm.middle_subgroup.clone(), fm.target.clone())?;
    let emb = build_emb(m, l, fm.source.clone(), fm.middle_vector.clone())?;
    let phi_k = build_phi_k(m + l, fm.middle_vector.clone(), fm.target.clone())?;
    let route_b = phi_l.then(&phi_m0)?;
    let route_c = emb.then(&phi_k)?;
    let vectors: Vec<Polynomial> = (0..=degree_cap).flat_map(|k| fm.source.grade(k)).collect();
    let mut counterexample = None;
    for v in &vectors {
        let a = phi.apply(v)?;
        if a != route_b.apply(v)? || a != route_c.apply(v)? {
            counterexample = Some(v.to_text(&fm.source.names()));
            break;
        }
    }
    let mut maps_ok = true;
    for h in [&phi, &phi_l, &phi_m0, &emb, &phi_k] {
        maps_ok &= check_hom_equivariance(h, degree_cap.min(3), 1)?.status.ok();
    }
    if !maps_ok && counterexample.is_none() {
        counterexample = Some("a factor is not a homomorphism".into());
    }
    Ok(IdentityReport {
        identity: "Phi(m,l) = Phi(m,0) o phi'(l) = phi(m+l) o Emb(m,l)".into(),
        n,
        m,
        l,
        degree_cap,
        checked: vectors.len(),
        status: Status::from_bool(counterexample.is_none()),
        counterexample,
    })
}

/// Injectivity of `Phi_(m,0)` on grades `<= cap`: images of a basis stay
/// linearly independent.
pub fn phi_injective(m: u32, n: usize, degree_cap: u32) -> Result<bool> {
    let src = VermaModule::subgroup(
        n,
        Flavor::SL,
        0,
        Weight::sl(Rational::zero()),
        SignPair::all(Flavor::SL)[0],
    );
    let tgt = VermaModule::scalar(
        n,
        Flavor::SL,
        Weight::sl(Rational::zero()),
        SignPair::all(Flavor::SL)[0],
    );
    let phi = build_phi(m, 0, src.clone(), tgt)?;
    for k in 0..=degree_cap {
        let grade = src.grade(k);
        let imgs: Vec<Polynomial> = grade.iter().map(|v| phi.apply(v)).collect::<Result<_>>()?;
        if span_rank(&imgs) != grade.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Row of the homomorphism classification: `(s, r) = (-lambda, -nu)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomRow {
    pub flavor: Flavor,
    pub n: usize,
    pub sign_g: String,
    pub sign_gprime: String,
    pub ell: u32,
    pub s: String,
    pub r: String,
    pub predicted_dim: usize,
    pub computed_dim: usize,
    pub images: String,
}

impl crate::report::Tabular for HomRow {
    fn header() -> Vec<&'static str> {
        vec![
            "flavor",
            "n",
            "sign_g",
            "sign_gprime",
            "ell",
            "s",
            "r",
            "predicted_dim",
            "computed_dim",
            "images",
        ]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.flavor.to_string(),
            self.n.to_string(),
            self.sign_g.clone(),
            self.sign_gprime.clone(),
            self.ell.to_string(),
            self.s.clone(),
            self.r.clone(),
            self.predicted_dim.to_string(),
            self.computed_dim.to_string(),
            self.images.clone(),
        ]
    }
}

impl HomRow {
    pub fn from_class_row(row: &ClassRow) -> Self {
        HomRow {
            flavor: row.flavor,
            n: row.n,
            sign_g: row.alpha.clone(),
            sign_gprime: row.beta.clone(),
            ell: row.ell,
            s: row.lambda_weight.neg().label(row.flavor),
            r: row.nu_weight.neg().label(row.flavor),
            predicted_dim: row.predicted_dim,
            computed_dim: row.computed_dim,
            images: row.basis_symbols.clone(),
        }
    }

    pub fn matches(&self) -> bool {
        self.predicted_dim == self.computed_dim
    }
}

/// Classification of homomorphisms `M'(sym^l, r) -> M(s)` through the
/// F-method: the same scan as [`classify`], relabeled by `(s, r) = (-lambda, -nu)`.
/// The connected mode gives `g'`-homomorphisms, the full mode `(g', P')`-ones.
pub fn classify_homs(cfg: &ClassifyConfig) -> Result<Vec<HomRow>> {
    Ok(classify(cfg)?.iter().map(HomRow::from_class_row).collect())
}
