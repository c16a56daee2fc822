//! The F-method engine.
//!
//! A symmetry breaking operator `I(triv, lambda)^alpha -> J(poly^l, nu)^beta`
//! corresponds to a polynomial `psi` on the joint ring `(zeta_1..zeta_n,
//! y_1..y_f)` that is
//!
//! * invariant under the target Levi algebra acting by `dpi_hat` on `zeta`
//!   and by the target character and fiber action on `y`,
//! * of the right parity under the sign generators of the target Levi group,
//! * annihilated by `dpi_hat(N_j^+)` for every `N_j^+` in the target algebra.
//!
//! The first two conditions give the equivariant space, the third the
//! F-system. Both are solved by exact nullspaces, degree by degree.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    canonical_basis, common_denominator, int, monomial_basis, rat, Matrix, Monomial, Polynomial,
    Rational, VarNames,
};
use crate::error::{Error, Result};
use crate::liealg::{Flavor, LieElement, ParabolicData};
use crate::params::{
    in_lambda_gl, in_lambda_ido, in_lambda_sl, GLTuple, IdoTargetParams, Membership, SLQuadruple,
    Sign, SignPair,
};
use crate::rep::{
    dpi_hat, Fiber, InducedModel, ScalarRepParams, TargetRepParams, VectorValuedPolynomial, Weight,
};
use crate::report::Tabular;
use crate::weyl::WeylElement;

/// Target of the operator: a representation of the subgroup (symmetry
/// breaking) or of the group itself (invariant differential operators).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Target {
    Restricted(TargetRepParams),
    Full(IdoTargetParams),
}

impl Target {
    fn model(&self) -> Result<InducedModel> {
        match self {
            Target::Restricted(t) => InducedModel::target(&t.canonical()),
            Target::Full(t) => {
                let pd = ParabolicData::new(t.n, t.flavor)?;
                Ok(InducedModel::new(pd, t.n, Fiber::Poly(t.k), t.tau.clone()))
            }
        }
    }

    /// Size of the target Levi block minus one: `n - 1` or `n`.
    pub fn rank(&self) -> usize {
        match self {
            Target::Restricted(t) => t.n - 1,
            Target::Full(t) => t.n,
        }
    }

    pub fn fiber_degree(&self) -> u32 {
        match self {
            Target::Restricted(t) => t.canonical().ell,
            Target::Full(t) => t.k,
        }
    }

    fn signs(&self) -> SignPair {
        match self {
            Target::Restricted(t) => t.canonical().beta,
            Target::Full(t) => t.delta,
        }
    }

    fn n(&self) -> usize {
        match self {
            Target::Restricted(t) => t.n,
            Target::Full(t) => t.n,
        }
    }

    fn flavor(&self) -> Flavor {
        match self {
            Target::Restricted(t) => t.flavor,
            Target::Full(t) => t.flavor,
        }
    }
}

/// Which part of the target Levi group is imposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
pub enum Equivariance {
    /// The full Levi group, sign conditions included.
    Full,
    /// The identity component only.
    Connected,
}

/// Diagonal sign generators of the disconnected part of the target Levi
/// group, as lists of diagonal entries.
pub fn sign_generators(flavor: Flavor, n: usize, rank: usize) -> Vec<Vec<i32>> {
    let size = n + 1;
    let flip = |idx: &[usize]| {
        let mut g = vec![1; size];
        for &i in idx {
            g[i] = -1;
        }
        g
    };
    match flavor {
        Flavor::SL => vec![flip(&[0, rank])],
        Flavor::GL => vec![flip(&[0]), flip(&[rank])],
    }
}

fn sign_value(s: Sign, x: i32) -> i32 {
    if x < 0 {
        s.value()
    } else {
        1
    }
}

/// `sgn^alpha` on the block `1..=rank` (SL), or `(sgn^{a1} of g_00, sgn^{a2}
/// of det of the block)` (GL).
pub fn levi_character(signs: SignPair, flavor: Flavor, g: &[i32], rank: usize) -> i32 {
    let det: i32 = g[1..=rank].iter().product();
    match flavor {
        Flavor::SL => sign_value(signs.0, det),
        Flavor::GL => sign_value(signs.0, g[0]) * sign_value(signs.1, det),
    }
}

/// Precomputed constraint data for one `(source, target, mode)`.
struct Problem {
    n: usize,
    f: usize,
    ell: u32,
    /// Scaled eigenvalue data of diagonal Levi elements:
    /// `(constant, per-variable)` with eigenvalue zero iff the sum is zero.
    diag: Vec<(i64, Vec<i64>)>,
    offdiag: Vec<WeylElement>,
    /// Per generator: the sign of each joint variable and the required parity.
    signs: Vec<(Vec<i32>, i32)>,
    fsystem: Vec<WeylElement>,
}

impl Problem {
    fn new(source: &ScalarRepParams, target: &Target, mode: Equivariance) -> Result<Self> {
        let n = source.n;
        if target.n() != n || target.flavor() != source.flavor {
            return Err(Error::InvalidParams(
                "source and target disagree on (n, flavor)".into(),
            ));
        }
        let pd = source.parabolic()?;
        let model = target.model()?;
        let rank = target.rank();
        let f = model.fiber_vars();
        let arity = n + f;
        let levi_op = |z: &LieElement| -> Result<WeylElement> {
            let a = dpi_hat(z, source)?.embed(0, arity);
            let b = model.fiber_operator(z)?.embed(n, arity);
            Ok(a.add(&b))
        };
        let mut diag = Vec::new();
        let mut offdiag = Vec::new();
        for z in pd.basis_levi(rank) {
            let op = levi_op(&z)?;
            if z.is_diagonal() {
                diag.push(eigen_data(&op, arity)?);
            } else {
                offdiag.push(op);
            }
        }
        let mut signs = Vec::new();
        if mode == Equivariance::Full {
            for g in sign_generators(source.flavor, n, rank) {
                let mut var = Vec::with_capacity(arity);
                for j in 1..=n {
                    var.push(g[0] * g[j]);
                }
                var.extend_from_slice(&g[1..=f]);
                let want = levi_character(source.alpha, source.flavor, &g, n)
                    * levi_character(target.signs(), source.flavor, &g, rank);
                signs.push((var, want));
            }
        }
        let fsystem = (1..=rank)
            .map(|j| Ok(dpi_hat(&pd.n_plus(j), source)?.embed(0, arity)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Problem {
            n,
            f,
            ell: target.fiber_degree(),
            diag,
            offdiag,
            signs,
            fsystem,
        })
    }

    fn admissible(&self, m: &Monomial) -> bool {
        let e = m.exps();
        let weight_ok = self
            .diag
            .iter()
            .all(|(c0, cs)| c0 + cs.iter().zip(e).map(|(c, &k)| c * k as i64).sum::<i64>() == 0);
        weight_ok
            && self.signs.iter().all(|(var, want)| {
                let odd: u32 = var
                    .iter()
                    .zip(e)
                    .filter(|(s, _)| **s < 0)
                    .map(|(_, &k)| k)
                    .sum();
                let sign = if odd.is_multiple_of(2) { 1 } else { -1 };
                sign == *want
            })
    }

    /// Monomials of `zeta`-degree `d` tensored with the fiber basis that
    /// pass the weight and sign filters.
    fn candidates(&self, d: u32) -> Vec<Monomial> {
        let fibers = if self.f == 0 {
            vec![Monomial::one(0)]
        } else {
            monomial_basis(self.f, self.ell)
        };
        let mut out = Vec::new();
        for z in monomial_basis(self.n, d) {
            for y in &fibers {
                let mut e = z.exps().to_vec();
                e.extend_from_slice(y.exps());
                let m = Monomial::new(e);
                if self.admissible(&m) {
                    out.push(m);
                }
            }
        }
        out
    }

    fn equivariant(&self, d: u32) -> Result<Vec<Polynomial>> {
        let cand = self.candidates(d);
        if cand.is_empty() {
            return Ok(Vec::new());
        }
        let cols: Vec<Polynomial> = cand
            .iter()
            .map(|m| Polynomial::monomial(m.clone()))
            .collect();
        kernel(&self.offdiag, &cols)
    }
}

/// Affine eigenvalue data of an operator that is diagonal on monomials,
/// scaled to integers.
fn eigen_data(op: &WeylElement, arity: usize) -> Result<(i64, Vec<i64>)> {
    let c0 = op
        .apply(&Polynomial::one(arity))?
        .as_constant()
        .ok_or(Error::NonConstantCoefficient)?;
    let mut cs = Vec::with_capacity(arity);
    for k in 0..arity {
        let v = Monomial::var(arity, k);
        let img = op.apply(&Polynomial::monomial(v.clone()))?;
        let c = img.coeff(&v);
        if img.len() > usize::from(!c.is_zero()) {
            return Err(Error::NonConstantCoefficient);
        }
        cs.push(c - &c0);
    }
    let den = common_denominator(std::iter::once(&c0).chain(cs.iter()));
    let scale = Rational::from_integer(den);
    let to_i64 = |q: &Rational| -> Result<i64> {
        (q * &scale)
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::InvalidParams("weight coefficient out of range".into()))
    };
    Ok((
        to_i64(&c0)?,
        cs.iter().map(to_i64).collect::<Result<Vec<_>>>()?,
    ))
}

/// Kernel of the operators `ops` on the span of `cols`, as polynomials.
pub(crate) fn kernel(ops: &[WeylElement], cols: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if cols.is_empty() {
        return Ok(Vec::new());
    }
    let arity = cols[0].arity();
    let mut rows: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
    for (c, p) in cols.iter().enumerate() {
        for (k, op) in ops.iter().enumerate() {
            for (m, v) in op.apply(p)?.terms() {
                let next = rows.len();
                let r = *rows.entry((k, m.clone())).or_insert(next);
                entries.push((r, c, v.clone()));
            }
        }
    }
    let mut mat = Matrix::zeros(rows.len(), cols.len());
    for (r, c, v) in entries {
        mat.set(r, c, v);
    }
    Ok(mat
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut p = Polynomial::zero(arity);
            for (c, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    p.add_scaled(&cols[c], x);
                }
            }
            p
        })
        .collect())
}

/// Equivariant elements of a fixed `zeta`-degree.
#[derive(Clone, Debug, Serialize)]
pub struct EquivariantSpace {
    pub source: ScalarRepParams,
    pub target: Target,
    pub mode: Equivariance,
    pub degree: u32,
    pub fiber_degree: u32,
    #[serde(skip)]
    pub basis: Vec<Polynomial>,
}

impl EquivariantSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Equivariant basis in `zeta`-degree `degree` for a symmetry breaking target.
pub fn equivariant_basis(
    source: &ScalarRepParams,
    target: &TargetRepParams,
    degree: u32,
    mode: Equivariance,
) -> Result<EquivariantSpace> {
    equivariant_basis_for(source, &Target::Restricted(target.clone()), degree, mode)
}

pub fn equivariant_basis_for(
    source: &ScalarRepParams,
    target: &Target,
    degree: u32,
    mode: Equivariance,
) -> Result<EquivariantSpace> {
    let prob = Problem::new(source, target, mode)?;
    Ok(EquivariantSpace {
        source: source.clone(),
        target: target.clone(),
        mode,
        degree,
        fiber_degree: prob.ell,
        basis: prob.equivariant(degree)?,
    })
}

/// Size of one F-system block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockInfo {
    pub degree: u32,
    pub equivariant_dim: usize,
    pub rows: usize,
    pub solutions: usize,
}

/// Solutions of the F-system on the joint ring `(zeta, y)`.
#[derive(Clone, Debug, Serialize)]
pub struct SolutionSpace {
    pub source: ScalarRepParams,
    pub target: Target,
    pub mode: Equivariance,
    pub degree_cap: u32,
    pub blocks: Vec<BlockInfo>,
    /// Canonical (reduced echelon) basis, leading monomial first.
    #[serde(skip)]
    pub basis: Vec<Polynomial>,
    pub n: usize,
    pub fiber_vars: usize,
    pub fiber_degree: u32,
    #[serde(skip)]
    fsystem: Vec<WeylElement>,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn names(&self) -> VarNames {
        VarNames::joint(&[("zeta", self.n), ("y", self.fiber_vars)])
    }

    /// Basis in text form.
    pub fn symbols(&self) -> Vec<String> {
        let names = self.names();
        self.basis.iter().map(|p| p.to_text(&names)).collect()
    }

    /// Components on the `~y_l` basis of the fiber.
    pub fn vector_valued(&self) -> Result<Vec<VectorValuedPolynomial>> {
        self.basis
            .iter()
            .map(|p| {
                VectorValuedPolynomial::from_joint(p, self.n, self.fiber_vars, self.fiber_degree)
            })
            .collect()
    }

    /// Re-checks that every basis element is annihilated by the F-system.
    pub fn verify(&self) -> Result<bool> {
        for p in &self.basis {
            for op in &self.fsystem {
                if !op.apply(p)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Solves the F-system for a symmetry breaking target in all `zeta`-degrees
/// up to `degree_cap`.
pub fn solve_fsystem(
    source: &ScalarRepParams,
    target: &TargetRepParams,
    degree_cap: u32,
    mode: Equivariance,
) -> Result<SolutionSpace> {
    solve(
        source,
        &Target::Restricted(target.clone()),
        degree_cap,
        mode,
    )
}

/// The same solver with `G' = G`: all `N_j^+`, `j = 1..n`, and the Levi
/// group of `G`. Used for invariant differential operators.
pub fn solve_fsystem_full_nilradical(
    source: &ScalarRepParams,
    target: &IdoTargetParams,
    degree_cap: u32,
) -> Result<SolutionSpace> {
    solve(
        source,
        &Target::Full(target.clone()),
        degree_cap,
        Equivariance::Full,
    )
}

pub fn solve(
    source: &ScalarRepParams,
    target: &Target,
    degree_cap: u32,
    mode: Equivariance,
) -> Result<SolutionSpace> {
    let prob = Problem::new(source, target, mode)?;
    let mut blocks = Vec::new();
    let mut sols = Vec::new();
    for d in 0..=degree_cap {
        let eq = prob.equivariant(d)?;
        if eq.is_empty() {
            continue;
        }
        // The F-system lowers the zeta-degree by one; anything else would
        // couple different degrees.
        for p in &eq {
            for op in &prob.fsystem {
                let img = op.apply(p)?;
                if img
                    .terms()
                    .any(|(m, _)| m.slice(0, prob.n).degree() + 1 != d)
                {
                    return Err(Error::InvalidParams(format!(
                        "F-system mixes degrees at degree {d}"
                    )));
                }
            }
        }
        let ker = kernel(&prob.fsystem, &eq)?;
        blocks.push(BlockInfo {
            degree: d,
            equivariant_dim: eq.len(),
            rows: prob.fsystem.len(),
            solutions: ker.len(),
        });
        sols.extend(ker);
    }
    Ok(SolutionSpace {
        source: source.clone(),
        target: target.clone(),
        mode,
        degree_cap,
        blocks,
        basis: canonical_basis(&sols),
        n: prob.n,
        fiber_vars: prob.f,
        fiber_degree: prob.ell,
        fsystem: prob.fsystem.clone(),
    })
}

/// One row of a classification table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub flavor: Flavor,
    pub n: usize,
    pub alpha: String,
    pub beta: String,
    pub ell: u32,
    pub lambda: String,
    pub nu: String,
    pub predicted_dim: usize,
    pub computed_dim: usize,
    pub basis_symbols: String,
    #[serde(skip)]
    pub lambda_weight: Weight,
    #[serde(skip)]
    pub nu_weight: Weight,
    #[serde(skip)]
    pub alpha_signs: SignPair,
    #[serde(skip)]
    pub beta_signs: SignPair,
}

impl ClassRow {
    pub fn matches(&self) -> bool {
        self.predicted_dim == self.computed_dim
    }
}

impl Tabular for ClassRow {
    fn header() -> Vec<&'static str> {
        vec![
            "flavor",
            "n",
            "alpha",
            "beta",
            "ell",
            "lambda",
            "nu",
            "predicted_dim",
            "computed_dim",
            "basis_symbols",
        ]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.flavor.to_string(),
            self.n.to_string(),
            self.alpha.clone(),
            self.beta.clone(),
            self.ell.to_string(),
            self.lambda.clone(),
            self.nu.clone(),
            self.predicted_dim.to_string(),
            self.computed_dim.to_string(),
            self.basis_symbols.clone(),
        ]
    }
}

/// Scan configuration.
#[derive(Clone, Debug)]
pub struct ClassifyConfig {
    pub n: usize,
    pub flavor: Flavor,
    pub m_max: u32,
    pub l_max: u32,
    pub extra_lambdas: Vec<Rational>,
    pub mode: Equivariance,
}

impl ClassifyConfig {
    pub fn new(n: usize, flavor: Flavor, m_max: u32, l_max: u32) -> Self {
        ClassifyConfig {
            n,
            flavor,
            m_max,
            l_max,
            extra_lambdas: Vec::new(),
            mode: Equivariance::Full,
        }
    }

    /// Generic samples plus every critical value `1 - j`, `j <= m_max + l_max`.
    pub fn lambda_samples(&self) -> Vec<Rational> {
        let mut set: BTreeSet<Rational> = [rat(1, 3), int(5), rat(-7, 2)].into_iter().collect();
        for j in 0..=(self.m_max + self.l_max) {
            set.insert(int(1 - j as i64));
        }
        set.extend(self.extra_lambdas.iter().cloned());
        set.into_iter().collect()
    }

    /// Degrees are bounded by the largest `a'`-weight on the grid.
    pub fn degree_cap(&self) -> u32 {
        self.m_max + 2 * self.l_max + 1
    }
}

/// One scan cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Cell {
    alpha: SignPair,
    beta: SignPair,
    ell: u32,
    lambda: Weight,
    nu: Weight,
}

fn sign_choices(flavor: Flavor, mode: Equivariance) -> Vec<SignPair> {
    match mode {
        Equivariance::Full => SignPair::all(flavor),
        Equivariance::Connected => vec![SignPair(Sign::Plus, Sign::Plus)],
    }
}

fn grid_cells(cfg: &ClassifyConfig) -> Vec<Cell> {
    let n = cfg.n as i64;
    let second_lambdas = match cfg.flavor {
        Flavor::SL => vec![int(0)],
        Flavor::GL => vec![int(0), rat(1, 2)],
    };
    let mut cells = BTreeSet::new();
    for lam1 in cfg.lambda_samples() {
        for lam2 in &second_lambdas {
            let lambda = Weight {
                first: lam1.clone(),
                second: lam2.clone(),
            };
            for m in 0..=cfg.m_max {
                for l in 0..=cfg.l_max {
                    let (ell, shift1, shift2) = if cfg.n == 2 {
                        (0, int((m + 2 * l) as i64), int(-(l as i64)))
                    } else {
                        (
                            l,
                            int(m as i64) + rat(n * l as i64, n - 1),
                            rat(-(l as i64), n - 1),
                        )
                    };
                    let shift2 = if cfg.flavor == Flavor::SL {
                        int(0)
                    } else {
                        shift2
                    };
                    let nu = Weight {
                        first: &lam1 + &shift1,
                        second: lam2 + &shift2,
                    };
                    let off = Weight {
                        first: &nu.first + rat(1, 2),
                        second: nu.second.clone(),
                    };
                    for a in sign_choices(cfg.flavor, cfg.mode) {
                        for b in sign_choices(cfg.flavor, cfg.mode) {
                            for v in [&nu, &off] {
                                cells.insert(Cell {
                                    alpha: a,
                                    beta: b,
                                    ell,
                                    lambda: lambda.clone(),
                                    nu: v.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    cells.into_iter().collect()
}

fn membership(cfg: &ClassifyConfig, cell: &Cell) -> Membership {
    let s = ScalarRepParams {
        n: cfg.n,
        flavor: cfg.flavor,
        alpha: cell.alpha,
        lambda: cell.lambda.clone(),
    };
    let t = TargetRepParams {
        n: cfg.n,
        flavor: cfg.flavor,
        beta: cell.beta,
        nu: cell.nu.clone(),
        ell: cell.ell,
    };
    match cfg.flavor {
        Flavor::SL => in_lambda_sl(&SLQuadruple::from_params(&s, &t), cfg.n),
        Flavor::GL => in_lambda_gl(&GLTuple::from_params(&s, &t), cfg.n),
    }
}

/// Dimension predicted by the classification for a cell; in connected mode
/// signs are ignored, so the best sign choice is taken.
fn predicted(cfg: &ClassifyConfig, cell: &Cell) -> usize {
    match cfg.mode {
        Equivariance::Full => membership(cfg, cell).predicted_dim(),
        Equivariance::Connected => SignPair::all(cfg.flavor)
            .into_iter()
            .map(|b| {
                membership(
                    cfg,
                    &Cell {
                        beta: b,
                        ..cell.clone()
                    },
                )
                .predicted_dim()
            })
            .max()
            .unwrap_or(0),
    }
}

fn solve_cell(cfg: &ClassifyConfig, cell: &Cell) -> Result<ClassRow> {
    let s = ScalarRepParams {
        n: cfg.n,
        flavor: cfg.flavor,
        alpha: cell.alpha,
        lambda: cell.lambda.clone(),
    };
    let t = TargetRepParams {
        n: cfg.n,
        flavor: cfg.flavor,
        beta: cell.beta,
        nu: cell.nu.clone(),
        ell: cell.ell,
    };
    let sol = solve_fsystem(&s, &t, cfg.degree_cap(), cfg.mode)?;
    Ok(ClassRow {
        flavor: cfg.flavor,
        n: cfg.n,
        alpha: cell.alpha.label(cfg.flavor),
        beta: cell.beta.label(cfg.flavor),
        ell: cell.ell,
        lambda: cell.lambda.label(cfg.flavor),
        nu: cell.nu.label(cfg.flavor),
        predicted_dim: predicted(cfg, cell),
        computed_dim: sol.dim(),
        basis_symbols: sol.symbols().join("; "),
        lambda_weight: cell.lambda.clone(),
        nu_weight: cell.nu.clone(),
        alpha_signs: cell.alpha,
        beta_signs: cell.beta,
    })
}

/// Classification scan for symmetry breaking operators. Cells are the
/// weight-compatible grid (where solutions can exist) and the same grid
/// shifted by `1/2` in `nu` (where none can). Rows come out in a fixed order.
pub fn classify(cfg: &ClassifyConfig) -> Result<Vec<ClassRow>> {
    let cells = grid_cells(cfg);
    cells.par_iter().map(|c| solve_cell(cfg, c)).collect()
}

/// Classification scan for invariant differential operators
/// `I(triv, lambda)^alpha -> I(poly^k_n, tau)^delta`, `k <= k_max`.
/// The table reuses the columns: `ell` is `k`, `beta` is `delta`, `nu` is `tau`.
pub fn classify_ido(
    n: usize,
    flavor: Flavor,
    k_max: u32,
    extra_lambdas: &[Rational],
) -> Result<Vec<ClassRow>> {
    let mut lambdas: BTreeSet<Rational> = [rat(1, 3), int(5), rat(-7, 2)].into_iter().collect();
    for k in 0..=k_max {
        lambdas.insert(int(1 - k as i64));
    }
    lambdas.extend(extra_lambdas.iter().cloned());
    let second_lambdas = match flavor {
        Flavor::SL => vec![int(0)],
        Flavor::GL => vec![int(0), rat(1, 2)],
    };
    let nn = n as i64;
    let mut cells = Vec::new();
    for lam1 in &lambdas {
        for lam2 in &second_lambdas {
            let lambda = Weight {
                first: lam1.clone(),
                second: lam2.clone(),
            };
            for k in 0..=k_max {
                let kk = k as i64;
                let second = if flavor == Flavor::SL {
                    int(0)
                } else {
                    lam2 - rat(kk, nn)
                };
                let tau = Weight {
                    first: lam1 + rat(kk * (nn + 1), nn),
                    second,
                };
                let off = Weight {
                    first: &tau.first + rat(1, 2),
                    second: tau.second.clone(),
                };
                for a in SignPair::all(flavor) {
                    for d in SignPair::all(flavor) {
                        for t in [&tau, &off] {
                            cells.push((a, d, k, lambda.clone(), t.clone()));
                        }
                    }
                }
            }
        }
    }
    cells
        .par_iter()
        .map(|(a, d, k, lambda, tau)| {
            let s = ScalarRepParams {
                n,
                flavor,
                alpha: *a,
                lambda: lambda.clone(),
            };
            let t = IdoTargetParams {
                n,
                flavor,
                delta: *d,
                tau: tau.clone(),
                k: *k,
            };
            let sol = solve_fsystem_full_nilradical(&s, &t, *k + 1)?;
            Ok(ClassRow {
                flavor,
                n,
                alpha: a.label(flavor),
                beta: d.label(flavor),
                ell: *k,
                lambda: lambda.label(flavor),
                nu: tau.label(flavor),
                predicted_dim: usize::from(in_lambda_ido(n, *k, &s, &t)),
                computed_dim: sol.dim(),
                basis_symbols: sol.symbols().join("; "),
                lambda_weight: lambda.clone(),
                nu_weight: tau.clone(),
                alpha_signs: *a,
                beta_signs: *d,
            })
        })
        .collect()
}
