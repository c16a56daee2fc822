//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
//! if any criterion fails. Runs under `cargo test`; on its own with
//! `cargo test --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use rayon::prelude::*;

use fmethod::algebra::{
    factorial, int, monomials_up_to, rat, same_span, span_rank, Monomial, Polynomial, VarNames,
};
use fmethod::branch::{image_invariant_counts, verify_branching};
use fmethod::fmethod::{
    classify, classify_ido, solve_fsystem, ClassRow, ClassifyConfig, Equivariance, Target,
};
use fmethod::liealg::{Flavor, ParabolicData};
use fmethod::operators::{
    build_sbo, check_equivariance, fg_stable, image_computations, rest_symb_inverse,
    sbo_from_solution, verify_factorization_sbo,
};
use fmethod::params::{
    in_lambda_gl, in_lambda_sl, GLTuple, Membership, SLQuadruple, Sign, SignPair,
};
use fmethod::rep::{
    dpi_hat, dpi_lambda, dpi_lambda_star, ScalarRepParams, TargetRepParams, Weight,
};
use fmethod::verma::{build_phi, check_hom_equivariance, VermaHom, VermaModule};

type Outcome = fmethod::Result<(bool, String)>;

/// Scans shared by several criteria.
struct Scans {
    sl: Vec<(usize, Vec<ClassRow>, Duration)>,
    gl2: (Vec<ClassRow>, Duration),
}

fn source_of(r: &ClassRow) -> ScalarRepParams {
    ScalarRepParams {
        n: r.n,
        flavor: r.flavor,
        alpha: r.alpha_signs,
        lambda: r.lambda_weight.clone(),
    }
}

fn target_of(r: &ClassRow) -> TargetRepParams {
    TargetRepParams {
        n: r.n,
        flavor: r.flavor,
        beta: r.beta_signs,
        nu: r.nu_weight.clone(),
        ell: r.ell,
    }
}

fn membership(r: &ClassRow) -> Membership {
    let (s, t) = (source_of(r), target_of(r));
    match r.flavor {
        Flavor::SL => in_lambda_sl(&SLQuadruple::from_params(&s, &t), r.n),
        Flavor::GL => in_lambda_gl(&GLTuple::from_params(&s, &t), r.n),
    }
}

fn fiber_vars(n: usize, ell: u32) -> usize {
    if ell == 0 || n == 2 {
        0
    } else {
        n - 1
    }
}

fn basis_of(r: &ClassRow) -> Vec<Polynomial> {
    if r.basis_symbols.is_empty() {
        return Vec::new();
    }
    let names = VarNames::joint(&[("zeta", r.n), ("y", fiber_vars(r.n, r.ell))]);
    r.basis_symbols
        .split("; ")
        .map(|t| Polynomial::parse(t, &names).unwrap())
        .collect()
}

/// Dimension and spanning set agree with the closed forms of the witnesses.
fn row_agrees(r: &ClassRow) -> bool {
    let mem = membership(r);
    let expected: Vec<Polynomial> = mem
        .witnesses()
        .iter()
        .map(|&(m, l)| common::psi(r.n, m, l))
        .collect();
    r.matches() && r.computed_dim == expected.len() && same_span(&basis_of(r), &expected)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn criterion_1(sc: &Scans) -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    let mut total = Duration::ZERO;
    for (n, rows, dt) in sc.sl.iter().filter(|(n, _, _)| *n >= 3) {
        let bad = rows
            .iter()
            .filter(|r| !row_agrees(r) || r.computed_dim > 1)
            .count();
        let ones = rows.iter().filter(|r| r.computed_dim == 1).count();
        ok &= bad == 0;
        total += *dt;
        detail.push(format!(
            "n={n}: {} cells, {ones} of dim 1, {bad} bad",
            rows.len()
        ));
    }
    ok &= total < Duration::from_secs(60);
    Ok((ok, format!("{} [{:.1?}]", detail.join("; "), total)))
}

fn criterion_2(sc: &Scans) -> Outcome {
    let (_, rows, dt) = sc.sl.iter().find(|(n, _, _)| *n == 2).unwrap();
    let mut bad = 0;
    let mut twos = 0;
    for r in rows {
        let mem = membership(r);
        let want = if mem.plus.is_some() {
            2
        } else if mem.is_member() {
            1
        } else {
            0
        };
        if let Some((m, l)) = mem.plus {
            twos += 1;
            let span = [
                Polynomial::monomial(Monomial::new(vec![0, m + 2 * l])),
                Polynomial::monomial(Monomial::new(vec![l, m])),
            ];
            bad += usize::from(!same_span(&basis_of(r), &span));
        }
        bad += usize::from(r.computed_dim != want || !row_agrees(r));
    }
    let ok = bad == 0 && twos > 0 && *dt < Duration::from_secs(30);
    Ok((
        ok,
        format!(
            "{} cells, {twos} of dim 2, {bad} bad [{dt:.1?}]",
            rows.len()
        ),
    ))
}

fn criterion_3(sc: &Scans) -> Outcome {
    let (rows, dt) = &sc.gl2;
    let max = rows.iter().map(|r| r.computed_dim).max().unwrap_or(0);
    let ones = rows.iter().filter(|r| r.computed_dim == 1).count();
    let bad = rows.iter().filter(|r| !row_agrees(r)).count();
    let ok = max <= 1 && bad == 0 && ones > 0 && *dt < Duration::from_secs(30);
    Ok((
        ok,
        format!(
            "{} cells, max dim {max}, {ones} of dim 1, {bad} bad [{dt:.1?}]",
            rows.len()
        ),
    ))
}

fn criterion_4() -> Outcome {
    let mut detail = Vec::new();
    let mut ok = true;
    for n in [2, 3] {
        for flavor in [Flavor::SL, Flavor::GL] {
            let rows = classify_ido(n, flavor, 4, &[])?;
            let bad = rows.iter().filter(|r| !r.matches()).count();
            let hits = rows
                .iter()
                .filter(|r| r.computed_dim > 0 && r.ell > 0)
                .count();
            ok &= bad == 0 && hits > 0;
            detail.push(format!(
                "{flavor} n={n}: {} cells, {hits} with k>0, {bad} bad",
                rows.len()
            ));
        }
    }
    Ok((ok, detail.join("; ")))
}

fn member_rows(sc: &Scans) -> Vec<&ClassRow> {
    sc.sl
        .iter()
        .flat_map(|(_, rows, _)| rows.iter())
        .chain(sc.gl2.0.iter())
        .filter(|r| {
            r.computed_dim > 0 && membership(r).witnesses().iter().any(|&(m, l)| m + l <= 4)
        })
        .collect()
}

fn criterion_5(sc: &Scans) -> Outcome {
    let rows = member_rows(sc);
    let failures: Vec<String> = rows
        .par_iter()
        .map(|r| -> fmethod::Result<Option<String>> {
            let s = source_of(r);
            let t = target_of(r);
            let sol = solve_fsystem(&s, &t, 4 + 2 * 4 + 1, Equivariance::Full)?;
            for psi in sol.vector_valued()? {
                let op = sbo_from_solution(&psi);
                let rep = check_equivariance(&op, &s, &Target::Restricted(t.clone()), 6, 1)?;
                if !rep.status.ok() {
                    return Ok(Some(format!("{:?}", rep.violations)));
                }
            }
            Ok(None)
        })
        .collect::<fmethod::Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    // Off-grid parameters: the closed-form operator fails with a witness.
    let probes = [
        (3, 1, 0, int(5), rat(13, 2)),
        (3, 2, 1, int(-2), int(2)),
        (2, 1, 1, int(-1), rat(5, 2)),
        (4, 0, 2, int(-1), int(3)),
    ];
    let mut witnesses = Vec::new();
    for (n, m, l, lambda, nu) in probes {
        let s = ScalarRepParams::sl(n, Sign::Plus, lambda);
        let t = TargetRepParams::sl(n, Sign::Plus.shift((m + l) as i64), l, nu);
        let rep = check_equivariance(&build_sbo(m, l, n).op, &s, &Target::Restricted(t), 6, 1)?;
        if let Some(v) = rep.violations.first() {
            witnesses.push(format!(
                "n={n} (m,l)=({m},{l}): {} on {}",
                v.element, v.monomial
            ));
        }
    }
    let ok = failures.is_empty() && witnesses.len() >= 3;
    Ok((
        ok,
        format!(
            "{} member cells, {} failures; witnesses: {}",
            rows.len(),
            failures.len(),
            witnesses.join(", ")
        ),
    ))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 2..=4 {
        for m in 0..=3 {
            for l in 0..=3 {
                for r in verify_factorization_sbo(m, l, n, 6)? {
                    checked += 1;
                    if !r.status.ok() {
                        bad.push(format!("{} n={n} m={m} l={l}", r.identity));
                    }
                }
                for flavor in [Flavor::SL, Flavor::GL] {
                    let r = fmethod::verma::verify_factorization_verma(m, l, n, flavor, 6)?;
                    checked += 1;
                    if !r.status.ok() {
                        bad.push(format!("Verma {flavor} n={n} m={m} l={l}"));
                    }
                }
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{checked} identities checked, failures: {bad:?}"),
    ))
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 2..=4 {
        for k in 1..=5u32 {
            for flavor in [Flavor::SL, Flavor::GL] {
                if !fg_stable(k, n, flavor)? {
                    bad.push(format!("unstable {flavor} n={n} k={k}"));
                }
            }
            for m in 0..=k {
                let r = image_computations(m, k - m, n, 3)?;
                count += 1;
                let want = factorial(m).to_string();
                if !r.status.ok() || r.witness != want {
                    bad.push(format!("n={n} m={m} l={}", k - m));
                }
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{count} (n, m, l) cases, failures: {bad:?}"),
    ))
}

fn criterion_8() -> Outcome {
    let mut pairs = 0usize;
    let mut bad = Vec::new();
    for n in [2, 3] {
        for flavor in [Flavor::SL, Flavor::GL] {
            let pd = ParabolicData::new(n, flavor)?;
            let basis = pd.basis_g();
            let monos: Vec<Polynomial> = monomials_up_to(n, 6)
                .into_iter()
                .map(Polynomial::monomial)
                .collect();
            for lam in [rat(1, 3), int(-2), int(5)] {
                let second = if flavor == Flavor::GL {
                    rat(1, 2)
                } else {
                    int(0)
                };
                let p = ScalarRepParams {
                    n,
                    flavor,
                    alpha: SignPair::sl(Sign::Plus),
                    lambda: Weight { first: lam, second },
                };
                for pi in [dpi_lambda, dpi_lambda_star] {
                    let ops: Vec<_> = basis
                        .iter()
                        .map(|x| pi(x, &p))
                        .collect::<fmethod::Result<_>>()?;
                    for (i, x) in basis.iter().enumerate() {
                        for (j, y) in basis.iter().enumerate() {
                            pairs += 1;
                            let lhs = ops[i].commutator(&ops[j])?;
                            let rhs = pi(&x.bracket(y)?, &p)?;
                            let mut same = lhs == rhs;
                            for f in &monos {
                                same &= lhs.apply(f)? == rhs.apply(f)?;
                            }
                            if !same {
                                bad.push(format!("{flavor} n={n} ({i},{j})"));
                            }
                        }
                    }
                }
                for x in &basis {
                    if dpi_lambda_star(x, &p)?.fourier() != dpi_hat(x, &p)? {
                        bad.push(format!("Fourier {flavor} n={n}"));
                    }
                }
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{pairs} bracket pairs on degree <= 6, failures: {bad:?}"),
    ))
}

/// `Phi_(m,l)` for a classified cell, in the cell's own Verma modules.
fn phi_for(r: &ClassRow, m: u32, l: u32) -> fmethod::Result<VermaHom> {
    let (n, flavor) = (r.n, r.flavor);
    let target = VermaModule::scalar(n, flavor, r.lambda_weight.neg(), r.alpha_signs);
    if n == 2 && l > 0 {
        // The rank-one fiber is already folded into (nu, beta).
        let source = VermaModule::subgroup(n, flavor, 0, r.nu_weight.neg(), r.beta_signs);
        let label = source.fiber_basis()[0].clone();
        let image = Polynomial::monomial(Monomial::new(vec![l, m]));
        return Ok(VermaHom {
            source,
            target,
            images: [(label, image)].into_iter().collect(),
        });
    }
    let source = VermaModule::subgroup(n, flavor, l, r.nu_weight.neg(), r.beta_signs);
    build_phi(m, l, source, target)
}

fn nonzero_components(v: &fmethod::rep::VectorValuedPolynomial) -> Vec<Polynomial> {
    v.components()
        .map(|(_, p)| p.clone())
        .filter(|p| !p.is_zero())
        .collect()
}

fn criterion_9(sc: &Scans) -> Outcome {
    let rows = member_rows(sc);
    let results: Vec<Option<String>> = rows
        .par_iter()
        .map(|r| -> fmethod::Result<Option<String>> {
            let sol = basis_of(r);
            let mut images = Vec::new();
            for (m, l) in membership(r).witnesses() {
                let phi = phi_for(r, m, l)?;
                if !check_hom_equivariance(&phi, 2, 1)?.status.ok() {
                    return Ok(Some(format!(
                        "Phi({m},{l}) not a homomorphism at {}",
                        r.row_text()
                    )));
                }
                let fc = phi.fc()?;
                let psi = fc.to_joint();
                let mut with = sol.clone();
                with.push(psi.clone());
                if span_rank(&with) != sol.len() {
                    return Ok(Some(format!(
                        "F_c(Phi({m},{l})) outside the solutions at {}",
                        r.row_text()
                    )));
                }
                images.push(psi);
                // Rest o symb^{-1}(F_c(Phi)) against the closed-form operator.
                let d = build_sbo(m, l, r.n);
                for f in monomials_up_to(r.n, 6) {
                    let f = Polynomial::monomial(f);
                    let lhs = rest_symb_inverse(&fc, &f)?;
                    let rhs = d.op.apply(&f)?;
                    // With a trivial fiber the two sides label their single
                    // component differently; compare values only.
                    let same = if r.n == 2 || l == 0 {
                        nonzero_components(&lhs) == nonzero_components(&rhs)
                    } else {
                        lhs == rhs
                    };
                    if !same {
                        return Ok(Some(format!(
                            "Rest symb^-1 differs from D({m},{l}) at {}",
                            r.row_text()
                        )));
                    }
                }
            }
            if !same_span(&images, &sol) {
                return Ok(Some(format!(
                    "images do not span the solutions at {}",
                    r.row_text()
                )));
            }
            Ok(None)
        })
        .collect::<fmethod::Result<_>>()?;
    let bad: Vec<String> = results.into_iter().flatten().collect();
    let first = bad.first().cloned().unwrap_or_default();
    Ok((
        bad.is_empty(),
        format!("{} cells, {} failures {first}", rows.len(), bad.len()),
    ))
}

trait RowText {
    fn row_text(&self) -> String;
}

impl RowText for ClassRow {
    fn row_text(&self) -> String {
        format!(
            "{} n={} {}/{} l={} lambda={} nu={}",
            self.flavor, self.n, self.alpha, self.beta, self.ell, self.lambda, self.nu
        )
    }
}

fn criterion_10() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    for n in [2, 3] {
        for s in [rat(1, 3), int(0), int(1), int(2)] {
            let r = verify_branching(n, &s, 10)?;
            if !r.status.ok() {
                let failed: Vec<&str> = r
                    .checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| c.name.as_str())
                    .collect();
                bad.push(format!("n={n} s={}: {failed:?}", r.s));
            }
        }
    }
    for p in 0..=2u32 {
        let got: Vec<(i64, usize)> = image_invariant_counts(2, p, 10)?
            .iter()
            .rev()
            .map(|(w, c)| (fmethod::algebra::as_int(w).unwrap_or(i64::MIN), *c))
            .collect();
        if got != common::image_invariants_n2(p, p as i64 - 10) {
            bad.push(format!("invariant counts p={p}"));
        }
    }
    let dt = t.elapsed();
    let ok = bad.is_empty() && dt < Duration::from_secs(60);
    Ok((
        ok,
        format!("n in {{2,3}}, s in {{1/3,0,1,2}}, D=10; failures: {bad:?} [{dt:.1?}]"),
    ))
}

fn main() {
    let t = Instant::now();
    let sl: Vec<(usize, Vec<ClassRow>, Duration)> = [2usize, 3, 4]
        .into_iter()
        .map(|n| {
            let (rows, dt) =
                timed(|| classify(&ClassifyConfig::new(n, Flavor::SL, 4, 4)).expect("SL scan"));
            (n, rows, dt)
        })
        .collect();
    let gl2 = timed(|| classify(&ClassifyConfig::new(2, Flavor::GL, 4, 4)).expect("GL scan"));
    let scans = Scans { sl, gl2 };

    type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(&str, Check)> = vec![
        ("classification n >= 3", Box::new(|| criterion_1(&scans))),
        ("multiplicity two, n = 2", Box::new(|| criterion_2(&scans))),
        ("GL multiplicity-freeness", Box::new(|| criterion_3(&scans))),
        ("invariant differential operators", Box::new(criterion_4)),
        ("equivariance", Box::new(|| criterion_5(&scans))),
        ("factorization", Box::new(criterion_6)),
        ("images", Box::new(criterion_7)),
        ("Lie homomorphism and Fourier", Box::new(criterion_8)),
        ("duality triangle", Box::new(|| criterion_9(&scans))),
        ("branching", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (res, dt) = timed(run);
        let (ok, detail) = res.unwrap_or_else(|e| (false, format!("error: {e}")));
        failed += usize::from(!ok);
        println!(
            "criterion {:>2} {:<34} {}  {detail} ({dt:.1?})",
            i + 1,
            name,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    println!(
        "acceptance: {} of {} criteria pass ({:.1?})",
        criteria.len() - failed,
        criteria.len(),
        t.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
