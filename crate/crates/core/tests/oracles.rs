//! Library results against closed forms written out in `common`.

mod common;

use fmethod::algebra::{int, rat, same_span, span_rank, Monomial, Polynomial, VarNames};
use fmethod::branch::image_invariant_counts;
use fmethod::fmethod::{solve_fsystem, Equivariance};
use fmethod::liealg::{Flavor, ParabolicData};
use fmethod::operators::{build_sbo, image_computations, sbo_target};
use fmethod::params::{Sign, SignPair};
use fmethod::rep::{dpi_lambda, ScalarRepParams, Weight};
use fmethod::verma::{build_phi, factorization_modules};

#[test]
fn actions_match_entrywise_formula() {
    for n in 2..=3 {
        for flavor in [Flavor::SL, Flavor::GL] {
            let pd = ParabolicData::new(n, flavor).unwrap();
            let (l1, l2) = (
                rat(-5, 7),
                if flavor == Flavor::GL {
                    rat(2, 3)
                } else {
                    int(0)
                },
            );
            let p = ScalarRepParams {
                n,
                flavor,
                alpha: SignPair::sl(Sign::Plus),
                lambda: Weight {
                    first: l1.clone(),
                    second: l2.clone(),
                },
            };
            for x in pd.basis_g() {
                assert_eq!(
                    dpi_lambda(&x, &p).unwrap(),
                    common::dpi_closed_form(&x, &l1, &l2),
                    "{n} {flavor}"
                );
            }
        }
    }
}

#[test]
fn solver_matches_closed_form_psi() {
    for n in 3..=4 {
        for m in 0..=2 {
            for l in 0..=2 {
                let s = ScalarRepParams::sl(n, Sign::Minus, int(1 - (m + l) as i64));
                let t = sbo_target(&s, m, l);
                let sol = solve_fsystem(&s, &t, m + l + 2, Equivariance::Full).unwrap();
                assert_eq!(sol.basis.len(), 1, "n={n} m={m} l={l}");
                assert_eq!(sol.basis[0], common::psi(n, m, l), "n={n} m={m} l={l}");
            }
        }
    }
}

#[test]
fn n2_critical_cells_have_two_solutions() {
    for (m, l) in [(0, 1), (1, 1), (2, 1), (0, 2), (1, 3)] {
        let s = ScalarRepParams::sl(2, Sign::Plus, int(1 - (m + l) as i64));
        let t = sbo_target(&s, m, l);
        let sol = solve_fsystem(&s, &t, m + 2 * l + 1, Equivariance::Full).unwrap();
        let expected = vec![
            Polynomial::monomial(Monomial::new(vec![0, m + 2 * l])),
            common::psi(2, m, l),
        ];
        assert!(
            same_span(&sol.basis, &expected),
            "m={m} l={l}: {:?}",
            sol.symbols()
        );
    }
}

#[test]
fn phi_fc_closed_form() {
    for n in 2..=4 {
        for (m, l) in [(0, 0), (1, 0), (1, 1), (0, 2), (2, 2)] {
            for flavor in [Flavor::SL, Flavor::GL] {
                let fm = factorization_modules(m, l, n, flavor, SignPair::all(flavor)[1]);
                let phi = build_phi(m, l, fm.source, fm.target).unwrap();
                let got = phi.fc().unwrap().to_joint();
                if n == 2 {
                    // One fiber variable; the joint ring is (zeta1, zeta2, y1).
                    let want = Polynomial::monomial(Monomial::new(if l == 0 {
                        vec![0, m]
                    } else {
                        vec![l, m, l]
                    }))
                    .scale(&(int(1) / fmethod::algebra::factorial(l)));
                    assert_eq!(got, want);
                } else {
                    assert_eq!(got, common::fc_phi(n, m, l), "n={n} m={m} l={l}");
                }
            }
        }
    }
}

#[test]
fn sbo_text_form() {
    let d = build_sbo(2, 1, 3);
    assert_eq!(
        d.op.to_text(),
        "Rest[x3=0] ((d2*d3^2) ⊗ y2 + (d1*d3^2) ⊗ y1)"
    );
    let names = VarNames::role("x", 3);
    let f = Polynomial::parse("x1*x3^2 + x2^2", &names).unwrap();
    let v = d.op.apply(&f).unwrap();
    assert_eq!(
        v.component(&Monomial::new(vec![1, 0])),
        Polynomial::constant(2, int(2))
    );
}

#[test]
fn image_witness_is_factorial() {
    for m in 0..=4u32 {
        let r = image_computations(m, 1, 3, 2).unwrap();
        let want: u64 = (1..=m as u64).product();
        assert_eq!(r.witness, want.to_string());
        assert_eq!(r.expected_rank, 1);
    }
    // Degree < l polynomials in n - 1 = 2 variables: 1 + 2 + 3.
    assert_eq!(image_computations(0, 3, 3, 1).unwrap().expected_rank, 6);
}

#[test]
fn image_invariants_n2_closed_form() {
    for p in 0..=3u32 {
        let depth = 9;
        let floor = p as i64 - depth;
        let got = image_invariant_counts(2, p, depth as u32).unwrap();
        let want = common::image_invariants_n2(p, floor);
        let got: Vec<(i64, usize)> = got
            .iter()
            .rev()
            .map(|(w, c)| (fmethod::algebra::as_int(w).unwrap(), *c))
            .collect();
        assert_eq!(got, want, "p={p}");
    }
}

#[test]
fn fiber_basis_ranks() {
    // Sanity for the oracle helpers: psi for n >= 3 has one term per |a| = l.
    assert_eq!(common::psi(4, 1, 2).len(), 6);
    assert_eq!(
        span_rank(&[common::psi(3, 2, 1), common::fc_phi(3, 2, 1)]),
        1
    );
}
