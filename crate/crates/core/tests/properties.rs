//! Property tests for the algebraic invariants.

use fmethod::algebra::{int, poly_mul, rat, Monomial, Polynomial, Rational};
use fmethod::branch::{character_of, character_sum, verma_g, verma_gprime, SubmoduleFilter};
use fmethod::liealg::{Flavor, LieElement};
use fmethod::params::{in_lambda_gl, in_lambda_sl, GLTuple, SLQuadruple, Sign, SignPair};
use fmethod::rep::{
    dpi_hat, dpi_lambda, dpi_lambda_star, ScalarRepParams, TargetRepParams, Weight,
};
use fmethod::weyl::WeylElement;
use proptest::prelude::*;

fn q() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(p, d)| rat(p, d))
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

fn sign_pair() -> impl Strategy<Value = SignPair> {
    (sign(), sign()).prop_map(|(a, b)| SignPair(a, b))
}

fn poly(arity: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, arity), -4i64..=4), 0..5).prop_map(
        move |ts| {
            Polynomial::from_terms(
                arity,
                ts.into_iter().map(|(e, c)| (Monomial::new(e), int(c))),
            )
        },
    )
}

fn weyl(arity: usize) -> impl Strategy<Value = WeylElement> {
    prop::collection::vec((poly(arity), prop::collection::vec(0u32..3, arity)), 0..3).prop_map(
        move |ts| {
            ts.into_iter()
                .fold(WeylElement::zero(arity), |acc, (p, d)| {
                    acc.add(&WeylElement::term(p, Monomial::new(d)))
                })
        },
    )
}

fn lie(flavor: Flavor, size: usize) -> impl Strategy<Value = LieElement> {
    prop::collection::vec(-3i64..=3, size * size).prop_map(move |v| {
        let mut e: Vec<Rational> = v.into_iter().map(int).collect();
        if flavor == Flavor::SL {
            let tr: Rational = (0..size).map(|i| e[i * size + i].clone()).sum();
            e[0] -= tr;
        }
        LieElement::from_entries(flavor, size, e).unwrap()
    })
}

fn flavor() -> impl Strategy<Value = Flavor> {
    prop_oneof![Just(Flavor::SL), Just(Flavor::GL)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sign_shifts_add(s in sign(), a in -6i64..6, b in -6i64..6) {
        prop_assert_eq!(s.shift(a).shift(b), s.shift(a + b));
        prop_assert_eq!(s.shift(2 * a), s);
        prop_assert_eq!(s.flip().flip(), s);
        prop_assert_eq!(s.shift(a).value(), s.value() * if a % 2 == 0 { 1 } else { -1 });
    }

    #[test]
    fn sign_pair_shifts_commute(p in sign_pair(), a in -4i64..4, b in -4i64..4) {
        prop_assert_eq!(p.shift_first(a).shift_second(b), p.shift_second(b).shift_first(a));
        prop_assert_eq!(p.shift_first(a).1, p.1);
    }

    #[test]
    fn canonicalization_is_idempotent(
        n in 2usize..6, a in sign(), b in sign(), ell in 0u32..5, lam in q(), nu in q(),
        ga in sign_pair(), gb in sign_pair(), l2 in q(),
    ) {
        let sq = SLQuadruple { alpha: a, beta: b, ell, lambda: lam.clone(), nu: nu.clone() };
        prop_assert_eq!(sq.canonical(n).canonical(n), sq.canonical(n));
        prop_assert_eq!(in_lambda_sl(&sq, n), in_lambda_sl(&sq.canonical(n), n));
        let gt = GLTuple { alpha: ga, beta: gb, ell, lambda: Weight::gl(lam.clone(), l2.clone()), nu: Weight::gl(nu.clone(), l2.clone()) };
        prop_assert_eq!(gt.canonical(n).canonical(n), gt.canonical(n));
        let t = TargetRepParams::gl(n, gb, ell, Weight::gl(nu, l2));
        prop_assert_eq!(t.canonical().canonical(), t.canonical());
        if n >= 3 {
            prop_assert_eq!(t.canonical(), t);
        }
    }

    /// For n = 2: the multiplicity-two set lies in the critical family, and
    /// every such cell also carries the generic solution of degree m + 2l.
    #[test]
    fn n2_sets_are_nested(m in 0u32..6, l in 0u32..6, alpha in sign(), jitter in prop_oneof![Just(int(0)), q()], flip in any::<bool>()) {
        let lambda = int(1 - (m + l) as i64) + jitter;
        let beta = alpha.shift((m + l) as i64);
        let beta = if flip { beta.flip() } else { beta };
        let cell = SLQuadruple { alpha, beta, ell: l, lambda: lambda.clone(), nu: &lambda + int((m + 2 * l) as i64) };
        let mem = in_lambda_sl(&cell, 2);
        if mem.plus.is_some() {
            prop_assert!(mem.second.is_some());
            prop_assert_eq!(mem.first, Some(m + 2 * l));
            prop_assert_eq!(mem.predicted_dim(), 2);
        }
        if mem.second.is_some() {
            prop_assert!(mem.is_member());
        }
        prop_assert!(mem.predicted_dim() <= 2);
    }

    #[test]
    fn gl_dims_at_most_one(m in 0u32..5, l in 0u32..5, n in 2usize..5, a in sign_pair(), b in sign_pair(), l2 in q()) {
        let lam1 = int(1 - (m + l) as i64);
        let frac = rat(l as i64, n as i64 - 1);
        let t = GLTuple {
            alpha: a,
            beta: b,
            ell: if n == 2 { 0 } else { l },
            lambda: Weight::gl(lam1.clone(), l2.clone()),
            nu: Weight::gl(&lam1 + int(m as i64) + int(n as i64) * &frac, &l2 - &frac),
        };
        prop_assert!(in_lambda_gl(&t, n).predicted_dim() <= 1);
    }

    #[test]
    fn polynomial_ring_axioms(p in poly(3), r in poly(3), s in poly(3)) {
        let pr = poly_mul(&p, &r).unwrap();
        prop_assert_eq!(poly_mul(&pr, &s).unwrap(), poly_mul(&p, &poly_mul(&r, &s).unwrap()).unwrap());
        let mut rs = r.clone();
        rs.add_scaled(&s, &int(1));
        let mut lhs = pr.clone();
        lhs.add_scaled(&poly_mul(&p, &s).unwrap(), &int(1));
        prop_assert_eq!(poly_mul(&p, &rs).unwrap(), lhs);
        // Leibniz rule.
        let mut leib = poly_mul(&p.derivative(1), &r).unwrap();
        leib.add_scaled(&poly_mul(&p, &r.derivative(1)).unwrap(), &int(1));
        prop_assert_eq!(pr.derivative(1), leib);
    }

    #[test]
    fn weyl_composition_acts(a in weyl(2), b in weyl(2), f in poly(2)) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.apply(&f).unwrap(), a.apply(&b.apply(&f).unwrap()).unwrap());
    }

    #[test]
    fn fourier_is_multiplicative(a in weyl(2), b in weyl(2)) {
        let lhs = a.compose(&b).unwrap().fourier();
        let rhs = a.fourier().compose(&b.fourier()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // Applied four times the transform is the identity.
        prop_assert_eq!(a.fourier().fourier().fourier().fourier(), a);
    }

    #[test]
    fn symbol_round_trip(p in poly(3)) {
        prop_assert_eq!(WeylElement::symb_inverse(&p).symb().unwrap(), p);
    }

    #[test]
    fn dpi_is_lie_homomorphism(fl in flavor(), n in 2usize..4, l1 in q(), l2 in q(),
                               x in prop::collection::vec(-3i64..=3, 16), y in prop::collection::vec(-3i64..=3, 16)) {
        let size = n + 1;
        let mk = |v: &[i64]| {
            let mut e: Vec<Rational> = v[..size * size].iter().map(|&c| int(c)).collect();
            if fl == Flavor::SL {
                let tr: Rational = (0..size).map(|i| e[i * size + i].clone()).sum();
                e[0] -= tr;
            }
            LieElement::from_entries(fl, size, e).unwrap()
        };
        let (x, y) = (mk(&x), mk(&y));
        let l2 = if fl == Flavor::SL { int(0) } else { l2 };
        let p = ScalarRepParams { n, flavor: fl, alpha: SignPair::sl(Sign::Plus), lambda: Weight { first: l1, second: l2 } };
        for d in [dpi_lambda, dpi_lambda_star] {
            let lhs = d(&x, &p).unwrap().commutator(&d(&y, &p).unwrap()).unwrap();
            prop_assert_eq!(lhs, d(&x.bracket(&y).unwrap(), &p).unwrap());
            let sum = x.add(&y.scale(&int(2)));
            prop_assert_eq!(d(&sum, &p).unwrap(), d(&x, &p).unwrap().add(&d(&y, &p).unwrap().scale(&int(2))));
        }
        prop_assert_eq!(dpi_lambda_star(&x, &p).unwrap().fourier(), dpi_hat(&x, &p).unwrap());
    }

    #[test]
    fn lie_bracket_is_antisymmetric(x in lie(Flavor::SL, 3), y in lie(Flavor::SL, 3)) {
        prop_assert_eq!(x.bracket(&y).unwrap(), y.bracket(&x).unwrap().scale(&int(-1)));
    }

    /// `[M(s)] = sum_m [M'(s - m)]` for random `s`, and a filtered module
    /// splits additively.
    #[test]
    fn characters_are_additive(num in -9i64..9, den in 1i64..4, depth in 0u32..6, n in 2usize..4, cut in 0u32..4) {
        let s = rat(num, den);
        let floor = &s - int(depth as i64);
        let full = character_of(&verma_g(n, &s), SubmoduleFilter::Full, &floor).unwrap();
        let parts: Vec<_> = (0..=depth)
            .map(|m| character_of(&verma_gprime(n, &(&s - int(m as i64))), SubmoduleFilter::Full, &floor).unwrap())
            .collect();
        prop_assert_eq!(&full, &character_sum(&parts, &floor));
        let hi = character_of(&verma_g(n, &s), SubmoduleFilter::GradesFrom(cut + 1), &floor).unwrap();
        let lo = character_of(&verma_g(n, &s), SubmoduleFilter::GradesUpTo(cut), &floor).unwrap();
        prop_assert_eq!(&full, &hi.add(&lo));
        prop_assert_eq!(full.sub(&hi), lo);
    }
}
