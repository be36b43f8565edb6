use num_bigint::BigInt;
use proptest::prelude::*;
use stpairs::algebra::{CrankPoly, LaurentSeries, Ring};
use stpairs::lambert::{self, LambertError, SigmaSpec, UellSpec};
use stpairs::qseries::{self, Monomial, QSeriesError};

fn same(a: &LaurentSeries<BigInt>, b: &LaurentSeries<BigInt>, order: i64) -> bool {
    let d = a.sub(b).unwrap();
    d.order() >= order && d.is_zero()
}

fn base_and_exponent() -> impl Strategy<Value = (i64, i64)> {
    prop::sample::select(vec![3i64, 5, 9, 15, 25, 27]).prop_flat_map(|b| (Just(b), -2 * b..3 * b))
}

fn sigma_spec() -> impl Strategy<Value = (i64, i64, i64)> {
    prop::sample::select(vec![9i64, 15, 27])
        .prop_flat_map(|c| (-2 * c..2 * c, -3 * c..3 * c, Just(c)))
        .prop_filter("pole", |(a, _, c)| a % c != 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // j(q^a;q^b) from the product agrees with its theta sum.
    #[test]
    fn triple_product((b, a) in base_and_exponent()) {
        let prod = qseries::jtheta(a, b, 80).unwrap();
        let sum = qseries::jtheta_sum_oracle(a, b, 80).unwrap();
        prop_assert!(same(&prod, &sum, 80));
    }

    #[test]
    fn bracket_laws((b, a) in base_and_exponent()) {
        prop_assume!(a % b != 0);
        let o = 60;
        let f = qseries::jacobi_bracket(a, b, o).unwrap();
        let refl = qseries::jacobi_bracket(b - a, b, o).unwrap();
        prop_assert!(same(&f, &refl, o));
        let up = qseries::jacobi_bracket(a + b, b, o - a).unwrap().shift(a).neg();
        prop_assert!(same(&f, &up, o));
        let inv = qseries::jacobi_bracket(-a, b, o - a).unwrap().shift(a).neg();
        prop_assert!(same(&f, &inv, o));
    }

    #[test]
    fn bracket_mul_then_div_is_identity((b, a) in base_and_exponent(), cs in prop::collection::vec(-9i64..9, 1..10)) {
        prop_assume!(a % b != 0);
        let s = LaurentSeries::from_terms(&(), cs.into_iter().enumerate().map(|(i, c)| (i as i64, BigInt::from(c))), 50);
        let mut t = s.clone();
        qseries::mul_bracket(&mut t, a, b).unwrap();
        qseries::div_bracket(&mut t, a, b).unwrap();
        prop_assert!(same(&t, &s.truncate(t.order()), t.order()));
    }

    #[test]
    fn finite_pochhammer_quotients(e in 1i64..6, base in 1i64..4, n in 0u64..8, m in 0u64..8) {
        // (x;q)_{n+m} = (x;q)_n (x q^{n base};q)_m
        let x = Monomial::q(e);
        let whole = qseries::pochhammer_finite(&x, base, n + m, 60);
        let mut parts = qseries::pochhammer_finite(&x, base, n, 60);
        qseries::mul_pochhammer_finite(&mut parts, &BigInt::from(1), e + n as i64 * base, base, m);
        prop_assert!(same(&whole, &parts, 60));
    }

    #[test]
    fn sigma_matches_its_oracle((a, b, c) in sigma_spec()) {
        let spec = SigmaSpec::new(a, b, c, 60);
        let fast = lambert::sigma(&spec).unwrap();
        prop_assert!(same(&fast, &lambert::sigma_oracle(&spec, 12).unwrap(), 60));
        prop_assert_eq!(fast, lambert::sigma_widened(&spec, 4).unwrap());
    }

    #[test]
    fn sigma_functional_equations((a, b, c) in sigma_spec()) {
        let o = 60;
        let lhs = lambert::sigma_shifted(a, b, c, 0, o).unwrap();
        let r4 = lambert::sigma_shifted(-a, -b - 3 * c, c, -a, o).unwrap().neg();
        prop_assert!(same(&lhs, &r4, o));
        let r5 = lambert::sigma_shifted(c - a, c - b, c, c - a - b, o).unwrap().neg();
        prop_assert!(same(&lhs, &r5, o));
    }

    #[test]
    fn sigma_four_term_relation(c in prop::sample::select(vec![9i64, 15]), a in -20i64..20) {
        prop_assume!(a % c != 0);
        let o = 60;
        let s = |b: i64, k: i64| lambert::sigma_shifted(a, b, c, k, o).unwrap();
        let l = s(4 * a - 2 * c, 0).add(&s(4 * a - c, a)).unwrap();
        let r = s(4 * a - 3 * c, -a)
            .add(&s(4 * a, 2 * a)).unwrap()
            .sub(&lambert::jtheta_shifted(c - 2 * a, c, -a, o).unwrap()).unwrap();
        prop_assert!(same(&l, &r, o));
    }

    #[test]
    fn u_series_split(ell in prop::sample::select(vec![3i64, 5]), b in prop::sample::select(vec![4i64, 7, 10, 13, 16, 19])) {
        let o = 80;
        let u = lambert::u_ell(&UellSpec { ell, b, order: o }).unwrap();
        let c = 3 * ell * ell;
        let mut r = LaurentSeries::zero(&(), o);
        for k in 0..ell {
            let (sa, sb) = (3 * ell * k + ell, 12 * ell * k + ell * b - 6 * ell * ell);
            r = r.add(&lambert::sigma_shifted(sa, sb, c, 6 * k * k + b * k, o).unwrap()).unwrap();
        }
        prop_assert!(same(&u, &r, o));
    }
}

#[test]
fn errors() {
    assert_eq!(qseries::jacobi_bracket(9, 9, 10), Err(QSeriesError::ZeroBracket { a: 9, b: 9 }));
    assert_eq!(qseries::jacobi_bracket(1, 0, 10), Err(QSeriesError::BadBase(0)));
    assert!(qseries::pochhammer_inf(&Monomial::q(0), 1, 10).is_err());
    assert!(Monomial::new(BigInt::from(2), 1).is_err());
    assert!(Monomial::new(CrankPoly::z(), 1).is_ok());
    assert_eq!(lambert::sigma(&SigmaSpec::new(15, 0, 15, 10)), Err(LambertError::Pole { a: 15, c: 15 }));
    assert_eq!(lambert::u_ell(&UellSpec { ell: 0, b: 1, order: 5 }), Err(LambertError::BadBase(0)));
}

#[test]
fn bracket_normalization_examples() {
    // <q^-1>_{q^3} = -q^-1 <q^2>_{q^3}
    let n = qseries::bracket_norm(-1, 3).unwrap();
    assert_eq!((n.negate, n.shift, n.reduced), (true, -1, 2));
    // <q^4>_{q^3} = -q^-1 <q>_{q^3}
    let n = qseries::bracket_norm(4, 3).unwrap();
    assert_eq!((n.negate, n.shift, n.reduced), (true, -1, 1));
    // <q>_{q^3} = 1 - q - q^2 + q^3 - q^4 + ...
    let s = qseries::jacobi_bracket(1, 3, 5).unwrap();
    let got: Vec<i64> = (0..=5).map(|e| i64::try_from(s.coeff(e).unwrap()).unwrap()).collect();
    assert_eq!(got, [1, -1, -1, 1, -1, 0]);
}

#[test]
fn infinite_pochhammer_over_crank_polys() {
    // 1/(zq;q)_inf at z = 1 is the partition generating function.
    let mut s = LaurentSeries::one(&CrankPoly::zero().ctx(), 20);
    qseries::div_pochhammer_inf(&mut s, &CrankPoly::z(), 1, 1).unwrap();
    let p: Vec<i64> = (0..=10).map(|e| i64::try_from(s.at_z_one().coeff(e).unwrap()).unwrap()).collect();
    assert_eq!(p, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}
