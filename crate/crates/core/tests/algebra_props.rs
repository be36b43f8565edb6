use num_bigint::BigInt;
use proptest::prelude::*;
use stpairs::algebra::{eval_at_root_of_unity, CrankPoly, CyclotomicField, CyclotomicInt, LaurentSeries, Ring};

fn small() -> impl Strategy<Value = i64> {
    -20i64..=20
}

fn crank_poly() -> impl Strategy<Value = CrankPoly> {
    (-4i64..=4, prop::collection::vec(small(), 0..6))
        .prop_map(|(lo, cs)| CrankPoly::from_dense(lo, cs.into_iter().map(BigInt::from).collect()))
}

fn cyclo(t: u32) -> impl Strategy<Value = CyclotomicInt> {
    prop::collection::vec(small(), 0..(t as usize + 2)).prop_map(move |cs| CyclotomicField::new(t).unwrap().from_powers(cs))
}

fn int_series(order: i64) -> impl Strategy<Value = LaurentSeries<BigInt>> {
    (-6i64..=3, prop::collection::vec(small(), 1..12)).prop_map(move |(lo, cs)| {
        let terms = cs.into_iter().enumerate().map(|(i, c)| (lo + i as i64, BigInt::from(c)));
        LaurentSeries::from_terms(&(), terms, order)
    })
}

fn unit_series(order: i64) -> impl Strategy<Value = LaurentSeries<BigInt>> {
    (any::<bool>(), prop::collection::vec(small(), 0..10), -3i64..=3).prop_map(move |(neg, cs, lo)| {
        let lead = BigInt::from(if neg { -1 } else { 1 });
        let terms = std::iter::once((lo, lead)).chain(cs.into_iter().enumerate().map(|(i, c)| (lo + 1 + i as i64, BigInt::from(c))));
        LaurentSeries::from_terms(&(), terms, order)
    })
}

fn same(a: &LaurentSeries<BigInt>, b: &LaurentSeries<BigInt>) -> bool {
    a.sub(b).unwrap().is_zero()
}

proptest! {
    #[test]
    fn crank_poly_ring_axioms(a in crank_poly(), b in crank_poly(), c in crank_poly()) {
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        let mut bc = b.clone();
        bc.add_in(&c);
        let mut ab_ac = a.times(&b);
        ab_ac.add_in(&a.times(&c));
        prop_assert_eq!(a.times(&bc), ab_ac);
        let mut z = a.clone();
        z.sub_in(&a);
        prop_assert!(z.is_nil());
        prop_assert_eq!(a.times(&CrankPoly::constant(1)), a.clone());
    }

    #[test]
    fn crank_poly_reflect_is_an_involutive_morphism(a in crank_poly(), b in crank_poly()) {
        prop_assert_eq!(a.reflect().reflect(), a.clone());
        prop_assert_eq!(a.times(&b).reflect(), a.reflect().times(&b.reflect()));
        prop_assert_eq!(a.times(&b).sum_coeffs(), a.sum_coeffs() * b.sum_coeffs());
    }

    #[test]
    fn cyclotomic_ring_axioms(
        (a, b, c) in prop::sample::select(vec![2u32, 3, 5, 7]).prop_flat_map(|t| (cyclo(t), cyclo(t), cyclo(t)))
    ) {
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        let mut bc = b.clone();
        bc.add_in(&c);
        let mut ab_ac = a.times(&b);
        ab_ac.add_in(&a.times(&c));
        prop_assert_eq!(a.times(&bc), ab_ac);
        // Norms multiply.
        prop_assert_eq!(a.times(&b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn series_mul_is_associative_and_distributive(
        a in int_series(25), b in int_series(25), c in int_series(25)
    ) {
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l.order(), r.order());
        prop_assert!(same(&l, &r));
        let l = a.mul(&b.add(&c).unwrap()).unwrap();
        let r = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert!(same(&l, &r));
    }

    #[test]
    fn inverse_round_trip(u in unit_series(30)) {
        let inv = u.inverse().unwrap();
        let prod = u.mul(&inv).unwrap();
        prop_assert!(same(&prod, &LaurentSeries::one(&(), prod.order())));
        prop_assert!(same(&inv.inverse().unwrap(), &u.truncate(inv.inverse().unwrap().order())));
    }

    #[test]
    fn dissect_round_trip(a in int_series(40), t in prop::sample::select(vec![2i64, 3, 5])) {
        let mut back = LaurentSeries::zero(&(), a.order());
        for r in 0..t {
            let part = a.dissect(t, r).unwrap();
            back = back.add(&part.substitute_power(t).shift(r).truncate(a.order())).unwrap();
        }
        prop_assert_eq!(back.order(), a.order());
        prop_assert!(same(&back, &a));
    }

    #[test]
    fn binomial_multiply_then_divide(a in int_series(30), m in 1i64..6, c in prop::sample::select(vec![1i64, -1])) {
        let mut s = a.clone();
        s.mul_binomial(&BigInt::from(c), m);
        s.div_binomial(&BigInt::from(c), m).unwrap();
        prop_assert!(same(&s, &a.truncate(s.order())));
    }

    #[test]
    fn evaluation_at_roots_is_a_homomorphism(
        a in prop::collection::vec(crank_poly(), 1..6),
        b in prop::collection::vec(crank_poly(), 1..6),
        t in prop::sample::select(vec![3u32, 5]),
    ) {
        let sa = LaurentSeries::from_terms(&CrankPoly::zero().ctx(), a.into_iter().enumerate().map(|(i, p)| (i as i64, p)), 12);
        let sb = LaurentSeries::from_terms(&CrankPoly::zero().ctx(), b.into_iter().enumerate().map(|(i, p)| (i as i64, p)), 12);
        let lhs = eval_at_root_of_unity(&sa.mul(&sb).unwrap(), t).unwrap();
        let rhs = eval_at_root_of_unity(&sa, t).unwrap().mul(&eval_at_root_of_unity(&sb, t).unwrap()).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
        let sum = eval_at_root_of_unity(&sa.add(&sb).unwrap(), t).unwrap();
        let sum2 = eval_at_root_of_unity(&sa, t).unwrap().add(&eval_at_root_of_unity(&sb, t).unwrap()).unwrap();
        prop_assert!(sum.sub(&sum2).unwrap().is_zero());
    }
}

#[test]
fn five_dissection_of_euler_product() {
    // (q;q) = (q^25;q^25)(<q^10>/<q^5> - q - q^2 <q^5>/<q^10>), brackets base q^25;
    // components read through dissect.
    let order = 200;
    let eta = stpairs::qseries::pochhammer_inf(&stpairs::qseries::Monomial::q(1), 1, order).unwrap();
    let comp = |r| eta.dissect(5, r).unwrap();
    let o = comp(0).order();
    // Component 1 is -(q^5;q^5) in q^5 -> q.
    let mut want1 = LaurentSeries::one(&(), comp(1).order());
    stpairs::qseries::mul_eta(&mut want1, 5).unwrap();
    assert!(same(&comp(1), &want1.neg()));
    // Components 3 and 4 vanish.
    assert!(comp(3).is_zero() && comp(4).is_zero());
    // Component 0 is (q^5;q^5) <q^2>_{q^5}/<q>_{q^5}.
    let mut want0 = LaurentSeries::one(&(), o);
    stpairs::qseries::mul_eta(&mut want0, 5).unwrap();
    stpairs::qseries::mul_bracket(&mut want0, 2, 5).unwrap();
    stpairs::qseries::div_bracket(&mut want0, 1, 5).unwrap();
    assert!(same(&comp(0), &want0));
    let mut want2 = LaurentSeries::one(&(), comp(2).order());
    stpairs::qseries::mul_eta(&mut want2, 5).unwrap();
    stpairs::qseries::mul_bracket(&mut want2, 1, 5).unwrap();
    stpairs::qseries::div_bracket(&mut want2, 2, 5).unwrap();
    assert!(same(&comp(2), &want2.neg()));
}
