use stpairs::identities::{self, reading_outcomes, IdentityError, Reading, VerifyOptions};
use stpairs::Exec;

fn opts(order: i64) -> VerifyOptions {
    VerifyOptions {
        order: Some(order),
        ..VerifyOptions::default()
    }
}

// Small but above every minimum, so each check runs in debug builds quickly.
fn small_order(min: i64) -> i64 {
    min.max(48)
}

#[test]
fn every_check_passes_at_n_and_half_n() {
    for c in identities::list_checks() {
        let n = small_order(c.min_order);
        for order in [n, (n / 2).max(c.min_order)] {
            let r = identities::verify_with(c.name, &opts(order)).unwrap();
            assert!(r.passed, "{} at {order}: {r:?}", c.name);
            assert_eq!(r.order, order);
        }
    }
}

#[test]
fn every_check_catches_an_injected_coefficient() {
    for c in identities::list_checks() {
        let order = small_order(c.min_order);
        for k in [0, 1] {
            let r = identities::verify_with(
                c.name,
                &VerifyOptions {
                    perturb: Some(k),
                    ..opts(order)
                },
            )
            .unwrap();
            assert!(!r.passed, "{} missed q^{k}", c.name);
            let e = r.first_bad_exponent.unwrap();
            assert!(e <= k, "{}: first_bad {e} > {k}", c.name);
            assert!(r.discrepancy.is_some());
        }
    }
}

#[test]
fn routes_are_independent() {
    for c in identities::list_checks() {
        assert_ne!(c.routes[0], c.routes[1], "{}", c.name);
        assert!(c.default_order >= c.min_order);
        assert!(!c.description.is_empty());
    }
}

#[test]
fn orders_below_the_minimum_are_refused() {
    let c = identities::list_checks().into_iter().find(|c| c.min_order > 1).unwrap();
    let e = identities::verify(c.name, c.min_order - 1).unwrap_err();
    assert!(matches!(e, IdentityError::OrderTooSmall { .. }));
    assert!(matches!(identities::verify("nope", 10), Err(IdentityError::Unknown(_))));
}

#[test]
fn printed_readings() {
    let cases: [(&str, i64); 4] = [
        ("chan_lemma_s10", 60),
        ("prop_5diss_2", 60),
        ("prop_3diss_products", 60),
        ("thm3_component_B0", 150),
    ];
    for (name, order) in cases {
        let fixed = reading_outcomes(name, Reading::Corrected, order, Exec::auto()).unwrap();
        assert!(fixed.iter().all(|&ok| ok), "{name}: {fixed:?}");
        let printed = reading_outcomes(name, Reading::AsPrinted, order, Exec::auto()).unwrap();
        assert!(printed.iter().any(|&ok| !ok), "{name}: {printed:?}");
    }
    assert!(reading_outcomes("misc_prop_1", Reading::Corrected, 30, Exec::auto()).is_err());
}

#[test]
fn sequential_and_parallel_agree() {
    let base = VerifyOptions {
        order: Some(48),
        ..VerifyOptions::default()
    };
    let seq = identities::verify_all(&VerifyOptions { exec: Exec::Sequential, ..base });
    let par = identities::verify_all(&VerifyOptions { exec: Exec::Parallel, ..base });
    let again = identities::verify_all(&VerifyOptions { exec: Exec::Parallel, ..base });
    assert_eq!(seq.len(), identities::list_checks().len());
    for ((a, b), c) in seq.iter().zip(&par).zip(&again) {
        assert_eq!(a.0, b.0);
        assert_eq!(a.1.as_ref().unwrap(), b.1.as_ref().unwrap());
        assert_eq!(b.1.as_ref().unwrap(), c.1.as_ref().unwrap());
    }
}

#[test]
fn seeds_change_the_random_specializations_only() {
    let a = identities::verify_with("chan_lemma_s4", &VerifyOptions { seed: 7, ..opts(60) }).unwrap();
    let b = identities::verify_with("chan_lemma_s4", &VerifyOptions { seed: 8, ..opts(60) }).unwrap();
    assert!(a.passed && b.passed);
    assert_eq!((a.seed, b.seed), (Some(7), Some(8)));
    assert_eq!(identities::verify("misc_prop_1", 30).unwrap().seed, None);
}
