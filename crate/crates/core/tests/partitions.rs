use num_bigint::BigInt;
use proptest::prelude::*;
use stpairs::partitions::{
    crank_mod_counts, crank_table_enum, enumerate_st_pairs, smallest_part_occurrences, st_count, st_series,
    st_series_z_crankform, st_series_z_def, CrankTable, Partition, PartitionPair, UpperBound,
};
use stpairs::Exec;

const FIVE: [&str; 15] = [
    "(5, ∅)",
    "(1+4, ∅)",
    "(2+3, ∅)",
    "(1+1+3, ∅)",
    "(1+2+2, ∅)",
    "(1+1+1+2, ∅)",
    "(1+1+1+1+1, ∅)",
    "(1+3, 1)",
    "(1+1+2, 1)",
    "(1+1+1+1, 1)",
    "(1+2, 1+1)",
    "(1+1+1, 1+1)",
    "(2, 3)",
    "(1+1, 1+1+1)",
    "(1, 1+1+1+1)",
];

#[test]
fn the_fifteen_pairs_of_five() {
    let mut got: Vec<String> = enumerate_st_pairs(5).iter().map(|p| p.to_string()).collect();
    let mut want: Vec<String> = FIVE.iter().map(|s| s.to_string()).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
    assert_eq!(st_series(5, Exec::Sequential).unwrap().coeff(5).unwrap(), BigInt::from(15));
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    for n in 0..=12 {
        let v = enumerate_st_pairs(n);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(v.iter().all(|p| p.is_st() && p.size() == n));
    }
}

#[test]
fn series_and_enumeration_tables_agree() {
    let s = st_series_z_def(18, Exec::auto()).unwrap();
    assert_eq!(CrankTable::from_series(&s, 18).unwrap(), crank_table_enum(18, Exec::Sequential));
    let c = st_series_z_crankform(18, Exec::Sequential).unwrap();
    assert_eq!(s, c);
}

#[test]
fn crank_counts_are_symmetric() {
    let t = crank_table_enum(20, Exec::auto());
    for n in 0..=20 {
        for (m, c) in t.column(n) {
            assert_eq!(t.get(-m, n), c, "C({m},{n})");
        }
        assert_eq!(t.total(n), st_count(n));
    }
}

#[test]
fn congruence_classes_are_equinumerous() {
    let t = crank_table_enum(23, Exec::auto());
    for n in (2..=23).step_by(3) {
        let c = crank_mod_counts(&t, 3, n).unwrap();
        assert!(c.iter().all(|&x| x == c[0]), "n = {n}: {c:?}");
    }
    for n in [3, 8, 13, 18, 23] {
        let c = crank_mod_counts(&t, 5, n).unwrap();
        assert!(c.iter().all(|&x| x == c[0]), "n = {n}: {c:?}");
    }
    assert!(crank_mod_counts(&t, 0, 5).is_err());
}

#[test]
fn smallest_part_bound_reading() {
    for n in 1..=14 {
        assert_eq!(smallest_part_occurrences(n, UpperBound::TwiceFirst), st_count(n));
    }
    let differs = (1..=14).any(|n| smallest_part_occurrences(n, UpperBound::TwiceSecond) != st_count(n));
    assert!(differs);
}

#[test]
fn paircrank_rejects_non_st_pairs() {
    let p = |a: Vec<u32>, b: Vec<u32>| PartitionPair::new(Partition::new(a).unwrap(), Partition::new(b).unwrap());
    // s(π1) > s(π2)
    assert!(p(vec![3], vec![2]).paircrank().is_err());
    // ℓ(π2) = 2 s(π1)
    assert!(p(vec![2, 5], vec![4]).paircrank().is_err());
    // π2 empty: one less than the number of parts
    assert_eq!(p(vec![1, 1, 3], vec![]).paircrank(), Ok(2));
}

fn st_pair() -> impl Strategy<Value = PartitionPair> {
    (1u32..5, prop::collection::vec(0u32..6, 0..5), prop::collection::vec(0u32..4, 0..5)).prop_map(|(s, r1, r2)| {
        let mut a: Vec<u32> = vec![s];
        a.extend(r1.into_iter().map(|x| s + x));
        let b: Vec<u32> = r2.into_iter().map(|x| s + x % s).collect();
        PartitionPair::new(Partition::new(a).unwrap(), Partition::new(b).unwrap())
    })
}

proptest! {
    #[test]
    fn random_pairs_are_enumerated(p in st_pair()) {
        prop_assert!(p.is_st());
        prop_assume!(p.size() <= 16);
        prop_assert!(enumerate_st_pairs(p.size()).binary_search(&p).is_ok());
    }

    #[test]
    fn paircrank_is_bounded(p in st_pair()) {
        let c = p.paircrank().unwrap();
        prop_assert!(c >= -(p.pi2.count() as i64));
        prop_assert!(c <= p.pi1.count() as i64);
    }

    #[test]
    fn partitions_normalize(parts in prop::collection::vec(1u32..9, 0..8)) {
        let p = Partition::new(parts.clone()).unwrap();
        prop_assert_eq!(p.size(), parts.iter().sum::<u32>());
        prop_assert!(p.parts().windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(p.is_empty(), parts.is_empty());
    }
}
