mod common;

use coinciding::kernel::Bitset;
use coinciding::{
    eventual_coincidence_scan, first_mismatch, profile_kernel, rep_function, rep_sumset, translate,
    IntegerSet, RepVariant,
};
use common::{naive_ordered, naive_strict, random_set};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_set() -> impl Strategy<Value = IntegerSet> {
    prop::collection::btree_set(0u64..40, 0..12).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #[test]
    fn strict_matches_double_loop(a in small_set(), n_max in 0u64..100) {
        let p = rep_function(&a, 2, RepVariant::Strict, n_max).unwrap();
        let naive = naive_strict(&a, n_max);
        prop_assert_eq!(p.counts(), naive.as_slice());
    }

    #[test]
    fn ordered_matches_double_loop(a in small_set(), n_max in 0u64..100) {
        let p = rep_function(&a, 2, RepVariant::Ordered, n_max).unwrap();
        let naive = naive_ordered(&a, n_max);
        prop_assert_eq!(p.counts(), naive.as_slice());
    }

    #[test]
    fn ordered_count_is_odd_exactly_on_doubles(a in small_set()) {
        let p = rep_function(&a, 2, RepVariant::Ordered, 80).unwrap();
        for n in 0..=80u64 {
            let on_diagonal = n % 2 == 0 && a.contains(n / 2);
            prop_assert_eq!(p.get(n) % 2 == 1, on_diagonal, "n = {}", n);
        }
    }

    #[test]
    fn strict_total_is_binomial(a in small_set()) {
        let k = a.len() as u64;
        let p = rep_function(&a, 2, RepVariant::Strict, 80).unwrap();
        prop_assert_eq!(p.total(), k * k.saturating_sub(1) / 2);
    }

    #[test]
    fn translation_shifts_by_twice_the_offset(a in small_set(), b in 0u64..20) {
        let moved = rep_function(&translate(b, &a), 2, RepVariant::Strict, 120).unwrap();
        let base = rep_function(&a, 2, RepVariant::Strict, 120).unwrap();
        for n in 0..=120u64 {
            let expected = if n >= 2 * b { base.get(n - 2 * b) } else { 0 };
            prop_assert_eq!(moved.get(n), expected);
        }
    }

    #[test]
    fn variants_are_ordered_pointwise(a in small_set(), h in 2usize..5) {
        let n_max = 60;
        let ord = rep_function(&a, h, RepVariant::Ordered, n_max).unwrap();
        let nd = rep_function(&a, h, RepVariant::NonDecreasing, n_max).unwrap();
        let st = rep_function(&a, h, RepVariant::Strict, n_max).unwrap();
        for n in 0..=n_max {
            prop_assert!(ord.get(n) >= nd.get(n) && nd.get(n) >= st.get(n));
            if h == 2 {
                let diag = u64::from(n % 2 == 0 && a.contains(n / 2));
                prop_assert_eq!(ord.get(n), 2 * st.get(n) + diag);
                prop_assert_eq!(nd.get(n), st.get(n) + diag);
            }
        }
    }

    #[test]
    fn self_sumset_is_ordered_profile(a in small_set()) {
        let ord = rep_function(&a, 2, RepVariant::Ordered, 90).unwrap();
        let sums = rep_sumset(&a, &a, 90);
        prop_assert_eq!(sums.counts(), ord.counts());
    }

    #[test]
    fn first_mismatch_is_the_first_difference(c in small_set(), d in small_set()) {
        let (pc, pd) = (naive_strict(&c, 80), naive_strict(&d, 80));
        let expected = (0..=80u64).find(|&n| pc[n as usize] != pd[n as usize]);
        prop_assert_eq!(first_mismatch(&c, &d, 80), expected);
    }
}

#[test]
fn higher_arity_against_enumeration() {
    let a = IntegerSet::from([0, 1, 3, 7, 8]);
    let xs = a.as_slice();
    let n_max = 30;
    let mut ordered = vec![0u64; n_max + 1];
    let mut nondecreasing = vec![0u64; n_max + 1];
    let mut strict = vec![0u64; n_max + 1];
    for &x in xs {
        for &y in xs {
            for &z in xs {
                let s = (x + y + z) as usize;
                ordered[s] += 1;
                nondecreasing[s] += u64::from(x <= y && y <= z);
                strict[s] += u64::from(x < y && y < z);
            }
        }
    }
    let get = |v| {
        rep_function(&a, 3, v, n_max as u64)
            .unwrap()
            .counts()
            .to_vec()
    };
    assert_eq!(get(RepVariant::Ordered), ordered);
    assert_eq!(get(RepVariant::NonDecreasing), nondecreasing);
    assert_eq!(get(RepVariant::Strict), strict);
}

#[test]
fn kernel_differential_on_random_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..1000 {
        let max = rng.gen_range(0..300u64);
        let size = rng.gen_range(0..=64usize.min(max as usize + 1));
        let a = random_set(&mut rng, max, size);
        let n_max = rng.gen_range(0..=2 * max + 5);
        let fast = profile_kernel(&Bitset::from_set(&a), n_max);
        assert_eq!(fast.counts(), naive_strict(&a, n_max).as_slice(), "set {a}");
    }
}

#[test]
fn eventual_scan_finds_the_threshold() {
    let c = IntegerSet::from([0, 1, 5, 9, 10, 11, 12]);
    let d = IntegerSet::from([0, 2, 5, 9, 10, 11, 12]);
    let scan = eventual_coincidence_scan(&c, &d, RepVariant::Strict, 12).unwrap();
    let (pc, pd) = (naive_strict(&c, 12), naive_strict(&d, 12));
    let expected = match (0..=12).rev().find(|&n| pc[n] != pd[n]) {
        None => Some(0),
        Some(12) => None,
        Some(n) => Some(n as u64 + 1),
    };
    assert_eq!(scan.threshold, expected);
    assert_eq!(scan.window, 12);
}
