mod common;

use coinciding::structure::distinguished_generators;
use coinciding::{
    check_conditions, classify_pair, criterion_eq1, cube_parts, decompose, solve_coinciding,
    CubeGenerators, IntegerSet,
};
use common::{growing_generators, subsets};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sorted_pair_sums(xs: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            out.push(xs[i] + xs[j]);
        }
    }
    out.sort_unstable();
    out
}

/// Every `C ∋ 0` of the same size inside `[0, 2 max D]` with the same
/// multiset of pair sums. Equal pair-sum multisets force equal element sums,
/// which pins the last element of a four-element `C`.
fn brute_force_solutions(d: &IntegerSet) -> Vec<IntegerSet> {
    let top = 2 * d.max_element().unwrap();
    let target = sorted_pair_sums(d.as_slice());
    let total: u64 = d.iter().sum();
    let mut out = Vec::new();
    match d.len() {
        1 => out.push(IntegerSet::from([0])),
        2 => {
            for c in subsets(&(1..=top).collect::<Vec<_>>(), 1) {
                if sorted_pair_sums(&[0, c[0]]) == target {
                    out.push(IntegerSet::from([0, c[0]]));
                }
            }
        }
        4 => {
            for a in 1..=top {
                for b in a + 1..=top {
                    let Some(c) = total.checked_sub(a + b).filter(|&c| c > b && c <= top) else {
                        continue;
                    };
                    if sorted_pair_sums(&[0, a, b, c]) == target {
                        out.push(IntegerSet::from([0, a, b, c]));
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    out.sort();
    out
}

#[test]
fn solver_is_complete_at_small_scale() {
    for size in [1usize, 2, 4] {
        for top in 1..=24u64 {
            let below: Vec<u64> = (1..top).collect();
            for rest in subsets(&below, size - 1) {
                let mut d = rest;
                d.push(top);
                let d = IntegerSet::from_unsorted(d);
                let solved = solve_coinciding(&d, usize::MAX, 2 * top).unwrap();
                assert_eq!(solved, brute_force_solutions(&d), "D = {d}");
            }
        }
    }
}

proptest! {
    #[test]
    fn solver_output_coincides(d in prop::collection::btree_set(1u64..40, 1..=8)) {
        let d: IntegerSet = d.into_iter().collect();
        let top = d.max_element().unwrap();
        for c in solve_coinciding(&d, usize::MAX, 2 * top).unwrap() {
            prop_assert!(c.contains(0));
            prop_assert!(criterion_eq1(&c, &d), "{} / {}", c, d);
        }
    }
}

fn gap_instance(rng: &mut ChaCha8Rng) -> (CubeGenerators, IntegerSet) {
    let len = rng.gen_range(2..=5);
    let g = CubeGenerators::new(growing_generators(rng, len, 4, 6)).unwrap();
    let (_, h1) = cube_parts(&g, None).unwrap();
    (g, h1)
}

#[test]
fn decomposition_is_the_unique_solution() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for _ in 0..60 {
        let (g, d) = gap_instance(&mut rng);
        assert!(check_conditions(&d).unwrap().holds(), "D = {d}");
        let dec = decompose(&d).unwrap();
        assert_eq!(dec.generators, g);
        let solved = solve_coinciding(&d, usize::MAX, 2 * d.max_element().unwrap()).unwrap();
        assert_eq!(solved, vec![dec.c.clone()], "D = {d}");
        assert!(classify_pair(&dec.c, &d).unwrap().is_hilbert());
    }
}

#[test]
fn coefficients_up_to_two_are_unique_under_gaps() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..40 {
        let (_, d) = gap_instance(&mut rng);
        let g = distinguished_generators(&d).unwrap();
        let gens = g.as_slice();
        let mut sums = Vec::new();
        let mut alpha = vec![0u8; gens.len()];
        loop {
            sums.push(
                alpha
                    .iter()
                    .zip(gens)
                    .map(|(&a, &x)| u64::from(a) * x)
                    .sum::<u64>(),
            );
            let Some(i) = alpha.iter().position(|&a| a < 2) else {
                break;
            };
            alpha[i] += 1;
            alpha[..i].iter_mut().for_each(|a| *a = 0);
        }
        let n = sums.len();
        sums.sort_unstable();
        sums.dedup();
        assert_eq!(sums.len(), n, "generators {g}");
    }
}

#[test]
fn distinguished_generators_of_known_sets() {
    let d = IntegerSet::from([1, 4, 16, 21]);
    assert_eq!(
        distinguished_generators(&d).unwrap().as_slice(),
        &[1, 4, 16]
    );
    assert_eq!(decompose(&d).unwrap().c, IntegerSet::from([0, 5, 17, 20]));
}
