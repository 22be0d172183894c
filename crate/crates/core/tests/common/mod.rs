//! Naive reference implementations shared by the integration tests.
#![allow(dead_code)]

use coinciding::IntegerSet;
use rand::Rng;

/// Strict pair counts by a plain double loop.
pub fn naive_strict(a: &IntegerSet, n_max: u64) -> Vec<u64> {
    let xs = a.as_slice();
    let mut out = vec![0; n_max as usize + 1];
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let s = xs[i] + xs[j];
            if s <= n_max {
                out[s as usize] += 1;
            }
        }
    }
    out
}

/// Ordered pair counts by a plain double loop.
pub fn naive_ordered(a: &IntegerSet, n_max: u64) -> Vec<u64> {
    let mut out = vec![0; n_max as usize + 1];
    for x in a.iter() {
        for y in a.iter() {
            if x + y <= n_max {
                out[(x + y) as usize] += 1;
            }
        }
    }
    out
}

pub fn random_set<R: Rng>(rng: &mut R, max: u64, size: usize) -> IntegerSet {
    let mut xs: Vec<u64> = Vec::with_capacity(size);
    while xs.len() < size {
        let x = rng.gen_range(0..=max);
        if !xs.contains(&x) {
            xs.push(x);
        }
    }
    IntegerSet::from_unsorted(xs)
}

/// Every `k`-element subset of `items`, lexicographically.
pub fn subsets(items: &[u64], k: usize) -> Vec<Vec<u64>> {
    fn go(items: &[u64], k: usize, start: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// All subset sums of `gens` split by parity of the subset, with multiplicity.
pub fn cube_sums(gens: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let (mut even, mut odd) = (Vec::new(), Vec::new());
    for mask in 0u64..1 << gens.len() {
        let s: u64 = (0..gens.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| gens[i])
            .sum();
        if mask.count_ones() % 2 == 0 {
            even.push(s);
        } else {
            odd.push(s);
        }
    }
    (even, odd)
}

/// Generators where each one is at least `factor` times the sum of those
/// before it, plus a random slack in `[1, slack]`.
pub fn growing_generators<R: Rng>(rng: &mut R, len: usize, factor: u64, slack: u64) -> Vec<u64> {
    let mut gens = vec![rng.gen_range(1..=slack)];
    let mut total = gens[0];
    for _ in 1..len {
        let g = factor * total + rng.gen_range(1..=slack);
        gens.push(g);
        total += g;
    }
    gens
}

/// A random set in `[0, max]` whose size is drawn from `sizes`.
pub fn random_set_sized<R: Rng>(
    rng: &mut R,
    max: u64,
    sizes: std::ops::RangeInclusive<usize>,
) -> IntegerSet {
    let size = rng.gen_range(sizes);
    random_set(rng, max, size)
}
