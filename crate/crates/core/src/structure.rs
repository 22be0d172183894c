//! Recovering coinciding partners and recognizing Hilbert-cube pairs.
//!
//! Throughout, `D = {d_1 < d_2 < …}` is indexed from 1, and a set `C` with
//! `0 ∈ C` is sought with `R_C(n) = R_D(n)` for every `n`.

use serde::{Deserialize, Serialize};

use crate::cube::{cube_parts, is_half_nondegenerate, CubeGenerators};
use crate::error::{invalid, Error, Result};
use crate::genfun::criterion_eq1;
use crate::kernel::{profile_kernel, Bitset};
use crate::rep::{rep_function, rep_sumset, RepVariant};
use crate::sets::{sumset, IntegerSet};

/// Largest `|C|` for which [`classify_pair`] searches generator subsets.
pub const MAX_CLASSIFY_SIZE: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionKind {
    /// `d_{2^k+1} ≥ 4·d_{2^k}`
    Gap,
    /// `d_{2^k} ≤ d_1 + d_2 + d_3 + d_5 + … + d_{2^{k-1}+1}`
    Sum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub k: u32,
    pub kind: ConditionKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCheck {
    /// `log2 |D|`.
    pub n: u32,
    /// First violation, gap conditions before sum conditions, by `k`.
    pub violation: Option<Violation>,
    /// The instance fails the sum condition only at `k = n`, i.e. it passes
    /// when the sum family is read as `k = 2, …, n - 1`.
    pub passes_only_narrow_range: bool,
}

impl ConditionCheck {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

fn log2_size(d: &IntegerSet) -> Result<u32> {
    if !d.len().is_power_of_two() {
        return invalid(format!("|D| = {} is not a power of two", d.len()));
    }
    if d.min_element() == Some(0) {
        return invalid("D must not contain 0");
    }
    Ok(d.len().trailing_zeros())
}

/// `d_1 + d_2 + d_3 + d_5 + … + d_{2^{k-1}+1}`: the first generator plus
/// `d_{2^i+1}` for `i = 0, …, k-1`.
fn generator_prefix_sum(d: &[u64], k: u32) -> u64 {
    d[0] + (0..k).map(|i| d[1 << i]).sum::<u64>()
}

/// Evaluates both condition families on `D` (`|D| = 2^n`, `min D ≥ 1`).
pub fn check_conditions(d: &IntegerSet) -> Result<ConditionCheck> {
    let n = log2_size(d)?;
    let xs = d.as_slice();
    let at = |i: usize| xs[i - 1];

    let gap = (0..n)
        .find(|&k| at((1 << k) + 1) < 4 * at(1 << k))
        .map(|k| Violation {
            k,
            kind: ConditionKind::Gap,
        });
    let sum_failures: Vec<u32> = (2..=n)
        .filter(|&k| at(1 << k) > generator_prefix_sum(xs, k))
        .collect();
    let violation = gap.or_else(|| {
        sum_failures.first().map(|&k| Violation {
            k,
            kind: ConditionKind::Sum,
        })
    });
    Ok(ConditionCheck {
        n,
        violation,
        passes_only_narrow_range: gap.is_none() && sum_failures == [n],
    })
}

/// `(d_1, d_2, d_3, d_5, …, d_{2^{n-1}+1})`.
pub fn distinguished_generators(d: &IntegerSet) -> Result<CubeGenerators> {
    let n = log2_size(d)?;
    let xs = d.as_slice();
    let mut gens = vec![xs[0]];
    gens.extend((0..n).map(|i| xs[1 << i]));
    CubeGenerators::new(gens)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub generators: CubeGenerators,
    pub c: IntegerSet,
}

/// Splits `D` as the odd part of the cube on its distinguished generators.
pub fn decompose(d: &IntegerSet) -> Result<Decomposition> {
    let check = check_conditions(d)?;
    if let Some(v) = check.violation {
        return Err(Error::PreconditionViolation(format!(
            "{:?} condition fails at k = {}",
            v.kind, v.k
        )));
    }
    let generators = distinguished_generators(d)?;
    let (h0, h1) = cube_parts(&generators, None)?;
    if h1 != *d {
        let value = d
            .difference(&h1)
            .min_element()
            .or_else(|| h1.difference(d).min_element())
            .expect("sets differ");
        return Err(Error::HypothesisUnsatisfied {
            generators: generators.into(),
            value,
        });
    }
    Ok(Decomposition { generators, c: h0 })
}

struct Solver<'a> {
    target: &'a [u32],
    size: usize,
    max_solutions: usize,
    c: Vec<u64>,
    profile: Vec<u32>,
    solutions: Vec<IntegerSet>,
}

impl Solver<'_> {
    /// Adds `x` to the partial set; returns false (leaving the profile
    /// updated, to be undone by [`Self::remove`]) if some count overshoots.
    fn add(&mut self, x: u64) -> bool {
        let mut ok = true;
        for &y in &self.c {
            match self.profile.get_mut((x + y) as usize) {
                Some(slot) => {
                    *slot += 1;
                    ok &= *slot <= self.target[(x + y) as usize];
                }
                // beyond n_max the target is zero
                None => ok = false,
            }
        }
        self.c.push(x);
        ok
    }

    fn remove(&mut self) {
        let x = self.c.pop().expect("non-empty");
        for &y in &self.c {
            if let Some(slot) = self.profile.get_mut((x + y) as usize) {
                *slot -= 1;
            }
        }
    }

    fn extend(&mut self) {
        if self.solutions.len() >= self.max_solutions {
            return;
        }
        if self.c.len() == self.size {
            if self.profile == self.target {
                self.solutions
                    .push(IntegerSet::from_sorted(self.c.clone()).expect("ascending"));
            }
            return;
        }
        let Some(n) = self
            .profile
            .iter()
            .zip(self.target)
            .position(|(have, want)| have < want)
        else {
            return;
        };
        let n = n as u64;
        let top = *self.c.last().expect("0 is always present");
        // Some pair must realize n, and it involves a new element.
        let mut candidates: Vec<u64> = self
            .c
            .iter()
            .filter(|&&y| y <= n && n - y > top)
            .map(|&y| n - y)
            .collect();
        candidates.sort_unstable();
        for x in candidates {
            if self.add(x) {
                self.extend();
            }
            self.remove();
        }
    }
}

/// All `C` with `0 ∈ C`, `|C| = |D|`, `max C ≤ n_max` and `R_C = R_D` on
/// `[0, n_max]`, in lexicographic order, at most `max_solutions` of them.
///
/// The partial set grows by forced extension: the smallest `n` whose count
/// is still short of `R_D(n)` must be completed by a new element `n - c`.
pub fn solve_coinciding(
    d: &IntegerSet,
    max_solutions: usize,
    n_max: u64,
) -> Result<Vec<IntegerSet>> {
    let Some(top) = d.max_element() else {
        return invalid("D must be non-empty");
    };
    if d.min_element() == Some(0) {
        return invalid("D must not contain 0");
    }
    if n_max < 2 * top {
        return invalid(format!("n_max = {n_max} is below 2*max(D) = {}", 2 * top));
    }
    let target: Vec<u32> = profile_kernel(&Bitset::from_set(d), n_max)
        .counts()
        .iter()
        .map(|&c| c as u32)
        .collect();
    let mut solver = Solver {
        target: &target,
        size: d.len(),
        max_solutions,
        c: vec![0],
        profile: vec![0; target.len()],
        solutions: Vec::new(),
    };
    if max_solutions > 0 {
        solver.extend();
    }
    let mut solutions = solver.solutions;
    solutions.sort();
    solutions.dedup();
    Ok(solutions)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    HilbertPair {
        generators: CubeGenerators,
    },
    NonHilbert,
    /// `|C|` above [`MAX_CLASSIFY_SIZE`].
    NotAttempted,
}

impl Classification {
    pub fn is_hilbert(&self) -> bool {
        matches!(self, Self::HilbertPair { .. })
    }
}

fn for_each_combination(items: &[u64], k: usize, mut visit: impl FnMut(&[u64]) -> bool) {
    fn go(
        items: &[u64],
        k: usize,
        start: usize,
        chosen: &mut Vec<u64>,
        visit: &mut dyn FnMut(&[u64]) -> bool,
    ) -> bool {
        if chosen.len() == k {
            return visit(chosen);
        }
        for i in start..=items.len() - (k - chosen.len()) {
            chosen.push(items[i]);
            let stop = go(items, k, i + 1, chosen, visit);
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
    if k <= items.len() {
        go(items, k, 0, &mut Vec::with_capacity(k), &mut visit);
    }
}

/// Decides whether a coinciding pair is `(H_0(g), H_1(g))` for a half
/// non-degenerate cube with generators `g ⊆ D`.
pub fn classify_pair(c: &IntegerSet, d: &IntegerSet) -> Result<Classification> {
    if c == d || !c.contains(0) {
        return invalid("expected distinct sets with 0 in C");
    }
    if !criterion_eq1(c, d) {
        return invalid("C and D do not have coinciding representation functions");
    }
    if c.len() > MAX_CLASSIFY_SIZE {
        return Ok(Classification::NotAttempted);
    }
    // coincidence forces |C| = |D| = 2^l, and the cube then has l + 1 generators
    let k = c.len().trailing_zeros() as usize + 1;
    let mut found = None;
    for_each_combination(d.as_slice(), k, |gens| {
        let g = CubeGenerators::new(gens.to_vec()).expect("subset of a set is increasing");
        let hit = matches!(cube_parts(&g, None), Ok((h0, h1)) if h0 == *c && h1 == *d)
            && is_half_nondegenerate(&g).unwrap_or(false);
        if hit {
            found = Some(g);
        }
        hit
    });
    Ok(match found {
        Some(generators) => Classification::HilbertPair { generators },
        None => Classification::NonHilbert,
    })
}

/// First discrepancies between the sumset profiles in the induction step
/// that extends `C_1`, `D_1` by `C_{2,n}`, `D_{2,n}`. `None` stands for `+∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SolverDiagnostics {
    /// Smallest `u ∈ C_1 + C_{2,n}` with `R_{C_1+C_{2,n}}(u) > R_{D_1+D_{2,n}}(u)`.
    pub p: Option<u64>,
    /// Smallest `u ∈ D_1 + D_{2,n}` with `R_{C_1+C_{2,n}}(u) < R_{D_1+D_{2,n}}(u)`.
    pub q: Option<u64>,
    /// Smallest `u ∈ C_{2,n} + C_{2,n}` with `R_{C_{2,n}}(u) > R_{D_{2,n}}(u)`.
    pub t: Option<u64>,
    /// Smallest `u ∈ D_{2,n} + D_{2,n}` with `R_{C_{2,n}}(u) < R_{D_{2,n}}(u)`.
    pub s: Option<u64>,
}

pub fn frontier_diagnostics(
    c1: &IntegerSet,
    c2n: &IntegerSet,
    d1: &IntegerSet,
    d2n: &IntegerSet,
) -> SolverDiagnostics {
    let top = [c1, c2n, d1, d2n]
        .iter()
        .filter_map(|s| s.max_element())
        .max()
        .unwrap_or(0);
    let n_max = 2 * top;
    let cross_c = rep_sumset(c1, c2n, n_max);
    let cross_d = rep_sumset(d1, d2n, n_max);
    let inner_c = rep_function(c2n, 2, RepVariant::Strict, n_max).expect("arity 2");
    let inner_d = rep_function(d2n, 2, RepVariant::Strict, n_max).expect("arity 2");
    let first =
        |support: IntegerSet, bigger: &dyn Fn(u64) -> bool| support.iter().find(|&u| bigger(u));
    SolverDiagnostics {
        p: first(sumset(c1, c2n), &|u| cross_c.get(u) > cross_d.get(u)),
        q: first(sumset(d1, d2n), &|u| cross_c.get(u) < cross_d.get(u)),
        t: first(sumset(c2n, c2n), &|u| inner_c.get(u) > inner_d.get(u)),
        s: first(sumset(d2n, d2n), &|u| inner_c.get(u) < inner_d.get(u)),
    }
}
