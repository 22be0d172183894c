//! Partitions of ℕ into two sets with equal representation functions whose
//! overlap is an arithmetic progression.
//!
//! The Chen–Lev family takes the Hilbert cube on
//! `1, 2, 4, …, 2^(2l-1), 2^(2l) - 1, m, 2m, 4m, …` with `m = 2^(2l+1) - 1`.
//! Its even and odd parts cover ℕ and meet exactly in `r + mℕ`, where
//! `r = 2^(2l) - 1`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cube::{cube_parts, truncate_rule, CubeGenerators};
use crate::error::{invalid, Result};
use crate::sets::IntegerSet;

/// Largest `l` whose sequence still fits in `u64`.
pub const MAX_CHEN_LEV_L: u32 = 31;

/// The infinite Chen–Lev generator sequence for a given `l`, ending only
/// when the next term would overflow `u64`.
#[derive(Debug, Clone)]
pub struct ChenLevSequence {
    l: u32,
    index: u32,
    tail: Option<u64>,
}

impl ChenLevSequence {
    pub fn new(l: u32) -> Self {
        assert!((1..=MAX_CHEN_LEV_L).contains(&l), "l = {l} out of range");
        Self {
            l,
            index: 0,
            tail: None,
        }
    }
}

impl Iterator for ChenLevSequence {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let two_l = 2 * self.l;
        let value = if self.index < two_l {
            Some(1u64 << self.index)
        } else if self.index == two_l {
            Some((1u64 << two_l) - 1)
        } else {
            let next = match self.tail {
                None => Some((1u64 << (two_l + 1)) - 1),
                Some(prev) => prev.checked_mul(2),
            };
            self.tail = next;
            next
        };
        self.index += 1;
        value
    }
}

fn check_l(l: u32) -> Result<()> {
    if !(1..=MAX_CHEN_LEV_L).contains(&l) {
        return invalid(format!("l must lie in 1..={MAX_CHEN_LEV_L}, got {l}"));
    }
    Ok(())
}

pub fn chenlev_generators(l: u32, bound: u64) -> Result<CubeGenerators> {
    check_l(l)?;
    truncate_rule(ChenLevSequence::new(l), bound)
}

/// `(H_0, H_1)` of the Chen–Lev cube on `[0, bound]`.
pub fn chenlev_sets(l: u32, bound: u64) -> Result<(IntegerSet, IntegerSet)> {
    cube_parts(&chenlev_generators(l, bound)?, Some(bound))
}

/// The overlap progression `r + mℕ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSpec {
    pub l: Option<u32>,
    pub r: u64,
    pub m: u64,
}

impl PartitionSpec {
    pub fn new(r: u64, m: u64) -> Result<Self> {
        if m == 0 {
            return invalid("progression difference must be positive");
        }
        Ok(Self { l: None, r, m })
    }

    /// `r = 2^(2l) - 1`, `m = 2^(2l+1) - 1`.
    pub fn chen_lev(l: u32) -> Result<Self> {
        check_l(l)?;
        Ok(Self {
            l: Some(l),
            r: (1u64 << (2 * l)) - 1,
            m: (1u64 << (2 * l + 1)) - 1,
        })
    }

    pub fn progression(&self, bound: u64) -> IntegerSet {
        if self.r > bound {
            return IntegerSet::new();
        }
        IntegerSet::from_sorted((self.r..=bound).step_by(self.m as usize).collect())
            .expect("progression ascends")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub union: bool,
    pub intersection: bool,
    pub rep_equal: bool,
    /// Closed range of `n` over which the profiles were compared.
    pub window: [u64; 2],
}

impl PartitionReport {
    pub fn all_hold(&self) -> bool {
        self.union && self.intersection && self.rep_equal
    }
}

/// Checks the three partition properties of truncations `C, D ⊆ [0, bound]`.
///
/// A pair sum `n` only involves elements `≤ n`, so the truncated profiles are
/// exact on `[0, bound]` and that is the comparison window.
pub fn verify_partition(
    c: &IntegerSet,
    d: &IntegerSet,
    spec: &PartitionSpec,
    bound: u64,
) -> PartitionReport {
    let (c, d) = (c.truncate(bound), d.truncate(bound));
    PartitionReport {
        union: c.union(&d) == IntegerSet::interval(0, bound),
        intersection: c.intersection(&d) == spec.progression(bound),
        rep_equal: crate::rep::first_mismatch(&c, &d, bound).is_none(),
        window: [0, bound],
    }
}

/// A partition-with-overlap of `[0, bound]` whose profiles agree there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCandidate {
    pub r: u64,
    pub m: u64,
    pub c: IntegerSet,
    pub d: IntegerSet,
    /// Whether `(r, m)` is `(2^(2l) - 1, 2^(2l+1) - 1)` and `(C, D)` are the
    /// matching Chen–Lev truncations.
    pub chen_lev: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ScanStats {
    pub nodes: u64,
    pub pruned: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanResult {
    pub bound: u64,
    pub max_m: u64,
    pub candidates: Vec<ScanCandidate>,
    pub stats: ScanStats,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    C,
    D,
    Both,
}

struct ScanState {
    bound: usize,
    c: Vec<u64>,
    d: Vec<u64>,
    pc: Vec<u32>,
    pd: Vec<u32>,
    stats: ScanStats,
}

impl ScanState {
    fn push(set: &mut Vec<u64>, profile: &mut [u32], x: u64, bound: usize) {
        for &y in set.iter() {
            let s = (x + y) as usize;
            if s > bound {
                break;
            }
            profile[s] += 1;
        }
        set.push(x);
    }

    fn pop(set: &mut Vec<u64>, profile: &mut [u32], bound: usize) {
        let x = set.pop().expect("non-empty");
        for &y in set.iter() {
            let s = (x + y) as usize;
            if s > bound {
                break;
            }
            profile[s] -= 1;
        }
    }

    fn apply(&mut self, n: u64, side: Side) {
        if side != Side::D {
            Self::push(&mut self.c, &mut self.pc, n, self.bound);
        }
        if side != Side::C {
            Self::push(&mut self.d, &mut self.pd, n, self.bound);
        }
    }

    fn undo(&mut self, side: Side) {
        if side != Side::D {
            Self::pop(&mut self.c, &mut self.pc, self.bound);
        }
        if side != Side::C {
            Self::pop(&mut self.d, &mut self.pd, self.bound);
        }
    }

    /// Assign integers `n, n+1, …, bound` in order. After `n` is placed every
    /// pair summing to `n` is known, so the profiles must agree at `n`.
    fn extend(&mut self, n: u64, spec: &PartitionSpec, out: &mut Vec<(Vec<u64>, Vec<u64>)>) {
        if n as usize > self.bound {
            out.push((self.c.clone(), self.d.clone()));
            return;
        }
        let in_progression = n >= spec.r && (n - spec.r).is_multiple_of(spec.m);
        let options: &[Side] = if in_progression {
            &[Side::Both]
        } else if n == 0 {
            // C and D are interchangeable; put 0 in C
            &[Side::C]
        } else {
            &[Side::C, Side::D]
        };
        for &side in options {
            self.stats.nodes += 1;
            self.apply(n, side);
            if self.pc[n as usize] == self.pd[n as usize] {
                self.extend(n + 1, spec, out);
            } else {
                self.stats.pruned += 1;
            }
            self.undo(side);
        }
    }
}

/// Searches `[0, bound]` for assignments of every integer to `C`, `D` or both
/// (both exactly on `(r + mℕ) ∩ [0, bound]`, `r < m ≤ max_m`, `m ≥ 2`) with
/// `R_C = R_D` on the window. Sound to prune on the profile prefix: placing
/// `n` settles every representation of `n`.
pub fn conjecture34_scan(bound: u64, max_m: u64) -> Result<ScanResult> {
    if max_m < 2 {
        return invalid("max_m must be at least 2");
    }
    if bound < 2 * max_m {
        return invalid(format!("bound {bound} is below 2*max_m = {}", 2 * max_m));
    }
    let shards: Vec<(u64, u64)> = (2..=max_m)
        .flat_map(|m| (0..m).map(move |r| (r, m)))
        .collect();
    let per_shard: Vec<(Vec<ScanCandidate>, ScanStats)> = shards
        .par_iter()
        .map(|&(r, m)| {
            let spec = PartitionSpec { l: None, r, m };
            let width = bound as usize + 1;
            let mut state = ScanState {
                bound: bound as usize,
                c: Vec::new(),
                d: Vec::new(),
                pc: vec![0; width],
                pd: vec![0; width],
                stats: ScanStats::default(),
            };
            let mut found = Vec::new();
            state.extend(0, &spec, &mut found);
            let candidates = found
                .into_iter()
                .map(|(c, d)| {
                    let c = IntegerSet::from_sorted(c).expect("ascending");
                    let d = IntegerSet::from_sorted(d).expect("ascending");
                    let chen_lev = match_chen_lev(r, m, &c, &d, bound);
                    ScanCandidate {
                        r,
                        m,
                        c,
                        d,
                        chen_lev,
                    }
                })
                .collect();
            (candidates, state.stats)
        })
        .collect();
    let mut stats = ScanStats::default();
    let mut candidates = Vec::new();
    for (found, s) in per_shard {
        stats.nodes += s.nodes;
        stats.pruned += s.pruned;
        candidates.extend(found);
    }
    candidates.sort_by(|a, b| (a.m, a.r, &a.c, &a.d).cmp(&(b.m, b.r, &b.c, &b.d)));
    Ok(ScanResult {
        bound,
        max_m,
        candidates,
        stats,
    })
}

fn match_chen_lev(r: u64, m: u64, c: &IntegerSet, d: &IntegerSet, bound: u64) -> Option<u32> {
    (1..=MAX_CHEN_LEV_L)
        .map(|l| (l, PartitionSpec::chen_lev(l).expect("valid l")))
        .take_while(|(_, spec)| spec.m <= m)
        .find(|(_, spec)| spec.r == r && spec.m == m)
        .and_then(|(l, _)| {
            let (h0, h1) = chenlev_sets(l, bound).ok()?;
            (h0 == *c && h1 == *d).then_some(l)
        })
}
