//! Exhaustive enumeration of coinciding pairs `(C, D)` of equal size inside
//! `[0, max_element]`, normalized so that `0 ∈ C` (hence `min D ≥ 1`).
//!
//! Integers are placed in increasing order. Once every integer up to `t` is
//! placed, all representations of `t` are known on both sides (a new element
//! `x > t` only creates sums `≥ x`), so the counts at `t` must agree. The
//! only pair of `C` that can still change `R_C(t)` when `t` is placed is
//! `0 + t`, which makes `t ∈ C` forced by the state: the search branches on
//! `D` alone and derives `C` on the fly.
//!
//! Work is split into shards keyed by the two smallest elements of `D`,
//! which also fix the second element `d_1 + d_2` of `C`.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::genfun::criterion_eq1;
pub use crate::kernel::{profile_kernel, Bitset};
use crate::sets::IntegerSet;
use crate::structure::{classify_pair, Classification};

/// Highest `max_element` accepted for a given set size.
pub fn default_ceiling(size: usize) -> u64 {
    match size {
        0..=4 => 256,
        5..=8 => 64,
        _ => 48,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub max_element: u64,
    pub size: usize,
    /// Lifts the power-of-two restriction on `size`.
    #[serde(default)]
    pub diagnostic: bool,
}

impl SearchConfig {
    pub fn new(max_element: u64, size: usize) -> Self {
        Self {
            max_element,
            size,
            diagnostic: false,
        }
    }

    pub fn diagnostic(max_element: u64, size: usize) -> Self {
        Self {
            max_element,
            size,
            diagnostic: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.size == 0 {
            return invalid("size must be positive");
        }
        if !self.diagnostic && !self.size.is_power_of_two() {
            return invalid(format!(
                "size {} is not a power of two; coinciding pairs only exist for |C| = |D| = 2^l",
                self.size
            ));
        }
        let ceiling = default_ceiling(self.size);
        if self.max_element > ceiling {
            return Err(Error::ResourceCeiling(format!(
                "max_element {} exceeds the ceiling {ceiling} for size {}",
                self.max_element, self.size
            )));
        }
        Ok(())
    }

    /// Shard keys: the `min(2, size)` smallest elements of `D`, ascending.
    pub fn shards(&self) -> Vec<Vec<u64>> {
        let m = self.max_element;
        if self.size == 1 {
            return (1..=m).map(|d1| vec![d1]).collect();
        }
        (1..=m)
            .flat_map(|d1| (d1 + 1..=m).map(move |d2| vec![d1, d2]))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub pruned: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &Self) {
        self.nodes += other.nodes;
        self.pruned += other.pruned;
    }
}

/// Output of one shard; one JSON line each in a checkpoint file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShardResult {
    pub key: Vec<u64>,
    pub pairs: Vec<(IntegerSet, IntegerSet)>,
    pub stats: SearchStats,
}

struct Walker<'a> {
    size: usize,
    max: u64,
    key: &'a [u64],
    c: Vec<u64>,
    d: Vec<u64>,
    pc: Vec<u32>,
    pd: Vec<u32>,
    stats: SearchStats,
    out: Vec<(IntegerSet, IntegerSet)>,
}

impl Walker<'_> {
    /// Pushes `x` onto one side, returning false if a count on that side now
    /// exceeds the other side's count while the other side is complete.
    fn push(&mut self, x: u64, on_c: bool) -> bool {
        let (set, mine, theirs, theirs_len) = if on_c {
            (&mut self.c, &mut self.pc, &self.pd, self.d.len())
        } else {
            (&mut self.d, &mut self.pd, &self.pc, self.c.len())
        };
        let theirs_final = theirs_len == self.size;
        let mut ok = true;
        for &y in set.iter() {
            let s = (x + y) as usize;
            mine[s] += 1;
            ok &= !theirs_final || mine[s] <= theirs[s];
        }
        set.push(x);
        ok
    }

    fn pop(&mut self, on_c: bool) {
        let (set, mine) = if on_c {
            (&mut self.c, &mut self.pc)
        } else {
            (&mut self.d, &mut self.pd)
        };
        let x = set.pop().expect("non-empty");
        for &y in set.iter() {
            mine[(x + y) as usize] -= 1;
        }
    }

    fn finish(&mut self) {
        if self.c.len() == self.size && self.d.len() == self.size && self.pc == self.pd {
            self.out.push((
                IntegerSet::from_sorted(self.c.clone()).expect("ascending"),
                IntegerSet::from_sorted(self.d.clone()).expect("ascending"),
            ));
        }
    }

    fn place(&mut self, t: u64) {
        self.stats.nodes += 1;
        if t > self.max {
            self.finish();
            return;
        }
        let slot = t as usize;
        // t ∈ D never changes the count at t (0 ∉ D), so C's move is forced
        let add_c = match self.pd[slot].checked_sub(self.pc[slot]) {
            Some(0) => false,
            Some(1) => true,
            _ => {
                self.stats.pruned += 1;
                return;
            }
        };
        if add_c {
            if self.c.len() == self.size {
                self.stats.pruned += 1;
                return;
            }
            if self.push(t, true) {
                self.branch_d(t);
            } else {
                self.stats.pruned += 1;
            }
            self.pop(true);
        } else {
            self.branch_d(t);
        }
    }

    fn branch_d(&mut self, t: u64) {
        let remaining = self.max - t;
        let in_key = self.key.contains(&t);
        let below_key = t < *self.key.last().expect("non-empty key");
        let choices: &[bool] = if in_key {
            &[true]
        } else if below_key || self.d.len() == self.size {
            &[false]
        } else {
            &[false, true]
        };
        for &take in choices {
            let ok = !take || self.push(t, false);
            if ok && self.feasible(remaining) {
                self.place(t + 1);
            } else {
                self.stats.pruned += 1;
            }
            if take {
                self.pop(false);
            }
        }
    }

    /// Enough integers remain to fill both sides, and the first two power
    /// sums can still agree. Summing `R` and `n^2 R(n)` over all `n` gives
    /// `(k-1) p_1` and `(k-2) p_2 + p_1^2`, so equal profiles force equal
    /// `p_1` once `k ≥ 2` and equal `p_2` once `k ≥ 3`.
    fn feasible(&self, remaining: u64) -> bool {
        let need = |len: usize| (self.size - len) as u64;
        if need(self.c.len()) > remaining || need(self.d.len()) > remaining {
            return false;
        }
        let t = self.max - remaining;
        let orders: &[u32] = match self.size {
            1 => &[],
            2 => &[1],
            _ => &[1, 2],
        };
        orders.iter().all(|&j| {
            let (c_lo, c_hi) = self.moment_range(&self.c, t, j);
            let (d_lo, d_hi) = self.moment_range(&self.d, t, j);
            c_lo <= d_hi && d_lo <= c_hi
        })
    }

    /// Bounds on `Σ x^j` over the completed side, whose missing elements
    /// are distinct integers in `(t, max]`.
    fn moment_range(&self, side: &[u64], t: u64, j: u32) -> (u64, u64) {
        let fixed: u64 = side.iter().map(|x| x.pow(j)).sum();
        let r = (self.size - side.len()) as u64;
        let (lo, hi) = (
            power_sum(t + r, j) - power_sum(t, j),
            power_sum(self.max, j) - power_sum(self.max - r, j),
        );
        (fixed + lo, fixed + hi)
    }
}

/// `Σ_{i=1}^{n} i^j` for `j ∈ {1, 2}`.
fn power_sum(n: u64, j: u32) -> u64 {
    match j {
        1 => n * (n + 1) / 2,
        _ => n * (n + 1) * (2 * n + 1) / 6,
    }
}

/// Runs the search restricted to pairs whose `D` starts with `key`.
pub fn run_shard(config: &SearchConfig, key: &[u64]) -> ShardResult {
    let width = 2 * config.max_element as usize + 1;
    let mut walker = Walker {
        size: config.size,
        max: config.max_element,
        key,
        c: vec![0],
        d: Vec::with_capacity(config.size),
        pc: vec![0; width],
        pd: vec![0; width],
        stats: SearchStats::default(),
        out: Vec::new(),
    };
    walker.place(1);
    ShardResult {
        key: key.to_vec(),
        pairs: walker.out,
        stats: walker.stats,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub c: IntegerSet,
    pub d: IntegerSet,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportStats {
    pub nodes: u64,
    pub pruned: u64,
    pub shards: usize,
    pub wall_time_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub max_element: u64,
    pub size: usize,
    pub diagnostic: bool,
    pub pairs: Vec<PairRecord>,
    pub stats: ReportStats,
}

impl SearchReport {
    /// Re-checks the report invariants: every pair coincides, is normalized
    /// and distinct, and the list is strictly increasing.
    pub fn verify(&self) -> Result<()> {
        for p in &self.pairs {
            let normalized = p.c.contains(0) && p.d.min_element().is_some_and(|m| m >= 1);
            let sized = p.c.len() == self.size && p.d.len() == self.size;
            let bounded = p.c.max_element() <= Some(self.max_element)
                && p.d.max_element() <= Some(self.max_element);
            if !(normalized && sized && bounded && p.c != p.d && criterion_eq1(&p.c, &p.d)) {
                return Err(Error::PreconditionViolation(format!(
                    "pair {} / {} fails re-verification",
                    p.c, p.d
                )));
            }
        }
        if self
            .pairs
            .windows(2)
            .any(|w| (&w[0].c, &w[0].d) >= (&w[1].c, &w[1].d))
        {
            return Err(Error::PreconditionViolation(
                "pairs are not in canonical order".into(),
            ));
        }
        Ok(())
    }
}

/// Builds the final report from shard outputs (any order, duplicates
/// tolerated), classifying and re-verifying every pair.
pub fn assemble_report(
    config: &SearchConfig,
    shards: &[ShardResult],
    started: Instant,
) -> Result<SearchReport> {
    let mut stats = SearchStats::default();
    let mut pairs: Vec<(IntegerSet, IntegerSet)> = Vec::new();
    for shard in shards {
        stats.absorb(&shard.stats);
        pairs.extend(shard.pairs.iter().cloned());
    }
    pairs.sort();
    pairs.dedup();
    let pairs = pairs
        .into_par_iter()
        .map(|(c, d)| {
            let classification = classify_pair(&c, &d)?;
            Ok(PairRecord {
                c,
                d,
                classification,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let report = SearchReport {
        max_element: config.max_element,
        size: config.size,
        diagnostic: config.diagnostic,
        pairs,
        stats: ReportStats {
            nodes: stats.nodes,
            pruned: stats.pruned,
            shards: shards.len(),
            wall_time_ms: started.elapsed().as_millis(),
        },
    };
    report.verify()?;
    Ok(report)
}

/// Runs every shard of `config` on the current rayon pool.
pub fn search(config: &SearchConfig) -> Result<SearchReport> {
    config.validate()?;
    let started = Instant::now();
    let shards: Vec<ShardResult> = config
        .shards()
        .par_iter()
        .map(|key| run_shard(config, key))
        .collect();
    assemble_report(config, &shards, started)
}

/// All coinciding pairs of `size`-element sets in `[0, max_element]` with
/// `0 ∈ C`.
pub fn enumerate_coinciding_pairs(max_element: u64, size: usize) -> Result<SearchReport> {
    search(&SearchConfig::new(max_element, size))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum AuditVerdict {
    /// Every pair is a Hilbert pair; the generators of each pair, in report order.
    AllHilbert { generators: Vec<Vec<u64>> },
    /// Pairs without a Hilbert-cube description: counterexample candidates.
    NonHilbertFound {
        pairs: Vec<(IntegerSet, IntegerSet)>,
    },
    /// Some pairs were too large to classify.
    Inconclusive { unclassified: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Audit {
    pub verdict: AuditVerdict,
    pub report: SearchReport,
}

/// Summarizes the classifications in a report.
pub fn audit_verdict(report: &SearchReport) -> AuditVerdict {
    let non_hilbert: Vec<_> = report
        .pairs
        .iter()
        .filter(|p| p.classification == Classification::NonHilbert)
        .map(|p| (p.c.clone(), p.d.clone()))
        .collect();
    if !non_hilbert.is_empty() {
        return AuditVerdict::NonHilbertFound { pairs: non_hilbert };
    }
    let mut generators = Vec::with_capacity(report.pairs.len());
    for p in &report.pairs {
        match &p.classification {
            Classification::HilbertPair { generators: g } => generators.push(g.as_slice().to_vec()),
            _ => {
                let unclassified = report
                    .pairs
                    .iter()
                    .filter(|p| p.classification == Classification::NotAttempted)
                    .count();
                return AuditVerdict::Inconclusive { unclassified };
            }
        }
    }
    AuditVerdict::AllHilbert { generators }
}

/// Enumerates and classifies every pair.
pub fn conjecture2_audit(max_element: u64, size: usize) -> Result<Audit> {
    let report = enumerate_coinciding_pairs(max_element, size)?;
    Ok(Audit {
        verdict: audit_verdict(&report),
        report,
    })
}
