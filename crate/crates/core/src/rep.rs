//! Additive representation functions.
//!
//! For a set `A` and arity `h`, three counting conventions are supported:
//!
//! * [`RepVariant::Ordered`]: h-tuples `(a_1, …, a_h)` in any order,
//! * [`RepVariant::NonDecreasing`]: `a_1 ≤ … ≤ a_h` (multisets),
//! * [`RepVariant::Strict`]: `a_1 < … < a_h` (subsets).
//!
//! Profiles are dense: every count in `[0, n_max]` is materialized.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::kernel::{profile_kernel, Bitset};
use crate::sets::IntegerSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepVariant {
    Ordered,
    NonDecreasing,
    Strict,
}

impl FromStr for RepVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ordered" => Ok(Self::Ordered),
            "non-decreasing" | "nondecreasing" => Ok(Self::NonDecreasing),
            "strict" => Ok(Self::Strict),
            other => invalid(format!("unknown representation variant {other:?}")),
        }
    }
}

impl fmt::Display for RepVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Ordered => "ordered",
            Self::NonDecreasing => "non-decreasing",
            Self::Strict => "strict",
        })
    }
}

/// Representation counts `R(n)` for every `n ∈ [0, n_max]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepProfile {
    h: usize,
    variant: RepVariant,
    counts: Vec<u64>,
}

impl RepProfile {
    pub(crate) fn from_counts(h: usize, variant: RepVariant, counts: Vec<u64>) -> Self {
        debug_assert!(!counts.is_empty());
        Self { h, variant, counts }
    }

    pub fn arity(&self) -> usize {
        self.h
    }

    pub fn variant(&self) -> RepVariant {
        self.variant
    }

    pub fn n_max(&self) -> u64 {
        self.counts.len() as u64 - 1
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `R(n)`; zero beyond `n_max` is *not* implied, so this panics there.
    pub fn get(&self, n: u64) -> u64 {
        self.counts[n as usize]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// The `(n, R(n))` entries with `R(n) > 0`.
    pub fn support(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(n, &c)| (n as u64, c))
    }
}

/// `R^{variant}_{h,A}(n)` for `n ∈ [0, n_max]`.
///
/// The strict `h = 2` case goes through the bitmask kernel; everything else
/// is a knapsack-style dynamic program over the sorted elements.
pub fn rep_function(
    a: &IntegerSet,
    h: usize,
    variant: RepVariant,
    n_max: u64,
) -> Result<RepProfile> {
    if h < 2 {
        return invalid(format!("arity must be at least 2, got {h}"));
    }
    if h == 2 && variant == RepVariant::Strict {
        return Ok(profile_kernel(&Bitset::from_set(&a.truncate(n_max)), n_max));
    }
    let width = n_max as usize + 1;
    let elements: Vec<usize> = a.truncate(n_max).iter().map(|x| x as usize).collect();
    let counts = match variant {
        RepVariant::Ordered => {
            let mut current = vec![0u64; width];
            for &x in &elements {
                current[x] = 1;
            }
            for _ in 1..h {
                let mut next = vec![0u64; width];
                for (s, slot) in next.iter_mut().enumerate() {
                    let mut acc = 0u64;
                    for &x in elements.iter().take_while(|&&x| x <= s) {
                        acc = acc
                            .checked_add(current[s - x])
                            .ok_or(Error::Overflow("ordered representation counts"))?;
                    }
                    *slot = acc;
                }
                current = next;
            }
            current
        }
        RepVariant::NonDecreasing | RepVariant::Strict => {
            // table[j][s]: ways to pick j elements (from those seen so far) summing to s
            let mut table = vec![vec![0u64; width]; h + 1];
            table[0][0] = 1;
            let strict = variant == RepVariant::Strict;
            for &x in &elements {
                let mut update = |j: usize| -> Result<()> {
                    for s in (x..width).rev() {
                        let add = table[j - 1][s - x];
                        if add > 0 {
                            table[j][s] = table[j][s]
                                .checked_add(add)
                                .ok_or(Error::Overflow("representation counts"))?;
                        }
                    }
                    Ok(())
                };
                if strict {
                    for j in (1..=h).rev() {
                        update(j)?;
                    }
                } else {
                    // ascending j lets the same element be used repeatedly
                    for j in 1..=h {
                        update(j)?;
                    }
                }
            }
            table.swap_remove(h)
        }
    };
    Ok(RepProfile::from_counts(h, variant, counts))
}

/// `R_{A+B}(n) = |{(a, b) ∈ A × B : a + b = n}|` for `n ∈ [0, n_max]`.
pub fn rep_sumset(a: &IntegerSet, b: &IntegerSet, n_max: u64) -> RepProfile {
    let mut counts = vec![0u64; n_max as usize + 1];
    for x in a.iter().take_while(|&x| x <= n_max) {
        for y in b.iter().take_while(|&y| x + y <= n_max) {
            counts[(x + y) as usize] += 1;
        }
    }
    RepProfile::from_counts(2, RepVariant::Ordered, counts)
}

/// Smallest `n ≤ n_max` with `R_C(n) ≠ R_D(n)` (strict, `h = 2`).
pub fn first_mismatch(c: &IntegerSet, d: &IntegerSet, n_max: u64) -> Option<u64> {
    let pc = profile_kernel(&Bitset::from_set(&c.truncate(n_max)), n_max);
    let pd = profile_kernel(&Bitset::from_set(&d.truncate(n_max)), n_max);
    pc.counts
        .iter()
        .zip(&pd.counts)
        .position(|(x, y)| x != y)
        .map(|n| n as u64)
}

/// Outcome of [`eventual_coincidence_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoincidenceScan {
    /// Profiles agree on `[threshold, window]`; `None` when they differ at `window`.
    pub threshold: Option<u64>,
    pub window: u64,
}

/// Looks for the point from which the `h = 2` profiles of two truncated sets
/// agree.
///
/// `c` and `d` must contain every element of the underlying sets up to
/// `n_max`. Pair sums never exceed their largest summand's bound, so the
/// counts on `[0, n_max]` are exact and the whole range is comparable.
pub fn eventual_coincidence_scan(
    c: &IntegerSet,
    d: &IntegerSet,
    variant: RepVariant,
    n_max: u64,
) -> Result<CoincidenceScan> {
    let pc = rep_function(c, 2, variant, n_max)?;
    let pd = rep_function(d, 2, variant, n_max)?;
    let last_bad = (0..=n_max).rev().find(|&n| pc.get(n) != pd.get(n));
    let threshold = match last_bad {
        None => Some(0),
        Some(n) if n == n_max => None,
        Some(n) => Some(n + 1),
    };
    Ok(CoincidenceScan {
        threshold,
        window: n_max,
    })
}
