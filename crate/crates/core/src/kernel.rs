//! Word-parallel pair counting over a bitmask.
//!
//! For a set `A ⊆ [0, N]` held as a bitmask `B` and its reversal `B'` (bit
//! `j` of `B'` is bit `N - j` of `B`), the number of ordered pairs `(a, b)`
//! with `a + b = n` is `popcount(B & (B' >> (N - n)))` for `n ≤ N` and
//! `popcount(B & (B' << (n - N)))` above. Removing the diagonal term and
//! halving gives the strict count.

use crate::rep::{RepProfile, RepVariant};
use crate::sets::IntegerSet;

/// A fixed-width bitmask over `[0, len)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bitset {
    words: Vec<u64>,
    len: usize,
}

impl Bitset {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    /// The bitmask of `set`, sized to `max(set) + 1`.
    pub fn from_set(set: &IntegerSet) -> Self {
        let len = set.max_element().map_or(0, |m| m as usize + 1);
        let mut bits = Self::zeros(len);
        for x in set.iter() {
            bits.insert(x as usize);
        }
        bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn to_set(&self) -> IntegerSet {
        IntegerSet::from_sorted(
            (0..self.len)
                .filter(|&i| self.get(i))
                .map(|i| i as u64)
                .collect(),
        )
        .expect("ascending scan")
    }

    fn reversed(&self) -> Self {
        let mut out = Self::zeros(self.len);
        for i in 0..self.len {
            if self.get(i) {
                out.insert(self.len - 1 - i);
            }
        }
        out
    }

    /// Word `w` of `self` shifted by `shift` bits towards lower indices
    /// (negative shifts move towards higher indices).
    #[inline]
    fn shifted_word(&self, w: usize, shift: isize) -> u64 {
        let fetch = |idx: isize| -> u64 {
            if idx < 0 || idx as usize >= self.words.len() {
                0
            } else {
                self.words[idx as usize]
            }
        };
        let q = shift.div_euclid(64);
        let r = shift.rem_euclid(64) as u32;
        let lo = fetch(w as isize + q);
        if r == 0 {
            lo
        } else {
            (lo >> r) | (fetch(w as isize + q + 1) << (64 - r))
        }
    }
}

/// Strict `h = 2` representation counts of the set held in `bits`, for every
/// `n ∈ [0, n_max]`.
pub fn profile_kernel(bits: &Bitset, n_max: u64) -> RepProfile {
    let mut counts = vec![0u64; n_max as usize + 1];
    if bits.is_empty() {
        return RepProfile::from_counts(2, RepVariant::Strict, counts);
    }
    let top = bits.len() - 1;
    let rev = bits.reversed();
    let last = (n_max as usize).min(2 * top);
    for (n, slot) in counts.iter_mut().enumerate().take(last + 1) {
        let shift = top as isize - n as isize;
        // Only words that can hold a summand a ≤ n are relevant.
        let words = (n.min(top) / 64) + 1;
        let ordered: u64 = (0..words)
            .map(|w| u64::from((bits.words[w] & rev.shifted_word(w, shift)).count_ones()))
            .sum();
        let diagonal = u64::from(n % 2 == 0 && bits.get(n / 2));
        *slot = (ordered - diagonal) / 2;
    }
    RepProfile::from_counts(2, RepVariant::Strict, counts)
}
