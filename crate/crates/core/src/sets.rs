//! Finite sets of nonnegative integers and the elementary set operations on
//! them: sumsets, translates and dilates of ℕ.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A finite, strictly increasing set of nonnegative integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct IntegerSet(Vec<u64>);

impl IntegerSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Wraps an already strictly increasing vector.
    pub fn from_sorted(elements: Vec<u64>) -> Result<Self> {
        if let Some(w) = elements.windows(2).find(|w| w[0] >= w[1]) {
            return invalid(format!(
                "elements must be strictly increasing, found {} before {}",
                w[0], w[1]
            ));
        }
        Ok(Self(elements))
    }

    /// Builds a set from arbitrary values, sorting and removing duplicates.
    pub fn from_unsorted(mut elements: Vec<u64>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Self(elements)
    }

    /// `[lo, hi]` as a set; empty when `lo > hi`.
    pub fn interval(lo: u64, hi: u64) -> Self {
        Self((lo..=hi).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_element(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn min_element(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn contains(&self, value: u64) -> bool {
        self.0.binary_search(&value).is_ok()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u64> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    /// The elements not exceeding `bound`.
    pub fn truncate(&self, bound: u64) -> Self {
        let end = self.0.partition_point(|&x| x <= bound);
        Self(self.0[..end].to_vec())
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            out.push(a.min(b));
            i += usize::from(a <= b);
            j += usize::from(b <= a);
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Self(out)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self(self.iter().filter(|&x| other.contains(x)).collect())
    }

    /// Elements of `self` that are not in `other`.
    pub fn difference(&self, other: &Self) -> Self {
        Self(self.iter().filter(|&x| !other.contains(x)).collect())
    }

    /// Reads a set literal: comma separated integers, or `@path` naming a file
    /// holding whitespace separated integers.
    pub fn parse_literal(literal: &str) -> Result<Self> {
        match literal.strip_prefix('@') {
            Some(path) => Self::read_file(Path::new(path)),
            None => literal.parse(),
        }
    }

    fn read_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
        let values = text
            .split_whitespace()
            .map(parse_element)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_unsorted(values))
    }
}

fn parse_element(token: &str) -> Result<u64> {
    token
        .trim()
        .parse::<u64>()
        .map_err(|_| Error::InvalidArgument(format!("not a nonnegative integer: {token:?}")))
}

impl FromStr for IntegerSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::new());
        }
        let values = s
            .split(',')
            .map(parse_element)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_unsorted(values))
    }
}

impl TryFrom<Vec<u64>> for IntegerSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::from_sorted(v)
    }
}

impl From<IntegerSet> for Vec<u64> {
    fn from(s: IntegerSet) -> Self {
        s.0
    }
}

impl FromIterator<u64> for IntegerSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        Self::from_unsorted(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[u64; N]> for IntegerSet {
    fn from(a: [u64; N]) -> Self {
        Self::from_unsorted(a.to_vec())
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// `A + B = {a + b : a ∈ A, b ∈ B}`.
pub fn sumset(a: &IntegerSet, b: &IntegerSet) -> IntegerSet {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x + y))
        .collect()
}

/// `b + A`.
pub fn translate(b: u64, a: &IntegerSet) -> IntegerSet {
    IntegerSet(a.iter().map(|x| x + b).collect())
}

/// `qℕ ∩ [0, bound]`.
pub fn dilate_naturals(q: u64, bound: u64) -> Result<IntegerSet> {
    if q == 0 {
        return invalid("dilation factor must be positive");
    }
    Ok(IntegerSet((0..=bound / q).map(|k| k * q).collect()))
}
