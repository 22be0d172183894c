//! Hilbert cubes `H(h_1, h_2, …) = {Σ ε_i h_i : ε_i ∈ {0, 1}}` and their even
//! and odd parts `H_0`, `H_1`, split by the parity of `Σ ε_i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::genfun::from_set;
use crate::partition::ChenLevSequence;
use crate::poly::IntPolynomial;
use crate::rep::first_mismatch;
use crate::sets::IntegerSet;

/// Largest generator count enumerated without a bound (2^25 subsets).
pub const MAX_UNBOUNDED_GENERATORS: usize = 25;

/// Strictly increasing positive generators of a Hilbert cube. The sum of
/// all generators is guaranteed to fit in a `u64`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct CubeGenerators(Vec<u64>);

impl CubeGenerators {
    pub fn new(generators: Vec<u64>) -> Result<Self> {
        if generators.first() == Some(&0) {
            return invalid("generators must be positive");
        }
        if let Some(w) = generators.windows(2).find(|w| w[0] >= w[1]) {
            return invalid(format!(
                "generators must be strictly increasing, found {} before {}",
                w[0], w[1]
            ));
        }
        generators
            .iter()
            .try_fold(0u64, |acc, &g| acc.checked_add(g))
            .ok_or_else(|| Error::InvalidArgument("generator sum overflows u64".into()))?;
        Ok(Self(generators))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The largest cube element, `Σ h_i`.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Generators not exceeding `bound`; enough to produce every cube
    /// element up to `bound`.
    pub fn truncate(&self, bound: u64) -> Self {
        Self(self.0.iter().copied().take_while(|&g| g <= bound).collect())
    }
}

impl TryFrom<Vec<u64>> for CubeGenerators {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<CubeGenerators> for Vec<u64> {
    fn from(g: CubeGenerators) -> Self {
        g.0
    }
}

impl fmt::Display for CubeGenerators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Named infinite generator sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorRule {
    /// `1, 2, 4, 8, …`
    Pow2,
    /// `1, 2, …, 2^(2l-1), 2^(2l) - 1, m, 2m, 4m, …` with `m = 2^(2l+1) - 1`.
    ChenLev { l: u32 },
}

impl GeneratorRule {
    pub fn sequence(&self) -> Box<dyn Iterator<Item = u64>> {
        match *self {
            Self::Pow2 => Box::new((0..64).map(|k| 1u64 << k)),
            Self::ChenLev { l } => Box::new(ChenLevSequence::new(l)),
        }
    }
}

impl FromStr for GeneratorRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "pow2" {
            return Ok(Self::Pow2);
        }
        if let Some(l) = s.strip_prefix("chenlev:") {
            let l: u32 = l
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad Chen-Lev parameter in {s:?}")))?;
            if l == 0 {
                return invalid("Chen-Lev parameter l must be at least 1");
            }
            return Ok(Self::ChenLev { l });
        }
        invalid(format!(
            "unknown generator rule {s:?} (expected pow2 or chenlev:<l>)"
        ))
    }
}

/// The prefix of `rule` up to `bound`. Generators are positive, so every
/// cube element `≤ bound` only involves generators `≤ bound`.
pub fn truncate_rule(rule: impl IntoIterator<Item = u64>, bound: u64) -> Result<CubeGenerators> {
    let mut out: Vec<u64> = Vec::new();
    for g in rule {
        if g == 0 || out.last().is_some_and(|&prev| g <= prev) {
            return invalid(format!(
                "rule is not strictly increasing and positive at {g}"
            ));
        }
        if g > bound {
            break;
        }
        out.push(g);
    }
    CubeGenerators::new(out)
}

/// Calls `visit(mask, sum)` for every subset of `gens`, in Gray-code order so
/// each step adds or removes exactly one generator.
pub(crate) fn for_each_subset(gens: &[u64], mut visit: impl FnMut(u64, u64)) {
    assert!(gens.len() < 64);
    let mut mask = 0u64;
    let mut sum = 0u64;
    visit(0, 0);
    for i in 1u64..(1 << gens.len()) {
        let bit = i.trailing_zeros() as usize;
        mask ^= 1 << bit;
        if mask >> bit & 1 == 1 {
            sum += gens[bit];
        } else {
            sum -= gens[bit];
        }
        visit(mask, sum);
    }
}

fn bounded_subsets(gens: &[u64], bound: u64, h0: &mut Vec<u64>, h1: &mut Vec<u64>) {
    // gens ascending: once one generator overflows the bound, so do the rest
    fn go(
        gens: &[u64],
        start: usize,
        sum: u64,
        odd: bool,
        bound: u64,
        h0: &mut Vec<u64>,
        h1: &mut Vec<u64>,
    ) {
        if odd {
            h1.push(sum)
        } else {
            h0.push(sum)
        }
        for i in start..gens.len() {
            let next = sum + gens[i];
            if next > bound {
                break;
            }
            go(gens, i + 1, next, !odd, bound, h0, h1);
        }
    }
    go(gens, 0, 0, false, bound, h0, h1);
}

/// `(H_0(g), H_1(g))`, optionally intersected with `[0, bound]`.
pub fn cube_parts(g: &CubeGenerators, bound: Option<u64>) -> Result<(IntegerSet, IntegerSet)> {
    let (mut h0, mut h1) = (Vec::new(), Vec::new());
    match bound {
        Some(b) if g.truncate(b).total() > b => {
            bounded_subsets(g.truncate(b).as_slice(), b, &mut h0, &mut h1);
        }
        _ => {
            let gens = match bound {
                Some(b) => g.truncate(b),
                None => g.clone(),
            };
            if gens.len() > MAX_UNBOUNDED_GENERATORS {
                return Err(Error::ResourceCeiling(format!(
                    "{} generators without a bound (at most {MAX_UNBOUNDED_GENERATORS})",
                    gens.len()
                )));
            }
            for_each_subset(gens.as_slice(), |mask, sum| {
                if mask.count_ones() % 2 == 0 {
                    h0.push(sum)
                } else {
                    h1.push(sum)
                }
            });
        }
    }
    Ok((IntegerSet::from_unsorted(h0), IntegerSet::from_unsorted(h1)))
}

/// Two distinct coefficient vectors of equal parity with equal sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collision {
    pub sum: u64,
    pub first: Vec<u8>,
    pub second: Vec<u8>,
}

fn coefficients(mask: u64, len: usize) -> Vec<u8> {
    (0..len).map(|i| (mask >> i & 1) as u8).collect()
}

/// `Ok(None)` when the cube is half non-degenerate, otherwise one collision.
pub fn half_degeneracy_witness(g: &CubeGenerators) -> Result<Option<Collision>> {
    if g.len() > MAX_UNBOUNDED_GENERATORS {
        return Err(Error::ResourceCeiling(format!(
            "degeneracy check over {} generators",
            g.len()
        )));
    }
    let mut entries = Vec::with_capacity(1 << g.len());
    for_each_subset(g.as_slice(), |mask, sum| {
        entries.push((sum, mask.count_ones() % 2, mask));
    });
    entries.sort_unstable();
    Ok(entries
        .windows(2)
        .find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1)
        .map(|w| Collision {
            sum: w[0].0,
            first: coefficients(w[0].2, g.len()),
            second: coefficients(w[1].2, g.len()),
        }))
}

pub fn is_half_nondegenerate(g: &CubeGenerators) -> Result<bool> {
    Ok(half_degeneracy_witness(g)?.is_none())
}

/// Whether `R_{H_0}(n) = R_{H_1}(n)` for every `n ≤ n_max`.
pub fn theorem3_verify(g: &CubeGenerators, n_max: u64) -> Result<bool> {
    if let Some(c) = half_degeneracy_witness(g)? {
        return Err(Error::PreconditionViolation(format!(
            "cube {g} is degenerate: {:?} and {:?} both sum to {}",
            c.first, c.second, c.sum
        )));
    }
    let (h0, h1) = cube_parts(g, Some(n_max))?;
    Ok(first_mismatch(&h0, &h1, n_max).is_none())
}

/// `∏ (1 + sign·z^{h_i})`, expanded in place.
fn binomial_product(gens: &[u64], sign: i64) -> IntPolynomial {
    let degree: usize = gens.iter().map(|&g| g as usize).sum();
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    coeffs[0] = BigInt::one();
    let mut top = 0;
    for &g in gens {
        let g = g as usize;
        for k in (0..=top).rev() {
            if !coeffs[k].is_zero() {
                let term = &coeffs[k] * sign;
                coeffs[k + g] += term;
            }
        }
        top += g;
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Subset-sum polynomials counted with multiplicity:
/// `(Σ_S (-1)^|S| z^{ΣS}, Σ_S z^{ΣS})`.
fn subset_polynomials(gens: &[u64]) -> (IntPolynomial, IntPolynomial) {
    let degree: usize = gens.iter().map(|&g| g as usize).sum();
    let mut signed = vec![0i64; degree + 1];
    let mut unsigned = vec![0i64; degree + 1];
    for_each_subset(gens, |mask, sum| {
        signed[sum as usize] += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        unsigned[sum as usize] += 1;
    });
    (
        IntPolynomial::from_i64s(&signed),
        IntPolynomial::from_i64s(&unsigned),
    )
}

/// Checks `∏(1 - z^{h_i}) = C(z) - D(z)` and `∏(1 + z^{h_i}) = C(z) + D(z)`.
///
/// The products are expanded by polynomial multiplication and compared with
/// the subset-sum polynomials from Gray-code enumeration, which count every
/// subset. When the cube is half non-degenerate, the generating functions of
/// the deduplicated parts `H_0`, `H_1` are compared as well: a value in both
/// parts then has exactly one even and one odd representation, so it
/// contributes `0` to the difference and `2` to the sum on both sides.
pub fn product_identities(g: &CubeGenerators) -> Result<bool> {
    if g.len() > MAX_UNBOUNDED_GENERATORS {
        return Err(Error::ResourceCeiling(format!(
            "product identities over {} generators",
            g.len()
        )));
    }
    let minus = binomial_product(g.as_slice(), -1);
    let plus = binomial_product(g.as_slice(), 1);
    let (signed, unsigned) = subset_polynomials(g.as_slice());
    if minus != signed || plus != unsigned {
        return Ok(false);
    }
    if is_half_nondegenerate(g)? {
        let (h0, h1) = cube_parts(g, None)?;
        let (c, d) = (from_set(&h0), from_set(&h1));
        return Ok(minus == &c - &d && plus == &c + &d);
    }
    Ok(true)
}
