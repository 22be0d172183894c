//! Generating functions of finite sets and the exact polynomial criteria
//! built on them.
//!
//! For a finite set `A` write `A(z) = Σ_{a∈A} z^a`. Since
//! `Σ_n R_A(n) z^n = (A(z)^2 - A(z^2)) / 2`, two finite sets have the same
//! strict pair-representation function exactly when
//!
//! ```text
//! C(z)^2 - D(z)^2 = C(z^2) - D(z^2).
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::poly::IntPolynomial;
use crate::sets::IntegerSet;

/// `A(z)`.
pub fn from_set(a: &IntegerSet) -> IntPolynomial {
    let Some(top) = a.max_element() else {
        return IntPolynomial::zero();
    };
    let mut coeffs = vec![BigInt::zero(); top as usize + 1];
    for x in a.iter() {
        coeffs[x as usize] = BigInt::one();
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Whether `C(z)^2 - D(z)^2 = C(z^2) - D(z^2)` holds identically, i.e.
/// whether `R_C(n) = R_D(n)` for every `n`.
pub fn criterion_eq1(c: &IntegerSet, d: &IntegerSet) -> bool {
    let (pc, pd) = (from_set(c), from_set(d));
    let lhs = &(&pc * &pc) - &(&pd * &pd);
    let rhs = &pc.substitute_power(2) - &pd.substitute_power(2);
    lhs == rhs
}

/// `C(z) - D(z) = (z - 1)^multiplicity · quotient` with `quotient(1) ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityCertificate {
    pub multiplicity: u32,
    pub quotient: IntPolynomial,
}

impl MultiplicityCertificate {
    /// Expands `(z - 1)^multiplicity · quotient`.
    pub fn expand(&self) -> IntPolynomial {
        &IntPolynomial::from_i64s(&[-1, 1]).pow(self.multiplicity) * &self.quotient
    }

    /// Checks both certificate invariants against `difference`.
    pub fn certifies(&self, difference: &IntPolynomial) -> bool {
        !self.quotient.eval_at_one().is_zero() && self.expand() == *difference
    }
}

/// Exact multiplicity of the root `z = 1` in `C(z) - D(z)`, by repeated
/// synthetic division.
pub fn unit_root_multiplicity(c: &IntegerSet, d: &IntegerSet) -> Result<MultiplicityCertificate> {
    if c == d {
        return invalid("C = D: the zero polynomial has no multiplicity certificate");
    }
    let mut quotient = &from_set(c) - &from_set(d);
    let mut multiplicity = 0;
    loop {
        let (q, value_at_one) = quotient.divide_by_z_minus_one();
        if !value_at_one.is_zero() {
            break;
        }
        quotient = q;
        multiplicity += 1;
    }
    Ok(MultiplicityCertificate {
        multiplicity,
        quotient,
    })
}

/// Parameters of an eventually periodic pair
/// `C = F_C ∪ {lM + t : l ≥ n0, t ∈ T}`, `D = F_D ∪ {lM + t : l ≥ n0, t ∈ T}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NathansonSpec {
    pub f_c: IntegerSet,
    pub f_d: IntegerSet,
    pub t: IntegerSet,
    pub modulus: u64,
    pub n0: u64,
    pub h: usize,
}

impl NathansonSpec {
    pub fn validate(&self) -> Result<()> {
        if self.modulus == 0 || self.n0 == 0 {
            return invalid("M and n0 must be positive");
        }
        if self.h < 2 {
            return invalid(format!("arity must be at least 2, got {}", self.h));
        }
        let limit = self.modulus * self.n0;
        if let Some(x) = self
            .f_c
            .union(&self.f_d)
            .max_element()
            .filter(|&x| x >= limit)
        {
            return invalid(format!(
                "finite part element {x} is not below M*n0 = {limit}"
            ));
        }
        if let Some(t) = self.t.max_element().filter(|&t| t >= self.modulus) {
            return invalid(format!("residue {t} is not below M = {}", self.modulus));
        }
        Ok(())
    }

    fn periodic_part(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        let first = self.n0 * self.modulus;
        (first..=bound)
            .step_by(self.modulus as usize)
            .flat_map(move |base| self.t.iter().map(move |t| base + t))
            .filter(move |&x| x <= bound)
    }
}

/// Materializes both sets of `spec` on `[0, bound]`.
pub fn nathanson_build(spec: &NathansonSpec, bound: u64) -> Result<(IntegerSet, IntegerSet)> {
    spec.validate()?;
    let periodic: IntegerSet = spec.periodic_part(bound).collect();
    Ok((
        spec.f_c.truncate(bound).union(&periodic),
        spec.f_d.truncate(bound).union(&periodic),
    ))
}

/// Whether `(1 - z^M)^(h-1)` divides `(F_C(z) - F_D(z)) · T(z)^(h-1)`.
pub fn divisibility_check(spec: &NathansonSpec) -> Result<bool> {
    spec.validate()?;
    let difference = &from_set(&spec.f_c) - &from_set(&spec.f_d);
    let power = (spec.h - 1) as u32;
    let numerator = &difference * &from_set(&spec.t).pow(power);
    let divisor = IntPolynomial::binomial(-1, spec.modulus as usize).pow(power);
    numerator.is_divisible_by(&divisor)
}
