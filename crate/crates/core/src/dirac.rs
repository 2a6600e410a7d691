//! Dirac-difference evaluation on extremal components and the
//! level-ordered scan that certifies unitarity or non-unitarity.
//!
//! The quantity under test for a type `mu` of the generalized Verma
//! module with highest weight `lambda` is
//! `|mu + rho|^2 - |lambda + rho|^2`; a strictly negative value rules out
//! unitarity, and its sign pattern over the Schmid lattice determines the
//! classification.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::schmid::{self, SchmidModule};
use crate::weights::{rho, Weight};

/// Outcome of a level-ordered scan up to a bound.
///
/// - `FirstStrictFailure`: the difference is strictly negative at the
///   reported module, and strictly positive at every nonzero module of
///   strictly lower level. This certifies non-unitarity.
/// - `AllStrictUpTo`: strictly positive at every nonzero module of level
///   at most the bound.
/// - `EqualityAt`: zero at the reported module, strictly positive at
///   every nonzero module of lower level, with no qualifying failure
///   within the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiracCertificate {
    FirstStrictFailure { module: SchmidModule, bound: usize },
    AllStrictUpTo { bound: usize },
    EqualityAt { module: SchmidModule, bound: usize },
}

impl DiracCertificate {
    pub fn bound(&self) -> usize {
        match self {
            DiracCertificate::FirstStrictFailure { bound, .. }
            | DiracCertificate::AllStrictUpTo { bound }
            | DiracCertificate::EqualityAt { bound, .. } => *bound,
        }
    }

    pub fn module(&self) -> Option<&SchmidModule> {
        match self {
            DiracCertificate::FirstStrictFailure { module, .. }
            | DiracCertificate::EqualityAt { module, .. } => Some(module),
            DiracCertificate::AllStrictUpTo { .. } => None,
        }
    }

    pub fn variant_name(&self) -> &'static str {
        match self {
            DiracCertificate::FirstStrictFailure { .. } => "FirstStrictFailure",
            DiracCertificate::AllStrictUpTo { .. } => "AllStrictUpTo",
            DiracCertificate::EqualityAt { .. } => "EqualityAt",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "variant": self.variant_name(),
            "level": self.module().map(|m| m.level()),
            "schmid_coeffs": self.module().map(|m| m.coeffs().to_vec()),
            "bound": self.bound(),
        })
    }
}

/// Default bound for [`scan`]: `m * (m + 1)` where `m` is the number of
/// basic Schmid modules. Every certifiable failure occurs at level at
/// most `m`, so this is generous.
pub fn default_scan_bound(algebra: Algebra) -> usize {
    let m = algebra.schmid_count();
    m * (m + 1)
}

/// `|mu + rho|^2 - |lambda + rho|^2`, exactly.
///
/// For `su` the result is well defined on quotient classes: `mu` is
/// first re-aligned to the representative whose coordinate sum matches
/// that of `lambda`, which is the alignment realized inside a tensor
/// product with a sum-zero Schmid weight.
pub fn dirac_difference(lambda: &Weight, mu: &Weight) -> Result<Rat> {
    if lambda.algebra() != mu.algebra() {
        return Err(Error::AlgebraMismatch(lambda.algebra(), mu.algebra()));
    }
    let algebra = lambda.algebra();
    let r = rho(algebra);
    let mu_aligned = if algebra.is_su() {
        let n = Rat::from_integer(BigInt::from(algebra.rank() as i64));
        let c = (lambda.coord_sum() - mu.coord_sum()) / n;
        mu.shift(&c)
    } else {
        mu.clone()
    };
    Ok(mu_aligned.add(&r).norm_sq() - lambda.add(&r).norm_sq())
}

/// Sign of the Dirac difference at the extremal component obtained by
/// subtracting a Schmid weight: `Greater` means the strict inequality
/// holds, `Equal` means equality, `Less` means failure.
pub fn dirac_test(lambda: &Weight, s: &SchmidModule) -> Result<Ordering> {
    if lambda.algebra() != s.algebra() {
        return Err(Error::AlgebraMismatch(lambda.algebra(), s.algebra()));
    }
    lambda.check_k_dominant_integral()?;
    let mu = lambda.sub(s.weight()).k_dominant();
    let diff = dirac_difference(lambda, &mu)?;
    Ok(if diff.is_zero() {
        Ordering::Equal
    } else if diff.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    })
}

/// Walk all nonzero Schmid modules of level at most `bound` in
/// (level, lexicographic) order and report the certificate; see
/// [`DiracCertificate`] for the precedence rules. Deterministic.
pub fn scan(lambda: &Weight, bound: usize) -> Result<DiracCertificate> {
    lambda.check_k_dominant_integral()?;
    let algebra = lambda.algebra();
    let scanner = ScaledScanner::new(lambda);
    let m = algebra.schmid_count();

    for level in 1..=bound {
        let mut first_negative: Option<Vec<usize>> = None;
        let mut first_zero: Option<Vec<usize>> = None;
        schmid::for_each_coeffs_at_level(m, level, &mut |coeffs| {
            if first_negative.is_some() {
                return;
            }
            match scanner.sign_at(algebra, coeffs) {
                Ordering::Less => first_negative = Some(coeffs.to_vec()),
                Ordering::Equal => {
                    if first_zero.is_none() {
                        first_zero = Some(coeffs.to_vec());
                    }
                }
                Ordering::Greater => {}
            }
        });
        if let Some(coeffs) = first_negative {
            return Ok(DiracCertificate::FirstStrictFailure {
                module: SchmidModule::from_coeffs(algebra, coeffs)?,
                bound,
            });
        }
        if let Some(coeffs) = first_zero {
            return Ok(DiracCertificate::EqualityAt {
                module: SchmidModule::from_coeffs(algebra, coeffs)?,
                bound,
            });
        }
    }
    Ok(DiracCertificate::AllStrictUpTo { bound })
}

/// Scan with the default bound.
pub fn scan_default(lambda: &Weight) -> Result<DiracCertificate> {
    scan(lambda, default_scan_bound(lambda.algebra()))
}

/// Exact inner loop of the scan over scaled integers: all coordinates of
/// `lambda` and `rho` are multiplied by a common denominator once, after
/// which each candidate costs one integer sort and one sum of squares.
struct ScaledScanner {
    scaled_lambda: Vec<BigInt>,
    scaled_rho: Vec<BigInt>,
    denom: BigInt,
    base_norm: BigInt,
    first_block: usize,
}

impl ScaledScanner {
    fn new(lambda: &Weight) -> Self {
        let algebra = lambda.algebra();
        let r = rho(algebra);
        let mut denom = BigInt::one();
        for c in lambda.coords().iter().chain(r.coords()) {
            denom = denom.lcm(c.denom());
        }
        let scale = |x: &Rat| -> BigInt {
            let v = x * Rat::from_integer(denom.clone());
            debug_assert!(v.denom().is_one());
            v.to_integer()
        };
        let scaled_lambda: Vec<BigInt> = lambda.coords().iter().map(scale).collect();
        let scaled_rho: Vec<BigInt> = r.coords().iter().map(scale).collect();
        let base_norm = scaled_lambda
            .iter()
            .zip(&scaled_rho)
            .map(|(a, b)| {
                let s = a + b;
                &s * &s
            })
            .sum();
        ScaledScanner {
            scaled_lambda,
            scaled_rho,
            denom,
            base_norm,
            first_block: algebra.first_block(),
        }
    }

    fn sign_at(&self, algebra: Algebra, coeffs: &[usize]) -> Ordering {
        let s = schmid::int_weight_from_coeffs(algebra, coeffs);
        let mut diff: Vec<BigInt> = self
            .scaled_lambda
            .iter()
            .zip(&s)
            .map(|(l, &si)| l - &self.denom * si)
            .collect();
        diff[..self.first_block].sort_by(|a, b| b.cmp(a));
        diff[self.first_block..].sort_by(|a, b| b.cmp(a));
        let norm: BigInt = diff
            .iter()
            .zip(&self.scaled_rho)
            .map(|(a, b)| {
                let s = a + b;
                &s * &s
            })
            .sum();
        norm.cmp(&self.base_norm)
    }
}
