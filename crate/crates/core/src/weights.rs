//! Exact weight arithmetic in standard coordinates: dominance for the
//! compact subalgebra, half-sums of roots, highest noncompact roots and
//! Euclidean norms.
//!
//! Weights of `su(p,q)` are quotient coordinates: two coordinate vectors
//! describe the same weight when they differ by a constant vector. The
//! public constructor stores the representative with last coordinate 0;
//! internal arithmetic keeps whatever representative arises, and equality
//! always compares modulo constants.

use std::fmt;

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rat::{self, Rat};

/// A weight in standard coordinates, tagged by its algebra.
#[derive(Debug, Clone)]
pub struct Weight {
    algebra: Algebra,
    coords: Vec<Rat>,
}

/// Half-sums of positive roots: for the whole algebra, for the compact
/// part, and for the noncompact part.
#[derive(Debug, Clone, PartialEq)]
pub struct RhoTriple {
    pub rho: Weight,
    pub rho_k: Weight,
    pub rho_n: Weight,
}

impl Weight {
    /// Build a weight from coordinates, checking the length. For `su(p,q)`
    /// the stored representative is normalized to have last coordinate 0.
    pub fn new(algebra: Algebra, coords: Vec<Rat>) -> Result<Self> {
        if coords.len() != algebra.rank() {
            return Err(Error::LengthMismatch {
                expected: algebra.rank(),
                got: coords.len(),
            });
        }
        let w = Weight { algebra, coords };
        Ok(if algebra.is_su() { w.canonical() } else { w })
    }

    /// Build a weight keeping the representative exactly as given (no
    /// canonicalization for `su`); only the length is checked. Useful
    /// when the caller needs to control the quotient representative.
    pub fn from_raw_coords(algebra: Algebra, coords: Vec<Rat>) -> Result<Self> {
        if coords.len() != algebra.rank() {
            return Err(Error::LengthMismatch {
                expected: algebra.rank(),
                got: coords.len(),
            });
        }
        Ok(Weight { algebra, coords })
    }

    /// Internal constructor that keeps the representative as given.
    pub(crate) fn raw(algebra: Algebra, coords: Vec<Rat>) -> Self {
        debug_assert_eq!(coords.len(), algebra.rank());
        Weight { algebra, coords }
    }

    pub fn zero(algebra: Algebra) -> Self {
        Weight::raw(algebra, vec![Rat::zero(); algebra.rank()])
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rat {
        &self.coords[i]
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coord_sum(&self) -> Rat {
        self.coords.iter().sum()
    }

    /// The representative with last coordinate 0 (identity for `sp`/`so*`).
    pub fn canonical(&self) -> Weight {
        if !self.algebra.is_su() {
            return self.clone();
        }
        let last = self.coords[self.coords.len() - 1].clone();
        let coords = self.coords.iter().map(|c| c - &last).collect();
        Weight::raw(self.algebra, coords)
    }

    /// Shift every coordinate by `c` (another representative for `su`,
    /// a genuinely different weight otherwise).
    pub fn shift(&self, c: &Rat) -> Weight {
        Weight::raw(self.algebra, self.coords.iter().map(|x| x + c).collect())
    }

    /// Coordinatewise sum; preserves the representatives as stored.
    /// Panics on an algebra mismatch, which public entry points rule out
    /// before calling.
    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Weight::raw(self.algebra, coords)
    }

    /// Coordinatewise difference; preserves the representatives.
    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Weight::raw(self.algebra, coords)
    }

    /// Coordinatewise scalar multiple.
    pub fn scale(&self, c: &Rat) -> Weight {
        Weight::raw(self.algebra, self.coords.iter().map(|x| x * c).collect())
    }

    /// The dominant representative of the orbit under the compact Weyl
    /// group: coordinates sorted weakly decreasing, per block for `su`.
    pub fn k_dominant(&self) -> Weight {
        let p = self.algebra.first_block();
        let mut coords = self.coords.clone();
        coords[..p].sort_by(|a, b| b.cmp(a));
        coords[p..].sort_by(|a, b| b.cmp(a));
        Weight::raw(self.algebra, coords)
    }

    pub fn is_k_dominant(&self) -> bool {
        let p = self.algebra.first_block();
        let sorted = |s: &[Rat]| s.windows(2).all(|w| w[0] >= w[1]);
        sorted(&self.coords[..p]) && sorted(&self.coords[p..])
    }

    /// The lowest weight of the finite-dimensional compact module with
    /// this highest weight: the sorted coordinates reversed, per block
    /// for `su`. Requires a dominant input.
    pub fn lowest_weight(&self) -> Result<Weight> {
        self.check_k_dominant()?;
        let p = self.algebra.first_block();
        let mut coords = self.coords.clone();
        coords[..p].reverse();
        coords[p..].reverse();
        Ok(Weight::raw(self.algebra, coords))
    }

    fn check_k_dominant(&self) -> Result<()> {
        if self.is_k_dominant() {
            Ok(())
        } else {
            Err(Error::NotKDominant(format!(
                "coordinates ({self}) are not weakly decreasing per block"
            )))
        }
    }

    /// Dominance plus integrality of the differences that matter: all
    /// pairwise differences for `sp`/`so*`, within each block for `su`.
    /// On failure the error carries the reason.
    pub fn check_k_dominant_integral(&self) -> Result<()> {
        self.check_k_dominant()?;
        let p = self.algebra.first_block();
        for block in [&self.coords[..p], &self.coords[p..]] {
            for w in block.windows(2) {
                let d = &w[0] - &w[1];
                if !rat::is_integer(&d) {
                    return Err(Error::NotKDominant(format!(
                        "difference {} is not an integer",
                        d
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_k_dominant_integral(&self) -> bool {
        self.check_k_dominant_integral().is_ok()
    }

    /// Sum of squares of the stored coordinates. For `su` only aligned
    /// differences of such norms are quotient invariants; see
    /// [`crate::dirac::dirac_difference`].
    pub fn norm_sq(&self) -> Rat {
        self.coords.iter().map(|c| c * c).sum()
    }

    /// Standard Euclidean pairing of the stored coordinates.
    pub fn dot(&self, other: &Weight) -> Rat {
        debug_assert_eq!(self.algebra, other.algebra);
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Parse a comma-separated coordinate list; `su` weights may use `|`
    /// between the two blocks.
    pub fn parse(algebra: Algebra, s: &str) -> Result<Weight> {
        let coords = match s.split_once('|') {
            None => rat::parse_rat_list(s)?,
            Some((a, b)) => {
                if !algebra.is_su() {
                    return Err(Error::Parse(
                        "block separator `|` is only meaningful for su weights".into(),
                    ));
                }
                let mut first = rat::parse_rat_list(a)?;
                if first.len() != algebra.first_block() {
                    return Err(Error::LengthMismatch {
                        expected: algebra.first_block(),
                        got: first.len(),
                    });
                }
                first.extend(rat::parse_rat_list(b)?);
                first
            }
        };
        Weight::new(algebra, coords)
    }
}

impl PartialEq for Weight {
    /// Coordinate equality, modulo constant vectors for `su`.
    fn eq(&self, other: &Self) -> bool {
        if self.algebra != other.algebra {
            return false;
        }
        if self.algebra.is_su() {
            let d0 = &self.coords[0] - &other.coords[0];
            self.coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| (a - b) == d0)
        } else {
            self.coords == other.coords
        }
    }
}

impl Eq for Weight {}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.algebra.first_block();
        if self.algebra.is_su() {
            write!(
                f,
                "{}|{}",
                rat::format_rat_list(&self.coords[..p]),
                rat::format_rat_list(&self.coords[p..])
            )
        } else {
            write!(f, "{}", rat::format_rat_list(&self.coords))
        }
    }
}

/// Half-sum of positive roots in the standard positive system.
fn rho_coords(algebra: Algebra) -> Vec<Rat> {
    let n = algebra.rank();
    match algebra {
        // positive roots e_i - e_j (i<j), e_i + e_j (i<=j)
        Algebra::Sp { .. } => (0..n).map(|i| rat::rat((n - i) as i64)).collect(),
        // positive roots e_i - e_j, i < j; true half-sum, not the
        // last-coordinate-0 representative
        Algebra::Su { .. } => (0..n)
            .map(|i| rat::half((n - 1) as i64 - 2 * i as i64))
            .collect(),
        // positive roots e_i - e_j and e_i + e_j, i < j
        Algebra::SoStar { .. } => (0..n).map(|i| rat::rat((n - 1 - i) as i64)).collect(),
    }
}

/// Half-sum of the compact positive roots (type A per block).
fn rho_k_coords(algebra: Algebra) -> Vec<Rat> {
    let block = |len: usize| (0..len).map(move |i| rat::half((len - 1) as i64 - 2 * i as i64));
    match algebra {
        Algebra::Sp { n } | Algebra::SoStar { n } => block(n).collect(),
        Algebra::Su { p, q } => block(p).chain(block(q)).collect(),
    }
}

/// The three half-sums for an algebra; `rho = rho_k + rho_n` holds
/// componentwise and `rho_n` is fixed by the compact Weyl group.
pub fn rho_parts(algebra: Algebra) -> RhoTriple {
    let rho = Weight::raw(algebra, rho_coords(algebra));
    let rho_k = Weight::raw(algebra, rho_k_coords(algebra));
    let rho_n = rho.sub(&rho_k);
    RhoTriple { rho, rho_k, rho_n }
}

/// The half-sum of positive roots alone.
pub fn rho(algebra: Algebra) -> Weight {
    Weight::raw(algebra, rho_coords(algebra))
}

/// The highest noncompact root.
pub fn beta(algebra: Algebra) -> Weight {
    let n = algebra.rank();
    let mut coords = vec![Rat::zero(); n];
    match algebra {
        Algebra::Sp { .. } => coords[0] = rat::rat(2),
        Algebra::Su { .. } => {
            coords[0] = rat::rat(1);
            coords[n - 1] = rat::rat(-1);
        }
        Algebra::SoStar { .. } => {
            coords[0] = rat::rat(1);
            coords[1] = rat::rat(1);
        }
    }
    Weight::raw(algebra, coords)
}
