//! The three Hermitian families and their rank data.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One of the three Hermitian pairs handled by this crate, with its rank
/// parameters. The algebra fixes the coordinate conventions: number of
/// standard coordinates, block structure (for `Su`), half-sums of roots,
/// highest noncompact root and the Schmid lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algebra {
    /// `sp(2n, R)`, `n >= 1`. Weights have `n` coordinates.
    Sp { n: usize },
    /// `su(p, q)`, `p, q >= 1`. Weights have `p + q` coordinates split in
    /// two blocks and are read modulo constant vectors.
    Su { p: usize, q: usize },
    /// `so*(2n)`, `n >= 2`. Weights have `n` coordinates.
    SoStar { n: usize },
}

impl Algebra {
    pub fn sp(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidAlgebra("sp requires n >= 1".into()));
        }
        Ok(Algebra::Sp { n })
    }

    pub fn su(p: usize, q: usize) -> Result<Self> {
        if p < 1 || q < 1 {
            return Err(Error::InvalidAlgebra("su requires p, q >= 1".into()));
        }
        Ok(Algebra::Su { p, q })
    }

    pub fn so_star(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidAlgebra("so* requires n >= 2".into()));
        }
        Ok(Algebra::SoStar { n })
    }

    /// Number of standard coordinates of a weight.
    pub fn rank(&self) -> usize {
        match *self {
            Algebra::Sp { n } | Algebra::SoStar { n } => n,
            Algebra::Su { p, q } => p + q,
        }
    }

    /// Length of the first sorting block: `p` for `su(p,q)`, the whole
    /// coordinate range otherwise.
    pub fn first_block(&self) -> usize {
        match *self {
            Algebra::Su { p, .. } => p,
            _ => self.rank(),
        }
    }

    /// Number of basic Schmid modules.
    pub fn schmid_count(&self) -> usize {
        match *self {
            Algebra::Sp { n } => n,
            Algebra::Su { p, q } => p.min(q),
            Algebra::SoStar { n } => n / 2,
        }
    }

    pub fn is_su(&self) -> bool {
        matches!(self, Algebra::Su { .. })
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Algebra::Sp { n } => write!(f, "sp:{n}"),
            Algebra::Su { p, q } => write!(f, "su:{p},{q}"),
            Algebra::SoStar { n } => write!(f, "so*:{n}"),
        }
    }
}

impl FromStr for Algebra {
    type Err = Error;

    /// Accepts `sp:N`, `su:P,Q` and `so*:N`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidAlgebra(format!("cannot parse `{s}`; expected sp:N, su:P,Q or so*:N"));
        let (family, params) = s.split_once(':').ok_or_else(bad)?;
        match family.trim() {
            "sp" => Algebra::sp(params.trim().parse().map_err(|_| bad())?),
            "su" => {
                let (p, q) = params.split_once(',').ok_or_else(bad)?;
                Algebra::su(
                    p.trim().parse().map_err(|_| bad())?,
                    q.trim().parse().map_err(|_| bad())?,
                )
            }
            "so*" | "so-star" | "sostar" => Algebra::so_star(params.trim().parse().map_err(|_| bad())?),
            _ => Err(bad()),
        }
    }
}
