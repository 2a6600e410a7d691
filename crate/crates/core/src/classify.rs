//! Closed-form classification of the irreducible highest weight module:
//! shape extraction, unitarity verdicts, critical values and the position
//! on the line through the parameter.

use std::fmt;

use serde_json::json;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::rat::{self, Rat};
use crate::weights::{beta, rho, Weight};

/// Repetition pattern of the leading coordinates, which determines the
/// thresholds of the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeInfo {
    /// `sp`: the first `q` coordinates equal the top one, the next
    /// `r - q` sit exactly one below it.
    Sp { q: usize, r: usize },
    /// `su`: `p_prime` leading coordinates of the first block are equal,
    /// `q_prime` trailing coordinates of the second block are equal.
    Su { p_prime: usize, q_prime: usize },
    /// `so*` with a strictly largest coordinate; `q` counts the top
    /// coordinate together with the run equal to the second one.
    SoStarCase1 { q: usize },
    /// `so*` with the two largest coordinates equal; `p` is the length of
    /// the leading run.
    SoStarCase2 { p: usize },
}

impl ShapeInfo {
    pub fn to_json(&self) -> serde_json::Value {
        match *self {
            ShapeInfo::Sp { q, r } => json!({"family": "sp", "q": q, "r": r}),
            ShapeInfo::Su { p_prime, q_prime } => {
                json!({"family": "su", "p_prime": p_prime, "q_prime": q_prime})
            }
            ShapeInfo::SoStarCase1 { q } => json!({"family": "so*", "case": 1, "q": q}),
            ShapeInfo::SoStarCase2 { p } => json!({"family": "so*", "case": 2, "p": p}),
        }
    }
}

impl fmt::Display for ShapeInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ShapeInfo::Sp { q, r } => write!(f, "q={q} r={r}"),
            ShapeInfo::Su { p_prime, q_prime } => write!(f, "p'={p_prime} q'={q_prime}"),
            ShapeInfo::SoStarCase1 { q } => write!(f, "case 1, q={q}"),
            ShapeInfo::SoStarCase2 { p } => write!(f, "case 2, p={p}"),
        }
    }
}

/// Classification outcome. Discrete indices are 1-based: index 1 is the
/// first reduction point, the largest critical value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// Above the largest critical value: the basic inequality fails.
    NonUnitaryAboveFirst,
    /// Strictly between the critical values with indices `i` and `i + 1`.
    NonUnitaryGap(usize),
    /// Below every critical value: the full generalized Verma module,
    /// irreducible and unitary.
    UnitaryContinuous,
    /// Exactly at the critical value with this index.
    UnitaryDiscrete(usize),
}

impl Outcome {
    pub fn is_unitary(&self) -> bool {
        matches!(self, Outcome::UnitaryContinuous | Outcome::UnitaryDiscrete(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Outcome::NonUnitaryAboveFirst => "NonUnitaryAboveFirst",
            Outcome::NonUnitaryGap(_) => "NonUnitaryGap",
            Outcome::UnitaryContinuous => "UnitaryContinuous",
            Outcome::UnitaryDiscrete(_) => "UnitaryDiscrete",
        }
    }

    pub fn index(&self) -> Option<usize> {
        match *self {
            Outcome::NonUnitaryGap(i) | Outcome::UnitaryDiscrete(i) => Some(i),
            _ => None,
        }
    }
}

/// Position of the weight on its line `lambda = lambda0 + z * zeta`,
/// where `zeta` is orthogonal to the compact roots and normalized against
/// the highest noncompact root, and `lambda0` is the point where the
/// pairing of `lambda + rho` with that root vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct LinePosition {
    pub zeta: Weight,
    pub lambda0: Weight,
    pub z: Rat,
    /// `z`-value of the first reduction point (critical index 1).
    pub a: Rat,
}

impl LinePosition {
    pub fn to_json(&self) -> serde_json::Value {
        json!({"z": self.z.to_string(), "a": self.a.to_string()})
    }
}

/// Full classification result.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub shape: ShapeInfo,
    /// The discrete thresholds of the comparison quantity, largest first,
    /// so that `critical_values[i - 1]` belongs to discrete index `i`.
    pub critical_values: Vec<Rat>,
    pub line: LinePosition,
}

impl Verdict {
    /// Human-readable one-liner. Gap indices always print as `i`; the
    /// discrete index letter follows the family convention.
    pub fn describe(&self, algebra: Algebra) -> String {
        let letter = match algebra {
            Algebra::Sp { .. } => "\u{2113}",
            _ => "i",
        };
        match self.outcome {
            Outcome::NonUnitaryAboveFirst => "NonUnitaryAboveFirst".into(),
            Outcome::NonUnitaryGap(i) => format!("NonUnitaryGap i={i}"),
            Outcome::UnitaryContinuous => "UnitaryContinuous".into(),
            Outcome::UnitaryDiscrete(i) => {
                if i == 1 {
                    format!("UnitaryDiscrete {letter}=1 (first reduction)")
                } else {
                    format!("UnitaryDiscrete {letter}={i}")
                }
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "outcome": self.outcome.name(),
            "shape": self.shape.to_json(),
            "critical_values": self.critical_values.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "line": self.line.to_json(),
        });
        if let Some(i) = self.outcome.index() {
            v["index"] = json!(i);
        }
        v
    }
}

/// Maximal shape parameters of a dominant integral weight.
pub fn shape(lambda: &Weight) -> Result<ShapeInfo> {
    lambda.check_k_dominant_integral()?;
    let c = lambda.coords();
    Ok(match lambda.algebra() {
        Algebra::Sp { .. } => {
            let q = leading_run(c);
            let step = &c[0] - rat::rat(1);
            let r = q + c[q..].iter().take_while(|&x| *x == step).count();
            ShapeInfo::Sp { q, r }
        }
        Algebra::Su { p, .. } => {
            let p_prime = leading_run(&c[..p]);
            let second = &c[p..];
            let last = &second[second.len() - 1];
            let q_prime = second.iter().rev().take_while(|&x| x == last).count();
            ShapeInfo::Su { p_prime, q_prime }
        }
        Algebra::SoStar { .. } => {
            if c[0] > c[1] {
                let q = 1 + c[1..].iter().take_while(|&x| *x == c[1]).count();
                ShapeInfo::SoStarCase1 { q }
            } else {
                ShapeInfo::SoStarCase2 { p: leading_run(c) }
            }
        }
    })
}

fn leading_run(c: &[Rat]) -> usize {
    c.iter().take_while(|&x| *x == c[0]).count()
}

/// The quantity compared against the critical values, and those values,
/// largest first.
fn comparison_data(lambda: &Weight, shape: &ShapeInfo) -> (Rat, Vec<Rat>) {
    let n = lambda.rank() as i64;
    let c = lambda.coords();
    match *shape {
        ShapeInfo::Sp { q, r } => {
            let quantity = c[0].clone();
            let crits = (1..=q)
                .map(|l| rat::rat(-n) + rat::half((q + r + 1 - l) as i64))
                .collect();
            (quantity, crits)
        }
        ShapeInfo::Su { p_prime, q_prime } => {
            let quantity = &c[0] - &c[c.len() - 1];
            let crits = (1..=p_prime.min(q_prime))
                .map(|i| rat::rat(-n + (p_prime + q_prime + 1 - i) as i64))
                .collect();
            (quantity, crits)
        }
        ShapeInfo::SoStarCase1 { q } => {
            let quantity = &c[0] + &c[1];
            (quantity, vec![rat::rat(-2 * n + q as i64 + 2)])
        }
        ShapeInfo::SoStarCase2 { p } => {
            let quantity = c[0].clone();
            let crits = (1..=p / 2)
                .map(|i| rat::rat(-n + (p + 1 - i) as i64))
                .collect();
            (quantity, crits)
        }
    }
}

/// The direction of the line through a weight: orthogonal to the compact
/// roots, normalized so the coroot pairing with the highest noncompact
/// root is one.
pub fn line_direction(algebra: Algebra) -> Weight {
    let n = algebra.rank();
    match algebra {
        Algebra::Sp { .. } => Weight::raw(algebra, vec![rat::rat(1); n]),
        Algebra::Su { p, .. } => {
            let mut coords = vec![rat::rat(0); n];
            for c in coords.iter_mut().take(p) {
                *c = rat::rat(1);
            }
            Weight::raw(algebra, coords)
        }
        Algebra::SoStar { .. } => Weight::raw(algebra, vec![rat::half(1); n]),
    }
}

/// Where the weight sits on its line, including the first reduction
/// value `a`.
pub fn line_position(lambda: &Weight) -> Result<LinePosition> {
    let sh = shape(lambda)?;
    let algebra = lambda.algebra();
    let zeta = line_direction(algebra);
    let b = beta(algebra);
    let z = lambda.add(&rho(algebra)).dot(&b) / zeta.dot(&b);
    let lambda0 = lambda.sub(&zeta.scale(&z));
    let (quantity, crits) = comparison_data(lambda, &sh);
    // the comparison quantity is linear in z; its slope along zeta
    let slope = match algebra {
        Algebra::Sp { .. } | Algebra::Su { .. } => rat::rat(1),
        Algebra::SoStar { .. } => match sh {
            ShapeInfo::SoStarCase1 { .. } => rat::rat(1),
            _ => rat::half(1),
        },
    };
    let a = &z + (&crits[0] - &quantity) / slope;
    Ok(LinePosition {
        zeta,
        lambda0,
        z,
        a,
    })
}

/// Decide unitarity of the irreducible module with this highest weight.
pub fn classify(lambda: &Weight) -> Result<Verdict> {
    let sh = shape(lambda)?;
    let (quantity, crits) = comparison_data(lambda, &sh);
    let line = line_position(lambda)?;

    let outcome = if quantity > crits[0] {
        Outcome::NonUnitaryAboveFirst
    } else if let Some(i) = crits.iter().position(|cv| *cv == quantity) {
        Outcome::UnitaryDiscrete(i + 1)
    } else if quantity < crits[crits.len() - 1] {
        Outcome::UnitaryContinuous
    } else {
        // strictly between two consecutive critical values
        let i = crits
            .iter()
            .position(|cv| quantity > *cv)
            .expect("gap index exists when the quantity is above the smallest critical value");
        Outcome::NonUnitaryGap(i)
    };
    Ok(Verdict {
        outcome,
        shape: sh,
        critical_values: crits,
        line,
    })
}

/// Convenience wrapper for callers that only need the boolean answer.
pub fn is_unitary(lambda: &Weight) -> Result<bool> {
    Ok(classify(lambda)?.outcome.is_unitary())
}
