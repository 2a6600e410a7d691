//! The lattice of compact types of the symmetric algebra of the lower
//! triangular part: basic modules, coefficient decomposition, levels and
//! bounded enumeration.

use std::fmt;

use num_traits::Zero;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rat::{self, Rat};
use crate::weights::Weight;

/// A Schmid module, stored as nonnegative integer coefficients on the
/// basic modules, together with its weight and level.
///
/// The weight keeps the raw standard-coordinate shape (for `su` that is
/// the representative with mirrored halves, not the canonical one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchmidModule {
    algebra: Algebra,
    coeffs: Vec<usize>,
    weight: Weight,
    level: usize,
}

impl SchmidModule {
    /// Build from coefficients on the basic modules; `coeffs[i]` counts
    /// the basic module of level `i + 1`.
    pub fn from_coeffs(algebra: Algebra, coeffs: Vec<usize>) -> Result<Self> {
        let m = algebra.schmid_count();
        if coeffs.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                got: coeffs.len(),
            });
        }
        // b_i = a_i + ... + a_m, the row lengths of the coefficient shape
        let mut b = vec![0usize; m];
        let mut acc = 0usize;
        for i in (0..m).rev() {
            acc += coeffs[i];
            b[i] = acc;
        }
        let weight = weight_from_rows(algebra, &b);
        let level = coeffs.iter().enumerate().map(|(i, a)| (i + 1) * a).sum();
        Ok(SchmidModule {
            algebra,
            coeffs,
            weight,
            level,
        })
    }

    /// The `i`-th basic module, `1 <= i <= m`; its level is `i` and the
    /// first one has the highest noncompact root as weight.
    pub fn basic(algebra: Algebra, i: usize) -> Result<Self> {
        let m = algebra.schmid_count();
        if i < 1 || i > m {
            return Err(Error::IndexOutOfRange { index: i, max: m });
        }
        let mut coeffs = vec![0usize; m];
        coeffs[i - 1] = 1;
        SchmidModule::from_coeffs(algebra, coeffs)
    }

    pub fn zero(algebra: Algebra) -> Self {
        SchmidModule::from_coeffs(algebra, vec![0; algebra.schmid_count()]).unwrap()
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn coeffs(&self) -> &[usize] {
        &self.coeffs
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.level == 0
    }
}

/// Expand row lengths `b_1 >= ... >= b_m >= 0` into the family's weight
/// shape.
fn weight_from_rows(algebra: Algebra, b: &[usize]) -> Weight {
    let n = algebra.rank();
    let mut coords = vec![Rat::zero(); n];
    match algebra {
        Algebra::Sp { .. } => {
            for (i, &bi) in b.iter().enumerate() {
                coords[i] = rat::rat(2 * bi as i64);
            }
        }
        Algebra::Su { .. } => {
            for (i, &bi) in b.iter().enumerate() {
                coords[i] = rat::rat(bi as i64);
                coords[n - 1 - i] = rat::rat(-(bi as i64));
            }
        }
        Algebra::SoStar { .. } => {
            for (i, &bi) in b.iter().enumerate() {
                coords[2 * i] = rat::rat(bi as i64);
                coords[2 * i + 1] = rat::rat(bi as i64);
            }
        }
    }
    Weight::raw(algebra, coords)
}

/// Recover the coefficients of a weight in the Schmid lattice, the
/// inverse of coefficient expansion. Any coordinate representative is
/// accepted for `su`.
pub fn decompose(algebra: Algebra, s: &Weight) -> Result<SchmidModule> {
    if s.algebra() != algebra {
        return Err(Error::AlgebraMismatch(s.algebra(), algebra));
    }
    let m = algebra.schmid_count();
    let n = algebra.rank();
    let fail = |msg: &str| Error::NotSchmidShape(format!("{msg} in {s}"));

    // For su, center the representative so the mirrored halves sum to zero.
    let s = if algebra.is_su() {
        let mean = s.coord_sum() / rat::rat(n as i64);
        s.shift(&(-mean))
    } else {
        s.clone()
    };

    let as_nonneg_int = |x: &Rat| -> Option<usize> {
        rat::as_i64(x).and_then(|v| usize::try_from(v).ok())
    };

    let mut b = Vec::with_capacity(m);
    match algebra {
        Algebra::Sp { .. } => {
            for c in s.coords() {
                let v = as_nonneg_int(c).ok_or_else(|| fail("coordinate is not a nonnegative integer"))?;
                if v % 2 != 0 {
                    return Err(fail("coordinate has odd parity"));
                }
                b.push(v / 2);
            }
        }
        Algebra::Su { p, .. } => {
            for i in 0..m {
                let v = as_nonneg_int(s.coord(i))
                    .ok_or_else(|| fail("coordinate is not a nonnegative integer"))?;
                if s.coord(n - 1 - i) != &-s.coord(i).clone() {
                    return Err(fail("halves are not mirrored"));
                }
                b.push(v);
            }
            for i in m..p {
                if !s.coord(i).is_zero() {
                    return Err(fail("excess coordinate in first block is nonzero"));
                }
            }
            for i in p..(n - m) {
                if !s.coord(i).is_zero() {
                    return Err(fail("middle coordinate is nonzero"));
                }
            }
        }
        Algebra::SoStar { .. } => {
            for i in 0..m {
                let v = as_nonneg_int(s.coord(2 * i))
                    .ok_or_else(|| fail("coordinate is not a nonnegative integer"))?;
                if s.coord(2 * i + 1) != s.coord(2 * i) {
                    return Err(fail("coordinates do not come in equal pairs"));
                }
                b.push(v);
            }
            if n % 2 == 1 && !s.coord(n - 1).is_zero() {
                return Err(fail("odd trailing coordinate is nonzero"));
            }
        }
    }
    for w in b.windows(2) {
        if w[0] < w[1] {
            return Err(fail("row lengths are not weakly decreasing"));
        }
    }
    let mut coeffs = vec![0usize; m];
    for i in 0..m {
        let next = if i + 1 < m { b[i + 1] } else { 0 };
        coeffs[i] = b[i] - next;
    }
    SchmidModule::from_coeffs(algebra, coeffs)
}

/// All Schmid modules of level at most `max_level`, each exactly once,
/// ordered by level and then by lexicographically decreasing coefficients.
pub fn enumerate_up_to_level(algebra: Algebra, max_level: usize) -> Vec<SchmidModule> {
    let mut out = Vec::new();
    for level in 0..=max_level {
        out.extend(enumerate_level(algebra, level));
    }
    out
}

/// The Schmid modules of exactly this level, in lexicographically
/// decreasing coefficient order.
pub fn enumerate_level(algebra: Algebra, level: usize) -> Vec<SchmidModule> {
    let mut out = Vec::new();
    for_each_coeffs_at_level(algebra.schmid_count(), level, &mut |coeffs| {
        out.push(SchmidModule::from_coeffs(algebra, coeffs.to_vec()).unwrap());
    });
    out
}

/// Visit every coefficient vector with `sum (i+1) * coeffs[i] == level`,
/// in lexicographically decreasing order. Shared by the enumeration above
/// and by the Dirac scan, which must walk the exact same order.
pub(crate) fn for_each_coeffs_at_level(
    m: usize,
    level: usize,
    f: &mut impl FnMut(&[usize]),
) {
    let mut coeffs = vec![0usize; m];
    fill_level(level, 0, &mut coeffs, f);
}

fn fill_level(remaining: usize, idx: usize, coeffs: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    let m = coeffs.len();
    if idx == m {
        if remaining == 0 {
            f(coeffs);
        }
        return;
    }
    let part = idx + 1;
    if idx == m - 1 {
        if remaining.is_multiple_of(part) {
            coeffs[idx] = remaining / part;
            f(coeffs);
            coeffs[idx] = 0;
        }
        return;
    }
    for a in (0..=remaining / part).rev() {
        coeffs[idx] = a;
        fill_level(remaining - a * part, idx + 1, coeffs, f);
    }
    coeffs[idx] = 0;
}

/// Integer coordinates of the weight with the given coefficients, used by
/// the Dirac scan to stay in scaled integer arithmetic.
pub(crate) fn int_weight_from_coeffs(algebra: Algebra, coeffs: &[usize]) -> Vec<i64> {
    let m = coeffs.len();
    let mut b = vec![0i64; m];
    let mut acc = 0i64;
    for i in (0..m).rev() {
        acc += coeffs[i] as i64;
        b[i] = acc;
    }
    let n = algebra.rank();
    let mut coords = vec![0i64; n];
    match algebra {
        Algebra::Sp { .. } => {
            for (i, &bi) in b.iter().enumerate() {
                coords[i] = 2 * bi;
            }
        }
        Algebra::Su { .. } => {
            for (i, &bi) in b.iter().enumerate() {
                coords[i] = bi;
                coords[n - 1 - i] = -bi;
            }
        }
        Algebra::SoStar { .. } => {
            for (i, &bi) in b.iter().enumerate() {
                coords[2 * i] = bi;
                coords[2 * i + 1] = bi;
            }
        }
    }
    coords
}

impl fmt::Display for SchmidModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "level={} coeffs={:?} s=({})",
            self.level, self.coeffs, self.weight
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::weights::beta;

    #[test]
    fn basic_modules_per_family() {
        let sp3 = Algebra::sp(3).unwrap();
        let s2 = SchmidModule::basic(sp3, 2).unwrap();
        assert_eq!(s2.weight().coords(), &[rat(2), rat(2), rat(0)]);
        assert_eq!(s2.level(), 2);

        let su22 = Algebra::su(2, 2).unwrap();
        let s1 = SchmidModule::basic(su22, 1).unwrap();
        assert_eq!(s1.weight().coords(), &[rat(1), rat(0), rat(0), rat(-1)]);
        assert_eq!(s1.level(), 1);

        let so4 = Algebra::so_star(4).unwrap();
        let s2 = SchmidModule::basic(so4, 2).unwrap();
        assert_eq!(s2.weight().coords(), &[rat(1), rat(1), rat(1), rat(1)]);
        assert_eq!(s2.level(), 2);

        assert!(SchmidModule::basic(sp3, 0).is_err());
        assert!(SchmidModule::basic(sp3, 4).is_err());
        assert!(SchmidModule::basic(su22, 3).is_err());
    }

    #[test]
    fn first_basic_module_is_the_highest_noncompact_root() {
        for algebra in [
            Algebra::sp(1).unwrap(),
            Algebra::sp(5).unwrap(),
            Algebra::su(2, 3).unwrap(),
            Algebra::su(3, 1).unwrap(),
            Algebra::so_star(4).unwrap(),
            Algebra::so_star(7).unwrap(),
        ] {
            let s1 = SchmidModule::basic(algebra, 1).unwrap();
            assert_eq!(s1.weight(), &beta(algebra), "{algebra}");
            assert_eq!(s1.level(), 1);
        }
    }

    #[test]
    fn decompose_examples() {
        let sp3 = Algebra::sp(3).unwrap();
        let s = Weight::new(sp3, vec![rat(4), rat(2), rat(0)]).unwrap();
        let m = decompose(sp3, &s).unwrap();
        assert_eq!(m.coeffs(), &[1, 1, 0]);
        assert_eq!(m.level(), 3);

        let z = Weight::zero(sp3);
        let m = decompose(sp3, &z).unwrap();
        assert_eq!(m.coeffs(), &[0, 0, 0]);
        assert_eq!(m.level(), 0);

        let so4 = Algebra::so_star(4).unwrap();
        let s = Weight::new(so4, vec![rat(2), rat(2), rat(1), rat(1)]).unwrap();
        let m = decompose(so4, &s).unwrap();
        assert_eq!(m.coeffs(), &[1, 1]);
        assert_eq!(m.level(), 3);
    }

    #[test]
    fn decompose_rejects_bad_shapes() {
        let sp3 = Algebra::sp(3).unwrap();
        for coords in [[1, 0, 0], [2, 4, 0], [-2, 0, 0]] {
            let s = Weight::new(sp3, coords.iter().map(|&c| rat(c)).collect()).unwrap();
            assert!(matches!(decompose(sp3, &s), Err(Error::NotSchmidShape(_))));
        }
        let so4 = Algebra::so_star(4).unwrap();
        let s = Weight::new(so4, vec![rat(2), rat(1), rat(1), rat(0)]).unwrap();
        assert!(decompose(so4, &s).is_err());

        let su22 = Algebra::su(2, 2).unwrap();
        // mirrored halves must match: (2,0|0,-1) is not in the lattice
        let s = Weight::raw(su22, vec![rat(2), rat(0), rat(0), rat(-1)]);
        assert!(decompose(su22, &s).is_err());
    }

    #[test]
    fn decompose_accepts_any_su_representative() {
        let su23 = Algebra::su(2, 3).unwrap();
        let m = SchmidModule::from_coeffs(su23, vec![1, 2]).unwrap();
        // shift the weight by a constant; still the same quotient class
        let shifted = m.weight().shift(&rat(7));
        let back = decompose(su23, &shifted).unwrap();
        assert_eq!(back.coeffs(), m.coeffs());
    }

    #[test]
    fn enumeration_order_and_counts() {
        let sp2 = Algebra::sp(2).unwrap();
        let mods = enumerate_up_to_level(sp2, 0);
        assert_eq!(mods.len(), 1);
        assert!(mods[0].is_zero());

        let mods = enumerate_up_to_level(sp2, 2);
        let coeffs: Vec<_> = mods.iter().map(|m| m.coeffs().to_vec()).collect();
        assert_eq!(coeffs, vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1]]);

        let so5 = Algebra::so_star(5).unwrap();
        let mods = enumerate_up_to_level(so5, 2);
        let coeffs: Vec<_> = mods.iter().map(|m| m.coeffs().to_vec()).collect();
        assert_eq!(coeffs, vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1]]);
    }

    #[test]
    fn enumeration_is_consistent_with_decompose() {
        for algebra in [
            Algebra::sp(3).unwrap(),
            Algebra::su(2, 2).unwrap(),
            Algebra::so_star(5).unwrap(),
        ] {
            for m in enumerate_up_to_level(algebra, 7) {
                let back = decompose(algebra, m.weight()).unwrap();
                assert_eq!(back.coeffs(), m.coeffs());
                assert_eq!(back.level(), m.level());
            }
        }
    }

    #[test]
    fn int_weights_match_rational_weights() {
        for algebra in [
            Algebra::sp(4).unwrap(),
            Algebra::su(2, 3).unwrap(),
            Algebra::so_star(5).unwrap(),
        ] {
            for m in enumerate_up_to_level(algebra, 8) {
                let ints = int_weight_from_coeffs(algebra, m.coeffs());
                let rats: Vec<_> = ints.iter().map(|&v| rat(v)).collect();
                assert_eq!(m.weight().coords(), &rats[..]);
            }
        }
    }

    #[test]
    fn display_format() {
        let sp3 = Algebra::sp(3).unwrap();
        let m = SchmidModule::basic(sp3, 2).unwrap();
        assert_eq!(m.to_string(), "level=2 coeffs=[0, 1, 0] s=(2,2,0)");
    }
}
