//! Extremal-component calculus for products of unitary highest weight
//! modules: basic representations, the product of top types through their
//! minimal component, closed forms for iterated products, and the
//! construction recipes for the discrete points of the classification.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;

use crate::algebra::Algebra;
use crate::classify::{classify, shape, Outcome, ShapeInfo};
use crate::error::{Error, Result};
use crate::rat::{self, Rat};
use crate::weights::Weight;

/// Labels for the one-parameter families of building-block modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicLabel {
    /// Even half of the oscillator module (`sp` only).
    WeilPlus,
    /// Odd half of the oscillator module (`sp` only).
    WeilMinus,
    /// The ladder family: `sp` takes `k <= -2`, `su` any integer,
    /// `so*` takes `k >= 0`.
    Basic(i64),
}

impl fmt::Display for BasicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasicLabel::WeilPlus => write!(f, "W+"),
            BasicLabel::WeilMinus => write!(f, "W-"),
            BasicLabel::Basic(k) => write!(f, "L[{k}]"),
        }
    }
}

/// A basic representation: a label together with its highest weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicRep {
    label: BasicLabel,
    algebra: Algebra,
    weight: Weight,
}

impl BasicRep {
    pub fn new(algebra: Algebra, label: BasicLabel) -> Result<Self> {
        let n = algebra.rank();
        let bad = |msg: String| Err(Error::ParamOutOfRange(msg));
        let coords: Vec<Rat> = match (algebra, label) {
            (Algebra::Sp { .. }, BasicLabel::WeilPlus) => vec![rat::half(-1); n],
            (Algebra::Sp { .. }, BasicLabel::WeilMinus) => {
                let mut c = vec![rat::half(-1); n];
                c[n - 1] = rat::half(-3);
                c
            }
            (Algebra::Sp { .. }, BasicLabel::Basic(k)) => {
                if k > -2 {
                    return bad(format!("sp ladder index must be <= -2, got {k}"));
                }
                let mut c = vec![rat::rat(-1); n];
                c[n - 1] = rat::rat(k);
                c
            }
            (Algebra::Su { p, .. }, BasicLabel::Basic(k)) => {
                let mut c = vec![rat::rat(0); n];
                if k >= 0 {
                    for x in c.iter_mut().take(p) {
                        *x = rat::rat(-1);
                    }
                    c[p - 1] = rat::rat(-1 - k);
                } else {
                    for x in c.iter_mut().take(p) {
                        *x = rat::rat(-1);
                    }
                    c[p] = rat::rat(-k);
                }
                c
            }
            (Algebra::SoStar { .. }, BasicLabel::Basic(k)) => {
                if k < 0 {
                    return bad(format!("so* ladder index must be >= 0, got {k}"));
                }
                let mut c = vec![rat::rat(-1); n];
                c[n - 1] = rat::rat(-1 - k);
                c
            }
            (_, l) => {
                return bad(format!("{l} is only defined for sp"));
            }
        };
        Ok(BasicRep {
            label,
            algebra,
            weight: Weight::raw(algebra, coords),
        })
    }

    pub fn label(&self) -> BasicLabel {
        self.label
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }
}

/// Highest weight of the minimal component of the product of the modules
/// with these top types: the first weight plus the lowest weight of the
/// second, made dominant.
pub fn prv_component(mu: &Weight, nu: &Weight) -> Result<Weight> {
    if mu.algebra() != nu.algebra() {
        return Err(Error::AlgebraMismatch(mu.algebra(), nu.algebra()));
    }
    if !mu.is_k_dominant() {
        return Err(Error::NotKDominant(format!("first factor ({mu})")));
    }
    let low = nu.lowest_weight()?;
    Ok(mu.add(&low).k_dominant())
}

/// Right fold of [`prv_component`] over a chain of top weights: the first
/// entry is the innermost factor, and each subsequent weight multiplies
/// from the left.
pub fn prv_product_chain(factors: &[Weight]) -> Result<Weight> {
    let mut iter = factors.iter();
    let first = iter.next().ok_or(Error::EmptyChain)?;
    if !first.is_k_dominant() {
        return Err(Error::NotKDominant(format!("factor ({first})")));
    }
    let mut acc = first.clone();
    for f in iter {
        acc = prv_component(f, &acc)?;
    }
    Ok(acc)
}

/// Parameters for the closed-form weights of iterated products of basic
/// representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedForm {
    /// `sp`: the s-fold product of the odd oscillator half, `1 <= s <= n`.
    WeilMinusPower { s: usize },
    /// `sp`: product over the ladder weights `-3 - a_j, ..., -3 - a_1`
    /// with `a_1 >= ... >= a_j >= 0`, at most `n` of them.
    SpChain { a: Vec<i64> },
    /// `su`: mixed ladder product with `a_1 >= ... >= a_r >= 1` on the
    /// first block and `b_1 >= ... >= b_s >= 1` on the second.
    SuChain { a: Vec<i64>, b: Vec<i64> },
    /// `so*`: ladder product with `a_1 >= ... >= a_j >= 1`, at most `n`.
    SoStarChain { a: Vec<i64> },
}

fn check_desc(xs: &[i64], min: i64, what: &str) -> Result<()> {
    for w in xs.windows(2) {
        if w[0] < w[1] {
            return Err(Error::ParamOutOfRange(format!(
                "{what} must be weakly decreasing, got {xs:?}"
            )));
        }
    }
    if let Some(&last) = xs.last() {
        if last < min {
            return Err(Error::ParamOutOfRange(format!(
                "{what} must stay >= {min}, got {xs:?}"
            )));
        }
    }
    Ok(())
}

/// The closed-form highest weight of the corresponding iterated product.
pub fn closed_forms(algebra: Algebra, form: &ClosedForm) -> Result<Weight> {
    let n = algebra.rank();
    let out_of_range = |msg: String| Err(Error::ParamOutOfRange(msg));
    match (algebra, form) {
        (Algebra::Sp { .. }, ClosedForm::WeilMinusPower { s }) => {
            let s = *s;
            if s < 1 || s > n {
                return out_of_range(format!("power must satisfy 1 <= s <= {n}, got {s}"));
            }
            let mut coords = vec![rat::half(-(s as i64)); n];
            for c in coords.iter_mut().skip(n - s) {
                *c = rat::half(-(s as i64)) - rat::rat(1);
            }
            Ok(Weight::raw(algebra, coords))
        }
        (Algebra::Sp { .. }, ClosedForm::SpChain { a }) => {
            let j = a.len();
            if j < 1 || j > n {
                return out_of_range(format!("chain length must satisfy 1 <= j <= {n}, got {j}"));
            }
            check_desc(a, 0, "chain parameters")?;
            let mut coords = vec![rat::rat(-(j as i64)); n];
            for (idx, ai) in a.iter().rev().enumerate() {
                coords[n - j + idx] = rat::rat(-(j as i64) - 2 - ai);
            }
            Ok(Weight::raw(algebra, coords))
        }
        (Algebra::Su { p, q }, ClosedForm::SuChain { a, b }) => {
            let (r, s) = (a.len(), b.len());
            if r > p || s > q || r + s == 0 {
                return out_of_range(format!(
                    "need r <= {p}, s <= {q} and r + s >= 1, got r={r} s={s}"
                ));
            }
            check_desc(a, 1, "first-block parameters")?;
            check_desc(b, 1, "second-block parameters")?;
            let rs = (r + s) as i64;
            let mut coords = vec![rat::rat(0); n];
            for c in coords.iter_mut().take(p - r) {
                *c = rat::rat(-rs);
            }
            for (idx, ai) in a.iter().rev().enumerate() {
                coords[p - r + idx] = rat::rat(-rs - ai);
            }
            for (idx, bi) in b.iter().enumerate() {
                coords[p + idx] = rat::rat(*bi);
            }
            Ok(Weight::raw(algebra, coords))
        }
        (Algebra::SoStar { .. }, ClosedForm::SoStarChain { a }) => {
            let j = a.len();
            if j < 1 || j > n {
                return out_of_range(format!("chain length must satisfy 1 <= j <= {n}, got {j}"));
            }
            check_desc(a, 1, "chain parameters")?;
            let mut coords = vec![rat::rat(-(j as i64)); n];
            for (idx, ai) in a.iter().rev().enumerate() {
                coords[n - j + idx] = rat::rat(-(j as i64) - ai);
            }
            Ok(Weight::raw(algebra, coords))
        }
        _ => out_of_range("closed form does not belong to this family".into()),
    }
}

/// The factor list realizing `form` as an iterated product, innermost
/// factor first. The closed form equals `prv_product_chain` over it.
pub fn closed_form_factors(algebra: Algebra, form: &ClosedForm) -> Result<Vec<BasicRep>> {
    let mk = |label| BasicRep::new(algebra, label);
    match form {
        ClosedForm::WeilMinusPower { s } => (0..*s).map(|_| mk(BasicLabel::WeilMinus)).collect(),
        ClosedForm::SpChain { a } => a
            .iter()
            .map(|ai| mk(BasicLabel::Basic(-3 - ai)))
            .collect(),
        ClosedForm::SuChain { a, b } => b
            .iter()
            .map(|bi| mk(BasicLabel::Basic(-bi)))
            .chain(a.iter().map(|ai| mk(BasicLabel::Basic(*ai))))
            .collect(),
        ClosedForm::SoStarChain { a } => a
            .iter()
            .map(|ai| mk(BasicLabel::Basic(*ai)))
            .collect(),
    }
}

/// A construction recipe: groups of basic representations, each group an
/// iterated product (innermost factor first), the groups themselves
/// multiplied left to right. The target is checked on construction.
#[derive(Debug, Clone)]
pub struct Recipe {
    algebra: Algebra,
    groups: Vec<Vec<BasicRep>>,
    target: Weight,
    continuous_region: bool,
}

impl Recipe {
    fn build(
        algebra: Algebra,
        groups: Vec<Vec<BasicRep>>,
        expected: &Weight,
        continuous_region: bool,
    ) -> Recipe {
        let groups: Vec<Vec<BasicRep>> = groups.into_iter().filter(|g| !g.is_empty()).collect();
        let target = evaluate_groups(algebra, &groups);
        assert_eq!(
            &target, expected,
            "recipe for ({expected}) evaluated to ({target})"
        );
        Recipe {
            algebra,
            groups,
            target,
            continuous_region,
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    /// Factor groups, outer product order left to right; factors inside a
    /// group are innermost first.
    pub fn groups(&self) -> &[Vec<BasicRep>] {
        &self.groups
    }

    /// All factors flattened, innermost first.
    pub fn factors(&self) -> Vec<&BasicRep> {
        self.groups.iter().flatten().collect()
    }

    pub fn target(&self) -> &Weight {
        &self.target
    }

    /// True when the target lies in the continuous region of its line
    /// (`sp` constructions with index beyond the discrete range).
    pub fn continuous_region(&self) -> bool {
        self.continuous_region
    }

    /// Recompute the target from the factors.
    pub fn evaluate(&self) -> Weight {
        evaluate_groups(self.algebra, &self.groups)
    }

    pub fn to_json(&self) -> serde_json::Value {
        // factors listed as the display string reads, outermost first
        let factors: Vec<String> = self
            .groups
            .iter()
            .flat_map(|g| g.iter().rev())
            .map(|f| f.label().to_string())
            .collect();
        json!({
            "factors": factors,
            "target": self.target.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "continuous_region": self.continuous_region,
        })
    }
}

fn evaluate_groups(algebra: Algebra, groups: &[Vec<BasicRep>]) -> Weight {
    let mut acc: Option<Weight> = None;
    for group in groups {
        let weights: Vec<Weight> = group.iter().map(|f| f.weight().clone()).collect();
        let value = prv_product_chain(&weights).expect("nonempty group of dominant weights");
        acc = Some(match acc {
            None => value,
            Some(prev) => prv_component(&prev, &value).expect("dominant factors"),
        });
    }
    acc.unwrap_or_else(|| Weight::zero(algebra))
}

fn render_group(group: &[BasicRep]) -> String {
    let first = group[0].label();
    if group.iter().all(|f| f.label() == first) {
        if group.len() == 1 && matches!(first, BasicLabel::WeilPlus | BasicLabel::WeilMinus) {
            format!("{first}")
        } else if group.len() == 1 {
            format!("{first}^1")
        } else {
            format!("{first}^{}", group.len())
        }
    } else {
        let inner = group
            .iter()
            .rev()
            .map(|f| f.label().to_string())
            .collect::<Vec<_>>()
            .join(" . ");
        format!("({inner})")
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "1");
        }
        let mut acc = render_group(&self.groups[0]);
        for (i, group) in self.groups.iter().enumerate().skip(1) {
            if i >= 2 {
                acc = format!("({acc})");
            }
            acc = format!("{acc} . {}", render_group(group));
        }
        write!(f, "{acc}")
    }
}

/// Build the recipe whose product realizes a discrete unitary point.
///
/// For `sp` the construction also covers targets in the continuous
/// region whenever the index solved from the shape is a positive integer;
/// those recipes carry the `continuous_region` flag. The `so*` Case 1
/// endpoints have no product construction and are rejected.
pub fn discrete_recipe(lambda: &Weight) -> Result<Recipe> {
    let algebra = lambda.algebra();
    let sh = shape(lambda)?;
    let c = lambda.coords();
    let n = algebra.rank() as i64;

    match (algebra, sh) {
        (Algebra::Sp { .. }, ShapeInfo::Sp { q, r }) => {
            // index solved from lambda_1 = -n + (q + r - l + 1) / 2
            let ell_rat = rat::rat((q + r + 1) as i64) - rat::rat(2) * (&c[0] + rat::rat(n));
            let ell = rat::as_i64(&ell_rat).ok_or_else(|| {
                Error::NotConstructible(format!(
                    "top coordinate {} is not on the discrete lattice of shape q={q} r={r}",
                    c[0]
                ))
            })?;
            if ell < 1 {
                return Err(Error::NotConstructible(format!(
                    "({lambda}) violates the basic inequality"
                )));
            }
            let nn = algebra.rank();
            let a: Vec<i64> = (r..nn)
                .rev()
                .map(|i| rat::as_i64(&(&c[0] - rat::rat(2) - &c[i])).expect("integral differences"))
                .collect();
            let ladder = a
                .iter()
                .map(|ai| BasicRep::new(algebra, BasicLabel::Basic(-3 - ai)))
                .collect::<Result<Vec<_>>>()?;
            let weil_minus = vec![BasicRep::new(algebra, BasicLabel::WeilMinus)?; r - q];
            let weil_plus = vec![BasicRep::new(algebra, BasicLabel::WeilPlus)?; (ell - 1) as usize];
            Ok(Recipe::build(
                algebra,
                vec![ladder, weil_minus, weil_plus],
                lambda,
                ell as usize > q,
            ))
        }
        (Algebra::Su { p, q }, ShapeInfo::Su { p_prime, q_prime }) => {
            let verdict = classify(lambda)?;
            let Outcome::UnitaryDiscrete(i) = verdict.outcome else {
                return Err(Error::NotConstructible(format!(
                    "({lambda}) is not a discrete unitary point ({})",
                    verdict.outcome.name()
                )));
            };
            let lam = lambda.canonical();
            let c = lam.coords();
            let a: Vec<i64> = (p_prime..p)
                .rev()
                .map(|idx| rat::as_i64(&(&c[0] - &c[idx])).expect("integral differences"))
                .collect();
            let b: Vec<i64> = (p..(p + q - q_prime))
                .map(|idx| rat::as_i64(&c[idx]).expect("integral coordinates"))
                .collect();
            let ladder = b
                .iter()
                .map(|bi| BasicRep::new(algebra, BasicLabel::Basic(-bi)))
                .chain(a.iter().map(|ai| BasicRep::new(algebra, BasicLabel::Basic(*ai))))
                .collect::<Result<Vec<_>>>()?;
            let l0 = vec![BasicRep::new(algebra, BasicLabel::Basic(0))?; i - 1];
            Ok(Recipe::build(algebra, vec![ladder, l0], lambda, false))
        }
        (Algebra::SoStar { .. }, ShapeInfo::SoStarCase1 { .. }) => Err(Error::NotConstructible(
            "endpoints with a strictly largest coordinate are unitary by continuity only; \
             no product construction exists"
                .into(),
        )),
        (Algebra::SoStar { .. }, ShapeInfo::SoStarCase2 { p }) => {
            let verdict = classify(lambda)?;
            let Outcome::UnitaryDiscrete(i) = verdict.outcome else {
                return Err(Error::NotConstructible(format!(
                    "({lambda}) is not a discrete unitary point ({})",
                    verdict.outcome.name()
                )));
            };
            let nn = algebra.rank();
            let a: Vec<i64> = (p..nn)
                .rev()
                .map(|idx| rat::as_i64(&(&c[0] - &c[idx])).expect("integral differences"))
                .collect();
            let ladder = a
                .iter()
                .map(|ai| BasicRep::new(algebra, BasicLabel::Basic(*ai)))
                .collect::<Result<Vec<_>>>()?;
            let l0 = vec![BasicRep::new(algebra, BasicLabel::Basic(0))?; i - 1];
            Ok(Recipe::build(algebra, vec![ladder, l0], lambda, false))
        }
        _ => unreachable!("shape family always matches the algebra"),
    }
}

/// Check the vanishing of the singular-vector coefficients for the
/// `m`-th power construction inside the oscillator tensor square:
/// `C(m,2j) (m-2j)(m-2j-1) = C(m,2j+2) (2j+2)(2j+1)` for all
/// `0 <= j <= floor(m/2) - 1`, in exact integer arithmetic.
pub fn weil_coefficient_identity(m: u64) -> bool {
    if m < 1 {
        return false;
    }
    (0..m / 2).all(|j| {
        let lhs = binomial(m, 2 * j) * BigInt::from(m - 2 * j) * BigInt::from(m - 2 * j - 1);
        let rhs = binomial(m, 2 * j + 2) * BigInt::from(2 * j + 2) * BigInt::from(2 * j + 1);
        lhs == rhs
    })
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{half, rat};

    fn w(algebra: Algebra, cs: &[i64]) -> Weight {
        Weight::new(algebra, cs.iter().map(|&c| rat(c)).collect()).unwrap()
    }

    fn basic(algebra: Algebra, label: BasicLabel) -> Weight {
        BasicRep::new(algebra, label).unwrap().weight().clone()
    }

    #[test]
    fn basic_rep_weights() {
        let sp6 = Algebra::sp(6).unwrap();
        assert_eq!(
            basic(sp6, BasicLabel::WeilPlus).coords(),
            vec![half(-1); 6].as_slice()
        );
        let wm = basic(sp6, BasicLabel::WeilMinus);
        assert_eq!(wm.coords()[5], half(-3));
        assert_eq!(
            basic(sp6, BasicLabel::Basic(-4)),
            w(sp6, &[-1, -1, -1, -1, -1, -4])
        );
        assert!(BasicRep::new(sp6, BasicLabel::Basic(-1)).is_err());

        let su23 = Algebra::su(2, 3).unwrap();
        assert_eq!(
            basic(su23, BasicLabel::Basic(2)).coords(),
            &[rat(-1), rat(-3), rat(0), rat(0), rat(0)]
        );
        assert_eq!(
            basic(su23, BasicLabel::Basic(-2)).coords(),
            &[rat(-1), rat(-1), rat(2), rat(0), rat(0)]
        );
        assert!(BasicRep::new(su23, BasicLabel::WeilPlus).is_err());

        let so4 = Algebra::so_star(4).unwrap();
        assert_eq!(
            basic(so4, BasicLabel::Basic(1)),
            w(so4, &[-1, -1, -1, -2])
        );
        assert_eq!(basic(so4, BasicLabel::Basic(0)), w(so4, &[-1, -1, -1, -1]));
        assert!(BasicRep::new(so4, BasicLabel::Basic(-1)).is_err());
        assert!(BasicRep::new(so4, BasicLabel::WeilMinus).is_err());
    }

    #[test]
    fn component_matches_worked_product() {
        let sp6 = Algebra::sp(6).unwrap();
        let mu = w(sp6, &[-1, -1, -1, -1, -1, -4]);
        let nu = w(sp6, &[-1, -1, -1, -1, -1, -5]);
        assert_eq!(
            prv_component(&mu, &nu).unwrap(),
            w(sp6, &[-2, -2, -2, -2, -5, -6])
        );

        let wm = basic(sp6, BasicLabel::WeilMinus);
        assert_eq!(
            prv_component(&wm, &wm).unwrap(),
            w(sp6, &[-1, -1, -1, -1, -2, -2])
        );

        let any = w(sp6, &[-2, -2, -2, -2, -5, -6]);
        assert_eq!(prv_component(&any, &Weight::zero(sp6)).unwrap(), any);
    }

    #[test]
    fn chain_reproduces_worked_example() {
        let sp6 = Algebra::sp(6).unwrap();
        let l5 = basic(sp6, BasicLabel::Basic(-5));
        let l4 = basic(sp6, BasicLabel::Basic(-4));
        let wm = basic(sp6, BasicLabel::WeilMinus);
        let wp = basic(sp6, BasicLabel::WeilPlus);

        let mu = prv_product_chain(&[l5.clone(), l4.clone()]).unwrap();
        assert_eq!(mu, w(sp6, &[-2, -2, -2, -2, -5, -6]));

        let nu = prv_product_chain(&[wm.clone(), wm.clone()]).unwrap();
        assert_eq!(nu, w(sp6, &[-1, -1, -1, -1, -2, -2]));

        let eta = prv_component(&mu, &nu).unwrap();
        assert_eq!(eta, w(sp6, &[-3, -3, -4, -4, -6, -7]));

        let wp2 = prv_product_chain(&[wp.clone(), wp.clone()]).unwrap();
        let lam = prv_component(&eta, &wp2).unwrap();
        assert_eq!(lam, w(sp6, &[-4, -4, -5, -5, -7, -8]));

        // the flat fold agrees with the grouped product here
        let flat = prv_product_chain(&[l5, l4, wm.clone(), wm, wp.clone(), wp]).unwrap();
        assert_eq!(flat, lam);

        let single = prv_product_chain(std::slice::from_ref(&mu)).unwrap();
        assert_eq!(single, mu);
        assert!(matches!(prv_product_chain(&[]), Err(Error::EmptyChain)));
    }

    #[test]
    fn closed_form_values() {
        let sp6 = Algebra::sp(6).unwrap();
        assert_eq!(
            closed_forms(sp6, &ClosedForm::WeilMinusPower { s: 2 }).unwrap(),
            w(sp6, &[-1, -1, -1, -1, -2, -2])
        );
        assert_eq!(
            closed_forms(sp6, &ClosedForm::SpChain { a: vec![2, 1] }).unwrap(),
            w(sp6, &[-2, -2, -2, -2, -5, -6])
        );
        let so4 = Algebra::so_star(4).unwrap();
        assert_eq!(
            closed_forms(so4, &ClosedForm::SoStarChain { a: vec![1] }).unwrap(),
            w(so4, &[-1, -1, -1, -2])
        );
        assert!(closed_forms(sp6, &ClosedForm::WeilMinusPower { s: 0 }).is_err());
        assert!(closed_forms(sp6, &ClosedForm::WeilMinusPower { s: 7 }).is_err());
        assert!(closed_forms(sp6, &ClosedForm::SpChain { a: vec![1, 2] }).is_err());
        assert!(closed_forms(so4, &ClosedForm::SoStarChain { a: vec![0] }).is_err());
        assert!(closed_forms(so4, &ClosedForm::WeilMinusPower { s: 1 }).is_err());
    }

    #[test]
    fn closed_forms_equal_their_chains() {
        let sp6 = Algebra::sp(6).unwrap();
        for form in [
            ClosedForm::WeilMinusPower { s: 4 },
            ClosedForm::SpChain { a: vec![3, 3, 0] },
            ClosedForm::SpChain { a: vec![0] },
        ] {
            let weights: Vec<Weight> = closed_form_factors(sp6, &form)
                .unwrap()
                .iter()
                .map(|f| f.weight().clone())
                .collect();
            assert_eq!(
                prv_product_chain(&weights).unwrap(),
                closed_forms(sp6, &form).unwrap(),
                "{form:?}"
            );
        }

        let su23 = Algebra::su(2, 3).unwrap();
        for form in [
            ClosedForm::SuChain { a: vec![2], b: vec![3, 1] },
            ClosedForm::SuChain { a: vec![], b: vec![2] },
            ClosedForm::SuChain { a: vec![4, 1], b: vec![] },
        ] {
            let weights: Vec<Weight> = closed_form_factors(su23, &form)
                .unwrap()
                .iter()
                .map(|f| f.weight().clone())
                .collect();
            assert_eq!(
                prv_product_chain(&weights).unwrap(),
                closed_forms(su23, &form).unwrap(),
                "{form:?}"
            );
        }

        let so5 = Algebra::so_star(5).unwrap();
        for form in [
            ClosedForm::SoStarChain { a: vec![2, 2, 1] },
            ClosedForm::SoStarChain { a: vec![5] },
        ] {
            let weights: Vec<Weight> = closed_form_factors(so5, &form)
                .unwrap()
                .iter()
                .map(|f| f.weight().clone())
                .collect();
            assert_eq!(
                prv_product_chain(&weights).unwrap(),
                closed_forms(so5, &form).unwrap(),
                "{form:?}"
            );
        }
    }

    #[test]
    fn recipe_for_the_worked_example() {
        let sp6 = Algebra::sp(6).unwrap();
        let lam = w(sp6, &[-4, -4, -5, -5, -7, -8]);
        let recipe = discrete_recipe(&lam).unwrap();
        assert_eq!(recipe.target(), &lam);
        assert!(recipe.continuous_region());
        assert_eq!(recipe.to_string(), "((L[-4] . L[-5]) . W-^2) . W+^2");
        assert_eq!(recipe.evaluate(), lam);
    }

    #[test]
    fn recipe_for_the_trivial_module() {
        for n in [1usize, 3, 6] {
            let spn = Algebra::sp(n).unwrap();
            let lam = Weight::zero(spn);
            let recipe = discrete_recipe(&lam).unwrap();
            assert!(recipe.groups().is_empty());
            assert_eq!(recipe.target(), &lam);
            assert!(!recipe.continuous_region());
            assert_eq!(recipe.to_string(), "1");
        }
    }

    #[test]
    fn recipe_for_so_star() {
        let so4 = Algebra::so_star(4).unwrap();
        let lam = w(so4, &[-1, -1, -1, -1]);
        let recipe = discrete_recipe(&lam).unwrap();
        assert_eq!(recipe.target(), &lam);
        assert_eq!(recipe.to_string(), "L[0]^1");

        // case 1 shapes have no construction
        let case1 = w(so4, &[-3, -4, -4, -4]);
        assert!(matches!(
            discrete_recipe(&case1),
            Err(Error::NotConstructible(_))
        ));
        let endpoint = w(so4, &[0, -2, -2, -2]);
        assert!(matches!(
            discrete_recipe(&endpoint),
            Err(Error::NotConstructible(_))
        ));
    }

    #[test]
    fn recipe_for_su() {
        let su22 = Algebra::su(2, 2).unwrap();
        let lam = w(su22, &[-1, -1, 0, 0]);
        let recipe = discrete_recipe(&lam).unwrap();
        assert_eq!(recipe.target(), &lam);
        assert_eq!(recipe.to_string(), "L[0]^1");

        let su23 = Algebra::su(2, 3).unwrap();
        let lam = w(su23, &[-2, -4, 3, 0, 0]);
        let recipe = discrete_recipe(&lam).unwrap();
        assert_eq!(recipe.target(), &lam);
        assert_eq!(recipe.to_string(), "(L[2] . L[-3])");
    }

    #[test]
    fn recipe_rejects_off_lattice_points() {
        let sp3 = Algebra::sp(3).unwrap();
        let lam = Weight::new(sp3, vec![rat::ratio(-17, 4); 3]).unwrap();
        assert!(matches!(
            discrete_recipe(&lam),
            Err(Error::NotConstructible(_))
        ));
        // above the basic inequality
        let lam = w(sp3, &[2, 0, 0]);
        assert!(matches!(
            discrete_recipe(&lam),
            Err(Error::NotConstructible(_))
        ));
    }

    #[test]
    fn coefficient_identity_small_cases() {
        assert!(weil_coefficient_identity(1));
        assert!(weil_coefficient_identity(2));
        assert!(weil_coefficient_identity(5));
        // spot check the arithmetic behind m = 5, j = 1
        assert_eq!(
            binomial(5, 2) * BigInt::from(3) * BigInt::from(2),
            BigInt::from(60)
        );
        assert_eq!(
            binomial(5, 4) * BigInt::from(4) * BigInt::from(3),
            BigInt::from(60)
        );
    }

    #[test]
    fn recipe_json_shape() {
        let sp6 = Algebra::sp(6).unwrap();
        let recipe = discrete_recipe(&w(sp6, &[-4, -4, -5, -5, -7, -8])).unwrap();
        let j = recipe.to_json();
        assert_eq!(j["continuous_region"], true);
        assert_eq!(j["factors"][0], "L[-4]");
        assert_eq!(j["factors"][1], "L[-5]");
        assert_eq!(j["target"][0], "-4");
    }
}
