//! Enumeration of highest-weight parameters with a fixed integral or
//! half-integral infinitesimal character for `sp(2n, R)`: the unitarity
//! criterion on parameters, constructive enumeration of the unitary ones,
//! the Young-diagram dictionary and Hasse diagram for the character of
//! the half-sum of positive roots, and the translation-cone description
//! of all unitary parameters with regular character.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::json;

use crate::algebra::Algebra;
use crate::classify::{self, ShapeInfo, Verdict};
use crate::error::{Error, Result};
use crate::rat::{self, Rat};
use crate::weights::{rho, Weight};

/// Coordinate parity of a character: all integers or all half-integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Integer,
    HalfInteger,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Integer => write!(f, "integer"),
            Parity::HalfInteger => write!(f, "half-integer"),
        }
    }
}

fn parity_of(coords: &[Rat]) -> Result<Parity> {
    if coords.iter().all(rat::is_integer) {
        Ok(Parity::Integer)
    } else if coords.iter().all(rat::is_half_integer) {
        Ok(Parity::HalfInteger)
    } else {
        Err(Error::MixedParity)
    }
}

/// The dominant representative of an infinitesimal character: weakly
/// decreasing, nonnegative, every value repeated at most twice and zero
/// at most once, all coordinates of one parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantParam {
    coords: Vec<Rat>,
    parity: Parity,
}

impl DominantParam {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Parse("empty parameter".into()));
        }
        let parity = parity_of(&coords)?;
        for w in coords.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Parse(format!(
                    "dominant parameter must be weakly decreasing, got {}",
                    rat::format_rat_list(&coords)
                )));
            }
        }
        if coords[coords.len() - 1].is_negative() {
            return Err(Error::Parse("dominant parameter must be nonnegative".into()));
        }
        let mut counts: BTreeMap<&Rat, usize> = BTreeMap::new();
        for c in &coords {
            *counts.entry(c).or_insert(0) += 1;
        }
        for (v, c) in counts {
            let max = if v.is_zero() { 1 } else { 2 };
            if c > max {
                return Err(Error::NotRegularForK);
            }
        }
        Ok(DominantParam { coords, parity })
    }

    /// The character of the half-sum of positive roots: `(n, ..., 1)`.
    pub fn rho(n: usize) -> Self {
        DominantParam::new((1..=n).rev().map(|k| rat::rat(k as i64)).collect()).unwrap()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_rho(&self) -> bool {
        *self == DominantParam::rho(self.rank())
    }

    fn count(&self, v: &Rat) -> usize {
        self.coords.iter().filter(|c| *c == v).count()
    }
}

impl fmt::Display for DominantParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rat::format_rat_list(&self.coords))
    }
}

/// A highest-weight parameter: strictly decreasing coordinates of one
/// parity, dominant regular for the compact subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Parameter {
    coords: Vec<Rat>,
}

impl Parameter {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Parse("empty parameter".into()));
        }
        parity_of(&coords)?;
        for w in coords.windows(2) {
            if w[0] == w[1] {
                return Err(Error::NotRegularForK);
            }
            if w[0] < w[1] {
                return Err(Error::NotKDominant(format!(
                    "parameter coordinates must be strictly decreasing, got {}",
                    rat::format_rat_list(&coords)
                )));
            }
        }
        Ok(Parameter { coords })
    }

    fn from_sorted(coords: Vec<Rat>) -> Self {
        debug_assert!(coords.windows(2).all(|w| w[0] > w[1]));
        Parameter { coords }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// The highest weight `lambda` with this parameter: the parameter
    /// minus the half-sum of positive roots.
    pub fn lambda(&self) -> Weight {
        let algebra = Algebra::sp(self.rank()).expect("rank >= 1");
        Weight::raw(algebra, self.coords.clone()).sub(&rho(algebra))
    }

    /// The `(q, r)` repetition shape of the associated highest weight.
    pub fn shape_qr(&self) -> (usize, usize) {
        match classify::shape(&self.lambda()).expect("parameter weights are dominant integral") {
            ShapeInfo::Sp { q, r } => (q, r),
            _ => unreachable!(),
        }
    }

    /// Verdict for the associated highest weight.
    pub fn classify(&self) -> Verdict {
        classify::classify(&self.lambda()).expect("parameter weights are dominant integral")
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rat::format_rat_list(&self.coords))
    }
}

/// Sorted absolute values of the coordinates, descending.
pub fn dominant_of(param: &Parameter) -> DominantParam {
    let mut abs: Vec<Rat> = param.coords.iter().map(|c| c.abs()).collect();
    abs.sort_by(|a, b| b.cmp(a));
    DominantParam::new(abs).expect("absolute values of a regular parameter are a valid character")
}

/// All parameters with this infinitesimal character: every sign
/// assignment that yields strictly decreasing coordinates. A repeated
/// value forces the pair `{z, -z}`, a zero keeps sign `+`. Returned in
/// lexicographically decreasing coordinate order.
pub fn enumerate_parameters(dom: &DominantParam) -> Vec<Parameter> {
    let mut forced: Vec<Rat> = Vec::new();
    let mut free: Vec<Rat> = Vec::new();
    let mut seen: BTreeMap<Rat, usize> = BTreeMap::new();
    for c in &dom.coords {
        *seen.entry(c.clone()).or_insert(0) += 1;
    }
    for (v, count) in seen {
        if v.is_zero() {
            forced.push(v);
        } else if count == 2 {
            forced.push(v.clone());
            forced.push(-v);
        } else {
            free.push(v);
        }
    }
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0..(1usize << free.len()) {
        let mut coords = forced.clone();
        for (i, v) in free.iter().enumerate() {
            if mask & (1 << i) == 0 {
                coords.push(v.clone());
            } else {
                coords.push(-v.clone());
            }
        }
        coords.sort_by(|a, b| b.cmp(a));
        out.push(Parameter::from_sorted(coords));
    }
    out.sort_by(|a, b| b.coords.cmp(&a.coords));
    out
}

/// Which clause of the unitarity criterion decided a parameter. The
/// pivot string is the maximal run `x, x-1, ..., -x` that every
/// parameter of the character must contain (when it exists).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitarityCase {
    /// Pivot string inside the leading run: always unitary.
    PivotInHead,
    /// Pivot string inside the second run: unitary when it is the
    /// leftmost proper part of that run.
    PivotInSecond,
    /// Pivot string past the second run: never unitary.
    PivotInTail,
    /// No pivot string and a single leading run: unitary when the run
    /// ends at most at 1.
    NoPivotSingleRun,
    /// No pivot string and a longer second run: unitary when the leading
    /// run ends at most at 3/2.
    NoPivotDoubleRun,
}

impl UnitarityCase {
    pub fn name(&self) -> &'static str {
        match self {
            UnitarityCase::PivotInHead => "pivot-in-head",
            UnitarityCase::PivotInSecond => "pivot-in-second",
            UnitarityCase::PivotInTail => "pivot-in-tail",
            UnitarityCase::NoPivotSingleRun => "no-pivot-single-run",
            UnitarityCase::NoPivotDoubleRun => "no-pivot-double-run",
        }
    }
}

/// The largest `x` such that the character contains `0, 1, 1, ..., x, x`
/// (integer case) or `1/2, 1/2, ..., x, x` (half-integer case), if any.
fn pivot_of(dom: &DominantParam) -> Option<Rat> {
    match dom.parity {
        Parity::Integer => {
            if dom.count(&Rat::zero()) == 0 {
                return None;
            }
            let mut x = Rat::zero();
            loop {
                let next = &x + rat::rat(1);
                if dom.count(&next) == 2 {
                    x = next;
                } else {
                    return Some(x);
                }
            }
        }
        Parity::HalfInteger => {
            if dom.count(&rat::half(1)) < 2 {
                return None;
            }
            let mut x = rat::half(1);
            loop {
                let next = &x + rat::rat(1);
                if dom.count(&next) == 2 {
                    x = next;
                } else {
                    return Some(x);
                }
            }
        }
    }
}

/// Decide unitarity of a parameter by the string criterion, reporting
/// which clause applied.
pub fn is_unitary_parameter(param: &Parameter) -> (bool, UnitarityCase) {
    let dom = dominant_of(param);
    let (q, r) = param.shape_qr();
    let c = &param.coords;
    let result = match pivot_of(&dom) {
        Some(x) => {
            let pos_x = c.iter().position(|v| *v == x).expect("pivot in parameter");
            let pos_neg = c
                .iter()
                .position(|v| *v == -x.clone())
                .expect("negated pivot in parameter");
            if pos_neg < q {
                (true, UnitarityCase::PivotInHead)
            } else if pos_x >= q && pos_neg < r {
                let leftmost = c[q] == x;
                let proper = c[r - 1] <= -(&x) - rat::rat(1);
                (leftmost && proper, UnitarityCase::PivotInSecond)
            } else {
                debug_assert!(pos_x >= r);
                (false, UnitarityCase::PivotInTail)
            }
        }
        None => {
            if r == q {
                (c[q - 1] <= rat::rat(1), UnitarityCase::NoPivotSingleRun)
            } else {
                (c[q - 1] <= rat::half(3), UnitarityCase::NoPivotDoubleRun)
            }
        }
    };
    debug_assert_eq!(
        result.0,
        param.classify().outcome.is_unitary(),
        "string criterion disagrees with the closed-form classification on {param}"
    );
    result
}

/// Multiset helper for the constructive enumeration below.
struct Pool {
    counts: BTreeMap<Rat, usize>,
}

impl Pool {
    fn new(dom: &DominantParam) -> Self {
        let mut counts = BTreeMap::new();
        for c in &dom.coords {
            *counts.entry(c.clone()).or_insert(0) += 1;
        }
        Pool { counts }
    }

    fn take(&mut self, v: &Rat) -> bool {
        match self.counts.get_mut(v) {
            Some(c) if *c > 0 => {
                *c -= 1;
                true
            }
            _ => false,
        }
    }

    /// Remaining values, negated and sorted decreasing; `None` if the
    /// negation has a repeated value.
    fn negated_rest(&self) -> Option<Vec<Rat>> {
        let mut rest = Vec::new();
        for (v, &count) in self.counts.iter().rev() {
            if count > 1 {
                return None;
            }
            if count == 1 {
                rest.push(-v.clone());
            }
        }
        rest.sort_by(|a, b| b.cmp(a));
        Some(rest)
    }
}

/// Append `rest` to `prefix` and accept only strictly decreasing results.
fn finish(prefix: Vec<Rat>, rest: Vec<Rat>) -> Option<Parameter> {
    let mut coords = prefix;
    coords.extend(rest);
    if coords.windows(2).all(|w| w[0] > w[1]) {
        Some(Parameter::from_sorted(coords))
    } else {
        None
    }
}

/// The descending run `from, from - 1, ..., to`.
fn run_down(from: &Rat, to: &Rat) -> Vec<Rat> {
    let mut out = Vec::new();
    let mut v = from.clone();
    while v >= *to {
        out.push(v.clone());
        v -= rat::rat(1);
    }
    out
}

/// Constructively enumerate the unitary parameters of a character,
/// without filtering the full sign-assignment list. Returned in the
/// same lexicographically decreasing order as [`enumerate_parameters`].
pub fn enumerate_unitary(dom: &DominantParam) -> Vec<Parameter> {
    let mut found: Vec<Parameter> = Vec::new();
    let mut push = |p: Option<Parameter>| {
        if let Some(p) = p {
            if !found.contains(&p) {
                found.push(p);
            }
        }
    };

    match pivot_of(dom) {
        Some(x) => {
            // u: length of the run of values above the pivot; v: largest
            // repeated offset in that range (0 when none)
            let mut u = 0i64;
            while dom.count(&(&x + rat::rat(u + 1))) >= 1 {
                u += 1;
            }
            let v = (0..=u)
                .rev()
                .find(|&j| dom.count(&(&x + rat::rat(j))) == 2)
                .unwrap_or(0);

            // pivot string inside the leading run: prefix x+t ... -x
            for t in v..=u {
                let mut pool = Pool::new(dom);
                let mut ok = true;
                let prefix = run_down(&(&x + rat::rat(t)), &-x.clone());
                for value in &prefix {
                    ok &= pool.take(&value.abs());
                }
                if ok {
                    push(pool.negated_rest().and_then(|rest| finish(prefix, rest)));
                }
            }

            // pivot string leftmost in the second run: prefix
            // x+t ... x+2, x ... -x, -x-1
            if u >= 2 {
                for t in v.max(2)..=u {
                    let mut pool = Pool::new(dom);
                    let mut ok = true;
                    let mut prefix = run_down(&(&x + rat::rat(t)), &(&x + rat::rat(2)));
                    prefix.extend(run_down(&x, &-x.clone()));
                    prefix.push(-(&x) - rat::rat(1));
                    for value in &prefix {
                        ok &= pool.take(&value.abs());
                    }
                    if ok {
                        push(pool.negated_rest().and_then(|rest| finish(prefix, rest)));
                    }
                }
            }
        }
        None => {
            // every coordinate negative
            {
                let pool = Pool::new(dom);
                push(pool.negated_rest().and_then(|rest| finish(Vec::new(), rest)));
            }
            let (low, detached_low) = match dom.parity {
                Parity::Integer => (rat::rat(1), None),
                Parity::HalfInteger => (rat::half(1), Some(rat::half(3))),
            };
            // leading run down to 1 (integer) or 1/2 (half-integer)
            for q in 1..=dom.rank() {
                let top = &low + rat::rat(q as i64 - 1);
                let prefix = run_down(&top, &low);
                let mut pool = Pool::new(dom);
                let mut ok = true;
                for value in &prefix {
                    ok &= pool.take(value);
                }
                if !ok {
                    break;
                }
                push(pool.negated_rest().and_then(|rest| finish(prefix, rest)));
            }
            // half-integer only: leading run down to 3/2 followed by -1/2
            if let Some(det) = detached_low {
                for q in 1..dom.rank() {
                    let top = &det + rat::rat(q as i64 - 1);
                    let mut prefix = run_down(&top, &det);
                    prefix.push(rat::half(-1));
                    let mut pool = Pool::new(dom);
                    let mut ok = true;
                    for value in &prefix {
                        ok &= pool.take(&value.abs());
                    }
                    if !ok {
                        break;
                    }
                    push(pool.negated_rest().and_then(|rest| finish(prefix, rest)));
                }
            }
        }
    }

    found.sort_by(|a, b| b.coords.cmp(&a.coords));
    found
}

/// A Young diagram with at most `n` rows of length at most `n + 1`,
/// built from hooks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    /// Validate row lengths for rank `n`; shorter inputs are padded with
    /// empty rows.
    pub fn new(n: usize, mut rows: Vec<usize>) -> Result<Self> {
        if rows.len() > n {
            return Err(Error::ParamOutOfRange(format!(
                "at most {n} rows allowed, got {}",
                rows.len()
            )));
        }
        rows.resize(n, 0);
        for w in rows.windows(2) {
            if w[0] < w[1] {
                return Err(Error::ParamOutOfRange(
                    "row lengths must be weakly decreasing".into(),
                ));
            }
        }
        if rows.first().copied().unwrap_or(0) > n + 1 {
            return Err(Error::ParamOutOfRange(format!(
                "rows may have length at most {}",
                n + 1
            )));
        }
        let d = YoungDiagram { rows };
        d.check_hook_buildable()?;
        Ok(d)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Componentwise containment.
    pub fn contains(&self, other: &YoungDiagram) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a >= b)
    }

    /// A diagram is built from hooks when it is empty or its first row
    /// and column form a hook (column exactly one shorter than the row)
    /// whose removal leaves a hook-buildable diagram.
    fn check_hook_buildable(&self) -> Result<()> {
        let mut rows: Vec<usize> = self.rows.iter().copied().filter(|&r| r > 0).collect();
        while !rows.is_empty() {
            let width = rows[0];
            let height = rows.len();
            if height + 1 != width {
                return Err(Error::NotHookBuildable(format!(
                    "first row {width} and column {height} do not form a hook"
                )));
            }
            rows = rows[1..]
                .iter()
                .map(|&r| r.saturating_sub(1))
                .filter(|&r| r > 0)
                .collect();
        }
        Ok(())
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz: Vec<String> = self
            .rows
            .iter()
            .filter(|&&r| r > 0)
            .map(|r| r.to_string())
            .collect();
        if nz.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "({})", nz.join(","))
        }
    }
}

/// The Young diagram of a parameter with the character of the half-sum
/// of positive roots: row `k` has length `k` minus the `k`-th coordinate
/// from the right.
pub fn young_of(param: &Parameter) -> Result<YoungDiagram> {
    let n = param.rank();
    if !dominant_of(param).is_rho() {
        return Err(Error::NotRhoCharacter);
    }
    let rows: Vec<usize> = (1..=n)
        .map(|k| {
            let v = rat::rat(k as i64) - &param.coords[n - k];
            rat::as_i64(&v)
                .and_then(|x| usize::try_from(x).ok())
                .expect("rows of a rho-conjugate are nonnegative integers")
        })
        .collect();
    YoungDiagram::new(n, rows)
}

/// Inverse of [`young_of`].
pub fn parameter_of(n: usize, diagram: &YoungDiagram) -> Result<Parameter> {
    if diagram.rows.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: diagram.rows.len(),
        });
    }
    let coords: Vec<Rat> = (1..=n)
        .map(|i| rat::rat((n + 1 - i) as i64 - diagram.rows[n - i] as i64))
        .collect();
    let param = Parameter::new(coords).map_err(|_| Error::NotRhoCharacter)?;
    if !dominant_of(&param).is_rho() {
        return Err(Error::NotRhoCharacter);
    }
    Ok(param)
}

/// The distinguished unitary parameters of the half-sum character with
/// their thick-hook diagrams, listed for `q = 0..=n`: `q = 0` is the
/// full box, `q = n` the empty diagram of the trivial module.
pub fn edge_points(n: usize) -> Vec<(Parameter, YoungDiagram)> {
    (0..=n)
        .map(|q| {
            let mut coords: Vec<Rat> = (1..=q).rev().map(|k| rat::rat(k as i64)).collect();
            coords.extend(((q + 1)..=n).map(|k| rat::rat(-(k as i64))));
            let param = Parameter::from_sorted(coords);
            let mut rows = vec![n + 1; n - q];
            rows.extend(vec![n - q; q]);
            let diagram = YoungDiagram::new(n, rows).expect("thick hooks are hook-buildable");
            debug_assert_eq!(young_of(&param).unwrap(), diagram);
            (param, diagram)
        })
        .collect()
}

/// Hasse diagram of the parameters of the half-sum character under
/// containment of Young diagrams. Edges are covering pairs, oriented
/// from the larger diagram to the smaller one it covers.
#[derive(Debug, Clone)]
pub struct HasseDiagram {
    pub nodes: Vec<Parameter>,
    pub youngs: Vec<YoungDiagram>,
    pub edges: Vec<(usize, usize)>,
}

const MAX_HASSE_RANK: usize = 8;

pub fn hasse_rho(n: usize) -> Result<HasseDiagram> {
    if n < 1 {
        return Err(Error::Parse("rank must be at least 1".into()));
    }
    if n > MAX_HASSE_RANK {
        return Err(Error::RankTooLarge {
            got: n,
            max: MAX_HASSE_RANK,
        });
    }
    let nodes = enumerate_parameters(&DominantParam::rho(n));
    let youngs: Vec<YoungDiagram> = nodes
        .iter()
        .map(|p| young_of(p).expect("nodes carry the rho character"))
        .collect();
    let k = nodes.len();
    let lt = |i: usize, j: usize| i != j && youngs[j].contains(&youngs[i]);
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if !lt(i, j) {
                continue;
            }
            let covered = (0..k).any(|m| lt(i, m) && lt(m, j));
            if !covered {
                // arrow from the larger diagram to the smaller one
                edges.push((j, i));
            }
        }
    }
    edges.sort_unstable();
    Ok(HasseDiagram {
        nodes,
        youngs,
        edges,
    })
}

impl HasseDiagram {
    /// DOT digraph with nodes labeled by parameter and diagram rows.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n");
        for (p, y) in self.nodes.iter().zip(&self.youngs) {
            out.push_str(&format!("  \"{p}\" [label=\"({p}) Y={y}\"];\n"));
        }
        for &(src, dst) in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                self.nodes[src], self.nodes[dst]
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "nodes": self.nodes.iter().map(|p| coord_json(p.coords())).collect::<Vec<_>>(),
            "youngs": self.youngs.iter().map(|y| y.rows().to_vec()).collect::<Vec<_>>(),
            "edges": self.edges,
        })
    }
}

fn coord_json(coords: &[Rat]) -> serde_json::Value {
    json!(coords.iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

/// Which family of unitary parameters a translation cone describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeKind {
    /// All coordinates negative; every tail coordinate is free.
    Full,
    /// Integer head `q, ..., 1`.
    IntegerHead { q: usize },
    /// Half-integer head `q - 1/2, ..., 1/2`.
    HalfIntegerHead { q: usize },
    /// Half-integer head `q + 1/2, ..., 3/2` followed by `-1/2`.
    HalfIntegerDetached { q: usize },
}

impl ConeKind {
    pub fn name(&self) -> String {
        match self {
            ConeKind::Full => "full".into(),
            ConeKind::IntegerHead { q } => format!("head-to-one q={q}"),
            ConeKind::HalfIntegerHead { q } => format!("head-to-half q={q}"),
            ConeKind::HalfIntegerDetached { q } => format!("detached-half q={q}"),
        }
    }
}

/// A translation cone of unitary parameters: a vertex plus free
/// nonnegative integer shifts carried by the trailing coordinates.
#[derive(Debug, Clone)]
pub struct Cone {
    pub vertex: Parameter,
    pub dimension: usize,
    pub kind: ConeKind,
}

impl Cone {
    /// The cone point with the given shifts, which must be weakly
    /// decreasing and nonnegative, largest first; the largest shift is
    /// applied to the last coordinate.
    pub fn point(&self, shifts: &[i64]) -> Result<Parameter> {
        if shifts.len() != self.dimension {
            return Err(Error::LengthMismatch {
                expected: self.dimension,
                got: shifts.len(),
            });
        }
        for w in shifts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::ParamOutOfRange(
                    "shifts must be weakly decreasing".into(),
                ));
            }
        }
        if shifts.last().is_some_and(|&s| s < 0) {
            return Err(Error::ParamOutOfRange("shifts must be nonnegative".into()));
        }
        let n = self.vertex.rank();
        let mut coords = self.vertex.coords().to_vec();
        for (idx, &s) in shifts.iter().enumerate() {
            coords[n - 1 - idx] -= rat::rat(s);
        }
        Parameter::new(coords)
    }

    pub fn generator_description(&self) -> String {
        if self.dimension == 0 {
            "isolated vertex".into()
        } else {
            format!(
                "nonnegative weakly decreasing shifts lower the last {} coordinate(s)",
                self.dimension
            )
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "vertex": coord_json(self.vertex.coords()),
            "dimension": self.dimension,
            "kind": self.kind.name(),
            "generators": self.generator_description(),
        })
    }
}

/// The translation cones covering all unitary parameters with regular
/// character of the given parity: one full cone plus the reduced cones
/// in ascending head length.
pub fn unitary_cones(n: usize, parity: Parity) -> Vec<Cone> {
    let mut cones = Vec::new();
    let offset = match parity {
        Parity::Integer => Rat::zero(),
        Parity::HalfInteger => rat::half(-1),
    };
    // full cone: all coordinates negative
    let full: Vec<Rat> = (1..=n).map(|k| rat::rat(-(k as i64)) - &offset).collect();
    cones.push(Cone {
        vertex: Parameter::from_sorted(full),
        dimension: n,
        kind: ConeKind::Full,
    });
    match parity {
        Parity::Integer => {
            for q in 1..=n {
                let mut coords: Vec<Rat> = (1..=q).rev().map(|k| rat::rat(k as i64)).collect();
                coords.extend(((q + 1)..=n).map(|k| rat::rat(-(k as i64))));
                cones.push(Cone {
                    vertex: Parameter::from_sorted(coords),
                    dimension: n - q,
                    kind: ConeKind::IntegerHead { q },
                });
            }
        }
        Parity::HalfInteger => {
            for q in 1..=n {
                let mut coords: Vec<Rat> =
                    (1..=q).rev().map(|k| rat::rat(k as i64) + rat::half(-1)).collect();
                coords.extend(((q + 1)..=n).map(|k| rat::rat(-(k as i64)) + rat::half(1)));
                cones.push(Cone {
                    vertex: Parameter::from_sorted(coords),
                    dimension: n - q,
                    kind: ConeKind::HalfIntegerHead { q },
                });
            }
            for q in 1..n {
                let mut coords: Vec<Rat> =
                    (1..=q).rev().map(|k| rat::rat(k as i64) + rat::half(1)).collect();
                coords.push(rat::half(-1));
                coords.extend(((q + 2)..=n).map(|k| rat::rat(-(k as i64)) + rat::half(1)));
                cones.push(Cone {
                    vertex: Parameter::from_sorted(coords),
                    dimension: n - q - 1,
                    kind: ConeKind::HalfIntegerDetached { q },
                });
            }
        }
    }
    cones
}
