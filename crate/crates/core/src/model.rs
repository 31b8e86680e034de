//! Finite structures: multicolored models (point sequences carrying R- or
//! S-colors) and symbolic ordering descriptions built from blocks and
//! shuffles, together with their axiom validators.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest color index a [`ColorSet`] can hold.
pub const MAX_COLORS: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("models have different color counts ({left} vs {right})")]
    MismatchedK { left: u32, right: u32 },
    #[error("k = {k} exceeds the supported maximum of {MAX_COLORS} colors")]
    TooManyColors { k: u32 },
    #[error("color {color} is outside 1..={MAX_COLORS}")]
    ColorOutOfRange { color: u32 },
}

/// A set of colors drawn from `1..=64`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// All colors `1..=k`.
    pub fn full(k: u32) -> Result<Self, ModelError> {
        match k {
            0 => Ok(Self::EMPTY),
            1..=63 => Ok(ColorSet((1u64 << k) - 1)),
            64 => Ok(ColorSet(u64::MAX)),
            _ => Err(ModelError::TooManyColors { k }),
        }
    }

    pub fn singleton(color: u32) -> Result<Self, ModelError> {
        Self::EMPTY.with(color)
    }

    pub fn from_colors<I: IntoIterator<Item = u32>>(colors: I) -> Result<Self, ModelError> {
        colors.into_iter().try_fold(Self::EMPTY, |set, c| set.with(c))
    }

    pub fn with(self, color: u32) -> Result<Self, ModelError> {
        if color == 0 || color > MAX_COLORS {
            return Err(ModelError::ColorOutOfRange { color });
        }
        Ok(ColorSet(self.0 | 1u64 << (color - 1)))
    }

    pub fn from_bits(bits: u64) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, color: u32) -> bool {
        (1..=MAX_COLORS).contains(&color) && self.0 & (1u64 << (color - 1)) != 0
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: ColorSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Colors in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let low = bits.trailing_zeros();
                bits &= bits - 1;
                low + 1
            })
        })
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }
}

/// Lexicographic on the ascending color lists, so `{1} < {1,2} < {2}`.
impl Ord for ColorSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ColorSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ColorSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ColorSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;

        let colors = Vec::<u32>::deserialize(deserializer)?;
        let mut set = ColorSet::EMPTY;
        for c in colors {
            let next = set.with(c).map_err(D::Error::custom)?;
            if next == set {
                return Err(D::Error::custom(format!("color {c} listed twice")));
            }
            set = next;
        }
        Ok(set)
    }
}

/// One element of a multicolored model. An R-point carries one color and
/// stands for a single block; an S-point carries a color set and stands for
/// a shuffle interval.
///
/// The derived order puts every R-point before every S-point, R-points by
/// color, S-points by their sorted color lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Point {
    R { color: u32 },
    S { colors: ColorSet },
}

impl Point {
    pub fn r(color: u32) -> Self {
        Point::R { color }
    }

    pub fn s(colors: ColorSet) -> Self {
        Point::S { colors }
    }

    pub fn is_r(&self) -> bool {
        matches!(self, Point::R { .. })
    }

    /// Colors carried by this point. Out-of-range R colors yield an empty set.
    pub fn colors(&self) -> ColorSet {
        match *self {
            Point::R { color } => ColorSet::singleton(color).unwrap_or_default(),
            Point::S { colors } => colors,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::R { color } => write!(f, "R({color})"),
            Point::S { colors } => {
                write!(f, "S{{")?;
                for (i, c) in colors.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

/// A finite multicolored linear ordering over colors `1..=k`.
///
/// With `adjacency_constrained` set the model is read in the theory that
/// forbids two consecutive R-points; otherwise adjacency is unrestricted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MulticoloredModel {
    pub k: u32,
    pub adjacency_constrained: bool,
    pub points: Vec<Point>,
}

impl MulticoloredModel {
    pub fn new(k: u32, adjacency_constrained: bool, points: Vec<Point>) -> Self {
        Self {
            k,
            adjacency_constrained,
            points,
        }
    }

    pub fn empty(k: u32, adjacency_constrained: bool) -> Self {
        Self::new(k, adjacency_constrained, Vec::new())
    }

    pub fn used_colors(&self) -> ColorSet {
        self.points
            .iter()
            .fold(ColorSet::EMPTY, |acc, p| acc.union(p.colors()))
    }

    pub fn validate(&self) -> ValidationReport {
        validate_model(self)
    }
}

impl fmt::Display for MulticoloredModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A single broken axiom, with the positions (point or segment indices)
/// that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: &'static str,
    pub positions: Vec<usize>,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_axiom(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    fn push(&mut self, axiom: &'static str, positions: Vec<usize>, message: String) {
        self.violations.push(Violation {
            axiom,
            positions,
            message,
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}: {}", v.axiom, v.message)?;
        }
        Ok(())
    }
}

fn join_positions(positions: &[usize]) -> String {
    positions
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Checks every axiom of the finite-label theory the model claims to satisfy.
///
/// Axiom identifiers:
/// - `model.k`: more than [`MAX_COLORS`] colors declared
/// - `Tprime.lang`: a color outside `1..=k`
/// - `Tprime.2`: an S-point with no colors
/// - `Tprime.3b`: two consecutive R-points (constrained models only)
/// - `Tprime.5` / `Tprime.6`: an R- or S-color used by two points
/// - `Tprime.7`: a color used both as an R-color and an S-color
pub fn validate_model(model: &MulticoloredModel) -> ValidationReport {
    let mut report = ValidationReport::default();
    if model.k > MAX_COLORS {
        report.push(
            "model.k",
            Vec::new(),
            format!("k = {} exceeds {MAX_COLORS}", model.k),
        );
    }

    let mut r_owner: Vec<Option<usize>> = vec![None; MAX_COLORS as usize + 1];
    let mut s_owner: Vec<Option<usize>> = vec![None; MAX_COLORS as usize + 1];

    for (pos, point) in model.points.iter().enumerate() {
        match *point {
            Point::R { color } => {
                if color == 0 || color > model.k || color > MAX_COLORS {
                    report.push(
                        "Tprime.lang",
                        vec![pos],
                        format!("R-color {color} at {pos} outside 1..={}", model.k),
                    );
                    continue;
                }
                if let Some(prev) = r_owner[color as usize] {
                    report.push(
                        "Tprime.5",
                        vec![prev, pos],
                        format!("R-color {color} reused at {prev},{pos}"),
                    );
                } else {
                    r_owner[color as usize] = Some(pos);
                }
            }
            Point::S { colors } => {
                if colors.is_empty() {
                    report.push("Tprime.2", vec![pos], format!("S-point at {pos} has no colors"));
                }
                for color in colors.iter() {
                    if color > model.k {
                        report.push(
                            "Tprime.lang",
                            vec![pos],
                            format!("S-color {color} at {pos} outside 1..={}", model.k),
                        );
                        continue;
                    }
                    if let Some(prev) = s_owner[color as usize] {
                        report.push(
                            "Tprime.6",
                            vec![prev, pos],
                            format!("S-color {color} reused at {prev},{pos}"),
                        );
                    } else {
                        s_owner[color as usize] = Some(pos);
                    }
                }
            }
        }
    }

    for color in 1..=MAX_COLORS as usize {
        if let (Some(r), Some(s)) = (r_owner[color], s_owner[color]) {
            let mut positions = vec![r, s];
            positions.sort_unstable();
            report.push(
                "Tprime.7",
                positions.clone(),
                format!(
                    "color {color} used as R and S at {}",
                    join_positions(&positions)
                ),
            );
        }
    }

    if model.adjacency_constrained {
        for (i, pair) in model.points.windows(2).enumerate() {
            if pair[0].is_r() && pair[1].is_r() {
                report.push(
                    "Tprime.3b",
                    vec![i, i + 1],
                    format!("consecutive R-points at {},{}", i, i + 1),
                );
            }
        }
    }
    report
}

/// Deterministic total order on models over the same `k`: shorter first,
/// then lexicographic by points.
pub fn canonical_compare(
    a: &MulticoloredModel,
    b: &MulticoloredModel,
) -> Result<Ordering, ModelError> {
    if a.k != b.k {
        return Err(ModelError::MismatchedK {
            left: a.k,
            right: b.k,
        });
    }
    Ok(a.points
        .len()
        .cmp(&b.points.len())
        .then_with(|| a.points.cmp(&b.points)))
}

/// Order type of a 1-block: a finite block of `n >= 1` points, or one of
/// omega, omega*, zeta.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    Finite(u64),
    Omega,
    OmegaStar,
    Zeta,
}

impl BlockKind {
    pub fn is_finite(&self) -> bool {
        matches!(self, BlockKind::Finite(_))
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockKind::Finite(n) => write!(f, "{n}"),
            BlockKind::Omega => write!(f, "ω"),
            BlockKind::OmegaStar => write!(f, "ω*"),
            BlockKind::Zeta => write!(f, "ζ"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Segment {
    Block { kind: BlockKind },
    Shuffle { kinds: Vec<BlockKind> },
}

impl Segment {
    pub fn kinds(&self) -> &[BlockKind] {
        match self {
            Segment::Block { kind } => std::slice::from_ref(kind),
            Segment::Shuffle { kinds } => kinds,
        }
    }
}

/// A sum of single blocks and shuffle intervals, each block type used once.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderingDescription {
    pub segments: Vec<Segment>,
}

impl OrderingDescription {
    pub fn new(segments: Vec<Segment>) -> Self {
        Self { segments }
    }

    pub fn kinds(&self) -> impl Iterator<Item = BlockKind> + '_ {
        self.segments.iter().flat_map(|s| s.kinds().iter().copied())
    }

    pub fn validate(&self) -> ValidationReport {
        validate_description(self)
    }
}

impl fmt::Display for OrderingDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .segments
            .iter()
            .map(|s| match s {
                Segment::Block { kind } => kind.to_string(),
                Segment::Shuffle { kinds } => {
                    let inner: Vec<String> = kinds.iter().map(ToString::to_string).collect();
                    format!("Sh({})", inner.join(","))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Axiom identifiers:
/// - `kind.finite_positive`: a `Finite(0)` kind
/// - `Sh.nonempty`: a shuffle with no kinds
/// - `Sh.disjoint`: a block kind occurring twice in the description
/// - `T.4`: adjacent finite singleton blocks
/// - `T.5`: finite block directly before an omega block
/// - `T.6`: omega* block directly before a finite block
/// - `T.7`: omega* block directly before an omega block
pub fn validate_description(desc: &OrderingDescription) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut seen: Vec<(BlockKind, usize)> = Vec::new();

    for (pos, segment) in desc.segments.iter().enumerate() {
        if let Segment::Shuffle { kinds } = segment {
            if kinds.is_empty() {
                report.push("Sh.nonempty", vec![pos], format!("empty shuffle at {pos}"));
            }
        }
        for &kind in segment.kinds() {
            if kind == BlockKind::Finite(0) {
                report.push(
                    "kind.finite_positive",
                    vec![pos],
                    format!("finite block of size 0 at {pos}"),
                );
            }
            if let Some(&(_, prev)) = seen.iter().find(|(k, _)| *k == kind) {
                report.push(
                    "Sh.disjoint",
                    vec![prev, pos],
                    format!("block kind {kind} used at {prev},{pos}"),
                );
            } else {
                seen.push((kind, pos));
            }
        }
    }

    for (i, pair) in desc.segments.windows(2).enumerate() {
        let (Segment::Block { kind: left }, Segment::Block { kind: right }) = (&pair[0], &pair[1])
        else {
            continue;
        };
        let rule = match (left, right) {
            (BlockKind::Finite(_), BlockKind::Finite(_)) => Some(("T.4", "adjacent finite blocks")),
            (BlockKind::Finite(_), BlockKind::Omega) => Some(("T.5", "finite block before omega")),
            (BlockKind::OmegaStar, BlockKind::Finite(_)) => {
                Some(("T.6", "omega-star before finite block"))
            }
            (BlockKind::OmegaStar, BlockKind::Omega) => Some(("T.7", "omega-star before omega")),
            _ => None,
        };
        if let Some((axiom, what)) = rule {
            report.push(axiom, vec![i, i + 1], format!("{what} at {},{}", i, i + 1));
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ColoredSegment {
    /// A single element of the given color.
    Block { color: u32 },
    /// A dense shuffle in which each listed color is dense.
    Shuffle { colors: ColorSet },
}

/// Presentation of a homogeneous colored linear ordering: single colored
/// points and color shuffles, every color used once, no adjacency rules.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredDescription {
    pub segments: Vec<ColoredSegment>,
}

impl ColoredDescription {
    pub fn new(segments: Vec<ColoredSegment>) -> Self {
        Self { segments }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let mut owner: Vec<Option<usize>> = vec![None; MAX_COLORS as usize + 1];
        for (pos, segment) in self.segments.iter().enumerate() {
            let colors = match *segment {
                ColoredSegment::Block { color } => match ColorSet::singleton(color) {
                    Ok(set) => set,
                    Err(_) => {
                        report.push("colored.color", vec![pos], format!("bad color {color} at {pos}"));
                        continue;
                    }
                },
                ColoredSegment::Shuffle { colors } => {
                    if colors.is_empty() {
                        report.push("Sh.nonempty", vec![pos], format!("empty shuffle at {pos}"));
                    }
                    colors
                }
            };
            for c in colors.iter() {
                if let Some(prev) = owner[c as usize] {
                    report.push(
                        "colored.disjoint",
                        vec![prev, pos],
                        format!("color {c} used at {prev},{pos}"),
                    );
                } else {
                    owner[c as usize] = Some(pos);
                }
            }
        }
        report
    }
}

/// A finite linear ordering given by the color of each element in order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FiniteColoredOrdering {
    pub colors: Vec<u32>,
}

impl FiniteColoredOrdering {
    pub fn new(colors: Vec<u32>) -> Self {
        Self { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(colors: &[u32]) -> ColorSet {
        ColorSet::from_colors(colors.iter().copied()).unwrap()
    }

    fn model(k: u32, constrained: bool, points: Vec<Point>) -> MulticoloredModel {
        MulticoloredModel::new(k, constrained, points)
    }

    // Axiom-by-axiom check written directly over colors, independent of the
    // owner tables used by validate_model.
    fn direct_axioms_hold(m: &MulticoloredModel) -> bool {
        let mut all: Vec<u32> = Vec::new();
        for p in &m.points {
            match *p {
                Point::R { color } => all.push(color),
                Point::S { colors } => {
                    if colors.is_empty() {
                        return false;
                    }
                    all.extend(colors.iter());
                }
            }
        }
        if all.iter().any(|&c| c == 0 || c > m.k) {
            return false;
        }
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if all[i] == all[j] {
                    return false;
                }
            }
        }
        if m.adjacency_constrained {
            for i in 1..m.points.len() {
                if m.points[i - 1].is_r() && m.points[i].is_r() {
                    return false;
                }
            }
        }
        true
    }

    // All points whose colors lie in 1..=k, including ones that reuse colors
    // across points.
    fn all_points(k: u32) -> Vec<Point> {
        let mut pts: Vec<Point> = (1..=k).map(Point::r).collect();
        for bits in 1..(1u64 << k) {
            pts.push(Point::s(ColorSet::from_bits(bits)));
        }
        pts
    }

    fn all_sequences(k: u32, max_len: usize) -> Vec<Vec<Point>> {
        let pts = all_points(k);
        let mut out = vec![Vec::new()];
        let mut frontier = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for seq in &frontier {
                for p in &pts {
                    let mut s: Vec<Point> = seq.clone();
                    s.push(*p);
                    next.push(s);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn color_set_basics() {
        let a = set(&[1, 3]);
        assert!(a.contains(1) && a.contains(3) && !a.contains(2));
        assert_eq!(a.to_vec(), vec![1, 3]);
        assert_eq!(a.len(), 2);
        assert_eq!(a.max(), Some(3));
        assert!(a.is_disjoint(set(&[2])));
        assert_eq!(ColorSet::full(3).unwrap(), set(&[1, 2, 3]));
        assert_eq!(ColorSet::full(64).unwrap().len(), 64);
        assert!(ColorSet::full(65).is_err());
        assert!(ColorSet::singleton(0).is_err());
        assert!(set(&[1]) < set(&[1, 2]));
        assert!(set(&[1, 2, 3]) < set(&[1, 3]));
        assert!(set(&[1, 3]) < set(&[2]));
    }

    #[test]
    fn empty_model_is_valid() {
        assert!(validate_model(&model(1, true, vec![])).is_ok());
        assert!(validate_model(&model(0, true, vec![])).is_ok());
    }

    #[test]
    fn consecutive_r_points_depend_on_theory() {
        let pts = vec![Point::r(1), Point::r(2)];
        let report = validate_model(&model(2, true, pts.clone()));
        assert_eq!(report.violations.len(), 1);
        let v = &report.violations[0];
        assert_eq!(v.axiom, "Tprime.3b");
        assert_eq!(v.positions, vec![0, 1]);
        assert_eq!(v.message, "consecutive R-points at 0,1");
        assert!(validate_model(&model(2, false, pts)).is_ok());
    }

    #[test]
    fn color_reuse_axioms() {
        let r = validate_model(&model(2, false, vec![Point::r(1), Point::r(1)]));
        assert!(r.has_axiom("Tprime.5"));
        let r = validate_model(&model(2, false, vec![Point::s(set(&[1])), Point::s(set(&[1, 2]))]));
        assert!(r.has_axiom("Tprime.6"));
        let r = validate_model(&model(2, true, vec![Point::r(2), Point::s(set(&[2]))]));
        assert!(r.has_axiom("Tprime.7"));
        assert_eq!(r.violations[0].positions, vec![0, 1]);
        let r = validate_model(&model(2, true, vec![Point::s(ColorSet::EMPTY)]));
        assert!(r.has_axiom("Tprime.2"));
        let r = validate_model(&model(2, true, vec![Point::r(3)]));
        assert!(r.has_axiom("Tprime.lang"));
        let r = validate_model(&model(65, true, vec![]));
        assert!(r.has_axiom("model.k"));
    }

    #[test]
    fn validator_agrees_with_direct_axioms_on_small_models() {
        for k in 0..=3 {
            for seq in all_sequences(k, 3) {
                for constrained in [true, false] {
                    let m = model(k, constrained, seq.clone());
                    assert_eq!(
                        validate_model(&m).is_ok(),
                        direct_axioms_hold(&m),
                        "k={k} constrained={constrained} {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn canonical_compare_examples() {
        let empty = model(1, true, vec![]);
        let r1 = model(1, true, vec![Point::r(1)]);
        let s1 = model(1, true, vec![Point::s(set(&[1]))]);
        assert_eq!(canonical_compare(&empty, &r1).unwrap(), Ordering::Less);
        assert_eq!(canonical_compare(&r1, &s1).unwrap(), Ordering::Less);
        assert_eq!(canonical_compare(&s1, &s1.clone()).unwrap(), Ordering::Equal);
        assert_eq!(
            canonical_compare(&empty, &model(2, true, vec![])),
            Err(ModelError::MismatchedK { left: 1, right: 2 })
        );
    }

    #[test]
    fn canonical_compare_is_a_total_order() {
        for k in 0..=2 {
            let models: Vec<MulticoloredModel> = all_sequences(k, 2)
                .into_iter()
                .map(|s| model(k, true, s))
                .filter(|m| m.validate().is_ok())
                .collect();
            for a in &models {
                for b in &models {
                    let ab = canonical_compare(a, b).unwrap();
                    assert_eq!(ab, canonical_compare(b, a).unwrap().reverse());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    for c in &models {
                        if ab != Ordering::Greater && canonical_compare(b, c).unwrap() != Ordering::Greater {
                            assert_ne!(canonical_compare(a, c).unwrap(), Ordering::Greater);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn description_axioms() {
        let d = OrderingDescription::new(vec![
            Segment::Block { kind: BlockKind::Finite(1) },
            Segment::Block { kind: BlockKind::Finite(2) },
        ]);
        let r = validate_description(&d);
        assert!(r.has_axiom("T.4"));
        assert!(r.violations[0].message.starts_with("adjacent finite blocks"));

        let d = OrderingDescription::new(vec![
            Segment::Block { kind: BlockKind::OmegaStar },
            Segment::Block { kind: BlockKind::Omega },
        ]);
        let r = validate_description(&d);
        assert!(r.has_axiom("T.7"));
        assert!(r.violations[0].message.starts_with("omega-star before omega"));

        let d = OrderingDescription::new(vec![
            Segment::Shuffle { kinds: vec![BlockKind::Finite(1), BlockKind::Finite(3)] },
            Segment::Block { kind: BlockKind::Finite(2) },
        ]);
        assert!(validate_description(&d).is_ok());

        let d = OrderingDescription::new(vec![
            Segment::Block { kind: BlockKind::Finite(1) },
            Segment::Block { kind: BlockKind::Omega },
        ]);
        assert!(validate_description(&d).has_axiom("T.5"));
        let d = OrderingDescription::new(vec![
            Segment::Block { kind: BlockKind::OmegaStar },
            Segment::Block { kind: BlockKind::Finite(4) },
        ]);
        assert!(validate_description(&d).has_axiom("T.6"));

        // omega then omega* is a legal junction (no adjacent pair is formed)
        let d = OrderingDescription::new(vec![
            Segment::Block { kind: BlockKind::Omega },
            Segment::Block { kind: BlockKind::OmegaStar },
        ]);
        assert!(validate_description(&d).is_ok());
    }

    #[test]
    fn description_structure_violations() {
        let d = OrderingDescription::new(vec![
            Segment::Shuffle { kinds: vec![BlockKind::Finite(1), BlockKind::Zeta] },
            Segment::Block { kind: BlockKind::Zeta },
        ]);
        assert!(validate_description(&d).has_axiom("Sh.disjoint"));
        let d = OrderingDescription::new(vec![Segment::Shuffle { kinds: vec![] }]);
        assert!(validate_description(&d).has_axiom("Sh.nonempty"));
        let d = OrderingDescription::new(vec![Segment::Block { kind: BlockKind::Finite(0) }]);
        assert!(validate_description(&d).has_axiom("kind.finite_positive"));
        assert!(validate_description(&OrderingDescription::default()).is_ok());
    }

    #[test]
    fn colored_description_validation() {
        let ok = ColoredDescription::new(vec![
            ColoredSegment::Block { color: 1 },
            ColoredSegment::Block { color: 2 },
            ColoredSegment::Shuffle { colors: set(&[3, 4]) },
        ]);
        assert!(ok.validate().is_ok());
        let dup = ColoredDescription::new(vec![
            ColoredSegment::Block { color: 1 },
            ColoredSegment::Shuffle { colors: set(&[1]) },
        ]);
        assert!(dup.validate().has_axiom("colored.disjoint"));
    }

    #[test]
    fn json_formats() {
        let m = model(2, true, vec![Point::r(1), Point::s(set(&[2]))]);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(
            json,
            r#"{"k":2,"adjacency_constrained":true,"points":[{"type":"R","color":1},{"type":"S","colors":[2]}]}"#
        );
        assert_eq!(serde_json::from_str::<MulticoloredModel>(&json).unwrap(), m);

        let d = OrderingDescription::new(vec![
            Segment::Block { kind: BlockKind::Finite(2) },
            Segment::Shuffle { kinds: vec![BlockKind::Finite(1), BlockKind::Omega] },
        ]);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"segments":[{"type":"block","kind":{"finite":2}},{"type":"shuffle","kinds":[{"finite":1},"omega"]}]}"#
        );
        assert_eq!(serde_json::from_str::<OrderingDescription>(&json).unwrap(), d);
        let kinds: Vec<BlockKind> = serde_json::from_str(r#"["omega_star","zeta"]"#).unwrap();
        assert_eq!(kinds, vec![BlockKind::OmegaStar, BlockKind::Zeta]);

        let c = ColoredDescription::new(vec![
            ColoredSegment::Block { color: 1 },
            ColoredSegment::Shuffle { colors: set(&[3, 2]) },
        ]);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"segments":[{"type":"block","color":1},{"type":"shuffle","colors":[2,3]}]}"#
        );

        assert!(serde_json::from_str::<ColorSet>("[1,1]").is_err());
        assert!(serde_json::from_str::<ColorSet>("[0]").is_err());
        assert!(serde_json::from_str::<ColorSet>("[65]").is_err());
    }
}
