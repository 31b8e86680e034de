//! Maps between multicolored models and the block/shuffle descriptions of
//! the orderings they encode, the C_{n,m} block-size classifier, and a
//! brute-force homogeneity check for explicit finite colored orderings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{
    validate_description, validate_model, BlockKind, ColorSet, ColoredDescription, ColoredSegment,
    FiniteColoredOrdering, ModelError, MulticoloredModel, OrderingDescription, Point, Segment,
    ValidationReport, MAX_COLORS,
};

/// Longest ordering the homogeneity oracle accepts by default.
pub const DEFAULT_HOMOGENEITY_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondenceError {
    #[error("invalid model: {0}")]
    InvalidModel(ValidationReport),
    #[error("invalid description: {0}")]
    InvalidDescription(ValidationReport),
    #[error("description not in T'_k range: block kind {0} has no finite label")]
    NotInFiniteRange(BlockKind),
    #[error("description not in T'_k range: label {label} exceeds k = {k}")]
    LabelExceedsK { label: u64, k: u32 },
    #[error("colored expansion needs an unconstrained model")]
    ExpectedUnconstrained,
    #[error("ordering of length {len} exceeds the homogeneity cap of {cap}")]
    CapExceeded { len: usize, cap: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Sends each R-point to a single finite block and each S-point to a shuffle
/// of finite blocks, color `i` standing for block size `i`.
///
/// The model must satisfy the adjacency-constrained axioms whatever its flag
/// says, since adjacent R-points would produce adjacent finite blocks.
pub fn expand_model(model: &MulticoloredModel) -> Result<OrderingDescription, CorrespondenceError> {
    let as_constrained = MulticoloredModel {
        adjacency_constrained: true,
        ..model.clone()
    };
    let report = validate_model(&as_constrained);
    if !report.is_ok() {
        return Err(CorrespondenceError::InvalidModel(report));
    }
    let segments = model
        .points
        .iter()
        .map(|p| match *p {
            Point::R { color } => Segment::Block {
                kind: BlockKind::Finite(color.into()),
            },
            Point::S { colors } => Segment::Shuffle {
                kinds: colors.iter().map(|c| BlockKind::Finite(c.into())).collect(),
            },
        })
        .collect();
    Ok(OrderingDescription::new(segments))
}

fn finite_label(kind: BlockKind, k: u32) -> Result<u32, CorrespondenceError> {
    match kind {
        BlockKind::Finite(n) if n <= u64::from(k) => Ok(n as u32),
        BlockKind::Finite(n) => Err(CorrespondenceError::LabelExceedsK { label: n, k }),
        other => Err(CorrespondenceError::NotInFiniteRange(other)),
    }
}

/// Inverse of [`expand_model`]; the result is adjacency constrained.
pub fn contract_description(
    desc: &OrderingDescription,
    k: u32,
) -> Result<MulticoloredModel, CorrespondenceError> {
    if k > MAX_COLORS {
        return Err(ModelError::TooManyColors { k }.into());
    }
    let report = validate_description(desc);
    if !report.is_ok() {
        return Err(CorrespondenceError::InvalidDescription(report));
    }
    let points = desc
        .segments
        .iter()
        .map(|segment| match segment {
            Segment::Block { kind } => Ok(Point::r(finite_label(*kind, k)?)),
            Segment::Shuffle { kinds } => {
                let labels = kinds
                    .iter()
                    .map(|kind| finite_label(*kind, k))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Point::s(ColorSet::from_colors(labels)?))
            }
        })
        .collect::<Result<Vec<_>, CorrespondenceError>>()?;
    Ok(MulticoloredModel::new(k, true, points))
}

/// Unconstrained counterpart of [`expand_model`]: R-points become single
/// colored elements and S-points color shuffles.
pub fn expand_colored(model: &MulticoloredModel) -> Result<ColoredDescription, CorrespondenceError> {
    if model.adjacency_constrained {
        return Err(CorrespondenceError::ExpectedUnconstrained);
    }
    let report = validate_model(model);
    if !report.is_ok() {
        return Err(CorrespondenceError::InvalidModel(report));
    }
    let segments = model
        .points
        .iter()
        .map(|p| match *p {
            Point::R { color } => ColoredSegment::Block { color },
            Point::S { colors } => ColoredSegment::Shuffle { colors },
        })
        .collect();
    Ok(ColoredDescription::new(segments))
}

/// Inverse of [`expand_colored`]; the result is unconstrained.
pub fn contract_colored(
    desc: &ColoredDescription,
    k: u32,
) -> Result<MulticoloredModel, CorrespondenceError> {
    if k > MAX_COLORS {
        return Err(ModelError::TooManyColors { k }.into());
    }
    let report = desc.validate();
    if !report.is_ok() {
        return Err(CorrespondenceError::InvalidDescription(report));
    }
    let points: Vec<Point> = desc
        .segments
        .iter()
        .map(|s| match *s {
            ColoredSegment::Block { color } => Point::r(color),
            ColoredSegment::Shuffle { colors } => Point::s(colors),
        })
        .collect();
    let model = MulticoloredModel::new(k, false, points);
    let report = validate_model(&model);
    if !report.is_ok() {
        return Err(CorrespondenceError::InvalidModel(report));
    }
    Ok(model)
}

/// A natural number or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Finite(u64),
    Infinite,
}

impl Bound {
    pub fn is_infinite(self) -> bool {
        self == Bound::Infinite
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(n) => write!(f, "{n}"),
            Bound::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expected a natural number or 'inf', got {0:?}")]
pub struct BadBound(pub String);

impl FromStr for Bound {
    type Err = BadBound;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf" | "infinity" | "∞" => Ok(Bound::Infinite),
            _ => s
                .parse()
                .map(Bound::Finite)
                .map_err(|_| BadBound(s.to_string())),
        }
    }
}

/// Whether the ordering presented by `desc` (assumed valid) is
/// C_{n,m}-homogeneous, decided from its block kinds:
///
/// - `n, m` finite: only finite blocks of size at most `n + m + 1`
/// - omega blocks need `m` infinite, omega* blocks need `n` infinite
/// - zeta blocks need at least one of them infinite
pub fn classify_cnm(desc: &OrderingDescription, n: Bound, m: Bound) -> bool {
    desc.kinds().all(|kind| match kind {
        BlockKind::Finite(size) => match (n, m) {
            (Bound::Finite(n), Bound::Finite(m)) => size <= n.saturating_add(m).saturating_add(1),
            _ => true,
        },
        BlockKind::Omega => m.is_infinite(),
        BlockKind::OmegaStar => n.is_infinite(),
        BlockKind::Zeta => n.is_infinite() || m.is_infinite(),
    })
}

fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    fn go(perm: &mut Vec<usize>, used: &mut [bool], visit: &mut impl FnMut(&[usize])) {
        if perm.len() == used.len() {
            visit(perm);
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                perm.push(i);
                go(perm, used, visit);
                perm.pop();
                used[i] = false;
            }
        }
    }
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut visit);
}

/// Every order- and color-preserving bijection of the ordering onto itself,
/// found by exhaustive search over all permutations.
pub fn automorphisms(o: &FiniteColoredOrdering) -> Vec<Vec<usize>> {
    let n = o.len();
    let mut out = Vec::new();
    for_each_permutation(n, |perm| {
        let color_ok = (0..n).all(|i| o.colors[perm[i]] == o.colors[i]);
        let order_ok = (1..n).all(|i| perm[i - 1] < perm[i]);
        if color_ok && order_ok {
            out.push(perm.to_vec());
        }
    });
    out
}

/// Brute-force homogeneity: every isomorphism between two finite
/// substructures (subsets with the same color sequence, matched in order)
/// must extend to an automorphism.
pub fn is_finite_homogeneous(o: &FiniteColoredOrdering, cap: usize) -> Result<bool, CorrespondenceError> {
    let n = o.len();
    if n > cap {
        return Err(CorrespondenceError::CapExceeded { len: n, cap });
    }
    let autos = automorphisms(o);
    let subsets: Vec<Vec<usize>> = (0u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    for a in &subsets {
        for b in &subsets {
            if a.len() != b.len() || a.iter().zip(b).any(|(&i, &j)| o.colors[i] != o.colors[j]) {
                continue;
            }
            let extends = autos
                .iter()
                .any(|sigma| a.iter().zip(b).all(|(&i, &j)| sigma[i] == j));
            if !extends {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
