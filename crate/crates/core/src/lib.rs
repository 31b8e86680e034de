//! Exact enumeration and counting for homogeneous colored linear orderings
//! and C_{n,m}-homogeneous linear orderings, through their finite encodings
//! as multicolored models.
//!
//! The crate pairs every counting formula with an independent route:
//! brute-force enumeration of models, recurrences, a closed form,
//! exponential generating function coefficients, and a floating-point
//! asymptotic analysis. [`verify`] runs the full set of cross-checks.

pub mod asymptotics;
pub mod combinatorics;
pub mod correspondence;
pub mod count;
pub mod enumerate;
pub mod model;
pub mod series;
pub mod verify;

pub use combinatorics::{BigCount, ExactRational};
pub use count::SequenceId;
pub use model::{
    BlockKind, ColorSet, ColoredDescription, ColoredSegment, FiniteColoredOrdering,
    MulticoloredModel, OrderingDescription, Point, Segment,
};
