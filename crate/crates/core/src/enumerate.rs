//! Exhaustive generation of multicolored models in canonical order.
//!
//! Models are produced length by length. Within a length the generator is a
//! depth-first walk over the first point (its tag, then its colors) with the
//! candidates at every depth listed in point order, so the stream comes out
//! sorted by [`canonical_compare`](crate::model::canonical_compare) without
//! ever being materialized.

use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::combinatorics::BigCount;
use crate::model::{ColorSet, ModelError, MulticoloredModel, Point};

/// Largest `k` accepted by the brute-force counters unless overridden.
pub const DEFAULT_CAP: u32 = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("k = {k} exceeds the brute-force cap of {cap} (raise it with --cap or HOMCOUNT_CAP)")]
    CapExceeded { k: u32, cap: u32 },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Which family of models a generator walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Family {
    constrained: bool,
    allow_r: bool,
    surjective: bool,
}

impl Family {
    const fn models(constrained: bool) -> Self {
        Family {
            constrained,
            allow_r: true,
            surjective: false,
        }
    }
}

/// Every nonempty subset of `avail`, in lexicographic order of the sorted
/// color lists.
fn subsets_lex(avail: ColorSet, out: &mut Vec<Point>) {
    fn go(colors: &[u32], start: usize, current: ColorSet, out: &mut Vec<Point>) {
        for i in start..colors.len() {
            let next = ColorSet::from_bits(current.bits() | 1u64 << (colors[i] - 1));
            out.push(Point::s(next));
            go(colors, i + 1, next, out);
        }
    }
    let colors = avail.to_vec();
    go(&colors, 0, ColorSet::EMPTY, out);
}

fn candidates(avail: ColorSet, prev_was_r: bool, family: Family) -> Vec<Point> {
    let mut out = Vec::new();
    if family.allow_r && !(family.constrained && prev_was_r) {
        out.extend(avail.iter().map(Point::r));
    }
    subsets_lex(avail, &mut out);
    out
}

struct Frame {
    avail: ColorSet,
    candidates: Vec<Point>,
    next: usize,
}

/// Lazy, canonically ordered stream of models.
pub struct Models {
    k: u32,
    full: ColorSet,
    family: Family,
    len: usize,
    max_len: usize,
    fresh: bool,
    done: bool,
    stack: Vec<Frame>,
    points: Vec<Point>,
    leaf_avail: ColorSet,
}

impl Models {
    fn new(k: u32, family: Family) -> Result<Self, ModelError> {
        let full = ColorSet::full(k)?;
        Ok(Models {
            k,
            full,
            family,
            len: 0,
            max_len: k as usize,
            fresh: true,
            done: false,
            stack: Vec::new(),
            points: Vec::new(),
            leaf_avail: full,
        })
    }

    /// Only the models of exactly `len` points whose first point is `first`.
    fn subtree(k: u32, family: Family, len: usize, first: Point) -> Result<Self, ModelError> {
        let mut models = Self::new(k, family)?;
        models.len = len;
        models.max_len = len;
        models.fresh = false;
        models.stack.push(Frame {
            avail: models.full,
            candidates: vec![first],
            next: 0,
        });
        Ok(models)
    }

    // Moves to the next sequence of exactly `self.len` points; false when the
    // current length is exhausted.
    fn next_sequence(&mut self) -> bool {
        if self.fresh {
            self.fresh = false;
            self.stack.clear();
            self.points.clear();
            if self.len == 0 {
                self.leaf_avail = self.full;
                return true;
            }
            self.stack.push(Frame {
                avail: self.full,
                candidates: candidates(self.full, false, self.family),
                next: 0,
            });
        }
        while let Some(frame) = self.stack.last_mut() {
            if frame.next == frame.candidates.len() {
                self.stack.pop();
                continue;
            }
            let point = frame.candidates[frame.next];
            frame.next += 1;
            let avail = frame.avail.difference(point.colors());
            let depth = self.stack.len() - 1;
            self.points.truncate(depth);
            self.points.push(point);

            let remaining = self.len - self.points.len();
            if remaining == 0 {
                self.leaf_avail = avail;
                return true;
            }
            if avail.len() as usize >= remaining {
                self.stack.push(Frame {
                    avail,
                    candidates: candidates(avail, point.is_r(), self.family),
                    next: 0,
                });
            }
        }
        false
    }

    /// Advances without cloning; the returned slice is the next model's points.
    pub fn advance(&mut self) -> Option<&[Point]> {
        loop {
            if self.done {
                return None;
            }
            if !self.next_sequence() {
                self.len += 1;
                self.fresh = true;
                if self.len > self.max_len {
                    self.done = true;
                }
                continue;
            }
            if self.family.surjective && !self.leaf_avail.is_empty() {
                continue;
            }
            return Some(&self.points);
        }
    }

    /// Number of remaining models, consuming the stream.
    pub fn count_remaining(mut self) -> u64 {
        let mut n = 0;
        while self.advance().is_some() {
            n += 1;
        }
        n
    }
}

impl Iterator for Models {
    type Item = MulticoloredModel;

    fn next(&mut self) -> Option<MulticoloredModel> {
        let k = self.k;
        let constrained = self.family.constrained;
        self.advance()
            .map(|points| MulticoloredModel::new(k, constrained, points.to_vec()))
    }
}

fn check_cap(k: u32, cap: u32) -> Result<(), EnumerateError> {
    if k > cap {
        Err(EnumerateError::CapExceeded { k, cap })
    } else {
        Ok(())
    }
}

/// Every model over colors `1..=k` (constrained: no two adjacent R-points),
/// including the empty model, in canonical order.
pub fn enumerate_models(k: u32, constrained: bool) -> Result<Models, ModelError> {
    Models::new(k, Family::models(constrained))
}

/// The models that use every one of the `k` colors.
pub fn enumerate_surjective(k: u32, constrained: bool) -> Result<Models, ModelError> {
    Models::new(
        k,
        Family {
            surjective: true,
            ..Family::models(constrained)
        },
    )
}

/// Ordered set partitions of `{1..k}` as all-S-point models using every
/// color. The produced models carry `adjacency_constrained = false`.
pub fn enumerate_ordered_set_partitions(k: u32, cap: u32) -> Result<Models, EnumerateError> {
    check_cap(k, cap)?;
    Ok(Models::new(
        k,
        Family {
            constrained: false,
            allow_r: false,
            surjective: true,
        },
    )?)
}

// Splits the walk by (length, first point) and counts the pieces in
// parallel. The sum does not depend on scheduling.
fn parallel_count(k: u32, family: Family) -> Result<BigCount, ModelError> {
    let full = ColorSet::full(k)?;
    let mut tasks = Vec::new();
    for len in 1..=k as usize {
        for first in candidates(full, false, family) {
            tasks.push((len, first));
        }
    }
    let empty_counts = !family.surjective || k == 0;
    let total: u64 = tasks
        .into_par_iter()
        .map(|(len, first)| {
            Models::subtree(k, family, len, first)
                .map(Models::count_remaining)
                .unwrap_or(0)
        })
        .sum();
    Ok(BigCount::from(total) + u64::from(empty_counts))
}

/// Brute-force model count, refusing `k` above `cap`.
pub fn count_by_enumeration(k: u32, constrained: bool, cap: u32) -> Result<BigCount, EnumerateError> {
    check_cap(k, cap)?;
    Ok(parallel_count(k, Family::models(constrained))?)
}

/// Brute-force count of models using all `k` colors.
pub fn count_surjective_by_enumeration(
    k: u32,
    constrained: bool,
    cap: u32,
) -> Result<BigCount, EnumerateError> {
    check_cap(k, cap)?;
    Ok(parallel_count(
        k,
        Family {
            surjective: true,
            ..Family::models(constrained)
        },
    )?)
}

/// Surjective constrained models split by the tag of the first point:
/// `(s_first, r_first)`. The empty model (k = 0) counts as S-first, matching
/// the base case `K1(0) = 1, K2(0) = 0`.
pub fn surjective_split_by_first_point(k: u32, cap: u32) -> Result<(BigCount, BigCount), EnumerateError> {
    check_cap(k, cap)?;
    let mut models = enumerate_surjective(k, true)?;
    let (mut s_first, mut r_first) = (0u64, 0u64);
    while let Some(points) = models.advance() {
        match points.first() {
            Some(p) if p.is_r() => r_first += 1,
            _ => s_first += 1,
        }
    }
    Ok((s_first.into(), r_first.into()))
}

/// Brute-force count of ordered set partitions of a `k`-set.
pub fn count_ordered_set_partitions(k: u32, cap: u32) -> Result<BigCount, EnumerateError> {
    check_cap(k, cap)?;
    let family = Family {
        constrained: false,
        allow_r: false,
        surjective: true,
    };
    let count = parallel_count(k, family)?;
    debug_assert!(k == 0 || !count.is_zero());
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use crate::model::canonical_compare;
    use std::cmp::Ordering;
    use std::collections::BTreeSet;

    fn set(colors: &[u32]) -> ColorSet {
        ColorSet::from_colors(colors.iter().copied()).unwrap()
    }

    // Naive generator: every sequence of at most k points over every tag and
    // color assignment, filtered by the validator.
    fn naive_models(k: u32, constrained: bool) -> BTreeSet<Vec<Point>> {
        let mut pts: Vec<Point> = (1..=k).map(Point::r).collect();
        for bits in 1..(1u64 << k) {
            pts.push(Point::s(ColorSet::from_bits(bits)));
        }
        let mut out = BTreeSet::new();
        let mut frontier: Vec<Vec<Point>> = vec![Vec::new()];
        for _ in 0..=k {
            let mut next = Vec::new();
            for seq in &frontier {
                let m = MulticoloredModel::new(k, constrained, seq.clone());
                if m.validate().is_ok() {
                    out.insert(seq.clone());
                }
                for p in &pts {
                    let mut s = seq.clone();
                    s.push(*p);
                    next.push(s);
                }
            }
            frontier = next;
        }
        out
    }

    fn big(n: u64) -> BigCount {
        BigCount::from(n)
    }

    #[test]
    fn k_zero_yields_only_the_empty_model() {
        let all: Vec<_> = enumerate_models(0, true).unwrap().collect();
        assert_eq!(all, vec![MulticoloredModel::empty(0, true)]);
    }

    #[test]
    fn k_one_models() {
        let all: Vec<_> = enumerate_models(1, true).unwrap().map(|m| m.points).collect();
        assert_eq!(
            all,
            vec![vec![], vec![Point::r(1)], vec![Point::s(set(&[1]))]]
        );
        assert_eq!(enumerate_models(1, false).unwrap().count(), 3);
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_by_enumeration(2, true, DEFAULT_CAP).unwrap(), big(12));
        assert_eq!(count_by_enumeration(2, false, DEFAULT_CAP).unwrap(), big(14));
        assert_eq!(count_by_enumeration(3, true, DEFAULT_CAP).unwrap(), big(71));
        assert_eq!(count_by_enumeration(0, false, DEFAULT_CAP).unwrap(), big(1));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            count_by_enumeration(8, true, DEFAULT_CAP),
            Err(EnumerateError::CapExceeded { k: 8, cap: 7 })
        );
        assert!(enumerate_ordered_set_partitions(3, 2).is_err());
        assert!(count_ordered_set_partitions(9, 7).is_err());
    }

    #[test]
    fn surjective_examples() {
        let one: Vec<_> = enumerate_surjective(1, true).unwrap().map(|m| m.points).collect();
        assert_eq!(one, vec![vec![Point::r(1)], vec![Point::s(set(&[1]))]]);
        assert_eq!(enumerate_surjective(0, true).unwrap().count(), 1);
        assert_eq!(enumerate_surjective(2, false).unwrap().count(), 9);
        assert_eq!(count_surjective_by_enumeration(2, false, 7).unwrap(), big(9));
        assert_eq!(count_surjective_by_enumeration(0, true, 7).unwrap(), big(1));
        assert_eq!(surjective_split_by_first_point(1, 7).unwrap(), (big(1), big(1)));
        assert_eq!(surjective_split_by_first_point(0, 7).unwrap(), (big(1), big(0)));
    }

    #[test]
    fn ordered_set_partitions() {
        let two: Vec<_> = enumerate_ordered_set_partitions(2, 7)
            .unwrap()
            .map(|m| m.points)
            .collect();
        assert_eq!(
            two,
            vec![
                vec![Point::s(set(&[1, 2]))],
                vec![Point::s(set(&[1])), Point::s(set(&[2]))],
                vec![Point::s(set(&[2])), Point::s(set(&[1]))],
            ]
        );
        assert_eq!(enumerate_ordered_set_partitions(0, 7).unwrap().count(), 1);
        assert_eq!(enumerate_ordered_set_partitions(3, 7).unwrap().count(), 13);
        assert_eq!(count_ordered_set_partitions(3, 7).unwrap(), big(13));
    }

    #[test]
    fn matches_naive_generator() {
        for k in 0..=3 {
            for constrained in [true, false] {
                let fast: Vec<Vec<Point>> = enumerate_models(k, constrained)
                    .unwrap()
                    .map(|m| m.points)
                    .collect();
                let unique: BTreeSet<_> = fast.iter().cloned().collect();
                assert_eq!(unique.len(), fast.len(), "duplicates at k={k}");
                assert_eq!(unique, naive_models(k, constrained), "k={k} constrained={constrained}");
            }
        }
    }

    #[test]
    fn stream_is_canonically_sorted_and_valid() {
        for k in 0..=4 {
            for constrained in [true, false] {
                let all: Vec<_> = enumerate_models(k, constrained).unwrap().collect();
                for m in &all {
                    assert!(m.validate().is_ok(), "{m}");
                }
                for w in all.windows(2) {
                    assert_eq!(canonical_compare(&w[0], &w[1]).unwrap(), Ordering::Less);
                }
            }
        }
    }

    #[test]
    fn parallel_and_sequential_counts_agree() {
        for k in 0..=5 {
            for constrained in [true, false] {
                let sequential = enumerate_models(k, constrained).unwrap().count_remaining();
                assert_eq!(count_by_enumeration(k, constrained, 7).unwrap(), big(sequential));
                let a: Vec<_> = enumerate_models(k, constrained).unwrap().collect();
                let b: Vec<_> = enumerate_models(k, constrained).unwrap().collect();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn models_partition_by_used_colors() {
        for k in 0..=5u32 {
            for constrained in [true, false] {
                let total = count_by_enumeration(k, constrained, 7).unwrap();
                let by_parts: BigCount = (0..=k)
                    .map(|i| {
                        binomial(k as usize, i as usize)
                            * count_surjective_by_enumeration(i, constrained, 7).unwrap()
                    })
                    .sum();
                assert_eq!(total, by_parts, "k={k}");
            }
        }
    }

    #[test]
    fn surjective_stream_is_a_filter_of_the_full_stream() {
        for k in 0..=4 {
            let full = ColorSet::full(k).unwrap();
            let filtered: Vec<_> = enumerate_models(k, true)
                .unwrap()
                .filter(|m| m.used_colors() == full)
                .collect();
            let direct: Vec<_> = enumerate_surjective(k, true).unwrap().collect();
            assert_eq!(filtered, direct);
        }
    }
}
