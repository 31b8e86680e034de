//! Exact counting formulas: the K1/K2 and J recurrences, the I and L
//! sequences, the triple-sum closed form for nonempty models, and Fubini
//! numbers.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, factorial, stirling2, BigCount};

/// Prefix table of a recursively defined sequence, extended on demand.
struct Memo<T: Clone> {
    values: RwLock<Vec<T>>,
    next: fn(&[T]) -> T,
}

impl<T: Clone> Memo<T> {
    const fn new(next: fn(&[T]) -> T) -> Self {
        Memo {
            values: RwLock::new(Vec::new()),
            next,
        }
    }

    fn get(&self, n: usize) -> T {
        {
            let values = self.values.read().unwrap_or_else(|e| e.into_inner());
            if let Some(v) = values.get(n) {
                return v.clone();
            }
        }
        let mut values = self.values.write().unwrap_or_else(|e| e.into_inner());
        while values.len() <= n {
            let v = (self.next)(&values);
            values.push(v);
        }
        values[n].clone()
    }
}

// prev holds (K1(i), K2(i)) for i = 0..=k; produces index k + 1.
fn next_k_pair(prev: &[(BigCount, BigCount)]) -> (BigCount, BigCount) {
    let Some((last_k1, _)) = prev.last() else {
        return (BigCount::one(), BigCount::zero());
    };
    let n = prev.len();
    let k1 = prev
        .iter()
        .enumerate()
        .map(|(i, (a, b))| binomial(n, i) * (a + b))
        .sum();
    let k2 = last_k1 * n;
    (k1, k2)
}

// J(n) = 2 n J(n-1) + sum_{i=2..n} C(n, i) J(n-i)
fn next_j(prev: &[BigCount]) -> BigCount {
    let n = prev.len();
    if n == 0 {
        return BigCount::one();
    }
    let single: BigCount = &prev[n - 1] * (2 * n);
    (2..=n).fold(single, |acc, i| acc + binomial(n, i) * &prev[n - i])
}

// F(n) = sum_{i=1..n} C(n, i) F(n-i)
fn next_fubini(prev: &[BigCount]) -> BigCount {
    let n = prev.len();
    if n == 0 {
        return BigCount::one();
    }
    (1..=n).map(|i| binomial(n, i) * &prev[n - i]).sum()
}

static K_PAIRS: Memo<(BigCount, BigCount)> = Memo::new(next_k_pair);
static J: Memo<BigCount> = Memo::new(next_j);
static FUBINI: Memo<BigCount> = Memo::new(next_fubini);

/// Surjective constrained models whose first point is an S-point (the empty
/// model included at `k = 0`).
pub fn k1(k: usize) -> BigCount {
    K_PAIRS.get(k).0
}

/// Surjective constrained models whose first point is an R-point.
pub fn k2(k: usize) -> BigCount {
    K_PAIRS.get(k).1
}

/// Number of C_{n,m}-homogeneous linear orderings with `n + m + 1 = k`,
/// equivalently all constrained models over `k` colors, the empty one
/// included.
pub fn count_i(k: usize) -> BigCount {
    (0..=k)
        .map(|i| {
            let (a, b) = K_PAIRS.get(i);
            (a + b) * binomial(k, i)
        })
        .sum()
}

/// The triple-sum closed form, evaluated exactly as written. Its outer sum
/// starts at one color, so it counts nonempty models: `closed_form_i(k) + 1
/// == count_i(k)`.
pub fn closed_form_i(k: usize) -> BigCount {
    let mut total = BigCount::zero();
    for m in 1..=k {
        let mut surjective = BigCount::zero();
        for n in 1..=m {
            for r in 0..=n.div_ceil(2) {
                let term = binomial(n - r + 1, r)
                    * binomial(m, r)
                    * factorial(r)
                    * factorial(n - r)
                    * stirling2(m - r, n - r);
                surjective += term;
            }
        }
        total += binomial(k, m) * surjective;
    }
    total
}

/// Unconstrained models using all `k` colors.
pub fn j_surjective(k: usize) -> BigCount {
    J.get(k)
}

/// Number of homogeneous `k`-colored linear orderings, the empty ordering
/// included.
pub fn count_l(k: usize) -> BigCount {
    (0..=k).map(|i| J.get(i) * binomial(k, i)).sum()
}

/// Ordered set partitions of a `k`-set.
pub fn fubini(k: usize) -> BigCount {
    FUBINI.get(k)
}

/// The integer sequences this crate can produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SequenceId {
    I,
    L,
    JSurjective,
    K1,
    K2,
    Fubini,
    IClosedNonempty,
}

impl SequenceId {
    pub const ALL: [SequenceId; 7] = [
        SequenceId::I,
        SequenceId::L,
        SequenceId::JSurjective,
        SequenceId::K1,
        SequenceId::K2,
        SequenceId::Fubini,
        SequenceId::IClosedNonempty,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::I => "I",
            SequenceId::L => "L",
            SequenceId::JSurjective => "J",
            SequenceId::K1 => "K1",
            SequenceId::K2 => "K2",
            SequenceId::Fubini => "Fubini",
            SequenceId::IClosedNonempty => "I_closed_nonempty",
        }
    }

    /// First index of the conventional listing. I and its closed form are
    /// listed from 1, everything else from 0.
    pub fn first_index(self) -> usize {
        match self {
            SequenceId::I | SequenceId::IClosedNonempty => 1,
            _ => 0,
        }
    }

    /// The canonical (recurrence) value.
    pub fn value(self, k: usize) -> BigCount {
        match self {
            SequenceId::I => count_i(k),
            SequenceId::L => count_l(k),
            SequenceId::JSurjective => j_surjective(k),
            SequenceId::K1 => k1(k),
            SequenceId::K2 => k2(k),
            SequenceId::Fubini => fubini(k),
            SequenceId::IClosedNonempty => closed_form_i(k),
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown sequence {0:?} (expected one of I, L, J, K1, K2, Fubini, I_closed_nonempty)")]
pub struct UnknownSequence(pub String);

impl FromStr for SequenceId {
    type Err = UnknownSequence;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let id = match s.to_ascii_lowercase().as_str() {
            "i" => SequenceId::I,
            "l" => SequenceId::L,
            "j" | "j_surjective" => SequenceId::JSurjective,
            "k1" => SequenceId::K1,
            "k2" => SequenceId::K2,
            "fubini" => SequenceId::Fubini,
            "i_closed_nonempty" | "i-closed" | "i_closed" => SequenceId::IClosedNonempty,
            _ => return Err(UnknownSequence(s.to_string())),
        };
        Ok(id)
    }
}
