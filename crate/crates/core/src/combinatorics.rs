//! Exact integer and rational arithmetic plus the classical counting
//! functions (factorials, binomials, Stirling numbers of the second kind).
//!
//! Binomial and Stirling values live in process-wide triangular tables that
//! grow on demand. Readers take a shared lock; a miss upgrades to the write
//! lock and extends the table row by row, so every caller sees the same
//! values it would get from a fresh computation.

use std::sync::RwLock;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

/// Exact rational in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// `n!`
pub fn factorial(n: usize) -> BigCount {
    (2..=n as u64).fold(BigCount::one(), |acc, i| acc * i)
}

/// Falling factorial products come up in closed forms often enough to be
/// worth a helper: `n (n-1) ... (n-r+1)`.
pub fn falling_factorial(n: usize, r: usize) -> BigCount {
    if r > n {
        return BigCount::zero();
    }
    ((n - r + 1) as u64..=n as u64).fold(BigCount::one(), |acc, i| acc * i)
}

/// A lower-triangular table `rows[n][r]` for `0 <= r <= n`, extended lazily.
struct Triangle {
    rows: RwLock<Vec<Vec<BigCount>>>,
    next_row: fn(&[BigCount], usize) -> Vec<BigCount>,
}

impl Triangle {
    const fn new(next_row: fn(&[BigCount], usize) -> Vec<BigCount>) -> Self {
        Self {
            rows: RwLock::new(Vec::new()),
            next_row,
        }
    }

    fn get(&self, n: usize, r: usize) -> BigCount {
        if r > n {
            return BigCount::zero();
        }
        {
            let rows = self.rows.read().unwrap_or_else(|e| e.into_inner());
            if let Some(row) = rows.get(n) {
                return row[r].clone();
            }
        }
        let mut rows = self.rows.write().unwrap_or_else(|e| e.into_inner());
        while rows.len() <= n {
            let idx = rows.len();
            let row = if idx == 0 {
                vec![BigCount::one()]
            } else {
                (self.next_row)(&rows[idx - 1], idx)
            };
            rows.push(row);
        }
        rows[n][r].clone()
    }
}

fn pascal_row(prev: &[BigCount], n: usize) -> Vec<BigCount> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigCount::one());
    for r in 1..n {
        row.push(&prev[r - 1] + &prev[r]);
    }
    row.push(BigCount::one());
    row
}

// S(n, m) = m S(n-1, m) + S(n-1, m-1), with S(n, 0) = 0 for n > 0.
fn stirling2_row(prev: &[BigCount], n: usize) -> Vec<BigCount> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigCount::zero());
    for m in 1..=n {
        let carried = if m < n { &prev[m] * m } else { BigCount::zero() };
        row.push(carried + &prev[m - 1]);
    }
    row
}

static BINOMIALS: Triangle = Triangle::new(pascal_row);
static STIRLING2: Triangle = Triangle::new(stirling2_row);

/// `C(n, r)`, zero when `r > n`.
pub fn binomial(n: usize, r: usize) -> BigCount {
    BINOMIALS.get(n, r)
}

/// Stirling number of the second kind: partitions of an `n`-set into `m`
/// nonempty blocks. `S(0, 0) = 1`, `S(n, 0) = 0` for `n > 0`, and
/// `S(n, m) = 0` for `m > n`.
pub fn stirling2(n: usize, m: usize) -> BigCount {
    STIRLING2.get(n, m)
}

/// Natural logarithm of a big count, usable far beyond `f64::MAX`.
/// Returns `-inf` for zero.
pub fn ln_big(value: &BigCount) -> f64 {
    use num_traits::ToPrimitive;

    if value.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = value.bits();
    let keep = 1000u64;
    if bits <= keep {
        return value.to_f64().map_or(f64::INFINITY, f64::ln);
    }
    let shift = bits - keep;
    let head = (value >> shift).to_f64().unwrap_or(f64::INFINITY);
    head.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln(n!)` by direct summation. Exact enough for the `n <= 170` range the
/// asymptotic code needs.
pub fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}
