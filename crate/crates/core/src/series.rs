//! Truncated formal power series over exact rationals, and the exponential
//! generating functions whose coefficients give the model counts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::combinatorics::{factorial, BigCount, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series not invertible: constant term is zero")]
    NotInvertible,
    #[error("cannot compose: inner series has nonzero constant term")]
    NonzeroInnerConstant,
    #[error("coefficient index {k} beyond truncation order {order}")]
    BeyondOrder { k: usize, order: usize },
    #[error("k! [x^{k}] is {value}, not a nonnegative integer")]
    NotACount { k: usize, value: ExactRational },
}

/// `sum_{j <= order} c_j x^j`, exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

fn rational(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

impl TruncatedSeries {
    /// Builds a series from coefficients `c_0..=c_order`. An empty vector is
    /// treated as the order-0 zero series.
    pub fn from_coeffs(mut coeffs: Vec<ExactRational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(ExactRational::zero());
        }
        TruncatedSeries { coeffs }
    }

    pub fn from_integers(order: usize, values: &[i64]) -> Self {
        let coeffs = (0..=order)
            .map(|j| rational(values.get(j).copied().unwrap_or(0)))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![ExactRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, ExactRational::one())
    }

    pub fn constant(order: usize, c: ExactRational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = ExactRational::one();
        }
        s
    }

    /// `e^x`: coefficients `1/j!`.
    pub fn exp(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut fact = BigInt::one();
        for j in 0..=order {
            if j > 0 {
                fact *= j;
            }
            coeffs.push(ExactRational::new(BigInt::one(), fact.clone()));
        }
        TruncatedSeries { coeffs }
    }

    /// `1/(1-x)`: all coefficients one.
    pub fn geometric(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![ExactRational::one(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Option<&ExactRational> {
        self.coeffs.get(j)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// The `b` with `self * b = 1` up to the truncation order.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut b: Vec<ExactRational> = Vec::with_capacity(self.coeffs.len());
        b.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = ExactRational::zero();
            for i in 1..=n {
                acc += &self.coeffs[i] * &b[n - i];
            }
            b.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// `outer(inner(x))`, by Horner's rule. `inner` must vanish at zero.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = TruncatedSeries::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// True when every coefficient is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| c.numer().sign() != Sign::Minus)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|j| &self.coeffs[j] + &rhs.coeffs[j]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|j| &self.coeffs[j] - &rhs.coeffs[j]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Cauchy product truncated to the smaller order.
impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(ExactRational::zero(), |acc, i| {
                    acc + &self.coeffs[i] * &rhs.coeffs[n - i]
                })
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", terms.join(", "))
    }
}

// 2 - x - e^x
fn denominator_h(order: usize) -> TruncatedSeries {
    let two = TruncatedSeries::constant(order, rational(2));
    &(&two - &TruncatedSeries::x(order)) - &TruncatedSeries::exp(order)
}

/// `1/(2 - x - e^x)`: EGF of models using every color, adjacency free.
pub fn egf_f(order: usize) -> TruncatedSeries {
    denominator_h(order)
        .reciprocal()
        .expect("2 - x - e^x has constant term 1")
}

/// `e^x/(2 - x - e^x)`: EGF of all homogeneous colored orderings.
pub fn egf_h(order: usize) -> TruncatedSeries {
    &TruncatedSeries::exp(order) * &egf_f(order)
}

/// `1/(2 - e^x)`: EGF of ordered set partitions.
pub fn egf_fubini(order: usize) -> TruncatedSeries {
    let two = TruncatedSeries::constant(order, rational(2));
    (&two - &TruncatedSeries::exp(order))
        .reciprocal()
        .expect("2 - e^x has constant term 1")
}

/// `k! [x^k] s` as an exact count.
pub fn egf_counts(s: &TruncatedSeries, k: usize) -> Result<BigCount, SeriesError> {
    let c = s.coeff(k).ok_or(SeriesError::BeyondOrder {
        k,
        order: s.order(),
    })?;
    let scaled = c * ExactRational::from_integer(BigInt::from(factorial(k)));
    if !scaled.is_integer() || scaled.numer().sign() == Sign::Minus {
        return Err(SeriesError::NotACount { k, value: scaled });
    }
    Ok(scaled
        .to_integer()
        .to_biguint()
        .expect("sign checked above"))
}
