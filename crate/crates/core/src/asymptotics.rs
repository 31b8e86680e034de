//! Double-precision singularity analysis of the generating functions: the
//! principal Lambert W branch, the dominant pole and residues, the
//! first-order approximation to `L(k)`, and the growth constant bounding
//! `I(k)`.

use std::f64::consts::{E, LN_2};

use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::{factorial, ln_big, ln_factorial, BigCount};
use crate::count::{count_i, count_l, j_surjective};

/// Largest `k` for which `approx_a` and the ratio report are defined.
pub const MAX_ASYMPTOTIC_K: usize = 170;

/// Base of the exponential growth bound used in `bound_ratio_i`.
pub const GROWTH_BASE: f64 = 2.123;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AsymptoticError {
    #[error("lambert_w0 is only defined here for t >= 0, got {0}")]
    OutOfDomain(f64),
    #[error("k = {k} exceeds the supported range 0..={MAX_ASYMPTOTIC_K}")]
    KOutOfRange { k: usize },
    #[error("A({k}) overflows double precision")]
    Overflow { k: usize },
}

/// Principal branch of the Lambert W function on `t >= 0`, by Halley
/// iteration from `ln(1 + t)`.
pub fn lambert_w0(t: f64) -> Result<f64, AsymptoticError> {
    if t.is_nan() || t < 0.0 {
        return Err(AsymptoticError::OutOfDomain(t));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    if t.is_infinite() {
        return Ok(f64::INFINITY);
    }
    let mut w = t.ln_1p();
    for _ in 0..50 {
        let ew = w.exp();
        let f = w * ew - t;
        let wp1 = w + 1.0;
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if step.abs() < 1e-15 * w.abs().max(1.0) {
            break;
        }
    }
    Ok(w)
}

/// Constants of the dominant-pole analysis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticConstants {
    /// Dominant pole of `e^x/(2-x-e^x)`: `2 - W(e^2)`.
    pub z: f64,
    /// Residue of `e^x/(2-x-e^x)` at `z`.
    pub r: f64,
    /// Residue of `1/(2-x-e^x)` at `z`.
    pub s: f64,
    /// Limiting share of orderings using every color, `s / r = 1/W(e^2)`.
    pub limit_ratio: f64,
    /// Maximizer of the growth-bound expression on `(0, 1/2)`.
    pub p_star: f64,
    /// Value of the growth-bound expression at `p_star`.
    pub m: f64,
}

pub fn constants() -> AsymptoticConstants {
    let e2 = E * E;
    let w = lambert_w0(e2).expect("e^2 is in the domain");
    let ew = w.exp();
    let r = -e2 / (ew + e2);
    let s = -ew / (ew + e2);
    let p_star = p_star();
    AsymptoticConstants {
        z: 2.0 - w,
        r,
        s,
        limit_ratio: s / r,
        p_star,
        m: growth_expression(p_star),
    }
}

/// Binary entropy in bits.
pub fn binary_entropy(x: f64) -> f64 {
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.log2() };
    term(x) + term(1.0 - x)
}

/// `(1/ln 2)^(1-p) * 2^((1-p) H2(p/(1-p)))` for `p` in `[0, 1/2]`.
pub fn growth_expression(p: f64) -> f64 {
    let q = 1.0 - p;
    (1.0 / LN_2).powf(q) * 2f64.powf(q * binary_entropy(p / q))
}

/// `(-1 + sqrt(1 + 4 ln 2)) / (2 sqrt(1 + 4 ln 2))`
pub fn p_star() -> f64 {
    let root = (1.0 + 4.0 * LN_2).sqrt();
    (root - 1.0) / (2.0 * root)
}

/// The maximum of [`growth_expression`], about 2.12243.
pub fn growth_bound_m() -> f64 {
    growth_expression(p_star())
}

/// Grid maximum of [`growth_expression`] over `(0, 1/2)`, returned as
/// `(argmax, max)`. Cross-check for the closed-form maximizer.
pub fn growth_bound_grid(steps: usize) -> (f64, f64) {
    (1..steps)
        .map(|i| {
            let p = 0.5 * i as f64 / steps as f64;
            (p, growth_expression(p))
        })
        .fold((0.0, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best })
}

/// `ln A(k)` where `A(k) = -k! R Z^-(k+1)`.
pub fn ln_approx_a(k: usize) -> Result<f64, AsymptoticError> {
    if k > MAX_ASYMPTOTIC_K {
        return Err(AsymptoticError::KOutOfRange { k });
    }
    let c = constants();
    let ln_fact = if k <= 20 {
        use num_traits::ToPrimitive;
        factorial(k).to_f64().expect("20! fits").ln()
    } else {
        ln_factorial(k)
    };
    Ok(ln_fact + (-c.r).ln() - (k as f64 + 1.0) * c.z.ln())
}

/// First-order approximation `A(k) = -k! R (1/Z)^(k+1)` to `L(k)`.
pub fn approx_a(k: usize) -> Result<f64, AsymptoticError> {
    if k <= 20 {
        use num_traits::ToPrimitive;
        let c = constants();
        let fact = factorial(k).to_f64().expect("20! fits");
        return Ok(-fact * c.r * (1.0 / c.z).powi(k as i32 + 1));
    }
    let value = ln_approx_a(k)?.exp();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(AsymptoticError::Overflow { k })
    }
}

/// `I(k) / (k! * 2.123^k)`.
pub fn bound_ratio_i(k: usize) -> f64 {
    let ln = ln_big(&count_i(k)) - ln_big(&factorial(k)) - k as f64 * GROWTH_BASE.ln();
    ln.exp()
}

fn ratio(num: &BigCount, den: &BigCount) -> f64 {
    (ln_big(num) - ln_big(den)).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioRow {
    pub k: usize,
    /// `L(k) / A(k)`
    pub l_over_a: f64,
    /// `J(k) / L(k)`
    pub j_over_l: f64,
}

/// Convergence table for `k = 0..=k_max`. Ratios are taken in log space so
/// rows stay finite where `A(k)` itself would overflow.
pub fn ratio_report(k_max: usize) -> Result<Vec<RatioRow>, AsymptoticError> {
    if k_max > MAX_ASYMPTOTIC_K {
        return Err(AsymptoticError::KOutOfRange { k: k_max });
    }
    (0..=k_max)
        .map(|k| {
            let l = count_l(k);
            Ok(RatioRow {
                k,
                l_over_a: (ln_big(&l) - ln_approx_a(k)?).exp(),
                j_over_l: ratio(&j_surjective(k), &l),
            })
        })
        .collect()
}
