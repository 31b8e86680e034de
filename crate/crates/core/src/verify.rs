//! The cross-check suite: every counting route against every other, plus
//! regression against the published sequence terms and constants.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::asymptotics::{approx_a, constants, lambert_w0, ratio_report};
use crate::combinatorics::{binomial, stirling2, BigCount};
use crate::correspondence::{
    contract_colored, contract_description, expand_colored, expand_model, is_finite_homogeneous,
};
use crate::count;
use crate::enumerate::{
    count_by_enumeration, count_ordered_set_partitions, count_surjective_by_enumeration,
    enumerate_models, surjective_split_by_first_point, DEFAULT_CAP,
};
use crate::model::FiniteColoredOrdering;
use crate::series::{egf_counts, egf_f, egf_fubini, egf_h, TruncatedSeries};

/// Published terms of `I(k)` for `k = 1..=13`.
pub const I_TERMS: [u64; 13] = [
    3,
    12,
    71,
    558,
    5487,
    64734,
    891039,
    14016774,
    248057927,
    4877703126,
    105504350679,
    2489510252238,
    63638447941551,
];

/// Published terms of `L(k)` for `k = 0..=12`.
pub const L_TERMS: [u64; 13] = [
    1,
    3,
    14,
    95,
    858,
    9687,
    131244,
    2074515,
    37475342,
    761600375,
    17197534296,
    427167206259,
    11574924994554,
];

/// Published approximations `A(k)` for `k = 0..=4`.
pub const A_TERMS: [f64; 5] = [1.37496, 3.10493, 14.0224, 94.9907, 857.986];

pub const Z_PUBLISHED: f64 = 0.442854;
pub const R_PUBLISHED: f64 = -0.6089389;
pub const LIMIT_RATIO_PUBLISHED: f64 = 0.6422007;
pub const M_PUBLISHED: f64 = 2.12243;

/// Largest `k` for which the surjective splits are brute-forced.
pub const SURJECTIVE_K_MAX: usize = 6;
/// Largest `k` for which round trips are checked on every model.
pub const ROUND_TRIP_K_MAX: usize = 5;

/// The counting functions under test. Swapping one out lets a test confirm
/// that a broken formula is caught.
#[derive(Clone, Copy)]
pub struct Counters {
    pub count_i: fn(usize) -> BigCount,
    pub count_l: fn(usize) -> BigCount,
    pub closed_form_i: fn(usize) -> BigCount,
    pub j_surjective: fn(usize) -> BigCount,
    pub k1: fn(usize) -> BigCount,
    pub k2: fn(usize) -> BigCount,
    pub fubini: fn(usize) -> BigCount,
}

impl Default for Counters {
    fn default() -> Self {
        Counters {
            count_i: count::count_i,
            count_l: count::count_l,
            closed_form_i: count::closed_form_i,
            j_surjective: count::j_surjective,
            k1: count::k1,
            k2: count::k2,
            fubini: count::fubini,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub k_max: usize,
    pub series_order: usize,
    pub cap: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            k_max: 7,
            series_order: 25,
            cap: DEFAULT_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub tolerance: String,
    pub detail: String,
    pub passed: bool,
    pub millis: u128,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<28} [{}] {} ({} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.tolerance,
            self.detail,
            self.millis
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
    }
}

/// Outcome of comparing two exact sequences over a range of `k`.
fn compare_exact(
    ks: impl IntoIterator<Item = usize>,
    mut pair: impl FnMut(usize) -> Result<(BigCount, BigCount), String>,
) -> (bool, String) {
    let mut lo = None;
    let mut hi = 0;
    for k in ks {
        lo.get_or_insert(k);
        hi = k;
        match pair(k) {
            Ok((got, want)) if got == want => {}
            Ok((got, want)) => return (false, format!("k={k}: {got} != {want}")),
            Err(e) => return (false, format!("k={k}: {e}")),
        }
    }
    match lo {
        Some(lo) => (true, format!("k={lo}..={hi} agree")),
        None => (true, "no k in range".to_string()),
    }
}

fn within(got: f64, want: f64, tol: f64) -> (bool, String) {
    let ok = (got - want).abs() < tol;
    (ok, format!("{got:.10} vs {want}"))
}

struct Runner {
    report: Report,
}

impl Runner {
    fn run(&mut self, name: &'static str, tolerance: &str, body: impl FnOnce() -> (bool, String)) {
        let start = Instant::now();
        let (passed, detail) = body();
        self.report.checks.push(Check {
            name,
            tolerance: tolerance.to_string(),
            detail,
            passed,
            millis: start.elapsed().as_millis(),
        });
    }

    // Runs only when the k-range is nonempty.
    fn exact(
        &mut self,
        name: &'static str,
        ks: std::ops::RangeInclusive<usize>,
        pair: impl FnMut(usize) -> Result<(BigCount, BigCount), String>,
    ) {
        if ks.is_empty() {
            return;
        }
        self.run(name, "exact", || compare_exact(ks, pair));
    }
}

fn big(n: u64) -> BigCount {
    BigCount::from(n)
}

/// Runs every cross-check whose range is nonempty for the given bounds.
pub fn run_checks(config: &VerifyConfig, counters: &Counters) -> Report {
    let mut r = Runner {
        report: Report::default(),
    };
    let k_max = config.k_max;
    let cap = config.cap;
    let brute_max = k_max.min(cap as usize);
    let c = *counters;

    r.exact("I-published-terms", 1..=k_max.min(13), |k| {
        Ok(((c.count_i)(k), big(I_TERMS[k - 1])))
    });
    r.exact("L-published-terms", 0..=k_max.min(12), |k| {
        Ok(((c.count_l)(k), big(L_TERMS[k])))
    });
    r.exact("I-vs-brute-force", 1..=brute_max, |k| {
        let brute = count_by_enumeration(k as u32, true, cap).map_err(|e| e.to_string())?;
        Ok(((c.count_i)(k), brute))
    });
    r.exact("L-vs-brute-force", 0..=brute_max, |k| {
        let brute = count_by_enumeration(k as u32, false, cap).map_err(|e| e.to_string())?;
        Ok(((c.count_l)(k), brute))
    });
    r.exact("I-closed-form-plus-one", 1..=k_max, |k| {
        Ok(((c.closed_form_i)(k) + 1u32, (c.count_i)(k)))
    });
    r.exact("I-closed-form-vs-nonempty", 1..=brute_max, |k| {
        let brute = count_by_enumeration(k as u32, true, cap).map_err(|e| e.to_string())?;
        Ok(((c.closed_form_i)(k), brute - 1u32))
    });
    r.exact("K1-vs-S-first-surjective", 0..=brute_max.min(SURJECTIVE_K_MAX), |k| {
        let (s_first, _) = surjective_split_by_first_point(k as u32, cap).map_err(|e| e.to_string())?;
        Ok(((c.k1)(k), s_first))
    });
    r.exact("K2-vs-R-first-surjective", 0..=brute_max.min(SURJECTIVE_K_MAX), |k| {
        let (_, r_first) = surjective_split_by_first_point(k as u32, cap).map_err(|e| e.to_string())?;
        Ok(((c.k2)(k), r_first))
    });
    r.exact("J-vs-brute-force", 0..=brute_max.min(SURJECTIVE_K_MAX), |k| {
        let brute =
            count_surjective_by_enumeration(k as u32, false, cap).map_err(|e| e.to_string())?;
        Ok(((c.j_surjective)(k), brute))
    });
    r.exact("Fubini-vs-brute-force", 0..=brute_max, |k| {
        let brute = count_ordered_set_partitions(k as u32, cap).map_err(|e| e.to_string())?;
        Ok(((c.fubini)(k), brute))
    });
    r.exact("L-binomial-transform-of-J", 0..=k_max, |k| {
        let transform: BigCount = (0..=k).map(|i| binomial(k, i) * (c.j_surjective)(i)).sum();
        Ok(((c.count_l)(k), transform))
    });

    let order = config.series_order;
    let (h, f, fub) = (egf_h(order), egf_f(order), egf_fubini(order));
    for (name, series, target) in [
        ("EGF-H-vs-L", &h, c.count_l),
        ("EGF-f-vs-J", &f, c.j_surjective),
        ("EGF-Fubini-vs-recurrence", &fub, c.fubini),
    ] {
        r.exact(name, 0..=order, |k| {
            let coeff = egf_counts(series, k).map_err(|e| e.to_string())?;
            Ok((coeff, target(k)))
        });
    }
    r.run("EGF-H-equals-exp-times-f", "exact", || {
        let ok = h == &TruncatedSeries::exp(order) * &f;
        (ok, format!("order {order}"))
    });

    let consts = constants();
    r.run("Z-dominant-pole", "1e-5", || within(consts.z, Z_PUBLISHED, 1e-5));
    r.run("R-residue", "1e-6", || within(consts.r, R_PUBLISHED, 1e-6));
    r.run("limit-ratio", "1e-6", || {
        within(consts.limit_ratio, LIMIT_RATIO_PUBLISHED, 1e-6)
    });
    r.run("growth-bound-M", "1e-4", || within(consts.m, M_PUBLISHED, 1e-4));
    r.run("pole-identity", "1e-12", || {
        within(2.0 - consts.z - consts.z.exp(), 0.0, 1e-12)
    });
    r.run("lambert-defining-identity", "1e-12 rel", || {
        for i in 0..50 {
            let t = 10f64.powf(-6.0 + 12.0 * f64::from(i) / 49.0);
            let w = lambert_w0(t).expect("t > 0");
            if (w * w.exp() - t).abs() > 1e-12 * t.max(1.0) {
                return (false, format!("t={t}: w={w}"));
            }
        }
        (true, "50 grid points in [1e-6, 1e6]".to_string())
    });

    let top = k_max.min(A_TERMS.len() - 1);
    r.run("A-published-terms", "1e-3 rel", || {
        for (k, want) in A_TERMS.iter().enumerate().take(top + 1) {
            let got = approx_a(k).expect("k <= 4");
            if ((got - want) / want).abs() >= 1e-3 {
                return (false, format!("k={k}: {got} vs {want}"));
            }
        }
        (true, format!("k=0..={top} agree"))
    });
    if k_max >= 12 {
        let rows = ratio_report(12).expect("12 <= 170");
        let row = rows[12];
        r.run("L-over-A-at-12", "1e-8", || within(row.l_over_a, 1.0, 1e-8));
        r.run("J-over-L-at-12", "1e-3", || {
            within(row.j_over_l, LIMIT_RATIO_PUBLISHED, 1e-3)
        });
    }

    let trip_max = brute_max.min(ROUND_TRIP_K_MAX) as u32;
    r.run("round-trip-bijection", "exact", || round_trips(trip_max));

    r.run("pascal-and-stirling", "exact", || {
        for n in 1..=30 {
            for k in 1..=n {
                if binomial(n, k) != binomial(n - 1, k - 1) + binomial(n - 1, k) {
                    return (false, format!("Pascal fails at ({n},{k})"));
                }
                if stirling2(n, k) != stirling2(n - 1, k) * k + stirling2(n - 1, k - 1) {
                    return (false, format!("Stirling fails at ({n},{k})"));
                }
            }
        }
        (true, "n <= 30".to_string())
    });
    r.run("finite-homogeneity-reduction", "exact", || homogeneity_reduction(6, 3));

    r.report
}

fn round_trips(k_max: u32) -> (bool, String) {
    let mut checked = 0u64;
    for k in 0..=k_max {
        for constrained in [true, false] {
            let models = match enumerate_models(k, constrained) {
                Ok(m) => m,
                Err(e) => return (false, e.to_string()),
            };
            for m in models {
                let back = if constrained {
                    // contract_description rejects descriptions that fail validation
                    expand_model(&m).and_then(|d| contract_description(&d, k))
                } else {
                    expand_colored(&m).and_then(|d| contract_colored(&d, k))
                };
                match back {
                    Ok(back) if back == m => checked += 1,
                    Ok(back) => return (false, format!("{m} came back as {back}")),
                    Err(e) => return (false, format!("{m}: {e}")),
                }
            }
        }
    }
    (true, format!("{checked} models, k=0..={k_max}"))
}

/// Brute-force homogeneity against "all colors distinct" on every ordering
/// of length at most `max_len` over at most `colors` colors.
pub fn homogeneity_reduction(max_len: usize, colors: u32) -> (bool, String) {
    let mut checked = 0u64;
    for len in 0..=max_len {
        let total = (colors as usize).pow(len as u32);
        for code in 0..total {
            let mut rest = code;
            let seq: Vec<u32> = (0..len)
                .map(|_| {
                    let c = (rest % colors as usize) as u32 + 1;
                    rest /= colors as usize;
                    c
                })
                .collect();
            let mut sorted = seq.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let distinct = sorted.len() == seq.len();
            let o = FiniteColoredOrdering::new(seq);
            match is_finite_homogeneous(&o, max_len) {
                Ok(h) if h == distinct => checked += 1,
                Ok(h) => return (false, format!("{:?}: brute force says {h}", o.colors)),
                Err(e) => return (false, e.to_string()),
            }
        }
    }
    (true, format!("{checked} orderings"))
}
