//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails.

use std::io::Write;
use std::time::{Duration, Instant};

use homcount::asymptotics::{approx_a, constants, lambert_w0, ratio_report};
use homcount::combinatorics::{binomial, stirling2, BigCount, ExactRational};
use homcount::correspondence::{
    contract_colored, contract_description, expand_colored, expand_model,
};
use homcount::count::{closed_form_i, count_i, count_l, fubini, j_surjective, k1, k2};
use homcount::enumerate::{
    count_by_enumeration, count_surjective_by_enumeration, enumerate_models,
    surjective_split_by_first_point,
};
use homcount::series::{egf_counts, egf_f, egf_fubini, egf_h, TruncatedSeries};
use homcount::verify::{homogeneity_reduction, A_TERMS, I_TERMS, L_TERMS};
use num_bigint::BigInt;

type Outcome = Result<String, String>;

const CAP: u32 = 7;

fn big(n: u64) -> BigCount {
    BigCount::from(n)
}

fn timed(limit: Option<Duration>, body: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    match (result, limit) {
        (Ok(msg), Some(limit)) if elapsed >= limit => Err(format!(
            "{msg}, but took {elapsed:?} (limit {limit:?})"
        )),
        (Ok(msg), _) => Ok(format!("{msg} in {elapsed:?}")),
        (Err(e), _) => Err(e),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_i_regression() -> Outcome {
    timed(Some(Duration::from_secs(1)), || {
        for (i, want) in I_TERMS.iter().enumerate() {
            let k = i + 1;
            let got = count_i(k);
            ensure(got == big(*want), || format!("I({k}) = {got}, want {want}"))?;
        }
        Ok("I(1..=13) exact".into())
    })
}

fn c2_l_regression() -> Outcome {
    timed(Some(Duration::from_secs(1)), || {
        for (k, want) in L_TERMS.iter().enumerate() {
            let got = count_l(k);
            ensure(got == big(*want), || format!("L({k}) = {got}, want {want}"))?;
        }
        Ok("L(0..=12) exact".into())
    })
}

fn c3_oracle_equivalence() -> Outcome {
    timed(Some(Duration::from_secs(60)), || {
        for k in 1..=7u32 {
            let brute = count_by_enumeration(k, true, CAP).map_err(|e| e.to_string())?;
            let rec = count_i(k as usize);
            ensure(brute == rec, || format!("I({k}): brute {brute} vs {rec}"))?;
        }
        for k in 0..=7u32 {
            let brute = count_by_enumeration(k, false, CAP).map_err(|e| e.to_string())?;
            let rec = count_l(k as usize);
            ensure(brute == rec, || format!("L({k}): brute {brute} vs {rec}"))?;
        }
        Ok("brute force = I for k=1..=7, = L for k=0..=7".into())
    })
}

fn c4_closed_form() -> Outcome {
    timed(None, || {
        for k in 1..=13 {
            let closed = closed_form_i(k);
            ensure(&closed + 1u32 == count_i(k), || {
                format!("k={k}: closed form {closed} + 1 != {}", count_i(k))
            })?;
        }
        for k in 1..=7u32 {
            let nonempty = count_by_enumeration(k, true, CAP).map_err(|e| e.to_string())? - 1u32;
            let closed = closed_form_i(k as usize);
            ensure(closed == nonempty, || format!("k={k}: {closed} vs {nonempty} nonempty"))?;
        }
        Ok("closed form + 1 = I for k=1..=13; = nonempty brute force for k=1..=7".into())
    })
}

fn c5_egf() -> Outcome {
    timed(Some(Duration::from_secs(5)), || {
        let n = 25;
        let (h, f, fub) = (egf_h(n), egf_f(n), egf_fubini(n));
        for k in 0..=n {
            let pairs = [
                ("H", egf_counts(&h, k), count_l(k)),
                ("f", egf_counts(&f, k), j_surjective(k)),
                ("1/(2-e^x)", egf_counts(&fub, k), fubini(k)),
            ];
            for (name, coeff, want) in pairs {
                let coeff = coeff.map_err(|e| e.to_string())?;
                ensure(coeff == want, || format!("{name} k={k}: {coeff} vs {want}"))?;
            }
        }
        Ok("k! [x^k] of H, f, 1/(2-e^x) match L, J, Fubini for k <= 25".into())
    })
}

fn c6_surjective_splits() -> Outcome {
    timed(None, || {
        for k in 0..=6u32 {
            let (s_first, r_first) = surjective_split_by_first_point(k, CAP).map_err(|e| e.to_string())?;
            let ku = k as usize;
            ensure(&s_first + &r_first == k1(ku) + k2(ku), || {
                format!("k={k}: surjective constrained {} vs K1+K2 {}", &s_first + &r_first, k1(ku) + k2(ku))
            })?;
            ensure(s_first == k1(ku) && r_first == k2(ku), || {
                format!("k={k}: S-first/R-first {s_first}/{r_first} vs K1/K2 {}/{}", k1(ku), k2(ku))
            })?;
            let j = count_surjective_by_enumeration(k, false, CAP).map_err(|e| e.to_string())?;
            ensure(j == j_surjective(ku), || format!("k={k}: {j} vs J {}", j_surjective(ku)))?;
        }
        Ok("K1+K2 and J match surjective enumeration for k <= 6".into())
    })
}

fn c7_constants() -> Outcome {
    let start = Instant::now();
    let c = constants();
    let elapsed = start.elapsed();
    let checks = [
        ("Z", c.z, 0.442854, 1e-5),
        ("R", c.r, -0.6089389, 1e-6),
        ("limit ratio", c.limit_ratio, 0.6422007, 1e-6),
        ("M", c.m, 2.12243, 1e-4),
    ];
    for (name, got, want, tol) in checks {
        ensure((got - want).abs() < tol, || format!("{name} = {got}, want {want} ± {tol}"))?;
    }
    ensure(elapsed < Duration::from_millis(1), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "Z={:.7} R={:.8} ratio={:.8} M={:.6} in {elapsed:?}",
        c.z, c.r, c.limit_ratio, c.m
    ))
}

fn c8_approximation() -> Outcome {
    for (k, want) in A_TERMS.iter().enumerate() {
        let got = approx_a(k).map_err(|e| e.to_string())?;
        ensure(((got - want) / want).abs() < 1e-3, || format!("A({k}) = {got}, want {want}"))?;
    }
    Ok("A(0..=4) within 1e-3 relative".into())
}

fn c9_convergence() -> Outcome {
    let rows = ratio_report(12).map_err(|e| e.to_string())?;
    let row = rows[12];
    ensure((row.l_over_a - 1.0).abs() < 1e-8, || format!("L(12)/A(12) = {}", row.l_over_a))?;
    ensure((row.j_over_l - 0.6422007).abs() < 1e-3, || format!("J(12)/L(12) = {}", row.j_over_l))?;
    Ok(format!(
        "|L/A - 1| = {:.2e}, J/L = {:.7}",
        (row.l_over_a - 1.0).abs(),
        row.j_over_l
    ))
}

fn c10_round_trip() -> Outcome {
    timed(Some(Duration::from_secs(10)), || {
        let mut n = 0u64;
        for k in 0..=5u32 {
            for m in enumerate_models(k, true).map_err(|e| e.to_string())? {
                let d = expand_model(&m).map_err(|e| e.to_string())?;
                ensure(d.validate().is_ok(), || format!("{d} fails validation"))?;
                let back = contract_description(&d, k).map_err(|e| e.to_string())?;
                ensure(back == m, || format!("{m} -> {back}"))?;
                n += 1;
            }
            for m in enumerate_models(k, false).map_err(|e| e.to_string())? {
                let d = expand_colored(&m).map_err(|e| e.to_string())?;
                ensure(d.validate().is_ok(), || "colored description invalid".to_string())?;
                let back = contract_colored(&d, k).map_err(|e| e.to_string())?;
                ensure(back == m, || format!("{m} -> {back}"))?;
                n += 1;
            }
        }
        Ok(format!("{n} models round-trip"))
    })
}

fn c11_property_suites() -> Outcome {
    timed(None, || {
        for n in 1..=30 {
            for r in 1..=n {
                ensure(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r), || {
                    format!("Pascal ({n},{r})")
                })?;
                ensure(
                    stirling2(n, r) == stirling2(n - 1, r) * r + stirling2(n - 1, r - 1),
                    || format!("Stirling ({n},{r})"),
                )?;
            }
        }

        // series ring identities on a fixed family of invertible series
        let q = |n: i64, d: i64| ExactRational::new(BigInt::from(n), BigInt::from(d));
        let samples = [
            TruncatedSeries::from_coeffs(vec![q(1, 1), q(-2, 3), q(5, 2), q(0, 1), q(7, 5)]),
            TruncatedSeries::from_coeffs(vec![q(-3, 1), q(1, 4), q(1, 1), q(-1, 2), q(2, 1)]),
            egf_f(4),
            TruncatedSeries::exp(4),
        ];
        for a in &samples {
            let inv = a.reciprocal().map_err(|e| e.to_string())?;
            ensure(&(a * &inv) == &TruncatedSeries::one(4), || format!("a * 1/a != 1 for {a}"))?;
            for b in &samples {
                ensure(a * b == b * a, || "product not commutative".into())?;
                for c in &samples {
                    ensure(&(a * b) * c == a * &(b * c), || "product not associative".into())?;
                    ensure(a * &(b + c) == &(a * b) + &(a * c), || "not distributive".into())?;
                }
            }
        }
        for order in [3, 10, 20] {
            ensure(egf_h(order) == &TruncatedSeries::exp(order) * &egf_f(order), || {
                format!("H != e^x f at order {order}")
            })?;
            let inner = &(&TruncatedSeries::exp(order) + &TruncatedSeries::x(order))
                - &TruncatedSeries::one(order);
            let composed = TruncatedSeries::geometric(order)
                .compose(&inner)
                .map_err(|e| e.to_string())?;
            ensure(egf_f(order) == composed, || format!("f != g2(g1) at order {order}"))?;
        }

        for i in 0..50 {
            let t = 10f64.powf(-6.0 + 12.0 * f64::from(i) / 49.0);
            let w = lambert_w0(t).map_err(|e| e.to_string())?;
            ensure((w * w.exp() - t).abs() <= 1e-12 * t.max(1.0), || format!("W({t})"))?;
        }

        let (ok, detail) = homogeneity_reduction(6, 3);
        ensure(ok, || detail.clone())?;
        Ok(format!(
            "Pascal/Stirling n<=30, series ring laws, Lambert grid (50), homogeneity: {detail}"
        ))
    })
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("1  I-sequence regression", c1_i_regression),
        ("2  L-sequence regression", c2_l_regression),
        ("3  brute-force oracle equivalence", c3_oracle_equivalence),
        ("4  closed-form reconciliation", c4_closed_form),
        ("5  EGF equivalence", c5_egf),
        ("6  surjective splits", c6_surjective_splits),
        ("7  asymptotic constants", c7_constants),
        ("8  A(k) regression", c8_approximation),
        ("9  convergence claims", c9_convergence),
        ("10 round-trip bijection", c10_round_trip),
        ("11 property suites", c11_property_suites),
    ];
    // warm the constant computation once so criterion 7 times the steady state
    let _ = constants();

    // written past the harness capture so the lines show in every run
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let line = match run() {
            Ok(detail) => format!("PASS  {name:<36} {detail}"),
            Err(detail) => {
                failed.push(name);
                format!("FAIL  {name:<36} {detail}")
            }
        };
        writeln!(out, "{line}").unwrap();
    }
    drop(out);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
