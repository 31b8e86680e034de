use std::io::{Read, Write};
use std::path::Path;

use homcount::asymptotics::{self, bound_ratio_i, constants, ln_approx_a, ratio_report};
use homcount::correspondence::{
    classify_cnm, contract_colored, contract_description, expand_colored, expand_model,
    is_finite_homogeneous, Bound,
};
use homcount::count::{self, SequenceId};
use homcount::enumerate::{self, Models, DEFAULT_CAP};
use homcount::model::{ColoredDescription, MulticoloredModel, OrderingDescription};
use homcount::series::{egf_counts, egf_f, egf_fubini, egf_h, TruncatedSeries};
use homcount::verify::{run_checks, Counters, VerifyConfig};
use homcount::{BigCount, FiniteColoredOrdering};

use crate::format;
use crate::{CapArg, CliError, ExportFormat, Method, SeriesName};

/// Largest k accepted by the recurrence-based commands.
const MAX_RECURRENCE_K: usize = 1000;
/// Largest k for the closed form and the generating functions, whose cost
/// grows much faster.
const MAX_SERIES_K: usize = 200;

type CmdResult = Result<u8, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn io_error(e: std::io::Error) -> CliError {
    CliError::Runtime(format!("I/O error: {e}"))
}

/// `--cap`, then `HOMCOUNT_CAP`, then the default.
pub fn resolve_cap(arg: &CapArg) -> Result<u32, CliError> {
    if let Some(cap) = arg.cap {
        return Ok(cap);
    }
    match std::env::var("HOMCOUNT_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("HOMCOUNT_CAP must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn enum_err(e: enumerate::EnumerateError) -> CliError {
    usage(e.to_string())
}

fn brute_force(sequence: SequenceId, k: usize, cap: u32) -> Result<BigCount, CliError> {
    let k32 = u32::try_from(k).map_err(|_| usage(format!("k = {k} is too large")))?;
    if k32 > cap {
        return Err(enum_err(enumerate::EnumerateError::CapExceeded { k: k32, cap }));
    }
    let value = match sequence {
        SequenceId::I => enumerate::count_by_enumeration(k32, true, cap),
        SequenceId::L => enumerate::count_by_enumeration(k32, false, cap),
        SequenceId::JSurjective => enumerate::count_surjective_by_enumeration(k32, false, cap),
        SequenceId::K1 => enumerate::surjective_split_by_first_point(k32, cap).map(|s| s.0),
        SequenceId::K2 => enumerate::surjective_split_by_first_point(k32, cap).map(|s| s.1),
        SequenceId::Fubini => enumerate::count_ordered_set_partitions(k32, cap),
        SequenceId::IClosedNonempty => {
            enumerate::count_by_enumeration(k32, true, cap).map(|n| n - 1u32)
        }
    };
    value.map_err(enum_err)
}

fn check_k(k: usize, limit: usize) -> Result<(), CliError> {
    if k > limit {
        Err(usage(format!("k = {k} exceeds the supported maximum of {limit} for this method")))
    } else {
        Ok(())
    }
}

pub fn count(out: &mut impl Write, sequence: SequenceId, k: usize, method: Method, cap: u32) -> CmdResult {
    let invalid = || {
        usage(format!(
            "method {} does not apply to sequence {sequence}",
            match method {
                Method::Recurrence => "recurrence",
                Method::ClosedForm => "closed-form",
                Method::Egf => "egf",
                Method::BruteForce => "brute-force",
            }
        ))
    };
    let (value, label, note) = match method {
        Method::Recurrence => {
            if sequence == SequenceId::IClosedNonempty {
                return Err(invalid());
            }
            check_k(k, MAX_RECURRENCE_K)?;
            (sequence.value(k), "recurrence", None)
        }
        Method::ClosedForm => {
            check_k(k, MAX_SERIES_K)?;
            match sequence {
                SequenceId::I => {
                    let value = count::closed_form_i(k);
                    let note = format!(
                        "note: excludes the empty ordering; recurrence value is +1 ({})",
                        &value + 1u32
                    );
                    (value, "closed-form", Some(note))
                }
                SequenceId::IClosedNonempty => (count::closed_form_i(k), "closed-form", None),
                _ => return Err(invalid()),
            }
        }
        Method::Egf => {
            check_k(k, MAX_SERIES_K)?;
            let series = match sequence {
                SequenceId::L => egf_h(k),
                SequenceId::JSurjective => egf_f(k),
                SequenceId::Fubini => egf_fubini(k),
                _ => return Err(invalid()),
            };
            let value = egf_counts(&series, k).map_err(|e| CliError::Runtime(e.to_string()))?;
            (value, "egf", None)
        }
        Method::BruteForce => (brute_force(sequence, k, cap)?, "brute-force", None),
    };
    writeln!(out, "{sequence}({k}) = {value} ({label})").map_err(io_error)?;
    if let Some(note) = note {
        writeln!(out, "{note}").map_err(io_error)?;
    }
    Ok(0)
}

pub struct EnumerateRequest {
    pub k: u32,
    pub constrained: bool,
    pub surjective: bool,
    pub partitions: bool,
    pub count_only: bool,
    pub cap: u32,
}

pub fn enumerate(out: &mut impl Write, req: EnumerateRequest) -> CmdResult {
    if req.k > req.cap {
        return Err(enum_err(enumerate::EnumerateError::CapExceeded {
            k: req.k,
            cap: req.cap,
        }));
    }
    let model_err = |e: homcount::model::ModelError| usage(e.to_string());
    let mut models: Models = if req.partitions {
        enumerate::enumerate_ordered_set_partitions(req.k, req.cap).map_err(enum_err)?
    } else if req.surjective {
        enumerate::enumerate_surjective(req.k, req.constrained).map_err(model_err)?
    } else {
        enumerate::enumerate_models(req.k, req.constrained).map_err(model_err)?
    };
    if req.count_only {
        writeln!(out, "{}", models.count_remaining()).map_err(io_error)?;
        return Ok(0);
    }
    for model in &mut models {
        let line = serde_json::to_string(&model).expect("models serialize");
        writeln!(out, "{line}").map_err(io_error)?;
    }
    Ok(0)
}

pub fn verify(out: &mut impl Write, k_max: usize, terms: usize, json: bool, cap: u32) -> CmdResult {
    check_k(terms, MAX_SERIES_K)?;
    let config = VerifyConfig {
        k_max,
        series_order: terms,
        cap,
    };
    let report = run_checks(&config, &Counters::default());
    if json {
        let doc = serde_json::to_string_pretty(&report).expect("report serializes");
        writeln!(out, "{doc}").map_err(io_error)?;
    } else {
        writeln!(out, "{report}").map_err(io_error)?;
    }
    Ok(report.exit_code() as u8)
}

pub fn export(
    out: &mut impl Write,
    sequence: SequenceId,
    k_max: usize,
    fmt: ExportFormat,
    output: Option<&Path>,
) -> CmdResult {
    let first = sequence.first_index();
    if k_max < first {
        return Err(usage(format!("{sequence} is listed from k = {first}; --k-max must be at least {first}")));
    }
    let limit = if sequence == SequenceId::IClosedNonempty {
        MAX_SERIES_K
    } else {
        MAX_RECURRENCE_K
    };
    check_k(k_max, limit)?;
    let terms: Vec<(usize, BigCount)> = (first..=k_max).map(|k| (k, sequence.value(k))).collect();
    let text = match fmt {
        ExportFormat::BFile => format::b_file(&terms),
        ExportFormat::Csv => format::csv(&terms),
        ExportFormat::Json => format::json(sequence, &terms),
    };
    match output {
        Some(path) => std::fs::write(path, text).map_err(io_error)?,
        None => out.write_all(text.as_bytes()).map_err(io_error)?,
    }
    Ok(0)
}

pub fn series(out: &mut impl Write, name: SeriesName, terms: usize) -> CmdResult {
    check_k(terms, MAX_SERIES_K)?;
    let s = match name {
        SeriesName::H => egf_h(terms),
        SeriesName::F => egf_f(terms),
        SeriesName::Fubini => egf_fubini(terms),
        SeriesName::Exp => TruncatedSeries::exp(terms),
        SeriesName::Geometric => TruncatedSeries::geometric(terms),
    };
    writeln!(out, "{:>4}  {:>40}  {}", "k", "[x^k]", "k! [x^k]").map_err(io_error)?;
    for (k, c) in s.coeffs().iter().enumerate() {
        let count = egf_counts(&s, k).map_or_else(|_| "-".to_string(), |v| v.to_string());
        writeln!(out, "{k:>4}  {:>40}  {count}", c.to_string()).map_err(io_error)?;
    }
    Ok(0)
}

pub fn asymptotic_constants(out: &mut impl Write) -> CmdResult {
    let c = constants();
    let rows = [
        ("Z", c.z),
        ("R", c.r),
        ("S", c.s),
        ("limit_ratio", c.limit_ratio),
        ("p_star", c.p_star),
        ("M", c.m),
    ];
    for (name, value) in rows {
        writeln!(out, "{name:<12} {}", format::sig10(value)).map_err(io_error)?;
    }
    Ok(0)
}

pub fn asymptotic_ratios(out: &mut impl Write, k_max: usize) -> CmdResult {
    let rows = ratio_report(k_max).map_err(|e| usage(e.to_string()))?;
    writeln!(
        out,
        "{:>4}  {:>22}  {:>14}  {:>16}  {:>12}",
        "k", "L(k)", "A(k)", "L(k)/A(k)", "J(k)/L(k)"
    )
    .map_err(io_error)?;
    for row in rows {
        let ln_a = ln_approx_a(row.k).map_err(|e| usage(e.to_string()))?;
        let l = count::count_l(row.k).to_string();
        let l = if l.len() > 22 {
            format::sci_from_ln(homcount::combinatorics::ln_big(&count::count_l(row.k)))
        } else {
            l
        };
        writeln!(
            out,
            "{:>4}  {:>22}  {:>14}  {:>16.12}  {:>12.9}",
            row.k,
            l,
            format::sci_from_ln(ln_a),
            row.l_over_a,
            row.j_over_l
        )
        .map_err(io_error)?;
    }
    Ok(0)
}

pub fn asymptotic_bound(out: &mut impl Write, k_max: usize) -> CmdResult {
    check_k(k_max, asymptotics::MAX_ASYMPTOTIC_K)?;
    writeln!(out, "{:>4}  {:>16}", "k", "I(k)/(k! 2.123^k)").map_err(io_error)?;
    for k in 1..=k_max {
        writeln!(out, "{k:>4}  {:>16.10}", bound_ratio_i(k)).map_err(io_error)?;
    }
    writeln!(out, "M = {}", format::sig10(asymptotics::growth_bound_m())).map_err(io_error)?;
    Ok(0)
}

fn read_input(input: Option<&Path>) -> Result<String, CliError> {
    match input {
        Some(path) => std::fs::read_to_string(path).map_err(io_error),
        None => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).map_err(io_error)?;
            Ok(text)
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| usage(format!("malformed {what} JSON: {e}")))
}

fn write_json(out: &mut impl Write, value: &impl serde::Serialize) -> CmdResult {
    let line = serde_json::to_string(value).expect("values serialize");
    writeln!(out, "{line}").map_err(io_error)?;
    Ok(0)
}

pub fn expand(out: &mut impl Write, input: Option<&Path>) -> CmdResult {
    let model: MulticoloredModel = parse_json(&read_input(input)?, "model")?;
    if model.adjacency_constrained {
        let desc = expand_model(&model).map_err(|e| usage(e.to_string()))?;
        write_json(out, &desc)
    } else {
        let desc = expand_colored(&model).map_err(|e| usage(e.to_string()))?;
        write_json(out, &desc)
    }
}

pub fn contract(out: &mut impl Write, k: u32, colored: bool, input: Option<&Path>) -> CmdResult {
    let text = read_input(input)?;
    let model = if colored {
        let desc: ColoredDescription = parse_json(&text, "colored description")?;
        contract_colored(&desc, k)
    } else {
        let desc: OrderingDescription = parse_json(&text, "description")?;
        contract_description(&desc, k)
    }
    .map_err(|e| usage(e.to_string()))?;
    write_json(out, &model)
}

pub fn classify(out: &mut impl Write, n: Bound, m: Bound, input: Option<&Path>) -> CmdResult {
    let desc: OrderingDescription = parse_json(&read_input(input)?, "description")?;
    let report = desc.validate();
    if !report.is_ok() {
        return Err(usage(format!("invalid description: {report}")));
    }
    writeln!(out, "{}", classify_cnm(&desc, n, m)).map_err(io_error)?;
    Ok(0)
}

pub fn homogeneous(out: &mut impl Write, colors: Vec<u32>, cap: usize) -> CmdResult {
    let ordering = FiniteColoredOrdering::new(colors);
    let verdict = is_finite_homogeneous(&ordering, cap).map_err(|e| usage(e.to_string()))?;
    writeln!(out, "{verdict}").map_err(io_error)?;
    Ok(0)
}
