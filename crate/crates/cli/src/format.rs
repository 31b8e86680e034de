use homcount::{BigCount, SequenceId};

/// `x` with 10 significant digits, fixed notation.
pub fn sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Scientific notation for the number whose natural log is `ln`, so values
/// past `f64::MAX` still print.
pub fn sci_from_ln(ln: f64) -> String {
    let log10 = ln / std::f64::consts::LN_10;
    let mut exponent = log10.floor();
    let mut mantissa = 10f64.powf(log10 - exponent);
    if mantissa >= 9.999995 {
        mantissa /= 10.0;
        exponent += 1.0;
    }
    format!("{mantissa:.5}e{exponent}")
}

pub fn b_file(terms: &[(usize, BigCount)]) -> String {
    terms.iter().map(|(k, v)| format!("{k} {v}\n")).collect()
}

pub fn csv(terms: &[(usize, BigCount)]) -> String {
    let mut out = String::from("k,value\n");
    for (k, v) in terms {
        out.push_str(&format!("{k},{v}\n"));
    }
    out
}

pub fn json(sequence: SequenceId, terms: &[(usize, BigCount)]) -> String {
    let terms: Vec<(usize, String)> = terms.iter().map(|(k, v)| (*k, v.to_string())).collect();
    let doc = serde_json::json!({ "sequence": sequence.name(), "terms": terms });
    format!("{doc}\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(values: &[(usize, u64)]) -> Vec<(usize, BigCount)> {
        values.iter().map(|&(k, v)| (k, BigCount::from(v))).collect()
    }

    #[test]
    fn significant_digits() {
        assert_eq!(sig10(0.44285440100238), "0.4428544010");
        assert_eq!(sig10(-0.6089389702), "-0.6089389702");
        assert_eq!(sig10(2.1224322), "2.122432200");
        assert_eq!(sig10(1234.5), "1234.500000");
    }

    #[test]
    fn scientific_from_log() {
        assert_eq!(sci_from_ln(1000f64.ln()), "1.00000e3");
        assert_eq!(sci_from_ln(1.37496f64.ln()), "1.37496e0");
        assert_eq!(sci_from_ln(400.0 * std::f64::consts::LN_10), "1.00000e400");
    }

    #[test]
    fn export_formats() {
        let t = terms(&[(1, 3), (2, 12), (3, 71)]);
        assert_eq!(b_file(&t), "1 3\n2 12\n3 71\n");
        assert_eq!(csv(&terms(&[(0, 1)])), "k,value\n0,1\n");
        assert_eq!(
            json(SequenceId::I, &t[..2]),
            "{\"sequence\":\"I\",\"terms\":[[1,\"3\"],[2,\"12\"]]}\n"
        );
    }
}
