//! Report documents: the JSON the CLI prints to stdout.
//!
//! Reports share the instance-file envelope (a "format" tag) plus a "report"
//! tag naming the report type; the remaining fields are type-specific and
//! serialize in declared order, so a report is byte-stable across runs and
//! thread counts. Numbers follow one rule everywhere: exact decimal digits
//! when the value is exact and at most [`DIGIT_CAP`] digits long, otherwise
//! directed log2 bounds, never a bare float.

use serde::Serialize;

use crate::instance::FORMAT;
use crate::magnitude::{Magnitude, Rounding, Verdict};

/// Largest exact value printed in full; longer values fall back to log2 sides.
pub const DIGIT_CAP: usize = 10_000;

/// How many fractional digits the log2 sides carry.
pub const LOG2_DISPLAY_DIGITS: u32 = 6;

/// A [`Magnitude`] prepared for serialization.
#[derive(Serialize, Debug, Clone)]
pub struct MagnitudeDoc {
    pub knowledge: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub digits: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log2_lower: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log2_upper: Option<String>,
}

impl MagnitudeDoc {
    pub fn new(m: &Magnitude) -> MagnitudeDoc {
        let digits = match (m.as_exact(), m.decimal_digits()) {
            (Some(x), Some(d)) if d <= DIGIT_CAP => Some(x.to_string()),
            _ => None,
        };
        let (lo, hi) = m.log2_sides();
        MagnitudeDoc {
            knowledge: m.knowledge(),
            digits,
            log2_lower: lo.map(|l| l.to_decimal(LOG2_DISPLAY_DIGITS, Rounding::LowerBound)),
            log2_upper: hi.map(|h| h.to_decimal(LOG2_DISPLAY_DIGITS, Rounding::UpperBound)),
        }
    }
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::True => "true",
        Verdict::False => "false",
        Verdict::Indeterminate => "indeterminate",
    }
}

/// Wraps a report body in the document envelope and pretty-prints it.
pub fn render_report<T: Serialize>(kind: &'static str, body: &T) -> String {
    #[derive(Serialize)]
    struct Doc<'a, T: Serialize> {
        format: &'static str,
        report: &'static str,
        #[serde(flatten)]
        body: &'a T,
    }
    let mut text = serde_json::to_string_pretty(&Doc { format: FORMAT, report: kind, body })
        .expect("reports serialize");
    text.push('\n');
    text
}

/// Renders the rational num/den as a plain decimal exponent string.
///
/// Exact with no trailing zeros when the reduced denominator divides a power
/// of ten (so "2^{(2n² − a²)/(2n)}" prints as, say, "2^{3.5}"); otherwise six
/// digits prefixed with "~" to mark truncation.
pub fn exponent_display(num: i128, den: i128) -> String {
    assert!(den > 0, "exponent denominator must be positive");
    let neg = num < 0;
    let num = num.unsigned_abs();
    let den = den.unsigned_abs();
    let g = gcd(num, den);
    let (num, den) = (num / g, den / g);

    // strip the 2s and 5s; what remains decides whether the decimal terminates
    let mut rest = den;
    let mut twos = 0u32;
    let mut fives = 0u32;
    while rest % 2 == 0 {
        rest /= 2;
        twos += 1;
    }
    while rest % 5 == 0 {
        rest /= 5;
        fives += 1;
    }

    let sign = if neg { "-" } else { "" };
    if rest == 1 {
        let digits = twos.max(fives);
        let scaled = num * 10u128.pow(digits) / den;
        let int = scaled / 10u128.pow(digits);
        let mut frac = format!("{:0width$}", scaled % 10u128.pow(digits), width = digits as usize);
        while frac.ends_with('0') {
            frac.pop();
        }
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    } else {
        format!("{sign}~{:.6}", num as f64 / den as f64)
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn exponents_print_exactly_when_they_terminate() {
        assert_eq!(exponent_display(28, 8), "3.5");
        assert_eq!(exponent_display(32, 8), "4");
        assert_eq!(exponent_display(0, 10), "0");
        assert_eq!(exponent_display(-7, 4), "-1.75");
        assert_eq!(exponent_display(1, 1 << 13), "0.0001220703125");
        assert_eq!(exponent_display(17, 6), "~2.833333");
    }

    #[test]
    fn magnitude_docs_switch_to_log2_past_the_digit_cap() {
        let small = MagnitudeDoc::new(&Magnitude::from_u64(1024));
        assert_eq!(small.knowledge, "exact");
        assert_eq!(small.digits.as_deref(), Some("1024"));
        assert_eq!(small.log2_lower.as_deref(), Some("10.000000"));
        assert_eq!(small.log2_upper.as_deref(), Some("10.000000"));

        // 2^40000 has 12,042 decimal digits: past the cap, sides remain
        let big = Magnitude::pow2(&BigUint::from(40_000u32), u64::MAX);
        let doc = MagnitudeDoc::new(&big);
        assert_eq!(doc.knowledge, "exact");
        assert!(doc.digits.is_none());
        assert_eq!(doc.log2_lower.as_deref(), Some("40000.000000"));

        let interval = Magnitude::log2_upper(crate::magnitude::Log2::from_exponent(3));
        let doc = MagnitudeDoc::new(&interval);
        assert_eq!(doc.knowledge, "upper-bound");
        assert!(doc.digits.is_none() && doc.log2_lower.is_none());
        assert_eq!(doc.log2_upper.as_deref(), Some("3.000000"));
    }

    #[test]
    fn report_envelope_field_order_is_stable() {
        #[derive(Serialize)]
        struct Body {
            n: u64,
            summary: String,
        }
        let text = render_report("demo", &Body { n: 4, summary: "ok".into() });
        let expected = "{\n  \"format\": \"pmtk/1\",\n  \"report\": \"demo\",\n  \"n\": 4,\n  \"summary\": \"ok\"\n}\n";
        assert_eq!(text, expected);
    }
}
