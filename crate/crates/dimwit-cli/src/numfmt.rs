//! Significant-digit number formatting.
//!
//! Console output trims to a configurable number of significant digits
//! (default 9); files always carry 17, which round-trips every `f64`
//! bit-exactly.

/// Significant digits used for stdout unless overridden.
pub const DEFAULT_STDOUT_DIGITS: usize = 9;

/// Allowed range for the `DIMWIT_PRECISION` override.
pub const PRECISION_RANGE: std::ops::RangeInclusive<usize> = 6..=17;

/// Formats with the given number of significant digits, choosing positional
/// or scientific notation like `printf %g` and trimming trailing zeros.
pub fn significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exponent) = sci.split_once('e').expect("scientific notation");
    let exponent: i32 = exponent.parse().expect("exponent digits");
    if exponent < -4 || exponent >= digits as i32 {
        format!("{}e{exponent}", trim_zeros(mantissa))
    } else {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    }
}

/// Fixed 17-significant-digit scientific form for file output.
pub fn file_number(x: f64) -> String {
    format!("{x:.16e}")
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}
