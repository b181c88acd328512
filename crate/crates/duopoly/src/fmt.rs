//! Deterministic number formatting for CSV and matrix dumps.

use num_complex::Complex64;

/// Shortest decimal string that parses back to exactly the same binary64
/// value. Negative zero is normalized to "0".
pub fn f64_shortest(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    format!("{v}")
}

/// One matrix entry in `re+imj` form, e.g. `0.5+0j` or `1-0.25j`.
pub fn complex_entry(z: Complex64) -> String {
    if z.im < 0.0 {
        format!("{}-{}j", f64_shortest(z.re), f64_shortest(-z.im))
    } else {
        format!("{}+{}j", f64_shortest(z.re), f64_shortest(z.im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortest_form_round_trips() {
        for v in [
            0.1,
            1.0 / 3.0,
            0.6662394324925153,
            1e-30,
            123456.789,
            -0.039971623431997935,
            f64::MIN_POSITIVE,
        ] {
            let s = f64_shortest(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
    }

    #[test]
    fn zeros_normalize() {
        assert_eq!(f64_shortest(0.0), "0");
        assert_eq!(f64_shortest(-0.0), "0");
    }

    #[test]
    fn complex_entries() {
        assert_eq!(complex_entry(Complex64::new(0.5, 0.0)), "0.5+0j");
        assert_eq!(complex_entry(Complex64::new(-1.0, -0.25)), "-1-0.25j");
        assert_eq!(complex_entry(Complex64::new(0.0, 2.0)), "0+2j");
        assert_eq!(complex_entry(Complex64::new(0.0, -0.0)), "0+0j");
    }
}
