/// Fortran `ESw.d` edit descriptor: one leading digit, `decimals` fraction
/// digits, a signed two-digit exponent, right-aligned in `width` columns.
pub fn fortran_es(v: f64, width: usize, decimals: usize) -> String {
    let body = if v.is_finite() {
        let s = format!("{:.*E}", decimals, v);
        let (mantissa, exp) = s.split_once('E').expect("exponent marker");
        let exp: i32 = exp.parse().expect("integer exponent");
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}E{sign}{:02}", exp.abs())
    } else if v.is_nan() {
        "NaN".to_string()
    } else if v > 0.0 {
        "Infinity".to_string()
    } else {
        "-Infinity".to_string()
    };
    format!("{body:>width$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_fortran_layout() {
        assert_eq!(fortran_es(1.0, 25, 15), "    1.000000000000000E+00");
        assert_eq!(fortran_es(-0.13235175009777303, 25, 15), "   -1.323517500977730E-01");
        assert_eq!(fortran_es(0.0, 25, 15), "    0.000000000000000E+00");
        assert_eq!(fortran_es(1.5e-300, 12, 3), "  1.500E-300");
    }
}
