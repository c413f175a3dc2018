//! Plain-text rendering of masses and numbers.

use std::fmt::Write;

use crate::mass::MassFunction;
use crate::product::ProductMass;

/// `%g`-style formatting with 6 significant digits and a `.` decimal point.
pub fn format_g6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        let decimals = (5 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn table<I: Iterator<Item = (String, f64)>>(rows: I) -> String {
    let rows: Vec<(String, f64)> = rows.collect();
    let width = rows.iter().map(|(s, _)| s.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (set, mass) in rows {
        let pad = width - set.chars().count();
        writeln!(out, "{set}{}  {}", " ".repeat(pad), format_g6(mass)).expect("writing to a String");
    }
    out
}

/// One line per focal set, in focal-set order.
pub fn mass_table(m: &MassFunction) -> String {
    table(m.focals().map(|(s, v)| (s.to_string(), v)))
}

pub fn product_table(m: &ProductMass) -> String {
    table(m.focals().map(|(s, v)| (s.to_string(), v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::Frame;

    #[test]
    fn g6() {
        assert_eq!(format_g6(0.0), "0");
        assert_eq!(format_g6(-0.0), "0");
        assert_eq!(format_g6(1.0), "1");
        assert_eq!(format_g6(0.857375), "0.857375");
        assert_eq!(format_g6(0.1 + 0.2), "0.3");
        assert_eq!(format_g6(1.0 / 3.0), "0.333333");
        assert_eq!(format_g6(0.0001234567), "0.000123457");
        assert_eq!(format_g6(0.00001234567), "1.23457e-05");
        assert_eq!(format_g6(123456.7), "123457");
        assert_eq!(format_g6(999999.7), "1e+06");
        assert_eq!(format_g6(-2.5), "-2.5");
    }

    #[test]
    fn aligned_rows() {
        let f = Frame::new(["a", "b"]).unwrap();
        let m = MassFunction::from_labels(&f, &[(&["a"], 0.25), (&["a", "b"], 0.75)]).unwrap();
        assert_eq!(mass_table(&m), "{a}  0.25\nΩ    0.75\n");
    }
}
