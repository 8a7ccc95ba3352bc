//! Number formatting for machine-readable output.

/// 17 significant digits, enough to round-trip any `f64`.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 1e300, 4.228_902_560_497_776] {
            assert_eq!(fmt17(x).parse::<f64>().unwrap(), x);
        }
    }
}
