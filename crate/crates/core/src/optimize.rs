//! One-dimensional maximization.

/// Result of a bracketed maximization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub argmax: f64,
    pub value: f64,
    /// Width of the final bracket around `argmax`.
    pub bracket_width: f64,
}

/// Golden-section search for the maximum of `f` on `[lo, hi]`.
///
/// `f` should be unimodal on the interval. The search stops when the
/// bracket is narrower than `tol` or stops shrinking in floating point.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Maximum {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
        if !(x1 < x2) {
            break;
        }
    }
    let (argmax, value) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    Maximum { argmax, value, bracket_width: hi - lo }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_parabola_vertex() {
        let m = golden_section_max(|x| -(x - 0.3) * (x - 0.3), -1.0, 2.0, 1e-12);
        assert!((m.argmax - 0.3).abs() < 1e-7);
        assert!(m.bracket_width <= 1e-10);
    }

    #[test]
    fn finds_cos_peak() {
        let m = golden_section_max(|x| (x - 1.0).cos(), 0.0, 2.0, 1e-12);
        assert!((m.argmax - 1.0).abs() < 1e-7);
        assert!((m.value - 1.0).abs() < 1e-15);
    }
}
