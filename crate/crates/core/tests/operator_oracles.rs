//! The sharp constant against a brute-force maximization of the slope form
//! that shares no code with the library.

use std::f64::consts::PI;

use sharpnorm_core::operator::{ratio_x, Slope};
use sharpnorm_core::{compute_sharp_constant, dual_exponent, OperatorParams};

/// Slope-form ratio written out directly.
fn slope_ratio(a: f64, b: f64, p: f64, x: f64) -> f64 {
    let t = (PI / (2.0 * p)).tan();
    if x.is_infinite() {
        return 0.5 * ((a + b * t).abs().powf(p) + (a - b * t).abs().powf(p));
    }
    let num = (a * x - b + (b * x + a) * t).abs().powf(p) + (a * x - b - (b * x + a) * t).abs().powf(p);
    num / ((x + t).abs().powf(p) + (x - t).abs().powf(p))
}

/// Dense scan of `x = tan(u)`, `u in (-pi/2, pi/2)`, plus `x = inf`,
/// followed by ternary refinement around the best node.
fn brute_force(a: f64, b: f64, p: f64) -> f64 {
    let n = 1_000_000;
    let h = PI / n as f64;
    let r = |u: f64| slope_ratio(a, b, p, u.tan());
    let mut best = slope_ratio(a, b, p, f64::INFINITY);
    let mut best_u = None;
    for j in 1..n {
        let u = -PI / 2.0 + j as f64 * h;
        let v = r(u);
        if v > best {
            best = v;
            best_u = Some(u);
        }
    }
    if let Some(u) = best_u {
        let (mut lo, mut hi) = (u - h, u + h);
        for _ in 0..200 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if r(m1) < r(m2) {
                lo = m1
            } else {
                hi = m2
            }
        }
        best = best.max(r(0.5 * (lo + hi)));
    }
    best
}

#[test]
fn conjugate_function_norms() {
    for p in [1.2, 4.0 / 3.0, 1.5, 2.0, 3.0, 4.0, 8.0] {
        let params = OperatorParams::new(0.0, 1.0, p).unwrap();
        let sc = compute_sharp_constant(&params, 1e-12).unwrap();
        let g = PI / (2.0 * p);
        let closed = g.tan().max(1.0 / g.tan());
        let brute = brute_force(0.0, 1.0, p).powf(1.0 / p);
        assert!((brute - closed).abs() < 1e-9, "oracle at p={p}: {brute} vs {closed}");
        assert!((sc.norm - closed).abs() < 1e-9, "p={p}: {} vs {closed}", sc.norm);
    }
}

#[test]
fn general_coefficients_match_brute_force() {
    for (a, b, p) in [(0.6, 0.8, 3.0), (0.6, 0.8, 1.5), (1.0, -2.0, 1.2), (-0.3, 0.7, 5.0), (2.0, 1.0, 8.0), (0.1, 1.0, 1.1)] {
        let sc = compute_sharp_constant(&OperatorParams::new(a, b, p).unwrap(), 1e-12).unwrap();
        let brute = brute_force(a, b, p);
        assert!((sc.value - brute).abs() <= 1e-11 * brute, "({a},{b},{p}): {} vs {brute}", sc.value);
    }
}

#[test]
fn slope_form_matches_library() {
    let params = OperatorParams::new(0.3, -1.7, 2.7).unwrap();
    for x in [-30.0, -1.0, 0.0, 0.2, 5.0] {
        assert!((ratio_x(&params, Slope::Finite(x)).unwrap() - slope_ratio(0.3, -1.7, 2.7, x)).abs() < 1e-13);
    }
    assert!((ratio_x(&params, Slope::Infinity).unwrap() - slope_ratio(0.3, -1.7, 2.7, f64::INFINITY)).abs() < 1e-13);
}

#[test]
fn norm_is_self_dual() {
    for (a, b) in [(0.6, 0.8), (1.0, -2.0), (0.0, 1.0), (-3.0, 0.5)] {
        for p in [1.25, 1.5, 3.0] {
            let q = dual_exponent(p).unwrap();
            let n1 = compute_sharp_constant(&OperatorParams::new(a, b, p).unwrap(), 1e-12).unwrap().norm;
            let n2 = compute_sharp_constant(&OperatorParams::new(a, b, q).unwrap(), 1e-12).unwrap().norm;
            assert!((n1 - n2).abs() <= 1e-8, "({a},{b},{p}): {n1} vs {n2}");
        }
    }
}

#[test]
fn plateau_reports_single_maximizer_at_zero() {
    // b = 0 makes the ratio constant for every p.
    for p in [1.1, 3.0] {
        let sc = compute_sharp_constant(&OperatorParams::new(-2.0, 0.0, p).unwrap(), 1e-12).unwrap();
        assert_eq!(sc.t0, 0.0);
        assert_eq!(sc.maximizers, vec![0.0]);
        assert!((sc.norm - 2.0).abs() < 1e-13);
    }
}

#[test]
fn maximizers_are_reduced_and_sorted() {
    let sc = compute_sharp_constant(&OperatorParams::new(0.0, 1.0, 4.0).unwrap(), 1e-12).unwrap();
    assert!(sc.maximizers.windows(2).all(|w| w[0] < w[1]));
    assert!(sc.maximizers.iter().all(|&t| (0.0..PI).contains(&t)));
    assert_eq!(sc.t0, sc.maximizers[0]);
    assert!(sc.bracket_width <= 1e-12);
}
