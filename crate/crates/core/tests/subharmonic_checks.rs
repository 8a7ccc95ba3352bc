//! The sector minorant on fixed parameter sets.

use std::f64::consts::PI;

use num_complex::Complex64;
use sharpnorm_core::subharmonic::{
    check_exterior_identity, check_majorization, check_mean_value, check_mean_value_subharmonicity, check_profile,
    check_zero_sum_direction, circle_mean_margin, eval_f, eval_g, polar_grid, Circle,
};
use sharpnorm_core::{compute_sharp_constant, OperatorParams, SectorMinorant};

const TRIPLES: [(f64, f64, f64); 7] =
    [(0.0, 1.0, 1.5), (0.6, 0.8, 3.0), (0.6, 0.8, 1.5), (1.0, -2.0, 1.2), (-0.3, 0.7, 5.0), (2.0, 1.0, 8.0), (0.1, 1.0, 1.1)];

fn minorant(a: f64, b: f64, p: f64) -> SectorMinorant {
    let params = OperatorParams::new(a, b, p).unwrap();
    SectorMinorant::new(&params, &compute_sharp_constant(&params, 1e-12).unwrap()).unwrap()
}

#[test]
fn checker_self_test() {
    let circles: Vec<Circle> = (0..50)
        .map(|k| Circle { center: Complex64::new(-3.0 + 0.13 * k as f64, 0.07 * k as f64 - 1.0), radius: 0.1 + 0.05 * k as f64 })
        .collect();
    let harmonic = check_mean_value("re-z-squared", |z| (z * z).re, |_| 1.0, &circles, 512, 1e-12).unwrap();
    assert!(harmonic.pass && harmonic.worst_violation.abs() < 1e-12);
    for c in &circles {
        let m = circle_mean_margin(&|z: Complex64| z.norm_sqr(), c.center, c.radius, 512);
        assert!((m - c.radius * c.radius).abs() < 1e-10);
    }
}

#[test]
fn majorization_on_polar_grids() {
    for (a, b, p) in TRIPLES {
        let m = minorant(a, b, p);
        let grid = polar_grid(&m, 720, 1e-2, 1e2, 9).unwrap();
        let r = check_majorization(&m, &grid, 1e-10).unwrap();
        assert!(r.pass, "({a},{b},{p}): {r:?}");
        let r = check_exterior_identity(&m, &grid, 1e-9).unwrap();
        assert!(r.pass && r.worst_violation == 0.0, "({a},{b},{p}): {r:?}");
    }
}

#[test]
fn sector_branch_is_strictly_below_inside() {
    let m = minorant(0.0, 1.0, 1.5);
    let t = m.t0() + 0.5 * m.opening();
    let z = Complex64::from_polar(1.0, t);
    assert!(m.in_sector(z));
    assert!(eval_f(m.params(), m.bp(), z) - eval_g(&m, z).unwrap() > 1e-3);
}

#[test]
fn mean_value_over_mixed_circles() {
    for (a, b, p) in TRIPLES {
        let m = minorant(a, b, p);
        let mut circles = Vec::new();
        for k in 0..40 {
            circles.push(Circle { center: Complex64::new(0.0, 0.0), radius: 0.05 * (k + 1) as f64 });
            // Centers on each bounding ray, with radii up to twice the distance to the origin.
            for ray in [m.t0(), m.t0() + m.opening(), m.t0() + PI] {
                let c = Complex64::from_polar(0.5 + 0.1 * k as f64, ray);
                circles.push(Circle { center: c, radius: c.norm() * (0.05 + 0.05 * k as f64) });
            }
        }
        let r = check_mean_value_subharmonicity(&m, &circles, 512, 1e-8).unwrap();
        assert!(r.pass, "({a},{b},{p}): {r:?}");
    }
}

#[test]
fn profile_and_zero_sum() {
    for (a, b, p) in TRIPLES {
        let m = minorant(a, b, p);
        let r = check_profile(&m, 4000, 1e-10).unwrap();
        assert!(r.pass, "({a},{b},{p}): {r:?}");
        let z = check_zero_sum_direction(m.params(), m.bp(), m.t0(), 20000, 1e-9).unwrap();
        assert!(z.report.pass, "({a},{b},{p}): {z:?}");
        let sharpnorm_core::Location::Angle(t) = z.report.worst_location else { panic!() };
        let d = (t - m.t0()).rem_euclid(PI);
        assert!(d.min(PI - d) < 1e-6, "argmin {t} vs t0 {}", m.t0());
    }
}

#[test]
fn p_two_zero_sum_vanishes_everywhere() {
    let params = OperatorParams::new(0.6, 0.8, 2.0).unwrap();
    let sc = compute_sharp_constant(&params, 1e-12).unwrap();
    let z = check_zero_sum_direction(&params, sc.value, sc.t0, 1000, 1e-12).unwrap();
    assert!(z.report.pass);
    assert!(z.report.worst_violation.abs() < 1e-12);
}
