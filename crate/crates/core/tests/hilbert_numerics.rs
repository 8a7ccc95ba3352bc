//! Cross-checks of the two discrete transforms, the half-plane extension and
//! the extremal closed forms.

use std::f64::consts::PI;

use num_complex::Complex64;
use sharpnorm_core::extremal::ExtremalFamily;
use sharpnorm_core::hilbert::{
    check_decay_envelope, decay_constant, empirical_norm_ratio, halfplane_extension, hilbert_fft, hilbert_pv,
    Boundary, PiecewiseLinearExtension, SampledSignal,
};
use sharpnorm_core::quadrature::{integrate_endpoint_power, QuadBudget};
use sharpnorm_core::{compute_sharp_constant, OperatorParams, SectorMinorant};

fn gaussian_sum(x: f64) -> f64 {
    (-(x - 0.7) * (x - 0.7)).exp() - 0.4 * (-0.5 * (x + 1.3) * (x + 1.3)).exp() + 0.2 * x * (-x * x / 3.0).exp()
}

#[test]
fn periodic_cosine_maps_to_sine() {
    for (n, k) in [(256usize, 3.0), (1000, 17.0), (97, 5.0)] {
        let dx = 2.0 * PI / n as f64;
        let s = SampledSignal::from_fn(0.0, dx, n, |x| (k * x).cos()).unwrap();
        let h = hilbert_fft(&s, Boundary::Periodic).unwrap();
        for (j, v) in h.values().iter().enumerate() {
            assert!((v - (k * s.x(j)).sin()).abs() < 1e-12, "n={n}");
        }
    }
}

#[test]
fn fft_matches_principal_value() {
    let s = SampledSignal::from_fn(-4096.0, 0.125, 65536, gaussian_sum).unwrap();
    let h = hilbert_fft(&s, Boundary::Decaying).unwrap();
    let mut worst: f64 = 0.0;
    for j in (32768 - 80..32768 + 80).step_by(7) {
        worst = worst.max((hilbert_pv(&s, s.x(j)).unwrap() - h.values()[j]).abs());
    }
    assert!(worst < 1e-6, "{worst}");
}

#[test]
fn principal_value_symmetries() {
    let s = SampledSignal::from_fn(-40.0, 1.0 / 64.0, 5121, |t| (-t * t).exp()).unwrap();
    assert!(hilbert_pv(&s, 0.0).unwrap().abs() < 1e-15);
    // H[exp(-t^2)](x) = (2/sqrt(pi)) D(x) with Dawson's integral; D(1) = 0.5380795069127684.
    let d1 = 2.0 / PI.sqrt() * 0.538_079_506_912_768_4;
    assert!((hilbert_pv(&s, 1.0).unwrap() - d1).abs() < 1e-10);
    assert!((hilbert_pv(&s, 1.0 + 1.0 / 128.0).unwrap() - hilbert_pv(&s, 1.0).unwrap()).abs() < 1e-2);
    // The odd bump has a first moment, so the periodic transform needs a wide grid.
    let odd = SampledSignal::from_fn(-1024.0, 1.0 / 32.0, 65537, |t| t * (-t * t).exp()).unwrap();
    let fft = hilbert_fft(&odd, Boundary::Decaying).unwrap();
    assert!((hilbert_pv(&odd, 0.0).unwrap() - fft.values()[32768]).abs() < 1e-6);
    // H[t exp(-t^2)](0) = -1/sqrt(pi)
    assert!((hilbert_pv(&odd, 0.0).unwrap() + 1.0 / PI.sqrt()).abs() < 1e-10);
    assert!(hilbert_pv(&odd, 1025.0).is_err());
}

#[test]
fn cauchy_pair() {
    let l = 12_000.0;
    let dx = 0.08;
    let n = (2.0 * l / dx) as usize + 1;
    let s = SampledSignal::from_fn(-l, dx, n, |x| 1.0 / (1.0 + x * x)).unwrap();
    let h = hilbert_fft(&s, Boundary::Decaying).unwrap();
    let mid = n / 2;
    let mut worst: f64 = 0.0;
    for j in mid - 250..mid + 250 {
        let x = s.x(j);
        worst = worst.max((h.values()[j] - x / (1.0 + x * x)).abs());
    }
    assert!(worst < 1e-6, "{worst}");
}

#[test]
fn double_application_negates() {
    let s = SampledSignal::from_fn(-64.0, 1.0 / 16.0, 2048, |x| x * (-x * x).exp() + 0.3 * (x - 2.0) * (-(x - 2.0).powi(2)).exp()).unwrap();
    let h2 = hilbert_fft(&hilbert_fft(&s, Boundary::Decaying).unwrap(), Boundary::Periodic).unwrap();
    for (a, b) in s.values().iter().zip(h2.values()) {
        assert!((a + b).abs() < 1e-8);
    }
}

#[test]
fn unit_multiplier_preserves_l2() {
    let params = OperatorParams::new(0.0, 1.0, 2.0).unwrap();
    let s = SampledSignal::from_fn(-64.0, 1.0 / 16.0, 2048, |x| x * (-x * x).exp()).unwrap();
    assert!((empirical_norm_ratio(&s, &params).unwrap() - 1.0).abs() < 1e-8);
    let id = OperatorParams::new(1.0, 0.0, 3.0).unwrap();
    assert_eq!(empirical_norm_ratio(&s, &id).unwrap(), 1.0);
    let zero = s.with_values(vec![0.0; s.len()]).unwrap();
    assert!(empirical_norm_ratio(&zero, &params).is_err());
}

#[test]
fn extension_of_the_cauchy_kernel() {
    let s = SampledSignal::from_fn(-2000.0, 0.01, 400_001, |x| 1.0 / (1.0 + x * x)).unwrap();
    let ext = PiecewiseLinearExtension::new(&s);
    for y in [0.5, 1.0, 3.0] {
        let e = ext.eval(Complex64::new(0.0, y)).unwrap();
        assert!((e.u - 1.0 / (1.0 + y)).abs() < 1e-4, "y={y}: {}", e.u);
        assert!(e.v.abs() < 1e-9);
    }
}

#[test]
fn extension_approaches_boundary_values() {
    let s = SampledSignal::from_fn(-64.0, 1.0 / 64.0, 8193, gaussian_sum).unwrap();
    let h = hilbert_fft(&s, Boundary::Decaying).unwrap();
    for j in [4096usize, 4000, 4200, 4500] {
        let x = s.x(j);
        let e1 = halfplane_extension(&s, Complex64::new(x, 1e-3)).unwrap();
        let e2 = halfplane_extension(&s, Complex64::new(x, 2e-3)).unwrap();
        assert!((e1.u - s.values()[j]).abs() < 1e-2);
        assert!((e1.v - h.values()[j]).abs() < 1e-2);
        // First order in y: halving y roughly halves the gap.
        let g1 = (e1.u - s.values()[j]).abs();
        let g2 = (e2.u - s.values()[j]).abs();
        assert!(g1 < 0.75 * g2, "{g1} {g2}");
    }
}

#[test]
fn decay_envelope_holds() {
    let params = OperatorParams::new(0.0, 1.0, 1.5).unwrap();
    let sc = compute_sharp_constant(&params, 1e-12).unwrap();
    let m = SectorMinorant::new(&params, &sc).unwrap();
    let s = SampledSignal::from_fn(-16.0, 1.0 / 32.0, 1025, gaussian_sum).unwrap();
    let ext = PiecewiseLinearExtension::new(&s);
    let mut fit = Vec::new();
    let mut test = Vec::new();
    for i in 0..30 {
        for k in 0..12 {
            let z = Complex64::new(-60.0 + 4.0 * i as f64, 0.05 * 1.8f64.powi(k));
            if (i + k) % 2 == 0 { fit.push(z) } else { test.push(z) }
        }
    }
    let c = decay_constant(&ext, &fit).unwrap();
    let report = check_decay_envelope(&m, &ext, &fit, c).unwrap();
    assert!(report.pass, "{report:?}");
    // The fitted constant also covers points it was not fitted on, with slack.
    let report = check_decay_envelope(&m, &ext, &test, 1.5 * c).unwrap();
    assert!(report.pass, "{report:?}");
}

const GL5: [(f64, f64); 5] = [
    (-0.906_179_845_938_664, 0.236_926_885_056_189_1),
    (-0.538_469_310_105_683, 0.478_628_670_499_366_5),
    (0.0, 0.568_888_888_888_888_9),
    (0.538_469_310_105_683, 0.478_628_670_499_366_5),
    (0.906_179_845_938_664, 0.236_926_885_056_189_1),
];

#[test]
fn low_exponent_closed_form_against_discrete_transform() {
    // Cell averages of the windowed family on a grid with +-1 on cell edges,
    // the spectral transform, and a [1/4, 1/2, 1/4] filter that removes the
    // odd/even alternation the cot kernel produces next to a sign change.
    let p = 1.5;
    let gamma = 0.9 * PI / (2.0 * p);
    let fam = ExtremalFamily::new(p, gamma, 1.0, 0.0).unwrap();
    let (l, dx, width) = (65536.0, 1.0 / 32.0, 16384.0);
    let n = (2.0 * l / dx) as usize;
    let window = |x: f64| (-(x / width) * (x / width)).exp();
    let f = |x: f64| fam.eval_f(x).unwrap() * window(x);
    let s = fam.s();
    let budget = QuadBudget::default();
    let values: Vec<f64> = (0..n)
        .map(|j| {
            let a = -l + j as f64 * dx;
            let b = a + dx;
            // cells touching a singular point
            let singular = if b == -1.0 || a == -1.0 {
                Some((-1.0, s - 1.0))
            } else if b == 1.0 || a == 1.0 {
                Some((1.0, -s))
            } else {
                None
            };
            match singular {
                Some((c, e)) => {
                    let d = if a == c { b } else { a };
                    let reg = |x: f64| {
                        let x = if x == c { c + (d - c).signum() * 4.0 * f64::EPSILON } else { x };
                        f(x) * (x - c).abs().powf(-e)
                    };
                    integrate_endpoint_power(reg, c, d, -e, budget).unwrap().value / dx
                }
                None => GL5.iter().map(|(t, w)| w * f(a + 0.5 * dx * (1.0 + t))).sum::<f64>() * 0.5,
            }
        })
        .collect();
    let sig = SampledSignal::new(-l + 0.5 * dx, dx, values).unwrap();
    let h = hilbert_fft(&sig, Boundary::Periodic).unwrap();
    let hv = h.values();
    let t = gamma.tan();
    for x in [0.0, 0.4, -0.4, 2.5, -2.5, 4.0, -4.0] {
        let j = ((x - sig.x0()) / dx).round() as usize;
        let smoothed = 0.25 * hv[j - 1] + 0.5 * hv[j] + 0.25 * hv[j + 1];
        let xc = sig.x(j);
        let expected = fam.conjugate_sign(xc) * t * f(xc);
        assert!(((smoothed - expected) / expected).abs() < 1e-3, "x={xc}: {smoothed} vs {expected}");
    }
}

#[test]
fn high_exponent_conjugate_is_odd() {
    // f is even for p > 2, so its true conjugate is odd; a signed multiple of f
    // that is the same on both sides of 0 would be even.
    let p = 3.0;
    let gamma = 0.9 * PI / (2.0 * p);
    let fam = ExtremalFamily::new(p, gamma, 1.0, 0.0).unwrap();
    let dx = 1.0 / 64.0;
    let n = 1 << 16;
    let x0 = -(n as f64) * dx / 2.0 + 0.5 * dx;
    let s = SampledSignal::from_fn(x0, dx, n, |x| fam.eval_f(x).unwrap() * (-(x / 100.0).powi(2)).exp()).unwrap();
    let h = hilbert_fft(&s, Boundary::Decaying).unwrap();
    let hv = h.values();
    for k in [32usize, 192, 1000] {
        let (left, right) = (hv[n / 2 - 1 - k], hv[n / 2 + k]);
        assert!((left + right).abs() < 1e-9 * left.abs().max(1.0));
        assert!(left.abs() > 1e-2);
    }
}
