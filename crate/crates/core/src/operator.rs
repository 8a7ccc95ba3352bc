//! The sharp constant `B_p` for `aI + bH` on `L^p(R)`.
//!
//! `B_p` is the maximum of a ratio of trigonometric power sums. The ratio
//! is available in three equivalent parametrizations: by the angle `theta`,
//! by the shifted angle `vartheta = -theta - pi/p`, and by the real slope
//! `x = cot(theta + gamma)` with `gamma = pi/(2p)`. The norm of the operator
//! is `B_p^(1/p)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::optimize::golden_section_max;

/// Coefficients `(a, b)` and exponent `p` of the operator `aI + bH`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorParams {
    a: f64,
    b: f64,
    p: f64,
}

impl OperatorParams {
    pub fn new(a: f64, b: f64, p: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::Domain("coefficients must be finite"));
        }
        if !(p.is_finite() && p > 1.0) {
            return Err(Error::Domain("exponent must satisfy 1 < p < inf"));
        }
        Ok(OperatorParams { a, b, p })
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn p(&self) -> f64 {
        self.p
    }
    /// `pi / (2p)`.
    pub fn gamma(&self) -> f64 {
        PI / (2.0 * self.p)
    }
    /// Polar angle of `(a, b)`.
    pub fn theta0(&self) -> f64 {
        self.b.atan2(self.a)
    }
    /// `sqrt(a^2 + b^2)`.
    pub fn modulus(&self) -> f64 {
        self.a.hypot(self.b)
    }
    /// `(a^2 + b^2)^(p/2)`.
    pub fn scale(&self) -> f64 {
        self.modulus().powf(self.p)
    }
    /// Same coefficients with the dual exponent.
    pub fn dual(&self) -> Self {
        OperatorParams { a: self.a, b: self.b, p: self.p / (self.p - 1.0) }
    }
    pub fn is_zero(&self) -> bool {
        self.a == 0.0 && self.b == 0.0
    }
}

/// A real slope or the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Slope {
    Finite(f64),
    Infinity,
}

/// `p' = p / (p - 1)`.
pub fn dual_exponent(p: f64) -> Result<f64> {
    if !(p.is_finite() && p > 1.0) {
        return Err(Error::Domain("exponent must satisfy 1 < p < inf"));
    }
    Ok(p / (p - 1.0))
}

fn abs_pow(x: f64, p: f64) -> f64 {
    x.abs().powf(p)
}

fn check_angle(t: f64) -> Result<()> {
    if t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("angle must be finite"))
    }
}

/// Ratio in the `theta` parametrization.
pub fn ratio_theta(params: &OperatorParams, theta: f64) -> Result<f64> {
    check_angle(theta)?;
    let p = params.p;
    let t0 = params.theta0();
    let num = abs_pow((theta + t0).cos(), p) + abs_pow((theta + t0 + PI / p).cos(), p);
    let den = abs_pow(theta.cos(), p) + abs_pow((theta + PI / p).cos(), p);
    Ok(params.scale() * num / den)
}

/// Ratio in the `vartheta` parametrization, without the `(a^2 + b^2)^(p/2)` factor.
pub fn normalized_ratio_vartheta(params: &OperatorParams, t: f64) -> f64 {
    let p = params.p;
    let t0 = params.theta0();
    let num = abs_pow((t - t0).cos(), p) + abs_pow((t - t0 + PI / p).cos(), p);
    let den = abs_pow(t.cos(), p) + abs_pow((t + PI / p).cos(), p);
    num / den
}

/// Ratio in the `vartheta` parametrization.
pub fn ratio_vartheta(params: &OperatorParams, t: f64) -> Result<f64> {
    check_angle(t)?;
    Ok(params.scale() * normalized_ratio_vartheta(params, t))
}

/// Ratio in the slope parametrization, including its limit at infinity.
pub fn ratio_x(params: &OperatorParams, x: Slope) -> Result<f64> {
    let p = params.p;
    let tg = params.gamma().tan();
    let (a, b) = (params.a, params.b);
    match x {
        Slope::Infinity => Ok(0.5 * (abs_pow(a + b * tg, p) + abs_pow(a - b * tg, p))),
        Slope::Finite(x) => {
            if !x.is_finite() {
                return Err(Error::Domain("slope must be finite or Infinity"));
            }
            let num = abs_pow(a * x - b + (b * x + a) * tg, p) + abs_pow(a * x - b - (b * x + a) * tg, p);
            let den = abs_pow(x + tg, p) + abs_pow(x - tg, p);
            Ok(num / den)
        }
    }
}

/// The `theta` corresponding to a slope, `x = cot(theta + gamma)`.
pub fn theta_from_slope(params: &OperatorParams, x: Slope) -> f64 {
    match x {
        Slope::Infinity => -params.gamma(),
        Slope::Finite(x) => 1.0f64.atan2(x) - params.gamma(),
    }
}

/// The `vartheta` corresponding to `theta`.
pub fn vartheta_from_theta(params: &OperatorParams, theta: f64) -> f64 {
    -theta - PI / params.p
}

/// `B_p` together with the maximizing angle.
#[derive(Debug, Clone, PartialEq)]
pub struct SharpConstant {
    /// `B_p(a, b)`; the operator norm is `value^(1/p)`.
    pub value: f64,
    /// Smallest maximizing `vartheta` in `[0, pi)`.
    pub t0: f64,
    /// Width of the final bracket around `t0`; zero when the ratio is constant.
    pub bracket_width: f64,
    /// `value^(1/p)`.
    pub norm: f64,
    /// Every maximizer in `[0, pi)` found within relative `1e-12` of the maximum.
    pub maximizers: Vec<f64>,
}

const SCAN_NODES: usize = 4096;
const PLATEAU_SPREAD: f64 = 1e-13;
const TIE_RELATIVE: f64 = 1e-12;

/// Maximizes the ratio by a dense scan of one period followed by
/// golden-section refinement of every near-maximal local peak.
///
/// `tol` bounds the width of the bracket around each maximizer.
pub fn compute_sharp_constant(params: &OperatorParams, tol: f64) -> Result<SharpConstant> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Domain("tolerance must be positive"));
    }
    let p = params.p;
    if params.is_zero() {
        return Ok(SharpConstant { value: 0.0, t0: 0.0, bracket_width: 0.0, norm: 0.0, maximizers: Vec::from([0.0]) });
    }
    let r = |t: f64| normalized_ratio_vartheta(params, t);
    let h = PI / SCAN_NODES as f64;
    let values: Vec<f64> = (0..SCAN_NODES).map(|j| r(j as f64 * h)).collect();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &v in &values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if hi - lo <= PLATEAU_SPREAD * hi {
        let value = params.scale() * r(0.0);
        return Ok(SharpConstant {
            value,
            t0: 0.0,
            bracket_width: 0.0,
            norm: value.powf(1.0 / p),
            maximizers: Vec::from([0.0]),
        });
    }

    // Seeds: discrete local maxima close to the top, plus the two special
    // directions (slope at infinity and theta = 0) which may sit on a node gap.
    let mut seeds: Vec<f64> = Vec::new();
    for j in 0..SCAN_NODES {
        let prev = values[(j + SCAN_NODES - 1) % SCAN_NODES];
        let next = values[(j + 1) % SCAN_NODES];
        let v = values[j];
        if v >= prev && v > next && v >= hi * (1.0 - 1e-3) {
            seeds.push(j as f64 * h);
        }
    }
    let special = [
        vartheta_from_theta(params, theta_from_slope(params, Slope::Infinity)),
        vartheta_from_theta(params, 0.0),
    ];
    for s in special {
        if r(s) >= hi * (1.0 - 1e-3) {
            seeds.push(s);
        }
    }

    let mut refined = Vec::with_capacity(seeds.len());
    for s in seeds {
        let m = golden_section_max(r, s - h, s + h, tol);
        refined.push(m);
    }
    let best = refined.iter().map(|m| m.value).fold(f64::NEG_INFINITY, f64::max);
    let mut maximizers: Vec<(f64, f64)> = refined
        .iter()
        .filter(|m| m.value >= best * (1.0 - TIE_RELATIVE))
        .map(|m| (m.argmax.rem_euclid(PI), m.bracket_width))
        .collect();
    maximizers.sort_by(|x, y| x.0.total_cmp(&y.0));
    maximizers.dedup_by(|x, y| (x.0 - y.0).abs() <= 4.0 * tol.max(1e-12));
    let (t0, bracket_width) = maximizers[0];
    let value = params.scale() * best;
    Ok(SharpConstant {
        value,
        t0,
        bracket_width,
        norm: value.powf(1.0 / p),
        maximizers: maximizers.into_iter().map(|m| m.0).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: f64, b: f64, p: f64) -> OperatorParams {
        OperatorParams::new(a, b, p).unwrap()
    }

    #[test]
    fn rejects_bad_exponents() {
        assert!(OperatorParams::new(1.0, 1.0, 1.0).is_err());
        assert!(OperatorParams::new(1.0, 1.0, f64::INFINITY).is_err());
        assert!(OperatorParams::new(f64::NAN, 1.0, 2.0).is_err());
        assert!(dual_exponent(0.5).is_err());
        assert_eq!(dual_exponent(4.0).unwrap(), 4.0 / 3.0);
    }

    #[test]
    fn three_forms_agree() {
        let pr = params(0.6, -0.8, 3.3);
        for k in 0..50 {
            let x = -5.0 + 0.2 * k as f64 + 0.013;
            let theta = theta_from_slope(&pr, Slope::Finite(x));
            let rx = ratio_x(&pr, Slope::Finite(x)).unwrap();
            let rt = ratio_theta(&pr, theta).unwrap();
            let rv = ratio_vartheta(&pr, vartheta_from_theta(&pr, theta)).unwrap();
            assert!((rx - rt).abs() <= 1e-12 * rx);
            assert!((rx - rv).abs() <= 1e-12 * rx);
        }
        let inf = ratio_x(&pr, Slope::Infinity).unwrap();
        let theta = theta_from_slope(&pr, Slope::Infinity);
        assert!((inf - ratio_theta(&pr, theta).unwrap()).abs() <= 1e-12 * inf);
    }

    #[test]
    fn p_two_is_the_euclidean_modulus() {
        let sc = compute_sharp_constant(&params(0.6, 0.8, 2.0), 1e-12).unwrap();
        assert!((sc.value - 1.0).abs() < 1e-12);
        assert_eq!(sc.t0, 0.0);
        assert_eq!(sc.bracket_width, 0.0);
    }

    #[test]
    fn zero_operator() {
        let sc = compute_sharp_constant(&params(0.0, 0.0, 3.0), 1e-12).unwrap();
        assert_eq!(sc.value, 0.0);
    }

    #[test]
    fn identity_has_norm_one() {
        for p in [1.3, 2.5, 7.0] {
            let sc = compute_sharp_constant(&params(2.0, 0.0, p), 1e-12).unwrap();
            assert!((sc.norm - 2.0).abs() < 1e-11, "p = {p}: {}", sc.norm);
        }
    }

    #[test]
    fn frozen_maximizers() {
        // Independent dense evaluation of the slope form, see the tests/ oracle.
        let sc = compute_sharp_constant(&params(0.0, 1.0, 1.5), 1e-12).unwrap();
        assert!((sc.value - 2.279_507_056_954_776_6).abs() < 1e-12);
        assert!((sc.t0 - 2.0 * PI / 3.0).abs() < 1e-7);
        let sc = compute_sharp_constant(&params(0.6, 0.8, 3.0), 1e-12).unwrap();
        assert!((sc.value - 4.228_902_560_497_776).abs() < 1e-11);
        assert!((sc.t0 - 1.000_955_857_978_607).abs() < 1e-7);
    }
}
