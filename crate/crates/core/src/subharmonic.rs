//! The sector minorant `G` of `F(z) = B_p |Re z|^p - |a Re z + b Im z|^p`.
//!
//! `G` agrees with `F` except on the double sector
//! `T = {arg z in (t0, t0 + pi/p) mod pi}`, where it is replaced by the
//! homogeneous harmonic function `r^p h(p t)` that matches `F` to first
//! order on both bounding rays. The checks in this module verify the three
//! facts the norm bound rests on: `F >= G`, `G` is subharmonic, and the
//! zero-sum identity that makes the two rays fit.

use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operator::{OperatorParams, SharpConstant};
use crate::report::{CheckReport, Location, WorstTracker};

/// `|c|^(p-1) sgn(c)`.
fn signed_pow(c: f64, exponent: f64) -> f64 {
    if c == 0.0 {
        0.0
    } else {
        c.abs().powf(exponent).copysign(c)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SectorMinorant {
    params: OperatorParams,
    bp: f64,
    t0: f64,
    epsilon: f64,
    /// Normalized value and slope of the profile at `p t0`.
    profile_value: f64,
    profile_slope: f64,
    /// Set when `cos t0` vanishes and the construction collapses.
    pub degenerate: bool,
}

impl SectorMinorant {
    pub fn new(params: &OperatorParams, sharp: &SharpConstant) -> Result<Self> {
        Self::from_parts(params, sharp.value, sharp.t0)
    }

    /// Builds the minorant from an explicit constant and maximizing angle.
    pub fn from_parts(params: &OperatorParams, bp: f64, t0: f64) -> Result<Self> {
        if !(bp.is_finite() && bp >= 0.0 && t0.is_finite()) {
            return Err(Error::Domain("constant and angle must be finite"));
        }
        let p = params.p();
        let epsilon = (PI / 8.0).min((PI - PI / p) / 4.0);
        let scale = params.scale();
        let (bn, th) = if scale > 0.0 { (bp / scale, params.theta0()) } else { (0.0, 0.0) };
        let c = t0.cos();
        let profile_value = bn * c.abs().powf(p) - (t0 - th).cos().abs().powf(p);
        let profile_slope =
            -bn * signed_pow(c, p - 1.0) * t0.sin() + signed_pow((t0 - th).cos(), p - 1.0) * (t0 - th).sin();
        Ok(SectorMinorant {
            params: *params,
            bp,
            t0,
            epsilon,
            profile_value,
            profile_slope,
            degenerate: c.abs() <= 1e-12,
        })
    }

    pub fn params(&self) -> &OperatorParams {
        &self.params
    }
    pub fn bp(&self) -> f64 {
        self.bp
    }
    pub fn t0(&self) -> f64 {
        self.t0
    }
    /// Offset of the angle-reduction window `[t0 - epsilon, t0 + pi - epsilon)`.
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
    /// Opening angle of one component of `T`.
    pub fn opening(&self) -> f64 {
        PI / self.params.p()
    }

    /// Reduces an angle into the window `[t0 - epsilon, t0 + pi - epsilon)`.
    pub fn reduce_angle(&self, t: f64) -> f64 {
        let start = self.t0 - self.epsilon;
        start + (t - start).rem_euclid(PI)
    }

    pub fn in_sector(&self, z: Complex64) -> bool {
        if z.re == 0.0 && z.im == 0.0 {
            return false;
        }
        let t = self.reduce_angle(z.im.atan2(z.re));
        t > self.t0 && t < self.t0 + self.opening()
    }

    fn sector_branch(&self, r_pow: f64, t: f64) -> f64 {
        let p = self.params.p();
        let (a, b) = (self.params.a(), self.params.b());
        let phi = p * (t - self.t0) + self.t0;
        let ell0 = a * self.t0.cos() + b * self.t0.sin();
        let (s, c) = phi.sin_cos();
        r_pow * (self.bp * signed_pow(self.t0.cos(), p - 1.0) * c - signed_pow(ell0, p - 1.0) * (a * c + b * s))
    }

    pub(crate) fn value(&self, z: Complex64) -> f64 {
        let r2 = z.norm_sqr();
        if r2 == 0.0 {
            return 0.0;
        }
        let t = self.reduce_angle(z.im.atan2(z.re));
        if t > self.t0 && t < self.t0 + self.opening() {
            self.sector_branch(r2.powf(0.5 * self.params.p()), t)
        } else {
            eval_f(&self.params, self.bp, z)
        }
    }

    /// Normalized profile `h(x)` on `[p t0, p t0 + pi]`; `G = r^p (a^2+b^2)^(p/2) h(p t)` in `T`.
    pub fn profile(&self, x: f64) -> f64 {
        let d = x - self.params.p() * self.t0;
        self.profile_value * d.cos() + self.profile_slope * d.sin()
    }

    /// The normalized function `h` must stay below on `[p t0, p t0 + pi]`:
    /// `B_p/(a^2+b^2)^(p/2) |cos(x/p)|^p - |cos(x/p - theta0)|^p`.
    pub fn profile_target(&self, x: f64) -> f64 {
        let p = self.params.p();
        let scale = self.params.scale();
        let bn = if scale > 0.0 { self.bp / scale } else { 0.0 };
        let t = x / p;
        bn * t.cos().abs().powf(p) - (t - self.params.theta0()).cos().abs().powf(p)
    }

    /// `max |G|` on the unit circle, sampled on `nodes` angles plus the two rays.
    pub fn unit_circle_bound(&self, nodes: usize) -> f64 {
        let mut m: f64 = 0.0;
        for j in 0..nodes.max(8) {
            let t = 2.0 * PI * j as f64 / nodes.max(8) as f64;
            m = m.max(self.value(Complex64::from_polar(1.0, t)).abs());
        }
        for t in [self.t0, self.t0 + self.opening()] {
            m = m.max(self.value(Complex64::from_polar(1.0, t)).abs());
        }
        m
    }
}

fn check_point(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("point must be finite"))
    }
}

/// `F(z) = B_p |Re z|^p - |a Re z + b Im z|^p`.
pub fn eval_f(params: &OperatorParams, bp: f64, z: Complex64) -> f64 {
    let p = params.p();
    bp * z.re.abs().powf(p) - (params.a() * z.re + params.b() * z.im).abs().powf(p)
}

/// `G(z)`.
pub fn eval_g(minorant: &SectorMinorant, z: Complex64) -> Result<f64> {
    check_point(z)?;
    Ok(minorant.value(z))
}

/// Mean of `g` over a circle minus its value at the center.
pub fn circle_mean_margin<F: Fn(Complex64) -> f64>(g: &F, center: Complex64, radius: f64, nodes: usize) -> f64 {
    let step = 2.0 * PI / nodes as f64;
    let mut sum = 0.0;
    for j in 0..nodes {
        sum += g(center + Complex64::from_polar(radius, j as f64 * step));
    }
    sum / nodes as f64 - g(center)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Complex64,
    pub radius: f64,
}

const MIN_CIRCLE_NODES: usize = 128;

fn validate_circles(circles: &[Circle], nodes: usize) -> Result<()> {
    if circles.is_empty() {
        return Err(Error::Empty("circles"));
    }
    if nodes < MIN_CIRCLE_NODES {
        return Err(Error::Domain("at least 128 nodes per circle are required"));
    }
    for c in circles {
        check_point(c.center)?;
        if !(c.radius > 0.0 && c.radius.is_finite()) {
            return Err(Error::Domain("radius must be positive"));
        }
    }
    Ok(())
}

/// Mean-value check for an arbitrary function: each circle's margin must be
/// at least `-tolerance * weight(circle)`.
pub fn check_mean_value<F, W>(
    check_name: &'static str,
    g: F,
    weight: W,
    circles: &[Circle],
    nodes: usize,
    tolerance: f64,
) -> Result<CheckReport>
where
    F: Fn(Complex64) -> f64,
    W: Fn(&Circle) -> f64,
{
    validate_circles(circles, nodes)?;
    let mut worst = WorstTracker::new();
    for c in circles {
        let margin = circle_mean_margin(&g, c.center, c.radius, nodes) / weight(c);
        worst.push(margin, Location::Point(c.center));
    }
    Ok(CheckReport::from_margin(check_name, worst.worst, worst.location, worst.samples, tolerance))
}

/// Trapezoidal mean-value test of subharmonicity of `G`, with margins
/// normalized by `max(|z_c| + rho, rho)^p`.
pub fn check_mean_value_subharmonicity(
    minorant: &SectorMinorant,
    circles: &[Circle],
    nodes: usize,
    tolerance: f64,
) -> Result<CheckReport> {
    let p = minorant.params.p();
    check_mean_value(
        "mean-value-subharmonicity",
        |z| minorant.value(z),
        |c| (c.center.norm() + c.radius).max(c.radius).powf(p),
        circles,
        nodes,
        tolerance,
    )
}

/// `F - G >= -tolerance (1 + |z|^p)` on the given points.
pub fn check_majorization(minorant: &SectorMinorant, points: &[Complex64], tolerance: f64) -> Result<CheckReport> {
    if points.is_empty() {
        return Err(Error::Empty("points"));
    }
    let p = minorant.params.p();
    let mut worst = WorstTracker::new();
    for &z in points {
        check_point(z)?;
        let gap = eval_f(&minorant.params, minorant.bp, z) - minorant.value(z);
        worst.push(gap / (1.0 + z.norm().powf(p)), Location::Point(z));
    }
    Ok(CheckReport::from_margin("majorization", worst.worst, worst.location, worst.samples, tolerance))
}

/// `|F - G| <= tolerance (1 + |z|^p)` on the points outside `T`.
pub fn check_exterior_identity(minorant: &SectorMinorant, points: &[Complex64], tolerance: f64) -> Result<CheckReport> {
    if points.is_empty() {
        return Err(Error::Empty("points"));
    }
    let p = minorant.params.p();
    let mut worst = WorstTracker::new();
    for &z in points {
        check_point(z)?;
        if minorant.in_sector(z) {
            continue;
        }
        let gap = eval_f(&minorant.params, minorant.bp, z) - minorant.value(z);
        worst.push(-gap.abs() / (1.0 + z.norm().powf(p)), Location::Point(z));
    }
    let worst_violation = if worst.samples == 0 { 0.0 } else { worst.worst };
    Ok(CheckReport::from_margin("exterior-identity", worst_violation, worst.location, worst.samples, tolerance))
}

/// `h <= target` on `[p t0, p t0 + pi]`, with `nodes` uniform samples.
pub fn check_profile(minorant: &SectorMinorant, nodes: usize, tolerance: f64) -> Result<CheckReport> {
    if nodes < 2 {
        return Err(Error::Domain("at least two profile nodes are required"));
    }
    let start = minorant.params.p() * minorant.t0;
    let mut worst = WorstTracker::new();
    for j in 0..=nodes {
        let x = start + PI * j as f64 / nodes as f64;
        worst.push(minorant.profile_target(x) - minorant.profile(x), Location::Parameter(x));
    }
    Ok(CheckReport::from_margin("profile-minorant", worst.worst, worst.location, worst.samples, tolerance))
}

/// Outcome of the zero-sum direction check.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSumReport {
    /// Nonnegativity of `f(t) + f(t + pi/p)`; its location is the sampled argmin.
    pub report: CheckReport,
    /// `f(t0) + f(t0 + pi/p)`, which should vanish.
    pub at_t0: f64,
}

/// Normalized `f(t) + f(t + pi/p)` with `f(t) = B_p |cos t|^p - |a cos t + b sin t|^p`.
pub fn zero_sum(params: &OperatorParams, bp: f64, t: f64) -> f64 {
    let p = params.p();
    let scale = params.scale();
    if scale == 0.0 {
        return 0.0;
    }
    let f = |t: f64| {
        let (s, c) = t.sin_cos();
        bp * c.abs().powf(p) - (params.a() * c + params.b() * s).abs().powf(p)
    };
    (f(t) + f(t + PI / p)) / scale
}

/// Samples `f(t) + f(t + pi/p)` on `[0, pi)` (plus `t0` itself) and checks it
/// is nonnegative and vanishes at `t0`. Tolerances are relative to `B_p/(a^2+b^2)^(p/2)`.
pub fn check_zero_sum_direction(
    params: &OperatorParams,
    bp: f64,
    t0: f64,
    samples: usize,
    tolerance: f64,
) -> Result<ZeroSumReport> {
    if samples == 0 {
        return Err(Error::Empty("samples"));
    }
    let scale = params.scale();
    let unit = if scale > 0.0 { (bp / scale).max(1.0) } else { 1.0 };
    let tol = tolerance * unit;
    let mut worst = WorstTracker::new();
    let mut angles: Vec<f64> = (0..samples).map(|j| PI * j as f64 / samples as f64).collect();
    angles.push(t0.rem_euclid(PI));
    for t in angles {
        worst.push(zero_sum(params, bp, t), Location::Angle(t));
    }
    let at_t0 = zero_sum(params, bp, t0);
    let mut report = CheckReport::from_margin("zero-sum-direction", worst.worst, worst.location, worst.samples, tol);
    report.pass = report.pass && at_t0.abs() <= tol;
    Ok(ZeroSumReport { report, at_t0 })
}

/// Polar sample grid: `angular` equispaced angles (plus the four rays
/// bounding `T`) times `radial` radii log-spaced on `[r_min, r_max]`.
pub fn polar_grid(minorant: &SectorMinorant, angular: usize, r_min: f64, r_max: f64, radial: usize) -> Result<Vec<Complex64>> {
    if angular == 0 || radial == 0 {
        return Err(Error::Empty("grid"));
    }
    if !(r_min > 0.0 && r_max >= r_min && r_max.is_finite()) {
        return Err(Error::Domain("radii must satisfy 0 < r_min <= r_max"));
    }
    let mut angles: Vec<f64> = (0..angular).map(|j| 2.0 * PI * j as f64 / angular as f64).collect();
    let t1 = minorant.t0 + minorant.opening();
    angles.extend_from_slice(&[minorant.t0, t1, minorant.t0 + PI, t1 + PI]);
    let ratio = if radial > 1 { (r_max / r_min).ln() / (radial - 1) as f64 } else { 0.0 };
    let mut points = Vec::with_capacity(angles.len() * radial);
    for k in 0..radial {
        let r = r_min * (ratio * k as f64).exp();
        for &t in &angles {
            points.push(Complex64::from_polar(r, t));
        }
    }
    Ok(points)
}
