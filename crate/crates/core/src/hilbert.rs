//! Sampled signals on a uniform grid, discrete Hilbert transforms, the
//! harmonic extension to the upper half-plane, and the boundary-integral
//! and large-circle checks built on them.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fft::{fft, Direction};
use crate::operator::OperatorParams;
use crate::quadrature::{integrate_with_breaks, QuadBudget};
use crate::report::{CheckReport, Location, WorstTracker};
use crate::subharmonic::SectorMinorant;

const MIN_SAMPLES: usize = 16;

/// Samples `values[j]` of a function at `x0 + j dx`, at least 16 of them.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    x0: f64,
    dx: f64,
    values: Vec<f64>,
}

impl SampledSignal {
    pub fn new(x0: f64, dx: f64, values: Vec<f64>) -> Result<Self> {
        if !(x0.is_finite() && dx.is_finite() && dx > 0.0) {
            return Err(Error::Domain("grid origin and spacing must be finite with dx > 0"));
        }
        if values.len() < MIN_SAMPLES {
            return Err(Error::Empty("signal needs at least 16 samples"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("samples must be finite"));
        }
        Ok(SampledSignal { x0, dx, values })
    }

    pub fn from_fn<F: Fn(f64) -> f64>(x0: f64, dx: f64, n: usize, f: F) -> Result<Self> {
        Self::new(x0, dx, (0..n).map(|j| f(x0 + j as f64 * dx)).collect())
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }
    pub fn dx(&self) -> f64 {
        self.dx
    }
    pub fn len(&self) -> usize {
        self.values.len()
    }
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
    pub fn values(&self) -> &[f64] {
        &self.values
    }
    pub fn x(&self, j: usize) -> f64 {
        self.x0 + j as f64 * self.dx
    }
    /// Last grid point.
    pub fn end(&self) -> f64 {
        self.x(self.len() - 1)
    }
    pub fn peak(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
    /// `dx * sum |f_j|^p`.
    pub fn lp_norm_pow(&self, p: f64) -> f64 {
        self.dx * self.values.iter().map(|v| v.abs().powf(p)).sum::<f64>()
    }
    /// `dx * sum f_j`.
    pub fn integral(&self) -> f64 {
        self.dx * self.values.iter().sum::<f64>()
    }
    /// Same grid with new values.
    pub fn with_values(&self, values: Vec<f64>) -> Result<Self> {
        if values.len() != self.len() {
            return Err(Error::Domain("value count must match the grid"));
        }
        Self::new(self.x0, self.dx, values)
    }
}

/// How the FFT transform treats the ends of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// The signal must have decayed to `1e-8` of its peak at both ends.
    Decaying,
    /// The samples are one period of a periodic function.
    Periodic,
}

const EDGE_RATIO: f64 = 1e-8;

/// Spectral Hilbert transform: multiplies the DFT by `-i sgn(k)`, with the
/// zero and Nyquist bins set to zero.
pub fn hilbert_fft(signal: &SampledSignal, boundary: Boundary) -> Result<SampledSignal> {
    let peak = signal.peak();
    if peak == 0.0 {
        return signal.with_values(vec![0.0; signal.len()]);
    }
    if boundary == Boundary::Decaying {
        let v = signal.values();
        let edge = v[0].abs().max(v[v.len() - 1].abs()) / peak;
        if edge > EDGE_RATIO {
            return Err(Error::Periodization { edge_ratio: edge });
        }
    }
    let n = signal.len();
    let mut buf: Vec<Complex64> = signal.values().iter().map(|&v| Complex64::new(v, 0.0)).collect();
    fft(&mut buf, Direction::Forward);
    buf[0] = Complex64::new(0.0, 0.0);
    let half = n / 2;
    for (k, c) in buf.iter_mut().enumerate().skip(1) {
        if n.is_multiple_of(2) && k == half {
            *c = Complex64::new(0.0, 0.0);
        } else if k <= half {
            *c = Complex64::new(c.im, -c.re);
        } else {
            *c = Complex64::new(-c.im, c.re);
        }
    }
    fft(&mut buf, Direction::Inverse);
    let scale = 1.0 / n as f64;
    signal.with_values(buf.iter().map(|c| c.re * scale).collect())
}

/// Local interpolation of a signal with an 8-point Lagrange stencil; zero outside the grid.
struct Interpolant<'a> {
    signal: &'a SampledSignal,
}

const STENCIL: usize = 8;

impl Interpolant<'_> {
    fn stencil_start(&self, u: f64) -> usize {
        let n = self.signal.len();
        let base = u.floor() as isize - (STENCIL as isize / 2 - 1);
        base.clamp(0, (n.saturating_sub(STENCIL)) as isize) as usize
    }

    /// Value and derivative at `x`.
    fn eval(&self, x: f64) -> (f64, f64) {
        let s = self.signal;
        let u = (x - s.x0) / s.dx;
        if u < 0.0 || u > (s.len() - 1) as f64 {
            return (0.0, 0.0);
        }
        let nearest = u.round();
        if (u - nearest).abs() < 1e-12 {
            let j = nearest as usize;
            return (s.values[j], self.node_derivative(j));
        }
        let start = self.stencil_start(u);
        let m = STENCIL.min(s.len());
        let nodes: Vec<f64> = (0..m).map(|k| (start + k) as f64).collect();
        let mut value = 0.0;
        let mut slope = 0.0;
        for k in 0..m {
            let mut w = 1.0;
            let mut dw = 0.0;
            for l in 0..m {
                if l == k {
                    continue;
                }
                let denom = nodes[k] - nodes[l];
                // Product rule for the derivative of the basis polynomial.
                dw = dw * (u - nodes[l]) / denom + w / denom;
                w *= (u - nodes[l]) / denom;
            }
            value += w * s.values[start + k];
            slope += dw * s.values[start + k];
        }
        (value, slope / s.dx)
    }

    /// Eighth-order central difference, falling back to lower order at the edges.
    fn node_derivative(&self, j: usize) -> f64 {
        const C: [f64; 4] = [4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];
        let s = self.signal;
        let v = &s.values;
        let n = v.len();
        let reach = j.min(n - 1 - j).min(4);
        let d = match reach {
            0 => {
                if j == 0 {
                    v[1] - v[0]
                } else {
                    v[n - 1] - v[n - 2]
                }
            }
            1 => 0.5 * (v[j + 1] - v[j - 1]),
            2 => (8.0 * (v[j + 1] - v[j - 1]) - (v[j + 2] - v[j - 2])) / 12.0,
            3 => (45.0 * (v[j + 1] - v[j - 1]) - 9.0 * (v[j + 2] - v[j - 2]) + (v[j + 3] - v[j - 3])) / 60.0,
            _ => (1..=4).map(|k| C[k - 1] * (v[j + k] - v[j - k])).sum(),
        };
        d / s.dx
    }
}

/// Principal-value Hilbert transform at a point of the grid interval.
///
/// Pairs `x - t` and `x + t` are combined into the even, regular integrand
/// `(f(x - t) - f(x + t)) / t`, which the trapezoidal rule with step `dx`
/// integrates spectrally for smooth data. Its value at `t = 0` is `-2 f'(x)`.
pub fn hilbert_pv(signal: &SampledSignal, x: f64) -> Result<f64> {
    if !x.is_finite() || x < signal.x0() || x > signal.end() {
        return Err(Error::Domain("evaluation point must lie on the grid interval"));
    }
    let interp = Interpolant { signal };
    let dx = signal.dx();
    let (_, slope) = interp.eval(x);
    let reach = ((x - signal.x0()).max(signal.end() - x) / dx).ceil() as usize + 1;
    let mut sum = -slope;
    for k in 1..=reach {
        let t = k as f64 * dx;
        sum += (interp.eval(x - t).0 - interp.eval(x + t).0) / t;
    }
    Ok(sum * dx / PI)
}

/// Value `h(z) = u + i v` of the analytic extension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtensionPoint {
    pub z: Complex64,
    pub u: f64,
    pub v: f64,
}

impl ExtensionPoint {
    pub fn h(&self) -> Complex64 {
        Complex64::new(self.u, self.v)
    }
}

/// Poisson and conjugate-Poisson extension of the piecewise-linear
/// interpolant of a signal, integrated exactly cell by cell.
///
/// The result is an exact analytic function in the upper half-plane, so
/// compositions with subharmonic functions stay subharmonic.
#[derive(Debug, Clone)]
pub struct PiecewiseLinearExtension {
    signal: SampledSignal,
    first: usize,
    last: usize,
}

impl PiecewiseLinearExtension {
    pub fn new(signal: &SampledSignal) -> Self {
        let v = signal.values();
        let first = v.iter().position(|&x| x != 0.0).unwrap_or(0).saturating_sub(1);
        let last = v.iter().rposition(|&x| x != 0.0).map_or(0, |j| (j + 1).min(v.len() - 1));
        PiecewiseLinearExtension { signal: signal.clone(), first, last }
    }

    pub fn signal(&self) -> &SampledSignal {
        &self.signal
    }

    /// Grid points bounding the cells with nonzero data.
    pub fn support_nodes(&self) -> Vec<f64> {
        (self.first..=self.last).map(|j| self.signal.x(j)).collect()
    }

    pub fn eval(&self, z: Complex64) -> Result<ExtensionPoint> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Domain("point must be finite"));
        }
        if !(z.im > 0.0) {
            return Err(Error::Domain("extension is defined for Im z > 0"));
        }
        let (x, y) = (z.re, z.im);
        let s = &self.signal;
        let dx = s.dx();
        let v = s.values();
        let (mut u_sum, mut v_sum) = (0.0, 0.0);
        for j in self.first..self.last {
            let (f0, f1) = (v[j], v[j + 1]);
            if f0 == 0.0 && f1 == 0.0 {
                continue;
            }
            let slope = (f1 - f0) / dx;
            let tau0 = s.x(j) - x;
            let tau1 = tau0 + dx;
            // Value of the linear piece at t = x.
            let c = f0 - slope * tau0;
            let datan = (dx * y).atan2(y * y + tau0 * tau1);
            let dlog = (dx * (tau0 + tau1) / (tau0 * tau0 + y * y)).ln_1p();
            u_sum += c * datan + slope * 0.5 * y * dlog;
            v_sum += -0.5 * c * dlog - slope * (dx - y * datan);
        }
        Ok(ExtensionPoint { z, u: u_sum / PI, v: v_sum / PI })
    }
}

/// `h(z)` for a single point.
pub fn halfplane_extension(signal: &SampledSignal, z: Complex64) -> Result<ExtensionPoint> {
    PiecewiseLinearExtension::new(signal).eval(z)
}

/// `sup (|u| + |v|)(1 + |x| + |y|)` over the given points.
pub fn decay_constant(extension: &PiecewiseLinearExtension, points: &[Complex64]) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::Empty("points"));
    }
    let mut c: f64 = 0.0;
    for &z in points {
        let e = extension.eval(z)?;
        c = c.max((e.u.abs() + e.v.abs()) * (1.0 + z.re.abs() + z.im.abs()));
    }
    Ok(c)
}

/// `|G(h(z))| <= C_G C_f^p / (1 + |x| + |y|)^p`, where `C_G` bounds `|G|` on the unit circle.
pub fn check_decay_envelope(
    minorant: &SectorMinorant,
    extension: &PiecewiseLinearExtension,
    points: &[Complex64],
    decay: f64,
) -> Result<CheckReport> {
    if points.is_empty() {
        return Err(Error::Empty("points"));
    }
    let p = minorant.params().p();
    let cg = minorant.unit_circle_bound(4096) * (1.0 + 1e-6);
    let mut worst = WorstTracker::new();
    for &z in points {
        let g = minorant.value(extension.eval(z)?.h());
        let bound = cg * decay.powf(p) / (1.0 + z.re.abs() + z.im.abs()).powf(p);
        let margin = if bound > 0.0 { 1.0 - g.abs() / bound } else { -g.abs() };
        worst.push(margin, Location::Point(z));
    }
    Ok(CheckReport::from_margin("decay-envelope", worst.worst, worst.location, worst.samples, 0.0))
}

/// Boundary integrals of a decaying signal with its FFT conjugate.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryIntegralReport {
    /// `dx sum G(f + i Hf)` over the grid.
    pub integral: f64,
    /// Estimate of `int G(h)` outside the grid from `Hf ~ (int f) / (pi x)`.
    pub tail_estimate: f64,
    /// `dx sum |f|^p`.
    pub lp_pow: f64,
    /// `dx sum |a f + b Hf|^p`.
    pub operator_pow: f64,
    /// `integral >= 0`, relative to `B_p ||f||_p^p`.
    pub nonnegativity: CheckReport,
    /// `||(aI+bH) f||_p^p <= B_p ||f||_p^p - int G(h)`, relative to `B_p ||f||_p^p`.
    pub norm_inequality: CheckReport,
}

impl BoundaryIntegralReport {
    /// `integral + tail_estimate`.
    pub fn line_integral(&self) -> f64 {
        self.integral + self.tail_estimate
    }
}

pub fn boundary_integral_check(
    signal: &SampledSignal,
    minorant: &SectorMinorant,
    tolerance: f64,
) -> Result<BoundaryIntegralReport> {
    let params = minorant.params();
    let p = params.p();
    let hf = hilbert_fft(signal, Boundary::Decaying)?;
    let dx = signal.dx();
    let (mut integral, mut operator_pow) = (0.0, 0.0);
    let mut worst_point = WorstTracker::new();
    for (&f, &g) in signal.values().iter().zip(hf.values()) {
        let z = Complex64::new(f, g);
        let gz = minorant.value(z);
        integral += gz;
        operator_pow += (params.a() * f + params.b() * g).abs().powf(p);
        worst_point.push(gz, Location::Point(z));
    }
    integral *= dx;
    operator_pow *= dx;
    let lp_pow = signal.lp_norm_pow(p);
    let tail_estimate = conjugate_tail(signal, minorant);
    let unit = minorant.bp() * lp_pow;
    let (m1, m2) = if unit > 0.0 {
        (integral / unit, (minorant.bp() * lp_pow - integral - operator_pow) / unit)
    } else {
        (0.0, 0.0)
    };
    Ok(BoundaryIntegralReport {
        integral,
        tail_estimate,
        lp_pow,
        operator_pow,
        nonnegativity: CheckReport::from_margin("boundary-integral", m1, worst_point.location, signal.len(), tolerance),
        norm_inequality: CheckReport::from_margin("norm-inequality", m2, Location::None, signal.len(), tolerance),
    })
}

/// `int_{outside} G(i M / (pi (x - c)))` with `M = int f` and `c` its centroid.
fn conjugate_tail(signal: &SampledSignal, minorant: &SectorMinorant) -> f64 {
    let p = minorant.params().p();
    let mass = signal.integral();
    if mass == 0.0 {
        return 0.0;
    }
    let weight: f64 = signal.values().iter().map(|v| v.abs()).sum();
    let center = signal.values().iter().enumerate().map(|(j, v)| signal.x(j) * v.abs()).sum::<f64>() / weight;
    let g_unit = minorant.value(Complex64::new(0.0, mass.signum()));
    let amp = (mass.abs() / PI).powf(p);
    let left = center - signal.x0() + 0.5 * signal.dx();
    let right = signal.end() - center + 0.5 * signal.dx();
    g_unit * amp * (left.powf(1.0 - p) + right.powf(1.0 - p)) / (p - 1.0)
}

/// Parameters of the large-circle check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleOptions {
    /// Target arc length between trapezoid nodes.
    pub arc_spacing: f64,
    pub min_nodes: usize,
    /// Radii below this are rejected.
    pub min_radius: f64,
    pub residual_tol: f64,
    /// Allowed relative gap between the lower-arc integral at the largest radius and the line integral.
    pub convergence_tol: f64,
    /// Allowed distance of the fitted upper-arc decay exponent from `1 - p`.
    pub slope_tol: f64,
    pub budget: QuadBudget,
}

impl Default for CircleOptions {
    fn default() -> Self {
        CircleOptions {
            arc_spacing: 0.02,
            min_nodes: 4096,
            min_radius: 100.0,
            residual_tol: 1e-6,
            convergence_tol: 0.01,
            slope_tol: 0.3,
            budget: QuadBudget { abs_tol: 1e-12, rel_tol: 1e-9, max_intervals: 50_000 },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleRow {
    pub radius: f64,
    /// `int G(h) ds` over the upper arc, `arg in [-pi/4, 5pi/4]` about `iR`.
    pub upper: f64,
    /// Same over the lower arc, trapezoidal in arc length.
    pub lower: f64,
    /// Lower arc via the graph parametrization over `x`.
    pub lower_graph: f64,
    /// `2 pi R' G(h(iR))`.
    pub center_term: f64,
    /// `upper + lower - center_term`.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CircleArgumentReport {
    pub rows: Vec<CircleRow>,
    /// Grid integral plus tail estimate of `int G(h(x)) dx`.
    pub line_integral: f64,
    /// Least-squares slope of `log |upper|` against `log R`.
    pub upper_slope: f64,
    /// `|lower_graph(R_max) - line_integral| / |line_integral|`.
    pub lower_gap: f64,
    /// Mean-value residuals are nonnegative.
    pub residual: CheckReport,
    /// Upper-arc decay exponent close to `1 - p`.
    pub decay: CheckReport,
    /// Lower-arc integral close to the line integral at the largest radius.
    pub convergence: CheckReport,
}

fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Integrates `G(h)` over circles `|z - iR| = R - 1/R`, split into the upper
/// arc and the lower arc near the real axis.
pub fn circle_argument_check(
    signal: &SampledSignal,
    minorant: &SectorMinorant,
    radii: &[f64],
    options: CircleOptions,
) -> Result<CircleArgumentReport> {
    if radii.is_empty() {
        return Err(Error::Empty("radii"));
    }
    if radii.iter().any(|&r| !(r.is_finite() && r >= options.min_radius)) {
        return Err(Error::Domain("radii must be at least the configured minimum"));
    }
    let boundary = boundary_integral_check(signal, minorant, options.residual_tol)?;
    let line_integral = boundary.line_integral();
    let ext = PiecewiseLinearExtension::new(signal);
    let g_of = |z: Complex64| -> Result<f64> { Ok(minorant.value(ext.eval(z)?.h())) };
    let p = minorant.params().p();

    let mut rows = Vec::with_capacity(radii.len());
    for &radius in radii {
        let rp = radius - 1.0 / radius;
        let center = Complex64::new(0.0, radius);
        let wanted = (2.0 * PI * rp / options.arc_spacing).ceil() as usize;
        let nodes = wanted.max(options.min_nodes).div_ceil(8) * 8;
        let ds = 2.0 * PI * rp / nodes as f64;
        // Nodes 5N/8 ..= 7N/8 form the lower arc; the endpoints are shared.
        let (lo_end, hi_end) = (5 * nodes / 8, 7 * nodes / 8);
        let (mut upper, mut lower) = (0.0, 0.0);
        for j in 0..nodes {
            let phi = 2.0 * PI * j as f64 / nodes as f64;
            let g = g_of(center + Complex64::from_polar(rp, phi))? * ds;
            if j == lo_end || j == hi_end {
                upper += 0.5 * g;
                lower += 0.5 * g;
            } else if j > lo_end && j < hi_end {
                lower += g;
            } else {
                upper += g;
            }
        }
        let center_term = 2.0 * PI * rp * g_of(center)?;
        let lower_graph = lower_arc_graph(&ext, minorant, radius, options.budget)?;
        rows.push(CircleRow { radius, upper, lower, lower_graph, center_term, residual: upper + lower - center_term });
    }

    let mut residual = WorstTracker::new();
    for r in &rows {
        let scale = r.upper.abs() + r.lower.abs() + r.center_term.abs();
        let margin = if scale > 0.0 { r.residual / scale } else { 0.0 };
        residual.push(margin, Location::Parameter(r.radius));
    }
    let residual = CheckReport::from_margin("circle-residual", residual.worst, residual.location, rows.len(), options.residual_tol);

    let nonzero: Vec<&CircleRow> = rows.iter().filter(|r| r.upper != 0.0).collect();
    let (upper_slope, decay) = if nonzero.len() >= 2 {
        let xs: Vec<f64> = nonzero.iter().map(|r| r.radius.ln()).collect();
        let ys: Vec<f64> = nonzero.iter().map(|r| r.upper.abs().ln()).collect();
        let slope = fit_slope(&xs, &ys);
        let margin = options.slope_tol - (slope - (1.0 - p)).abs();
        (slope, CheckReport::from_margin("upper-arc-decay", margin, Location::Parameter(slope), xs.len(), 0.0))
    } else {
        (f64::NAN, CheckReport::from_margin("upper-arc-decay", 0.0, Location::None, nonzero.len(), 0.0))
    };

    let last = rows.iter().max_by(|a, b| a.radius.total_cmp(&b.radius)).expect("radii are nonempty");
    let lower_gap = if line_integral != 0.0 {
        (last.lower_graph - line_integral).abs() / line_integral.abs()
    } else {
        last.lower_graph.abs()
    };
    let convergence = CheckReport::from_margin(
        "lower-arc-convergence",
        options.convergence_tol - lower_gap,
        Location::Parameter(last.radius),
        rows.len(),
        0.0,
    );
    Ok(CircleArgumentReport { rows, line_integral, upper_slope, lower_gap, residual, decay, convergence })
}

/// `int G(h(x + i R - i R' sqrt(1 - x^2/R'^2))) / sqrt(1 - x^2/R'^2) dx` over `|x| <= R'/sqrt 2`.
fn lower_arc_graph(
    ext: &PiecewiseLinearExtension,
    minorant: &SectorMinorant,
    radius: f64,
    budget: QuadBudget,
) -> Result<f64> {
    let rp = radius - 1.0 / radius;
    let edge = rp / 2f64.sqrt();
    let mut breaks = Vec::from([-edge]);
    breaks.extend(ext.support_nodes().into_iter().filter(|x| x.abs() < edge));
    breaks.push(edge);
    // The support nodes can repeat the edges only for enormous signals; keep the partition sorted.
    breaks.sort_by(f64::total_cmp);
    let integrand = |x: f64| {
        let w = (1.0 - (x / rp) * (x / rp)).sqrt();
        let z = Complex64::new(x, radius - rp * w);
        match ext.eval(z) {
            Ok(e) => minorant.value(e.h()) / w,
            Err(_) => f64::NAN,
        }
    };
    Ok(integrate_with_breaks(integrand, &breaks, budget)?.value)
}

/// `||(aI + bH) f||_p^p / ||f||_p^p` with the FFT conjugate.
pub fn empirical_norm_ratio(signal: &SampledSignal, params: &OperatorParams) -> Result<f64> {
    let hf = hilbert_fft(signal, Boundary::Decaying)?;
    empirical_ratio_with(signal, &hf, params)
}

/// Same ratio with a supplied conjugate.
pub fn empirical_ratio_with(signal: &SampledSignal, conjugate: &SampledSignal, params: &OperatorParams) -> Result<f64> {
    if conjugate.len() != signal.len() {
        return Err(Error::Domain("conjugate must share the grid"));
    }
    let p = params.p();
    let den = signal.lp_norm_pow(p);
    if den == 0.0 {
        return Err(Error::Domain("signal is zero"));
    }
    let num = signal.dx()
        * signal
            .values()
            .iter()
            .zip(conjugate.values())
            .map(|(f, g)| (params.a() * f + params.b() * g).abs().powf(p))
            .sum::<f64>();
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bump(x: f64) -> f64 {
        (-x * x).exp()
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(SampledSignal::new(0.0, 0.0, vec![1.0; 16]).is_err());
        assert!(SampledSignal::new(0.0, 1.0, vec![1.0; 15]).is_err());
        let mut v = vec![1.0; 16];
        v[3] = f64::NAN;
        assert!(SampledSignal::new(0.0, 1.0, v).is_err());
    }

    #[test]
    fn non_decaying_signal_is_rejected() {
        let s = SampledSignal::from_fn(-10.0, 0.1, 200, |x| 1.0 / (1.0 + x * x)).unwrap();
        assert!(matches!(hilbert_fft(&s, Boundary::Decaying), Err(Error::Periodization { .. })));
        assert!(hilbert_fft(&s, Boundary::Periodic).is_ok());
    }

    #[test]
    fn zero_signal() {
        let s = SampledSignal::new(-1.0, 0.5, vec![0.0; 16]).unwrap();
        assert!(hilbert_fft(&s, Boundary::Decaying).unwrap().values().iter().all(|&v| v == 0.0));
        let e = halfplane_extension(&s, Complex64::new(0.0, 1.0)).unwrap();
        assert_eq!((e.u, e.v), (0.0, 0.0));
    }

    #[test]
    fn interpolant_reproduces_polynomials() {
        let s = SampledSignal::from_fn(-2.0, 0.25, 17, |x| x * x * x - x).unwrap();
        let interp = Interpolant { signal: &s };
        for x in [-1.9, -0.33, 0.1, 1.77] {
            let (v, d) = interp.eval(x);
            assert!((v - (x * x * x - x)).abs() < 1e-12);
            assert!((d - (3.0 * x * x - 1.0)).abs() < 1e-10);
        }
    }

    #[test]
    fn extension_rejects_lower_half_plane() {
        let s = SampledSignal::from_fn(-8.0, 0.1, 161, bump).unwrap();
        assert!(halfplane_extension(&s, Complex64::new(0.0, 0.0)).is_err());
        assert!(halfplane_extension(&s, Complex64::new(0.0, -1.0)).is_err());
    }
}
