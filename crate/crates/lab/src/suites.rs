//! Check suites run by `sharpnorm certify` and the acceptance harness.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sharpnorm_core::extremal::{certify_lower_bound, gamma_schedule, LowerBoundOptions};
use sharpnorm_core::hilbert::{
    boundary_integral_check, check_decay_envelope, circle_argument_check, decay_constant, empirical_norm_ratio, empirical_ratio_with,
    CircleOptions, PiecewiseLinearExtension,
};
use sharpnorm_core::quadrature::QuadBudget;
use sharpnorm_core::subharmonic::{
    check_exterior_identity, check_majorization, check_mean_value, check_mean_value_subharmonicity, check_profile,
    check_zero_sum_direction, circle_mean_margin, polar_grid, Circle,
};
use sharpnorm_core::{compute_sharp_constant, CheckReport, Location, OperatorParams, SectorMinorant, SharpConstant};

use crate::manifest::{CheckKind, CheckSummary};
use crate::signals::{extremal_signal, random_bump_signal, unit_bump_signal, ExtremalGrid};
use crate::tolerances::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Inequality5,
    Subharmonic,
    Extremal,
    Boundary,
    NormBound,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Inequality5, Suite::Subharmonic, Suite::Extremal, Suite::Boundary, Suite::NormBound];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Inequality5 => "inequality5",
            Suite::Subharmonic => "subharmonic",
            Suite::Extremal => "extremal",
            Suite::Boundary => "boundary",
            Suite::NormBound => "norm-bound",
        }
    }

    fn stream(self) -> u64 {
        self as u64 + 1
    }
}

pub const MAJORIZATION_SAMPLES: usize = 100_000;
pub const MEAN_VALUE_CIRCLES: usize = 10_000;
pub const CIRCLE_NODES: usize = 512;
pub const RANDOM_SIGNALS: usize = 50;
pub const DEFAULT_RADII: [f64; 3] = [200.0, 400.0, 800.0];

/// Everything a suite needs besides its own random stream.
pub struct Context {
    pub params: OperatorParams,
    pub sharp: SharpConstant,
    pub minorant: SectorMinorant,
    pub tolerances: Tolerances,
    pub seed: u64,
    pub radii: Vec<f64>,
}

impl Context {
    pub fn new(params: OperatorParams, tolerances: Tolerances, seed: u64, radii: Vec<f64>) -> sharpnorm_core::Result<Self> {
        let sharp = compute_sharp_constant(&params, tolerances.get("sharp_constant"))?;
        let minorant = SectorMinorant::new(&params, &sharp)?;
        Ok(Context { params, sharp, minorant, tolerances, seed, radii })
    }

    fn rng(&self, suite: Suite) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(suite.stream());
        rng
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub checks: Vec<CheckReport>,
    pub diagnostics: Vec<CheckReport>,
}

impl SuiteOutcome {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|r| r.pass)
    }

    pub fn summaries(&self) -> Vec<CheckSummary> {
        let name = self.suite.name();
        self.checks
            .iter()
            .map(|r| CheckSummary::new(name, CheckKind::Check, r))
            .chain(self.diagnostics.iter().map(|r| CheckSummary::new(name, CheckKind::Diagnostic, r)))
            .collect()
    }

    pub fn find(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().chain(self.diagnostics.iter()).find(|r| r.check_name == name)
    }
}

pub fn run(suite: Suite, ctx: &Context) -> sharpnorm_core::Result<SuiteOutcome> {
    match suite {
        Suite::Inequality5 => inequality5(ctx),
        Suite::Subharmonic => subharmonic(ctx),
        Suite::Extremal => extremal(ctx),
        Suite::Boundary => boundary(ctx),
        Suite::NormBound => norm_bound(ctx),
    }
}

fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    (rng.random_range(lo.ln()..hi.ln())).exp()
}

/// Random points with log-uniform radii over four decades.
pub fn random_points<R: Rng>(rng: &mut R, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::from_polar(log_uniform(rng, 1e-2, 1e2), rng.random_range(0.0..2.0 * PI)))
        .collect()
}

fn inequality5(ctx: &Context) -> sharpnorm_core::Result<SuiteOutcome> {
    let mut rng = ctx.rng(Suite::Inequality5);
    let mut points = random_points(&mut rng, MAJORIZATION_SAMPLES);
    points.extend(polar_grid(&ctx.minorant, 720, 1e-2, 1e2, 9)?);
    let t = &ctx.tolerances;
    Ok(SuiteOutcome {
        suite: Suite::Inequality5,
        checks: vec![
            check_majorization(&ctx.minorant, &points, t.get("majorization"))?,
            check_exterior_identity(&ctx.minorant, &points, t.get("exterior_identity"))?,
        ],
        diagnostics: Vec::new(),
    })
}

/// Origin-centered, ray-straddling and generic circles.
pub fn test_circles<R: Rng>(rng: &mut R, minorant: &SectorMinorant, n: usize) -> Vec<Circle> {
    let rays = [
        minorant.t0(),
        minorant.t0() + minorant.opening(),
        minorant.t0() + PI,
        minorant.t0() + minorant.opening() + PI,
    ];
    (0..n)
        .map(|k| match k % 5 {
            0 => Circle { center: Complex64::new(0.0, 0.0), radius: log_uniform(rng, 1e-3, 10.0) },
            1 | 2 => {
                let r = log_uniform(rng, 1e-2, 10.0);
                let ray = rays[rng.random_range(0..rays.len())];
                Circle { center: Complex64::from_polar(r, ray), radius: r * rng.random_range(0.05..2.0) }
            }
            _ => Circle {
                center: Complex64::from_polar(log_uniform(rng, 1e-2, 10.0), rng.random_range(0.0..2.0 * PI)),
                radius: log_uniform(rng, 1e-3, 10.0),
            },
        })
        .collect()
}

/// Mean-value checker on `Re z^2` (margin 0) and `|z|^2` (margin `rho^2`).
pub fn checker_self_tests(circles: &[Circle], tolerance: f64) -> sharpnorm_core::Result<Vec<CheckReport>> {
    let harmonic = check_mean_value("selftest-harmonic", |z| (z * z).re, |_| 1.0, circles, CIRCLE_NODES, tolerance)?;
    let mut worst = f64::INFINITY;
    let mut at = Location::None;
    for c in circles {
        let m = circle_mean_margin(&|z: Complex64| z.norm_sqr(), c.center, c.radius, CIRCLE_NODES);
        let margin = -(m - c.radius * c.radius).abs();
        if margin < worst {
            worst = margin;
            at = Location::Point(c.center);
        }
    }
    // The harmonic margin must vanish, not just be nonnegative.
    let mut harmonic = harmonic;
    harmonic.pass = harmonic.pass && harmonic.worst_violation <= tolerance;
    let radial = CheckReport::from_margin("selftest-radial", worst, at, circles.len(), tolerance);
    Ok(vec![harmonic, radial])
}

fn subharmonic(ctx: &Context) -> sharpnorm_core::Result<SuiteOutcome> {
    let mut rng = ctx.rng(Suite::Subharmonic);
    let t = &ctx.tolerances;
    // Unit-scale circles for the self-tests so the absolute tolerances are meaningful.
    let unit: Vec<Circle> = (0..200)
        .map(|_| Circle {
            center: Complex64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)),
            radius: rng.random_range(0.01..1.0),
        })
        .collect();
    let mut checks = checker_self_tests(&unit, t.get("mean_value_selftest"))?;
    let circles = test_circles(&mut rng, &ctx.minorant, MEAN_VALUE_CIRCLES);
    checks.push(check_mean_value_subharmonicity(&ctx.minorant, &circles, CIRCLE_NODES, t.get("mean_value"))?);
    checks.push(check_zero_sum_direction(&ctx.params, ctx.sharp.value, ctx.sharp.t0, 20_000, t.get("zero_sum"))?.report);
    checks.push(check_profile(&ctx.minorant, 4000, t.get("profile"))?);
    Ok(SuiteOutcome { suite: Suite::Subharmonic, checks, diagnostics: Vec::new() })
}

pub fn lower_bound_options(t: &Tolerances) -> LowerBoundOptions {
    LowerBoundOptions {
        gap_tol: t.get("extremal_gap"),
        upper_slack: t.get("extremal_upper_slack"),
        budget: QuadBudget { rel_tol: t.get("quad_rel"), ..QuadBudget::default() },
    }
}

fn extremal(ctx: &Context) -> sharpnorm_core::Result<SuiteOutcome> {
    let schedule = if ctx.params.p() == 2.0 { Vec::new() } else { gamma_schedule(ctx.params.p(), 3..=12) };
    let cert = certify_lower_bound(&ctx.params, &ctx.sharp, &schedule, lower_bound_options(&ctx.tolerances))?;
    Ok(SuiteOutcome { suite: Suite::Extremal, checks: cert.reports, diagnostics: Vec::new() })
}

fn boundary(ctx: &Context) -> sharpnorm_core::Result<SuiteOutcome> {
    let t = &ctx.tolerances;
    let signal = unit_bump_signal()?;
    let report = boundary_integral_check(&signal, &ctx.minorant, t.get("boundary_integral"))?;
    let options = CircleOptions {
        residual_tol: t.get("circle_residual"),
        convergence_tol: t.get("circle_convergence"),
        slope_tol: t.get("circle_slope"),
        ..CircleOptions::default()
    };
    let circle = circle_argument_check(&signal, &ctx.minorant, &ctx.radii, options)?;
    let ext = PiecewiseLinearExtension::new(&signal);
    let points: Vec<Complex64> = (0..40)
        .flat_map(|i| (0..10).map(move |k| Complex64::new(-100.0 + 5.0 * i as f64, 0.01 * 2.5f64.powi(k))))
        .collect();
    let c = decay_constant(&ext, &points)?;
    let envelope = check_decay_envelope(&ctx.minorant, &ext, &points, c)?;
    Ok(SuiteOutcome {
        suite: Suite::Boundary,
        checks: vec![report.nonnegativity, report.norm_inequality, circle.residual, envelope],
        diagnostics: vec![circle.decay, circle.convergence],
    })
}

fn norm_bound(ctx: &Context) -> sharpnorm_core::Result<SuiteOutcome> {
    let mut rng = ctx.rng(Suite::NormBound);
    let t = &ctx.tolerances;
    let bp = ctx.sharp.value;
    let mut worst = f64::INFINITY;
    let mut at = 0usize;
    for k in 0..RANDOM_SIGNALS {
        let s = random_bump_signal(&mut rng)?;
        let margin = bp + t.get("norm_bound") - empirical_norm_ratio(&s, &ctx.params)?;
        if margin < worst {
            worst = margin;
            at = k;
        }
    }
    let checks = vec![CheckReport::from_margin("norm-bound", worst, Location::Parameter(at as f64), RANDOM_SIGNALS, 0.0)];
    let mut diagnostics = Vec::new();
    if ctx.params.p() != 2.0 && bp > 0.0 {
        let gamma = (1.0 - 1e-3) * PI / (2.0 * ctx.params.p());
        let (g, hg) = extremal_signal(&ctx.params, &ctx.sharp, gamma, ExtremalGrid::default())?;
        let ratio = empirical_ratio_with(&g, &hg, &ctx.params)?;
        diagnostics.push(CheckReport::from_margin(
            "extremal-approach",
            ratio / bp - t.get("extremal_approach"),
            Location::Parameter(gamma),
            g.len(),
            0.0,
        ));
    }
    Ok(SuiteOutcome { suite: Suite::NormBound, checks, diagnostics })
}
