//! Test signals shared by the check suites and the acceptance harness.

use rand::Rng;
use sharpnorm_core::extremal::{maximizing_direction, ExtremalFamily, Regime};
use sharpnorm_core::hilbert::{hilbert_fft, Boundary, SampledSignal};
use sharpnorm_core::{OperatorParams, Result, SharpConstant};

/// `exp(-1/(1 - x^2))` on `(-1, 1)`, zero elsewhere.
pub fn unit_bump(x: f64) -> f64 {
    if x.abs() < 1.0 {
        (-1.0 / (1.0 - x * x)).exp()
    } else {
        0.0
    }
}

/// The unit bump on `[-256, 256)` with spacing `1/64`.
pub fn unit_bump_signal() -> Result<SampledSignal> {
    SampledSignal::from_fn(-256.0, 1.0 / 64.0, 32768, unit_bump)
}

/// A sum of one to four scaled and shifted unit bumps, sampled on `[-256, 256)` with spacing `1/32`.
pub fn random_bump_signal<R: Rng>(rng: &mut R) -> Result<SampledSignal> {
    let count = rng.random_range(1..=4);
    let bumps: Vec<(f64, f64, f64)> = (0..count)
        .map(|_| (rng.random_range(-4.0..4.0), rng.random_range(0.5..3.0), rng.random_range(-1.0..1.0)))
        .collect();
    SampledSignal::from_fn(-256.0, 1.0 / 32.0, 16384, |x| {
        bumps.iter().map(|(c, w, a)| a * unit_bump((x - c) / w)).sum()
    })
}

/// Grid used for sampled extremal signals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalGrid {
    pub half_width: f64,
    pub dx: f64,
    /// Width of the Gaussian window `exp(-(x/W)^2)`.
    pub window: f64,
}

impl Default for ExtremalGrid {
    fn default() -> Self {
        ExtremalGrid { half_width: 512.0, dx: 1.0 / 256.0, window: 96.0 }
    }
}

/// Samples of `g = alpha f + beta Hf` for the family at `gamma` and of its
/// conjugate `Hg = alpha Hf - beta f`, windowed, on cell midpoints so that
/// `+-1` are never nodes.
///
/// The conjugate decays only like `1/x`, so ratios are formed with this
/// pair instead of transforming `g` again.
/// For `p < 2` the closed forms are used; for `p > 2` the conjugate of the
/// sampled `f` is computed with the FFT transform.
pub fn extremal_signal(
    params: &OperatorParams,
    sharp: &SharpConstant,
    gamma: f64,
    grid: ExtremalGrid,
) -> Result<(SampledSignal, SampledSignal)> {
    let (alpha, beta) = maximizing_direction(params, sharp);
    let family = ExtremalFamily::new(params.p(), gamma, alpha, beta)?;
    let n = (2.0 * grid.half_width / grid.dx).round() as usize;
    let x0 = -grid.half_width + 0.5 * grid.dx;
    let window = |x: f64| (-(x / grid.window) * (x / grid.window)).exp();
    match family.regime() {
        Regime::LowExponent => {
            let g = SampledSignal::from_fn(x0, grid.dx, n, |x| family.eval_g(x).unwrap_or(0.0) * window(x))?;
            let hg = SampledSignal::from_fn(x0, grid.dx, n, |x| family.eval_hg(x).unwrap_or(0.0) * window(x))?;
            Ok((g, hg))
        }
        Regime::HighExponent => {
            let f = SampledSignal::from_fn(x0, grid.dx, n, |x| family.eval_f(x).unwrap_or(0.0) * window(x))?;
            let hf = hilbert_fft(&f, Boundary::Decaying)?;
            let g = f.values().iter().zip(hf.values()).map(|(f, h)| alpha * f + beta * h).collect();
            let hg = f.values().iter().zip(hf.values()).map(|(f, h)| alpha * h - beta * f).collect();
            Ok((f.with_values(g)?, f.with_values(hg)?))
        }
    }
}
