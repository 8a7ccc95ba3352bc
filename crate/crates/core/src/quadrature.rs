//! Adaptive Gauss-Kronrod quadrature and the changes of variable used for
//! integrable endpoint singularities and power-law tails.

use alloc::collections::BinaryHeap;
use core::cmp::Ordering;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
// Gauss weights for the odd-indexed Kronrod nodes.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Tolerances and work limit for one adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadBudget {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadBudget {
    fn default() -> Self {
        QuadBudget { abs_tol: 1e-14, rel_tol: 1e-12, max_intervals: 4000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

impl core::ops::Add for QuadResult {
    type Output = QuadResult;
    fn add(self, rhs: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + rhs.value,
            error: self.error + rhs.error,
            evaluations: self.evaluations + rhs.evaluations,
        }
    }
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    let error = if error.is_finite() { error } else { f64::INFINITY };
    Segment { a, b, value, error }
}

/// Integrates `f` over the finite interval `[a, b]` by global adaptive
/// bisection with a 7/15-point Gauss-Kronrod pair.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, budget: QuadBudget) -> Result<QuadResult> {
    integrate_with_breaks(f, &[a, b], budget)
}

/// Like [`integrate`], with the initial partition given by the sorted `breaks`.
///
/// Breakpoints matter when the integrand has structure narrower than the
/// spacing of the first Kronrod nodes, which the error estimate cannot see.
pub fn integrate_with_breaks<F: Fn(f64) -> f64>(f: F, breaks: &[f64], budget: QuadBudget) -> Result<QuadResult> {
    if breaks.len() < 2 {
        return Err(Error::Empty("breakpoints"));
    }
    if breaks.iter().any(|b| !b.is_finite()) {
        return Err(Error::Domain("integration limits must be finite"));
    }
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0;
    let mut value = 0.0;
    let mut error = 0.0;
    for w in breaks.windows(2) {
        if w[0] == w[1] {
            continue;
        }
        let seg = kronrod15(&f, w[0], w[1]);
        evaluations += 15;
        value += seg.value;
        error += seg.error;
        heap.push(seg);
    }
    if heap.is_empty() {
        return Ok(QuadResult { value: 0.0, error: 0.0, evaluations: 0 });
    }
    let max_intervals = budget.max_intervals.max(heap.len() + 1);
    loop {
        if error <= budget.abs_tol.max(budget.rel_tol * value.abs()) {
            break;
        }
        if heap.len() >= max_intervals {
            break;
        }
        let worst = match heap.pop() {
            Some(s) => s,
            None => break,
        };
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a.min(worst.b) || mid >= worst.a.max(worst.b) {
            heap.push(worst);
            break;
        }
        let left = kronrod15(&f, worst.a, mid);
        let right = kronrod15(&f, mid, worst.b);
        evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to drop the drift of the running totals.
    let (value, error) = heap
        .iter()
        .fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.error));
    if !value.is_finite() {
        return Err(Error::QuadratureBudget { estimate: value, error });
    }
    if error > budget.abs_tol.max(budget.rel_tol * value.abs()) {
        return Err(Error::QuadratureBudget { estimate: value, error });
    }
    Ok(QuadResult { value, error, evaluations })
}

/// `0, 2^(-J rate), ..., 2^(-rate), 1` with enough levels to reach `1e-16` in the original variable.
fn geometric_breaks(rate: f64) -> alloc::vec::Vec<f64> {
    const LEVELS: i32 = 54;
    let mut breaks = alloc::vec::Vec::with_capacity(LEVELS as usize + 2);
    breaks.push(0.0);
    for j in (1..=LEVELS).rev() {
        breaks.push(2f64.powf(-(j as f64) * rate));
    }
    breaks.push(1.0);
    breaks
}

/// Integral of `|x - c|^(-sigma) * regular(x)` over the interval between
/// `c` and `d`, for `0 <= sigma < 1`.
///
/// The substitution `x = c + (d - c) u^(1/(1 - sigma))` absorbs the
/// singularity, so the integrand handed to the quadrature is
/// `regular(x)` times a constant.
pub fn integrate_endpoint_power<F: Fn(f64) -> f64>(
    regular: F,
    c: f64,
    d: f64,
    sigma: f64,
    budget: QuadBudget,
) -> Result<QuadResult> {
    if !(0.0..1.0).contains(&sigma) {
        return Err(Error::Domain("endpoint exponent must lie in [0, 1)"));
    }
    let length = d - c;
    let exponent = 1.0 / (1.0 - sigma);
    let jacobian = length.abs().powf(1.0 - sigma) / (1.0 - sigma);
    // Breakpoints where |x - c| = |d - c| 2^-j resolve the layer near u = 1
    // that forms when sigma is close to 1.
    let breaks = geometric_breaks(1.0 - sigma);
    let mut r = integrate_with_breaks(|u: f64| regular(c + length * u.powf(exponent)), &breaks, budget)?;
    r.value *= jacobian;
    r.error *= jacobian;
    Ok(r)
}

/// Integral over `[start, inf)` of a weight `w` with `w(x) ~ x^(-q)`, `q > 1`.
///
/// `scaled(x)` must return `w(x) * x^q`; it is evaluated at points that may be
/// very large or infinite and should have a finite limit there. The
/// substitution is `x = start * v^(-1/(q - 1))`.
pub fn integrate_power_tail<F: Fn(f64) -> f64>(
    scaled: F,
    start: f64,
    q: f64,
    budget: QuadBudget,
) -> Result<QuadResult> {
    if !(start > 0.0 && start.is_finite()) {
        return Err(Error::Domain("tail start must be positive"));
    }
    if !(q > 1.0) {
        return Err(Error::Domain("tail decay exponent must exceed 1"));
    }
    let exponent = -1.0 / (q - 1.0);
    let jacobian = start.powf(1.0 - q) / (q - 1.0);
    let breaks = geometric_breaks(q - 1.0);
    let mut r = integrate_with_breaks(|v: f64| scaled(start * v.powf(exponent)), &breaks, budget)?;
    r.value *= jacobian;
    r.error *= jacobian;
    Ok(r)
}
