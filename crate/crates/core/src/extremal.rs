//! Near-extremal families `f_gamma` and the lower bounds they certify.
//!
//! For `1 < p < 2` the family is `f(x) = cos(gamma) / (x + 1) * (|x+1| / |x-1|)^s`
//! and for `p > 2` it is `f(x) = cos(gamma) |x^2 - 1|^(-s)`, with `s = 2 gamma / pi`.
//! On each of the regions `|x| < 1` and `|x| > 1` the conjugate is taken to be
//! `+-tan(gamma) f`, so `g = alpha f + beta Hf` and `(aI + bH) g` are
//! multiples of `f` there and every `L^p` ratio reduces to the two masses
//! `A = int_{+} |f|^p` and `B = int_{-} |f|^p`, where `+` is the region
//! carrying the `+tan(gamma)` sign.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::operator::{OperatorParams, SharpConstant};
use crate::quadrature::{integrate_endpoint_power, integrate_power_tail, QuadBudget, QuadResult};
use crate::report::{CheckReport, Location, WorstTracker};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `1 < p < 2`; the `+` region is `|x| > 1`.
    LowExponent,
    /// `p > 2`; the `+` region is `|x| < 1`.
    HighExponent,
}

pub fn regime_of(p: f64) -> Result<Regime> {
    if !(p.is_finite() && p > 1.0) {
        Err(Error::Domain("exponent must satisfy 1 < p < inf"))
    } else if p < 2.0 {
        Ok(Regime::LowExponent)
    } else if p > 2.0 {
        Ok(Regime::HighExponent)
    } else {
        Err(Error::Domain("no extremal family is needed at p = 2"))
    }
}

/// Open interval of admissible `gamma` for the exponent `p`.
pub fn gamma_window(p: f64) -> Result<(f64, f64)> {
    let upper = PI / (2.0 * p);
    match regime_of(p)? {
        Regime::LowExponent => Ok((PI * (p - 1.0) / (2.0 * p), upper)),
        Regime::HighExponent => Ok((PI / (4.0 * p), upper)),
    }
}

/// `gamma_k = pi/(2p) (1 - 2^(-k))` for each `k` in `ks`.
pub fn gamma_schedule(p: f64, ks: core::ops::RangeInclusive<i32>) -> Vec<f64> {
    ks.map(|k| PI / (2.0 * p) * (1.0 - 2f64.powi(-k))).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalFamily {
    p: f64,
    gamma: f64,
    alpha: f64,
    beta: f64,
    regime: Regime,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassPair {
    /// Mass of the `+tan(gamma)` region.
    pub a: f64,
    /// Mass of the `-tan(gamma)` region.
    pub b: f64,
    pub a_error: f64,
    pub b_error: f64,
    pub quad_error: f64,
}

impl ExtremalFamily {
    pub fn new(p: f64, gamma: f64, alpha: f64, beta: f64) -> Result<Self> {
        let regime = regime_of(p)?;
        let (lo, hi) = gamma_window(p)?;
        if !(gamma > lo && gamma < hi) {
            return Err(Error::Domain("gamma outside the admissible window"));
        }
        if !(alpha.is_finite() && beta.is_finite()) || (alpha == 0.0 && beta == 0.0) {
            return Err(Error::DegenerateCoefficients);
        }
        Ok(ExtremalFamily { p, gamma, alpha, beta, regime })
    }

    pub fn p(&self) -> f64 {
        self.p
    }
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
    pub fn regime(&self) -> Regime {
        self.regime
    }
    /// `s = 2 gamma / pi`.
    pub fn s(&self) -> f64 {
        2.0 * self.gamma / PI
    }

    fn check_x(x: f64) -> Result<()> {
        if !x.is_finite() {
            return Err(Error::Domain("x must be finite"));
        }
        if x == 1.0 || x == -1.0 {
            return Err(Error::SingularPoint { x });
        }
        Ok(())
    }

    pub fn eval_f(&self, x: f64) -> Result<f64> {
        Self::check_x(x)?;
        let s = self.s();
        let c = self.gamma.cos();
        Ok(match self.regime {
            Regime::LowExponent => {
                let u = x + 1.0;
                c * u.abs().powf(s - 1.0).copysign(u) * (x - 1.0).abs().powf(-s)
            }
            Regime::HighExponent => c * ((x + 1.0).abs() * (x - 1.0).abs()).powf(-s),
        })
    }

    /// `+1` on the `+tan(gamma)` region, `-1` on the other.
    pub fn conjugate_sign(&self, x: f64) -> f64 {
        let outer = x.abs() > 1.0;
        match (self.regime, outer) {
            (Regime::LowExponent, true) | (Regime::HighExponent, false) => 1.0,
            _ => -1.0,
        }
    }

    pub fn eval_hf(&self, x: f64) -> Result<f64> {
        Ok(self.conjugate_sign(x) * self.gamma.tan() * self.eval_f(x)?)
    }

    /// `g = alpha f + beta Hf`.
    pub fn eval_g(&self, x: f64) -> Result<f64> {
        let f = self.eval_f(x)?;
        Ok((self.alpha + self.beta * self.conjugate_sign(x) * self.gamma.tan()) * f)
    }

    /// `Hg = alpha Hf - beta f`.
    pub fn eval_hg(&self, x: f64) -> Result<f64> {
        let f = self.eval_f(x)?;
        Ok((self.alpha * self.conjugate_sign(x) * self.gamma.tan() - self.beta) * f)
    }

    /// `A` and `B` by adaptive quadrature after removing the endpoint and tail singularities.
    pub fn mass_pair(&self, budget: QuadBudget) -> Result<MassPair> {
        let p = self.p;
        let s = self.s();
        let c = self.gamma.cos().powf(p);
        let (inner, outer) = match self.regime {
            Regime::LowExponent => {
                // |f|^p = c |x+1|^e1 |x-1|^e2
                let e1 = (s - 1.0) * p;
                let e2 = -s * p;
                let near_minus = |x: f64| c * (x - 1.0).abs().powf(e2);
                let near_plus = |x: f64| c * (x + 1.0).abs().powf(e1);
                let inner = integrate_endpoint_power(near_minus, -1.0, 0.0, -e1, budget)?
                    + integrate_endpoint_power(near_plus, 1.0, 0.0, -e2, budget)?;
                let right_tail = |x: f64| c * (1.0 + 1.0 / x).powf(e1) * (1.0 - 1.0 / x).powf(e2);
                let left_tail = |y: f64| c * (1.0 - 1.0 / y).powf(e1) * (1.0 + 1.0 / y).powf(e2);
                let outer = integrate_endpoint_power(near_plus, 1.0, 2.0, -e2, budget)?
                    + integrate_endpoint_power(near_minus, -1.0, -2.0, -e1, budget)?
                    + integrate_power_tail(right_tail, 2.0, p, budget)?
                    + integrate_power_tail(left_tail, 2.0, p, budget)?;
                (inner, outer)
            }
            Regime::HighExponent => {
                let sigma = s * p;
                let near_minus = |x: f64| c * (x - 1.0).abs().powf(-sigma);
                let near_plus = |x: f64| c * (x + 1.0).abs().powf(-sigma);
                let tail = |x: f64| c * (1.0 - 1.0 / (x * x)).powf(-sigma);
                let inner = integrate_endpoint_power(near_minus, -1.0, 0.0, sigma, budget)?
                    + integrate_endpoint_power(near_plus, 1.0, 0.0, sigma, budget)?;
                let outer = integrate_endpoint_power(near_plus, 1.0, 2.0, sigma, budget)?
                    + integrate_endpoint_power(near_minus, -1.0, -2.0, sigma, budget)?
                    + integrate_power_tail(tail, 2.0, 2.0 * sigma, budget)?
                    + integrate_power_tail(tail, 2.0, 2.0 * sigma, budget)?;
                (inner, outer)
            }
        };
        let (plus, minus): (QuadResult, QuadResult) = match self.regime {
            Regime::LowExponent => (outer, inner),
            Regime::HighExponent => (inner, outer),
        };
        Ok(MassPair {
            a: plus.value,
            b: minus.value,
            a_error: plus.error,
            b_error: minus.error,
            quad_error: plus.error + minus.error,
        })
    }
}

/// Coefficients of `|(aI+bH) g|^p` and `|g|^p` on the two regions.
struct RegionWeights {
    num_plus: f64,
    num_minus: f64,
    den_plus: f64,
    den_minus: f64,
}

fn region_weights(family: &ExtremalFamily, params: &OperatorParams) -> RegionWeights {
    let p = params.p();
    let t = family.gamma.tan();
    let (a, b) = (params.a(), params.b());
    let (al, be) = (family.alpha, family.beta);
    let n0 = a * al - b * be;
    let n1 = a * be + b * al;
    RegionWeights {
        num_plus: (n0 + n1 * t).abs().powf(p),
        num_minus: (n0 - n1 * t).abs().powf(p),
        den_plus: (al + be * t).abs().powf(p),
        den_minus: (al - be * t).abs().powf(p),
    }
}

/// `||(aI + bH) g||_p^p / ||g||_p^p` from the masses.
pub fn norm_ratio(family: &ExtremalFamily, params: &OperatorParams, masses: &MassPair) -> Result<f64> {
    let w = region_weights(family, params);
    let den = w.den_plus * masses.a + w.den_minus * masses.b;
    if !(den > 0.0 && den.is_finite()) {
        return Err(Error::DegenerateCoefficients);
    }
    Ok((w.num_plus * masses.a + w.num_minus * masses.b) / den)
}

/// First-order effect of the quadrature errors on [`norm_ratio`].
pub fn norm_ratio_error(family: &ExtremalFamily, params: &OperatorParams, masses: &MassPair) -> f64 {
    let w = region_weights(family, params);
    let num = w.num_plus * masses.a + w.num_minus * masses.b;
    let den = w.den_plus * masses.a + w.den_minus * masses.b;
    let d_a = (w.num_plus * den - num * w.den_plus) / (den * den);
    let d_b = (w.num_minus * den - num * w.den_minus) / (den * den);
    d_a.abs() * masses.a_error + d_b.abs() * masses.b_error
}

/// Bounds on the ratio that use only the mass quotient:
/// with `Q` the ratio at equal masses, `lower = (min/max) Q` and `upper = (max/min) Q`,
/// where `min/max` is `B/A` for `p < 2` and `A/B` for `p > 2`.
pub fn sandwich_bounds(family: &ExtremalFamily, params: &OperatorParams, masses: &MassPair) -> Result<(f64, f64)> {
    let w = region_weights(family, params);
    let den = w.den_plus + w.den_minus;
    if !(den > 0.0) || !(masses.a > 0.0 && masses.b > 0.0) {
        return Err(Error::DegenerateCoefficients);
    }
    let q = (w.num_plus + w.num_minus) / den;
    let ab = masses.a / masses.b;
    Ok(match family.regime {
        Regime::LowExponent => (q / ab, q * ab),
        Regime::HighExponent => (q * ab, q / ab),
    })
}

/// `(alpha, beta)` aligned with the maximizing direction of the sharp constant.
///
/// With `theta* = -t0 - pi/p`, the maximizing slope is `cot(theta* + gamma)`;
/// the pair `(cos, sin)(theta* + gamma)` stays finite when that slope is infinite.
/// Among several maximizers the one with the smallest slope magnitude is used.
pub fn maximizing_direction(params: &OperatorParams, sharp: &SharpConstant) -> (f64, f64) {
    let p = params.p();
    let gamma = params.gamma();
    let candidates = if sharp.maximizers.is_empty() { Vec::from([sharp.t0]) } else { sharp.maximizers.clone() };
    let mut best: Option<((f64, f64), f64)> = None;
    for t0 in candidates {
        let (s, c) = (-t0 - PI / p + gamma).sin_cos();
        let slope = if s == 0.0 { f64::INFINITY } else { (c / s).abs() };
        if best.is_none_or(|(_, b)| slope < b) {
            best = Some(((c, s), slope));
        }
    }
    best.map_or((1.0, 0.0), |(pair, _)| pair)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LowerBoundRow {
    pub gamma: f64,
    pub masses: MassPair,
    pub ratio: f64,
    pub ratio_error: f64,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerBoundOptions {
    /// Pass when the best ratio reaches `(1 - gap_tol) B_p`.
    pub gap_tol: f64,
    /// Relative slack allowed above `B_p` before a ratio counts as inconsistent.
    pub upper_slack: f64,
    pub budget: QuadBudget,
}

impl Default for LowerBoundOptions {
    fn default() -> Self {
        LowerBoundOptions { gap_tol: 0.02, upper_slack: 1e-9, budget: QuadBudget::default() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LowerBoundCertificate {
    pub bp: f64,
    pub alpha: f64,
    pub beta: f64,
    pub rows: Vec<LowerBoundRow>,
    /// Largest ratio over the schedule.
    pub best: f64,
    /// `1 -` the last sandwich lower bound over `B_p`.
    pub predicted_gap: f64,
    pub reports: Vec<CheckReport>,
}

impl LowerBoundCertificate {
    pub fn report(&self, name: &str) -> Option<&CheckReport> {
        self.reports.iter().find(|r| r.check_name == name)
    }
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }
}

/// Evaluates the family along `schedule` and checks that the ratios approach `B_p`.
///
/// Reports: `extremal-lower-bound` (best ratio within `gap_tol` of `B_p`),
/// `extremal-monotone` (ratios nondecreasing within twice their quadrature
/// error), `extremal-sandwich`, `extremal-mass-order` and
/// `extremal-upper-consistency` (no ratio above `B_p`).
pub fn certify_lower_bound(
    params: &OperatorParams,
    sharp: &SharpConstant,
    schedule: &[f64],
    options: LowerBoundOptions,
) -> Result<LowerBoundCertificate> {
    let bp = sharp.value;
    if params.p() == 2.0 {
        let report = CheckReport::from_margin("extremal-lower-bound", options.gap_tol, Location::None, 0, 0.0);
        return Ok(LowerBoundCertificate {
            bp,
            alpha: 1.0,
            beta: 0.0,
            rows: Vec::new(),
            best: bp,
            predicted_gap: 0.0,
            reports: Vec::from([report]),
        });
    }
    if schedule.is_empty() {
        return Err(Error::Empty("gamma schedule"));
    }
    if !(bp > 0.0) {
        return Err(Error::DegenerateCoefficients);
    }
    let (alpha, beta) = maximizing_direction(params, sharp);
    let mut rows = Vec::with_capacity(schedule.len());
    for &gamma in schedule {
        let family = ExtremalFamily::new(params.p(), gamma, alpha, beta)?;
        let masses = family.mass_pair(options.budget)?;
        let ratio = norm_ratio(&family, params, &masses)?;
        let ratio_error = norm_ratio_error(&family, params, &masses);
        let (lower, upper) = sandwich_bounds(&family, params, &masses)?;
        rows.push(LowerBoundRow { gamma, masses, ratio, ratio_error, lower, upper });
    }
    let regime = regime_of(params.p())?;
    let best = rows.iter().map(|r| r.ratio).fold(f64::NEG_INFINITY, f64::max);
    let last = rows.last().expect("schedule is nonempty");
    let predicted_gap = 1.0 - last.lower / bp;

    let best_gamma = rows.iter().find(|r| r.ratio == best).map(|r| r.gamma).unwrap_or(f64::NAN);
    let mut reports = Vec::new();
    reports.push(CheckReport::from_margin(
        "extremal-lower-bound",
        best / bp - (1.0 - options.gap_tol),
        Location::Parameter(best_gamma),
        rows.len(),
        0.0,
    ));

    let mut mono = WorstTracker::new();
    for w in rows.windows(2) {
        let slack = 2.0 * (w[0].ratio_error + w[1].ratio_error);
        mono.push((w[1].ratio - w[0].ratio + slack) / bp, Location::Parameter(w[1].gamma));
    }
    let mono_worst = if mono.samples == 0 { 0.0 } else { mono.worst };
    reports.push(CheckReport::from_margin("extremal-monotone", mono_worst, mono.location, mono.samples, 0.0));

    let mut sandwich = WorstTracker::new();
    let mut order = WorstTracker::new();
    let mut upper = WorstTracker::new();
    for r in &rows {
        let slack = r.ratio_error;
        sandwich.push(((r.ratio - r.lower).min(r.upper - r.ratio) + slack) / bp, Location::Parameter(r.gamma));
        let (big, small) = match regime {
            Regime::LowExponent => (r.masses.a, r.masses.b),
            Regime::HighExponent => (r.masses.b, r.masses.a),
        };
        order.push((big - small + r.masses.quad_error) / big.max(small), Location::Parameter(r.gamma));
        upper.push(1.0 + options.upper_slack - (r.ratio - r.ratio_error) / bp, Location::Parameter(r.gamma));
    }
    reports.push(CheckReport::from_margin("extremal-sandwich", sandwich.worst, sandwich.location, sandwich.samples, 1e-12));
    reports.push(CheckReport::from_margin("extremal-mass-order", order.worst, order.location, order.samples, 0.0));
    reports.push(CheckReport::from_margin("extremal-upper-consistency", upper.worst, upper.location, upper.samples, 0.0));

    Ok(LowerBoundCertificate { bp, alpha, beta, rows, best, predicted_gap, reports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::compute_sharp_constant;

    #[test]
    fn windows_and_regimes() {
        assert!(regime_of(2.0).is_err());
        assert_eq!(regime_of(1.5).unwrap(), Regime::LowExponent);
        let (lo, hi) = gamma_window(3.0).unwrap();
        assert!((lo - PI / 12.0).abs() < 1e-15 && (hi - PI / 6.0).abs() < 1e-15);
        assert!(ExtremalFamily::new(1.5, PI / 3.0, 1.0, 0.0).is_err());
        assert!(ExtremalFamily::new(1.5, 0.3 * PI, 0.0, 0.0).is_err());
    }

    #[test]
    fn singular_points_are_rejected() {
        let fam = ExtremalFamily::new(1.5, 0.3 * PI, 1.0, 0.0).unwrap();
        assert_eq!(fam.eval_f(1.0), Err(Error::SingularPoint { x: 1.0 }));
        assert_eq!(fam.eval_hf(-1.0), Err(Error::SingularPoint { x: -1.0 }));
    }

    #[test]
    fn conjugate_signs_follow_the_regions() {
        let low = ExtremalFamily::new(1.5, 0.3 * PI, 1.0, 0.0).unwrap();
        let t = low.gamma().tan();
        assert!((low.eval_hf(3.0).unwrap() - t * low.eval_f(3.0).unwrap()).abs() < 1e-15);
        assert!((low.eval_hf(0.2).unwrap() + t * low.eval_f(0.2).unwrap()).abs() < 1e-15);
        let high = ExtremalFamily::new(3.0, 0.15 * PI, 1.0, 0.0).unwrap();
        let t = high.gamma().tan();
        assert!((high.eval_hf(0.2).unwrap() - t * high.eval_f(0.2).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn identity_direction_gives_identity_ratio() {
        // a = 1, b = 0 and beta = 0: (aI+bH) g = g.
        let params = OperatorParams::new(1.0, 0.0, 1.5).unwrap();
        let fam = ExtremalFamily::new(1.5, 0.3 * PI, 1.0, 0.0).unwrap();
        let m = fam.mass_pair(QuadBudget::default()).unwrap();
        assert!((norm_ratio(&fam, &params, &m).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn degenerate_denominator() {
        let params = OperatorParams::new(0.0, 1.0, 1.5).unwrap();
        let fam = ExtremalFamily::new(1.5, 0.3 * PI, 1.0, 0.0).unwrap();
        let zero = MassPair { a: 0.0, b: 0.0, a_error: 0.0, b_error: 0.0, quad_error: 0.0 };
        assert_eq!(norm_ratio(&fam, &params, &zero), Err(Error::DegenerateCoefficients));
    }

    #[test]
    fn p_two_certifies_trivially() {
        let params = OperatorParams::new(0.6, 0.8, 2.0).unwrap();
        let sc = compute_sharp_constant(&params, 1e-12).unwrap();
        let cert = certify_lower_bound(&params, &sc, &[], LowerBoundOptions::default()).unwrap();
        assert!(cert.all_pass());
        assert!((cert.best - 1.0).abs() < 1e-12);
    }
}
