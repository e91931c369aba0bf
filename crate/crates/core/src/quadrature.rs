//! Adaptive numerical integration.
//!
//! The workhorse is a globally adaptive 21-point Gauss-Kronrod scheme with
//! the embedded 10-point Gauss rule as error estimator (degree 19 exact
//! per panel). On top of it sit a semi-infinite driver that truncates at a
//! point certified by a caller-supplied tail bound, and a half-period
//! summation for `amplitude(τ)·cos(ωτ)` / `amplitude(τ)·sin(ωτ)` whose
//! alternating tail is accelerated by Euler's transformation.
//!
//! All sums over panels are compensated (Neumaier) and performed in a
//! fixed order, so results are bit-reproducible.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadPolicy {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Truncation of semi-infinite integrals stops once the certified tail
    /// is below `tail_bound_factor · |partial value|`.
    pub tail_bound_factor: f64,
}

impl Default for QuadPolicy {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 2000,
            tail_bound_factor: 1e-14,
        }
    }
}

impl QuadPolicy {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize, tail_bound_factor: f64) -> Result<Self> {
        let p = Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
            tail_bound_factor,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !(positive(self.abs_tol) && positive(self.rel_tol) && positive(self.tail_bound_factor))
            || self.max_subdivisions == 0
        {
            return Err(Error::InvalidPolicy(format!("quadrature tolerances must be positive: {self:?}")));
        }
        Ok(())
    }

    /// Same policy with both tolerances replaced.
    pub fn with_tol(mut self, abs_tol: f64, rel_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self.rel_tol = rel_tol;
        self
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub err_estimate: f64,
    pub subdivisions: usize,
    /// Upper limit actually integrated to; `None` for finite intervals.
    pub truncation_point: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Oscillation {
    Cosine,
    Sine,
}

/// Neumaier-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689,
    0.973_906_528_517_171_720_077_964_012_084,
    0.930_157_491_355_708_226_001_207_180_060,
    0.865_063_366_688_984_510_732_096_688_423,
    0.780_817_726_586_416_897_063_717_578_345,
    0.679_409_568_299_024_406_234_327_365_115,
    0.562_757_134_668_604_683_339_000_099_273,
    0.433_395_394_129_247_190_799_265_943_166,
    0.294_392_862_701_460_198_131_126_603_104,
    0.148_874_338_981_631_210_884_826_001_130,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062,
    0.032_558_162_307_964_727_478_818_972_459,
    0.054_755_896_574_351_996_031_381_300_245,
    0.075_039_674_810_919_952_767_043_140_916,
    0.093_125_454_583_697_605_535_065_465_083,
    0.109_387_158_802_297_641_899_210_590_326,
    0.123_491_976_262_065_851_077_548_138_570,
    0.134_709_217_311_473_325_928_054_001_772,
    0.142_775_938_577_060_080_797_094_273_139,
    0.147_739_104_901_338_491_374_841_515_972,
    0.149_445_554_002_916_905_664_936_468_390,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893,
    0.149_451_349_150_580_593_145_776_339_658,
    0.219_086_362_515_982_043_995_534_934_228,
    0.269_266_719_309_996_355_091_226_921_569,
    0.295_524_224_714_752_870_173_892_994_651,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    // max-heap on error, ties broken by position for determinism
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut err = err.abs();
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    err
}

fn gauss_kronrod_21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_g = 0.0;
    let mut res_k = WGK[10] * fc;
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];

    for j in 0..5 {
        let jtw = 2 * j + 1;
        let dx = half * XGK[jtw];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        res_g += WG[j] * (f1 + f2);
        res_k += WGK[jtw] * (f1 + f2);
        res_abs += WGK[jtw] * (f1.abs() + f2.abs());
    }
    for j in 0..5 {
        let jtwm1 = 2 * j;
        let dx = half * XGK[jtwm1];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        res_k += WGK[jtwm1] * (f1 + f2);
        res_abs += WGK[jtwm1] * (f1.abs() + f2.abs());
    }

    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let raw_err = ((res_k - res_g) * half).abs();
    let err = if value.is_finite() && raw_err.is_finite() {
        rescale_error(raw_err, res_abs, res_asc)
    } else {
        f64::INFINITY
    };
    Panel { a, b, value, err }
}

/// Adaptive integration of `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, policy: &QuadPolicy) -> Result<QuadResult> {
    integrate_points(f, &[a, b], policy)
}

/// Adaptive integration over `[points[0], points[last]]` with the interior
/// points used as initial breakpoints (peaks, kinks, near-singularities).
pub fn integrate_points<F: Fn(f64) -> f64>(f: F, points: &[f64], policy: &QuadPolicy) -> Result<QuadResult> {
    policy.validate()?;
    if points.len() < 2 {
        return Err(Error::Domain("integration needs at least two points".into()));
    }
    if points.iter().any(|p| !p.is_finite()) || points.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain(format!("integration limits must be finite and increasing: {points:?}")));
    }

    let mut heap: BinaryHeap<Panel> = points.windows(2).map(|w| gauss_kronrod_21(&f, w[0], w[1])).collect();
    let mut subdivisions = heap.len();

    loop {
        let (value, err) = totals(&heap);
        if !value.is_finite() {
            return Err(Error::QuadratureFailure {
                value,
                err_estimate: err,
                subdivisions,
            });
        }
        if err <= policy.target(value) {
            return Ok(QuadResult {
                value,
                err_estimate: err,
                subdivisions,
                truncation_point: None,
            });
        }
        if subdivisions >= policy.max_subdivisions {
            return Err(Error::QuadratureFailure {
                value,
                err_estimate: err,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel cannot be split any further in floating point
            return Err(Error::QuadratureFailure {
                value,
                err_estimate: err,
                subdivisions,
            });
        }
        heap.push(gauss_kronrod_21(&f, worst.a, mid));
        heap.push(gauss_kronrod_21(&f, mid, worst.b));
        subdivisions += 1;
    }
}

fn totals(heap: &BinaryHeap<Panel>) -> (f64, f64) {
    let mut panels: Vec<&Panel> = heap.iter().collect();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let mut value = CompensatedSum::default();
    let mut err = CompensatedSum::default();
    for p in panels {
        value.add(p.value);
        err.add(p.err);
    }
    (value.value(), err.value())
}

/// `∫_0^∞ f`, truncated at the first `T = 2^k` for which
/// `tail_bound(T) ≥ ∫_T^∞ |f|` drops below `tail_bound_factor · |value|`.
pub fn integrate_semi_infinite<F, B>(f: F, tail_bound: B, policy: &QuadPolicy) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
    B: Fn(f64) -> f64,
{
    integrate_semi_infinite_from(f, 0.0, tail_bound, policy)
}

pub fn integrate_semi_infinite_from<F, B>(f: F, a: f64, tail_bound: B, policy: &QuadPolicy) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
    B: Fn(f64) -> f64,
{
    const CAP: f64 = 1e12;
    policy.validate()?;
    let mut lo = a;
    let mut hi = a + 1.0;
    let mut value = CompensatedSum::default();
    let mut err = CompensatedSum::default();
    let mut subdivisions = 0;

    while hi <= CAP {
        let seg = integrate(&f, lo, hi, policy)?;
        value.add(seg.value);
        err.add(seg.err_estimate);
        subdivisions += seg.subdivisions;
        let tail = tail_bound(hi);
        let v = value.value();
        if tail.is_finite() && tail <= (policy.tail_bound_factor * v.abs()).max(f64::MIN_POSITIVE) {
            return Ok(QuadResult {
                value: v,
                err_estimate: err.value() + tail,
                subdivisions,
                truncation_point: Some(hi),
            });
        }
        lo = hi;
        hi = a + 2.0 * (hi - a);
    }
    Err(Error::TruncationFailure { cap: CAP })
}

/// `∫_0^∞ amplitude(τ)·trig(ωτ) dτ` by summation over the half-periods of
/// the trigonometric factor. `amplitude` must be eventually monotone and
/// decaying.
pub fn integrate_oscillatory<F: Fn(f64) -> f64>(
    amplitude: F,
    frequency: f64,
    kind: Oscillation,
    policy: &QuadPolicy,
) -> Result<QuadResult> {
    integrate_oscillatory_from(amplitude, frequency, kind, 0.0, policy)
}

/// Like [`integrate_oscillatory`], but `[0, direct_until]` is integrated
/// directly and half-period summation starts at the first zero of the
/// trigonometric factor beyond it. Use this when the amplitude itself
/// oscillates on an initial stretch.
pub fn integrate_oscillatory_from<F: Fn(f64) -> f64>(
    amplitude: F,
    frequency: f64,
    kind: Oscillation,
    direct_until: f64,
    policy: &QuadPolicy,
) -> Result<QuadResult> {
    policy.validate()?;
    if !(frequency.is_finite() && frequency > 0.0) {
        return Err(Error::Domain(format!("oscillation frequency must be positive, got {frequency}")));
    }
    if !(direct_until.is_finite() && direct_until >= 0.0) {
        return Err(Error::Domain(format!("direct_until must be finite and non-negative, got {direct_until}")));
    }

    let trig = |t: f64| match kind {
        Oscillation::Cosine => (frequency * t).cos(),
        Oscillation::Sine => (frequency * t).sin(),
    };
    let integrand = |t: f64| amplitude(t) * trig(t);
    let half_period = PI / frequency;
    let offset = match kind {
        Oscillation::Cosine => 0.5,
        Oscillation::Sine => 0.0,
    };
    // zeros of the trigonometric factor are (k + offset)·π/ω
    let zero = |k: usize| (k as f64 + offset) * half_period;
    let mut k = ((direct_until / half_period - offset).ceil().max(0.0)) as usize;
    if zero(k) <= 0.0 {
        k += 1;
    }

    // panels well inside their tolerance; the summation error dominates
    let seg_policy = policy.with_tol(policy.abs_tol * 1e-2, policy.rel_tol * 1e-2);
    let head = integrate(&integrand, 0.0, zero(k), &seg_policy)?;
    let mut subdivisions = head.subdivisions;
    let mut quad_err = CompensatedSum::default();
    quad_err.add(head.err_estimate);

    let max_terms = policy.max_subdivisions.max(64);
    let mut terms: Vec<f64> = Vec::new();
    let mut regime_start: Option<usize> = None;
    let mut last_estimate: Option<f64> = None;
    let mut stable = 0;

    for j in 0..max_terms {
        let seg = integrate(&integrand, zero(k + j), zero(k + j + 1), &seg_policy)?;
        subdivisions += seg.subdivisions;
        quad_err.add(seg.err_estimate);
        terms.push(seg.value);

        if regime_start.is_none() && alternating_decreasing(&terms, 4) {
            regime_start = Some(terms.len() - 4);
        }
        let Some(start) = regime_start else { continue };

        let mut direct = CompensatedSum::default();
        direct.add(head.value);
        for &t in &terms[..start] {
            direct.add(t);
        }
        let tail = euler_sum(&terms[start..]);
        let estimate = direct.value() + tail;
        if let Some(prev) = last_estimate {
            let delta = (estimate - prev).abs();
            let target = policy.target(estimate);
            stable = if delta <= target { stable + 1 } else { 0 };
            if stable >= 2 || (terms.len() - start >= 6 && terms[terms.len() - 1] == 0.0) {
                return Ok(QuadResult {
                    value: estimate,
                    err_estimate: delta + quad_err.value(),
                    subdivisions,
                    truncation_point: Some(zero(k + j + 1)),
                });
            }
        }
        last_estimate = Some(estimate);
    }

    let mut direct = CompensatedSum::default();
    direct.add(head.value);
    for &t in &terms {
        direct.add(t);
    }
    Err(Error::QuadratureFailure {
        value: direct.value(),
        err_estimate: f64::INFINITY,
        subdivisions,
    })
}

fn alternating_decreasing(terms: &[f64], n: usize) -> bool {
    if terms.len() < n {
        return false;
    }
    let w = &terms[terms.len() - n..];
    if w.iter().all(|&t| t == 0.0) {
        return true;
    }
    w.windows(2)
        .all(|p| p[0] * p[1] < 0.0 && p[1].abs() <= p[0].abs())
}

/// Euler transformation of an alternating series by repeated averaging of
/// its partial sums.
fn euler_sum(terms: &[f64]) -> f64 {
    let mut partial = Vec::with_capacity(terms.len());
    let mut acc = CompensatedSum::default();
    for &t in terms {
        acc.add(t);
        partial.push(acc.value());
    }
    while partial.len() > 1 {
        for i in 0..partial.len() - 1 {
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        }
        partial.pop();
    }
    partial.first().copied().unwrap_or(0.0)
}
