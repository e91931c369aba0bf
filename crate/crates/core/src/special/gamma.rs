//! Gamma function and friends via the Lanczos approximation
//! (g = 607/128, 15 coefficients) with reflection for `x < 1/2`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 607.0 / 128.0;

const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_091_82,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_741_78;

/// Relative accuracy assumed for `gamma` when propagating error estimates.
pub(crate) const GAMMA_REL_ERR: f64 = 1e-15;

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // reduce to [-1, 1]
    let y = x - 2.0 * (0.5 * x).round();
    if y == 0.0 || y.abs() == 1.0 {
        return 0.0;
    }
    let (s, y) = if y < 0.0 { (-1.0, -y) } else { (1.0, y) };
    // y in (0, 1); sin(πy) = sin(π(1 - y))
    let y = if y > 0.5 { 1.0 - y } else { y };
    s * (PI * y).sin()
}

/// `cos(πx)` with exact zeros at the half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn lanczos_sum(z: f64) -> f64 {
    // z = x - 1
    let mut a = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    a
}

/// Γ(x) for x ≥ 1/2.
fn gamma_positive(x: f64) -> f64 {
    if x == x.floor() && x <= 23.0 {
        // exact factorials
        let mut f = 1.0;
        let mut k = 2.0;
        while k < x {
            f *= k;
            k += 1.0;
        }
        return f;
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    let a = lanczos_sum(z);
    // split the power so Γ(171) does not overflow in the intermediate
    let half = t.powf(0.5 * (z + 0.5));
    (2.0 * PI).sqrt() * half * ((-t).exp() * half) * a
}

/// Γ(x). Errors at the poles `0, -1, -2, …`; overflows to `±∞` beyond
/// `x ≈ 171.6`.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("gamma of NaN".into()));
    }
    if is_pole(x) {
        return Err(Error::Pole(x));
    }
    if x >= 0.5 {
        if x > 171.7 {
            return Ok(f64::INFINITY);
        }
        return Ok(gamma_positive(x));
    }
    // reflection: Γ(x) Γ(1-x) = π / sin(πx)
    let g = gamma_positive(1.0 - x);
    Ok(PI / (sin_pi(x) * g))
}

/// 1/Γ(x); total, zero at the poles of Γ.
pub fn reciprocal_gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_pole(x) {
        return 0.0;
    }
    if x >= 0.5 {
        if x > 171.0 {
            return (-ln_gamma(x)).exp();
        }
        return 1.0 / gamma_positive(x);
    }
    // 1/Γ(x) = sin(πx) Γ(1-x) / π
    let s = sin_pi(x);
    if 1.0 - x > 171.0 {
        let sign = s.signum();
        return sign * (ln_gamma(1.0 - x) + s.abs().ln() - PI.ln()).exp();
    }
    s * gamma_positive(1.0 - x) / PI
}

/// ln|Γ(x)|; `+∞` at the poles.
pub fn ln_gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_pole(x) {
        return f64::INFINITY;
    }
    if x < 0.5 {
        return PI.ln() - sin_pi(x).abs().ln() - ln_gamma(1.0 - x);
    }
    if x < 15.0 {
        return gamma_positive(x).ln();
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln()
}
