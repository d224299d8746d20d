//! Mellin-type integral representations evaluated by adaptive quadrature
//! after the substitution `u = e^t`.

use super::quad::integrate;
use super::special::gamma;
use crate::counting::CountingFunction;
use crate::error::{Result, ZetaError};
use crate::rational::to_f64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadSettings {
    /// Absolute and relative target for each quadrature.
    pub tol: f64,
    pub max_subdivisions: usize,
    /// Upper cut-off of the `t` integral; chosen from the decay rate when `None`.
    pub truncation_t: Option<f64>,
}

impl Default for QuadSettings {
    fn default() -> Self {
        QuadSettings {
            tol: 1e-12,
            max_subdivisions: 2000,
            truncation_t: None,
        }
    }
}

impl QuadSettings {
    pub fn new(tol: f64, max_subdivisions: usize, truncation_t: Option<f64>) -> Result<Self> {
        if tol.is_nan() || tol <= 0.0 || max_subdivisions == 0 {
            return Err(ZetaError::ParameterRange(format!(
                "quadrature settings need tol > 0 and max_subdivisions ≥ 1 (got {tol}, {max_subdivisions})"
            )));
        }
        if let Some(t) = truncation_t {
            if !t.is_finite() || t <= 1.0 {
                return Err(ZetaError::ParameterRange(format!(
                    "truncation point must exceed 1, got {t}"
                )));
            }
        }
        Ok(QuadSettings {
            tol,
            max_subdivisions,
            truncation_t,
        })
    }

    fn run<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Result<f64> {
        integrate(f, a, b, self.tol, self.tol, self.max_subdivisions).map(|r| r.value)
    }
}

/// `ln Γ_r(x) = ∫_0^∞ (1-e^{-t})^{-r} e^{-xt} t^{-1} dt` for `r < 0`.
pub fn log_gamma_integral(r: f64, x: f64, cfg: &QuadSettings) -> Result<f64> {
    if !r.is_finite() || r >= 0.0 {
        return Err(ZetaError::ParameterRange(format!(
            "order r must be negative, got {r}"
        )));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(ZetaError::Domain(format!("x must be positive, got {x}")));
    }
    let p = -r;
    let head = if p < 1.0 {
        // t = τ^{1/p}
        cfg.run(
            |tau: f64| {
                let t = tau.powf(1.0 / p);
                (-(-t).exp_m1() / t).powf(p) * (-x * t).exp() / p
            },
            0.0,
            1.0,
        )?
    } else {
        cfg.run(
            |t: f64| (-(-t).exp_m1()).powf(p) * (-x * t).exp() / t,
            0.0,
            1.0,
        )?
    };
    let cut = cfg
        .truncation_t
        .unwrap_or_else(|| ((10.0 / (x * cfg.tol)).ln() / x).max(2.0));
    let tail = cfg.run(
        |t: f64| (-(-t).exp_m1()).powf(p) * (-x * t).exp() / t,
        1.0,
        cut,
    )?;
    Ok(head + tail)
}

/// `Γ_r(x)` from its integral representation.
pub fn gamma_integral(r: f64, x: f64, cfg: &QuadSettings) -> Result<f64> {
    log_gamma_integral(r, x, cfg).map(f64::exp)
}

/// `(1/Γ(w)) ∫_0^∞ e^{-(s-α)t} t^{w-1} dt`, which equals `(s-α)^{-w}`.
pub fn monomial_kernel_check(alpha: f64, s: f64, w: f64, cfg: &QuadSettings) -> Result<f64> {
    let lambda = s - alpha;
    if !lambda.is_finite() || lambda <= 0.0 {
        return Err(ZetaError::Domain(format!(
            "need s > α, got s = {s}, α = {alpha}"
        )));
    }
    if !w.is_finite() || w <= 0.0 {
        return Err(ZetaError::Domain(format!("need w > 0, got {w}")));
    }
    let cut = match cfg.truncation_t {
        Some(t) => t,
        None => {
            // e^{-λT} T^{w-1} / (λ - (w-1)/T) bounds the neglected piece
            let mut t = (2.0 * (w - 1.0) / lambda).max(1.0);
            let target = 0.1 * cfg.tol * gamma(w);
            while (-lambda * t).exp() * t.powf(w - 1.0) / (lambda - (w - 1.0).max(0.0) / t) > target {
                t *= 1.25;
            }
            t
        }
    };
    let integral = if w < 1.0 {
        // t = τ^{1/w}
        cfg.run(|tau: f64| (-lambda * tau.powf(1.0 / w)).exp() / w, 0.0, cut.powf(w))?
    } else {
        let peak = ((w - 1.0) / lambda).clamp(1e-3, cut / 2.0);
        cfg.run(|t: f64| (-lambda * t).exp() * t.powf(w - 1.0), 0.0, peak)?
            + cfg.run(|t: f64| (-lambda * t).exp() * t.powf(w - 1.0), peak, cut)?
    };
    Ok(integral / gamma(w))
}

/// `∫_0^∞ N(e^t) e^{-st} t^{-1} dt`, the logarithm of `ζ_N(s)`.
pub fn log_zeta_integral(n: &CountingFunction, s: f64, cfg: &QuadSettings) -> Result<f64> {
    if !n.multiplicity_sum().eq(&num_traits::Zero::zero()) {
        return Err(ZetaError::Precondition(format!(
            "multiplicities of {n} must sum to zero"
        )));
    }
    let terms: Vec<(f64, f64)> = n.terms().map(|(a, m)| (to_f64(a), to_f64(m))).collect();
    if terms.is_empty() {
        return Ok(0.0);
    }
    let top = terms.iter().map(|t| t.0).fold(f64::NEG_INFINITY, f64::max);
    if !s.is_finite() || s <= top {
        return Err(ZetaError::Domain(format!(
            "need s > {top} (largest exponent), got {s}"
        )));
    }
    let gap = s - top;
    let weight: f64 = terms.iter().map(|t| t.1.abs()).sum();
    let cut = cfg
        .truncation_t
        .unwrap_or_else(|| ((10.0 * weight / (gap * cfg.tol)).ln() / gap).max(2.0));
    let head = cfg.run(
        |t: f64| {
            let e = (-s * t).exp();
            terms.iter().map(|&(a, m)| m * (a * t).exp_m1()).sum::<f64>() * e / t
        },
        0.0,
        1.0,
    )?;
    let tail = cfg.run(
        |t: f64| terms.iter().map(|&(a, m)| m * ((a - s) * t).exp()).sum::<f64>() / t,
        1.0,
        cut,
    )?;
    Ok(head + tail)
}
