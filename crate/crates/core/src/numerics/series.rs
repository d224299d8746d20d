//! Generalized binomial series for `ζ_r(w; x)` and `Γ_r(x)`.
//!
//! For non-integer `r` the partial sum over `n < N` is completed by the
//! large-`n` expansion
//!
//! ```text
//! H_n = Γ(n+r)/(Γ(r) Γ(n+1)) ~ (1/Γ(r)) Σ_k G_k (n+x)^{r-1-k},
//! G_k = C(r-1, k) B_k^{(r)}(r-x),
//! ```
//!
//! so the remainder becomes a short sum of classical Hurwitz zeta values.
//! The size of the first omitted term serves as the error estimate.

use num_complex::Complex64;
use num_traits::One;

use super::hurwitz::hurwitz_with_derivative;
use super::special::{bernoulli_even, gamma};
use crate::error::{Result, ZetaError};
use crate::rational::Rational;
use crate::symzeta::ComplexPoint;

/// Number of asymptotic correction terms kept in the tail.
const TAIL_TERMS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSettings {
    /// Absolute target for the tail estimate.
    pub tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesSettings {
    fn default() -> Self {
        SeriesSettings {
            tol: 1e-12,
            max_terms: 100_000,
        }
    }
}

impl SeriesSettings {
    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        if tol.is_nan() || tol <= 0.0 || max_terms == 0 {
            return Err(ZetaError::ParameterRange(format!(
                "series settings need tol > 0 and max_terms ≥ 1 (got {tol}, {max_terms})"
            )));
        }
        Ok(SeriesSettings { tol, max_terms })
    }
}

/// `{}_r H_n = C(n+r-1, n)` by the recurrence `H_n = H_{n-1}(n+r-1)/n`.
pub fn gen_binom(r: f64, n: usize) -> f64 {
    (1..=n).fold(1.0, |h, k| h * (k as f64 + r - 1.0) / k as f64)
}

/// Exact counterpart of [`gen_binom`].
pub fn gen_binom_exact(r: &Rational, n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |h, k| {
        let k = Rational::from_integer(k.into());
        h * (&k + r - Rational::one()) / k
    })
}

fn negative_integer(r: f64) -> Option<usize> {
    (r < 0.0 && r.fract() == 0.0).then(|| (-r) as usize)
}

fn check_order(r: f64, x: f64) -> Result<()> {
    if !r.is_finite() || r >= 0.0 {
        return Err(ZetaError::ParameterRange(format!(
            "order r must be negative, got {r}"
        )));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(ZetaError::Domain(format!("x must be positive, got {x}")));
    }
    Ok(())
}

/// Generalized Bernoulli polynomials `B_k^{(σ)}(y)` for `k < len`, from
/// `(t/(e^t-1))^σ e^{yt} = exp((y-σ/2)t - σ Σ_j B_{2j} t^{2j}/(2j (2j)!))`.
fn generalized_bernoulli(sigma: f64, y: f64, len: usize) -> Vec<f64> {
    let mut g = vec![0.0; len];
    if len > 1 {
        g[1] = y - sigma / 2.0;
    }
    let mut fact = 1.0;
    for (k, gk) in g.iter_mut().enumerate().take(len).skip(2) {
        fact *= k as f64;
        if k % 2 == 0 {
            let j = k / 2;
            *gk = -sigma * bernoulli_even(j) / (k as f64 * fact);
        }
    }
    // f = exp(g) via k f_k = Σ_i i g_i f_{k-i}
    let mut f = vec![0.0; len];
    f[0] = 1.0;
    for k in 1..len {
        let acc: f64 = (1..=k).map(|i| i as f64 * g[i] * f[k - i]).sum();
        f[k] = acc / k as f64;
    }
    let mut fact = 1.0;
    for (k, fk) in f.iter_mut().enumerate() {
        if k > 0 {
            fact *= k as f64;
        }
        *fk *= fact;
    }
    f
}

/// `G_k / Γ(r)` for `k ≤ TAIL_TERMS`.
fn tail_coefficients(r: f64, x: f64) -> Vec<f64> {
    let bern = generalized_bernoulli(r, r - x, TAIL_TERMS + 1);
    let inv_gamma = 1.0 / gamma(r);
    let mut binom = 1.0;
    bern.iter()
        .enumerate()
        .map(|(k, b)| {
            if k > 0 {
                binom *= (r - k as f64) / k as f64;
            }
            binom * b * inv_gamma
        })
        .collect()
}

fn starting_terms(r: f64, x: f64, w_norm: f64) -> usize {
    (4.0 * (r.abs() + x + w_norm)).ceil().max(64.0) as usize
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue<T> {
    pub value: T,
    /// Terms summed explicitly before the asymptotic tail.
    pub terms: usize,
    pub error_estimate: f64,
}

/// `ζ_r(w; x) = Σ_n {}_r H_n (n+x)^{-w}`, with its error estimate.
pub fn zeta_series_detailed(
    r: f64,
    w: ComplexPoint,
    x: f64,
    cfg: &SeriesSettings,
) -> Result<SeriesValue<ComplexPoint>> {
    check_order(r, x)?;
    let w = w.value();
    if let Some(m) = negative_integer(r) {
        let mut h = 1.0;
        let mut sum = Complex64::new(0.0, 0.0);
        for n in 0..=m {
            if n > 0 {
                h *= (n as f64 + r - 1.0) / n as f64;
            }
            sum += h * (-w * (n as f64 + x).ln()).exp();
        }
        return Ok(SeriesValue {
            value: ComplexPoint::new(sum.re, sum.im)?,
            terms: m + 1,
            error_estimate: 0.0,
        });
    }
    if w.re <= r {
        return Err(ZetaError::ParameterRange(format!(
            "series needs Re(w) > r, got Re(w) = {} with r = {r}",
            w.re
        )));
    }
    let coeffs = tail_coefficients(r, x);
    let mut n_terms = starting_terms(r, x, w.norm());
    loop {
        let q = n_terms as f64 + x;
        let tail_at = |k: usize| -> Complex64 {
            let (z, _) = hurwitz_with_derivative(w + (k as f64 + 1.0 - r), q);
            coeffs[k] * z
        };
        let estimate = 2.0 * tail_at(TAIL_TERMS).norm();
        if estimate <= cfg.tol {
            let mut h = 1.0;
            let mut sum = Complex64::new(0.0, 0.0);
            for n in 0..n_terms {
                if n > 0 {
                    h *= (n as f64 + r - 1.0) / n as f64;
                }
                sum += h * (-w * (n as f64 + x).ln()).exp();
            }
            let tail: Complex64 = (0..TAIL_TERMS).map(tail_at).sum();
            let total = sum + tail;
            return Ok(SeriesValue {
                value: ComplexPoint::new(total.re, total.im)?,
                terms: n_terms,
                error_estimate: estimate,
            });
        }
        if n_terms >= cfg.max_terms {
            return Err(ZetaError::Convergence {
                terms: n_terms,
                estimate,
                target: cfg.tol,
            });
        }
        n_terms = (2 * n_terms).min(cfg.max_terms);
    }
}

/// `ζ_r(w; x)` for real `r < 0`.
pub fn zeta_series(r: f64, w: ComplexPoint, x: f64, cfg: &SeriesSettings) -> Result<ComplexPoint> {
    zeta_series_detailed(r, w, x, cfg).map(|v| v.value)
}

/// `ln Γ_r(x) = -Σ_n {}_r H_n ln(n+x)`, with its error estimate.
pub fn log_gamma_series_detailed(r: f64, x: f64, cfg: &SeriesSettings) -> Result<SeriesValue<f64>> {
    check_order(r, x)?;
    let partial = |count: usize| -> f64 {
        let mut h = 1.0;
        let mut sum = 0.0;
        for n in 0..count {
            if n > 0 {
                h *= (n as f64 + r - 1.0) / n as f64;
            }
            sum -= h * (n as f64 + x).ln();
        }
        sum
    };
    if let Some(m) = negative_integer(r) {
        return Ok(SeriesValue {
            value: partial(m + 1),
            terms: m + 1,
            error_estimate: 0.0,
        });
    }
    let coeffs = tail_coefficients(r, x);
    let mut n_terms = starting_terms(r, x, 0.0);
    loop {
        let q = n_terms as f64 + x;
        let tail_at = |k: usize| -> f64 {
            let (_, d) = hurwitz_with_derivative(Complex64::new(k as f64 + 1.0 - r, 0.0), q);
            coeffs[k] * d.re
        };
        let estimate = 2.0 * tail_at(TAIL_TERMS).abs();
        if estimate <= cfg.tol {
            let tail: f64 = (0..TAIL_TERMS).map(tail_at).sum();
            return Ok(SeriesValue {
                value: partial(n_terms) + tail,
                terms: n_terms,
                error_estimate: estimate,
            });
        }
        if n_terms >= cfg.max_terms {
            return Err(ZetaError::Convergence {
                terms: n_terms,
                estimate,
                target: cfg.tol,
            });
        }
        n_terms = (2 * n_terms).min(cfg.max_terms);
    }
}

pub fn log_gamma_series(r: f64, x: f64, cfg: &SeriesSettings) -> Result<f64> {
    log_gamma_series_detailed(r, x, cfg).map(|v| v.value)
}

/// `Γ_r(x) = exp ∂_w ζ_r(w; x)|_{w=0}`.
pub fn gamma_series(r: f64, x: f64, cfg: &SeriesSettings) -> Result<f64> {
    log_gamma_series(r, x, cfg).map(f64::exp)
}

/// Analytic bound on `Σ_{n≥N} |H_n| (n+x)^{-σ}` using
/// `|H_n| ≤ K_r n^{r-1}` with `K_r = max_{1≤n≤32} |H_n| n^{1-r}`.
/// Requires `σ > r` and `N ≥ 33`.
pub fn tail_majorant(r: f64, sigma: f64, x: f64, n_terms: usize) -> f64 {
    debug_assert!(sigma > r && n_terms > 32);
    let mut h = 1.0f64;
    let mut k_r = 0.0f64;
    for n in 1..=32 {
        h *= (n as f64 + r - 1.0) / n as f64;
        k_r = k_r.max(h.abs() * (n as f64).powf(1.0 - r));
    }
    let n = n_terms as f64;
    // (n+x)^{-σ} ≤ (1+x/N)^{max(0,-σ)} n^{-σ} for n ≥ N
    let shift = (1.0 + x / n).powf((-sigma).max(0.0));
    k_r * shift * n.powf(r - sigma) / (sigma - r) * (n / (n - 1.0)).powf(sigma - r)
}

/// `|ζ_r(m; x)|` for an integer `m` with `r < m ≤ 0`, where it vanishes.
pub fn theorem2_zero_check(r: f64, m: i64, x: f64, cfg: &SeriesSettings) -> Result<f64> {
    if !(r < m as f64 && m <= 0) {
        return Err(ZetaError::ParameterRange(format!(
            "need r < m ≤ 0, got r = {r}, m = {m}"
        )));
    }
    let z = zeta_series(r, ComplexPoint::real(m as f64), x, cfg)?;
    Ok(z.value().norm())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinomialIdentity {
    pub terms: usize,
    pub partial_sum: f64,
    pub tail_correction: f64,
    pub estimate: f64,
}

/// `Σ_{n≥1} C(2n,n)/((2n-1)4^n)` over `cfg.max_terms` terms, plus the
/// tail `π^{-1/2} N^{-1/2}` from `a_n ~ n^{-3/2}/(2√π)`.
pub fn binomial_identity_sum(cfg: &SeriesSettings) -> BinomialIdentity {
    let n_terms = cfg.max_terms.max(1);
    let mut a = 0.5;
    let mut partial = a;
    for n in 2..=n_terms {
        a *= (n as f64 - 1.5) / n as f64;
        partial += a;
    }
    let tail = 1.0 / (std::f64::consts::PI * n_terms as f64).sqrt();
    BinomialIdentity {
        terms: n_terms,
        partial_sum: partial,
        tail_correction: tail,
        estimate: partial + tail,
    }
}
