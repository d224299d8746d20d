//! Classical Hurwitz zeta `ζ(w, x)` and its `w`-derivative by
//! Euler–Maclaurin summation, for complex `w` and positive `x`.

use num_complex::Complex64;

use super::special::bernoulli_even;
use crate::error::{Result, ZetaError};

/// Correction terms `B_2 … B_10`.
const EM_ORDER: usize = 5;

const EM_REL_TARGET: f64 = 1e-15;

const EM_MAX_SHIFT: usize = 1_000_000;

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Bound on the first omitted Euler–Maclaurin term (`B_12`) at base `a`.
fn first_omitted(s: Complex64, a: f64) -> f64 {
    let order = EM_ORDER + 1;
    // a vanishing factor still leaves the derivative term alive
    let p: f64 = (0..(2 * order - 1)).map(|i| (s + i as f64).norm().max(1.0)).product();
    bernoulli_even(order).abs() / factorial(2 * order) * p * a.powf(-s.re - (2 * order - 1) as f64)
}

/// `(ζ(s, q), ∂_s ζ(s, q))` for `q > 0` and `s ≠ 1`.
pub(crate) fn hurwitz_with_derivative(s: Complex64, q: f64) -> (Complex64, Complex64) {
    debug_assert!(q > 0.0);
    debug_assert!(s != Complex64::new(1.0, 0.0));
    let mut m = 0usize;
    loop {
        let a = q + m as f64;
        let scale = a.powf(1.0 - s.re) / (s - 1.0).norm() + q.powf(-s.re);
        if first_omitted(s, a) <= EM_REL_TARGET * scale || m >= EM_MAX_SHIFT {
            break;
        }
        m = if m == 0 { 1 } else { m * 2 };
    }

    let mut value = Complex64::new(0.0, 0.0);
    let mut deriv = Complex64::new(0.0, 0.0);
    for n in 0..m {
        let ln = (n as f64 + q).ln();
        let term = (-s * ln).exp();
        value += term;
        deriv -= term * ln;
    }

    let a = q + m as f64;
    let ln_a = a.ln();
    let a_pow = (-s * ln_a).exp();
    let inv = 1.0 / (s - 1.0);

    let main = a_pow * a * inv;
    value += main;
    deriv += -main * ln_a - main * inv;

    value += a_pow * 0.5;
    deriv -= a_pow * 0.5 * ln_a;

    // P_j(s) = s(s+1)…(s+2j−2), carried along with its derivative
    let mut p = s;
    let mut dp = Complex64::new(1.0, 0.0);
    let mut power = a_pow / a;
    for j in 1..=EM_ORDER {
        if j > 1 {
            for i in [2 * j - 3, 2 * j - 2] {
                let f = s + i as f64;
                dp = dp * f + p;
                p *= f;
            }
        }
        let c = bernoulli_even(j) / factorial(2 * j);
        value += c * p * power;
        deriv += c * (dp * power - p * power * ln_a);
        power /= a * a;
    }
    (value, deriv)
}

/// Hurwitz zeta `ζ(w, x)`. Negative non-integer `x` is reached by the
/// recurrence `ζ(w, x) = x^{-w} + ζ(w, x + 1)`, which stays real only for
/// integer `w`.
pub fn classical_hurwitz(w: f64, x: f64) -> Result<f64> {
    if w == 1.0 {
        return Err(ZetaError::Pole("Hurwitz zeta has a pole at w = 1".into()));
    }
    if !w.is_finite() || !x.is_finite() {
        return Err(ZetaError::Domain("arguments must be finite".into()));
    }
    if x <= 0.0 && x.fract() == 0.0 {
        return Err(ZetaError::Domain(format!(
            "x = {x} is a non-positive integer"
        )));
    }
    let mut x = x;
    let mut head = 0.0;
    if x < 0.0 {
        if w.fract() != 0.0 {
            return Err(ZetaError::Domain(format!(
                "negative x = {x} requires an integer w, got {w}"
            )));
        }
        let k = w as i32;
        while x < 0.0 {
            head += x.powi(-k);
            x += 1.0;
        }
    }
    let (value, _) = hurwitz_with_derivative(Complex64::new(w, 0.0), x);
    Ok(head + value.re)
}

/// `(ln |Γ_1(x)|, sign Γ_1(x))` where `Γ_1(x) = exp ∂_w ζ(w, x)|_{w=0}`.
pub fn log_gamma_one_signed(x: f64) -> Result<(f64, i8)> {
    if !x.is_finite() || (x <= 0.0 && x.fract() == 0.0) {
        return Err(ZetaError::Domain(format!(
            "Γ_1 is undefined at x = {x}"
        )));
    }
    let mut x = x;
    let mut shift = 0.0;
    let mut sign = 1i8;
    while x < 0.0 {
        shift -= x.abs().ln();
        sign = -sign;
        x += 1.0;
    }
    let (_, deriv) = hurwitz_with_derivative(Complex64::new(0.0, 0.0), x);
    Ok((deriv.re + shift, sign))
}

/// `ln |Γ_1(x)| = ln |Γ(x)| − ½ ln 2π`; see [`log_gamma_one_signed`] for the sign.
pub fn log_gamma_one(x: f64) -> Result<f64> {
    log_gamma_one_signed(x).map(|(l, _)| l)
}

/// Both sides of `Γ_1(s+1) Γ_1(−s) = −1/(2 sin πs)`.
pub fn euler_reflection_check(s: f64) -> Result<(f64, f64)> {
    if !s.is_finite() || s.fract() == 0.0 {
        return Err(ZetaError::Domain(format!(
            "reflection check needs a non-integer s, got {s}"
        )));
    }
    let (l1, s1) = log_gamma_one_signed(s + 1.0)?;
    let (l2, s2) = log_gamma_one_signed(-s)?;
    let left = f64::from(s1 * s2) * (l1 + l2).exp();
    let right = -1.0 / (2.0 * (std::f64::consts::PI * s).sin());
    Ok((left, right))
}
