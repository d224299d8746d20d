//! Classical gamma function (Lanczos) and Bernoulli numbers.

use std::f64::consts::{E, PI};

const LANCZOS_R: f64 = 10.900511;

// Godfrey's coefficients for g = 10.900511, n = 11.
#[allow(clippy::excessive_precision)]
const LANCZOS_DK: [f64; 11] = [
    2.48574089138753565546e-5,
    1.05142378581721974210,
    -3.45687097222016235469,
    4.51227709466894823700,
    -2.98285225323576655721,
    1.05639711577126713077,
    -1.95428773191645869583e-1,
    1.70970543404441224307e-2,
    -5.71926117404305781283e-4,
    4.63399473359905636708e-6,
    -2.71994908488607703910e-9,
];

/// ln(2 sqrt(e / π))
const LN_2_SQRT_E_OVER_PI: f64 = 0.620_782_237_635_245_2;

const LN_PI: f64 = 1.144_729_885_849_400_2;

const LN_2PI: f64 = 1.837_877_066_409_345_5;

fn lanczos(x: f64) -> f64 {
    let s = LANCZOS_DK
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS_DK[0], |s, (i, dk)| s + dk / (x + i as f64 - 1.0));
    s * LN_2_SQRT_E_OVER_PI.exp() * ((x - 0.5 + LANCZOS_R) / E).powf(x - 0.5)
}

/// `Γ(x)`. The Lanczos sum is only evaluated on `[1, 2)`, where its
/// partial fractions do not cancel; other arguments are moved there by
/// `Γ(x+1) = xΓ(x)` or the reflection formula.
pub fn gamma(x: f64) -> f64 {
    if x <= 0.0 && x.fract() == 0.0 {
        return f64::NAN;
    }
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    if x > 171.7 {
        return f64::INFINITY;
    }
    let mut y = x;
    let mut scale = 1.0;
    while y >= 2.0 {
        y -= 1.0;
        scale *= y;
    }
    while y < 1.0 {
        scale /= y;
        y += 1.0;
    }
    scale * lanczos(y)
}

/// Stirling series with `B_2 … B_16`, used for `x ≥ 10`.
fn ln_gamma_stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut pow = inv;
    for j in 1..=8 {
        let k = 2 * j;
        corr += bernoulli_even(j) / ((k * (k - 1)) as f64) * pow;
        pow *= inv2;
    }
    (x - 0.5) * x.ln() - x + 0.5 * LN_2PI + corr
}

/// `ln |Γ(x)|`; infinite at non-positive integers.
pub fn ln_gamma(x: f64) -> f64 {
    if x <= 0.0 && x.fract() == 0.0 {
        return f64::INFINITY;
    }
    if x < 0.5 {
        return LN_PI - (PI * x).sin().abs().ln() - ln_gamma(1.0 - x);
    }
    if x >= 10.0 {
        return ln_gamma_stirling(x);
    }
    gamma(x).ln()
}

/// `B_2, B_4, …, B_24` as exact fractions.
pub const BERNOULLI_EVEN: [(i64, i64); 12] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
];

/// `B_{2j}` for `1 ≤ j ≤ 12`.
pub fn bernoulli_even(j: usize) -> f64 {
    let (p, q) = BERNOULLI_EVEN[j - 1];
    p as f64 / q as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn gamma_at_integers_and_halves() {
        let mut fact = 1.0;
        for n in 1..=20 {
            assert!(rel(gamma(n as f64), fact) < 1e-13, "Γ({n})");
            fact *= n as f64;
        }
        assert!(rel(gamma(0.5), PI.sqrt()) < 1e-14);
        assert!(rel(gamma(-0.5), -2.0 * PI.sqrt()) < 1e-14);
        assert!(rel(gamma(-2.5), -8.0 * PI.sqrt() / 15.0) < 1e-13);
        assert!(gamma(-3.0).is_nan());
    }

    #[test]
    #[allow(clippy::excessive_precision)]
    fn high_precision_references() {
        let cases = [
            (0.1, 9.513_507_698_668_731_8),
            (3.7, 4.170_651_783_796_603),
            (11.2, 5_819_090.083_978_567),
            (29.9, 6.304_174_488_373_751_5e30),
            (-2.5, -0.945_308_720_482_941_9),
        ];
        for (x, want) in cases {
            assert!(rel(gamma(x), want) < 1e-13, "Γ({x})");
        }
    }

    #[test]
    fn ln_gamma_matches_gamma() {
        for &x in &[0.1, 0.7, 1.5, 3.3, 11.0, 29.9, -0.3, -2.5] {
            assert!((ln_gamma(x) - gamma(x).abs().ln()).abs() < 1e-13, "x = {x}");
        }
        assert!(ln_gamma(1.0).abs() < 1e-15);
        assert!(ln_gamma(2.0).abs() < 1e-15);
        // ln Γ(100) = ln 99!
        let ln_fact: f64 = (1..100).map(|k| (k as f64).ln()).sum();
        assert!(rel(ln_gamma(100.0), ln_fact) < 1e-14);
    }

    #[test]
    fn recurrence_on_unit_interval_grid() {
        // Γ(w+1) = w Γ(w) over (0, 30]
        for i in 1..300 {
            let w = i as f64 * 0.1;
            let e = rel(gamma(w + 1.0), w * gamma(w)); assert!(e < 1e-13, "w = {w}: {e}");
        }
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_even(1), 1.0 / 6.0);
        assert_eq!(bernoulli_even(5), 5.0 / 66.0);
    }
}
