//! Multiple Hurwitz zeta, multiple gamma and multiple sine functions of
//! negative integer order, single- and multi-period, as exact power
//! products in the variable `x`.
//!
//! For order `-r` the defining series is a finite alternating sum:
//!
//! ```text
//! ζ_{-r}(w;x) = Σ_{n=0}^{r} (-1)^n C(r,n) (x+n)^{-w}
//! Γ_{-r}(x)   = Π_{n=0}^{r} (x+n)^{(-1)^{n+1} C(r,n)}
//! S_{-r}(x)   = Γ_{-r}(x)^{-1} Γ_{-r}(-r-x)^{(-1)^r} = 1
//! ```

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::counting::CountingFunction;
use crate::error::{Result, ZetaError};
use crate::rational::{binomial, int, Rational};
use crate::symzeta::{zeta_of, HurwitzForm, PowerProduct, SignedProduct};

/// Positive periods `ω = (ω_1, …, ω_r)`, `r ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodVector(Vec<Rational>);

impl PeriodVector {
    pub fn new(periods: Vec<Rational>) -> Result<Self> {
        if periods.is_empty() {
            return Err(ZetaError::ParameterRange(
                "period vector must be nonempty".into(),
            ));
        }
        if let Some(bad) = periods.iter().find(|w| !w.is_positive()) {
            return Err(ZetaError::ParameterRange(format!(
                "periods must be positive, got {bad}"
            )));
        }
        Ok(PeriodVector(periods))
    }

    /// `(1, …, 1)` of length `r`.
    pub fn ones(r: usize) -> Result<Self> {
        Self::new(vec![Rational::one(); r])
    }

    /// `(from, from+1, …, to)`.
    pub fn range(from: i64, to: i64) -> Result<Self> {
        Self::new((from..=to).map(int).collect())
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, w| acc + w)
    }
}

/// Order `-r` together with its `r` periods.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiGammaSpec {
    periods: PeriodVector,
}

impl MultiGammaSpec {
    pub fn new(periods: PeriodVector) -> Self {
        MultiGammaSpec { periods }
    }

    /// Checks that `order = -len(periods)`.
    pub fn with_order(order: i64, periods: PeriodVector) -> Result<Self> {
        if order != -(periods.len() as i64) {
            return Err(ZetaError::ParameterRange(format!(
                "order {order} does not match {} periods",
                periods.len()
            )));
        }
        Ok(Self::new(periods))
    }

    pub fn order(&self) -> i64 {
        -(self.periods.len() as i64)
    }

    pub fn periods(&self) -> &PeriodVector {
        &self.periods
    }
}

fn signed_binomial(r: u32, n: u32, odd_shift: u32) -> Rational {
    let c = Rational::from_integer(binomial(r as u64, n as u64));
    if (n + odd_shift).is_multiple_of(2) {
        c
    } else {
        -c
    }
}

/// `ζ_{-r}(w;x)` as `{-n ↦ (-1)^n C(r,n)}`.
pub fn neg_zeta_terms(r: u32) -> HurwitzForm {
    HurwitzForm::from_terms((0..=r).map(|n| (int(-(n as i64)), signed_binomial(r, n, 0))))
}

/// `Γ_{-r}(x)` as `{-n ↦ (-1)^{n+1} C(r,n)}`.
pub fn neg_gamma(r: u32) -> PowerProduct {
    PowerProduct::from_factors((0..=r).map(|n| (int(-(n as i64)), signed_binomial(r, n, 1))))
}

/// Builds `Γ^{-1} · Γ(-total - x)^{(-1)^r}` symbolically.
fn sine_from_gamma(gamma: &PowerProduct, total: &Rational, r: usize) -> SignedProduct {
    let reflected = gamma
        .reflect(&-total)
        .expect("gamma products of negative order have integer exponents");
    let parity = if r.is_multiple_of(2) { 1 } else { -1 };
    SignedProduct::positive(gamma.inverse()).mul(&reflected.powi(parity))
}

/// `S_{-r}(x)`, computed from the factor map of `Γ_{-r}`; always `1`.
pub fn neg_sine(r: u32) -> SignedProduct {
    sine_from_gamma(&neg_gamma(r), &int(r as i64), r as usize)
}

/// `Σ_{S ⊆ ω} (-1)^{|S|} (x + ΣS)^{-w}`.
pub fn multiperiod_zeta_terms(spec: &MultiGammaSpec) -> HurwitzForm {
    HurwitzForm::from_terms(
        subset_sums(spec.periods.as_slice())
            .into_iter()
            .map(|(sum, size)| (-sum, if size % 2 == 0 { int(1) } else { int(-1) })),
    )
}

/// `Γ_{-r}(x, ω) = Π_{S ⊆ ω} (x + ΣS)^{(-1)^{|S|+1}}`, empty subset included.
pub fn multiperiod_gamma(spec: &MultiGammaSpec) -> PowerProduct {
    PowerProduct::from_factors(
        subset_sums(spec.periods.as_slice())
            .into_iter()
            .map(|(sum, size)| (-sum, if size % 2 == 0 { int(-1) } else { int(1) })),
    )
}

/// `S_{-r}(x, ω) = Γ_{-r}(x,ω)^{-1} Γ_{-r}(-(ω_1+…+ω_r)-x, ω)^{(-1)^r}`.
pub fn multiperiod_sine(spec: &MultiGammaSpec) -> SignedProduct {
    sine_from_gamma(
        &multiperiod_gamma(spec),
        &spec.periods.total(),
        spec.periods.len(),
    )
}

/// All `2^r` subset sums with subset sizes.
fn subset_sums(periods: &[Rational]) -> Vec<(Rational, usize)> {
    let mut out = vec![(Rational::zero(), 0usize)];
    for w in periods {
        let extended: Vec<_> = out.iter().map(|(s, k)| (s + w, k + 1)).collect();
        out.extend(extended);
    }
    out
}

/// Both sides of `ζ(s) / ζ(r-s)^{(-1)^r} = S_{-r}(s-r)^{-1}` for `Gm^{⊗r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem4Report {
    pub r: u32,
    pub left: SignedProduct,
    pub right: SignedProduct,
    pub holds: bool,
}

pub fn check_theorem4(r: u32) -> Result<Theorem4Report> {
    if r == 0 {
        return Err(ZetaError::ParameterRange("r must be at least 1".into()));
    }
    let zeta = zeta_of(&CountingFunction::u_minus_one().tensor_power(r));
    let parity = if r.is_multiple_of(2) { 1 } else { -1 };
    let left = SignedProduct::positive(zeta.clone()).mul(&zeta.reflect(&int(r as i64))?.powi(-parity));

    let sine = neg_sine(r);
    let right = SignedProduct {
        negated: sine.negated,
        product: sine.product.shift(&int(r as i64)),
    }
    .powi(-1);
    Ok(Theorem4Report {
        r,
        holds: left == right,
        left,
        right,
    })
}

/// `Σ_{n=0}^{r} (-1)^n C(r,n)`, zero for every `r ≥ 1`.
pub fn alternating_binomial_sum(r: u32) -> BigInt {
    (0..=r)
        .map(|n| {
            let c = binomial(r as u64, n as u64);
            if n % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .sum()
}
