//! Symbolic absolute Hurwitz zeta `Z_N(w;s) = Σ m(α)(s-α)^{-w}` and the
//! factored absolute zeta `ζ_N(s) = Π (s-α)^{-m(α)}` of a finite counting
//! function, with numeric evaluation and exact functional-equation checks.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::counting::CountingFunction;
use crate::error::{Result, ZetaError};
use crate::rational::{is_integer, to_f64, Rational};

/// A finite evaluation point for `w`, `s` or `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint(Complex64);

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(ComplexPoint(Complex64::new(re, im)))
        } else {
            Err(ZetaError::Domain(format!("non-finite point {re}+{im}i")))
        }
    }

    /// Real point; panics on NaN or infinity.
    pub fn real(re: f64) -> Self {
        Self::new(re, 0.0).expect("finite real point")
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }

    fn coincides_with(&self, root: &Rational) -> bool {
        self.0.im == 0.0 && self.0.re == to_f64(root)
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        p.0
    }
}

/// `Σ m(α) (s-α)^{-w}` stored as the map shift → coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HurwitzForm {
    terms: BTreeMap<Rational, Rational>,
}

impl HurwitzForm {
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut map: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (shift, coeff) in terms {
            *map.entry(shift).or_insert_with(Rational::zero) += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        HurwitzForm { terms: map }
    }

    /// `(shift, coefficient)` pairs, shift-descending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Rational, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, shift: &Rational) -> Rational {
        self.terms.get(shift).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_poles(&self, s: &ComplexPoint) -> Result<()> {
        match self.terms.keys().find(|a| s.coincides_with(a)) {
            Some(a) => Err(ZetaError::Pole(format!("s = {a}"))),
            None => Ok(()),
        }
    }

    pub fn display_in<'a>(&'a self, variable: &'a str) -> impl fmt::Display + 'a {
        HurwitzDisplay {
            form: self,
            variable,
        }
    }
}

/// Principal logarithm, argument in `(-π, π]`.
fn principal_ln(z: Complex64) -> Complex64 {
    let z = if z.im == 0.0 {
        // -0.0 imaginary parts would otherwise land on -π
        Complex64::new(z.re, 0.0)
    } else {
        z
    };
    z.ln()
}

/// `Σ m(α) exp(-w Log(s-α))`.
pub fn eval_hurwitz(form: &HurwitzForm, w: ComplexPoint, s: ComplexPoint) -> Result<ComplexPoint> {
    form.check_poles(&s)?;
    let (w, s) = (w.value(), s.value());
    let total: Complex64 = form
        .terms
        .iter()
        .map(|(a, m)| to_f64(m) * (-w * principal_ln(s - to_f64(a))).exp())
        .sum();
    ComplexPoint::new(total.re, total.im)
}

/// `∂/∂w Z(w;s)` at `w = 0`, i.e. `-Σ m(α) Log(s-α)`.
pub fn log_derivative_at_zero(form: &HurwitzForm, s: ComplexPoint) -> Result<ComplexPoint> {
    form.check_poles(&s)?;
    let s = s.value();
    let total: Complex64 = form
        .terms
        .iter()
        .map(|(a, m)| -to_f64(m) * principal_ln(s - to_f64(a)))
        .sum();
    ComplexPoint::new(total.re, total.im)
}

pub fn hurwitz_of(n: &CountingFunction) -> HurwitzForm {
    HurwitzForm::from_terms(n.terms().map(|(a, m)| (a.clone(), m.clone())))
}

/// Formal product `Π (s-α)^{e_α}` with exact roots and exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PowerProduct {
    factors: BTreeMap<Rational, Rational>,
}

impl PowerProduct {
    pub fn from_factors<I>(factors: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut map: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (root, exponent) in factors {
            *map.entry(root).or_insert_with(Rational::zero) += exponent;
        }
        map.retain(|_, e| !e.is_zero());
        PowerProduct { factors: map }
    }

    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// `(root, exponent)` pairs, root-ascending.
    pub fn factors(&self) -> impl DoubleEndedIterator<Item = (&Rational, &Rational)> + '_ {
        self.factors.iter()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, root: &Rational) -> Rational {
        self.factors.get(root).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn exponent_sum(&self) -> Rational {
        self.factors.values().fold(Rational::zero(), |acc, e| acc + e)
    }

    /// Product of two power products (factor maps add).
    pub fn mul(&self, other: &Self) -> Self {
        Self::from_factors(
            self.factors
                .iter()
                .chain(other.factors.iter())
                .map(|(a, e)| (a.clone(), e.clone())),
        )
    }

    /// `P^k` for a rational `k` (exponents scale).
    pub fn pow(&self, k: &Rational) -> Self {
        Self::from_factors(self.factors.iter().map(|(a, e)| (a.clone(), e * k)))
    }

    pub fn inverse(&self) -> Self {
        self.pow(&-Rational::one())
    }

    /// Substitutes `s -> s - d`: `Π (s-d-α)^e = Π (s-(α+d))^e`, so every root
    /// moves by `+d`.
    pub fn shift(&self, d: &Rational) -> Self {
        Self::from_factors(self.factors.iter().map(|(a, e)| (a + d, e.clone())))
    }

    /// Substitutes `s -> c - s`.
    ///
    /// `Π (c-s-α)^e = (-1)^{Σe} Π (s-(c-α))^e`; the sign is only defined for
    /// integer exponents.
    pub fn reflect(&self, c: &Rational) -> Result<SignedProduct> {
        let sum = self.integer_exponent_sum()?;
        Ok(SignedProduct {
            negated: sum.is_odd(),
            product: Self::from_factors(self.factors.iter().map(|(a, e)| (c - a, e.clone()))),
        })
    }

    fn integer_exponent_sum(&self) -> Result<BigInt> {
        let mut sum = BigInt::zero();
        for e in self.factors.values() {
            if !is_integer(e) {
                return Err(ZetaError::NonIntegerExponent(e.to_string()));
            }
            sum += e.to_integer();
        }
        Ok(sum)
    }

    pub fn display_in<'a>(&'a self, variable: &'a str) -> impl fmt::Display + 'a {
        ProductDisplay {
            product: self,
            variable,
        }
    }
}

/// `±P`; the sign appears when a product is reflected.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SignedProduct {
    pub negated: bool,
    pub product: PowerProduct,
}

impl SignedProduct {
    pub fn positive(product: PowerProduct) -> Self {
        SignedProduct {
            negated: false,
            product,
        }
    }

    /// True when this is the constant `1`.
    pub fn is_one(&self) -> bool {
        !self.negated && self.product.is_one()
    }

    pub fn mul(&self, other: &Self) -> Self {
        SignedProduct {
            negated: self.negated ^ other.negated,
            product: self.product.mul(&other.product),
        }
    }

    /// Integer power; `(-1)^k = -1` exactly when `k` is odd.
    pub fn powi(&self, k: i64) -> Self {
        SignedProduct {
            negated: self.negated && k.rem_euclid(2) == 1,
            product: self.product.pow(&Rational::from_integer(BigInt::from(k))),
        }
    }
}

/// Value of a power product plus a flag raised when a non-integer
/// exponent was evaluated on the principal branch cut.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductValue {
    pub value: ComplexPoint,
    pub on_branch_cut: bool,
}

/// `Π exp(e Log(s-α))` on the principal branch.
pub fn eval_power_product(product: &PowerProduct, s: ComplexPoint) -> Result<ProductValue> {
    let z = s.value();
    let mut total = Complex64::new(1.0, 0.0);
    let mut on_branch_cut = false;
    let mut vanishes = false;
    for (a, e) in &product.factors {
        let base = z - to_f64(a);
        if s.coincides_with(a) || base == Complex64::new(0.0, 0.0) {
            if e.is_negative() {
                return Err(ZetaError::Pole(format!("s = {a}")));
            }
            vanishes = true;
            continue;
        }
        if is_integer(e) {
            let k = e.to_integer();
            match i32::try_from(k) {
                Ok(k) => total *= base.powi(k),
                Err(_) => total *= (to_f64(e) * principal_ln(base)).exp(),
            }
        } else {
            if base.im == 0.0 && base.re < 0.0 {
                on_branch_cut = true;
            }
            total *= (to_f64(e) * principal_ln(base)).exp();
        }
    }
    if vanishes {
        total = Complex64::new(0.0, 0.0);
    }
    Ok(ProductValue {
        value: ComplexPoint::new(total.re, total.im)?,
        on_branch_cut,
    })
}

pub fn zeta_of(n: &CountingFunction) -> PowerProduct {
    PowerProduct::from_factors(n.terms().map(|(a, m)| (a.clone(), -m)))
}

/// Reflection point `c` and sign `ε` of `P(s) = P(c-s)^ε`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FeParams {
    pub center: Rational,
    sign: i8,
}

impl FeParams {
    pub fn new(center: Rational, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(ZetaError::ParameterRange(format!(
                "functional-equation sign must be +1 or -1, got {sign}"
            )));
        }
        Ok(FeParams { center, sign })
    }

    /// Sign `(-1)^k`.
    pub fn with_parity(center: Rational, k: i64) -> Self {
        FeParams {
            center,
            sign: if k.rem_euclid(2) == 0 { 1 } else { -1 },
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorMismatch {
    pub root: Rational,
    /// Exponent in the original product.
    pub expected: Rational,
    /// Exponent in the reflected product `P(c-s)^ε`.
    pub actual: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeReport {
    pub holds: bool,
    pub params: FeParams,
    pub mismatches: Vec<FactorMismatch>,
    /// `Σ ε e_α`; the reflected product carries the sign `(-1)^{parity_sum}`.
    pub parity_sum: BigInt,
}

/// Exact check that `P(s) = P(c-s)^ε` as rational functions of `s`.
pub fn check_functional_equation(product: &PowerProduct, fe: &FeParams) -> Result<FeReport> {
    let exponent_sum = product.integer_exponent_sum()?;
    let eps = Rational::from_integer(BigInt::from(fe.sign));
    let reflected = PowerProduct::from_factors(
        product
            .factors
            .iter()
            .map(|(a, e)| (&fe.center - a, e * &eps)),
    );
    let parity_sum = exponent_sum * BigInt::from(fe.sign);

    let mut roots: Vec<&Rational> = product.factors.keys().chain(reflected.factors.keys()).collect();
    roots.sort();
    roots.dedup();
    let mismatches: Vec<FactorMismatch> = roots
        .into_iter()
        .filter_map(|root| {
            let expected = product.exponent(root);
            let actual = reflected.exponent(root);
            (expected != actual).then(|| FactorMismatch {
                root: root.clone(),
                expected,
                actual,
            })
        })
        .collect();
    Ok(FeReport {
        holds: mismatches.is_empty() && parity_sum.is_even(),
        params: fe.clone(),
        mismatches,
        parity_sum,
    })
}

struct ProductDisplay<'a> {
    product: &'a PowerProduct,
    variable: &'a str,
}

fn fmt_linear(variable: &str, root: &Rational) -> String {
    if root.is_zero() {
        variable.to_string()
    } else if root.is_negative() {
        format!("({variable}+{})", -root)
    } else {
        format!("({variable}-{root})")
    }
}

/// Root-ascending `(s-ROOT)^EXP` factors joined by ` * `; `1` when empty.
impl fmt::Display for ProductDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.product.is_one() {
            return f.write_str("1");
        }
        for (i, (root, e)) in self.product.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{}^{e}", fmt_linear(self.variable, root))?;
        }
        Ok(())
    }
}

impl fmt::Display for PowerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("s").fmt(f)
    }
}

impl fmt::Display for SignedProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "-{}", self.product)
        } else {
            self.product.fmt(f)
        }
    }
}

struct HurwitzDisplay<'a> {
    form: &'a HurwitzForm,
    variable: &'a str,
}

/// Shift-descending, e.g. `x^(-w) - 3*(x+1)^(-w) + 3*(x+2)^(-w) - (x+3)^(-w)`.
impl fmt::Display for HurwitzDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.form.is_empty() {
            return f.write_str("0");
        }
        for (i, (shift, coeff)) in self.form.terms().enumerate() {
            let negative = coeff.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = coeff.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{}^(-w)", fmt_linear(self.variable, shift))?;
        }
        Ok(())
    }
}

impl fmt::Display for HurwitzForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("s").fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn cf(pairs: &[(i64, i64)]) -> CountingFunction {
        CountingFunction::normalize(pairs.iter().map(|&(a, m)| (int(a), int(m))))
    }

    fn pp(pairs: &[(i64, i64)]) -> PowerProduct {
        PowerProduct::from_factors(pairs.iter().map(|&(a, e)| (int(a), int(e))))
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn hurwitz_forms() {
        let z = hurwitz_of(&CountingFunction::one());
        assert_eq!(z, HurwitzForm::from_terms([(int(0), int(1))]));
        assert_eq!(z.to_string(), "s^(-w)");

        let sl2 = hurwitz_of(&cf(&[(3, 1), (1, -1)]));
        assert_eq!(sl2.to_string(), "(s-3)^(-w) - (s-1)^(-w)");

        assert!(hurwitz_of(&CountingFunction::zero()).is_empty());
    }

    #[test]
    fn zeta_forms() {
        assert_eq!(zeta_of(&CountingFunction::one()), pp(&[(0, -1)]));
        assert_eq!(zeta_of(&CountingFunction::one()).to_string(), "s^-1");
        assert_eq!(zeta_of(&cf(&[(3, 1), (1, -1)])), pp(&[(1, 1), (3, -1)]));
        // Theorem A on u^2 - 2u + 1
        let sq = CountingFunction::u_minus_one().tensor_power(2);
        assert_eq!(zeta_of(&sq), pp(&[(0, -1), (1, 2), (2, -1)]));
    }

    #[test]
    fn evaluates_hurwitz() {
        let one = ComplexPoint::real(1.0);
        let z = hurwitz_of(&CountingFunction::one());
        assert!(close(eval_hurwitz(&z, one, ComplexPoint::real(2.0)).unwrap().re(), 0.5, 1e-15));

        let sl2 = hurwitz_of(&cf(&[(3, 1), (1, -1)]));
        let v = eval_hurwitz(&sl2, ComplexPoint::real(0.0), ComplexPoint::new(7.5, -2.0).unwrap()).unwrap();
        assert_eq!((v.re(), v.im()), (0.0, 0.0));

        let z = HurwitzForm::from_terms([(int(1), int(1))]);
        let v = eval_hurwitz(&z, ComplexPoint::real(2.0), ComplexPoint::real(3.0)).unwrap();
        assert!(close(v.re(), 0.25, 1e-15));

        assert!(matches!(
            eval_hurwitz(&sl2, one, ComplexPoint::real(3.0)),
            Err(ZetaError::Pole(_))
        ));
    }

    #[test]
    fn evaluates_products() {
        let v = eval_power_product(&pp(&[(0, -1)]), ComplexPoint::real(2.0)).unwrap();
        assert_eq!(v.value.re(), 0.5);
        let sl2 = pp(&[(1, 1), (3, -1)]);
        assert_eq!(eval_power_product(&sl2, ComplexPoint::real(5.0)).unwrap().value.re(), 2.0);
        assert!(matches!(
            eval_power_product(&sl2, ComplexPoint::real(3.0)),
            Err(ZetaError::Pole(_))
        ));
        // zero of the numerator is fine
        assert_eq!(eval_power_product(&sl2, ComplexPoint::real(1.0)).unwrap().value.re(), 0.0);

        let sqrt = PowerProduct::from_factors([(int(0), frac(1, 2))]);
        let v = eval_power_product(&sqrt, ComplexPoint::real(-4.0)).unwrap();
        assert!(v.on_branch_cut);
        assert!(close(v.value.im(), 2.0, 1e-15));
        assert!(!eval_power_product(&sqrt, ComplexPoint::real(4.0)).unwrap().on_branch_cut);
    }

    #[test]
    fn log_derivative_examples() {
        let z = hurwitz_of(&CountingFunction::one());
        let v = log_derivative_at_zero(&z, ComplexPoint::real(2.0)).unwrap();
        assert!(close(v.re(), -std::f64::consts::LN_2, 1e-15));

        let sl2 = hurwitz_of(&cf(&[(3, 1), (1, -1)]));
        let v = log_derivative_at_zero(&sl2, ComplexPoint::real(5.0)).unwrap();
        assert!(close(v.re(), std::f64::consts::LN_2, 1e-15));

        let v = log_derivative_at_zero(&HurwitzForm::default(), ComplexPoint::real(-1.0)).unwrap();
        assert_eq!(v.re(), 0.0);
    }

    #[test]
    fn functional_equation_examples() {
        let sq = pp(&[(0, -1), (1, 2), (2, -1)]);
        let report = check_functional_equation(&sq, &FeParams::new(int(2), 1).unwrap()).unwrap();
        assert!(report.holds);
        assert_eq!(report.parity_sum, BigInt::zero());

        let sl2 = pp(&[(1, 1), (3, -1)]);
        assert!(check_functional_equation(&sl2, &FeParams::new(int(4), -1).unwrap()).unwrap().holds);

        let f1 = pp(&[(0, -1)]);
        let report = check_functional_equation(&f1, &FeParams::new(int(1), 1).unwrap()).unwrap();
        assert!(!report.holds);
        assert_eq!(report.mismatches.len(), 2);
        assert_eq!(report.parity_sum, BigInt::from(-1));

        let sqrt = PowerProduct::from_factors([(int(0), frac(1, 2))]);
        assert!(matches!(
            check_functional_equation(&sqrt, &FeParams::new(int(0), 1).unwrap()),
            Err(ZetaError::NonIntegerExponent(_))
        ));
        assert!(FeParams::new(int(0), 2).is_err());
    }

    #[test]
    fn odd_parity_breaks_the_equation() {
        // s -> 2-s sends (s-1) to (1-s) = -(s-1): same factor map, wrong sign
        let p = pp(&[(1, 1)]);
        let report = check_functional_equation(&p, &FeParams::new(int(2), 1).unwrap()).unwrap();
        assert!(report.mismatches.is_empty());
        assert!(!report.holds);
    }

    #[test]
    fn display_formats() {
        assert_eq!(pp(&[(1, 1), (3, -1)]).to_string(), "(s-1)^1 * (s-3)^-1");
        assert_eq!(pp(&[(-2, 1), (0, -1)]).display_in("x").to_string(), "(x+2)^1 * x^-1");
        assert_eq!(PowerProduct::one().to_string(), "1");
        let q = PowerProduct::from_factors([(frac(1, 2), frac(-3, 2))]);
        assert_eq!(q.to_string(), "(s-1/2)^-3/2");
    }

    fn small_cf() -> impl Strategy<Value = CountingFunction> {
        prop::collection::vec((-3i64..5, 1i64..3, -3i64..4), 0..4).prop_map(|v| {
            CountingFunction::normalize(v.into_iter().map(|(p, q, m)| (frac(p, q), int(m))))
        })
    }

    /// Exponent convolution of two factor maps, computed from the Theorem B(2)
    /// double product directly.
    fn tensor_zeta(a: &CountingFunction, b: &CountingFunction) -> PowerProduct {
        let mut factors = Vec::new();
        for (a1, m1) in a.terms() {
            for (a2, m2) in b.terms() {
                factors.push((a1 + a2, -(m1 * m2)));
            }
        }
        PowerProduct::from_factors(factors)
    }

    proptest! {
        #[test]
        fn direct_sum_multiplies_zetas(a in small_cf(), b in small_cf()) {
            prop_assert_eq!(zeta_of(&a.oplus(&b)), zeta_of(&a).mul(&zeta_of(&b)));
            let lhs = hurwitz_of(&a.oplus(&b));
            let rhs = HurwitzForm::from_terms(
                hurwitz_of(&a).terms().chain(hurwitz_of(&b).terms()).map(|(x, y)| (x.clone(), y.clone())),
            );
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn tensor_rule(a in small_cf(), b in small_cf()) {
            prop_assert_eq!(zeta_of(&a.otimes(&b)), tensor_zeta(&a, &b));
        }

        #[test]
        fn exp_log_derivative_is_zeta(a in small_cf(), gap in 1.0f64..4.0) {
            let max = a.max_exponent().map(to_f64).unwrap_or(0.0);
            let s = ComplexPoint::real(max + 1.0 + gap);
            let lhs = log_derivative_at_zero(&hurwitz_of(&a), s).unwrap().re().exp();
            let rhs = eval_power_product(&zeta_of(&a), s).unwrap().value.re();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs(), "{lhs} vs {rhs}");
        }

        #[test]
        fn finite_difference_in_w(a in small_cf(), gap in 1.0f64..4.0) {
            let max = a.max_exponent().map(to_f64).unwrap_or(0.0);
            let s = ComplexPoint::real(max + 1.0 + gap);
            let z = hurwitz_of(&a);
            let h = 1e-6;
            let fd = (eval_hurwitz(&z, ComplexPoint::real(h), s).unwrap().re()
                - eval_hurwitz(&z, ComplexPoint::real(0.0), s).unwrap().re()) / h;
            let exact = log_derivative_at_zero(&z, s).unwrap().re();
            let scale: f64 = a.terms().map(|(x, m)| to_f64(m).abs() * (s.re() - to_f64(x)).ln().abs()).sum();
            prop_assert!((fd - exact).abs() <= 1e-5 * exact.abs().max(scale).max(1e-300), "{fd} vs {exact}");
        }

        #[test]
        fn vanishing_at_one_gives_zero_exponent_sum(a in small_cf()) {
            let balanced = a.oplus(&CountingFunction::monomial(int(0), -a.multiplicity_sum()));
            prop_assert!(zeta_of(&balanced).exponent_sum().is_zero());
        }
    }
}
