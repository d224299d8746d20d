//! Finite counting functions `N(u) = Σ m(α) u^α` with exact rational
//! exponents and multiplicities.
//!
//! Direct sum (`⊕`) is pointwise addition and the Kurokawa tensor product
//! (`⊗`) is pointwise multiplication, i.e. convolution of exponents.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{is_integer, to_f64, Rational};

/// Canonical finite sum `Σ m(α) u^α`.
///
/// No stored multiplicity is zero and exponents are distinct. The empty map
/// is the zero function. Iteration via [`CountingFunction::terms`] is in
/// exponent-descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CountingFunction {
    terms: BTreeMap<Rational, Rational>,
}

impl CountingFunction {
    /// Merges equal exponents and drops zero multiplicities.
    pub fn normalize<I>(raw_terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut terms: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (exponent, multiplicity) in raw_terms {
            *terms.entry(exponent).or_insert_with(Rational::zero) += multiplicity;
        }
        terms.retain(|_, m| !m.is_zero());
        CountingFunction { terms }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `N(u) = 1`, the tensor identity (counting function of Spec F1).
    pub fn one() -> Self {
        Self::monomial(Rational::zero(), Rational::one())
    }

    pub fn monomial(exponent: Rational, multiplicity: Rational) -> Self {
        Self::normalize([(exponent, multiplicity)])
    }

    /// `u - 1`, the counting function of the multiplicative group.
    pub fn u_minus_one() -> Self {
        Self::normalize([
            (Rational::one(), Rational::one()),
            (Rational::zero(), -Rational::one()),
        ])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, multiplicity)` pairs, exponent-descending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Rational, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn multiplicity(&self, exponent: &Rational) -> Rational {
        self.terms.get(exponent).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn max_exponent(&self) -> Option<&Rational> {
        self.terms.keys().next_back()
    }

    /// `Σ m(α)`, the value of `N` at `u = 1`.
    pub fn multiplicity_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, m| acc + m)
    }

    pub fn oplus(&self, other: &Self) -> Self {
        Self::normalize(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(a, m)| (a.clone(), m.clone())),
        )
    }

    pub fn otimes(&self, other: &Self) -> Self {
        let mut out: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (a1, m1) in &self.terms {
            for (a2, m2) in &other.terms {
                *out.entry(a1 + a2).or_insert_with(Rational::zero) += m1 * m2;
            }
        }
        out.retain(|_, m| !m.is_zero());
        CountingFunction { terms: out }
    }

    /// `N^{⊗r}` for `r ≥ 1`; `r = 0` gives the tensor identity.
    pub fn tensor_power(&self, r: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = r;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.otimes(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.otimes(&base);
            }
        }
        acc
    }

    /// Negation, `-N`.
    pub fn negate(&self) -> Self {
        CountingFunction {
            terms: self.terms.iter().map(|(a, m)| (a.clone(), -m)).collect(),
        }
    }

    /// `Σ m(α) u^α` in double precision. Fractional exponents need `u ≥ 0`
    /// and give NaN otherwise.
    pub fn eval_at(&self, u: f64) -> f64 {
        self.terms
            .iter()
            .map(|(a, m)| {
                let power = match a.to_integer().to_i32() {
                    Some(k) if is_integer(a) => u.powi(k),
                    _ => u.powf(to_f64(a)),
                };
                to_f64(m) * power
            })
            .sum()
    }

    /// Exact value at a rational point when every exponent is an integer.
    pub fn eval_exact(&self, u: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (a, m) in &self.terms {
            if !is_integer(a) {
                return None;
            }
            let e = a.to_integer().to_i32()?;
            if u.is_zero() && e < 0 {
                return None;
            }
            acc += m * num_traits::pow::Pow::pow(u, e);
        }
        Some(acc)
    }
}

fn fmt_power(exponent: &Rational) -> String {
    if exponent.is_one() {
        "u".to_string()
    } else if is_integer(exponent) {
        format!("u^{exponent}")
    } else {
        format!("u^({exponent})")
    }
}

/// Canonical syntax accepted back by [`crate::parser::parse_expr`], e.g.
/// `u^3 - u`, `1/2*u^(1/2) + 1`, `0` for the zero function.
impl fmt::Display for CountingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exponent, multiplicity)) in self.terms().enumerate() {
            let negative = multiplicity.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = multiplicity.abs();
            if exponent.is_zero() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&fmt_power(exponent))?;
            } else {
                write!(f, "{magnitude}*{}", fmt_power(exponent))?;
            }
        }
        Ok(())
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

    fn as_pairs(n: &CountingFunction) -> Vec<(Rational, Rational)> {
        n.terms().map(|(a, m)| (a.clone(), m.clone())).collect()
    }

    /// Dense integer polynomial product, independent of the map convolution.
    fn dense_mul(p: &[i64], q: &[i64]) -> Vec<i64> {
        let mut out = vec![0; p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        out
    }

    fn from_dense(coeffs: &[i64]) -> CountingFunction {
        CountingFunction::normalize(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (int(i as i64), int(c))),
        )
    }

    #[test]
    fn normalize_examples() {
        assert!(cf(&[(1, 1), (1, -1)]).is_zero());
        assert_eq!(
            as_pairs(&cf(&[(3, 1), (1, -1)])),
            vec![(int(3), int(1)), (int(1), int(-1))]
        );
        assert_eq!(as_pairs(&cf(&[(0, 1), (0, 1)])), vec![(int(0), int(2))]);
    }

    #[test]
    fn oplus_examples() {
        let u_minus_1 = CountingFunction::u_minus_one();
        assert_eq!(u_minus_1.oplus(&CountingFunction::one()), cf(&[(1, 1)]));
        assert!(cf(&[(1, 1)]).oplus(&cf(&[(1, -1)])).is_zero());
        // term-by-term: (u^3 - u) + (u - 1)
        assert_eq!(
            cf(&[(3, 1), (1, -1)]).oplus(&u_minus_1),
            cf(&[(3, 1), (0, -1)])
        );
    }

    #[test]
    fn otimes_examples() {
        let u_minus_1 = CountingFunction::u_minus_one();
        let square = dense_mul(&[-1, 1], &[-1, 1]);
        assert_eq!(square, vec![1, -2, 1]);
        assert_eq!(u_minus_1.otimes(&u_minus_1), from_dense(&square));

        let n = cf(&[(3, 1), (1, -1)]);
        assert_eq!(n.otimes(&CountingFunction::one()), n);

        let half = frac(1, 2);
        let a = CountingFunction::normalize([(half.clone(), int(1)), (int(0), int(1))]);
        let b = CountingFunction::normalize([(half, int(1)), (int(0), int(-1))]);
        assert_eq!(a.otimes(&b), cf(&[(1, 1), (0, -1)]));
    }

    #[test]
    fn tensor_power_matches_binomial_theorem() {
        let g = CountingFunction::u_minus_one();
        for r in 1..=8u32 {
            // (u - 1)^r = Σ C(r, k) (-1)^{r-k} u^k
            let expected: Vec<i64> = (0..=r as u64)
                .map(|k| {
                    let c = crate::rational::binomial(r as u64, k).to_i64().unwrap();
                    if (r as u64 - k).is_multiple_of(2) {
                        c
                    } else {
                        -c
                    }
                })
                .collect();
            assert_eq!(g.tensor_power(r), from_dense(&expected), "r = {r}");
        }
        assert_eq!(g.tensor_power(3), cf(&[(3, 1), (2, -3), (1, 3), (0, -1)]));
        assert_eq!(g.tensor_power(1), g);
    }

    #[test]
    fn eval_examples() {
        assert!((cf(&[(3, 1), (1, -1)]).eval_at(2.0) - 6.0).abs() < 1e-12);
        assert_eq!(CountingFunction::one().eval_at(5.0), 1.0);
        let sq = CountingFunction::u_minus_one().tensor_power(2);
        assert!((sq.eval_at(3.0) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn multiplicity_sum_is_value_at_one() {
        let sq = CountingFunction::u_minus_one().tensor_power(5);
        assert!(sq.multiplicity_sum().is_zero());
        assert_eq!(sq.eval_exact(&int(1)), Some(int(0)));
        assert_eq!(cf(&[(3, 1), (0, 4)]).multiplicity_sum(), int(5));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(cf(&[(3, 1), (1, -1)]).to_string(), "u^3 - u");
        assert_eq!(CountingFunction::zero().to_string(), "0");
        assert_eq!(
            CountingFunction::u_minus_one().tensor_power(2).to_string(),
            "u^2 - 2*u + 1"
        );
        let n = CountingFunction::normalize([
            (frac(1, 2), frac(-3, 4)),
            (int(-2), int(1)),
        ]);
        assert_eq!(n.to_string(), "-3/4*u^(1/2) + u^-2");
    }

    fn abs_eval(n: &CountingFunction, u: f64) -> f64 {
        n.terms()
            .map(|(a, m)| to_f64(m).abs() * u.powf(to_f64(a)))
            .sum()
    }

    fn small_cf() -> impl Strategy<Value = CountingFunction> {
        prop::collection::vec((-3i64..5, 1i64..3, -3i64..4), 0..4).prop_map(|v| {
            CountingFunction::normalize(v.into_iter().map(|(p, q, m)| (frac(p, q), int(m))))
        })
    }

    proptest! {
        #[test]
        fn otimes_is_commutative_and_associative(a in small_cf(), b in small_cf(), c in small_cf()) {
            prop_assert_eq!(a.otimes(&b), b.otimes(&a));
            prop_assert_eq!(a.otimes(&b).otimes(&c), a.otimes(&b.otimes(&c)));
        }

        #[test]
        fn otimes_distributes_over_oplus(a in small_cf(), b in small_cf(), c in small_cf()) {
            prop_assert_eq!(a.otimes(&b.oplus(&c)), a.otimes(&b).oplus(&a.otimes(&c)));
        }

        #[test]
        fn identities(a in small_cf()) {
            prop_assert_eq!(a.otimes(&CountingFunction::one()), a.clone());
            prop_assert_eq!(CountingFunction::one().otimes(&a), a.clone());
            prop_assert_eq!(a.oplus(&CountingFunction::zero()), a.clone());
        }

        #[test]
        fn eval_is_multiplicative(a in small_cf(), b in small_cf(), u in 1.1f64..10.0) {
            let lhs = a.otimes(&b).eval_at(u);
            let rhs = a.eval_at(u) * b.eval_at(u);
            // relative to the magnitude of the summands, so cancellation is not penalised
            let scale = abs_eval(&a, u) * abs_eval(&b, u);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale.max(f64::MIN_POSITIVE), "{lhs} vs {rhs}");
        }
    }
}
