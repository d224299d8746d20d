//! Named F1-schemes: counting functions, zeta functions and functional
//! equations.
//!
//! The SL/GL counting polynomials are `u^d Π (1 - u^{-ω_j})` with the
//! period vectors `(2, …, r)` and `(1, …, r)`, which is what the
//! multi-period gamma identities require. They agree with the classical
//! group orders over finite fields (see the tests).

use std::fmt;

use crate::counting::CountingFunction;
use crate::error::{Result, ZetaError};
use crate::gammasine::{multiperiod_gamma, MultiGammaSpec, PeriodVector};
use crate::rational::{frac, int, Rational};
use crate::symzeta::{zeta_of, FeParams, PowerProduct};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SchemeKind {
    SpecF1,
    /// `Gm^{⊗r}`; `Gm` itself is `GmTensor(1)`.
    GmTensor(u32),
    SL(u32),
    GL(u32),
    Custom(CountingFunction),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchemeSpec {
    kind: SchemeKind,
}

impl SchemeSpec {
    pub fn spec_f1() -> Self {
        SchemeSpec {
            kind: SchemeKind::SpecF1,
        }
    }

    pub fn gm() -> Self {
        SchemeSpec {
            kind: SchemeKind::GmTensor(1),
        }
    }

    pub fn gm_tensor(r: u32) -> Result<Self> {
        if r < 1 {
            return Err(ZetaError::ParameterRange(format!("Gm^r needs r >= 1, got {r}")));
        }
        Ok(SchemeSpec {
            kind: SchemeKind::GmTensor(r),
        })
    }

    pub fn sl(r: u32) -> Result<Self> {
        if r < 2 {
            return Err(ZetaError::ParameterRange(format!("SL(r) needs r >= 2, got {r}")));
        }
        Ok(SchemeSpec {
            kind: SchemeKind::SL(r),
        })
    }

    pub fn gl(r: u32) -> Result<Self> {
        if r < 1 {
            return Err(ZetaError::ParameterRange(format!("GL(r) needs r >= 1, got {r}")));
        }
        Ok(SchemeSpec {
            kind: SchemeKind::GL(r),
        })
    }

    pub fn custom(n: CountingFunction) -> Self {
        SchemeSpec {
            kind: SchemeKind::Custom(n),
        }
    }

    pub fn kind(&self) -> &SchemeKind {
        &self.kind
    }

    pub fn dimension(&self) -> Option<i64> {
        match self.kind {
            SchemeKind::SpecF1 => Some(0),
            SchemeKind::GmTensor(r) => Some(r as i64),
            SchemeKind::SL(r) => Some((r as i64).pow(2) - 1),
            SchemeKind::GL(r) => Some((r as i64).pow(2)),
            SchemeKind::Custom(_) => None,
        }
    }

    pub fn rank(&self) -> Option<i64> {
        match self.kind {
            SchemeKind::SpecF1 => Some(0),
            SchemeKind::GmTensor(r) | SchemeKind::GL(r) => Some(r as i64),
            SchemeKind::SL(r) => Some(r as i64 - 1),
            SchemeKind::Custom(_) => None,
        }
    }

    pub fn periods(&self) -> Option<PeriodVector> {
        let periods = match self.kind {
            SchemeKind::GmTensor(r) => PeriodVector::ones(r as usize),
            SchemeKind::SL(r) => PeriodVector::range(2, r as i64),
            SchemeKind::GL(r) => PeriodVector::range(1, r as i64),
            SchemeKind::SpecF1 | SchemeKind::Custom(_) => return None,
        };
        Some(periods.expect("catalog periods are positive and nonempty"))
    }

    pub fn counting(&self) -> CountingFunction {
        match &self.kind {
            SchemeKind::SpecF1 => CountingFunction::one(),
            SchemeKind::GmTensor(r) => CountingFunction::u_minus_one().tensor_power(*r),
            SchemeKind::SL(_) | SchemeKind::GL(_) => {
                let d = int(self.dimension().expect("SL/GL have a dimension"));
                let periods = self.periods().expect("SL/GL have periods");
                periods
                    .as_slice()
                    .iter()
                    .fold(CountingFunction::monomial(d, int(1)), |acc, w| {
                        acc.otimes(&CountingFunction::normalize([
                            (int(0), int(1)),
                            (-w.clone(), int(-1)),
                        ]))
                    })
            }
            SchemeKind::Custom(n) => n.clone(),
        }
    }

    /// `ζ` of the scheme; for the group schemes this is also the shifted
    /// multi-period gamma `Γ_{-rank}(s - dim, ω)`.
    pub fn zeta(&self) -> PowerProduct {
        let zeta = zeta_of(&self.counting());
        if let (Some(d), Some(periods)) = (self.dimension(), self.periods()) {
            debug_assert_eq!(
                zeta,
                multiperiod_gamma(&MultiGammaSpec::new(periods)).shift(&int(d)),
                "{self}"
            );
        }
        zeta
    }

    pub fn fe_params(&self) -> Result<FeParams> {
        match self.kind {
            SchemeKind::GmTensor(r) => Ok(FeParams::with_parity(int(r as i64), r as i64)),
            SchemeKind::SL(r) => {
                let r = r as i64;
                Ok(FeParams::with_parity(sl_gl_center(r) - int(1), r - 1))
            }
            SchemeKind::GL(r) => {
                let r = r as i64;
                Ok(FeParams::with_parity(sl_gl_center(r), r))
            }
            SchemeKind::SpecF1 | SchemeKind::Custom(_) => {
                Err(ZetaError::NoFunctionalEquation(self.to_string()))
            }
        }
    }
}

/// `r(3r-1)/2`.
fn sl_gl_center(r: i64) -> Rational {
    frac(r * (3 * r - 1), 2)
}

pub fn counting_of(spec: &SchemeSpec) -> CountingFunction {
    spec.counting()
}

pub fn zeta_of_scheme(spec: &SchemeSpec) -> PowerProduct {
    spec.zeta()
}

pub fn fe_params_of(spec: &SchemeSpec) -> Result<FeParams> {
    spec.fe_params()
}

/// Representative members of each family, in display order.
pub fn listing() -> Vec<SchemeSpec> {
    let mut out = vec![SchemeSpec::spec_f1(), SchemeSpec::gm()];
    out.extend((2..=4).map(|r| SchemeSpec::gm_tensor(r).expect("r >= 1")));
    out.extend((2..=4).map(|r| SchemeSpec::sl(r).expect("r >= 2")));
    out.extend((1..=4).map(|r| SchemeSpec::gl(r).expect("r >= 1")));
    out
}

/// Names as accepted by [`crate::parser::parse_scheme`].
impl fmt::Display for SchemeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SchemeKind::SpecF1 => f.write_str("SpecF1"),
            SchemeKind::GmTensor(1) => f.write_str("Gm"),
            SchemeKind::GmTensor(r) => write!(f, "Gm^{r}"),
            SchemeKind::SL(r) => write!(f, "SL({r})"),
            SchemeKind::GL(r) => write!(f, "GL({r})"),
            SchemeKind::Custom(n) => write!(f, "custom({n})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symzeta::check_functional_equation;
    use num_bigint::BigInt;
    use num_traits::Pow;

    fn cf(pairs: &[(i64, i64)]) -> CountingFunction {
        CountingFunction::normalize(pairs.iter().map(|&(a, m)| (int(a), int(m))))
    }

    fn pp(pairs: &[(i64, i64)]) -> PowerProduct {
        PowerProduct::from_factors(pairs.iter().map(|&(a, e)| (int(a), int(e))))
    }

    /// |GL_r(F_q)| = Π_{j=0}^{r-1} (q^r - q^j)
    fn gl_order(r: u32, q: u64) -> BigInt {
        let q = BigInt::from(q);
        (0..r).map(|j| q.clone().pow(r) - q.clone().pow(j)).product()
    }

    #[test]
    fn counting_examples() {
        assert_eq!(SchemeSpec::sl(2).unwrap().counting(), cf(&[(3, 1), (1, -1)]));
        assert_eq!(SchemeSpec::spec_f1().counting(), CountingFunction::one());
        assert_eq!(SchemeSpec::gl(2).unwrap().counting(), cf(&[(4, 1), (3, -1), (2, -1), (1, 1)]));
        assert_eq!(SchemeSpec::gl(1).unwrap().counting(), SchemeSpec::gm().counting());
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(SchemeSpec::sl(2).unwrap().zeta(), pp(&[(1, 1), (3, -1)]));
        assert_eq!(SchemeSpec::sl(3).unwrap().zeta(), pp(&[(5, 1), (6, 1), (3, -1), (8, -1)]));
        assert_eq!(SchemeSpec::gl(2).unwrap().zeta(), pp(&[(2, 1), (3, 1), (1, -1), (4, -1)]));
        assert_eq!(SchemeSpec::spec_f1().zeta().to_string(), "s^-1");
    }

    #[test]
    fn fe_params_examples() {
        let sl2 = SchemeSpec::sl(2).unwrap().fe_params().unwrap();
        assert_eq!((sl2.center.clone(), sl2.sign()), (int(4), -1));
        let gl2 = SchemeSpec::gl(2).unwrap().fe_params().unwrap();
        assert_eq!((gl2.center.clone(), gl2.sign()), (int(5), 1));
        let gm3 = SchemeSpec::gm_tensor(3).unwrap().fe_params().unwrap();
        assert_eq!((gm3.center.clone(), gm3.sign()), (int(3), -1));
        let gm = SchemeSpec::gm().fe_params().unwrap();
        assert_eq!((gm.center.clone(), gm.sign()), (int(1), -1));
        assert!(matches!(
            SchemeSpec::spec_f1().fe_params(),
            Err(ZetaError::NoFunctionalEquation(_))
        ));
        assert!(SchemeSpec::custom(CountingFunction::one()).fe_params().is_err());
    }

    #[test]
    fn parameter_ranges() {
        assert!(SchemeSpec::sl(1).is_err());
        assert!(SchemeSpec::gl(0).is_err());
        assert!(SchemeSpec::gm_tensor(0).is_err());
    }

    #[test]
    fn metadata() {
        let sl4 = SchemeSpec::sl(4).unwrap();
        assert_eq!((sl4.dimension(), sl4.rank()), (Some(15), Some(3)));
        assert_eq!(sl4.periods().unwrap(), PeriodVector::range(2, 4).unwrap());
        let gl3 = SchemeSpec::gl(3).unwrap();
        assert_eq!((gl3.dimension(), gl3.rank()), (Some(9), Some(3)));
        let gm5 = SchemeSpec::gm_tensor(5).unwrap();
        assert_eq!(gm5.periods().unwrap(), PeriodVector::ones(5).unwrap());
        assert_eq!(gm5.dimension(), Some(5));
    }

    #[test]
    fn functional_equations_hold_across_catalog() {
        let mut specs: Vec<SchemeSpec> = (1..=8).map(|r| SchemeSpec::gm_tensor(r).unwrap()).collect();
        specs.extend((2..=6).map(|r| SchemeSpec::sl(r).unwrap()));
        specs.extend((1..=6).map(|r| SchemeSpec::gl(r).unwrap()));
        for spec in specs {
            let report = check_functional_equation(&spec.zeta(), &spec.fe_params().unwrap()).unwrap();
            assert!(report.holds, "{spec}: {report:?}");
        }
    }

    #[test]
    fn sl_zeta_is_shifted_multiperiod_gamma() {
        for r in 2..=6 {
            let spec = SchemeSpec::sl(r).unwrap();
            let gamma = multiperiod_gamma(&MultiGammaSpec::new(PeriodVector::range(2, r as i64).unwrap()));
            assert_eq!(spec.zeta(), gamma.shift(&int((r * r) as i64 - 1)));
        }
    }

    #[test]
    fn gl_counting_matches_finite_group_orders() {
        for r in 1..=5 {
            let n = SchemeSpec::gl(r).unwrap().counting();
            for q in [2u64, 3, 4, 5, 7, 8, 9, 11] {
                let value = n.eval_exact(&int(q as i64)).unwrap();
                assert_eq!(value, Rational::from_integer(gl_order(r, q)), "GL({r}) over F_{q}");
            }
        }
    }

    #[test]
    fn sl_counting_matches_finite_group_orders() {
        // |SL_r(F_q)| = |GL_r(F_q)| / (q - 1)
        for r in 2..=5 {
            let n = SchemeSpec::sl(r).unwrap().counting();
            for q in [2u64, 3, 4, 5, 7] {
                let value = n.eval_exact(&int(q as i64)).unwrap();
                let expected = gl_order(r, q) / BigInt::from(q - 1);
                assert_eq!(value, Rational::from_integer(expected), "SL({r}) over F_{q}");
            }
        }
    }

    #[test]
    fn gm_tensor_counting_is_tensor_power() {
        for r in 1..=8 {
            assert_eq!(
                SchemeSpec::gm_tensor(r).unwrap().counting(),
                SchemeSpec::gm().counting().tensor_power(r)
            );
        }
    }

    #[test]
    fn listing_names() {
        let names: Vec<String> = listing().iter().map(|s| s.to_string()).collect();
        assert_eq!(names[..3], ["SpecF1", "Gm", "Gm^2"]);
        assert!(names.contains(&"SL(3)".to_string()));
    }
}
