use f1zeta::catalog::{listing, SchemeKind, SchemeSpec};
use f1zeta::counting::CountingFunction;
use f1zeta::gammasine::{multiperiod_gamma, MultiGammaSpec};
use f1zeta::numerics::{log_zeta_integral, QuadSettings};
use f1zeta::parser::{parse_expr, parse_scheme};
use f1zeta::rational::{int, to_f64};
use f1zeta::symzeta::{
    check_functional_equation, eval_power_product, hurwitz_of, log_derivative_at_zero, zeta_of,
};
use f1zeta::ComplexPoint;

#[test]
fn printed_counting_functions_parse_back() {
    for scheme in listing() {
        let n = scheme.counting();
        assert_eq!(parse_expr(&n.to_string()).unwrap(), n, "{scheme}");
        assert_eq!(parse_scheme(&scheme.to_string()).unwrap(), scheme);
    }
}

#[test]
fn expression_and_catalog_agree_on_gl2() {
    let n = parse_expr("u*(u-1)*(u^2-1)").unwrap();
    let gl2 = SchemeSpec::gl(2).unwrap();
    assert_eq!(n, gl2.counting());
    let report = check_functional_equation(&zeta_of(&n), &gl2.fe_params().unwrap()).unwrap();
    assert!(report.holds);
    assert_eq!(report.params.center, int(5));
}

#[test]
fn group_orders_over_finite_fields() {
    // |GL_r(F_q)| = Π_{i<r} (q^r - q^i), |SL_r| = |GL_r| / (q - 1)
    for q in [2i64, 3, 4, 5, 7, 8, 9] {
        for r in 1..=4u32 {
            let order: i64 = (0..r).map(|i| q.pow(r) - q.pow(i)).product();
            let gl = SchemeSpec::gl(r).unwrap().counting().eval_exact(&int(q)).unwrap();
            assert_eq!(gl, int(order), "GL({r}) over F_{q}");
            if r >= 2 {
                let sl = SchemeSpec::sl(r).unwrap().counting().eval_exact(&int(q)).unwrap();
                assert_eq!(sl, int(order / (q - 1)), "SL({r}) over F_{q}");
            }
        }
    }
}

#[test]
fn three_routes_to_log_zeta() {
    // factored product, w-derivative of the Hurwitz form, and quadrature
    let cfg = QuadSettings::default();
    for scheme in listing() {
        if matches!(scheme.kind(), SchemeKind::SpecF1) {
            continue;
        }
        let n = scheme.counting();
        let s = to_f64(n.max_exponent().unwrap()) + 1.5;
        let point = ComplexPoint::real(s);
        let product = eval_power_product(&scheme.zeta(), point).unwrap().value.re();
        let derivative = log_derivative_at_zero(&hurwitz_of(&n), point).unwrap();
        let integral = log_zeta_integral(&n, s, &cfg).unwrap();
        assert!((derivative.re() - product.ln()).abs() < 1e-10, "{scheme}");
        assert!(derivative.im().abs() < 1e-12, "{scheme}");
        assert!((integral - product.ln()).abs() < 1e-7, "{scheme}: {integral} vs {}", product.ln());
    }
}

#[test]
fn group_zeta_is_shifted_multiperiod_gamma() {
    for scheme in listing() {
        if let (Some(d), Some(periods)) = (scheme.dimension(), scheme.periods()) {
            let gamma = multiperiod_gamma(&MultiGammaSpec::new(periods)).shift(&int(d));
            assert_eq!(scheme.zeta(), gamma, "{scheme}");
        }
    }
}

#[test]
fn custom_schemes_have_no_functional_equation() {
    let custom = SchemeSpec::custom(CountingFunction::u_minus_one());
    assert!(custom.fe_params().is_err());
    assert!(SchemeSpec::spec_f1().fe_params().is_err());
}
