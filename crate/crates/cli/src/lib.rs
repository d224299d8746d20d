//! Command-line front end for `f1zeta`. [`run`] is the whole program; the
//! binary only forwards the process arguments and streams.

pub mod args;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use f1zeta::catalog::listing;
use f1zeta::counting::CountingFunction;
use f1zeta::gammasine::{
    check_theorem4, multiperiod_gamma, multiperiod_sine, neg_gamma, neg_sine, MultiGammaSpec,
};
use f1zeta::numerics::{
    binomial_identity_sum, euler_reflection_check, gamma_integral, gamma_series,
    theorem2_zero_check, QuadSettings, SeriesSettings,
};
use f1zeta::parser::{parse_expr, parse_scheme};
use f1zeta::symzeta::{
    check_functional_equation, eval_hurwitz, eval_power_product, hurwitz_of, zeta_of, FeParams,
    PowerProduct,
};
use f1zeta::{ComplexPoint, PeriodVector, ZetaError};

use args::{CheckCommand, Cli, Command, Method, Order, Source};
pub use output::{ErrorDetail, OutputDocument};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CONVERGENCE: i32 = 4;

const THM2_TOLERANCE: f64 = 1e-6;
const BINOMIAL_TOLERANCE: f64 = 1e-3;
const REFLECTION_TOLERANCE: f64 = 1e-8;
const BINOMIAL_DEFAULT_TERMS: usize = 10_000;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Zeta(ZetaError),
}

impl From<ZetaError> for Failure {
    fn from(e: ZetaError) -> Self {
        Failure::Zeta(e)
    }
}

pub fn exit_code(error: &ZetaError) -> i32 {
    match error {
        e if e.is_parse_error() => EXIT_PARSE,
        ZetaError::Convergence { .. } => EXIT_CONVERGENCE,
        _ => EXIT_DOMAIN,
    }
}

/// A result is either a symbolic object printed through the library's
/// `Display`, or a document rendered by [`output::render`].
struct Outcome {
    doc: OutputDocument,
    text: Option<String>,
}

impl Outcome {
    fn symbolic(doc: OutputDocument, text: String) -> Self {
        Outcome {
            doc,
            text: Some(text),
        }
    }

    fn plain(doc: OutputDocument) -> Self {
        Outcome { doc, text: None }
    }
}

struct Settings {
    series: SeriesSettings,
    quad: QuadSettings,
    binomial_terms: usize,
}

impl Settings {
    fn from_cli(cli: &Cli) -> Self {
        let mut series = SeriesSettings::default();
        let mut quad = QuadSettings::default();
        let mut binomial_terms = BINOMIAL_DEFAULT_TERMS;
        if let Some(tol) = cli.tol {
            series.tol = tol;
            quad.tol = tol;
        }
        if let Some(n) = cli.max_terms {
            let n = usize::try_from(n).unwrap_or(usize::MAX);
            series.max_terms = n;
            quad.max_subdivisions = n;
            binomial_terms = n;
        }
        Settings {
            series,
            quad,
            binomial_terms,
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let settings = Settings::from_cli(&cli);
    match dispatch(&cli.command, &settings) {
        Ok(outcome) => {
            let line = if cli.json {
                outcome.doc.to_json()
            } else {
                outcome.text.unwrap_or_else(|| output::render(&outcome.doc))
            };
            let _ = writeln!(out, "{line}");
            0
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            report_json(err, cli.json, EXIT_USAGE, &message, None);
            EXIT_USAGE
        }
        Err(Failure::Zeta(e)) => {
            let code = exit_code(&e);
            let _ = writeln!(err, "error: {e}");
            report_json(err, cli.json, code, &e.to_string(), e.offset());
            code
        }
    }
}

fn report_json(err: &mut dyn Write, json: bool, code: i32, message: &str, offset: Option<usize>) {
    if json {
        let detail = ErrorDetail {
            kind: "error".into(),
            code,
            message: message.into(),
            offset,
        };
        let _ = writeln!(
            err,
            "{}",
            serde_json::to_string(&detail).expect("error detail serializes")
        );
    }
}

fn counting_of(source: &Source) -> Result<CountingFunction, ZetaError> {
    match (&source.expr, &source.scheme) {
        (Some(expr), _) => parse_expr(expr),
        (None, Some(name)) => parse_scheme(name).map(|s| s.counting()),
        (None, None) => unreachable!("clap requires one source"),
    }
}

fn real(z: f64) -> ComplexPoint {
    ComplexPoint::real(z)
}

fn product_outcome(p: &PowerProduct, variable: &str) -> Outcome {
    Outcome::symbolic(
        OutputDocument::product(p, variable),
        p.display_in(variable).to_string(),
    )
}

fn number_outcome(z: ComplexPoint) -> Outcome {
    Outcome::plain(OutputDocument::number(z))
}

fn value_of(p: &PowerProduct, x: f64) -> Result<Outcome, Failure> {
    let v = eval_power_product(p, real(x))?;
    Ok(number_outcome(v.value))
}

fn multiperiod_spec(order: Option<&Order>, periods: &PeriodVector) -> Result<MultiGammaSpec, Failure> {
    match order {
        None => Ok(MultiGammaSpec::new(periods.clone())),
        Some(o) => {
            let r = o.negative_integer().ok_or_else(|| {
                ZetaError::ParameterRange(format!(
                    "order {} must be minus the number of periods",
                    o.value
                ))
            })?;
            Ok(MultiGammaSpec::with_order(-i64::from(r), periods.clone())?)
        }
    }
}

fn dispatch(command: &Command, settings: &Settings) -> Result<Outcome, Failure> {
    match command {
        Command::Zeta(source) => {
            let zeta = zeta_of(&counting_of(source)?);
            Ok(product_outcome(&zeta, "s"))
        }
        Command::Hurwitz { source, w, s } => {
            let form = hurwitz_of(&counting_of(source)?);
            match (w, s) {
                (Some(w), Some(s)) => Ok(number_outcome(eval_hurwitz(&form, *w, *s)?)),
                _ => Ok(Outcome::symbolic(
                    OutputDocument::hurwitz(&form, "s"),
                    form.display_in("s").to_string(),
                )),
            }
        }
        Command::Gamma {
            order,
            x,
            method,
            periods,
        } => gamma(order.as_ref(), *x, *method, periods.as_ref(), settings),
        Command::Sine { order, periods } => {
            let sine = match periods {
                Some(periods) => multiperiod_sine(&multiperiod_spec(order.as_ref(), periods)?),
                None => {
                    let order = order
                        .as_ref()
                        .ok_or_else(|| Failure::Usage("sine needs --order or --periods".into()))?;
                    let r = order.negative_integer().ok_or_else(|| {
                        ZetaError::ParameterRange(format!(
                            "sine needs a negative integer order, got {}",
                            order.value
                        ))
                    })?;
                    neg_sine(r)
                }
            };
            let text = if sine.negated {
                format!("-{}", sine.product.display_in("x"))
            } else {
                sine.product.display_in("x").to_string()
            };
            Ok(Outcome::symbolic(OutputDocument::signed(&sine, "x"), text))
        }
        Command::Check(check) => run_check(check, settings),
        Command::Eval { expr, u } => {
            let value = parse_expr(expr)?.eval_at(*u);
            if !value.is_finite() {
                return Err(ZetaError::Domain(format!("{expr} is not real at u = {u}")).into());
            }
            Ok(number_outcome(real(value)))
        }
        Command::Expand(source) => {
            let n = counting_of(source)?;
            Ok(Outcome::symbolic(OutputDocument::counting(&n), n.to_string()))
        }
        Command::Catalog => Ok(Outcome::plain(OutputDocument::catalog(&listing()))),
    }
}

fn gamma(
    order: Option<&Order>,
    x: Option<f64>,
    method: Option<Method>,
    periods: Option<&PeriodVector>,
    settings: &Settings,
) -> Result<Outcome, Failure> {
    if let Some(periods) = periods {
        if matches!(method, Some(Method::Series | Method::Integral)) {
            return Err(ZetaError::ParameterRange(
                "periods are only supported by the product method".into(),
            )
            .into());
        }
        let product = multiperiod_gamma(&multiperiod_spec(order, periods)?);
        return match x {
            Some(x) => value_of(&product, x),
            None => Ok(product_outcome(&product, "x")),
        };
    }
    let order = order.ok_or_else(|| Failure::Usage("gamma needs --order or --periods".into()))?;
    let method = method.unwrap_or(if order.negative_integer().is_some() {
        Method::Product
    } else {
        Method::Series
    });
    let need_x = || Failure::Usage(format!("--method {method:?} needs --x").to_lowercase());
    match method {
        Method::Product => {
            let r = order.negative_integer().ok_or_else(|| {
                ZetaError::ParameterRange(format!(
                    "the product method needs a negative integer order, got {}",
                    order.value
                ))
            })?;
            let product = neg_gamma(r);
            match x {
                Some(x) => value_of(&product, x),
                None => Ok(product_outcome(&product, "x")),
            }
        }
        Method::Series => {
            let x = x.ok_or_else(need_x)?;
            Ok(number_outcome(real(gamma_series(order.value, x, &settings.series)?)))
        }
        Method::Integral => {
            let x = x.ok_or_else(need_x)?;
            Ok(number_outcome(real(gamma_integral(order.value, x, &settings.quad)?)))
        }
    }
}

fn run_check(check: &CheckCommand, settings: &Settings) -> Result<Outcome, Failure> {
    match check {
        CheckCommand::Fe {
            source,
            center,
            sign,
        } => {
            let n = counting_of(source)?;
            let params = match (center, sign) {
                (Some(c), Some(e)) => FeParams::new(c.clone(), *e)?,
                (None, None) => match &source.scheme {
                    Some(name) => parse_scheme(name)?.fe_params()?,
                    None => {
                        return Err(Failure::Usage(
                            "check fe --expr needs --center and --sign".into(),
                        ))
                    }
                },
                _ => {
                    return Err(Failure::Usage(
                        "--center and --sign must be given together".into(),
                    ))
                }
            };
            let report = check_functional_equation(&zeta_of(&n), &params)?;
            Ok(Outcome::plain(OutputDocument::fe_report(&report)))
        }
        CheckCommand::Thm2 { r, x } => {
            let mut worst = 0.0f64;
            let mut m = 0i64;
            if r.is_nan() || *r >= 0.0 {
                return Err(ZetaError::ParameterRange(format!("r must be negative, got {r}")).into());
            }
            while (m as f64) > *r {
                worst = worst.max(theorem2_zero_check(*r, m, *x, &settings.series)?);
                m -= 1;
            }
            Ok(Outcome::plain(OutputDocument::check(
                "thm2",
                worst,
                0.0,
                THM2_TOLERANCE,
                worst <= THM2_TOLERANCE,
            )))
        }
        CheckCommand::IdentityBinomial => {
            let cfg = SeriesSettings {
                max_terms: settings.binomial_terms,
                ..settings.series
            };
            let sum = binomial_identity_sum(&cfg);
            Ok(Outcome::plain(OutputDocument::check(
                "identity-binomial",
                sum.estimate,
                1.0,
                BINOMIAL_TOLERANCE,
                (sum.estimate - 1.0).abs() <= BINOMIAL_TOLERANCE,
            )))
        }
        CheckCommand::Reflection { s } => {
            let (left, right) = euler_reflection_check(*s)?;
            Ok(Outcome::plain(OutputDocument::check(
                "reflection",
                left,
                right,
                REFLECTION_TOLERANCE,
                (left - right).abs() <= REFLECTION_TOLERANCE * right.abs(),
            )))
        }
        CheckCommand::Thm4 { r } => {
            let r = u32::try_from(r.unsigned_abs())
                .ok()
                .filter(|&r| r >= 1)
                .ok_or_else(|| ZetaError::ParameterRange(format!("r must be a nonzero integer, got {r}")))?;
            let report = check_theorem4(r)?;
            let residual = report.left.mul(&report.right.powi(-1));
            let count = residual.product.len() + usize::from(residual.negated);
            Ok(Outcome::plain(OutputDocument::check(
                "thm4",
                count as f64,
                0.0,
                0.0,
                report.holds,
            )))
        }
    }
}
