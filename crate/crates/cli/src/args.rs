use clap::{Args, Parser, Subcommand, ValueEnum};
use f1zeta::rational::{parse_rational, Rational};
use f1zeta::{ComplexPoint, PeriodVector};

const GRAMMAR: &str = "\
Counting-function expressions (--expr):

  Expr     := ['-'] Term (('+' | '-') Term)*
  Term     := Factor ('*' Factor)*
  Factor   := Base ['^' Exponent]
  Base     := 'u' | Rational | '(' Expr ')'
  Rational := Digits ['/' Digits]
  Exponent := ['-'] Digits | '(' ['-'] Digits ['/' Digits] ')'

Only the bare variable u takes a fractional exponent, e.g. u^(1/2).
Scheme names (--scheme): SpecF1, Gm, Gm^r, SL(r), GL(r).
Complex arguments are written RE or RE,IM.

Exit codes: 0 success, 1 usage, 2 parse error, 3 domain/pole/precondition,
4 convergence failure.";

#[derive(Debug, Parser)]
#[command(
    name = "f1zeta",
    version,
    about = "Absolute zeta functions of F1-schemes and negative-order multiple gamma functions",
    after_help = GRAMMAR
)]
pub struct Cli {
    /// Emit a JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Target accuracy of numerical methods
    #[arg(long, global = true, value_name = "T", value_parser = positive_real)]
    pub tol: Option<f64>,

    /// Cap on series terms (quadrature subdivisions for integral methods)
    #[arg(long = "max-terms", global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub max_terms: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Counting function, e.g. "u^3 - u"
    #[arg(long, allow_hyphen_values = true)]
    pub expr: Option<String>,

    /// Catalog scheme, e.g. "SL(2)"
    #[arg(long)]
    pub scheme: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Product,
    Series,
    Integral,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factored zeta function of a counting function
    Zeta(Source),

    /// Hurwitz form Z_N(w, s), or its value at (w, s)
    Hurwitz {
        #[command(flatten)]
        source: Source,
        #[arg(long, requires = "s", allow_hyphen_values = true, value_parser = complex)]
        w: Option<ComplexPoint>,
        #[arg(long, requires = "w", allow_hyphen_values = true, value_parser = complex)]
        s: Option<ComplexPoint>,
    },

    /// Multiple gamma function of negative order
    Gamma {
        /// Order r < 0 (integer, p/q or decimal)
        #[arg(long, allow_hyphen_values = true, value_parser = order)]
        order: Option<Order>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<f64>,
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Comma-separated positive rational periods
        #[arg(long, value_parser = periods)]
        periods: Option<PeriodVector>,
    },

    /// Multiple sine function of negative order
    Sine {
        #[arg(long, allow_hyphen_values = true, value_parser = order)]
        order: Option<Order>,
        #[arg(long, value_parser = periods)]
        periods: Option<PeriodVector>,
    },

    /// Exact and numerical verifications
    #[command(subcommand)]
    Check(CheckCommand),

    /// Evaluate a counting function at a real u
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        u: f64,
    },

    /// Canonical expanded form of a counting function
    Expand(Source),

    /// Built-in schemes with dimension, rank and periods
    Catalog,
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// Functional equation ζ(s) = ζ(c - s)^ε
    Fe {
        #[command(flatten)]
        source: Source,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        center: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, value_parser = sign)]
        sign: Option<i8>,
    },

    /// Zeros ζ_r(m; x) = 0 for every integer r < m ≤ 0
    Thm2 {
        #[arg(long, allow_hyphen_values = true)]
        r: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
        x: f64,
    },

    /// Σ_{n≥1} C(2n,n)/((2n-1)4^n) = 1
    IdentityBinomial,

    /// Γ_1(s+1) Γ_1(-s) = -1/(2 sin πs)
    Reflection {
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
    },

    /// ζ(s)/ζ(r-s)^{(-1)^r} = S_{-r}(s-r)^{-1} for Gm^r
    Thm4 {
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
    },
}

/// Order given on the command line, kept exact when it is rational.
#[derive(Debug, Clone, PartialEq)]
pub struct Order {
    pub value: f64,
    pub exact: Option<Rational>,
}

impl Order {
    /// `k` when the order is the negative integer `-k`.
    pub fn negative_integer(&self) -> Option<u32> {
        let q = self.exact.as_ref()?;
        if q.is_integer() && q < &Rational::from_integer(0.into()) {
            u32::try_from(-q.to_integer()).ok()
        } else {
            None
        }
    }
}

fn positive_real(text: &str) -> Result<f64, String> {
    match text.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got `{text}`")),
    }
}

fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).ok_or_else(|| format!("expected p or p/q, got `{text}`"))
}

fn sign(text: &str) -> Result<i8, String> {
    match text {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("sign must be +1 or -1, got `{text}`")),
    }
}

fn order(text: &str) -> Result<Order, String> {
    if let Some(q) = parse_rational(text) {
        return Ok(Order {
            value: f1zeta::rational::to_f64(&q),
            exact: Some(q),
        });
    }
    match text.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(Order {
            value: v,
            exact: None,
        }),
        _ => Err(format!("expected a number, got `{text}`")),
    }
}

fn complex(text: &str) -> Result<ComplexPoint, String> {
    let (re, im) = match text.split_once(',') {
        Some((re, im)) => (re.trim(), im.trim()),
        None => (text.trim(), "0"),
    };
    let part = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| format!("expected RE or RE,IM, got `{text}`"))
    };
    ComplexPoint::new(part(re)?, part(im)?).map_err(|e| e.to_string())
}

fn periods(text: &str) -> Result<PeriodVector, String> {
    let values = text
        .split(',')
        .map(rational)
        .collect::<Result<Vec<_>, _>>()?;
    PeriodVector::new(values).map_err(|e| e.to_string())
}
