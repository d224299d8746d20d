//! JSON documents emitted with `--json`, and their plain-text renderings.
//!
//! Every rational is a string `p` or `p/q`; field order is fixed by the
//! struct definitions, so identical inputs serialize to identical bytes.

use std::fmt::Write as _;

use f1zeta::catalog::SchemeSpec;
use f1zeta::counting::CountingFunction;
use f1zeta::rational::{fmt_rational, parse_rational};
use f1zeta::symzeta::{FeReport, HurwitzForm, PowerProduct, SignedProduct};
use f1zeta::ComplexPoint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutputDocument {
    Counting {
        terms: Vec<CountingTerm>,
    },
    HurwitzForm {
        variable: String,
        terms: Vec<HurwitzTerm>,
    },
    PowerProduct {
        variable: String,
        #[serde(default, skip_serializing_if = "is_false")]
        negated: bool,
        factors: Vec<Factor>,
    },
    Number {
        re: f64,
        im: f64,
    },
    FeReport {
        holds: bool,
        center: String,
        sign: String,
        mismatches: Vec<Mismatch>,
        parity_sum: String,
    },
    CheckReport {
        name: String,
        passed: bool,
        value: f64,
        expected: f64,
        tolerance: f64,
    },
    Catalog {
        schemes: Vec<CatalogEntry>,
    },
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingTerm {
    pub exponent: String,
    pub multiplicity: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HurwitzTerm {
    pub root: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub root: String,
    pub exp: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub root: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub dimension: Option<i64>,
    pub rank: Option<i64>,
    pub periods: Vec<String>,
    pub counting: String,
}

/// Diagnostic detail written after the one-line error message under `--json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDetail {
    pub kind: String,
    pub code: i32,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
}

impl OutputDocument {
    pub fn counting(n: &CountingFunction) -> Self {
        OutputDocument::Counting {
            terms: n
                .terms()
                .map(|(a, m)| CountingTerm {
                    exponent: fmt_rational(a),
                    multiplicity: fmt_rational(m),
                })
                .collect(),
        }
    }

    pub fn hurwitz(form: &HurwitzForm, variable: &str) -> Self {
        OutputDocument::HurwitzForm {
            variable: variable.to_string(),
            terms: form
                .terms()
                .map(|(a, c)| HurwitzTerm {
                    root: fmt_rational(a),
                    coeff: fmt_rational(c),
                })
                .collect(),
        }
    }

    pub fn product(p: &PowerProduct, variable: &str) -> Self {
        Self::signed(
            &SignedProduct {
                negated: false,
                product: p.clone(),
            },
            variable,
        )
    }

    pub fn signed(p: &SignedProduct, variable: &str) -> Self {
        OutputDocument::PowerProduct {
            variable: variable.to_string(),
            negated: p.negated,
            factors: p
                .product
                .factors()
                .map(|(a, e)| Factor {
                    root: fmt_rational(a),
                    exp: fmt_rational(e),
                })
                .collect(),
        }
    }

    pub fn number(z: ComplexPoint) -> Self {
        OutputDocument::Number {
            re: z.re(),
            im: z.im(),
        }
    }

    pub fn fe_report(report: &FeReport) -> Self {
        OutputDocument::FeReport {
            holds: report.holds,
            center: fmt_rational(&report.params.center),
            sign: if report.params.sign() > 0 { "+1" } else { "-1" }.to_string(),
            mismatches: report
                .mismatches
                .iter()
                .map(|m| Mismatch {
                    root: fmt_rational(&m.root),
                    expected: fmt_rational(&m.expected),
                    actual: fmt_rational(&m.actual),
                })
                .collect(),
            parity_sum: report.parity_sum.to_string(),
        }
    }

    pub fn check(name: &str, value: f64, expected: f64, tolerance: f64, passed: bool) -> Self {
        OutputDocument::CheckReport {
            name: name.to_string(),
            passed,
            value,
            expected,
            tolerance,
        }
    }

    pub fn catalog(schemes: &[SchemeSpec]) -> Self {
        OutputDocument::Catalog {
            schemes: schemes
                .iter()
                .map(|s| CatalogEntry {
                    name: s.to_string(),
                    dimension: s.dimension(),
                    rank: s.rank(),
                    periods: s
                        .periods()
                        .map(|p| p.as_slice().iter().map(fmt_rational).collect())
                        .unwrap_or_default(),
                    counting: s.counting().to_string(),
                })
                .collect(),
        }
    }

    /// Structural checks beyond what deserialization enforces.
    pub fn validate(&self) -> Result<(), String> {
        let rational = |field: &str, text: &str| -> Result<(), String> {
            match parse_rational(text) {
                Some(q) if fmt_rational(&q) == text => Ok(()),
                _ => Err(format!("{field}: `{text}` is not a canonical rational")),
            }
        };
        let variable = |v: &str| -> Result<(), String> {
            if v == "s" || v == "x" {
                Ok(())
            } else {
                Err(format!("variable must be \"s\" or \"x\", got `{v}`"))
            }
        };
        let ascending = |keys: Vec<&str>, descending: bool| -> Result<(), String> {
            let parsed: Vec<_> = keys.iter().filter_map(|k| parse_rational(k)).collect();
            let ordered = parsed.windows(2).all(|w| {
                if descending {
                    w[0] > w[1]
                } else {
                    w[0] < w[1]
                }
            });
            if ordered {
                Ok(())
            } else {
                Err("entries are not in canonical order".into())
            }
        };
        match self {
            OutputDocument::Counting { terms } => {
                for t in terms {
                    rational("exponent", &t.exponent)?;
                    rational("multiplicity", &t.multiplicity)?;
                    if t.multiplicity == "0" {
                        return Err("zero multiplicity".into());
                    }
                }
                ascending(terms.iter().map(|t| t.exponent.as_str()).collect(), true)
            }
            OutputDocument::HurwitzForm { variable: v, terms } => {
                variable(v)?;
                for t in terms {
                    rational("root", &t.root)?;
                    rational("coeff", &t.coeff)?;
                }
                ascending(terms.iter().map(|t| t.root.as_str()).collect(), true)
            }
            OutputDocument::PowerProduct {
                variable: v,
                factors,
                ..
            } => {
                variable(v)?;
                for f in factors {
                    rational("root", &f.root)?;
                    rational("exp", &f.exp)?;
                    if f.exp == "0" {
                        return Err("zero exponent".into());
                    }
                }
                ascending(factors.iter().map(|f| f.root.as_str()).collect(), false)
            }
            OutputDocument::Number { re, im } => {
                if re.is_finite() && im.is_finite() {
                    Ok(())
                } else {
                    Err("number is not finite".into())
                }
            }
            OutputDocument::FeReport {
                center,
                sign,
                mismatches,
                parity_sum,
                ..
            } => {
                rational("center", center)?;
                if sign != "+1" && sign != "-1" {
                    return Err(format!("sign must be \"+1\" or \"-1\", got `{sign}`"));
                }
                for m in mismatches {
                    rational("root", &m.root)?;
                    rational("expected", &m.expected)?;
                    rational("actual", &m.actual)?;
                }
                match parse_rational(parity_sum) {
                    Some(q) if q.is_integer() => Ok(()),
                    _ => Err(format!("parity_sum `{parity_sum}` is not an integer")),
                }
            }
            OutputDocument::CheckReport { tolerance, .. } => {
                if *tolerance >= 0.0 {
                    Ok(())
                } else {
                    Err("tolerance must be non-negative".into())
                }
            }
            OutputDocument::Catalog { schemes } => {
                for s in schemes {
                    for p in &s.periods {
                        rational("period", p)?;
                    }
                }
                Ok(())
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents contain only finite data")
    }
}

pub fn format_real(x: f64) -> String {
    format!("{x:?}")
}

pub fn format_number(re: f64, im: f64) -> String {
    if im == 0.0 {
        format_real(re)
    } else {
        let sign = if im.is_sign_negative() { '-' } else { '+' };
        format!("{}{sign}{}i", format_real(re), format_real(im.abs()))
    }
}

/// Plain-text rendering for documents whose human form is not simply the
/// library's own `Display` output.
pub fn render(doc: &OutputDocument) -> String {
    let mut out = String::new();
    match doc {
        OutputDocument::Number { re, im } => out.push_str(&format_number(*re, *im)),
        OutputDocument::FeReport {
            holds,
            center,
            sign,
            mismatches,
            parity_sum,
        } => {
            let _ = writeln!(out, "holds: {holds}");
            let _ = writeln!(out, "center: {center}");
            let _ = writeln!(out, "sign: {sign}");
            let _ = write!(out, "parity_sum: {parity_sum}");
            for m in mismatches {
                let _ = write!(
                    out,
                    "\nmismatch at root {}: expected {}, actual {}",
                    m.root, m.expected, m.actual
                );
            }
        }
        OutputDocument::CheckReport {
            name,
            passed,
            value,
            expected,
            tolerance,
        } => {
            let verdict = if *passed { "PASS" } else { "FAIL" };
            let _ = write!(
                out,
                "{name}: {verdict} (value {}, expected {}, tolerance {tolerance:e})",
                format_real(*value),
                format_real(*expected)
            );
        }
        OutputDocument::Catalog { schemes } => {
            for (i, s) in schemes.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let opt = |v: Option<i64>| v.map_or("-".to_string(), |v| v.to_string());
                let periods = if s.periods.is_empty() {
                    "-".to_string()
                } else {
                    s.periods.join(",")
                };
                let _ = write!(
                    out,
                    "{:<8} dim {:<3} rank {:<3} periods {:<8} N(u) = {}",
                    s.name,
                    opt(s.dimension),
                    opt(s.rank),
                    periods,
                    s.counting
                );
            }
        }
        OutputDocument::Counting { .. }
        | OutputDocument::HurwitzForm { .. }
        | OutputDocument::PowerProduct { .. } => {
            unreachable!("symbolic documents are rendered by the library")
        }
    }
    out
}
