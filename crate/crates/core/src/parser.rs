//! Concrete syntax for counting functions and scheme names.
//!
//! ```text
//! Expr     := ['-'] Term (('+' | '-') Term)*
//! Term     := Factor ('*' Factor)*
//! Factor   := Base ['^' Exponent]
//! Base     := 'u' | Rational | '(' Expr ')'
//! Rational := Digits ['/' Digits]
//! Exponent := ['-'] Digits | '(' ['-'] Digits ['/' Digits] ')'
//! ```
//!
//! Whitespace is insignificant. A non-integer exponent is only legal on the
//! bare variable `u`; compound bases take non-negative integer powers so the
//! expansion stays finite. Decimal and scientific literals are rejected.

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::catalog::SchemeSpec;
use crate::counting::CountingFunction;
use crate::error::{Result, ZetaError};
use crate::rational::{is_integer, Rational};

/// Largest integer power accepted on a compound base.
pub const MAX_COMPOUND_POWER: u32 = 64;
/// Largest integer power accepted on a constant.
pub const MAX_CONSTANT_POWER: u32 = 1024;
/// Largest number of terms an intermediate expansion may reach.
pub const MAX_TERMS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprNode {
    Variable,
    Constant(Rational),
    Sum(Vec<(Sign, ExprNode)>),
    Product(Vec<ExprNode>),
    Power(Box<ExprNode>, Rational),
}

impl ExprNode {
    fn is_variable(&self) -> bool {
        matches!(self, ExprNode::Variable)
    }
}

/// Parses and fully expands a counting-function expression.
pub fn parse_expr(text: &str) -> Result<CountingFunction> {
    parse_with_tree(text).map(|(_, value)| value)
}

/// Parses into the syntax tree (without expanding).
pub fn parse_ast(text: &str) -> Result<ExprNode> {
    parse_with_tree(text).map(|(node, _)| node)
}

fn parse_with_tree(text: &str) -> Result<(ExprNode, CountingFunction)> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    parser.skip_ws();
    if parser.at_end() {
        return Err(ZetaError::EmptyInput);
    }
    let parsed = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.unexpected());
    }
    Ok(parsed)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

type Parsed = (ExprNode, CountingFunction);

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    /// Skips whitespace, then consumes `byte` if present.
    fn eat(&mut self, byte: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self) -> ZetaError {
        match self.peek() {
            None => ZetaError::syntax(self.pos, "unexpected end of input"),
            Some(b) if b.is_ascii_graphic() => {
                ZetaError::syntax(self.pos, format!("unexpected character `{}`", b as char))
            }
            Some(b) => ZetaError::syntax(self.pos, format!("unexpected byte 0x{b:02x}")),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn expr(&mut self) -> Result<Parsed> {
        let mut nodes = Vec::new();
        let mut value = CountingFunction::zero();
        let mut sign = if self.eat(b'-') { Sign::Minus } else { Sign::Plus };
        loop {
            let (node, term) = self.term()?;
            value = match sign {
                Sign::Plus => value.oplus(&term),
                Sign::Minus => value.oplus(&term.negate()),
            };
            nodes.push((sign, node));
            sign = if self.eat(b'+') {
                Sign::Plus
            } else if self.eat(b'-') {
                Sign::Minus
            } else {
                break;
            };
        }
        let node = if nodes.len() == 1 && nodes[0].0 == Sign::Plus {
            nodes.pop().map(|(_, n)| n).expect("one node")
        } else {
            ExprNode::Sum(nodes)
        };
        Ok((node, value))
    }

    fn term(&mut self) -> Result<Parsed> {
        let start = self.pos;
        let (first, mut value) = self.factor()?;
        let mut nodes = vec![first];
        while self.eat(b'*') {
            let (node, factor) = self.factor()?;
            value = checked_otimes(&value, &factor, start)?;
            nodes.push(node);
        }
        let node = if nodes.len() == 1 {
            nodes.pop().expect("one node")
        } else {
            ExprNode::Product(nodes)
        };
        Ok((node, value))
    }

    fn factor(&mut self) -> Result<Parsed> {
        let (base, value) = self.base()?;
        if !self.eat(b'^') {
            return Ok((base, value));
        }
        self.skip_ws();
        let exp_at = self.pos;
        let exponent = self.exponent()?;
        let value = raise(&base, &value, &exponent, exp_at)?;
        Ok((ExprNode::Power(Box::new(base), exponent), value))
    }

    fn base(&mut self) -> Result<Parsed> {
        self.skip_ws();
        match self.peek() {
            Some(b'u') => {
                self.pos += 1;
                Ok((ExprNode::Variable, CountingFunction::monomial(Rational::one(), Rational::one())))
            }
            Some(b'0'..=b'9') => {
                let q = self.rational_literal()?;
                Ok((ExprNode::Constant(q.clone()), CountingFunction::monomial(Rational::zero(), q)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected());
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits parse"))
    }

    fn rational_literal(&mut self) -> Result<Rational> {
        let numer = self.digits()?;
        if !self.eat(b'/') {
            return Ok(Rational::from_integer(numer));
        }
        self.skip_ws();
        let at = self.pos;
        let denom = self.digits()?;
        if denom.is_zero() {
            return Err(ZetaError::syntax(at, "zero denominator"));
        }
        Ok(Rational::new(numer, denom))
    }

    fn exponent(&mut self) -> Result<Rational> {
        if self.eat(b'(') {
            let negative = self.eat(b'-');
            let q = self.rational_literal()?;
            self.expect(b')')?;
            Ok(if negative { -q } else { q })
        } else {
            let negative = self.eat(b'-');
            let n = Rational::from_integer(self.digits()?);
            Ok(if negative { -n } else { n })
        }
    }
}

fn checked_otimes(a: &CountingFunction, b: &CountingFunction, at: usize) -> Result<CountingFunction> {
    if a.len().saturating_mul(b.len()) > MAX_TERMS * 16 {
        return Err(ZetaError::syntax(at, "expression expands to too many terms"));
    }
    let out = a.otimes(b);
    if out.len() > MAX_TERMS {
        return Err(ZetaError::syntax(at, "expression expands to too many terms"));
    }
    Ok(out)
}

fn raise(base: &ExprNode, value: &CountingFunction, exponent: &Rational, at: usize) -> Result<CountingFunction> {
    if base.is_variable() {
        return Ok(CountingFunction::monomial(exponent.clone(), Rational::one()));
    }
    if !is_integer(exponent) {
        return Err(ZetaError::NonIntegerPower { offset: at });
    }
    if let ExprNode::Constant(c) = base {
        let k = exponent
            .to_integer()
            .to_i32()
            .filter(|k| k.unsigned_abs() <= MAX_CONSTANT_POWER)
            .ok_or_else(|| ZetaError::syntax(at, "exponent too large"))?;
        if c.is_zero() && k < 0 {
            return Err(ZetaError::syntax(at, "negative power of zero"));
        }
        return Ok(CountingFunction::monomial(Rational::zero(), Pow::pow(c, k)));
    }
    if exponent.is_negative() {
        return Err(ZetaError::syntax(at, "negative power of a compound base"));
    }
    let k = exponent
        .to_integer()
        .to_u32()
        .filter(|&k| k <= MAX_COMPOUND_POWER)
        .ok_or_else(|| ZetaError::syntax(at, "exponent too large"))?;
    let mut acc = CountingFunction::one();
    for _ in 0..k {
        acc = checked_otimes(&acc, value, at)?;
    }
    Ok(acc)
}

/// Accepts exactly `SpecF1`, `Gm`, `Gm^r`, `SL(r)`, `GL(r)` (case-sensitive).
pub fn parse_scheme(text: &str) -> Result<SchemeSpec> {
    let unknown = || ZetaError::UnknownScheme(text.to_string());
    let number = |digits: &str| -> Result<u32> {
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        digits
            .parse::<u32>()
            .map_err(|_| ZetaError::ParameterRange(format!("parameter {digits} is too large")))
    };
    match text {
        "SpecF1" => Ok(SchemeSpec::spec_f1()),
        "Gm" => Ok(SchemeSpec::gm()),
        _ => {
            if let Some(r) = text.strip_prefix("Gm^") {
                SchemeSpec::gm_tensor(number(r)?)
            } else if let Some(r) = text.strip_prefix("SL(").and_then(|t| t.strip_suffix(')')) {
                SchemeSpec::sl(number(r)?)
            } else if let Some(r) = text.strip_prefix("GL(").and_then(|t| t.strip_suffix(')')) {
                SchemeSpec::gl(number(r)?)
            } else {
                Err(unknown())
            }
        }
    }
}
