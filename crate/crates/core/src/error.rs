use thiserror::Error;

pub type Result<T> = std::result::Result<T, ZetaError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("non-integer power of a compound base at byte {offset}")]
    NonIntegerPower { offset: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("unknown scheme `{0}`")]
    UnknownScheme(String),

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("pole at {0}")]
    Pole(String),

    #[error("exponent {0} is not an integer")]
    NonIntegerExponent(String),

    #[error("no functional equation is known for {0}")]
    NoFunctionalEquation(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no convergence after {terms} terms (error estimate {estimate:e}, target {target:e})")]
    Convergence {
        terms: usize,
        estimate: f64,
        target: f64,
    },
}

impl ZetaError {
    pub fn syntax(offset: usize, message: impl Into<String>) -> Self {
        ZetaError::Syntax {
            offset,
            message: message.into(),
        }
    }

    /// Byte offset for errors raised while parsing.
    pub fn offset(&self) -> Option<usize> {
        match self {
            ZetaError::Syntax { offset, .. } | ZetaError::NonIntegerPower { offset } => {
                Some(*offset)
            }
            ZetaError::EmptyInput => Some(0),
            _ => None,
        }
    }

    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            ZetaError::Syntax { .. }
                | ZetaError::NonIntegerPower { .. }
                | ZetaError::EmptyInput
                | ZetaError::UnknownScheme(_)
        )
    }
}
