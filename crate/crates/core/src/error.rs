//! Error types. Every variant carries a stable code so the CLI can report
//! failures in a machine-readable way.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse exact number: {0:?}")]
    Parse(String),
}

impl ArithError {
    pub fn code(&self) -> &'static str {
        match self {
            ArithError::DivisionByZero => "ARITH_DIV_ZERO",
            ArithError::Parse(_) => "ARITH_PARSE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymfuncError {
    #[error("malformed partition {0:?}: parts must be positive and weakly decreasing")]
    MalformedPartition(Vec<i64>),
    #[error("invalid hook index d={d}, k={k}")]
    InvalidHook { d: i64, k: i64 },
}

impl SymfuncError {
    pub fn code(&self) -> &'static str {
        match self {
            SymfuncError::MalformedPartition(_) => "SYMFUNC_BAD_PARTITION",
            SymfuncError::InvalidHook { .. } => "SYMFUNC_BAD_HOOK",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("weight function must satisfy G(0) = 1")]
    WeightNotNormalized,
    #[error("degree d must be at least 1 (got {0})")]
    DegreeOutOfRange(i64),
    #[error("operation requires a rational weight function")]
    ExponentialUnsupported,
    #[error("unknown catalog problem {0:?}")]
    UnknownProblem(String),
    #[error("closed-form internal mismatch at d={d}, g={g}")]
    ClosedFormMismatch { d: i64, g: i64 },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

impl GeneratorError {
    pub fn code(&self) -> &'static str {
        match self {
            GeneratorError::WeightNotNormalized => "GEN_WEIGHT_NOT_NORMALIZED",
            GeneratorError::DegreeOutOfRange(_) => "GEN_DEGREE_RANGE",
            GeneratorError::ExponentialUnsupported => "GEN_EXP_UNSUPPORTED",
            GeneratorError::UnknownProblem(_) => "GEN_UNKNOWN_PROBLEM",
            GeneratorError::ClosedFormMismatch { .. } => "GEN_CLOSED_FORM_MISMATCH",
            GeneratorError::Arith(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HolonomicError {
    #[error("leading coefficient vanishes at index {0} and no initial value is supplied")]
    SingularIndex(i64),
    #[error("recurrence must have a nonzero leading coefficient")]
    ZeroLeading,
    #[error("need at least {needed} initial terms, got {got}")]
    TooFewInitialTerms { needed: usize, got: usize },
    #[error("hypergeometric ratio must be nonzero")]
    ZeroRatio,
    #[error("closure dependence search exceeded its dimension bound {0}")]
    NoDependence(usize),
    #[error("generating-function conversion needs a nonnegative offset, got {0}")]
    NegativeOffset(i64),
    #[error("closure pipeline requires a rational weight function")]
    ExponentialUnsupported,
}

impl HolonomicError {
    pub fn code(&self) -> &'static str {
        match self {
            HolonomicError::SingularIndex(_) => "HOLO_SINGULAR_INDEX",
            HolonomicError::ZeroLeading => "HOLO_ZERO_LEADING",
            HolonomicError::TooFewInitialTerms { .. } => "HOLO_FEW_INITIAL",
            HolonomicError::ZeroRatio => "HOLO_ZERO_RATIO",
            HolonomicError::NoDependence(_) => "HOLO_NO_DEPENDENCE",
            HolonomicError::NegativeOffset(_) => "HOLO_NEGATIVE_OFFSET",
            HolonomicError::ExponentialUnsupported => "HOLO_EXP_UNSUPPORTED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecursionError {
    #[error("insufficient data: need at least {needed} terms, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("operation requires a rational weight function")]
    ExponentialUnsupported,
    #[error("relation has no nonzero coefficient")]
    ZeroRelation,
    #[error("unknown named recursion {0:?}")]
    UnknownRecursion(String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Holonomic(#[from] HolonomicError),
}

impl RecursionError {
    pub fn code(&self) -> &'static str {
        match self {
            RecursionError::InsufficientData { .. } => "REC_INSUFFICIENT_DATA",
            RecursionError::ExponentialUnsupported => "REC_EXP_UNSUPPORTED",
            RecursionError::ZeroRelation => "REC_ZERO_RELATION",
            RecursionError::UnknownRecursion(_) => "REC_UNKNOWN",
            RecursionError::Generator(e) => e.code(),
            RecursionError::Holonomic(e) => e.code(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{kind} oracle supports {range}, got {got}")]
    OutOfRange {
        kind: &'static str,
        range: &'static str,
        got: String,
    },
}

impl OracleError {
    pub fn code(&self) -> &'static str {
        "ORACLE_OUT_OF_RANGE"
    }
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid field {field}: {reason}")]
    Invalid { field: &'static str, reason: String },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

impl FormatError {
    pub fn code(&self) -> &'static str {
        match self {
            FormatError::Json(_) => "FORMAT_JSON",
            FormatError::Invalid { .. } => "FORMAT_INVALID",
            FormatError::Arith(e) => e.code(),
        }
    }
}
