use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("coefficient `{0}` is not invertible in the coefficient field")]
    NotInvertible(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("ambient free module mismatch")]
    AmbientMismatch,

    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("degree incompatibility: {0}")]
    DegreeMismatch(String),

    #[error("degree cap {cap} exceeded (needed monomial degree {needed})")]
    DegreeCapExceeded { cap: u32, needed: u32 },

    #[error("variable cap exceeded: {needed} variables requested, at most {cap} supported")]
    VariableCapExceeded { cap: usize, needed: usize },

    #[error("window too large: {0}")]
    WindowTooLarge(String),

    #[error("syzygy index {k} exceeds projective dimension {pd}")]
    SyzygyIndexTooLarge { k: usize, pd: usize },

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("zero module: {0}")]
    ZeroModule(String),

    #[error("no parameter element found after {trials} trials")]
    NoParameterFound { trials: usize },

    #[error("possibly non-finitely-generated H^0: no stabilization within {cap} steps ({reason})")]
    SectionsNotStable { cap: usize, reason: String },

    #[error("hypotheses not met: {0}")]
    Hypotheses(String),
}

pub type Result<T> = std::result::Result<T, Error>;
