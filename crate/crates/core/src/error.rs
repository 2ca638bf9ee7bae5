use thiserror::Error;

/// Every failure the engine can report. The CLI maps these onto exit codes via
/// [`Error::is_usage`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("evaluation at a pole")]
    PoleAtPoint,
    #[error("denominator has an irreducible factor of degree > 1: {0}")]
    NonlinearDenominator(String),
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("resonant exponent: {0}")]
    ResonantExponent(String),
    #[error("exponent sum is {0}, expected -2")]
    ExponentSumViolation(String),
    #[error("pole outside the arrangement at t = {0}")]
    ForeignPole(String),
    #[error("basis forms are dependent modulo exact forms")]
    SingularBasis,
    #[error("cannot absorb the shared factor {0} into the master function")]
    UnabsorbableFactor(String),
    #[error("unknown basis pair tag '{0}'")]
    UnknownPair(String),
    #[error("system is not cyclic: both off-diagonal entries vanish")]
    NotCyclic,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("pole of a parameter: {0}")]
    PolePar(String),
    #[error("argument {0} outside the series convergence disk")]
    OutsideDisk(String),
    #[error("non-integrable endpoint: {0}")]
    DivergentEndpoint(String),
    #[error("quadrature did not converge after {levels} levels (last change {change:e})")]
    QuadratureNoConvergence { levels: usize, change: f64 },
    #[error("path passes within {0:e} of a singular point")]
    PathThroughSingularity(f64),
    #[error("step size underflow at parameter {0}")]
    StiffnessFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Errors caused by malformed requests rather than by mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::UnknownPair(_) | Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
