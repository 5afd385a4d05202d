use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("non-integer coefficient `{0}`")]
    NonIntegerCoefficient(String),

    #[error("not a Hilbert polynomial of a subscheme of projective space: {0}")]
    NotAdmissible(String),

    #[error("P inadmissible in P^{n}: {reason}")]
    InadmissibleInAmbient { n: usize, reason: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("exponent length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("no weight assigned to variable T{0}")]
    MissingWeight(usize),

    #[error("no value assigned to variable T{0}")]
    MissingAssignment(usize),

    #[error("weight vector verification failed for {order} (n={n}, r={r})")]
    WeightVerification { order: String, n: usize, r: u32 },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("malformed power in `{0}`")]
    MalformedPower(String),

    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("unsupported monomial order `{0}`")]
    UnsupportedOrder(String),

    #[error("invalid precedence `{0}`")]
    InvalidPrecedence(String),

    #[error("torus parameter must be nonzero")]
    ZeroTorusParameter,

    #[error("homology formula requires all strata smooth ({0} singular strata present)")]
    SingularStrataPresent(usize),

    #[error("degree cap {cap} is below the maximal generator degree {degree}")]
    DegreeCapTooSmall { cap: u32, degree: u32 },

    #[error("non-homogeneous input to the graded Groebner engine")]
    NonHomogeneous,

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
