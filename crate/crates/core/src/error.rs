use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dual quaternion with zero primal part is not invertible")]
    NotInvertible,
    #[error("acting element must have a real nonzero norm")]
    DegenerateActor,
    #[error("not a rotation quaternion: {0}")]
    NotRotation(String),

    #[error("divisor polynomial is not monic")]
    NotMonic,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has a real root")]
    HasRealRoot,
    #[error("irreducible factor {0} does not split into real quadratics over the rationals")]
    IrreducibleFactorNotQuadraticOverRationals(String),
    #[error("integer values too large to factor by trial division: {0}")]
    FactorizationTooLarge(String),
    #[error("quadratic is not irreducible over the reals")]
    NotIrreducible,
    #[error("no rational zero in the requested direction")]
    NoRationalZeroInDirection,
    #[error("{0} is not a sum of three rational squares")]
    NotRepresentable(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("curve is unbounded: {0}")]
    Unbounded(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("not a motion polynomial: {0}")]
    NotMotionPolynomial(String),
    #[error("leading coefficient of the linear remainder is not invertible")]
    NonInvertibleRemainderLead,
    #[error("motion polynomial is not generic (primal part has a real factor)")]
    NotGeneric,
    #[error("motion polynomial is not tame")]
    NotTame,
    #[error("every candidate zero failed: {0}")]
    ZeroPickExhausted(String),
    #[error("factorization check failed: {0}")]
    FactorizationMismatch(String),

    #[error("Bennett flip undefined: {0}")]
    FlipUndefined(String),
    #[error("user-supplied m0 rejected at cell {cell}: {reason}")]
    UserM0Invalid { cell: usize, reason: String },
    #[error("mode not applicable: {0}")]
    ModeNotApplicable(String),
    #[error("degree {d} and circularity {c} are not a valid bounded pair")]
    InvalidDegreeParity { d: i64, c: i64 },

    #[error("loop closure violated at cell {cell}")]
    ClosureViolation { cell: usize },
    #[error("trajectory mismatch at t = {t}: linkage {linkage}, curve {curve}")]
    Mismatch { t: String, linkage: String, curve: String },

    #[error("parse error at {at}: {msg}")]
    Parse { at: String, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Name of the variant, used in stage-tagged messages.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotInvertible => "NotInvertible",
            Error::DegenerateActor => "DegenerateActor",
            Error::NotRotation(..) => "NotRotation",
            Error::NotMonic => "NotMonic",
            Error::DivisionByZeroPoly => "DivisionByZeroPoly",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::HasRealRoot => "HasRealRoot",
            Error::IrreducibleFactorNotQuadraticOverRationals(..) => "IrreducibleFactorNotQuadraticOverRationals",
            Error::FactorizationTooLarge(..) => "FactorizationTooLarge",
            Error::NotIrreducible => "NotIrreducible",
            Error::NoRationalZeroInDirection => "NoRationalZeroInDirection",
            Error::NotRepresentable(..) => "NotRepresentable",
            Error::SearchExhausted(..) => "SearchExhausted",
            Error::Unbounded(..) => "Unbounded",
            Error::InvalidCurve(..) => "InvalidCurve",
            Error::NotMotionPolynomial(..) => "NotMotionPolynomial",
            Error::NonInvertibleRemainderLead => "NonInvertibleRemainderLead",
            Error::NotGeneric => "NotGeneric",
            Error::NotTame => "NotTame",
            Error::ZeroPickExhausted(..) => "ZeroPickExhausted",
            Error::FactorizationMismatch(..) => "FactorizationMismatch",
            Error::FlipUndefined(..) => "FlipUndefined",
            Error::UserM0Invalid { .. } => "UserM0Invalid",
            Error::ModeNotApplicable(..) => "ModeNotApplicable",
            Error::InvalidDegreeParity { .. } => "InvalidDegreeParity",
            Error::ClosureViolation { .. } => "ClosureViolation",
            Error::Mismatch { .. } => "Mismatch",
            Error::Parse { .. } => "Parse",
            Error::Io(..) => "Io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
