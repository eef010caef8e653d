use thiserror::Error;

/// Errors raised by the library. Every variant knows which module raised it,
/// so front ends can report the violated precondition and its origin.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // exactnum
    #[error("q context mismatch: {left} vs {right}")]
    ContextMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid q = {0}: need q > 0 and q != 1")]
    InvalidQ(String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    // homopoly
    #[error("polynomial syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("non-homogeneous input: term {term:?} has degree {found}, expected {expected}")]
    NonHomogeneous {
        term: String,
        expected: usize,
        found: usize,
    },
    #[error("y-exponent {index} exceeds degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the supported ceiling {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("scalar type cannot represent sqrt({0}) exactly; use QScalar coefficients")]
    SqrtUnavailable(String),
    #[error("coefficients are not rational")]
    NotRational,
    #[error("invalid polynomial JSON: {0}")]
    Json(String),

    // duality
    #[error("transform has vanishing x^n coefficient; dual distance undefined")]
    DegenerateTransform,
    #[error("polynomial is not divisible by {0}")]
    NotDivisible(usize),

    // zeta
    #[error("zeta polynomial needs x^n coefficient 1, found {0}")]
    NotMonic(String),
    #[error("zeta polynomial needs d >= 2 and d_perp >= 2 (d = {d:?}, d_perp = {d_perp:?})")]
    DistanceTooSmall {
        d: Option<usize>,
        d_perp: Option<usize>,
    },
    #[error("zeta system inconsistent (rank {rank}, unknowns {unknowns})")]
    InconsistentZeta { rank: usize, unknowns: usize },

    // rhcheck
    #[error("root finding needs a polynomial of degree >= 1")]
    ConstantPolynomial,
    #[error("invalid tolerance {0:?}: need a positive decimal")]
    InvalidTolerance(String),

    // momentsearch
    #[error("moment system needs an even degree, got {0}")]
    OddDegree(usize),
    #[error("moment system shape: {0}")]
    MomentShape(String),

    // ringlab
    #[error("unknown ring {0:?}")]
    UnknownRing(String),
    #[error("generator {name} is neither invariant nor anti-invariant under sigma_{q}")]
    GeneratorCharacter { name: String, q: String },
    #[error("degree {degree} is not admissible for ring {ring} (empty graded piece)")]
    InadmissibleDegree { ring: String, degree: usize },
    #[error("graded piece of degree {0} only contains x^n; extremal weight undefined")]
    DegeneratePiece(usize),
    #[error("degree {0} < 4: operator needs deg W >= 4")]
    DegreeTooSmall(usize),
    #[error("not a Type III formal weight enumerator: {0}")]
    NotTypeIII(String),
    #[error("divisibility check needs d >= 6, found d = {0:?}")]
    MinWeightTooSmall(Option<usize>),
}

impl Error {
    /// Name of the module that raises this error.
    pub fn module(&self) -> &'static str {
        use Error::*;
        match self {
            ContextMismatch { .. } | DivisionByZero | InvalidQ(_) | ParseRational(_) => "exactnum",
            Syntax { .. }
            | NonHomogeneous { .. }
            | IndexOutOfRange { .. }
            | ZeroPolynomial
            | DegreeTooLarge { .. }
            | SqrtUnavailable(_)
            | NotRational
            | Json(_) => "homopoly",
            DegenerateTransform | NotDivisible(_) => "duality",
            NotMonic(_) | DistanceTooSmall { .. } | InconsistentZeta { .. } => "zeta",
            ConstantPolynomial | InvalidTolerance(_) => "rhcheck",
            OddDegree(_) | MomentShape(_) => "momentsearch",
            UnknownRing(_)
            | GeneratorCharacter { .. }
            | InadmissibleDegree { .. }
            | DegeneratePiece(_)
            | DegreeTooSmall(_)
            | NotTypeIII(_)
            | MinWeightTooSmall(_) => "ringlab",
        }
    }

    /// Stable machine-readable kind, the variant name.
    pub fn kind(&self) -> &'static str {
        use Error::*;
        match self {
            ContextMismatch { .. } => "ContextMismatch",
            DivisionByZero => "DivisionByZero",
            InvalidQ(_) => "InvalidQ",
            ParseRational(_) => "ParseRational",
            Syntax { .. } => "Syntax",
            NonHomogeneous { .. } => "NonHomogeneous",
            IndexOutOfRange { .. } => "IndexOutOfRange",
            ZeroPolynomial => "ZeroPolynomial",
            DegreeTooLarge { .. } => "DegreeTooLarge",
            SqrtUnavailable(_) => "SqrtUnavailable",
            NotRational => "NotRational",
            Json(_) => "Json",
            NotMonic(_) => "NotMonic",
            DistanceTooSmall { .. } => "DistanceTooSmall",
            DegenerateTransform => "DegenerateTransform",
            NotDivisible(_) => "NotDivisible",
            InconsistentZeta { .. } => "InconsistentZeta",
            ConstantPolynomial => "ConstantPolynomial",
            InvalidTolerance(_) => "InvalidTolerance",
            OddDegree(_) => "OddDegree",
            MomentShape(_) => "MomentShape",
            UnknownRing(_) => "UnknownRing",
            GeneratorCharacter { .. } => "GeneratorCharacter",
            InadmissibleDegree { .. } => "InadmissibleDegree",
            DegeneratePiece(_) => "DegeneratePiece",
            DegreeTooSmall(_) => "DegreeTooSmall",
            NotTypeIII(_) => "NotTypeIII",
            MinWeightTooSmall(_) => "MinWeightTooSmall",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
