use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("scalars live in different square-root extensions (sqrt({0}) vs sqrt({1}))")]
    MismatchedRadicand(String, String),
    #[error("invalid scalar syntax: {0:?}")]
    InvalidScalar(String),
    #[error("polynomial division by zero")]
    DivisionByZeroPoly,
    #[error("series division by a denominator vanishing at 0")]
    SingularSeriesDivision,
    #[error(
        "irrational spectrum: residual factor {residual} does not split over the supported fields"
    )]
    IrrationalSpectrum { residual: String },
    #[error("repeated irreducible quadratic factor {factor} (multiplicity {multiplicity})")]
    RepeatedQuadraticFactor { factor: String, multiplicity: usize },
    #[error("root hint {root} with multiplicity {multiplicity} failed verification: {reason}")]
    HintMismatch {
        root: String,
        multiplicity: usize,
        reason: String,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix of size {0} exceeds the supported limit of {1}")]
    MatrixTooLarge(usize, usize),
    #[error("inconsistent linear system")]
    InconsistentSystem,
    #[error("matrix is singular")]
    Singular,
    #[error("sample point {0} coincides with an eigenvalue")]
    SampleCollision(String),
    #[error("resolvent evaluated at a pole s = {0}")]
    EvalAtPole(String),
    #[error("vector is not a generalized eigenvector for eigenvalue {0}")]
    NotAGeneralizedEigenvector(String),
    #[error("chains for eigenvalue {eigenvalue} span only {found} of {expected} dimensions")]
    IncompleteBasis {
        eigenvalue: String,
        found: usize,
        expected: usize,
    },
    #[error("eigenvalue {0} is not representable in the requested scalar field")]
    NotRepresentable(String),
    #[error("operation needs a factorization into linear factors only")]
    RequiresLinearFactors,
    #[error("eigenvalue index {0} out of range")]
    NoSuchEigenvalue(usize),
}

impl Error {
    /// Variant name, used as a stable tag in diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::MismatchedRadicand(..) => "MismatchedRadicand",
            Error::InvalidScalar(_) => "InvalidScalar",
            Error::DivisionByZeroPoly => "DivisionByZeroPoly",
            Error::SingularSeriesDivision => "SingularSeriesDivision",
            Error::IrrationalSpectrum { .. } => "IrrationalSpectrum",
            Error::RepeatedQuadraticFactor { .. } => "RepeatedQuadraticFactor",
            Error::HintMismatch { .. } => "HintMismatch",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::MatrixTooLarge(..) => "MatrixTooLarge",
            Error::InconsistentSystem => "InconsistentSystem",
            Error::Singular => "Singular",
            Error::SampleCollision(_) => "SampleCollision",
            Error::EvalAtPole(_) => "EvalAtPole",
            Error::NotAGeneralizedEigenvector(_) => "NotAGeneralizedEigenvector",
            Error::IncompleteBasis { .. } => "IncompleteBasis",
            Error::NotRepresentable(_) => "NotRepresentable",
            Error::RequiresLinearFactors => "RequiresLinearFactors",
            Error::NoSuchEigenvalue(_) => "NoSuchEigenvalue",
        }
    }
}
