use num_complex::Complex64;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("leading coefficient must be nonzero")]
    ZeroLeadingCoefficient,
    #[error("non-finite value encountered: {0}")]
    NonFiniteValue(Complex64),
    #[error("branch points must be pairwise distinct (offending value {0})")]
    CoincidentRoots(Complex64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("path passes within the exclusion tube of root {root} (distance {dist:.3e})")]
    ExclusionTube { root: Complex64, dist: f64 },
    #[error("argument tracking did not resolve after maximal subdivision near {0}")]
    PathDiverged(Complex64),
    #[error("quadrature did not converge at max order (last {last}, previous {prev})")]
    NonConvergence { last: Complex64, prev: Complex64 },
    #[error("degenerate branch-point chain: {0}")]
    DegenerateChain(String),
    #[error("homology intersection check failed")]
    IntersectionCheck,
    #[error("symplectic reduction hit a non-unimodular intermediate")]
    ReductionFailure,
    #[error("matrix is numerically singular (condition estimate {0:.3e})")]
    SingularMatrix(f64),
    #[error("period matrix symmetry defect {defect:.3e} exceeds threshold {threshold:.3e}")]
    SymmetryDefect { defect: f64, threshold: f64 },
    #[error("imaginary part of the period matrix is not definite after orientation fix")]
    IndefiniteImaginaryPart,
    #[error("genus {0} outside supported range")]
    GenusBound(usize),
    #[error("evaluation point too close to a branch point (denominator underflow)")]
    NearBranchPoint,
    #[error("genus mismatch between curve and period data")]
    GenusMismatch,
    #[error("fit rejected: {0}")]
    FitDegenerate(String),
    #[error("phase averaging needs at least 8 phases for this family (got {0})")]
    PhaseCount(usize),
    #[error("operation not defined for this family: {0}")]
    WrongFamily(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
