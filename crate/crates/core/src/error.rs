use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported dimension {0} (expected 2 or 3)")]
    UnsupportedDimension(usize),

    #[error("component buffer has length {found}, expected {expected}")]
    BadLength { expected: usize, found: usize },

    #[error("tensor lacks the {0} symmetry")]
    MissingSymmetry(&'static str),

    #[error("matrix is not orthogonal (max |QQᵀ - I| = {0:e})")]
    NotOrthogonal(f64),

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("nonphysical Poisson ratio {0} (must lie in (-1, 1/2))")]
    NonphysicalPoisson(f64),

    #[error("nonphysical phase: {0}")]
    NonphysicalPhase(String),

    #[error("incompressible matrix (nu1 = 1/2) has no finite threshold")]
    IncompressibleMatrix,

    #[error("{case}: denominator {value:e} is not positive")]
    NonpositiveDenominator { case: &'static str, value: f64 },

    #[error("wrong regime for {case}: expected {expected}")]
    WrongRegime { case: &'static str, expected: &'static str },

    #[error("polygonal hole with n = 4 is not isotropic; use the aligned or random square-hole cases")]
    SquareHoleNotIsotropic,

    #[error("no tabulated polygon constants for n = {0} (available: 3, 5, 6, infinity)")]
    UntabulatedPolygon(u32),

    #[error("orthotropy yields complex auxiliary constants ({0})")]
    ComplexAuxiliary(&'static str),

    #[error("degenerate orthotropy: {0} vanishes")]
    DegenerateOrthotropy(&'static str),

    #[error("volume fraction {0} outside its admissible range")]
    VolumeFraction(f64),

    #[error("radius of inertia must be positive, got {0}")]
    NonpositiveRadius(f64),

    #[error("inconsistent higher-order constants: {0}")]
    InconsistentConstants(String),

    #[error("tensor not of dilute-SGE form (relative round-trip residual {0:e})")]
    NotDiluteForm(f64),

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("configuration error: {0}")]
    Config(String),
}

impl Error {
    /// Errors caused by the shape of the input rather than by the physics.
    pub fn is_config(&self) -> bool {
        matches!(self, Error::Config(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
