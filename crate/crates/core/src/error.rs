use thiserror::Error;

/// Errors raised by the geometric and combinatorial routines.
///
/// Point lists attached to variants are rendered in the canonical string
/// encoding of [`crate::exact::FieldScalar`] so the error stays independent
/// of the field type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported characteristic {0}: primes 2 and 3 are excluded")]
    UnsupportedCharacteristic(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large for word-sized arithmetic")]
    ModulusTooLarge(u64),
    #[error("entries belong to different fields")]
    MixedFields,
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("form is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("odd degree {0}: a square has even degree")]
    OddDegree(u32),
    #[error("zero form")]
    ZeroForm,
    #[error("not a perfect square: {0}")]
    NotASquare(String),
    #[error("variable {var} has no pure power term in one of the forms")]
    NotMonicInVariable { var: usize },
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("field is not finite, enumeration impossible")]
    NotEnumerable,
    #[error("empty point list")]
    EmptyPointList,
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("only {} rational base points found", .0.len())]
    PartialLocus(Vec<Vec<String>>),
    #[error("degenerate net: {0}")]
    DegenerateNet(String),
    #[error("duplicate point in octad at positions {0} and {1}")]
    DuplicatePoint(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("indices must differ")]
    EqualIndices,
    #[error("line is a component of the Hessian")]
    ComponentLine,
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("quadric has corank at least two")]
    CorankTwo,
    #[error("point does not lie on the Hessian")]
    NotOnHessian,
    #[error("point is a singular point of the hypersurface")]
    SingularPoint,
    #[error("point does not lie on the hypersurface")]
    NotOnHypersurface,
    #[error("no form of degree at most {0} vanishes on the samples")]
    NoFit(u32),
    #[error("dual fit at degree {degree} is ambiguous (kernel dimension {kernel_dim})")]
    AmbiguousFit { degree: u32, kernel_dim: usize },
    #[error("curves share a common component")]
    CommonComponent,
    #[error("curves are not everywhere tangent: {0}")]
    NotEverywhereTangent(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("invalid marking: {0}")]
    InvalidMarking(String),
    #[error("vector is not orthogonal to the canonical class")]
    NotInCanonicalComplement,
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
