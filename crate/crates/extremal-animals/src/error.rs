use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{{{p},{q}}} is spherical: (p-2)(q-2) = {product} < 4")]
    SphericalPair { p: u32, q: u32, product: i64 },

    #[error("degenerate Schläfli parameters {{{p},{q}}}: both must be at least 3")]
    DegenerateParameter { p: u32, q: u32 },

    #[error("Schläfli parameters {{{p},{q}}} too large for exact discriminant arithmetic")]
    ParameterTooLarge { p: u32, q: u32 },

    #[error("mismatched discriminants: {0} vs {1}")]
    MismatchedDiscriminant(i64, i64),

    #[error("{{{p},{q}}} is Euclidean; operation only defined for hyperbolic pairs")]
    EuclideanPair { p: u32, q: u32 },

    #[error("{{{p},{q}}} is hyperbolic; operation only defined for Euclidean pairs")]
    EuclideanOnly { p: u32, q: u32 },

    #[error("argument out of the valid range: {0}")]
    OutOfValidRange(String),

    #[error("degree {degree} is not a valid perimeter degree for p={p}, q={q} at layer {k}")]
    InvalidDegree { p: u32, q: u32, k: u32, degree: u32 },

    #[error("attachment site is already occupied")]
    Collision,

    #[error("placing the tile would put more than q tiles around a vertex")]
    OverSaturation,

    #[error("construction would exceed the configured size cap of {cap} tiles")]
    SizeCapExceeded { cap: usize },

    #[error("enumeration target exceeds the configured cap: {0}")]
    CapExceeded(String),

    #[error("animal was not built with layer labels; degree sequence cannot be read off")]
    MissingLabels,

    #[error("malformed reference count data: {0}")]
    MalformedReference(String),
}

pub type Result<T> = std::result::Result<T, Error>;
