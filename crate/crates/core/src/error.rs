use thiserror::Error;

/// Everything that can go wrong across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact")]
    NotDivisible,
    #[error("zero denominator while specializing")]
    ZeroDenominator,
    #[error("result is not a Laurent polynomial")]
    NotLaurent,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("seed is model {found:?}, expected model {expected}")]
    ModelMismatch { expected: u8, found: Option<u8> },
    #[error("face {0} is not a quadrilateral")]
    NotQuadFace(u8),
    #[error("contour {0:?} is self-intersecting")]
    SelfIntersecting([i64; 6]),
    #[error("sign pattern of {0:?} does not match (+,-,+,-,+,-)")]
    PatternMismatch([i64; 6]),
    #[error("point {0:?} is not in any hexahedron family")]
    NotInFamily((i64, i64, i64)),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
