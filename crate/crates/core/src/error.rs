use alloc::string::String;

use crate::face::FaceSet;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} does not fit the 32-bit residue representation")]
    PrimeTooLarge(u64),
    #[error("modulus {p} is below the minimum {min} required for generic sampling")]
    PrimeTooSmall { p: u64, min: u64 },
    #[error("division by zero in F_p")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("vertex {vertex} is outside the ground set [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("ground set of size {0} exceeds the limit of 62 vertices")]
    TooManyVertices(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("face family is not downward closed: {face} is missing")]
    NotDownwardClosed { face: FaceSet },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("no consensus after {trials} trials")]
    NoConsensus { trials: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
