use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u64, right: u64 },

    #[error("conductor {conductor} is not a multiple of lcm(4, {m})")]
    ConductorTooSmall { conductor: u64, m: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dihedral group parameter must satisfy m >= 3, got {0}")]
    InvalidGroupOrder(usize),

    #[error("representation degree must be at least 1")]
    ZeroDegree,

    #[error("multiplicity vector for D_{m} needs {expected} entries, got {got}")]
    MultiplicityLength { m: usize, expected: usize, got: usize },

    #[error("representations belong to different groups (D_{0} vs D_{1})")]
    GroupMismatch(usize, usize),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("form is not invariant under the representation")]
    NotInvariant,

    #[error("parse error: {0}")]
    Parse(String),
}
