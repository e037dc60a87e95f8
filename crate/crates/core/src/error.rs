use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("evaluation at t = 0 is undefined for Laurent polynomials")]
    EvalAtZero,

    #[error("matrix is not symmetric: entry ({i},{j}) differs from ({j},{i})")]
    NotSymmetric { i: usize, j: usize },

    #[error("matrix is not square: {rows} rows, row {row} has {cols} entries")]
    NotSquare { rows: usize, row: usize, cols: usize },

    #[error("Seifert matrices have different parity indices k={left} and k={right}")]
    ParityMismatch { left: u32, right: u32 },

    #[error("signature is only defined here for odd k (got k={k})")]
    UnsupportedParity { k: u32 },

    #[error("knot dimensions differ: {left} and {right}")]
    KnotDimensionMismatch { left: u32, right: u32 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(
        "Alexander data cannot be transferred through spinning a knot without a simply connected Seifert hypersurface"
    )]
    SpinWithoutSimple,

    #[error("lift assignment has length {got}, projection has {expected} double-point components")]
    LiftLength { expected: usize, got: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("invalid framed link: {0}")]
    InvalidFramedLink(String),

    #[error("disk index {index} out of range for a system of {len} disks")]
    DiskIndex { index: usize, len: usize },

    #[error("disk system has {disks} disks but {targets} targets")]
    DiskTargets { disks: usize, targets: usize },
}
