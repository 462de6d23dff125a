use thiserror::Error;

/// Largest modulus accepted by the dense-table code paths.
pub const MAX_MODULUS: usize = 10_000_000;

/// Largest cyclotomic order for which exact 64-bit coefficient arithmetic is offered.
pub const MAX_CYCLOTOMIC_ORDER: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus {0} exceeds the supported maximum {MAX_MODULUS}")]
    ModulusTooLarge(usize),
    #[error("a set must have at least one element")]
    EmptySet,
    #[error("{first} and {second} coincide modulo {modulus}")]
    DuplicateResidue {
        first: i64,
        second: i64,
        modulus: usize,
    },
    #[error("moduli differ: {left:?} vs {right:?}")]
    ModulusMismatch { left: Vec<usize>, right: Vec<usize> },
    #[error("direct sum is not direct: {a} + {b} = {a2} + {b2} (mod {modulus})")]
    SumCollision {
        a: usize,
        b: usize,
        a2: usize,
        b2: usize,
        modulus: usize,
    },
    #[error("divisor polynomial is not monic of positive degree")]
    NotMonic,
    #[error("integer coefficient overflow in polynomial arithmetic")]
    CoefficientOverflow,
    #[error("cyclotomic order {0} is outside the supported range 1..={MAX_CYCLOTOMIC_ORDER}")]
    UnsupportedOrder(usize),
    #[error("{order} does not divide the modulus {modulus}")]
    OrderNotDivisor { order: usize, modulus: usize },
    #[error("expected a vector of dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point {point:?} lies outside the grid {moduli:?}")]
    PointOutOfRange { point: Vec<i64>, moduli: Vec<usize> },
    #[error("duplicate entry {0:?}")]
    DuplicateEntry(Vec<i64>),
    #[error("tile size {size} does not divide the group order {order}")]
    SizeNotDivisor { size: usize, order: usize },
    #[error("not a factorization of the group: {0}")]
    NotAFactorization(String),
    #[error("malformed quasiperiodic witness: {0}")]
    MalformedWitness(String),
    #[error("computation cancelled")]
    Cancelled,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
