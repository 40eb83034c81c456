use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order n must be at least 2, got {n}")]
    OrderTooSmall { n: u64 },

    #[error("action exponent a must satisfy 1 <= a < n, got a = {a} with n = {n}")]
    ExponentOutOfRange { n: u64, a: u64 },

    #[error("a and n must be coprime (gcd({a}, {n}) = {gcd}): the group is not small, it contains pseudo-reflections")]
    NotSmall { n: u64, a: u64, gcd: u64 },

    #[error("character {chi} is out of range for a group of order {n}")]
    CharacterOutOfRange { chi: u64, n: u64 },

    #[error("group moduli must all be positive, got {0:?}")]
    InvalidModuli(Vec<u64>),

    #[error("group order overflows the supported range")]
    GroupTooLarge,

    #[error("character {character:?} does not belong to the group with moduli {moduli:?}")]
    GroupMismatch {
        character: Vec<u64>,
        moduli: Vec<u64>,
    },

    #[error("a representation needs at least one weight")]
    EmptyRepresentation,

    #[error("representation is not faithful: group element {kernel_element:?} acts trivially")]
    NotFaithful { kernel_element: Vec<u64> },

    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },

    #[error("matrix must be nonempty")]
    EmptyMatrix,

    #[error("lattice basis is rank deficient (rank {rank} < {dim})")]
    RankDeficient { rank: usize, dim: usize },

    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid degree grid: {0}")]
    InvalidGrid(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}
