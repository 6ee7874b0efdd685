use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier must be non-empty")]
    EmptyCarrier,
    #[error("carrier size {n} exceeds the supported maximum of {max}")]
    CarrierTooLarge { n: usize, max: usize },
    #[error("table has {got} entries, expected {expected}")]
    WrongEntryCount { expected: usize, got: usize },
    #[error("entry {value} at ({row},{col}) is outside the carrier 0..{n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("tables have different carrier sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("element {element} is outside the carrier 0..{n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("distributivity fails: {0}")]
    NotDistributive(String),
    #[error("addition is not associative and commutative")]
    NotSemiring,
    #[error("addition is not idempotent")]
    NotIdempotent,
    #[error("operation is not associative")]
    NotAssociative,
    #[error("addition has no neutral element")]
    NoNeutral,
    #[error("subset must be non-empty")]
    EmptySubset,
    #[error("subset is not an ideal")]
    NotIdeal,
    #[error("multiple count must be positive")]
    ZeroMultiple,
    #[error("automorphism group is not transitive")]
    NotTransitive,
    #[error("modulus {0} must be odd and positive")]
    EvenModulus(usize),
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("projected work {projected} exceeds ceiling {ceiling}; rerun with count-only")]
    WorkCeiling { projected: u128, ceiling: u128 },
    #[error("unsupported combination: {0}")]
    Unsupported(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed checkpoint: {0}")]
    Checkpoint(String),
}
