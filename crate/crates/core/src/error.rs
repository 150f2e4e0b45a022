use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    NvarsMismatch { left: usize, right: usize },

    #[error("series truncation mismatch: caps ({0}, {1}) vs ({2}, {3})")]
    CapMismatch(u32, u32, u32, u32),

    #[error("series constant term is not 1")]
    NotUnitConstant,

    #[error("partition weight {weight} exceeds the tableau enumeration guard {guard}")]
    WeightAboveGuard { weight: u32, guard: u32 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid Fourier index: {0}")]
    InvalidIndex(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("exponent tuple has {got} entries but GL({n}) has only {slots} even slots")]
    TooManyEvenSlots { n: usize, slots: usize, got: usize },

    #[error("Satake data parse error: {0}")]
    SatakeParse(String),

    #[error("Satake data invalid at p={prime}: {reason}")]
    SatakeInvalid { prime: u64, reason: String },

    #[error("missing Satake parameters for prime {0}")]
    MissingPrime(u64),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
