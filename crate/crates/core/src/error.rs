use thiserror::Error;

/// Errors raised by the library. Every variant is a domain error: the inputs
/// violate a precondition, or a computed value contradicts a proven identity.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("{a} is not a unit modulo {n}")]
    NotUnit { a: String, n: u64 },

    #[error("p = 0 is not a valid characteristic")]
    ZeroCharacteristic,

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("N must be at least 2 (got {0})")]
    ModulusTooSmall(u64),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("weight {weight} is outside [0, 1)")]
    WeightOutOfRange { weight: String },

    #[error("weight {weight} does not have denominator dividing N = {n}")]
    DenominatorMismatch { weight: String, n: u64 },

    #[error("character {character} is outside [0, {n})")]
    CharacterOutOfRange { character: u64, n: u64 },

    #[error("multiplicity must be positive at puncture {0:?}")]
    ZeroMultiplicity(String),

    #[error("rank must be positive")]
    ZeroRank,

    #[error("duplicate puncture label {0:?}")]
    DuplicatePuncture(String),

    #[error("puncture {0:?} is not a puncture of the curve")]
    UnknownPuncture(String),

    #[error("multiplicities at puncture {puncture:?} sum to {total}, expected rank {rank}")]
    MultiplicityMismatch {
        puncture: String,
        total: u64,
        rank: u64,
    },

    #[error("N = {given} does not match the curve denominator {expected}")]
    ModulusMismatch { given: u64, expected: u64 },

    #[error("N * pardeg = {0} is not an integer")]
    NonIntegralPullback(String),

    #[error("levels must satisfy 0 <= m_1 < m_2 < ... < N: {0}")]
    InvalidLevels(String),

    #[error("matrix shape mismatch: {0}")]
    MatrixShape(String),

    #[error("diagonal residue block {0} is not nilpotent")]
    NotNilpotent(usize),

    #[error("characteristic polynomial disagrees with the eigenvalue law: {0}")]
    EigenvalueLaw(String),

    #[error("N = {n} does not divide the geometric sum of length {f} for p = {p}")]
    BoundViolated { n: u64, p: i64, f: u64 },

    #[error("no period found within the search cap {0}")]
    SearchExhausted(u64),

    #[error("p_max must be at least 2")]
    ScanRange,

    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
