use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible Dynkin type {family}{rank}")]
    InadmissibleType { family: char, rank: usize },

    #[error("cannot parse group name {0:?}")]
    UnknownGroup(String),

    #[error("simple root index {index} out of range for rank {rank}")]
    RootIndex { index: usize, rank: usize },

    #[error("vector is not in the weight lattice of the reflecting root")]
    NotIntegral,

    #[error("unsupported type {0} for this operation")]
    UnsupportedType(String),

    #[error("malformed orbit {0:?}")]
    MalformedOrbit(String),

    #[error("orbit {orbit} is not valid for {group}: {reason}")]
    InvalidOrbit {
        orbit: String,
        group: String,
        reason: String,
    },

    #[error("diagram has {found} labels, expected {expected}")]
    DiagramShape { expected: usize, found: usize },

    #[error("diagram for factor {factor} is not in its distinguished table")]
    NotDistinguished { factor: String },

    #[error("computed table for {group} disagrees with the stored table at row {row}")]
    TableMismatch { group: String, row: usize },

    #[error("{0} is not a prime field modulus")]
    InvalidField(u64),

    #[error("invalid q/l context: {0}")]
    InvalidContext(String),

    #[error("q = {q} is not considerate for h = {h}: q^{k} = 1 mod {l}")]
    Inconsiderate { q: u64, l: u64, h: u32, k: u32 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("matrix size mismatch: expected {expected}x{expected}, found {rows}x{cols}")]
    SizeMismatch {
        expected: usize,
        rows: usize,
        cols: usize,
    },

    #[error("enumeration budget exceeded: {0}")]
    Budget(String),

    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
}
