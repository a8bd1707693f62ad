use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported field order {0}; expected one of 2, 3, 4, 5, 7")]
    UnsupportedField(u64),
    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u8, right: u8 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("s1 and s2 do not partition 1..{n}: {reason}")]
    NotAPartition { n: u32, reason: String },
    #[error("no multiplier maps s1 onto s2 modulo {0}")]
    NoWitness(u32),
    #[error("enumeration of {required} codewords exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("unknown example id '{0}'")]
    UnknownExample(String),
    #[error("parse error: {0}")]
    Parse(String),
}
