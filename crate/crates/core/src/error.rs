use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} exceeds the supported maximum {cap}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("modulus m must be at least 1")]
    ZeroModulus,
    #[error("composition needs two Type II moves, got {0:?}")]
    NotTypeTwo(crate::MoveKind),
    #[error("board side {n_max} is beyond the {tier} oracle limit {limit}{hint}")]
    OracleRange {
        tier: &'static str,
        n_max: u64,
        limit: u64,
        hint: &'static str,
    },
    #[error("invalid box factor: {0}")]
    BoxFactor(String),
    #[error("invalid range: m_lo = {lo}, m_hi = {hi} (need 1 <= m_lo <= m_hi)")]
    InvalidRange { lo: u64, hi: u64 },
}
