use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid signed permutation {0:?}")]
    InvalidPermutation(String),
    #[error("could not parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("rank {rank} is outside the supported range 1..={max}")]
    OutOfRange { rank: usize, max: usize },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("character value at class {0} is not rational")]
    NotRational(String),
    #[error("subgroup character is inconsistent at {0}")]
    InconsistentCharacter(String),
    #[error("class function has non-integral multiplicity {multiplicity} on {irreducible}")]
    NotACharacter {
        irreducible: String,
        multiplicity: String,
    },
    #[error("rewriting exceeded {0} steps")]
    RewriteLimit(usize),
    #[error("rewrite rules are inconsistent: {0}")]
    InconsistentRules(String),
    #[error("space mismatch: {0} vs {1}")]
    SpaceMismatch(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
