use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("morse recursion inconsistent: {0}")]
    MorseInconsistent(String),
    #[error("not sturm: {0}")]
    NotSturm(String),
    #[error("degenerate meander: {0}")]
    Degenerate(String),
    #[error("expected exactly one crossing of morse number 3, found {0}")]
    NoUniqueTop(usize),
    #[error("unknown id {0}")]
    UnknownId(u32),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid template: {0}")]
    InvalidTemplate(String),
    #[error("hamiltonian search found {found} solutions for {path}, expected exactly one")]
    PathSearch { path: String, found: usize },
    #[error("splice and direct search disagree for h{iota}: splice {splice:?}, search {search:?}")]
    SpliceMismatch {
        iota: usize,
        splice: Vec<u32>,
        search: Vec<u32>,
    },
    #[error("postcondition failed: {0}")]
    Postcondition(String),
}
