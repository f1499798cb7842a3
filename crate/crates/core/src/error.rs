use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("shading {shading} is not handled by {family}")]
    UnsupportedShading { family: String, shading: String },

    #[error("unknown family tag {0:?}")]
    UnknownFamily(String),

    #[error("no catalog entry {0}")]
    UnknownPair(u32),

    #[error("catalog entry {id} has no bijection family")]
    NoFamily { id: u32 },

    #[error("catalog line {line}: {msg}")]
    CatalogParse { line: usize, msg: String },

    #[error("io error on {path}: {msg}")]
    Io { path: String, msg: String },
}
