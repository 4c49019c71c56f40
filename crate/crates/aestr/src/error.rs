use thiserror::Error;

/// Errors reported by index construction and query evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("text must be non-empty")]
    EmptyText,
    #[error("position out of range: {what} = {got} not in [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        got: usize,
        min: usize,
        max: usize,
    },
    #[error("edit produces an empty string")]
    EmptyResult,
    #[error("range query requires a superprimitive prefix (cov({k}) != {k})")]
    NotSuperprimitive { k: usize },
    #[error("edited-text LCE cannot express this position pair in the short-border strategy")]
    UnsupportedComparison,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn out_of_range(what: &'static str, got: usize, min: usize, max: usize) -> Self {
        Error::OutOfRange {
            what,
            got,
            min,
            max,
        }
    }
}
