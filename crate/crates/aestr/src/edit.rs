//! A single edit operation in the after-edit model.

use crate::error::{Error, Result};

/// `phi(i, j, w)`: substitute `T[i..j]` with `w`; `j = i - 1` encodes
/// inserting `w` just before position `i`. Positions are 1-based. The edited
/// string is `T' = T[1..i-1] w T[j+1..n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EditOp {
    pub i: usize,
    pub j: usize,
    pub w: Vec<u8>,
}

impl EditOp {
    pub fn substitute(i: usize, j: usize, w: impl Into<Vec<u8>>) -> Self {
        EditOp { i, j, w: w.into() }
    }

    /// Insert `w` just before position `i` (so after `T[i-1]`).
    pub fn insert(i: usize, w: impl Into<Vec<u8>>) -> Self {
        EditOp {
            i,
            j: i - 1,
            w: w.into(),
        }
    }

    pub fn delete(i: usize, j: usize) -> Self {
        EditOp { i, j, w: Vec::new() }
    }

    pub fn is_insertion(&self) -> bool {
        self.j + 1 == self.i
    }

    /// Checks `1 <= i <= n+1`, `i-1 <= j <= n` against a text of length `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.i < 1 || self.i > n + 1 {
            return Err(Error::out_of_range("i", self.i, 1, n + 1));
        }
        if self.j > n || self.j + 1 < self.i {
            return Err(Error::out_of_range("j", self.j, self.i - 1, n));
        }
        Ok(())
    }

    /// Length of the edited string.
    pub fn n_prime(&self, n: usize) -> usize {
        (self.i - 1) + self.w.len() + (n - self.j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let op = EditOp::substitute(4, 4, *b"b");
        assert!(op.validate(8).is_ok());
        assert_eq!(op.n_prime(8), 8);

        assert!(EditOp::insert(1, *b"x").validate(8).is_ok()); // front insertion, j = 0
        assert!(EditOp::insert(9, *b"x").validate(8).is_ok()); // append
        assert!(EditOp::insert(10, *b"x").validate(8).is_err());
        assert!(EditOp::substitute(5, 4, *b"x").validate(8).is_ok()); // j = i-1: insertion
        assert!(EditOp::substitute(6, 4, *b"x").validate(8).is_err()); // j < i-1
        assert!(EditOp::delete(1, 9).validate(8).is_err());
        assert_eq!(EditOp::delete(1, 8).n_prime(8), 0);
    }
}
