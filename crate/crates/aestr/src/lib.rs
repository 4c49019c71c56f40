//! # aestr — after-edit string index
//!
//! Preprocess a text `T` once, then answer, per query, the **longest border**
//! and the **shortest cover** of the string obtained by applying a single
//! edit (insert, substitute, or delete a factor) to `T`. Each edit is
//! discarded after its query; the next query applies to the original text
//! again.
//!
//! Preprocessing builds suffix-array LCE structures, border and border-group
//! arrays, cover and range arrays, and a rightmost-prefix-occurrence index
//! over `T` and its reversal. A query with edit string `w` then runs in
//! O(|w| log n).
//!
//! ```
//! use aestr::{AfterEditIndex, EditOp};
//!
//! let index = AfterEditIndex::new(&b"abaababa"[..]).unwrap();
//! let mut scratch = index.new_scratch();
//!
//! // append "ab": T' = "abaababaab"
//! let ans = index.query(&EditOp::insert(9, *b"ab"), &mut scratch).unwrap();
//! assert_eq!(ans.border_len, 5); // "abaab"
//! assert_eq!(ans.cover_len, 5);  // "abaab"
//!
//! // substitute T[4]: T' = "ababbaba"
//! let ans = index.query(&EditOp::substitute(4, 4, *b"b"), &mut scratch).unwrap();
//! assert_eq!(ans.border_len, 3); // "aba"
//! assert_eq!(ans.cover_len, 8);  // T' is superprimitive
//! ```

pub mod border;
pub mod corpus;
pub mod cover;
pub mod edit;
pub mod engine;
pub mod error;
pub mod lce;
pub mod oracle;
pub mod prefix_occ;
pub mod stats;
pub mod text;

mod lbae;
mod scae;

pub use edit::EditOp;
pub use engine::{AfterEditIndex, QueryAnswer, QueryScratch, StructureSet};
pub use error::{Error, Result};
pub use stats::{QueryPath, QueryStats};
pub use text::{PrefixTable, Text};
