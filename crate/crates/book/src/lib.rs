//! The guide in `book/` as doctests: one empty module per chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/hypergraphs.md")]
pub mod hypergraphs {}
#[doc = include_str!("../../../book/src/matching-polynomial.md")]
pub mod matching_polynomial {}
#[doc = include_str!("../../../book/src/largest-root.md")]
pub mod largest_root {}
#[doc = include_str!("../../../book/src/shifting.md")]
pub mod shifting {}
#[doc = include_str!("../../../book/src/walk-trees.md")]
pub mod walk_trees {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
