//! Exact matching polynomials and largest matching roots of uniform
//! hypergraphs.
//!
//! ```
//! use hypermatch::{hgraph::text, matching_polynomial};
//!
//! let g = text::parse("3 5 3\n0 1 2\n0 1 3\n0 2 4\n").unwrap();
//! assert_eq!(matching_polynomial(&g).to_string(), "x^5 - 3x^2");
//! ```

pub mod constructions;
pub mod error;
pub mod harness;
pub mod hgraph;
pub mod matchpoly;
pub mod poly;
pub mod rootfind;
pub mod spectral;
pub mod transform;
pub mod walktree;

pub use error::{Error, Result};
pub use hgraph::{Edge, Hypergraph, VertexId};
pub use matchpoly::{matching_counts, matching_polynomial, MatchingSpectrum};
pub use poly::SignedPolynomial;
pub use rootfind::{compare_lambda, largest_matching_root, LambdaOrdering, LambdaValue};
pub use spectral::{spectral_radius, PerronEstimate};
pub use walktree::{build_walk_tree, VertexOrder, WalkTree};
