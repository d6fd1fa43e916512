//! Edge contraction and H-free graphs on small vertex counts.
//!
//! Graphs have at most [`MAXN`] vertices and are stored as bitset rows.
//! The [`hfree`] module covers freeness, splitting (the inverse of
//! contraction), free-split sets and critically exist graphs; [`enumerate`]
//! and [`verify`] replay the characterizations over every small graph.
//!
//! ```
//! use hcontract::families::{bull, claw};
//! use hcontract::hfree::{fs, splitting_graph, Family};
//!
//! let claw_family = Family::single(claw());
//! assert_eq!(splitting_graph(&claw()).unwrap().len(), 6);
//! assert_eq!(fs(&claw_family).unwrap(), Family::single(bull()));
//! ```

pub mod canon;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod hfree;
pub mod verify;

pub use canon::{automorphism_orbits, canonical_form, is_isomorphic, CanonicalForm};
pub use error::{
    CorpusError, EnumerateError, FamilyError, Graph6Error, GraphError, HFreeError, VerifyError,
};
pub use graph::{ContractionResult, Edge, Graph, VertexSet, MAXN};
pub use graph6::{parse_graph6, write_graph6};
pub use hfree::{elm, find_induced, fs, is_h_free, Family};
