//! Exact rainbow connection numbers, outerplanarity recognition through
//! forbidden minors, and exhaustive enumeration of small bridgeless
//! outerplanar graphs.
//!
//! Everything works on [`Graph`], an immutable simple graph on at most 16
//! vertices. The main entry points are [`rc_exact`], [`is_outerplanar`] and
//! [`enumerate_bridgeless_outerplanar`].

pub mod blocks;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod rainbow;
pub mod recognition;

pub use blocks::{
    block_decomposition, bridges, cut_vertices, is_bridgeless, is_two_connected, BlockDecomposition,
};
pub use canon::{are_isomorphic, canonical_code, canonical_form, to_graph6, CanonicalCode};
pub use enumerate::{
    enumerate_all_graphs, enumerate_bridgeless_outerplanar, enumerate_labeled_oracle, enumerate_outerplanar,
    enumerate_two_connected_outerplanar, filter_by_diameter, ChordSet, EnumerationStream, GraphClass,
};
pub use error::{EnumerationError, GraphError, RainbowError};
pub use graph::{Edge, Graph, VertexSet, MAX_ORDER};
pub use rainbow::{
    exists_rainbow_coloring, formula_rc_cycle, formula_rc_fan, is_rainbow_connected, rainbow_path_exists,
    rc_exact, rc_oracle, verify_coloring, ColoringReport, EdgeColoring, RcResult,
};
pub use recognition::{
    find_k23_minor, find_k4_minor, is_mop, is_outerplanar, outer_cycle, ForbiddenMinor, MinorWitness,
};
