//! Union vertex-distinguishing edge colorings.
//!
//! Every graph on `n` vertices without a component of order at most two has
//! an edge coloring by nonempty subsets of `[k]`, `k = ⌈log2(n + 1)⌉ + 1`,
//! under which the unions of labels around vertices are pairwise distinct.
//! Forests of 1-stars need only `⌈log2(n + 1)⌉` colors. This crate builds
//! such colorings constructively:
//!
//! * [`partition`] splits the power set of `[k]` into stars of any sizes;
//! * [`onestar`] extracts a spanning forest of 1-stars;
//! * [`coloring`] maps each star onto a 1-star and verifies the result;
//! * [`oracle`] computes exact indices of small graphs by search.

pub mod cli;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod label;
pub mod onestar;
pub mod oracle;
pub mod partition;
pub mod star;

pub use coloring::{
    color_forest, color_graph, color_onestar, lower_bound, lower_bound_with_empty,
    union_vertex_coloring, verify, EdgeColoring, LabelMode, UnionColoring, VerifyReport,
};
pub use error::{Error, Result};
pub use graph::{generate, read_graph, write_graph, Edge, Graph, GraphKind};
pub use label::Label;
pub use onestar::{
    analyze_onestar, is_onestar, spanning_onestar_forest, ForestTree, OneStarAnatomy,
};
pub use oracle::{exact_index, exists_coloring, SearchBudget, SearchOutcome};
pub use partition::{
    double, double_plus_singleton, double_split, partition_with_empty, SizeComposition,
};
pub use star::{is_forest_partition, is_m_star, StarSequence};
