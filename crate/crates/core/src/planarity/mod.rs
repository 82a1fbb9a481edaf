//! Planarity of lattices.

mod catalog;
mod dismantle;
pub mod graph;

pub use catalog::{
    is_planar_kr, kr_catalog, make_a, make_e, make_f, make_g, make_h, KRCatalogEntry,
    PlanarityVerdict, Witness, CATALOG_LIMIT, MIN_SIZE, THREE_REDUCIBLE_EXCEPTIONS,
};
pub use dismantle::{is_dismantlable, is_dismantlable_exhaustive, EXHAUSTIVE_MAX};

use crate::lattice::Lattice;
use graph::Graph;

/// The cover graph with an extra edge joining bottom and top.
pub fn augmented_cover_graph(l: &Lattice) -> Graph {
    let mut g = Graph::from_edges(l.len(), l.cover_pairs());
    g.add_edge(l.bottom(), l.top());
    g
}

/// Planarity via the augmented cover graph.
pub fn is_planar_graph_oracle(l: &Lattice) -> bool {
    graph::is_planar(&augmented_cover_graph(l))
}
