//! Congruence lattices and planarity of finite lattices.

mod bits;
pub mod cli;
pub mod congruence;
pub mod enumeration;
pub mod error;
pub mod lattice;
pub mod planarity;
pub mod poset;

pub use error::{Error, Result};
pub use lattice::{IrreducibleSets, Lattice};
pub use poset::{find_embedding, CanonicalForm, Embedding, Poset};
