//! Finite groups, Cayley graphs and large induced subgraphs of maximum
//! degree at most one.
//!
//! The crate builds three families of vertex-transitive graphs that carry a
//! vertex set of more than half the vertices inducing a matching: odd graphs,
//! cubic Cayley graphs on dihedral groups (with their cyclic covers) and
//! Cayley graphs on iterated `Z_2` wreath products. It certifies each claim
//! exactly and ships a branch-and-bound search for the largest induced
//! subgraph of bounded degree in arbitrary small graphs.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod group;
pub mod io;
pub mod limits;
pub mod search;
pub mod verify;

pub use constructions::{CayleyContext, CounterexampleInstance, Family};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSubset};
pub use group::{FiniteGroup, GroupHom};
pub use search::{SearchOptions, SearchResult};
pub use verify::Certificate;
