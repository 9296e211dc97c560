//! The equivalent mathematical table of a hard-disc billiard: the
//! admissible radius bound, the inward erosion, and arc flattening.

pub mod erosion;
pub mod flatten;
pub mod radius;

pub use erosion::{
    build_equivalent_table, Component, DispersingArc, EquivalentTable, TableError, Wall,
};
pub use flatten::flatten_arcs;
pub use radius::{compute_rk, compute_rp};
