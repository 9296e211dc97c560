//! Billiard dynamics of a hard disc moving in a polygon.
//!
//! A disc of radius `r` bouncing inside a polygon is equivalent to a point
//! particle bouncing inside a smaller table: the polygon eroded inward by
//! `r`. Edges become parallel offset walls; every reflex vertex grows a
//! circular dispersing arc of radius `r`. The crate builds that table,
//! runs the event-driven point billiard on it, and measures the expansion
//! of transverse wavefronts along trajectories (Lyapunov / entropy
//! estimates, continued-fraction diagnostics).
//!
//! Modules:
//! - [`geometry`] — planar primitives, polygon validation, angle and
//!   rationality classification, the symmetric-difference metric, and the
//!   reflex-notch construction.
//! - [`table`] — admissible radius bound and the eroded (equivalent) table.
//! - [`dynamics`] — collision detection, the billiard map, trajectory
//!   simulation, invariant-measure sampling, unfolding.
//! - [`analysis`] — wavefront-curvature propagation, continued fractions,
//!   divergence checks, Lyapunov and entropy estimators, ensemble reports.

pub mod analysis;
pub mod dynamics;
pub mod geometry;
pub mod table;
pub mod tolerances;
