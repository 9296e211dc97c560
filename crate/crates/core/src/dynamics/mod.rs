//! Event-driven billiard flow on the equivalent table.

pub mod collision;
pub mod export;
pub mod sampling;
pub mod simulate;
pub mod unfold;

pub use collision::{next_collision, reflect, step, CollisionEvent, DynamicsError, PhaseState};
pub use export::{write_events_csv, EVENTS_CSV_HEADER};
pub use sampling::{sample_by_mode, sample_initial, sample_on_arcs, SamplingMode};
pub use simulate::{simulate, Termination, TrajectoryRecord};
pub use unfold::{unfold, UnfoldingRecord};
