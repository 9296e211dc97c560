//! Numeric tolerances used across the crate.
//!
//! Geometry predicates are tolerance-based: coordinates come from files or
//! floating-point constructions, so "on the boundary", "collinear" and
//! "closed chain" are all meant up to a small relative slack. Everything
//! length-like scales with the polygon diameter; angle-like and
//! curvature-like tolerances are absolute.

/// Unit-vector residual: |v|^2 may differ from 1 by at most this.
pub const EPS_UNIT: f64 = 1e-12;

/// Relative geometric tolerance. Point/segment coincidence, duplicate
/// vertices, chain closure and containment checks use
/// `EPS_GEOM * diameter`.
pub const EPS_GEOM: f64 = 1e-9;

/// Absolute tolerance on angles (radians): interior-angle sums, the
/// reflex-notch apex angle.
pub const EPS_ANGLE: f64 = 1e-9;

/// Grazing threshold: a reflection with |cos phi| below this is flagged
/// and the trajectory is excluded from curvature statistics.
pub const EPS_GRAZE: f64 = 1e-8;

/// Minimum flight time, relative to the table diameter. Intersections at
/// ray parameter below `EPS_TIME_REL * diameter` are treated as the
/// departure point itself, not a new collision.
pub const EPS_TIME_REL: f64 = 1e-12;

/// Tangency residual (radians) allowed where a dispersing arc meets its
/// neighbouring offset walls.
pub const EPS_TANGENCY: f64 = 1e-8;

/// Distance residual allowed when checking that eroded-boundary points sit
/// at distance exactly `r` from the source polygon.
pub const EPS_CONTAINMENT: f64 = 1e-8;

/// Convergence tolerance for continued-fraction truncations: depth `n` is
/// reported converged once |value_n - value_{n-1}| drops below this.
pub const CF_CONVERGENCE_TOL: f64 = 1e-10;

/// Default tolerance for calling an angle/pi ratio rational.
pub const TOL_RAT_DEFAULT: f64 = 1e-9;

/// Default denominator bound for rational-approximation reports.
pub const Q_MAX_DEFAULT: u64 = 1_000_000;

/// A trajectory accumulating more grazing reflections than this is cut
/// off; it has degenerated into boundary-sliding noise.
pub const MAX_GRAZING_EVENTS: usize = 100;
