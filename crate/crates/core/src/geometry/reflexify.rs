//! Turning an edge into a reflex notch.
//!
//! One edge is replaced by two edges meeting at a new vertex on the edge's
//! perpendicular bisector, pushed into the interior just far enough that
//! the interior angle at the new vertex is exactly `pi + pi/k`. As `k`
//! grows the notch flattens and the perturbed polygon converges to the
//! original in the symmetric-difference metric, while always keeping one
//! reflex vertex.

use std::f64::consts::PI;
use std::fmt;

use super::polygon::{validate_polygon, Polygon};
use crate::tolerances::EPS_GEOM;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReflexifyError {
    /// Edge index out of range.
    InvalidEdge,
    /// The apex for this `k` does not lie strictly inside the polygon
    /// (or the notched loop fails validation).
    KTooSmall,
}

impl fmt::Display for ReflexifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReflexifyError::InvalidEdge => write!(f, "edge index out of range"),
            ReflexifyError::KTooSmall => {
                write!(f, "k too small: notch apex not strictly inside the polygon")
            }
        }
    }
}

impl std::error::Error for ReflexifyError {}

/// Replaces edge `edge_index` with a reflex notch of interior angle
/// `pi + pi/k` at the apex.
pub fn reflexify(p: &Polygon, edge_index: usize, k: u32) -> Result<Polygon, ReflexifyError> {
    let n = p.len();
    if edge_index >= n {
        return Err(ReflexifyError::InvalidEdge);
    }
    if k < 2 {
        // k = 1 puts the apex at infinity, k = 0 is meaningless
        return Err(ReflexifyError::KTooSmall);
    }
    let (a, b) = p.edge(edge_index);
    let mid = a + (b - a) * 0.5;
    let half_width = 0.5 * a.distance(b);
    // apex angle pi - pi/k over the chord => height (L/2) tan(pi/(2k))
    let h = half_width * (PI / (2.0 * k as f64)).tan();
    let apex = mid + p.edge_inward_normal(edge_index).as_vec() * h;

    if !p.contains_with_clearance(apex, EPS_GEOM * p.diameter()) {
        return Err(ReflexifyError::KTooSmall);
    }

    let mut verts: Vec<_> = p.vertices().to_vec();
    verts.insert(edge_index + 1, apex);
    validate_polygon(&verts).map_err(|_| ReflexifyError::KTooSmall)
}

/// Smallest `k` for which [`reflexify`] succeeds on this edge.
pub fn reflexify_min_k(p: &Polygon, edge_index: usize) -> Result<u32, ReflexifyError> {
    if edge_index >= p.len() {
        return Err(ReflexifyError::InvalidEdge);
    }
    const K_CAP: u32 = 1 << 24;
    // The apex height decreases monotonically in k, so feasibility is
    // monotone: find a feasible k by doubling, then binary search.
    let mut hi = 2u32;
    while reflexify(p, edge_index, hi).is_err() {
        if hi >= K_CAP {
            return Err(ReflexifyError::KTooSmall);
        }
        hi = hi.saturating_mul(2);
    }
    let mut lo = hi / 2;
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if reflexify(p, edge_index, mid).is_ok() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}
