//! Unfolding (method of images) for the polygonal table.
//!
//! Instead of reflecting a trajectory off an edge, reflect the polygon
//! across that edge and let the trajectory continue straight. After `n`
//! reflections the collision points, mapped through the accumulated
//! reflections, must be collinear — a sharp consistency check of the
//! collision and reflection code in the `r = 0` mode.

use super::collision::DynamicsError;
use super::simulate::TrajectoryRecord;
use crate::geometry::polygon::Polygon;
use crate::geometry::primitives::{Point2, RigidTransform};

/// Reflected polygon copies and the straightened trajectory.
#[derive(Clone, Debug)]
pub struct UnfoldingRecord {
    /// `transforms[k]` maps the source polygon onto its k-th copy;
    /// `transforms[0]` is the identity.
    pub transforms: Vec<RigidTransform>,
    /// Start point followed by every collision point in unfolded
    /// coordinates.
    pub points: Vec<Point2>,
    /// Largest perpendicular deviation of the points from the line
    /// through the first and last.
    pub collinearity_residual: f64,
}

/// Unfolds a trajectory recorded on the `r = 0` table of `p`.
pub fn unfold(p: &Polygon, rec: &TrajectoryRecord) -> Result<UnfoldingRecord, DynamicsError> {
    if rec.table_radius != 0.0 {
        return Err(DynamicsError::NotPolygonalMode);
    }

    let mut transforms = vec![RigidTransform::identity()];
    let mut points = Vec::with_capacity(rec.events.len() + 1);
    points.push(rec.initial.point);

    let mut current = RigidTransform::identity();
    for ev in &rec.events {
        // the k-th collision point unfolds through the first k-1 mirrors
        points.push(current.apply(ev.point));
        let (a, b) = p.edge(ev.component_id);
        current = current.compose(&RigidTransform::reflection_across(a, b));
        transforms.push(current);
    }

    Ok(UnfoldingRecord {
        transforms,
        points: points.clone(),
        collinearity_residual: max_line_deviation(&points),
    })
}

fn max_line_deviation(points: &[Point2]) -> f64 {
    if points.len() < 3 {
        return 0.0;
    }
    let first = points[0];
    let last = points[points.len() - 1];
    let chord = last - first;
    let len = chord.norm();
    if len == 0.0 {
        return points
            .iter()
            .map(|q| q.distance(first))
            .fold(0.0, f64::max);
    }
    points
        .iter()
        .map(|q| (*q - first).cross(chord).abs() / len)
        .fold(0.0, f64::max)
}
