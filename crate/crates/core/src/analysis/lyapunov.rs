//! Per-trajectory expansion-rate estimate.
//!
//! The time-averaged Lyapunov estimate is the accumulated front
//! log-expansion divided by elapsed time. Flat-wall-only trajectories give
//! exactly zero; any arc reflection makes the estimate strictly positive.

use super::curvature::{AnalysisError, CurvatureState};
use crate::dynamics::simulate::{Termination, TrajectoryRecord};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LyapunovEstimate {
    /// Log-expansion per unit time (1/time units).
    pub lambda_hat: f64,
    pub total_time: f64,
    pub log_expansion: f64,
}

/// Runs the curvature recursion over the whole record and returns the
/// final state. Fails on grazing-flagged events.
pub fn curvature_log(rec: &TrajectoryRecord) -> Result<CurvatureState, AnalysisError> {
    let mut cs = CurvatureState::new();
    for ev in &rec.events {
        cs.advance(ev)?;
    }
    Ok(cs)
}

/// Time-averaged expansion rate of a completed trajectory.
///
/// Vertex-hit, cut-off, and grazing-flagged trajectories are excluded:
/// they are measure-zero sets that poison the statistics.
pub fn lyapunov_estimate(rec: &TrajectoryRecord) -> Result<LyapunovEstimate, AnalysisError> {
    match rec.termination {
        Termination::BounceLimit | Termination::TimeLimit => {}
        Termination::VertexHit | Termination::GrazingOverflow => {
            return Err(AnalysisError::ExcludedTrajectory)
        }
    }
    if rec.has_grazing() {
        return Err(AnalysisError::ExcludedTrajectory);
    }
    let total_time = rec.total_time();
    if total_time <= 0.0 {
        return Err(AnalysisError::ExcludedTrajectory);
    }
    let cs = curvature_log(rec)?;
    Ok(LyapunovEstimate {
        lambda_hat: cs.log_expansion / total_time,
        total_time,
        log_expansion: cs.log_expansion,
    })
}
