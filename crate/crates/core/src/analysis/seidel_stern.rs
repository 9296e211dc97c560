//! Numerical divergence witness for continued-fraction convergence.
//!
//! A continued fraction with positive elements converges exactly when the
//! sum of its elements diverges (Seidel-Stern). Along an orbit the
//! element sum groups naturally by arc reflections: each group is the
//! flight time since the previous arc hit plus the reflection term
//! `2 / (r cos(phi))`, so every group contributes at least `2/r`. The
//! check reports the running group sums and whether the total clears a
//! fixed scale-aware threshold.

use super::curvature::AnalysisError;
use crate::dynamics::simulate::TrajectoryRecord;

/// Grouped partial sums of the element series.
#[derive(Clone, Debug)]
pub struct SeidelSternResult {
    /// Partial sum after each arc-terminated group; nondecreasing.
    pub partial_sums: Vec<f64>,
    /// Final sum exceeds the divergence threshold.
    pub diverges_numerically: bool,
    /// The threshold used: `1000 * (2 / r)`.
    pub threshold: f64,
}

/// Computes the grouped partial sums for a trajectory with at least one
/// arc hit and no grazing events.
pub fn seidel_stern_check(rec: &TrajectoryRecord) -> Result<SeidelSternResult, AnalysisError> {
    if rec.has_grazing() {
        return Err(AnalysisError::GrazingExcluded);
    }
    if rec.arc_hits == 0 {
        return Err(AnalysisError::NoArcHits);
    }
    let r = rec.table_radius;
    debug_assert!(r > 0.0, "arc hits imply a positive radius");

    let mut partial_sums = Vec::with_capacity(rec.arc_hits);
    let mut running = 0.0;
    let mut pending_tau = 0.0;
    for ev in &rec.events {
        pending_tau += ev.tau;
        if ev.kappa > 0.0 {
            running += pending_tau + 2.0 * ev.kappa / ev.phi.cos();
            partial_sums.push(running);
            pending_tau = 0.0;
        }
    }
    let threshold = 1000.0 * (2.0 / r);
    let diverges_numerically = running > threshold;
    Ok(SeidelSternResult {
        partial_sums,
        diverges_numerically,
        threshold,
    })
}
