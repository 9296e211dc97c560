//! Wavefront-curvature propagation along a trajectory.
//!
//! A plane wavefront (curvature 0) launched along the orbit evolves by
//! two rules. Free flight over time `tau` relaxes the curvature,
//! `B <- B / (1 + tau B)`, while the front width multiplies by
//! `1 + tau B`. A reflection adds `2 kappa / cos(phi)` — zero at flat
//! walls, `2 / (r cos(phi))` at dispersing arcs — and leaves the width
//! unchanged. With `B0 = 0`, flat-wall-only orbits accumulate exactly
//! zero expansion; the first arc hit makes `B` positive and every
//! subsequent flight expands the front.
//!
//! The flight times and arc reflection terms are also the elements of the
//! orbit's continued fraction (flat-wall terms vanish and merge adjacent
//! flights, so consecutive wall flights group into a single element), and
//! their running total is the divergence witness for the Seidel-Stern
//! criterion.

use std::fmt;

use super::contfrac::IncrementalCf;
use crate::dynamics::collision::CollisionEvent;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnalysisError {
    /// Event flagged grazing: `2 kappa / cos(phi)` is unusable.
    GrazingExcluded,
    /// Trajectory has no arc reflections.
    NoArcHits,
    /// Trajectory excluded from estimators (vertex hit, grazing, or cut
    /// off).
    ExcludedTrajectory,
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::GrazingExcluded => write!(f, "grazing event excluded from curvature"),
            AnalysisError::NoArcHits => write!(f, "trajectory never hits a dispersing arc"),
            AnalysisError::ExcludedTrajectory => {
                write!(f, "trajectory excluded from estimators")
            }
        }
    }
}

impl std::error::Error for AnalysisError {}

/// Running hyperbolicity ledger of one trajectory.
#[derive(Clone, Debug)]
pub struct CurvatureState {
    /// Wavefront curvature just after the last reflection; nonnegative.
    pub b: f64,
    /// Accumulated `ln(1 + tau B)` over all flights.
    pub log_expansion: f64,
    /// Continued-fraction elements consumed so far (all positive):
    /// alternating grouped flight times and arc reflection terms.
    pub cf_elements: Vec<f64>,
    /// Current truncation value of the continued fraction.
    pub cf_truncation: f64,
    /// Running sum of all elements (the divergence witness); nondecreasing.
    pub ss_partial_sum: f64,
    /// Flight time accumulated since the last arc reflection.
    pending_tau: f64,
    cf: IncrementalCf,
    events_consumed: usize,
    arc_hits: usize,
}

impl Default for CurvatureState {
    fn default() -> Self {
        Self::new()
    }
}

impl CurvatureState {
    /// Plane-wave initial front: `B0 = 0`.
    pub fn new() -> Self {
        CurvatureState {
            b: 0.0,
            log_expansion: 0.0,
            cf_elements: Vec::new(),
            cf_truncation: f64::NAN,
            ss_partial_sum: 0.0,
            pending_tau: 0.0,
            cf: IncrementalCf::new(),
            events_consumed: 0,
            arc_hits: 0,
        }
    }

    /// Consumes one collision event: the flight into it, then the
    /// reflection.
    pub fn advance(&mut self, ev: &CollisionEvent) -> Result<(), AnalysisError> {
        if ev.grazing {
            return Err(AnalysisError::GrazingExcluded);
        }
        debug_assert!(ev.tau > 0.0);

        let b_pre = self.b;
        let growth = ev.tau * b_pre;
        self.log_expansion += growth.ln_1p();
        self.b = b_pre / (1.0 + growth);
        debug_assert!(self.b >= 0.0 && self.b <= b_pre.max(0.0) + f64::EPSILON);
        self.pending_tau += ev.tau;

        if ev.kappa > 0.0 {
            let term = 2.0 * ev.kappa / ev.phi.cos();
            debug_assert!(term > 0.0);
            self.cf_elements.push(self.pending_tau);
            self.cf.push(self.pending_tau);
            self.cf_elements.push(term);
            self.cf.push(term);
            self.ss_partial_sum += self.pending_tau + term;
            self.cf_truncation = self.cf.value();
            self.pending_tau = 0.0;
            self.b += term;
            self.arc_hits += 1;
        }
        self.events_consumed += 1;
        Ok(())
    }

    pub fn events_consumed(&self) -> usize {
        self.events_consumed
    }

    pub fn arc_hits(&self) -> usize {
        self.arc_hits
    }

    /// Depth at which the continued fraction numerically converged, if it
    /// has.
    pub fn cf_converged_at(&self) -> Option<usize> {
        self.cf.converged_at()
    }
}

/// Pure-function form: returns the state after consuming `ev`.
pub fn propagate_curvature(
    cs: &CurvatureState,
    ev: &CollisionEvent,
) -> Result<CurvatureState, AnalysisError> {
    let mut next = cs.clone();
    next.advance(ev)?;
    Ok(next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::primitives::Point2;

    fn event(tau: f64, kappa: f64, phi: f64, grazing: bool) -> CollisionEvent {
        CollisionEvent {
            index: 1,
            t: tau,
            tau,
            point: Point2::new(0.0, 0.0),
            component_id: 0,
            kappa,
            phi,
            grazing,
        }
    }

    #[test]
    fn flat_walls_leave_a_flat_front_flat() {
        let mut cs = CurvatureState::new();
        for _ in 0..100 {
            cs.advance(&event(1.0, 0.0, 0.3, false)).unwrap();
        }
        assert_eq!(cs.b, 0.0);
        assert_eq!(cs.log_expansion, 0.0);
        assert!(cs.cf_elements.is_empty());
        assert_eq!(cs.ss_partial_sum, 0.0);
    }

    #[test]
    fn head_on_arc_reflection_jumps_the_curvature() {
        let mut cs = CurvatureState::new();
        cs.advance(&event(1.0, 5.0, 0.0, false)).unwrap();
        // 2 kappa / cos(0) = 2 / (0.2 * 1) = 10
        assert!((cs.b - 10.0).abs() < 1e-15);
        assert_eq!(cs.log_expansion, 0.0); // front was flat during the flight
        assert_eq!(cs.cf_elements, vec![1.0, 10.0]);
        assert!((cs.ss_partial_sum - 11.0).abs() < 1e-15);
        assert!((cs.cf_truncation - 10.0 / 11.0).abs() < 1e-15);
    }

    #[test]
    fn free_flight_relaxes_curvature_and_logs_expansion() {
        let mut cs = CurvatureState::new();
        cs.advance(&event(1.0, 5.0, 0.0, false)).unwrap();
        cs.advance(&event(0.5, 0.0, 0.1, false)).unwrap();
        // B = 10 -> 10 / (1 + 0.5 * 10) = 10/6
        assert!((cs.b - 10.0 / 6.0).abs() < 1e-12);
        assert!((cs.log_expansion - 6f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn grouped_flights_merge_into_one_element() {
        let mut cs = CurvatureState::new();
        cs.advance(&event(1.0, 0.0, 0.2, false)).unwrap();
        cs.advance(&event(2.0, 0.0, -0.4, false)).unwrap();
        cs.advance(&event(0.5, 5.0, 0.0, false)).unwrap();
        assert_eq!(cs.cf_elements, vec![3.5, 10.0]);
    }

    #[test]
    fn grazing_events_are_refused() {
        let mut cs = CurvatureState::new();
        assert_eq!(
            cs.advance(&event(1.0, 5.0, 1.5707963, true)).unwrap_err(),
            AnalysisError::GrazingExcluded
        );
    }

    #[test]
    fn positivity_after_the_first_arc_hit() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        let mut cs = CurvatureState::new();
        cs.advance(&event(0.7, 5.0, 0.3, false)).unwrap();
        let mut prev_log = cs.log_expansion;
        for _ in 0..500 {
            let tau = 0.1 + rng.random::<f64>();
            cs.advance(&event(tau, 0.0, 0.0, false)).unwrap();
            assert!(cs.b > 0.0);
            assert!(cs.log_expansion > prev_log, "expansion must strictly grow");
            prev_log = cs.log_expansion;
        }
    }

    #[test]
    fn partial_sums_never_decrease() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let mut cs = CurvatureState::new();
        let mut prev = 0.0;
        for _ in 0..300 {
            let arc = rng.random::<f64>() < 0.3;
            let kappa = if arc { 5.0 } else { 0.0 };
            let phi = 1.2 * (rng.random::<f64>() - 0.5);
            cs.advance(&event(0.2 + rng.random::<f64>(), kappa, phi, false))
                .unwrap();
            assert!(cs.ss_partial_sum >= prev);
            prev = cs.ss_partial_sum;
        }
    }

    #[test]
    fn propagate_is_pure() {
        let cs = CurvatureState::new();
        let next = propagate_curvature(&cs, &event(1.0, 5.0, 0.0, false)).unwrap();
        assert_eq!(cs.b, 0.0);
        assert!((next.b - 10.0).abs() < 1e-15);
    }
}
