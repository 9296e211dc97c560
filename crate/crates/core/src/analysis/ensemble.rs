//! Ensemble statistics.
//!
//! Trajectories are independent given their `(seed, index)` streams, so
//! the ensemble maps over indices in parallel and reduces the collected
//! per-trajectory statistics in index order. Results are identical at any
//! thread count.

use rayon::prelude::*;
use serde::Serialize;

use super::curvature::CurvatureState;
use crate::dynamics::sampling::{sample_by_mode, SamplingMode};
use crate::dynamics::simulate::{drive, Termination};
use crate::table::erosion::EquivalentTable;

/// Streaming per-trajectory summary (no event storage).
#[derive(Clone, Debug)]
pub struct TrajectoryStats {
    pub index: u64,
    pub termination: Termination,
    pub bounces: usize,
    pub arc_hits: usize,
    /// 1-based event index of the first arc reflection.
    pub first_arc_hit: Option<usize>,
    pub grazing_events: usize,
    pub log_expansion: f64,
    pub total_time: f64,
    /// Final element sum of the divergence series.
    pub ss_final: f64,
    /// Number of arc-terminated element groups.
    pub ss_groups: usize,
    /// Smallest group increment (infinite when no groups).
    pub ss_min_increment: f64,
    /// `log_expansion / total_time`; `None` for excluded trajectories.
    pub lambda_hat: Option<f64>,
}

impl TrajectoryStats {
    /// Included in estimators: ran to a bounce/time limit without grazing.
    pub fn included(&self) -> bool {
        matches!(
            self.termination,
            Termination::BounceLimit | Termination::TimeLimit
        ) && self.grazing_events == 0
            && self.total_time > 0.0
    }
}

/// Ensemble-level hyperbolicity summary. Field names are the stable JSON
/// interface.
#[derive(Clone, Debug, Serialize)]
pub struct HyperbolicityReport {
    /// Mean expansion rate over included trajectories (1/time).
    pub lambda_mean: f64,
    pub lambda_stderr: f64,
    /// Fraction of included trajectories with at least one arc hit.
    pub arc_hit_fraction: f64,
    /// Mean 1-based bounce index of the first arc hit.
    pub first_arc_hit_mean: Option<f64>,
    /// Mean element-sum growth per arc group; at least `2/r`.
    pub ss_growth_rate: Option<f64>,
    /// Entropy proxy: ensemble mean expansion rate.
    pub entropy_hat: f64,
    pub n_total: usize,
    pub n_excluded_grazing: usize,
    pub n_excluded_vertex: usize,
}

fn run_trajectory(
    table: &EquivalentTable,
    index: u64,
    max_bounces: usize,
    max_time: f64,
    seed: u64,
    mode: SamplingMode,
) -> TrajectoryStats {
    let s0 = sample_by_mode(table, mode, seed, index)
        .expect("sampling mode validated before the ensemble runs");
    let mut cs = CurvatureState::new();
    let mut curvature_poisoned = false;
    let mut first_arc_hit = None;
    let mut last_group_end = 0.0f64;
    let mut ss_min_increment = f64::INFINITY;
    let mut ss_groups = 0usize;

    let outcome = drive(table, &s0, max_bounces, max_time, |ev| {
        if ev.kappa > 0.0 && first_arc_hit.is_none() {
            first_arc_hit = Some(ev.index);
        }
        if !curvature_poisoned {
            match cs.advance(ev) {
                Ok(()) => {
                    if ev.kappa > 0.0 {
                        let increment = cs.ss_partial_sum - last_group_end;
                        ss_min_increment = ss_min_increment.min(increment);
                        last_group_end = cs.ss_partial_sum;
                        ss_groups += 1;
                    }
                }
                Err(_) => curvature_poisoned = true,
            }
        }
    });

    let included = matches!(
        outcome.termination,
        Termination::BounceLimit | Termination::TimeLimit
    ) && outcome.grazing_events == 0
        && outcome.last_t > 0.0;

    TrajectoryStats {
        index,
        termination: outcome.termination,
        bounces: outcome.bounces,
        arc_hits: outcome.arc_hits,
        first_arc_hit,
        grazing_events: outcome.grazing_events,
        log_expansion: cs.log_expansion,
        total_time: outcome.last_t,
        ss_final: cs.ss_partial_sum,
        ss_groups,
        ss_min_increment,
        lambda_hat: included.then(|| cs.log_expansion / outcome.last_t),
    }
}

/// Per-trajectory statistics for `n` trajectories, in index order.
pub fn ensemble_trajectory_stats(
    table: &EquivalentTable,
    n: usize,
    max_bounces: usize,
    max_time: f64,
    seed: u64,
    mode: SamplingMode,
) -> Vec<TrajectoryStats> {
    assert!(n >= 1);
    // fail fast instead of inside the parallel map
    sample_by_mode(table, mode, seed, 0).expect("sampling mode incompatible with this table");
    (0..n as u64)
        .into_par_iter()
        .map(|i| run_trajectory(table, i, max_bounces, max_time, seed, mode))
        .collect()
}

/// Runs `n` trajectories and aggregates the hyperbolicity summary.
/// Deterministic for a fixed seed at any parallelism level.
pub fn ensemble_report(
    table: &EquivalentTable,
    n: usize,
    max_bounces: usize,
    seed: u64,
    mode: SamplingMode,
) -> HyperbolicityReport {
    ensemble_report_with_time(table, n, max_bounces, 0.0, seed, mode)
}

/// [`ensemble_report`] with an additional time cap (`<= 0` disables it).
pub fn ensemble_report_with_time(
    table: &EquivalentTable,
    n: usize,
    max_bounces: usize,
    max_time: f64,
    seed: u64,
    mode: SamplingMode,
) -> HyperbolicityReport {
    let stats = ensemble_trajectory_stats(table, n, max_bounces, max_time, seed, mode);
    aggregate(&stats)
}

/// Sequential, index-ordered reduction of per-trajectory statistics.
pub fn aggregate(stats: &[TrajectoryStats]) -> HyperbolicityReport {
    let n_total = stats.len();
    let mut n_excluded_grazing = 0;
    let mut n_excluded_vertex = 0;

    let mut lambdas = Vec::with_capacity(n_total);
    let mut with_arc = 0usize;
    let mut included = 0usize;
    let mut first_hits = 0.0f64;
    let mut first_hit_count = 0usize;
    let mut growth_sum = 0.0f64;
    let mut growth_count = 0usize;

    for s in stats {
        if s.grazing_events > 0 || s.termination == Termination::GrazingOverflow {
            n_excluded_grazing += 1;
            continue;
        }
        if s.termination == Termination::VertexHit {
            n_excluded_vertex += 1;
            continue;
        }
        let Some(lambda) = s.lambda_hat else {
            n_excluded_vertex += 1;
            continue;
        };
        included += 1;
        lambdas.push(lambda);
        if s.arc_hits > 0 {
            with_arc += 1;
        }
        if let Some(i) = s.first_arc_hit {
            first_hits += i as f64;
            first_hit_count += 1;
        }
        if s.ss_groups > 0 {
            growth_sum += s.ss_final / s.ss_groups as f64;
            growth_count += 1;
        }
    }

    let m = included as f64;
    let lambda_mean = if included > 0 {
        lambdas.iter().sum::<f64>() / m
    } else {
        0.0
    };
    let lambda_stderr = if included > 1 {
        let var = lambdas
            .iter()
            .map(|l| (l - lambda_mean).powi(2))
            .sum::<f64>()
            / (m - 1.0);
        (var / m).sqrt()
    } else {
        0.0
    };

    HyperbolicityReport {
        lambda_mean,
        lambda_stderr,
        arc_hit_fraction: if included > 0 {
            with_arc as f64 / m
        } else {
            0.0
        },
        first_arc_hit_mean: (first_hit_count > 0).then(|| first_hits / first_hit_count as f64),
        ss_growth_rate: (growth_count > 0).then(|| growth_sum / growth_count as f64),
        entropy_hat: lambda_mean,
        n_total,
        n_excluded_grazing,
        n_excluded_vertex,
    }
}
