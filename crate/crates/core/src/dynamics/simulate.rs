//! Trajectory generation.
//!
//! `simulate` iterates the billiard map and records every reflection.
//! Trajectories stop at a bounce or time limit, when a collision lands on
//! a chain joint (vertex hit — the reflection there is undefined), or
//! when grazing reflections pile up beyond the cutoff.

use serde::Serialize;

use super::collision::{collide, CollisionEvent, DynamicsError, PhaseState};
use crate::table::erosion::EquivalentTable;
use crate::tolerances::MAX_GRAZING_EVENTS;

/// Why a trajectory ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Termination {
    BounceLimit,
    TimeLimit,
    /// A collision landed on a chain joint.
    VertexHit,
    /// More than the allowed number of grazing reflections.
    GrazingOverflow,
}

/// A simulated trajectory.
#[derive(Clone, Debug)]
pub struct TrajectoryRecord {
    pub initial: PhaseState,
    pub events: Vec<CollisionEvent>,
    pub termination: Termination,
    /// Number of reflections off dispersing arcs.
    pub arc_hits: usize,
    /// Number of grazing-flagged reflections.
    pub grazing_events: usize,
    /// Radius of the table the trajectory ran on.
    pub table_radius: f64,
}

impl TrajectoryRecord {
    /// Time of the last reflection (path length at unit speed).
    pub fn total_time(&self) -> f64 {
        self.events.last().map_or(0.0, |e| e.t)
    }

    pub fn has_grazing(&self) -> bool {
        self.grazing_events > 0
    }
}

pub(crate) struct DriveOutcome {
    pub termination: Termination,
    pub bounces: usize,
    pub arc_hits: usize,
    pub grazing_events: usize,
    pub last_t: f64,
}

/// The single trajectory loop shared by `simulate`, ensemble analysis and
/// event export. Events are renumbered along the trajectory and handed to
/// `on_event` in order.
pub(crate) fn drive(
    table: &EquivalentTable,
    s0: &PhaseState,
    max_bounces: usize,
    max_time: f64,
    mut on_event: impl FnMut(&CollisionEvent),
) -> DriveOutcome {
    let time_cap = if max_time > 0.0 { max_time } else { f64::INFINITY };
    let mut state = *s0;
    let mut bounces = 0usize;
    let mut arc_hits = 0usize;
    let mut grazing_events = 0usize;
    let mut last_t = 0.0f64;

    let termination = loop {
        if bounces >= max_bounces {
            break Termination::BounceLimit;
        }
        match collide(table, state.point, state.outgoing_dir) {
            Ok((mut event, outgoing)) => {
                event.index = bounces + 1;
                event.t = last_t + event.tau;
                if event.t > time_cap {
                    break Termination::TimeLimit;
                }
                bounces += 1;
                last_t = event.t;
                if event.kappa > 0.0 {
                    arc_hits += 1;
                }
                if event.grazing {
                    grazing_events += 1;
                }
                on_event(&event);
                if grazing_events > MAX_GRAZING_EVENTS {
                    break Termination::GrazingOverflow;
                }
                state = PhaseState {
                    point: event.point,
                    component_id: event.component_id,
                    phi: event.phi,
                    outgoing_dir: outgoing,
                };
            }
            Err(DynamicsError::VertexAmbiguity(mut event)) => {
                event.index = bounces + 1;
                event.t = last_t + event.tau;
                if event.t <= time_cap {
                    bounces += 1;
                    if event.kappa > 0.0 {
                        arc_hits += 1;
                    }
                    if event.grazing {
                        grazing_events += 1;
                    }
                    on_event(&event);
                }
                break Termination::VertexHit;
            }
            Err(DynamicsError::NoCollision) => {
                panic!(
                    "ray escaped the table from {:?} along {:?}: boundary chain breached",
                    state.point, state.outgoing_dir
                );
            }
            Err(e) => panic!("unexpected dynamics error: {e}"),
        }
    };

    DriveOutcome {
        termination,
        bounces,
        arc_hits,
        grazing_events,
        last_t,
    }
}

/// Runs the billiard map from `s0` until a limit or a vertex hit.
pub fn simulate(
    table: &EquivalentTable,
    s0: PhaseState,
    max_bounces: usize,
    max_time: f64,
) -> TrajectoryRecord {
    assert!(
        max_bounces >= 1 || max_time > 0.0,
        "need a bounce or time limit"
    );
    let mut events = Vec::new();
    let outcome = drive(table, &s0, max_bounces, max_time, |ev| events.push(*ev));
    TrajectoryRecord {
        initial: s0,
        events,
        termination: outcome.termination,
        arc_hits: outcome.arc_hits,
        grazing_events: outcome.grazing_events,
        table_radius: table.radius(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::sampling::{sample_initial, SamplingMode};
    use crate::geometry::polygon::{l_polygon, unit_square};
    use crate::geometry::primitives::Point2;
    use crate::table::erosion::build_equivalent_table;

    #[test]
    fn normal_incidence_bounces_forever() {
        let t = build_equivalent_table(&unit_square(), 0.1).unwrap();
        let s0 = PhaseState::new(&t, 0, Point2::new(0.5, 0.1), 0.0).unwrap();
        let rec = simulate(&t, s0, 10, 0.0);
        assert_eq!(rec.termination, Termination::BounceLimit);
        assert_eq!(rec.events.len(), 10);
        for ev in &rec.events {
            assert!(ev.phi.abs() < 1e-12);
            assert_eq!(ev.kappa, 0.0);
        }
        assert_eq!(rec.arc_hits, 0);
        // ten flights of length 0.8 between the parallel walls
        assert!((rec.total_time() - 8.0).abs() < 1e-9);
    }

    #[test]
    fn event_times_are_strictly_increasing() {
        let t = build_equivalent_table(&l_polygon(), 0.2).unwrap();
        let s0 = sample_initial(&t, 17, 0);
        let rec = simulate(&t, s0, 500, 0.0);
        let mut prev = 0.0;
        for ev in &rec.events {
            assert!(ev.t > prev);
            assert!((ev.t - prev - ev.tau).abs() < 1e-12);
            assert!(ev.tau > 0.0);
            prev = ev.t;
        }
    }

    #[test]
    fn time_limit_cuts_the_trajectory() {
        let t = build_equivalent_table(&unit_square(), 0.1).unwrap();
        let s0 = PhaseState::new(&t, 0, Point2::new(0.5, 0.1), 0.0).unwrap();
        let rec = simulate(&t, s0, 1_000_000, 2.0);
        assert_eq!(rec.termination, Termination::TimeLimit);
        assert!(rec.total_time() <= 2.0);
        assert_eq!(rec.events.len(), 2); // flights of 0.8 each
    }

    #[test]
    fn aiming_at_a_miter_corner_is_a_vertex_hit() {
        let t = build_equivalent_table(&unit_square(), 0.1).unwrap();
        // from (0.5, 0.1) toward the corner (0.9, 0.9): direction (0.4, 0.8),
        // i.e. phi = atan(-0.4/0.8) against the bottom wall's frame
        let s0 = PhaseState::new(&t, 0, Point2::new(0.5, 0.1), (-0.5f64).atan()).unwrap();
        let rec = simulate(&t, s0, 100, 0.0);
        assert_eq!(rec.termination, Termination::VertexHit);
        let last = rec.events.last().unwrap();
        assert!(
            (last.point.x - 0.9).abs() < 1e-9 && (last.point.y - 0.9).abs() < 1e-9,
            "stopped at {:?}",
            last.point
        );
    }

    #[test]
    fn unit_speed_and_boundary_containment_hold_along_trajectories() {
        use crate::dynamics::collision::step;
        let t = build_equivalent_table(&l_polygon(), 0.2).unwrap();
        for idx in 0..5 {
            let mut state = sample_initial(&t, 99, idx);
            for _ in 0..200 {
                let Ok((next, ev)) = step(&t, &state) else {
                    break; // vertex hit: fine, just stop checking
                };
                let comp = &t.components()[ev.component_id];
                assert!(comp.snap(ev.point).distance(ev.point) < 1e-9);
                assert!((next.outgoing_dir.as_vec().norm() - 1.0).abs() < 1e-12);
                assert!(next.outgoing_dir.dot(comp.inward_normal_at(ev.point)) > 0.0);
                state = next;
            }
        }
    }

    #[test]
    fn almost_every_start_reaches_the_arc() {
        let t = build_equivalent_table(&l_polygon(), 0.2).unwrap();
        let n = 300;
        let mut with_arc = 0;
        for idx in 0..n {
            let s0 = sample_initial(&t, 5, idx);
            let rec = simulate(&t, s0, 1000, 0.0);
            if rec.arc_hits >= 1 {
                with_arc += 1;
            }
        }
        assert!(
            with_arc as f64 >= 0.99 * n as f64,
            "{with_arc}/{n} trajectories hit the arc"
        );
    }

    #[test]
    fn long_trajectories_reverse_within_tolerance() {
        let t = build_equivalent_table(&l_polygon(), 0.2).unwrap();
        let s0 = sample_initial(&t, 23, 4);
        let rec = simulate(&t, s0, 15, 0.0);
        assert_eq!(rec.termination, Termination::BounceLimit);
        assert!(!rec.has_grazing());
        let last = rec.events.last().unwrap();
        let rev = PhaseState::new(&t, last.component_id, last.point, -last.phi).unwrap();
        let back = simulate(&t, rev, rec.events.len() - 1, 0.0);
        let path = rec.total_time();
        for (ev_back, ev_fwd) in back.events.iter().zip(rec.events.iter().rev().skip(1)) {
            assert!(
                ev_back.point.distance(ev_fwd.point) < 1e-7 * path,
                "reversal mismatch: {:?} vs {:?}",
                ev_back.point,
                ev_fwd.point
            );
        }
    }
}
