//! Collision detection and the billiard map on the eroded table.
//!
//! States live on the boundary: a point on some component plus the
//! reflection angle `phi` measured from the inward normal, `|phi| < pi/2`.
//! One step flies along the outgoing direction to the earliest boundary
//! intersection and reflects specularly.

use std::fmt;

use serde::Serialize;

use crate::geometry::primitives::{Point2, UnitDir};
use crate::table::erosion::{Component, EquivalentTable};
use crate::tolerances::{EPS_GEOM, EPS_GRAZE, EPS_TIME_REL};

/// A boundary state of the billiard map.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PhaseState {
    pub point: Point2,
    pub component_id: usize,
    /// Reflection angle from the inward normal, in (-pi/2, pi/2).
    pub phi: f64,
    /// Cached outgoing direction `cos(phi) n + sin(phi) n_perp`.
    pub outgoing_dir: UnitDir,
}

impl PhaseState {
    /// Builds a state on `components[component_id]`; `point` must lie on
    /// that component within tolerance.
    pub fn new(
        table: &EquivalentTable,
        component_id: usize,
        point: Point2,
        phi: f64,
    ) -> Result<PhaseState, DynamicsError> {
        let comp = table
            .components()
            .get(component_id)
            .ok_or_else(|| DynamicsError::InvalidState("component id out of range".into()))?;
        let snapped = comp.snap(point);
        if snapped.distance(point) > EPS_GEOM * table.diameter() {
            return Err(DynamicsError::InvalidState(format!(
                "point {point:?} not on component {component_id}"
            )));
        }
        if !(phi.abs() < std::f64::consts::FRAC_PI_2) {
            return Err(DynamicsError::InvalidState(format!(
                "phi {phi} outside (-pi/2, pi/2)"
            )));
        }
        let n = comp.inward_normal_at(snapped);
        let t = n.perp();
        let dir = UnitDir::from_vec(n.as_vec() * phi.cos() + t.as_vec() * phi.sin());
        Ok(PhaseState {
            point: snapped,
            component_id,
            phi,
            outgoing_dir: dir,
        })
    }
}

/// One reflection event along a trajectory.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CollisionEvent {
    /// 1-based index along the trajectory.
    pub index: usize,
    /// Reflection time (equals path length: unit speed).
    pub t: f64,
    /// Flight time since the previous reflection.
    pub tau: f64,
    pub point: Point2,
    pub component_id: usize,
    /// Boundary curvature at the reflection point: 0 or 1/r.
    pub kappa: f64,
    /// Reflection angle from the inward normal.
    pub phi: f64,
    /// |cos(phi)| below the grazing threshold.
    pub grazing: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum DynamicsError {
    /// `reflect` called with a direction not pointing into the boundary.
    NotIncoming,
    /// No component ahead of the ray: the chain has been breached
    /// (table invariant violation).
    NoCollision,
    /// The nearest hit lands within tolerance of a chain joint; the
    /// trajectory terminates as a vertex hit. Carries the event.
    VertexAmbiguity(CollisionEvent),
    /// Unfolding requested for a table with `r > 0`.
    NotPolygonalMode,
    /// Arc-restricted sampling on a table without arcs.
    NoArcs,
    InvalidState(String),
}

impl fmt::Display for DynamicsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynamicsError::NotIncoming => write!(f, "direction does not point into the boundary"),
            DynamicsError::NoCollision => write!(f, "ray escaped the table"),
            DynamicsError::VertexAmbiguity(ev) => {
                write!(f, "collision within tolerance of a chain joint at {:?}", ev.point)
            }
            DynamicsError::NotPolygonalMode => {
                write!(f, "unfolding requires a table with radius 0")
            }
            DynamicsError::NoArcs => write!(f, "table has no dispersing arcs"),
            DynamicsError::InvalidState(msg) => write!(f, "invalid state: {msg}"),
        }
    }
}

impl std::error::Error for DynamicsError {}

/// Specular reflection of an incoming direction off a boundary with the
/// given inward normal.
pub fn reflect(dir: UnitDir, normal: UnitDir) -> Result<UnitDir, DynamicsError> {
    let c = dir.dot(normal);
    if c >= 0.0 {
        return Err(DynamicsError::NotIncoming);
    }
    Ok(UnitDir::from_vec(dir.as_vec() - normal.as_vec() * (2.0 * c)))
}

struct RayHit {
    t: f64,
    point: Point2,
    component_id: usize,
}

fn ray_wall(
    from: Point2,
    dir: UnitDir,
    wall: &crate::table::erosion::Wall,
    t_min: f64,
    eps_len: f64,
) -> Option<f64> {
    let e = wall.b - wall.a;
    let len = e.norm();
    let denom = dir.as_vec().cross(e);
    if denom.abs() <= 1e-15 * len {
        return None;
    }
    let t = (wall.a - from).cross(e) / denom;
    if t <= t_min {
        return None;
    }
    let hit = from + dir.as_vec() * t;
    let s = (hit - wall.a).dot(e) / len;
    if s < -eps_len || s > len + eps_len {
        return None;
    }
    Some(t)
}

fn ray_arc(
    from: Point2,
    dir: UnitDir,
    arc: &crate::table::erosion::DispersingArc,
    t_min: f64,
    eps_len: f64,
) -> Option<f64> {
    let f = from - arc.center;
    let b = 2.0 * f.dot(dir.as_vec());
    let c = f.norm_sq() - arc.radius * arc.radius;
    let disc = b * b - 4.0 * c;
    if disc < 0.0 {
        return None;
    }
    // stable quadratic: avoid cancellation between -b and sqrt(disc)
    let sq = disc.sqrt();
    let q = -0.5 * (b + b.signum() * sq);
    let (mut t1, mut t2) = if q != 0.0 { (q, c / q) } else { (0.0, 0.0) };
    if t1 > t2 {
        std::mem::swap(&mut t1, &mut t2);
    }
    let tol_ang = eps_len / arc.radius;
    for t in [t1, t2] {
        if t > t_min {
            let hit = from + dir.as_vec() * t;
            if arc.covers_angle((hit - arc.center).angle(), tol_ang) {
                return Some(t);
            }
        }
    }
    None
}

fn find_hit(table: &EquivalentTable, from: Point2, dir: UnitDir) -> Option<RayHit> {
    let t_min = EPS_TIME_REL * table.diameter();
    let eps_len = EPS_GEOM * table.diameter();
    let mut best: Option<RayHit> = None;
    for (id, comp) in table.components().iter().enumerate() {
        let t = match comp {
            Component::Wall(w) => ray_wall(from, dir, w, t_min, eps_len),
            Component::Arc(a) => ray_arc(from, dir, a, t_min, eps_len),
        };
        if let Some(t) = t {
            if best.as_ref().map_or(true, |h| t < h.t) {
                best = Some(RayHit {
                    t,
                    point: comp.snap(from + dir.as_vec() * t),
                    component_id: id,
                });
            }
        }
    }
    best
}

/// Earliest boundary intersection of the ray `from + t dir`, as an event
/// with `index = 1` and `t = tau` (callers along a trajectory rebase).
pub fn next_collision(
    table: &EquivalentTable,
    from: Point2,
    dir: UnitDir,
) -> Result<CollisionEvent, DynamicsError> {
    collide(table, from, dir).map(|(ev, _)| ev)
}

/// Shared implementation: the event plus the reflected outgoing direction.
pub(crate) fn collide(
    table: &EquivalentTable,
    from: Point2,
    dir: UnitDir,
) -> Result<(CollisionEvent, UnitDir), DynamicsError> {
    let hit = find_hit(table, from, dir).ok_or(DynamicsError::NoCollision)?;
    let comp = &table.components()[hit.component_id];

    let n = comp.inward_normal_at(hit.point);
    let cos_in = dir.dot(n);
    let outgoing = if cos_in < 0.0 {
        UnitDir::from_vec(dir.as_vec() - n.as_vec() * (2.0 * cos_in))
    } else {
        // tangency within rounding: continue straight, flagged grazing
        dir
    };
    let cos_phi = outgoing.dot(n);
    let phi = outgoing.dot(n.perp()).atan2(cos_phi);

    let event = CollisionEvent {
        index: 1,
        t: hit.t,
        tau: hit.t,
        point: hit.point,
        component_id: hit.component_id,
        kappa: comp.kappa(),
        phi,
        grazing: cos_phi.abs() < EPS_GRAZE,
    };

    let eps_len = EPS_GEOM * table.diameter();
    if hit.point.distance(comp.start_point()) <= eps_len
        || hit.point.distance(comp.end_point()) <= eps_len
    {
        return Err(DynamicsError::VertexAmbiguity(event));
    }
    Ok((event, outgoing))
}

/// One application of the billiard map.
pub fn step(
    table: &EquivalentTable,
    state: &PhaseState,
) -> Result<(PhaseState, CollisionEvent), DynamicsError> {
    let (event, outgoing) = collide(table, state.point, state.outgoing_dir)?;
    let next = PhaseState {
        point: event.point,
        component_id: event.component_id,
        phi: event.phi,
        outgoing_dir: outgoing,
    };
    Ok((next, event))
}
