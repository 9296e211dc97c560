//! The equivalent (eroded) billiard table.
//!
//! The center of a disc of radius `r` moving inside polygon `P` traces the
//! dynamics of a point particle inside `P` eroded inward by `r`: every
//! edge shifts along its inward normal, adjacent offset walls meet at
//! their intersection under convex vertices, and every reflex vertex
//! becomes a circular arc of radius `r` centered at that vertex. The arc
//! bulges into the table (curvature `+1/r` with respect to the inward
//! normal), which is what makes the table semi-dispersing.
//!
//! With `r = 0` the table is the polygon itself.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use super::radius::compute_rp;
use crate::geometry::polygon::Polygon;
use crate::geometry::primitives::{
    dist_point_segment, dist_segment_segment, line_line_intersection, Point2, UnitDir, Vec2,
};
use crate::tolerances::{EPS_GEOM, EPS_TANGENCY};

/// A flat boundary component (curvature 0).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Wall {
    pub a: Point2,
    pub b: Point2,
    pub inward_normal: UnitDir,
    /// Index of the polygon edge this wall offsets.
    pub source_edge: usize,
}

/// A dispersing circular component (curvature `+1/r`), centered at a
/// reflex vertex of the source polygon.
///
/// The chain traverses the arc clockwise: from `angle_start` down to
/// `angle_end = angle_start - span`, `span` in `(0, pi)`. Both endpoints
/// meet the neighbouring offset walls tangentially.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DispersingArc {
    pub center: Point2,
    pub radius: f64,
    pub angle_start: f64,
    pub angle_end: f64,
    /// Index of the source reflex vertex.
    pub source_vertex: usize,
}

impl Wall {
    pub fn dir(&self) -> UnitDir {
        UnitDir::from_vec(self.b - self.a)
    }

    pub fn length(&self) -> f64 {
        self.a.distance(self.b)
    }
}

impl DispersingArc {
    /// Angular extent (positive).
    pub fn span(&self) -> f64 {
        self.angle_start - self.angle_end
    }

    pub fn length(&self) -> f64 {
        self.radius * self.span()
    }

    pub fn point_at_angle(&self, alpha: f64) -> Point2 {
        self.center + Vec2::new(alpha.cos(), alpha.sin()) * self.radius
    }

    pub fn start_point(&self) -> Point2 {
        self.point_at_angle(self.angle_start)
    }

    pub fn end_point(&self) -> Point2 {
        self.point_at_angle(self.angle_end)
    }

    /// Inward normal at a boundary point: radially away from the center,
    /// since the table lies outside the circle.
    pub fn inward_normal_at(&self, p: Point2) -> UnitDir {
        UnitDir::from_vec(p - self.center)
    }

    /// Unit tangent in traversal (clockwise) direction at angle `alpha`.
    pub fn tangent_at_angle(&self, alpha: f64) -> UnitDir {
        UnitDir::from_vec(Vec2::new(alpha.sin(), -alpha.cos()))
    }

    /// Whether the direction `angle` falls within the arc's angular span,
    /// with `tol` radians of slack at both ends.
    pub fn covers_angle(&self, angle: f64, tol: f64) -> bool {
        let delta = (self.angle_start - angle).rem_euclid(2.0 * PI);
        delta <= self.span() + tol || delta >= 2.0 * PI - tol
    }
}

/// One boundary component of the eroded table.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Component {
    Wall(Wall),
    Arc(DispersingArc),
}

impl Component {
    pub fn start_point(&self) -> Point2 {
        match self {
            Component::Wall(w) => w.a,
            Component::Arc(a) => a.start_point(),
        }
    }

    pub fn end_point(&self) -> Point2 {
        match self {
            Component::Wall(w) => w.b,
            Component::Arc(a) => a.end_point(),
        }
    }

    pub fn length(&self) -> f64 {
        match self {
            Component::Wall(w) => w.length(),
            Component::Arc(a) => a.length(),
        }
    }

    /// Boundary curvature with respect to the inward normal.
    pub fn kappa(&self) -> f64 {
        match self {
            Component::Wall(_) => 0.0,
            Component::Arc(a) => 1.0 / a.radius,
        }
    }

    pub fn is_arc(&self) -> bool {
        matches!(self, Component::Arc(_))
    }

    /// Point at arclength `s` from the component start.
    pub fn point_at_arclength(&self, s: f64) -> Point2 {
        match self {
            Component::Wall(w) => {
                let t = (s / w.length()).clamp(0.0, 1.0);
                w.a + (w.b - w.a) * t
            }
            Component::Arc(a) => a.point_at_angle(a.angle_start - s / a.radius),
        }
    }

    pub fn inward_normal_at(&self, p: Point2) -> UnitDir {
        match self {
            Component::Wall(w) => w.inward_normal,
            Component::Arc(a) => a.inward_normal_at(p),
        }
    }

    /// Projects `p` onto the component (used to cancel drift after long
    /// trajectories).
    pub fn snap(&self, p: Point2) -> Point2 {
        match self {
            Component::Wall(w) => {
                let ab = w.b - w.a;
                let t = ((p - w.a).dot(ab) / ab.norm_sq()).clamp(0.0, 1.0);
                w.a + ab * t
            }
            Component::Arc(a) => a.center + a.inward_normal_at(p).as_vec() * a.radius,
        }
    }
}

/// Why table construction was rejected.
#[derive(Clone, Debug, PartialEq)]
pub enum TableError {
    /// `r >= r_P`: parts of the boundary become unreachable for the disc;
    /// this regime is rejected.
    RadiusTooLarge { r: f64, r_p: f64 },
    NegativeRadius,
    /// Numeric validation of the eroded chain failed.
    ErosionInvalid(String),
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::RadiusTooLarge { r, r_p } => {
                write!(f, "disc radius {r} not below the admissible bound r_P = {r_p}")
            }
            TableError::NegativeRadius => write!(f, "disc radius must be nonnegative"),
            TableError::ErosionInvalid(msg) => write!(f, "eroded boundary invalid: {msg}"),
        }
    }
}

impl std::error::Error for TableError {}

/// The eroded table: a closed simple chain of walls and dispersing arcs.
#[derive(Clone, Debug)]
pub struct EquivalentTable {
    components: Vec<Component>,
    radius: f64,
    source: Polygon,
    total_length: f64,
}

/// Builds the equivalent table for a disc of radius `r` in polygon `p`.
///
/// Requires `0 <= r < r_P`. With `r = 0` the components are exactly the
/// polygon edges.
pub fn build_equivalent_table(p: &Polygon, r: f64) -> Result<EquivalentTable, TableError> {
    if r < 0.0 || !r.is_finite() {
        return Err(TableError::NegativeRadius);
    }
    let r_p = compute_rp(p);
    if r > 0.0 && r >= r_p {
        return Err(TableError::RadiusTooLarge { r, r_p });
    }

    let n = p.len();
    let mut components = Vec::with_capacity(n + p.reflex_count());

    if r == 0.0 {
        for i in 0..n {
            let (a, b) = p.edge(i);
            components.push(Component::Wall(Wall {
                a,
                b,
                inward_normal: p.edge_inward_normal(i),
                source_edge: i,
            }));
        }
        return EquivalentTable::assemble(components, r, p.clone());
    }

    let angles = p.interior_angles();
    let normals: Vec<UnitDir> = (0..n).map(|i| p.edge_inward_normal(i)).collect();

    // Junction under each vertex: a miter point where the two offset
    // lines meet (convex), or the pair of tangent points bridged by an
    // arc (reflex).
    enum Join {
        Miter(Point2),
        Arc,
    }
    let mut joins = Vec::with_capacity(n);
    for i in 0..n {
        if angles[i].is_reflex {
            joins.push(Join::Arc);
        } else {
            let prev = (i + n - 1) % n;
            let (pa, _) = p.edge(prev);
            let (ca, _) = p.edge(i);
            let q = line_line_intersection(
                pa + normals[prev].as_vec() * r,
                p.edge_dir(prev).as_vec(),
                ca + normals[i].as_vec() * r,
                p.edge_dir(i).as_vec(),
            )
            .ok_or_else(|| {
                TableError::ErosionInvalid(format!("offset lines parallel at vertex {i}"))
            })?;
            joins.push(Join::Miter(q));
        }
    }

    let eps_len = EPS_GEOM * p.diameter();
    let mut walls = Vec::with_capacity(n);
    for i in 0..n {
        let (a, b) = p.edge(i);
        let start = match &joins[i] {
            Join::Miter(q) => *q,
            Join::Arc => a + normals[i].as_vec() * r,
        };
        let end = match &joins[(i + 1) % n] {
            Join::Miter(q) => *q,
            Join::Arc => b + normals[i].as_vec() * r,
        };
        if start.distance(end) <= eps_len || (end - start).dot(p.edge_dir(i).as_vec()) <= 0.0 {
            return Err(TableError::ErosionInvalid(format!(
                "offset wall of edge {i} collapsed"
            )));
        }
        walls.push(Wall {
            a: start,
            b: end,
            inward_normal: normals[i],
            source_edge: i,
        });
    }

    for i in 0..n {
        components.push(Component::Wall(walls[i]));
        let vnext = (i + 1) % n;
        if angles[vnext].is_reflex {
            let center = p.vertices()[vnext];
            let angle_start = (walls[i].b - center).angle();
            let raw_end = (walls[vnext].a - center).angle();
            let span = (angle_start - raw_end).rem_euclid(2.0 * PI);
            components.push(Component::Arc(DispersingArc {
                center,
                radius: r,
                angle_start,
                angle_end: angle_start - span,
                source_vertex: vnext,
            }));
        }
    }

    EquivalentTable::assemble(components, r, p.clone())
}

impl EquivalentTable {
    fn assemble(
        components: Vec<Component>,
        radius: f64,
        source: Polygon,
    ) -> Result<Self, TableError> {
        let total_length = components.iter().map(Component::length).sum();
        let table = EquivalentTable {
            components,
            radius,
            source,
            total_length,
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<(), TableError> {
        let eps_len = EPS_GEOM * self.source.diameter();
        let m = self.components.len();

        for i in 0..m {
            let next = &self.components[(i + 1) % m];
            let gap = self.components[i].end_point().distance(next.start_point());
            if gap > eps_len {
                return Err(TableError::ErosionInvalid(format!(
                    "chain gap {gap} after component {i}"
                )));
            }
            if let Component::Arc(a) = &self.components[i] {
                let span = a.span();
                if !(span > 0.0 && span < PI) {
                    return Err(TableError::ErosionInvalid(format!(
                        "arc {i} span {span} outside (0, pi)"
                    )));
                }
                // tangential junctions with both neighbours
                let prev = &self.components[(i + m - 1) % m];
                for (alpha, wall) in [(a.angle_start, prev), (a.angle_end, next)] {
                    if let Component::Wall(w) = wall {
                        let t = a.tangent_at_angle(alpha);
                        let miss = t.as_vec().cross(w.dir().as_vec()).abs().asin();
                        if miss > EPS_TANGENCY {
                            return Err(TableError::ErosionInvalid(format!(
                                "arc {i} meets wall at angle {miss}"
                            )));
                        }
                    }
                }
            }
        }

        // simplicity of the chain: non-adjacent components stay apart
        for i in 0..m {
            for j in (i + 1)..m {
                let adjacent = j == i + 1 || (i == 0 && j == m - 1);
                if adjacent {
                    continue;
                }
                if component_distance(&self.components[i], &self.components[j]) <= eps_len {
                    return Err(TableError::ErosionInvalid(format!(
                        "components {i} and {j} intersect"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn source(&self) -> &Polygon {
        &self.source
    }

    pub fn total_length(&self) -> f64 {
        self.total_length
    }

    pub fn arc_count(&self) -> usize {
        self.components.iter().filter(|c| c.is_arc()).count()
    }

    /// Length scale for tolerances, inherited from the source polygon.
    pub fn diameter(&self) -> f64 {
        self.source.diameter()
    }

    /// Chain joints: the start point of every component.
    pub fn joints(&self) -> Vec<Point2> {
        self.components.iter().map(Component::start_point).collect()
    }

    /// Membership in the eroded region: inside the source polygon with
    /// boundary clearance at least `r`.
    pub fn contains(&self, p: Point2) -> bool {
        self.source.contains(p) && self.source.distance_to_boundary(p) >= self.radius
    }

    /// Components as a JSON array (debugging, rendering).
    pub fn components_json(&self) -> String {
        serde_json::to_string_pretty(&self.components).expect("components serialize")
    }
}

/// Minimum distance between two components (0 when they cross).
fn component_distance(a: &Component, b: &Component) -> f64 {
    match (a, b) {
        (Component::Wall(u), Component::Wall(v)) => dist_segment_segment(u.a, u.b, v.a, v.b),
        (Component::Wall(w), Component::Arc(arc)) | (Component::Arc(arc), Component::Wall(w)) => {
            wall_arc_distance(w, arc)
        }
        (Component::Arc(u), Component::Arc(v)) => arc_arc_distance(u, v),
    }
}

fn dist_point_arc(p: Point2, arc: &DispersingArc) -> f64 {
    let d = p - arc.center;
    if arc.covers_angle(d.angle(), 0.0) {
        (d.norm() - arc.radius).abs()
    } else {
        p.distance(arc.start_point()).min(p.distance(arc.end_point()))
    }
}

fn wall_arc_distance(w: &Wall, arc: &DispersingArc) -> f64 {
    // segment-circle crossings that land inside the span mean contact
    let ab = w.b - w.a;
    let len = ab.norm();
    let dir = ab / len;
    let f = w.a - arc.center;
    let b_coef = 2.0 * f.dot(dir);
    let c_coef = f.norm_sq() - arc.radius * arc.radius;
    let disc = b_coef * b_coef - 4.0 * c_coef;
    if disc >= 0.0 {
        let sq = disc.sqrt();
        for t in [(-b_coef - sq) / 2.0, (-b_coef + sq) / 2.0] {
            if t >= 0.0 && t <= len {
                let hit = w.a + dir * t;
                if arc.covers_angle((hit - arc.center).angle(), 0.0) {
                    return 0.0;
                }
            }
        }
    }

    let mut best = dist_point_arc(w.a, arc)
        .min(dist_point_arc(w.b, arc))
        .min(dist_point_segment(arc.start_point(), w.a, w.b))
        .min(dist_point_segment(arc.end_point(), w.a, w.b));
    // closest approach of the segment to the circle: the foot of the center
    let t_foot = (arc.center - w.a).dot(dir);
    if t_foot >= 0.0 && t_foot <= len {
        best = best.min(dist_point_arc(w.a + dir * t_foot, arc));
    }
    best
}

fn arc_arc_distance(u: &DispersingArc, v: &DispersingArc) -> f64 {
    let mut best = dist_point_arc(u.start_point(), v)
        .min(dist_point_arc(u.end_point(), v))
        .min(dist_point_arc(v.start_point(), u))
        .min(dist_point_arc(v.end_point(), u));

    let d = u.center.distance(v.center);
    if d >= u.radius + v.radius {
        // closest circle points lie on the center line; they count only
        // if both spans cover them
        if u.covers_angle((v.center - u.center).angle(), 0.0)
            && v.covers_angle((u.center - v.center).angle(), 0.0)
        {
            best = best.min(d - u.radius - v.radius);
        }
    } else if d > 0.0 {
        // circle-circle crossings inside both spans mean contact
        let a = (d * d + u.radius * u.radius - v.radius * v.radius) / (2.0 * d);
        let h_sq = u.radius * u.radius - a * a;
        if h_sq >= 0.0 {
            let h = h_sq.sqrt();
            let axis = (v.center - u.center) / d;
            let foot = u.center + axis * a;
            for sign in [1.0, -1.0] {
                let q = foot + axis.perp() * (h * sign);
                if u.covers_angle((q - u.center).angle(), 0.0)
                    && v.covers_angle((q - v.center).angle(), 0.0)
                {
                    return 0.0;
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polygon::{l_polygon, unit_square};

    #[test]
    fn square_erodes_to_smaller_square() {
        let t = build_equivalent_table(&unit_square(), 0.1).unwrap();
        assert_eq!(t.components().len(), 4);
        assert_eq!(t.arc_count(), 0);
        for c in t.components() {
            let Component::Wall(w) = c else { panic!("expected wall") };
            for p in [w.a, w.b] {
                assert!(p.x >= 0.1 - 1e-12 && p.x <= 0.9 + 1e-12);
                assert!(p.y >= 0.1 - 1e-12 && p.y <= 0.9 + 1e-12);
            }
            assert!((w.length() - 0.8).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_radius_reproduces_the_polygon() {
        let p = l_polygon();
        let t = build_equivalent_table(&p, 0.0).unwrap();
        assert_eq!(t.components().len(), 6);
        assert_eq!(t.arc_count(), 0);
        for (i, c) in t.components().iter().enumerate() {
            let Component::Wall(w) = c else { panic!() };
            let (a, b) = p.edge(i);
            assert_eq!((w.a, w.b), (a, b));
        }
    }

    #[test]
    fn l_table_has_one_arc_with_expected_geometry() {
        let t = build_equivalent_table(&l_polygon(), 0.2).unwrap();
        assert_eq!(t.components().len(), 7);
        assert_eq!(t.arc_count(), 1);
        let arc = t
            .components()
            .iter()
            .find_map(|c| match c {
                Component::Arc(a) => Some(*a),
                _ => None,
            })
            .unwrap();
        assert_eq!(arc.source_vertex, 3);
        assert!((arc.center.x - 1.0).abs() < 1e-12 && (arc.center.y - 1.0).abs() < 1e-12);
        assert!((arc.radius - 0.2).abs() < 1e-15);
        // tangent points on the offset walls y = 0.8 and x = 0.8
        let s = arc.start_point();
        let e = arc.end_point();
        assert!((s.x - 1.0).abs() < 1e-12 && (s.y - 0.8).abs() < 1e-12, "start {s:?}");
        assert!((e.x - 0.8).abs() < 1e-12 && (e.y - 1.0).abs() < 1e-12, "end {e:?}");
        assert!((arc.span() - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn l_table_walls_are_trimmed_offsets() {
        let t = build_equivalent_table(&l_polygon(), 0.2).unwrap();
        let walls: Vec<Wall> = t
            .components()
            .iter()
            .filter_map(|c| match c {
                Component::Wall(w) => Some(*w),
                _ => None,
            })
            .collect();
        assert_eq!(walls.len(), 6);
        // miter corners of the offset chain, computed by hand from the
        // offset lines y=0.2, x=1.8, y=0.8, x=0.8, y=1.8, x=0.2
        let w0 = walls[0];
        assert!((w0.a.x - 0.2).abs() < 1e-12 && (w0.a.y - 0.2).abs() < 1e-12);
        assert!((w0.b.x - 1.8).abs() < 1e-12 && (w0.b.y - 0.2).abs() < 1e-12);
        let w2 = walls[2];
        assert!((w2.a.x - 1.8).abs() < 1e-12 && (w2.a.y - 0.8).abs() < 1e-12);
        assert!((w2.b.x - 1.0).abs() < 1e-12 && (w2.b.y - 0.8).abs() < 1e-12);
        let w3 = walls[3];
        assert!((w3.a.x - 0.8).abs() < 1e-12 && (w3.a.y - 1.0).abs() < 1e-12);
        assert!((w3.b.x - 0.8).abs() < 1e-12 && (w3.b.y - 1.8).abs() < 1e-12);
    }

    #[test]
    fn chain_is_closed_and_tangent() {
        let t = build_equivalent_table(&l_polygon(), 0.2).unwrap();
        let m = t.components().len();
        for i in 0..m {
            let gap = t.components()[i]
                .end_point()
                .distance(t.components()[(i + 1) % m].start_point());
            assert!(gap < EPS_GEOM * t.diameter(), "gap {gap} after {i}");
        }
    }

    #[test]
    fn boundary_keeps_distance_r_from_source() {
        let p = l_polygon();
        for r in [0.05, 0.2, 0.4] {
            let t = build_equivalent_table(&p, r).unwrap();
            for c in t.components() {
                let len = c.length();
                for s in 0..100 {
                    let x = c.point_at_arclength(len * (s as f64 + 0.5) / 100.0);
                    let d = p.distance_to_boundary(x);
                    assert!(
                        (d - r).abs() < 1e-8,
                        "r={r}: boundary point {x:?} at distance {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn radius_guards() {
        let p = l_polygon();
        assert!(matches!(
            build_equivalent_table(&p, 0.5),
            Err(TableError::RadiusTooLarge { .. })
        ));
        assert!(matches!(
            build_equivalent_table(&p, 0.7),
            Err(TableError::RadiusTooLarge { .. })
        ));
        assert!(matches!(
            build_equivalent_table(&p, -0.1),
            Err(TableError::NegativeRadius)
        ));
        assert!(build_equivalent_table(&p, 0.499).is_ok());
    }

    #[test]
    fn interior_area_shrinks_with_radius() {
        use rand::{Rng, SeedableRng};
        let p = l_polygon();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let samples: Vec<Point2> = (0..40_000)
            .map(|_| Point2::new(2.0 * rng.random::<f64>(), 2.0 * rng.random::<f64>()))
            .collect();
        let mut prev = usize::MAX;
        for r in [0.0, 0.1, 0.2, 0.3, 0.4] {
            let t = build_equivalent_table(&p, r).unwrap();
            let count = samples.iter().filter(|&&q| t.contains(q)).count();
            assert!(count < prev, "r={r}: {count} !< {prev}");
            prev = count;
        }
    }

    #[test]
    fn component_json_is_tagged() {
        let t = build_equivalent_table(&l_polygon(), 0.2).unwrap();
        let json = t.components_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 7);
        assert_eq!(arr[0]["type"], "wall");
        assert!(arr.iter().any(|c| c["type"] == "arc"));
    }
}
