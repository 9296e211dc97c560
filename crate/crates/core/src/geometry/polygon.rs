//! Simple polygons: validation, orientation, interior angles.
//!
//! The canonical form is a counterclockwise simple loop with no duplicate
//! vertices and no three consecutive collinear vertices. All downstream
//! construction (erosion, dynamics) assumes this form, so the only way to
//! obtain a [`Polygon`] is through [`validate_polygon`].

use std::f64::consts::PI;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::primitives::{dist_point_segment, dist_segment_segment, Point2, UnitDir};
use crate::tolerances::{EPS_ANGLE, EPS_GEOM};

/// Why a vertex list was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolygonError {
    /// Fewer than three input points.
    TooFewVertices,
    /// A coordinate is NaN or infinite.
    NonFiniteCoordinate,
    /// Two non-adjacent edges intersect or touch.
    SelfIntersecting,
    /// Signed area is zero within tolerance.
    DegenerateArea,
    /// Two vertices coincide within tolerance.
    DuplicateVertices,
    /// Three consecutive vertices are collinear (straight run or spike).
    CollinearRun,
}

impl fmt::Display for PolygonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolygonError::TooFewVertices => write!(f, "polygon needs at least 3 vertices"),
            PolygonError::NonFiniteCoordinate => write!(f, "vertex coordinate is not finite"),
            PolygonError::SelfIntersecting => write!(f, "non-adjacent edges intersect"),
            PolygonError::DegenerateArea => write!(f, "polygon area is degenerate"),
            PolygonError::DuplicateVertices => write!(f, "duplicate vertices"),
            PolygonError::CollinearRun => write!(f, "three consecutive collinear vertices"),
        }
    }
}

impl std::error::Error for PolygonError {}

/// A validated simple polygon, stored counterclockwise.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point2>,
    diameter: f64,
}

/// Interior angle at one vertex.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InteriorAngle {
    pub vertex_index: usize,
    /// Angle measured inside the polygon, in (0, 2*pi).
    pub theta: f64,
    /// `theta > pi`.
    pub is_reflex: bool,
}

/// Validates a vertex loop and returns the canonical CCW polygon.
///
/// Clockwise input is reversed silently. Rejections name the violated
/// invariant; see [`PolygonError`].
pub fn validate_polygon(points: &[Point2]) -> Result<Polygon, PolygonError> {
    if points.len() < 3 {
        return Err(PolygonError::TooFewVertices);
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(PolygonError::NonFiniteCoordinate);
    }
    let n = points.len();
    let diameter = bbox_diagonal(points);
    if diameter <= 0.0 {
        return Err(PolygonError::DuplicateVertices);
    }
    let eps_len = EPS_GEOM * diameter;

    for i in 0..n {
        for j in (i + 1)..n {
            if points[i].distance(points[j]) <= eps_len {
                return Err(PolygonError::DuplicateVertices);
            }
        }
    }

    // Straight runs and spikes: |sin| of the turn at each vertex.
    for i in 0..n {
        let prev = points[(i + n - 1) % n];
        let next = points[(i + 1) % n];
        let u = points[i] - prev;
        let w = next - points[i];
        if u.cross(w).abs() <= EPS_GEOM * u.norm() * w.norm() {
            return Err(PolygonError::CollinearRun);
        }
    }

    // Non-adjacent edge pairs must stay strictly apart.
    for i in 0..n {
        let (a, b) = (points[i], points[(i + 1) % n]);
        for j in (i + 1)..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                continue;
            }
            let (c, d) = (points[j], points[(j + 1) % n]);
            if dist_segment_segment(a, b, c, d) <= eps_len {
                return Err(PolygonError::SelfIntersecting);
            }
        }
    }

    let area2 = twice_signed_area(points);
    if area2.abs() <= EPS_GEOM * diameter * diameter {
        return Err(PolygonError::DegenerateArea);
    }

    let mut vertices = points.to_vec();
    if area2 < 0.0 {
        vertices.reverse();
    }
    Ok(Polygon { vertices, diameter })
}

fn twice_signed_area(points: &[Point2]) -> f64 {
    let n = points.len();
    let mut acc = 0.0;
    for i in 0..n {
        let p = points[i];
        let q = points[(i + 1) % n];
        acc += p.x * q.y - q.x * p.y;
    }
    acc
}

fn bbox_diagonal(points: &[Point2]) -> f64 {
    let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in points {
        xmin = xmin.min(p.x);
        xmax = xmax.max(p.x);
        ymin = ymin.min(p.y);
        ymax = ymax.max(p.y);
    }
    ((xmax - xmin).powi(2) + (ymax - ymin).powi(2)).sqrt()
}

impl Polygon {
    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Bounding-box diagonal; the length scale for all tolerances.
    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn area(&self) -> f64 {
        0.5 * twice_signed_area(&self.vertices)
    }

    /// Axis-aligned bounding box `(xmin, ymin, xmax, ymax)`.
    pub fn bbox(&self) -> (f64, f64, f64, f64) {
        let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
        for p in &self.vertices {
            xmin = xmin.min(p.x);
            xmax = xmax.max(p.x);
            ymin = ymin.min(p.y);
            ymax = ymax.max(p.y);
        }
        (xmin, ymin, xmax, ymax)
    }

    /// Edge `i` as `(v_i, v_{i+1})`.
    pub fn edge(&self, i: usize) -> (Point2, Point2) {
        let n = self.vertices.len();
        (self.vertices[i], self.vertices[(i + 1) % n])
    }

    /// Unit direction along edge `i`.
    pub fn edge_dir(&self, i: usize) -> UnitDir {
        let (a, b) = self.edge(i);
        UnitDir::from_vec(b - a)
    }

    /// Inward unit normal of edge `i` (left of travel for a CCW loop).
    pub fn edge_inward_normal(&self, i: usize) -> UnitDir {
        self.edge_dir(i).perp()
    }

    /// Even-odd inclusion test; boundary points are unspecified.
    pub fn contains(&self, p: Point2) -> bool {
        let n = self.vertices.len();
        let mut inside = false;
        let mut j = n - 1;
        for i in 0..n {
            let vi = self.vertices[i];
            let vj = self.vertices[j];
            if (vi.y > p.y) != (vj.y > p.y) {
                let x_cross = vj.x + (p.y - vj.y) / (vi.y - vj.y) * (vi.x - vj.x);
                if p.x < x_cross {
                    inside = !inside;
                }
            }
            j = i;
        }
        inside
    }

    /// Inclusion with a positive clearance from the boundary.
    pub fn contains_with_clearance(&self, p: Point2, clearance: f64) -> bool {
        self.contains(p) && self.distance_to_boundary(p) > clearance
    }

    /// Distance from `p` to the polygon boundary.
    pub fn distance_to_boundary(&self, p: Point2) -> f64 {
        let n = self.vertices.len();
        let mut best = f64::INFINITY;
        for i in 0..n {
            let (a, b) = self.edge(i);
            best = best.min(dist_point_segment(p, a, b));
        }
        best
    }

    /// Interior angle at every vertex; reflex means `theta > pi`.
    pub fn interior_angles(&self) -> Vec<InteriorAngle> {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let prev = self.vertices[(i + n - 1) % n];
            let next = self.vertices[(i + 1) % n];
            let u = self.vertices[i] - prev;
            let w = next - self.vertices[i];
            // Left turns shrink the interior angle below pi, right turns
            // push it above.
            let turn = u.cross(w).atan2(u.dot(w));
            let theta = PI - turn;
            out.push(InteriorAngle {
                vertex_index: i,
                theta,
                is_reflex: theta > PI,
            });
        }
        debug_assert!({
            let sum: f64 = out.iter().map(|a| a.theta).sum();
            (sum - (n as f64 - 2.0) * PI).abs() <= n as f64 * EPS_ANGLE
        });
        out
    }

    pub fn reflex_count(&self) -> usize {
        self.interior_angles().iter().filter(|a| a.is_reflex).count()
    }

    /// Rigid motion putting vertex 0 at the origin and the last vertex on
    /// the positive x-axis.
    pub fn canonical_embedding(&self) -> Polygon {
        let v0 = self.vertices[0];
        let last = self.vertices[self.vertices.len() - 1];
        let phi = (last - v0).angle();
        let (s, c) = (-phi).sin_cos();
        let mapped: Vec<Point2> = self
            .vertices
            .iter()
            .map(|p| {
                let d = *p - v0;
                Point2::new(c * d.x - s * d.y, s * d.x + c * d.y)
            })
            .collect();
        validate_polygon(&mapped).expect("rigid motion preserves validity")
    }
}

/// Free-function form of [`Polygon::interior_angles`].
pub fn interior_angles(p: &Polygon) -> Vec<InteriorAngle> {
    p.interior_angles()
}

impl Serialize for Polygon {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let verts: Vec<[f64; 2]> = self.vertices.iter().map(|p| [p.x, p.y]).collect();
        let mut st = serializer.serialize_struct("Polygon", 1)?;
        st.serialize_field("vertices", &verts)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Polygon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<[f64; 2]>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let pts: Vec<Point2> = raw.vertices.iter().map(|v| Point2::new(v[0], v[1])).collect();
        validate_polygon(&pts).map_err(serde::de::Error::custom)
    }
}

/// The L-shaped hexagon used throughout the tests: a 2x1 bar with a 1x1
/// column, one reflex vertex at (1, 1).
pub fn l_polygon() -> Polygon {
    validate_polygon(&[
        Point2::new(0.0, 0.0),
        Point2::new(2.0, 0.0),
        Point2::new(2.0, 1.0),
        Point2::new(1.0, 1.0),
        Point2::new(1.0, 2.0),
        Point2::new(0.0, 2.0),
    ])
    .expect("L-polygon is valid")
}

/// The unit square.
pub fn unit_square() -> Polygon {
    validate_polygon(&[
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(1.0, 1.0),
        Point2::new(0.0, 1.0),
    ])
    .expect("unit square is valid")
}
