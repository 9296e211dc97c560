//! Planar primitives: points, vectors, unit directions, segment queries.

use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::tolerances::EPS_UNIT;

/// A point in the plane (length units).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

/// A free vector in the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: Point2) -> f64 {
        (*self - other).norm()
    }
}

impl Vec2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(&self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product (perp-dot).
    pub fn cross(&self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(*self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Rotation by +90 degrees (counterclockwise).
    pub fn perp(&self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn angle(&self) -> f64 {
        self.y.atan2(self.x)
    }
}

impl Add<Vec2> for Point2 {
    type Output = Point2;
    fn add(self, v: Vec2) -> Point2 {
        Point2::new(self.x + v.x, self.y + v.y)
    }
}

impl Sub for Point2 {
    type Output = Vec2;
    fn sub(self, other: Point2) -> Vec2 {
        Vec2::new(self.x - other.x, self.y - other.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, other: Vec2) -> Vec2 {
        Vec2::new(self.x + other.x, self.y + other.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, other: Vec2) -> Vec2 {
        Vec2::new(self.x - other.x, self.y - other.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    fn div(self, s: f64) -> Vec2 {
        Vec2::new(self.x / s, self.y / s)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// A unit-length direction. Construction normalizes; the invariant
/// |d|^2 = 1 holds within [`EPS_UNIT`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitDir {
    dx: f64,
    dy: f64,
}

impl UnitDir {
    /// Normalizes `v`; returns `None` for a (near-)zero vector.
    pub fn try_from_vec(v: Vec2) -> Option<UnitDir> {
        let n = v.norm();
        if n <= 0.0 || !n.is_finite() {
            return None;
        }
        Some(UnitDir {
            dx: v.x / n,
            dy: v.y / n,
        })
    }

    pub fn from_vec(v: Vec2) -> UnitDir {
        Self::try_from_vec(v).expect("cannot normalize a zero vector")
    }

    pub fn from_angle(theta: f64) -> UnitDir {
        UnitDir {
            dx: theta.cos(),
            dy: theta.sin(),
        }
    }

    pub fn as_vec(&self) -> Vec2 {
        Vec2::new(self.dx, self.dy)
    }

    pub fn x(&self) -> f64 {
        self.dx
    }

    pub fn y(&self) -> f64 {
        self.dy
    }

    pub fn dot(&self, other: UnitDir) -> f64 {
        self.dx * other.dx + self.dy * other.dy
    }

    pub fn perp(&self) -> UnitDir {
        UnitDir {
            dx: -self.dy,
            dy: self.dx,
        }
    }

    pub fn reversed(&self) -> UnitDir {
        UnitDir {
            dx: -self.dx,
            dy: -self.dy,
        }
    }

    pub fn angle(&self) -> f64 {
        self.dy.atan2(self.dx)
    }

    pub fn is_unit(&self) -> bool {
        (self.dx * self.dx + self.dy * self.dy - 1.0).abs() <= EPS_UNIT
    }
}

/// Closest distance from `p` to the segment `[a, b]`.
pub fn dist_point_segment(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return p.distance(a);
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    p.distance(a + ab * t)
}

/// Closest distance between segments `[a, b]` and `[c, d]`.
/// Zero (up to rounding) when they properly cross.
pub fn dist_segment_segment(a: Point2, b: Point2, c: Point2, d: Point2) -> f64 {
    if segments_properly_cross(a, b, c, d) {
        return 0.0;
    }
    dist_point_segment(a, c, d)
        .min(dist_point_segment(b, c, d))
        .min(dist_point_segment(c, a, b))
        .min(dist_point_segment(d, a, b))
}

/// Strict interior crossing test via orientation signs.
pub fn segments_properly_cross(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let d1 = (b - a).cross(c - a);
    let d2 = (b - a).cross(d - a);
    let d3 = (d - c).cross(a - c);
    let d4 = (d - c).cross(b - c);
    (d1 > 0.0) != (d2 > 0.0) && (d3 > 0.0) != (d4 > 0.0) && d1 != d2 && d3 != d4
}

/// Intersection point of the lines through `(p, p + u)` and `(q, q + v)`.
/// `None` when the directions are (near-)parallel.
pub fn line_line_intersection(p: Point2, u: Vec2, q: Point2, v: Vec2) -> Option<Point2> {
    let denom = u.cross(v);
    let scale = u.norm() * v.norm();
    if denom.abs() <= 1e-14 * scale {
        return None;
    }
    let t = (q - p).cross(v) / denom;
    Some(p + u * t)
}

/// A rigid motion `x -> M x + t` with `M` orthogonal (rotation or
/// reflection). Used by the unfolding construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RigidTransform {
    pub m: [[f64; 2]; 2],
    pub t: Vec2,
}

impl RigidTransform {
    pub fn identity() -> Self {
        Self {
            m: [[1.0, 0.0], [0.0, 1.0]],
            t: Vec2::new(0.0, 0.0),
        }
    }

    /// Reflection across the line through `a` and `b`.
    pub fn reflection_across(a: Point2, b: Point2) -> Self {
        let n = UnitDir::from_vec((b - a).perp()).as_vec();
        // x -> x - 2((x - a).n) n  ==  (I - 2 n n^T) x + 2 (a.n) n
        let m = [
            [1.0 - 2.0 * n.x * n.x, -2.0 * n.x * n.y],
            [-2.0 * n.x * n.y, 1.0 - 2.0 * n.y * n.y],
        ];
        let an = (a - Point2::new(0.0, 0.0)).dot(n);
        Self {
            m,
            t: n * (2.0 * an),
        }
    }

    pub fn apply(&self, p: Point2) -> Point2 {
        Point2::new(
            self.m[0][0] * p.x + self.m[0][1] * p.y + self.t.x,
            self.m[1][0] * p.x + self.m[1][1] * p.y + self.t.y,
        )
    }

    /// `self` followed-by-nothing composition: returns the transform that
    /// first applies `other`, then `self`.
    pub fn compose(&self, other: &RigidTransform) -> RigidTransform {
        let m = [
            [
                self.m[0][0] * other.m[0][0] + self.m[0][1] * other.m[1][0],
                self.m[0][0] * other.m[0][1] + self.m[0][1] * other.m[1][1],
            ],
            [
                self.m[1][0] * other.m[0][0] + self.m[1][1] * other.m[1][0],
                self.m[1][0] * other.m[0][1] + self.m[1][1] * other.m[1][1],
            ],
        ];
        let t = Vec2::new(
            self.m[0][0] * other.t.x + self.m[0][1] * other.t.y + self.t.x,
            self.m[1][0] * other.t.x + self.m[1][1] * other.t.y + self.t.y,
        );
        RigidTransform { m, t }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_dir_normalizes() {
        let d = UnitDir::from_vec(Vec2::new(3.0, 4.0));
        assert!(d.is_unit());
        assert!((d.x() - 0.6).abs() < 1e-15);
        assert!((d.y() - 0.8).abs() < 1e-15);
        assert!(UnitDir::try_from_vec(Vec2::new(0.0, 0.0)).is_none());
    }

    #[test]
    fn point_segment_distance() {
        let a = Point2::new(0.0, 0.0);
        let b = Point2::new(2.0, 0.0);
        assert!((dist_point_segment(Point2::new(1.0, 1.0), a, b) - 1.0).abs() < 1e-15);
        // beyond the end: distance to the endpoint
        assert!((dist_point_segment(Point2::new(3.0, 0.0), a, b) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn segment_crossing() {
        let a = Point2::new(0.0, 0.0);
        let b = Point2::new(1.0, 1.0);
        let c = Point2::new(0.0, 1.0);
        let d = Point2::new(1.0, 0.0);
        assert!(segments_properly_cross(a, b, c, d));
        assert_eq!(dist_segment_segment(a, b, c, d), 0.0);
        let e = Point2::new(2.0, 0.0);
        let f = Point2::new(3.0, 0.0);
        assert!(!segments_properly_cross(a, b, e, f));
    }

    #[test]
    fn line_intersection() {
        let p = line_line_intersection(
            Point2::new(0.0, 0.2),
            Vec2::new(1.0, 0.0),
            Point2::new(0.2, 0.0),
            Vec2::new(0.0, 1.0),
        )
        .unwrap();
        assert!((p.x - 0.2).abs() < 1e-15 && (p.y - 0.2).abs() < 1e-15);
        assert!(line_line_intersection(
            Point2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
            Vec2::new(2.0, 0.0)
        )
        .is_none());
    }

    #[test]
    fn reflection_transform_fixes_line_and_flips() {
        let r = RigidTransform::reflection_across(Point2::new(0.0, 1.0), Point2::new(5.0, 1.0));
        let fixed = r.apply(Point2::new(2.0, 1.0));
        assert!((fixed.x - 2.0).abs() < 1e-15 && (fixed.y - 1.0).abs() < 1e-15);
        let flipped = r.apply(Point2::new(0.0, 0.0));
        assert!((flipped.x - 0.0).abs() < 1e-15 && (flipped.y - 2.0).abs() < 1e-15);
        // involution
        let back = r.compose(&r).apply(Point2::new(0.3, -0.7));
        assert!((back.x - 0.3).abs() < 1e-12 && (back.y + 0.7).abs() < 1e-12);
    }
}
