//! Admissible disc radius.
//!
//! For the eroded table to keep every edge reachable by the disc, the
//! radius must stay below half the smallest vertex-to-opposite-boundary
//! clearance: `r_P = min_k r_k / 2`, where `r_k` is the distance from
//! vertex `k` to the nearest point of any edge not incident to that
//! vertex.

use super::super::geometry::polygon::Polygon;
use super::super::geometry::primitives::dist_point_segment;

/// Distance from vertex `k` to the nearest non-incident edge.
///
/// Edges `k-1` and `k` (the two meeting at vertex `k`) are excluded;
/// the result is strictly positive for any valid polygon.
pub fn compute_rk(p: &Polygon, k: usize) -> f64 {
    let n = p.len();
    assert!(k < n, "vertex index out of range");
    let v = p.vertices()[k];
    let mut best = f64::INFINITY;
    for i in 0..n {
        if i == k || i == (k + n - 1) % n {
            continue;
        }
        let (a, b) = p.edge(i);
        best = best.min(dist_point_segment(v, a, b));
    }
    debug_assert!(best > 0.0);
    best
}

/// The admissible-radius bound `min_k r_k / 2`.
pub fn compute_rp(p: &Polygon) -> f64 {
    (0..p.len())
        .map(|k| compute_rk(p, k))
        .fold(f64::INFINITY, f64::min)
        / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polygon::{l_polygon, unit_square, validate_polygon};
    use crate::geometry::primitives::Point2;
    use rand::{Rng, SeedableRng};

    #[test]
    fn square_vertex_clearance_is_one() {
        let p = unit_square();
        for k in 0..4 {
            assert!((compute_rk(&p, k) - 1.0).abs() < 1e-15);
        }
        assert!((compute_rp(&p) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn l_polygon_reflex_vertex_clearance() {
        let p = l_polygon();
        assert!((compute_rk(&p, 3) - 1.0).abs() < 1e-15);
        assert!((compute_rp(&p) - 0.5).abs() < 1e-15);
    }

    /// Dense-sampling oracle: minimum over many points on each
    /// non-incident edge.
    fn brute_rk(p: &Polygon, k: usize, samples: usize) -> f64 {
        let n = p.len();
        let v = p.vertices()[k];
        let mut best = f64::INFINITY;
        for i in 0..n {
            if i == k || i == (k + n - 1) % n {
                continue;
            }
            let (a, b) = p.edge(i);
            for s in 0..=samples {
                let t = s as f64 / samples as f64;
                let x = a + (b - a) * t;
                best = best.min(v.distance(x));
            }
        }
        best
    }

    #[test]
    fn matches_sampling_oracle_on_random_polygons() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let mut accepted = 0;
        while accepted < 20 {
            let n = rng.random_range(4..9usize);
            let mut pts = Vec::with_capacity(n);
            for i in 0..n {
                let base = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                let jitter = rng.random::<f64>() * 0.4 / n as f64;
                let r = 0.3 + 0.3 * rng.random::<f64>();
                pts.push(Point2::new(
                    r * (base + jitter).cos(),
                    r * (base + jitter).sin(),
                ));
            }
            let Ok(p) = validate_polygon(&pts) else {
                continue;
            };
            accepted += 1;
            for k in 0..p.len() {
                let exact = compute_rk(&p, k);
                let brute = brute_rk(&p, k, 1000);
                assert!(
                    (exact - brute).abs() < 1e-5,
                    "vertex {k}: exact {exact} brute {brute}"
                );
                assert!(exact > 0.0);
                assert!(exact <= brute + 1e-12);
            }
        }
    }
}
