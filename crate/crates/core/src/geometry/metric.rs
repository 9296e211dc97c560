//! Symmetric-difference metric between polygons.
//!
//! `d(P, Q)` is the area of the points covered by exactly one of the two
//! polygons. It is estimated by Monte Carlo over the joint bounding box:
//! unbiased, seed-deterministic, and exactly symmetric in its arguments
//! (the sample stream depends only on the seed and the joint box).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::polygon::Polygon;
use super::primitives::Point2;

/// Monte Carlo estimate with its standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricEstimate {
    /// Estimated symmetric-difference area.
    pub value: f64,
    /// Standard error of the estimate.
    pub std_error: f64,
    pub samples: u64,
}

/// Estimates the symmetric-difference area of `p` and `q`.
pub fn polygon_metric_d(p: &Polygon, q: &Polygon, samples: u64, seed: u64) -> MetricEstimate {
    assert!(samples >= 1, "need at least one sample");
    let (pxmin, pymin, pxmax, pymax) = p.bbox();
    let (qxmin, qymin, qxmax, qymax) = q.bbox();
    let xmin = pxmin.min(qxmin);
    let ymin = pymin.min(qymin);
    let xmax = pxmax.max(qxmax);
    let ymax = pymax.max(qymax);
    let box_area = (xmax - xmin) * (ymax - ymin);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits: u64 = 0;
    for _ in 0..samples {
        let x = xmin + (xmax - xmin) * rng.random::<f64>();
        let y = ymin + (ymax - ymin) * rng.random::<f64>();
        let pt = Point2::new(x, y);
        if p.contains(pt) != q.contains(pt) {
            hits += 1;
        }
    }
    let m = hits as f64 / samples as f64;
    MetricEstimate {
        value: box_area * m,
        std_error: box_area * (m * (1.0 - m) / samples as f64).sqrt(),
        samples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polygon::{unit_square, validate_polygon};
    use crate::geometry::reflexify::reflexify;

    #[test]
    fn identical_polygons_have_zero_distance() {
        let p = unit_square();
        let est = polygon_metric_d(&p, &p, 1000, 1);
        assert_eq!(est.value, 0.0);
        assert_eq!(est.std_error, 0.0);
    }

    #[test]
    fn disjoint_translates_sum_their_areas() {
        let p = unit_square();
        let q = validate_polygon(
            &p.vertices()
                .iter()
                .map(|v| Point2::new(v.x + 2.0, v.y))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let est = polygon_metric_d(&p, &q, 200_000, 42);
        assert!(
            (est.value - 2.0).abs() < 4.0 * est.std_error + 1e-9,
            "value {} se {}",
            est.value,
            est.std_error
        );
    }

    #[test]
    fn symmetric_and_nonnegative() {
        let p = unit_square();
        let q = reflexify(&p, 0, 3).unwrap();
        let a = polygon_metric_d(&p, &q, 50_000, 9);
        let b = polygon_metric_d(&q, &p, 50_000, 9);
        assert_eq!(a.value, b.value);
        assert!(a.value >= 0.0);
    }

    #[test]
    fn notch_area_matches_closed_form() {
        // the notch cut by reflexify is an isosceles triangle of area
        // (L/4) * L * tan(pi/(2k)) for edge length L = 1
        let p = unit_square();
        for k in [2u32, 4, 8] {
            let q = reflexify(&p, 0, k).unwrap();
            let expected = 0.25 * (std::f64::consts::PI / (2.0 * k as f64)).tan();
            let est = polygon_metric_d(&p, &q, 400_000, 5);
            assert!(
                (est.value - expected).abs() < 5.0 * est.std_error + 1e-9,
                "k={k}: value {} expected {expected} se {}",
                est.value,
                est.std_error
            );
        }
    }

    #[test]
    fn shared_samples_make_nested_notches_monotone() {
        // same seed => same sample points; smaller notches are subsets, so
        // the estimate is exactly nonincreasing in k
        let p = unit_square();
        let mut prev = f64::INFINITY;
        for k in [2u32, 4, 8, 16, 32, 64, 128, 256] {
            let q = reflexify(&p, 0, k).unwrap();
            let est = polygon_metric_d(&p, &q, 100_000, 11);
            assert!(est.value <= prev, "k={k}: {} > {}", est.value, prev);
            prev = est.value;
        }
        assert!(prev < 0.004, "k=256 distance {prev}");
    }
}
