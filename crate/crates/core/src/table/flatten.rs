//! Flattening dispersing arcs into chords.
//!
//! Replacing every arc by the straight chord between its endpoints yields
//! a polygon whose billiard coincides with the table's dynamics for any
//! trajectory that never touches an arc. At each chord endpoint the
//! interior angle is `(pi + theta) / 2`, where `theta` is the interior
//! angle at the source reflex vertex — so a rational source polygon
//! flattens to a rational polygon.

use super::erosion::EquivalentTable;
use crate::geometry::polygon::{validate_polygon, Polygon};

/// Replaces every arc by its chord and returns the resulting polygon.
/// A table without arcs comes back as the polygon of its walls.
pub fn flatten_arcs(t: &EquivalentTable) -> Polygon {
    let verts: Vec<_> = t.components().iter().map(|c| c.start_point()).collect();
    validate_polygon(&verts).expect("flattened chain forms a valid polygon")
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::geometry::polygon::{l_polygon, unit_square};
    use crate::geometry::rational::rationality_report;
    use crate::table::erosion::build_equivalent_table;
    use crate::tolerances::{Q_MAX_DEFAULT, TOL_RAT_DEFAULT};

    #[test]
    fn zero_arc_table_is_unchanged() {
        let p = l_polygon();
        let t = build_equivalent_table(&p, 0.0).unwrap();
        assert_eq!(flatten_arcs(&t), p);
    }

    #[test]
    fn convex_table_flattens_to_its_walls() {
        let t = build_equivalent_table(&unit_square(), 0.1).unwrap();
        let q = flatten_arcs(&t);
        assert_eq!(q.len(), 4);
        assert!((q.area() - 0.64).abs() < 1e-12);
    }

    #[test]
    fn l_table_flattens_to_heptagon_with_split_reflex_angle() {
        let t = build_equivalent_table(&l_polygon(), 0.2).unwrap();
        let q = flatten_arcs(&t);
        assert_eq!(q.len(), 7);
        // chord from (1, 0.8) to (0.8, 1)
        let angles = q.interior_angles();
        let expected = (PI + 3.0 * PI / 2.0) / 2.0;
        let split: Vec<_> = angles
            .iter()
            .filter(|a| (a.theta - expected).abs() < 1e-9)
            .collect();
        assert_eq!(split.len(), 2, "two chord endpoints at (pi + theta)/2");
        for a in split {
            assert!(a.is_reflex);
        }
    }

    #[test]
    fn rational_source_flattens_rational() {
        let t = build_equivalent_table(&l_polygon(), 0.2).unwrap();
        let q = flatten_arcs(&t);
        let rep = rationality_report(&q, TOL_RAT_DEFAULT, Q_MAX_DEFAULT);
        assert!(rep.all_rational);
        // the split angles are 5pi/4
        assert!(rep.angles.iter().any(|a| (a.p, a.q) == (5, 4)));
    }
}
