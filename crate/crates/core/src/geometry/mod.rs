//! Planar geometry: primitives, validated polygons, angle classification,
//! the symmetric-difference metric, and the reflex-notch construction.

pub mod metric;
pub mod polygon;
pub mod primitives;
pub mod rational;
pub mod reflexify;

pub use metric::{polygon_metric_d, MetricEstimate};
pub use polygon::{
    interior_angles, l_polygon, unit_square, validate_polygon, InteriorAngle, Polygon,
    PolygonError,
};
pub use primitives::{
    dist_point_segment, dist_segment_segment, line_line_intersection, Point2, RigidTransform,
    UnitDir, Vec2,
};
pub use rational::{best_rational_approx, rationality_report, RationalAngle, RationalityReport};
pub use reflexify::{reflexify, reflexify_min_k, ReflexifyError};
