//! Hyperbolicity diagnostics: curvature propagation, continued fractions,
//! divergence checks, Lyapunov/entropy estimators, ensemble reports.

pub mod contfrac;
pub mod curvature;
pub mod ensemble;
pub mod lyapunov;
pub mod seidel_stern;

pub use contfrac::{continued_fraction_value, IncrementalCf};
pub use curvature::{propagate_curvature, AnalysisError, CurvatureState};
pub use ensemble::{
    aggregate, ensemble_report, ensemble_report_with_time, ensemble_trajectory_stats,
    HyperbolicityReport, TrajectoryStats,
};
pub use lyapunov::{curvature_log, lyapunov_estimate, LyapunovEstimate};
pub use seidel_stern::{seidel_stern_check, SeidelSternResult};
