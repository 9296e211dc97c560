//! Rational-angle diagnostics.
//!
//! A polygon is rational when every interior angle is a rational multiple
//! of pi. From floating-point vertices that is undecidable, so this module
//! reports, per angle, the best rational approximation of `theta / pi`
//! with bounded denominator and leaves the classification to a tolerance.

use std::f64::consts::PI;

use serde::Serialize;

use super::polygon::Polygon;

/// Best rational approximation of one angle.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RationalAngle {
    pub vertex_index: usize,
    /// Interior angle (radians).
    pub theta: f64,
    /// Numerator of the best p/q for theta/pi with q <= q_max.
    pub p: i64,
    /// Denominator.
    pub q: u64,
    /// |theta/pi - p/q|.
    pub residual: f64,
    pub is_rational_within_tol: bool,
}

/// Per-angle rational approximations of `theta / pi`.
#[derive(Clone, Debug, Serialize)]
pub struct RationalityReport {
    pub angles: Vec<RationalAngle>,
    pub all_rational: bool,
    pub tol_rat: f64,
    pub q_max: u64,
}

/// Builds the report for every interior angle of `p`.
pub fn rationality_report(p: &Polygon, tol_rat: f64, q_max: u64) -> RationalityReport {
    assert!(tol_rat > 0.0, "tol_rat must be positive");
    assert!(q_max >= 1, "q_max must be at least 1");
    let angles: Vec<RationalAngle> = p
        .interior_angles()
        .iter()
        .map(|a| {
            let x = a.theta / PI;
            let (p_num, q_den) = best_rational_approx(x, q_max);
            let residual = (x - p_num as f64 / q_den as f64).abs();
            RationalAngle {
                vertex_index: a.vertex_index,
                theta: a.theta,
                p: p_num,
                q: q_den,
                residual,
                is_rational_within_tol: residual < tol_rat,
            }
        })
        .collect();
    let all_rational = angles.iter().all(|a| a.is_rational_within_tol);
    RationalityReport {
        angles,
        all_rational,
        tol_rat,
        q_max,
    }
}

/// Best rational approximation `p/q` of `x` with `1 <= q <= q_max`,
/// minimizing `|x - p/q|`.
///
/// Walks the continued-fraction convergents of `x`; when the next
/// convergent would exceed the denominator bound, the last admissible
/// semiconvergent competes with the last full convergent.
pub fn best_rational_approx(x: f64, q_max: u64) -> (i64, u64) {
    assert!(x.is_finite());
    let q_max = q_max.max(1) as i64;

    let mut best = ((x).round() as i64, 1i64);
    let mut best_err = (x - best.0 as f64).abs();
    let mut consider = |p: i64, q: i64| {
        if q >= 1 && q <= q_max {
            let err = (x - p as f64 / q as f64).abs();
            if err < best_err {
                best = (p, q);
                best_err = err;
            }
        }
    };

    // Convergent recurrences h_k = a_k h_{k-1} + h_{k-2}, same for k.
    let (mut h_prev, mut k_prev) = (1i64, 0i64);
    let mut a0 = x.floor();
    let (mut h, mut k) = (a0 as i64, 1i64);
    consider(h, k);
    let mut frac = x - a0;

    for _ in 0..64 {
        if frac.abs() < 1e-15 {
            break;
        }
        let inv = 1.0 / frac;
        a0 = inv.floor();
        frac = inv - a0;
        if a0 >= i64::MAX as f64 / 4.0 {
            break;
        }
        let a = a0 as i64;
        let h_next = match a.checked_mul(h).and_then(|v| v.checked_add(h_prev)) {
            Some(v) => v,
            None => break,
        };
        let k_next = match a.checked_mul(k).and_then(|v| v.checked_add(k_prev)) {
            Some(v) => v,
            None => break,
        };
        if k_next > q_max {
            // Largest semiconvergent coefficient still within the bound.
            let t = (q_max - k_prev) / k;
            if t >= 1 {
                consider(t * h + h_prev, t * k + k_prev);
            }
            break;
        }
        consider(h_next, k_next);
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }

    (best.0, best.1 as u64)
}
