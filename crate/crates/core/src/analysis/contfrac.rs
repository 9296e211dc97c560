//! Continued fractions with positive elements.
//!
//! Along a billiard orbit, flight times and reflection terms assemble the
//! continued fraction `1/(a1 + 1/(a2 + ...))`. Truncations are evaluated
//! two ways: a backward recurrence for a fixed depth, and an incremental
//! forward recurrence (convergent numerators/denominators) that supports
//! appending elements one at a time. For positive elements, truncations
//! bracket the limit: even depths below, odd depths above.

use crate::tolerances::CF_CONVERGENCE_TOL;

/// Value of the depth-`n` truncation of `1/(a1 + 1/(a2 + ... + 1/an))`,
/// by backward recurrence.
pub fn continued_fraction_value(elements: &[f64], n: usize) -> f64 {
    assert!(n >= 1 && n <= elements.len(), "depth out of range");
    let mut value = 0.0;
    for &a in elements[..n].iter().rev() {
        debug_assert!(a > 0.0, "continued-fraction elements must be positive");
        value = 1.0 / (a + value);
    }
    value
}

/// Forward-recurrence evaluation that accepts elements incrementally.
///
/// Convergents `A_n / B_n` with `A_n = a_n A_{n-1} + A_{n-2}` (same for
/// `B`) grow exponentially, so both rows are rescaled when they get large;
/// the ratio is invariant.
#[derive(Clone, Debug)]
pub struct IncrementalCf {
    a_prev: f64,
    a_cur: f64,
    b_prev: f64,
    b_cur: f64,
    depth: usize,
    last_value: f64,
    converged_at: Option<usize>,
}

impl Default for IncrementalCf {
    fn default() -> Self {
        Self::new()
    }
}

impl IncrementalCf {
    pub fn new() -> Self {
        IncrementalCf {
            a_prev: 1.0,
            a_cur: 0.0,
            b_prev: 0.0,
            b_cur: 1.0,
            depth: 0,
            last_value: f64::NAN,
            converged_at: None,
        }
    }

    pub fn push(&mut self, element: f64) {
        debug_assert!(element > 0.0);
        let a_next = element * self.a_cur + self.a_prev;
        let b_next = element * self.b_cur + self.b_prev;
        self.a_prev = self.a_cur;
        self.b_prev = self.b_cur;
        self.a_cur = a_next;
        self.b_cur = b_next;
        if self.b_cur > 1e150 {
            let s = 1.0 / self.b_cur;
            self.a_prev *= s;
            self.a_cur *= s;
            self.b_prev *= s;
            self.b_cur *= s;
        }
        self.depth += 1;
        let value = self.a_cur / self.b_cur;
        if self.converged_at.is_none()
            && self.depth >= 2
            && (value - self.last_value).abs() < CF_CONVERGENCE_TOL
        {
            self.converged_at = Some(self.depth);
        }
        self.last_value = value;
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Current truncation value; NaN before the first element.
    pub fn value(&self) -> f64 {
        if self.depth == 0 {
            f64::NAN
        } else {
            self.last_value
        }
    }

    /// First depth at which consecutive truncations agreed within the
    /// convergence tolerance.
    pub fn converged_at(&self) -> Option<usize> {
        self.converged_at
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_element() {
        assert_eq!(continued_fraction_value(&[2.0], 1), 0.5);
    }

    #[test]
    fn two_levels() {
        let v = continued_fraction_value(&[1.0, 10.0], 2);
        assert!((v - 10.0 / 11.0).abs() < 1e-15);
    }

    #[test]
    fn all_ones_converge_to_golden_ratio_conjugate() {
        let ones = vec![1.0; 30];
        let v = continued_fraction_value(&ones, 30);
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        assert!((v - golden).abs() < 1e-9, "{v}");
        assert!((v - 0.6180339887).abs() < 1e-9);
    }

    #[test]
    fn truncations_bracket_the_limit() {
        // even depths increase, odd depths decrease, evens below odds
        let elems: Vec<f64> = (1..=40).map(|i| 0.5 + (i % 7) as f64).collect();
        let vals: Vec<f64> = (1..=elems.len())
            .map(|n| continued_fraction_value(&elems, n))
            .collect();
        for m in 1..vals.len() / 2 {
            let even = vals[2 * m - 1]; // depth 2m
            let even_next = vals[2 * m + 1];
            let odd = vals[2 * m]; // depth 2m+1
            let odd_prev = vals[2 * m - 2];
            assert!(even <= even_next + 1e-15);
            assert!(even_next <= odd + 1e-15);
            assert!(odd <= odd_prev + 1e-15);
        }
    }

    #[test]
    fn forward_matches_backward() {
        let elems: Vec<f64> = (1..=200).map(|i| 0.1 + ((i * 37) % 11) as f64).collect();
        let mut inc = IncrementalCf::new();
        for (i, &a) in elems.iter().enumerate() {
            inc.push(a);
            let back = continued_fraction_value(&elems, i + 1);
            assert!(
                (inc.value() - back).abs() < 1e-12 * back.abs().max(1.0),
                "depth {}: {} vs {}",
                i + 1,
                inc.value(),
                back
            );
        }
        assert!(inc.converged_at().is_some());
    }

    #[test]
    fn rescaling_keeps_the_ratio_finite() {
        let mut inc = IncrementalCf::new();
        for _ in 0..10_000 {
            inc.push(50.0);
        }
        assert!(inc.value().is_finite());
        // fixed point of x = 1/(50 + x)
        let expected = (-50.0 + (2500f64 + 4.0).sqrt()) / 2.0;
        assert!((inc.value() - expected).abs() < 1e-12);
    }
}
