//! The product-of-sums bound for bounded positive sequences.
//!
//! For sequences with entries in `[a_min, a_max]` and `[b_min, b_max]`,
//! all positive,
//!
//! ```text
//! sum(a^2) * sum(b^2) <= (1/4) * (sqrt(M) + sqrt(1/M))^2 * sum(a*b)^2
//! ```
//!
//! where `M = (a_max * b_max) / (a_min * b_min)`. This is the one check in
//! the crate that works in floating point, so verdicts use a relative
//! tolerance instead of exact comparison.

use std::fmt;

/// Relative tolerance for the floating-point comparison.
pub const POLYA_RELATIVE_TOLERANCE: f64 = 1e-9;

/// A validated pair of bounded positive sequences.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyaInput {
    a: Vec<f64>,
    b: Vec<f64>,
    a_min: f64,
    a_max: f64,
    b_min: f64,
    b_max: f64,
}

/// Rejected inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolyaError {
    Empty,
    LengthMismatch { a: usize, b: usize },
    /// Bounds must satisfy `0 < min <= max` and be finite.
    BadBounds,
    /// An entry is non-finite or falls outside its bounds.
    OutOfRange { index: usize },
}

impl fmt::Display for PolyaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PolyaError::Empty => write!(f, "sequences must be nonempty"),
            PolyaError::LengthMismatch { a, b } => {
                write!(f, "sequence lengths differ: {} vs {}", a, b)
            }
            PolyaError::BadBounds => write!(f, "bounds must be finite with 0 < min <= max"),
            PolyaError::OutOfRange { index } => {
                write!(f, "entry {} outside its declared bounds", index)
            }
        }
    }
}

impl std::error::Error for PolyaError {}

/// Evaluation outcome. `p` counts entries pinned at `(a_max, b_min)` and `q`
/// at `(a_min, b_max)`; the bound is attained exactly when the whole input
/// splits into such blocks with `p * a_max * b_min == q * a_min * b_max`, or
/// when the bounds force constant ratios.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyaReport {
    pub lhs_product: f64,
    pub rhs_bound: f64,
    pub holds: bool,
    pub p: u64,
    pub q: u64,
    pub equality_predicted: bool,
}

impl PolyaInput {
    pub fn new(
        a: Vec<f64>,
        b: Vec<f64>,
        a_bounds: (f64, f64),
        b_bounds: (f64, f64),
    ) -> Result<Self, PolyaError> {
        if a.is_empty() {
            return Err(PolyaError::Empty);
        }
        if a.len() != b.len() {
            return Err(PolyaError::LengthMismatch { a: a.len(), b: b.len() });
        }
        let (a_min, a_max) = a_bounds;
        let (b_min, b_max) = b_bounds;
        let bounds_ok = |lo: f64, hi: f64| lo.is_finite() && hi.is_finite() && 0.0 < lo && lo <= hi;
        if !bounds_ok(a_min, a_max) || !bounds_ok(b_min, b_max) {
            return Err(PolyaError::BadBounds);
        }
        for i in 0..a.len() {
            // NaN fails both comparisons, so it is caught here too
            if !(a[i] >= a_min && a[i] <= a_max && b[i] >= b_min && b[i] <= b_max) {
                return Err(PolyaError::OutOfRange { index: i });
            }
        }
        Ok(PolyaInput { a, b, a_min, a_max, b_min, b_max })
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        // validation rejects empty sequences, kept for interface completeness
        self.a.is_empty()
    }

    /// Evaluate both sides and the equality block structure.
    pub fn evaluate(&self) -> PolyaReport {
        let mut sum_aa = 0.0;
        let mut sum_bb = 0.0;
        let mut sum_ab = 0.0;
        let mut p = 0u64;
        let mut q = 0u64;
        for (&x, &y) in self.a.iter().zip(&self.b) {
            sum_aa += x * x;
            sum_bb += y * y;
            sum_ab += x * y;
            if x == self.a_max && y == self.b_min {
                p += 1;
            } else if x == self.a_min && y == self.b_max {
                q += 1;
            }
        }
        let ratio = (self.a_max * self.b_max) / (self.a_min * self.b_min);
        let factor = 0.25 * (ratio.sqrt() + (1.0 / ratio).sqrt()).powi(2);
        let lhs_product = sum_aa * sum_bb;
        let rhs_bound = factor * sum_ab * sum_ab;
        let holds = lhs_product <= rhs_bound * (1.0 + POLYA_RELATIVE_TOLERANCE);

        let degenerate = self.a_max * self.b_max == self.a_min * self.b_min;
        let blocks = p + q == self.len() as u64
            && p as f64 * self.a_max * self.b_min == q as f64 * self.a_min * self.b_max;
        PolyaReport {
            lhs_product,
            rhs_bound,
            holds,
            p,
            q,
            equality_predicted: degenerate || blocks,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(x: f64, y: f64) -> bool {
        (x - y).abs() <= POLYA_RELATIVE_TOLERANCE * x.abs().max(y.abs()).max(1.0)
    }

    #[test]
    fn validation() {
        assert_eq!(
            PolyaInput::new(vec![], vec![], (1.0, 2.0), (1.0, 2.0)),
            Err(PolyaError::Empty)
        );
        assert_eq!(
            PolyaInput::new(vec![1.0], vec![1.0, 2.0], (1.0, 2.0), (1.0, 2.0)),
            Err(PolyaError::LengthMismatch { a: 1, b: 2 })
        );
        assert_eq!(
            PolyaInput::new(vec![1.0], vec![1.0], (0.0, 2.0), (1.0, 2.0)),
            Err(PolyaError::BadBounds)
        );
        assert_eq!(
            PolyaInput::new(vec![1.0], vec![1.0], (2.0, 1.0), (1.0, 2.0)),
            Err(PolyaError::BadBounds)
        );
        assert_eq!(
            PolyaInput::new(vec![3.0], vec![1.0], (1.0, 2.0), (1.0, 2.0)),
            Err(PolyaError::OutOfRange { index: 0 })
        );
        assert_eq!(
            PolyaInput::new(vec![1.0, f64::NAN], vec![1.0, 1.0], (1.0, 2.0), (1.0, 2.0)),
            Err(PolyaError::OutOfRange { index: 1 })
        );
    }

    #[test]
    fn balanced_blocks_attain_the_bound() {
        let input =
            PolyaInput::new(vec![1.0, 2.0], vec![2.0, 1.0], (1.0, 2.0), (1.0, 2.0)).unwrap();
        let r = input.evaluate();
        assert_eq!((r.p, r.q), (1, 1));
        assert!(r.equality_predicted);
        assert!(r.holds);
        assert!(close(r.lhs_product, 25.0));
        assert!(close(r.rhs_bound, 25.0));
    }

    #[test]
    fn constant_sequences_are_degenerate_equalities() {
        let input =
            PolyaInput::new(vec![3.0; 4], vec![2.0; 4], (3.0, 3.0), (2.0, 2.0)).unwrap();
        let r = input.evaluate();
        assert!(r.equality_predicted);
        assert!(close(r.lhs_product, r.rhs_bound));
    }

    #[test]
    fn unbalanced_blocks_stay_strict() {
        let input = PolyaInput::new(
            vec![2.0, 2.0, 1.0],
            vec![1.0, 1.0, 2.0],
            (1.0, 2.0),
            (1.0, 2.0),
        )
        .unwrap();
        let r = input.evaluate();
        assert_eq!((r.p, r.q), (2, 1));
        assert!(!r.equality_predicted);
        assert!(r.holds);
        assert!(close(r.lhs_product, 54.0));
        assert!(close(r.rhs_bound, 56.25));
        assert!(r.lhs_product < r.rhs_bound);
    }

    #[test]
    fn interior_entries_break_the_prediction() {
        let input = PolyaInput::new(
            vec![1.5, 2.0, 1.0],
            vec![1.0, 1.0, 2.0],
            (1.0, 2.0),
            (1.0, 2.0),
        )
        .unwrap();
        let r = input.evaluate();
        assert!(!r.equality_predicted);
        assert!(r.holds);
        assert!(r.lhs_product < r.rhs_bound);
    }
}
