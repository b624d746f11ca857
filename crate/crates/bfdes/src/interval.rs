//! Crisp interval degrees: the grade-1 specialization used by the traffic simulator.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ncfd::{GridSpec, Ncfd, TOL};

#[derive(Debug, Error, PartialEq)]
pub enum IntervalError {
    #[error("invalid interval [{lo}, {hi}]: bounds must satisfy 0 <= lo <= hi <= 1")]
    InvalidInterval { lo: f64, hi: f64 },
}

/// An interval `[lo, hi] ⊆ [0, 1]` standing for the grade-1 NCFD over its span.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalDegree {
    pub lo: f64,
    pub hi: f64,
}

impl IntervalDegree {
    pub fn new(lo: f64, hi: f64) -> Result<IntervalDegree, IntervalError> {
        if !(lo >= -TOL && hi <= 1.0 + TOL && lo <= hi + TOL) {
            return Err(IntervalError::InvalidInterval { lo, hi });
        }
        Ok(IntervalDegree { lo: lo.clamp(0.0, 1.0), hi: hi.clamp(0.0, 1.0) })
    }

    pub fn point(v: f64) -> IntervalDegree {
        IntervalDegree { lo: v.clamp(0.0, 1.0), hi: v.clamp(0.0, 1.0) }
    }

    pub fn zero() -> IntervalDegree {
        IntervalDegree::point(0.0)
    }

    pub fn one() -> IntervalDegree {
        IntervalDegree::point(1.0)
    }

    pub fn imeet(&self, other: &IntervalDegree) -> IntervalDegree {
        IntervalDegree { lo: self.lo.min(other.lo), hi: self.hi.min(other.hi) }
    }

    pub fn ijoin(&self, other: &IntervalDegree) -> IntervalDegree {
        IntervalDegree { lo: self.lo.max(other.lo), hi: self.hi.max(other.hi) }
    }

    pub fn icomplement(&self) -> IntervalDegree {
        IntervalDegree { lo: 1.0 - self.hi, hi: 1.0 - self.lo }
    }

    /// Scales both endpoints by `gamma >= 0`, clipping to `[0, 1]`.
    pub fn iscale(&self, gamma: f64) -> IntervalDegree {
        IntervalDegree {
            lo: (gamma * self.lo).clamp(0.0, 1.0),
            hi: (gamma * self.hi).clamp(0.0, 1.0),
        }
    }

    pub fn icentroid(&self) -> f64 {
        (self.lo + self.hi) / 2.0
    }

    /// Grade-1 NCFD over the grid points spanning `[lo, hi]`. A span narrower
    /// than the grid falls back to a singleton at the snapped midpoint.
    pub fn embed(&self, grid: GridSpec) -> Ncfd {
        let pts = grid.points_in(self.lo, self.hi);
        if pts.is_empty() {
            let mid = (self.lo + self.hi) / 2.0;
            let snapped = (mid / grid.step()).round() * grid.step();
            return Ncfd::singleton(snapped.clamp(0.0, 1.0));
        }
        let raw: Vec<(f64, f64)> = pts.into_iter().map(|u| (u, 1.0)).collect();
        Ncfd::canonicalize(&raw).expect("grade-1 support is normal and convex")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncfd::scalar_eq;

    fn iv(lo: f64, hi: f64) -> IntervalDegree {
        IntervalDegree::new(lo, hi).unwrap()
    }

    #[test]
    fn construction() {
        assert!(IntervalDegree::new(0.5, 0.2).is_err());
        assert!(IntervalDegree::new(-0.1, 0.2).is_err());
        assert!(IntervalDegree::new(0.2, 1.2).is_err());
    }

    #[test]
    fn endpoint_ops() {
        assert_eq!(iv(0.2, 0.8).imeet(&iv(0.5, 0.6)), iv(0.2, 0.6));
        assert_eq!(iv(0.2, 0.8).ijoin(&iv(0.5, 0.6)), iv(0.5, 0.8));
        assert_eq!(iv(0.0, 0.0).icomplement(), iv(1.0, 1.0));
        assert_eq!(iv(0.3, 0.5).iscale(1.0), iv(0.3, 0.5));
        assert_eq!(iv(0.3, 0.6).iscale(2.0), iv(0.6, 1.0));
        assert!(scalar_eq(iv(0.2, 0.6).icentroid(), 0.4));
    }

    #[test]
    fn imeet_matches_embedded_meet() {
        let grid = GridSpec::new(0.1).unwrap();
        let a = iv(0.2, 0.8);
        let b = iv(0.5, 0.6);
        let embedded = a.embed(grid).meet(&b.embed(grid));
        assert_eq!(embedded, a.imeet(&b).embed(grid));
    }

    #[test]
    fn embed_narrow_interval() {
        let grid = GridSpec::default();
        let n = iv(0.312, 0.317).embed(grid);
        assert_eq!(n.support_len(), 1);
        assert!(scalar_eq(n.points()[0].0, 0.3));
    }
}
