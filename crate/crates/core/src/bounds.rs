//! Closed-form upper bounds on slice sizes for `H_{a,b}`.

use serde::{Deserialize, Serialize};

use crate::lattice::WeightParams;

/// Real-valued bounds. Compare integers against them with [`ceil_guarded`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundSet {
    /// `|S1|, |S3| <= 80 b^2 p^2 / a^2`.
    pub s1_bound: f64,
    /// `|S(2,n)| <= 16 p (p + 3b/a)`.
    pub s2n_bound: f64,
    /// `|N_H|, |N_V| <= 2 log_p(18 b p / a) + 1`.
    pub nh_bound: f64,
    /// `|S2| <= 64 p (p + 3b/a) log_p(18 b p^2 / a)`.
    pub s2_bound: f64,
    /// `|S| <= 160 b^2 p^2 / a^2 + s2_bound`.
    pub total_bound: f64,
}

/// Smallest integer not below `x`, after a `1e-9` guard against rounding.
pub fn ceil_guarded(x: f64) -> u64 {
    (x + 1e-9).ceil() as u64
}

/// Largest integer certainly within `x`: `floor(x + 1e-9)`.
pub fn floor_guarded(x: f64) -> u64 {
    (x + 1e-9).floor() as u64
}

fn log_base(x: f64, p: f64) -> f64 {
    x.ln() / p.ln()
}

impl BoundSet {
    pub fn for_params(params: &WeightParams) -> Self {
        let p = params.p() as f64;
        let a = params.a() as f64;
        let b = params.b() as f64;
        let ratio_sq = b * b * p * p / (a * a);
        let s1_bound = 80.0 * ratio_sq;
        let s2n_bound = 16.0 * p * (p + 3.0 * b / a);
        let nh_bound = 2.0 * log_base(18.0 * b * p / a, p) + 1.0;
        let s2_bound = 64.0 * p * (p + 3.0 * b / a) * log_base(18.0 * b * p * p / a, p);
        let total_bound = 160.0 * ratio_sq + s2_bound;
        BoundSet { s1_bound, s2n_bound, nh_bound, s2_bound, total_bound }
    }

    pub fn total_ceiling(&self) -> u64 {
        ceil_guarded(self.total_bound)
    }
}

/// `10^6 N^11 B` for the extension built at scale `N` from a base whose slices
/// are bounded by `B`. Saturates to infinity; reported, never asserted.
pub fn reduction_slice_bound(n: u64, base_bound: f64) -> f64 {
    1e6 * (n as f64).powi(11) * base_bound
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_for_three_one_two() {
        let b = BoundSet::for_params(&WeightParams::new(3, 1, 2).unwrap());
        assert_eq!(b.s1_bound, 2880.0);
        assert_eq!(b.s2n_bound, 432.0);
        assert!((b.nh_bound - 9.524).abs() < 1e-3);
        assert_eq!(floor_guarded(b.nh_bound), 9);
        assert!(b.total_bound > 14852.0 && b.total_bound < 14853.0);
        assert_eq!(b.total_ceiling(), 14853);
        assert!((b.s2_bound - 1728.0 * 324f64.ln() / 3f64.ln()).abs() < 1e-6);
    }

    #[test]
    fn guarded_rounding() {
        assert_eq!(ceil_guarded(3.0), 4);
        assert_eq!(ceil_guarded(2.5), 3);
        assert_eq!(floor_guarded(2.9999999999), 3);
    }
}
