//! p-adic valuation and small integer helpers.

use crate::error::{GeoError, Result};

/// Largest `k` with `p^k | n`.
pub fn valuation(n: i64, p: i64) -> Result<u32> {
    if p < 2 {
        return Err(GeoError::InvalidModulus(p));
    }
    if n == 0 {
        return Err(GeoError::ValuationOfZero);
    }
    Ok(valuation_unchecked(n as i128, p as i128))
}

#[inline]
pub(crate) fn valuation_unchecked(mut n: i128, p: i128) -> u32 {
    debug_assert!(n != 0 && p >= 2);
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

/// Valuation with `v(0) = None` (read as infinity).
#[inline]
pub fn valuation_or_inf(n: i64, p: i64) -> Option<u32> {
    if n == 0 {
        None
    } else {
        Some(valuation_unchecked(n as i128, p as i128))
    }
}

/// `p^n` with overflow check.
pub fn checked_pow(p: i64, n: u32) -> Result<i64> {
    p.checked_pow(n).ok_or(GeoError::Overflow("p^n"))
}

/// Largest `n` such that the vertex lies in `(p^n Z)^2`; `None` for the origin.
pub fn vertex_level(x: i64, y: i64, p: i64) -> Option<u32> {
    match (valuation_or_inf(x, p), valuation_or_inf(y, p)) {
        (None, None) => None,
        (Some(a), None) | (None, Some(a)) => Some(a),
        (Some(a), Some(b)) => Some(a.min(b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(9, 3), Ok(2));
        assert_eq!(valuation(5, 3), Ok(0));
        assert_eq!(valuation(54, 3), Ok(3));
        assert_eq!(valuation(-54, 3), Ok(3));
        assert_eq!(valuation(i64::MIN, 2), Ok(63));
    }

    #[test]
    fn valuation_errors() {
        assert_eq!(valuation(0, 3), Err(GeoError::ValuationOfZero));
        assert_eq!(valuation(4, 1), Err(GeoError::InvalidModulus(1)));
    }

    #[test]
    fn levels() {
        assert_eq!(vertex_level(0, 0, 3), None);
        assert_eq!(vertex_level(0, 9, 3), Some(2));
        assert_eq!(vertex_level(3, 9, 3), Some(1));
        assert_eq!(vertex_level(1, 9, 3), Some(0));
    }
}
