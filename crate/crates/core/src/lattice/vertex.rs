use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GeoError, Result};

/// A point of the square lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub x: i64,
    pub y: i64,
}

impl Vertex {
    pub const ORIGIN: Vertex = Vertex { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Vertex { x, y }
    }

    /// Translate by `(dx, dy)`, or `None` if either coordinate leaves `i64`.
    pub fn offset(self, dx: i64, dy: i64) -> Option<Vertex> {
        Some(Vertex {
            x: self.x.checked_add(dx)?,
            y: self.y.checked_add(dy)?,
        })
    }

    pub fn checked_scale(self, m: i64) -> Result<Vertex> {
        Ok(Vertex {
            x: self.x.checked_mul(m).ok_or(GeoError::Overflow("vertex scale"))?,
            y: self.y.checked_mul(m).ok_or(GeoError::Overflow("vertex scale"))?,
        })
    }

    /// The four unit neighbours in the order +x, -x, +y, -y (skipping any outside `i64`).
    pub fn unit_neighbors(self) -> impl Iterator<Item = Vertex> {
        [(1, 0), (-1, 0), (0, 1), (0, -1)]
            .into_iter()
            .filter_map(move |(dx, dy)| self.offset(dx, dy))
    }

    /// `d_{Z^2}`, the L1 distance. Computed in `i128` so it never overflows.
    pub fn l1(self, other: Vertex) -> u64 {
        let dx = (self.x as i128 - other.x as i128).unsigned_abs();
        let dy = (self.y as i128 - other.y as i128).unsigned_abs();
        u64::try_from(dx + dy).unwrap_or(u64::MAX)
    }

    /// Chebyshev distance.
    pub fn linf(self, other: Vertex) -> u64 {
        let dx = (self.x as i128 - other.x as i128).unsigned_abs();
        let dy = (self.y as i128 - other.y as i128).unsigned_abs();
        u64::try_from(dx.max(dy)).unwrap_or(u64::MAX)
    }

    pub fn is_multiple_of(self, m: i64) -> bool {
        m != 0 && self.x % m == 0 && self.y % m == 0
    }

    /// Swap coordinates (reflection across `x = y`).
    pub fn transpose(self) -> Vertex {
        Vertex { x: self.y, y: self.x }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Vertex {
    fn from((x, y): (i64, i64)) -> Self {
        Vertex { x, y }
    }
}

/// Parses `"x,y"` (surrounding parentheses and spaces are tolerated).
impl FromStr for Vertex {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut it = t.split(',');
        let (Some(xs), Some(ys), None) = (it.next(), it.next(), it.next()) else {
            return Err(format!("expected \"x,y\", got {s:?}"));
        };
        let x = xs.trim().parse::<i64>().map_err(|e| format!("bad x in {s:?}: {e}"))?;
        let y = ys.trim().parse::<i64>().map_err(|e| format!("bad y in {s:?}: {e}"))?;
        Ok(Vertex { x, y })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let v: Vertex = "-3,7".parse().unwrap();
        assert_eq!(v, Vertex::new(-3, 7));
        assert_eq!(v.to_string(), "(-3, 7)");
        assert_eq!("(1, 2)".parse::<Vertex>().unwrap(), Vertex::new(1, 2));
        assert!("1,2,3".parse::<Vertex>().is_err());
        assert!("a,2".parse::<Vertex>().is_err());
    }

    #[test]
    fn offsets_are_checked() {
        let v = Vertex::new(i64::MAX, 0);
        assert_eq!(v.offset(1, 0), None);
        assert_eq!(v.unit_neighbors().count(), 3);
        assert!(Vertex::new(i64::MAX / 2 + 1, 0).checked_scale(2).is_err());
    }

    #[test]
    fn distances() {
        let a = Vertex::new(-2, 3);
        let b = Vertex::new(4, -1);
        assert_eq!(a.l1(b), 10);
        assert_eq!(a.linf(b), 6);
        assert_eq!(Vertex::new(i64::MIN, 0).l1(Vertex::new(i64::MAX, 0)), u64::MAX);
    }
}
