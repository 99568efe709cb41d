//! Splitting a geodesic at its highest lattice level.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::lattice::{vertex_level, Vertex};

/// `n(gamma)`: the largest `n` such that the path meets `(p^n Z)^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(n) => write!(f, "{n}"),
            Level::Infinite => f.write_str("inf"),
        }
    }
}

/// The split of a path into `s1 = path[..iu]`, `s2 = path[iu..=iv]` and
/// `s3 = path[iv + 1..]`, where `iu`, `iv` are the first and last visits to
/// `(p^n Z)^2`. The three segments partition the vertices of the path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segmentation {
    pub n: Level,
    pub u_tilde: Vertex,
    pub v_tilde: Vertex,
    pub iu: usize,
    pub iv: usize,
    pub len: usize,
}

impl Segmentation {
    pub fn s1(&self) -> Range<usize> {
        0..self.iu
    }

    pub fn s2(&self) -> Range<usize> {
        self.iu..self.iv + 1
    }

    pub fn s3(&self) -> Range<usize> {
        self.iv + 1..self.len
    }

    /// Segment (1, 2 or 3) holding the vertex at position `i`.
    pub fn segment_of(&self, i: usize) -> u8 {
        if i < self.iu {
            1
        } else if i <= self.iv {
            2
        } else {
            3
        }
    }
}

#[inline]
fn level_of(v: Vertex, p: i64) -> Level {
    vertex_level(v.x, v.y, p).map_or(Level::Infinite, Level::Finite)
}

/// Segment a non-empty path. Returns `None` for the empty path.
pub fn segment_geodesic(path: &[Vertex], p: i64) -> Option<Segmentation> {
    let levels: Vec<Level> = path.iter().map(|&v| level_of(v, p)).collect();
    let n = *levels.iter().max()?;
    let iu = levels.iter().position(|&l| l == n)?;
    let iv = levels.iter().rposition(|&l| l == n)?;
    Some(Segmentation { n, u_tilde: path[iu], v_tilde: path[iv], iu, iv, len: path.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(pts: &[(i64, i64)]) -> Vec<Vertex> {
        pts.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn through_origin() {
        let s = segment_geodesic(&vs(&[(2, 0), (1, 0), (0, 0), (0, 1)]), 3).unwrap();
        assert_eq!(s.n, Level::Infinite);
        assert_eq!((s.u_tilde, s.v_tilde), (Vertex::ORIGIN, Vertex::ORIGIN));
        assert_eq!((s.s1(), s.s2(), s.s3()), (0..2, 2..3, 3..4));
    }

    #[test]
    fn level_zero_edge() {
        let s = segment_geodesic(&vs(&[(1, 1), (2, 1)]), 3).unwrap();
        assert_eq!(s.n, Level::Finite(0));
        assert_eq!((s.u_tilde, s.v_tilde), (Vertex::new(1, 1), Vertex::new(2, 1)));
        assert!(s.s1().is_empty() && s.s3().is_empty());
    }

    #[test]
    fn level_one_column() {
        let s = segment_geodesic(&vs(&[(3, 3), (3, 2), (3, 1), (3, 0)]), 3).unwrap();
        assert_eq!(s.n, Level::Finite(1));
        assert_eq!((s.u_tilde, s.v_tilde), (Vertex::new(3, 3), Vertex::new(3, 0)));
        assert_eq!(s.s2(), 0..4);
    }

    #[test]
    fn empty_path() {
        assert!(segment_geodesic(&[], 3).is_none());
    }
}
