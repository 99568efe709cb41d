//! Unit edges of `Z^2` and the slow/fast classification of the fractal weighting.
//!
//! An edge is slow when it is the middle edge of a segment `[m*k, m*k + m]` of
//! length `m = p^n` lying on a line whose coordinate `d` has `v_p(d) = n`.
//! The level `n` is pinned by the valuation of the line coordinate, so each
//! edge is tested at exactly one scale.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::padic::valuation_unchecked;
use super::Vertex;
use crate::error::{GeoError, Result};

/// Which segment indices carry a slow middle edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SlowRule {
    /// Every `p^n`-segment on a level-`n` line has a slow middle edge. This is
    /// the rule realised by the explicit length-2/length-4 construction.
    #[default]
    EveryMidpoint,
    /// Only segments whose index `k` is coprime to `p` have a slow middle edge.
    CoprimeMidpoint,
}

impl SlowRule {
    pub fn name(self) -> &'static str {
        match self {
            SlowRule::EveryMidpoint => "every-midpoint",
            SlowRule::CoprimeMidpoint => "coprime-midpoint",
        }
    }
}

impl std::str::FromStr for SlowRule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "every-midpoint" | "every" => Ok(SlowRule::EveryMidpoint),
            "coprime-midpoint" | "coprime" => Ok(SlowRule::CoprimeMidpoint),
            _ => Err(format!("unknown slow-edge rule {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeClass {
    Fast,
    Slow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// An undirected edge, stored with the lexicographically smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> Vertex {
        self.u
    }

    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn span(&self) -> u64 {
        self.u.l1(self.v)
    }

    /// Orientation of an axis-parallel unit edge.
    pub fn unit_orientation(&self) -> Result<Orientation> {
        let dx = self.v.x as i128 - self.u.x as i128;
        let dy = self.v.y as i128 - self.u.y as i128;
        match (dx, dy) {
            (1, 0) => Ok(Orientation::Horizontal),
            (0, 1) => Ok(Orientation::Vertical),
            _ => Err(GeoError::NotUnitEdge(self.u, self.v)),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Classify the edge from `(along, line)` to `(along + 1, line)` on a line whose
/// fixed coordinate is `line`. Vertical edges use the transposed coordinates.
#[inline]
pub(crate) fn classify_on_line(along: i64, line: i64, p: i64, rule: SlowRule) -> EdgeClass {
    if line == 0 {
        return EdgeClass::Fast;
    }
    let p = p as i128;
    let n = valuation_unchecked(line as i128, p);
    // p^n <= |line| < 2^63, so this cannot overflow i128.
    let m = p.pow(n);
    let shifted = along as i128 - (m - 1) / 2;
    if shifted.rem_euclid(m) != 0 {
        return EdgeClass::Fast;
    }
    match rule {
        SlowRule::EveryMidpoint => EdgeClass::Slow,
        SlowRule::CoprimeMidpoint => {
            if (shifted / m) % p != 0 {
                EdgeClass::Slow
            } else {
                EdgeClass::Fast
            }
        }
    }
}

/// Slow/fast class of a unit edge under the default rule.
pub fn classify_edge(e: Edge, p: i64) -> Result<EdgeClass> {
    classify_edge_with(e, p, SlowRule::default())
}

pub fn classify_edge_with(e: Edge, p: i64, rule: SlowRule) -> Result<EdgeClass> {
    if p < 3 || p % 2 == 0 {
        return Err(GeoError::InvalidParams(format!("p must be odd and >= 3, got {p}")));
    }
    Ok(match e.unit_orientation()? {
        Orientation::Horizontal => classify_on_line(e.u.x, e.u.y, p, rule),
        Orientation::Vertical => classify_on_line(e.u.y, e.u.x, p, rule),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: (i64, i64), b: (i64, i64)) -> Edge {
        Edge::new(a.into(), b.into())
    }

    #[test]
    fn canonical_order() {
        let a = e((2, 1), (1, 1));
        assert_eq!(a.u(), Vertex::new(1, 1));
        assert_eq!(a, e((1, 1), (2, 1)));
    }

    #[test]
    fn coprime_rule_examples() {
        let r = SlowRule::CoprimeMidpoint;
        assert_eq!(classify_edge_with(e((1, 1), (2, 1)), 3, r), Ok(EdgeClass::Slow));
        assert_eq!(classify_edge_with(e((0, 1), (1, 1)), 3, r), Ok(EdgeClass::Fast));
        assert_eq!(classify_edge_with(e((4, 3), (5, 3)), 3, r), Ok(EdgeClass::Slow));
        // index 0 segment on the level-1 line y = 3
        assert_eq!(classify_edge_with(e((1, 3), (2, 3)), 3, r), Ok(EdgeClass::Fast));
    }

    #[test]
    fn every_midpoint_rule_examples() {
        assert_eq!(classify_edge(e((1, 1), (2, 1)), 3), Ok(EdgeClass::Slow));
        assert_eq!(classify_edge(e((0, 1), (1, 1)), 3), Ok(EdgeClass::Slow));
        assert_eq!(classify_edge(e((4, 3), (5, 3)), 3), Ok(EdgeClass::Slow));
        assert_eq!(classify_edge(e((1, 3), (2, 3)), 3), Ok(EdgeClass::Slow));
        assert_eq!(classify_edge(e((0, 3), (1, 3)), 3), Ok(EdgeClass::Fast));
        assert_eq!(classify_edge(e((2, 0), (3, 0)), 3), Ok(EdgeClass::Fast));
    }

    #[test]
    fn axis_lines_are_fast() {
        for x in -20..20 {
            assert_eq!(classify_edge(e((x, 0), (x + 1, 0)), 3), Ok(EdgeClass::Fast));
            assert_eq!(classify_edge(e((0, x), (0, x + 1)), 5), Ok(EdgeClass::Fast));
        }
    }

    #[test]
    fn rejects_non_unit_and_bad_p() {
        assert_eq!(
            classify_edge(e((0, 0), (1, 1)), 3),
            Err(GeoError::NotUnitEdge(Vertex::new(0, 0), Vertex::new(1, 1)))
        );
        assert!(classify_edge(e((0, 0), (2, 0)), 3).is_err());
        assert!(classify_edge(e((0, 0), (0, 0)), 3).is_err());
        assert!(classify_edge(e((0, 0), (1, 0)), 4).is_err());
    }

    #[test]
    fn extreme_coordinates() {
        let top = Vertex::new(i64::MAX - 1, i64::MIN);
        assert!(classify_edge(Edge::new(top, top.offset(1, 0).unwrap()), 3).is_ok());
    }
}
