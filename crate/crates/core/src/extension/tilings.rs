//! The triangular and hexagonal lattices drawn on the vertex set `Z^2`.

use crate::graph::{Cost, ImplicitGraph};
use crate::lattice::Vertex;

/// `Z^2` plus the diagonal `(x, y)-(x + 1, y + 1)` in every unit cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TriangularGraph;

impl ImplicitGraph for TriangularGraph {
    fn neighbors(&self, v: Vertex, out: &mut Vec<(Vertex, Cost)>) {
        out.extend(v.unit_neighbors().map(|w| (w, 1)));
        out.extend(v.offset(1, 1).map(|w| (w, 1)));
        out.extend(v.offset(-1, -1).map(|w| (w, 1)));
    }
    fn max_span(&self) -> u64 {
        2
    }
    fn min_cost(&self) -> Cost {
        1
    }
    fn max_cost(&self) -> Cost {
        1
    }
    fn grid_stretch(&self) -> Cost {
        1
    }
    fn name(&self) -> String {
        "triangular".to_string()
    }
}

/// Brick-wall hexagonal lattice: all horizontal unit edges, and the vertical
/// edge `(x, y)-(x, y + 1)` exactly when `x + y` is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HexBrickGraph;

impl HexBrickGraph {
    #[inline]
    pub fn has_vertical(lower: Vertex) -> bool {
        (lower.x as i128 + lower.y as i128).rem_euclid(2) == 0
    }
}

impl ImplicitGraph for HexBrickGraph {
    fn neighbors(&self, v: Vertex, out: &mut Vec<(Vertex, Cost)>) {
        out.extend(v.offset(1, 0).map(|w| (w, 1)));
        out.extend(v.offset(-1, 0).map(|w| (w, 1)));
        if Self::has_vertical(v) {
            out.extend(v.offset(0, 1).map(|w| (w, 1)));
        } else {
            out.extend(v.offset(0, -1).map(|w| (w, 1)));
        }
    }
    fn max_span(&self) -> u64 {
        1
    }
    fn min_cost(&self) -> Cost {
        1
    }
    fn max_cost(&self) -> Cost {
        1
    }
    fn grid_stretch(&self) -> Cost {
        3
    }
    fn name(&self) -> String {
        "hex".to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_neighbors_of_origin() {
        let mut n: Vec<Vertex> = TriangularGraph.neighbor_list(Vertex::ORIGIN).into_iter().map(|(w, _)| w).collect();
        n.sort();
        let want: Vec<Vertex> = vec![(-1, -1).into(), (-1, 0).into(), (0, -1).into(), (0, 1).into(), (1, 0).into(), (1, 1).into()];
        assert_eq!(n, want);
    }

    #[test]
    fn hex_is_cubic_and_symmetric() {
        for x in -6..6 {
            for y in -6..6 {
                let v = Vertex::new(x, y);
                let n = HexBrickGraph.neighbor_list(v);
                assert_eq!(n.len(), 3);
                for (w, _) in n {
                    assert!(HexBrickGraph.neighbor_list(w).contains(&(v, 1)));
                }
            }
        }
    }
}
