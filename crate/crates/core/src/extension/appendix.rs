//! The explicit extension with edges of length two and four through `(4Z)^2`.
//!
//! The vertical segment `(4x, 4y)-(4x, 4y + 4)` is split at `(4x, 4y + 2)` when
//! `x != 0` and `3^v | y - (3^v - 1)/2` with `v = v_3(x)`, and is a single
//! edge otherwise. Horizontal segments follow by swapping the roles of `x`, `y`.

use crate::graph::{Cost, ImplicitGraph};
use crate::lattice::{classify_on_line, EdgeClass, SlowRule, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AppendixGraph;

/// Whether the segment from `4 * along` to `4 * along + 4` on the line
/// `4 * line` is split at its midpoint.
#[inline]
fn split(along: i64, line: i64) -> bool {
    classify_on_line(along, line, 3, SlowRule::EveryMidpoint) == EdgeClass::Slow
}

/// Long-edge neighbours along a `4`-line in the varying coordinate.
fn line_neighbors(along: i64, line: i64, out: &mut Vec<i64>) {
    let l = line / 4;
    match along.rem_euclid(4) {
        0 => {
            let q = along / 4;
            let up = if split(q, l) { 2 } else { 4 };
            let down = if split(q - 1, l) { 2 } else { 4 };
            out.extend(along.checked_add(up));
            out.extend(along.checked_sub(down));
        }
        2 => {
            if split(along.div_euclid(4), l) {
                out.extend(along.checked_add(2));
                out.extend(along.checked_sub(2));
            }
        }
        _ => {}
    }
}

impl AppendixGraph {
    pub fn new_edge_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(2);
        if v.x.rem_euclid(4) == 0 {
            line_neighbors(v.y, v.x, &mut buf);
            out.extend(buf.drain(..).map(|y| Vertex::new(v.x, y)));
        }
        if v.y.rem_euclid(4) == 0 {
            line_neighbors(v.x, v.y, &mut buf);
            out.extend(buf.drain(..).map(|x| Vertex::new(x, v.y)));
        }
        out
    }

    pub fn is_new_edge(&self, u: Vertex, v: Vertex) -> bool {
        u.l1(v) > 1 && self.new_edge_neighbors(u).contains(&v)
    }
}

impl ImplicitGraph for AppendixGraph {
    fn neighbors(&self, v: Vertex, out: &mut Vec<(Vertex, Cost)>) {
        out.extend(v.unit_neighbors().map(|w| (w, 1)));
        out.extend(self.new_edge_neighbors(v).into_iter().map(|w| (w, 1)));
    }
    fn max_span(&self) -> u64 {
        4
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
        "appendix".to_string()
    }
}
