//! Independent reference implementations used to cross-check the fast paths.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, VecDeque};

use crate::graph::{Cost, ImplicitGraph};
use crate::lattice::{checked_pow, SlowRule, Vertex, Window};

/// Slow-edge multiplicities over a window, by direct enumeration of the
/// defining triples `(n, x, y)`.
///
/// The horizontal slow edges at level `n` are
/// `(p^n x + (p^n - 1)/2, p^n y) - (p^n x + (p^n + 1)/2, p^n y)` with `p` not
/// dividing `y`; under [`SlowRule::CoprimeMidpoint`] `p` must not divide `x`
/// either. Vertical edges are the reflections.
pub struct SlowEdgeOracle {
    window: Window,
    horizontal: Vec<u8>,
    vertical: Vec<u8>,
}

impl SlowEdgeOracle {
    pub fn build(window: Window, p: i64, rule: SlowRule) -> Self {
        let cells = window.cells() as usize;
        let mut horizontal = vec![0u8; cells];
        let mut vertical = vec![0u8; cells];
        let extent = [window.x_min, window.x_max, window.y_min, window.y_max].iter().map(|c| c.unsigned_abs()).max().unwrap_or(0);
        let mut n = 0u32;
        while let Ok(m) = checked_pow(p, n) {
            if m as u64 > extent.max(1) {
                break;
            }
            let half = (m - 1) / 2;
            // Level-n lines p^n y with p not dividing y.
            let lines = |lo: i64, hi: i64| {
                (lo.div_euclid(m)..=hi.div_euclid(m) + 1).filter(move |&y| y != 0 && y % p != 0).map(move |y| y * m)
            };
            // Left endpoints p^n x + half within [lo, hi - 1].
            let starts = move |lo: i64, hi: i64| {
                (lo.div_euclid(m) - 1..=hi.div_euclid(m) + 1)
                    .filter(move |&x| rule == SlowRule::EveryMidpoint || x % p != 0)
                    .map(move |x| x * m + half)
                    .filter(move |&c| c >= lo && c < hi)
            };
            for d in lines(window.y_min, window.y_max).filter(|d| *d >= window.y_min && *d <= window.y_max) {
                for c in starts(window.x_min, window.x_max) {
                    let i = window.index(Vertex::new(c, d)).expect("inside window");
                    horizontal[i] = horizontal[i].saturating_add(1);
                }
            }
            for d in lines(window.x_min, window.x_max).filter(|d| *d >= window.x_min && *d <= window.x_max) {
                for c in starts(window.y_min, window.y_max) {
                    let i = window.index(Vertex::new(d, c)).expect("inside window");
                    vertical[i] = vertical[i].saturating_add(1);
                }
            }
            n += 1;
        }
        SlowEdgeOracle { window, horizontal, vertical }
    }

    /// Number of defining triples matching the edge from `v` to `v + (1, 0)`.
    pub fn horizontal_matches(&self, v: Vertex) -> u8 {
        self.window.index(v).map_or(0, |i| self.horizontal[i])
    }

    /// Number of defining triples matching the edge from `v` to `v + (0, 1)`.
    pub fn vertical_matches(&self, v: Vertex) -> u8 {
        self.window.index(v).map_or(0, |i| self.vertical[i])
    }
}

/// Breadth-first distances for unit-cost graphs.
pub fn bfs_distances<G: ImplicitGraph + ?Sized>(graph: &G, source: Vertex, window: &Window) -> HashMap<Vertex, Cost> {
    let mut dist = HashMap::new();
    let mut queue = VecDeque::new();
    let mut buf = Vec::new();
    dist.insert(source, 0);
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let dv = dist[&v];
        buf.clear();
        graph.neighbors(v, &mut buf);
        for &(w, _) in &buf {
            if window.contains(w) && !dist.contains_key(&w) {
                dist.insert(w, dv + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Binary-heap Dijkstra for arbitrary positive costs.
pub fn heap_dijkstra<G: ImplicitGraph + ?Sized>(graph: &G, source: Vertex, window: &Window) -> HashMap<Vertex, Cost> {
    let mut dist: HashMap<Vertex, Cost> = HashMap::new();
    let mut heap = BinaryHeap::new();
    let mut buf = Vec::new();
    dist.insert(source, 0);
    heap.push(Reverse((0, source)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if dist.get(&v).is_some_and(|&best| best < d) {
            continue;
        }
        buf.clear();
        graph.neighbors(v, &mut buf);
        for &(w, c) in &buf {
            if !window.contains(w) {
                continue;
            }
            let nd = d + c;
            if dist.get(&w).is_none_or(|&best| nd < best) {
                dist.insert(w, nd);
                heap.push(Reverse((nd, w)));
            }
        }
    }
    dist
}

/// `C(n, k)` in 128-bit arithmetic.
pub fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k.min(n));
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Lattice points with `|x| + |y| <= r`, by counting rows.
pub fn l1_ball_size(r: u64) -> u64 {
    let r = r as i64;
    (-r..=r).map(|x| (2 * (r - x.abs()) + 1) as u64).sum()
}

/// Cost of a path under the graph's edge costs, or `None` if a step is not an edge.
pub fn path_cost<G: ImplicitGraph + ?Sized>(graph: &G, path: &[Vertex]) -> Option<Cost> {
    let mut total = 0;
    let mut buf = Vec::new();
    for w in path.windows(2) {
        buf.clear();
        graph.neighbors(w[0], &mut buf);
        total += buf.iter().filter(|(x, _)| *x == w[1]).map(|&(_, c)| c).min()?;
    }
    Some(total)
}
