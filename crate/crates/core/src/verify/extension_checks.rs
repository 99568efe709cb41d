//! Checks on unweighted extensions: the reduction lemmas, grid baselines,
//! the hexagonal and triangular lattices and the explicit length-4 extension.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bounds::{reduction_slice_bound, BoundSet};
use crate::engine::{
    count_geodesics, dist_map, dist_map_limited, for_each_geodesic_vertex, pair_fields, window_for_capped,
    window_for_region, window_with_bound, GeodesicDag,
};
use crate::extension::export::{edge_list, edges_in_window, parse_edge_list};
use crate::extension::{
    hex_chords, hex_completion, AppendixGraph, HexBrickGraph, ReductionGraph, ReductionSpec, TriangularGraph,
};
use crate::graph::{Cost, ImplicitGraph, PlainGrid, WeightedLattice};
use crate::lattice::{Edge, SlowRule, Vertex, Window};

use super::config::{all_pairs, CheckConfig};
use super::driver::{engine_failure, pair_profile, per_source_bounded};
use super::oracle::{bfs_distances, binomial, l1_ball_size};
use super::report::{CheckResult, Witness};

fn global(detail: impl Into<String>) -> Witness {
    Witness { u: None, v: None, vertex: None, path: None, detail: detail.into() }
}

/// Instance sizes for [`check_reduction_lemmas`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReductionPlan {
    /// Distance equality over all pairs with coordinates in `[-r, r]`.
    pub distance_radius: i64,
    /// New-edge spans and special-pair closure over `[-s, s]^2`.
    pub special_extent: i64,
    /// Pairs for the long-geodesic statements.
    pub far_pairs: Vec<(Vertex, Vertex)>,
    /// Cell cap for the far pairs.
    pub far_cell_cap: u64,
}

impl ReductionPlan {
    pub fn for_spec(spec: &ReductionSpec) -> Self {
        let n = spec.n;
        ReductionPlan {
            distance_radius: 5,
            special_extent: 2 * n,
            // Lengths near 5N and 11N need diagonal separations near 45N and 110N.
            far_pairs: vec![
                (Vertex::new(n / 2, n / 2), Vertex::new(n / 2 + 45 * n, n / 2 + 45 * n)),
                (Vertex::new(n / 2, n / 2), Vertex::new(n / 2 + 110 * n, n / 2 + 110 * n)),
            ],
            far_cell_cap: 1 << 28,
        }
    }
}

/// The points of `(N Z)^2` nearest a special vertex along its line, and the
/// number of new edges between them.
fn anchor(spec: &ReductionSpec, v: Vertex) -> Vertex {
    let n = spec.n;
    if v.y.rem_euclid(n) == 0 {
        Vertex::new(v.x.div_euclid(n) * n, v.y)
    } else {
        Vertex::new(v.x, v.y.div_euclid(n) * n)
    }
}

/// The statements about the scale-`N` extension `G` of `Z^2`:
/// geodesics between special vertices stay special; `d_H(u, v) = d_G(Nu, Nv)`;
/// new edges span between `N / W` and `N`; geodesics of length at least `5N`
/// meet a special vertex; geodesics of length at least `11N` pass through
/// `(N Z)^2` within `6N` of each end.
pub fn check_reduction_lemmas(cfg: &CheckConfig, spec: &ReductionSpec, plan: &ReductionPlan) -> CheckResult {
    let name = format!("reduction_lemmas(N={})", spec.n);
    let mut out = CheckResult::new(name.clone());
    let g = match ReductionGraph::new(*spec, Arc::new(PlainGrid)) {
        Ok(g) => g,
        Err(e) => {
            out.fail(global(e.to_string()));
            return out.finish();
        }
    };
    let h = WeightedLattice::new(spec.weights);
    let n = spec.n;
    let w = spec.w as i64;

    // New-edge spans.
    let region = Window::centered(plan.special_extent).expect("extent fits");
    let (mut lo, mut hi) = (u64::MAX, 0);
    for v in region.vertices() {
        for x in g.new_edge_neighbors(v) {
            let span = v.l1(x);
            out.instances += 1;
            lo = lo.min(span);
            hi = hi.max(span);
            if span < (n / w) as u64 || span > n as u64 {
                out.fail(Witness::pair(v, x, format!("new edge spans {span}, outside [{}, {n}]", n / w)));
            }
        }
    }
    out.record_max("new_edge_span_max", hi as f64);
    out.note(format!("new-edge spans in {region} range over [{lo}, {hi}]"));

    // Distance equality.
    let boxed = Window::centered(plan.distance_radius).expect("radius fits");
    let verts: Vec<Vertex> = boxed.vertices().collect();
    let pairs: Vec<(Vertex, Vertex)> = all_pairs(&verts).into_iter().filter(|(u, v)| u != v).collect();
    let mut d_h: HashMap<(Vertex, Vertex), Cost> = HashMap::new();
    match window_for_region(&h, &boxed, cfg.cell_cap) {
        Ok(hw) => {
            for &u in &verts {
                match dist_map(&h, u, &hw) {
                    Ok(f) => {
                        for &v in &verts {
                            if let Some(c) = f.cost(v) {
                                d_h.insert((u.checked_scale(n).unwrap(), v.checked_scale(n).unwrap()), c);
                            }
                        }
                    }
                    Err(e) => out.fail(global(format!("H field from {u}: {e}"))),
                }
            }
        }
        Err(e) => out.fail(global(format!("H window: {e}"))),
    }
    let scaled: Vec<(Vertex, Vertex)> =
        pairs.iter().map(|&(u, v)| (u.checked_scale(n).unwrap(), v.checked_scale(n).unwrap())).collect();
    // A window sized for d_H finds d_G exactly whenever d_G <= d_H, which the
    // emulation guarantees, and reports more than d_H otherwise.
    let eq = per_source_bounded(&name, &g, &scaled, cfg.cell_cap, |u, v| d_h[&(u, v)], |field, targets, _, r| {
        let u = field.source();
        for &v in targets {
            r.instances += 1;
            let want = d_h[&(u, v)];
            match field.cost(v) {
                Some(got) if got == want => {}
                got => r.fail(Witness::pair(u, v, format!("d_H = {want} but d_G = {got:?}"))),
            }
        }
    });
    out.absorb(eq);

    // Special-pair closure.
    let special: Vec<Vertex> = region.vertices().filter(|&v| g.is_special(v)).collect();
    let sp_pairs: Vec<(Vertex, Vertex)> = all_pairs(&special).into_iter().filter(|(u, v)| u != v).collect();
    let bound = |u: Vertex, v: Vertex| -> Cost {
        let (a, b) = (anchor(spec, u), anchor(spec, v));
        (2 * w) as Cost + spec.w * (a.l1(b) / n as u64)
    };
    let closure = per_source_bounded(&name, &g, &sp_pairs, cfg.cell_cap, bound, |field, targets, scratch, r| {
        let u = field.source();
        for &v in targets {
            r.instances += 1;
            let mut offender = None;
            let res = for_each_geodesic_vertex(&g, field, v, scratch, |x, _| {
                if offender.is_none() && !g.is_special(x) {
                    offender = Some(x);
                }
            });
            match res {
                Err(e) => engine_failure(r, u, v, e),
                Ok(_) => {
                    if let Some(x) = offender {
                        let mut wit = Witness::pair(u, v, "geodesic between special vertices leaves them").at(x);
                        if let Ok(dag) = GeodesicDag::build(&g, field, v) {
                            if let Some(i) = dag.index_of(x) {
                                wit = wit.along(dag.geodesic_through(i));
                            }
                        }
                        r.fail(wit);
                    }
                }
            }
        }
    });
    out.note(format!("{} special pairs in {region}", sp_pairs.len()));
    out.absorb(closure);

    // Long geodesics.
    for &(u, v) in &plan.far_pairs {
        out.absorb(check_far_pair(&g, &h, spec, u, v, plan.far_cell_cap, &name));
    }
    out.finish()
}

/// Both long-geodesic statements for one pair, decided over all geodesics by
/// folds on the geodesic DAG.
fn check_far_pair(
    g: &ReductionGraph,
    h: &WeightedLattice,
    spec: &ReductionSpec,
    u: Vertex,
    v: Vertex,
    cap: u64,
    name: &str,
) -> CheckResult {
    let mut r = CheckResult::new(name);
    let n = spec.n;
    // Walk to a corner of each block, then follow an H-geodesic between the corners.
    let corner = |x: Vertex| Vertex::new(x.x.div_euclid(n) * n, x.y.div_euclid(n) * n);
    let (a, b) = (corner(u), corner(v));
    let (ha, hb) = (Vertex::new(a.x / n, a.y / n), Vertex::new(b.x / n, b.y / n));
    let d_h = window_for_capped(h, ha, hb, cap).and_then(|w| dist_map_limited(h, ha, &w, None, Some(hb))).and_then(|f| f.require(hb));
    let upper = match d_h {
        Ok(d) => u.l1(a) + d + v.l1(b),
        Err(e) => {
            engine_failure(&mut r, u, v, e);
            return r;
        }
    };
    let dag = window_with_bound(g, u, v, upper, cap)
        .and_then(|w| dist_map_limited(g, u, &w, None, Some(v)))
        .and_then(|f| GeodesicDag::build(g, &f, v));
    let dag = match dag {
        Ok(d) => d,
        Err(crate::GeoError::WindowTooLarge { required, cap }) => {
            r.skipped += 1;
            r.note(format!("far pair {u} -> {v}: window needs {required} cells, cap {cap}"));
            return r;
        }
        Err(e) => {
            engine_failure(&mut r, u, v, e);
            return r;
        }
    };
    let d = dag.distance();
    r.instances += 1;
    r.record_max("far_pair_distance", d as f64);
    let five = 5 * n as Cost;
    let eleven = 11 * n as Cost;
    let six = 6 * n as Cost;
    if d >= five {
        let avoid = dag.reachable_states(0, |s, x| (!g.is_special(x)).then_some(s));
        if avoid != 0 {
            r.fail(Witness::pair(u, v, format!("a geodesic of length {d} avoids special vertices")));
        }
    } else {
        r.note(format!("far pair {u} -> {v} has length {d} < {five}; long-geodesic statements vacuous"));
    }
    if d >= eleven {
        let cost: HashMap<Vertex, Cost> = dag.vertices().iter().copied().zip(dag.costs().iter().copied()).collect();
        let mask = dag.reachable_states(0, |s, x| {
            if !x.is_multiple_of(n) {
                return Some(s);
            }
            let c = cost[&x];
            Some(s | u8::from(c < six) | (u8::from(d - c < six) << 1))
        });
        if mask & !(1 << 3) != 0 {
            r.fail(Witness::pair(u, v, format!("a geodesic of length {d} misses (NZ)^2 within 6N of an end")));
        }
    } else {
        r.note(format!("far pair {u} -> {v} has length {d} < {eleven}; the 11N statement is not exercised"));
    }
    r
}

/// Ball sizes, diagonal slices and diagonal geodesic counts in `Z^2`.
pub fn check_baselines() -> CheckResult {
    let mut out = CheckResult::new("baselines");
    for r in 0..=50u64 {
        out.instances += 1;
        let formula = 2 * r * r + 2 * r + 1;
        let w = Window::centered(r as i64 + 1).expect("small");
        let engine = dist_map(&PlainGrid, Vertex::ORIGIN, &w).map(|f| f.reached().filter(|&(_, c)| c <= r).count() as u64);
        match engine {
            Ok(e) if e == formula && l1_ball_size(r) == formula => {}
            other => out.fail(global(format!("ball r={r}: formula {formula}, engine {other:?}, rows {}", l1_ball_size(r)))),
        }
    }
    for x in 0..=12i64 {
        out.instances += 1;
        let v = Vertex::new(x, x);
        let size = window_for_capped(&PlainGrid, Vertex::ORIGIN, v, 1 << 20)
            .and_then(|w| pair_fields(&PlainGrid, Vertex::ORIGIN, v, &w))
            .map(|pf| pf.slice(x).len());
        if size != Ok(x as usize + 1) {
            out.fail(Witness::pair(Vertex::ORIGIN, v, format!("slice at k={x} has {size:?} vertices, want {}", x + 1)));
        }
    }
    for x in 0..=10i64 {
        out.instances += 1;
        let v = Vertex::new(x, x);
        let want = binomial(2 * x as u64, x as u64) as u64;
        let got = window_for_capped(&PlainGrid, Vertex::ORIGIN, v, 1 << 20)
            .and_then(|w| count_geodesics(&PlainGrid, Vertex::ORIGIN, v, &w, u64::MAX));
        if got != Ok(Some(want)) {
            out.fail(Witness::pair(Vertex::ORIGIN, v, format!("{got:?} geodesics, want {want}")));
        }
    }
    out.finish()
}

fn edge_set<G: ImplicitGraph + ?Sized>(g: &G, w: &Window) -> BTreeSet<Edge> {
    edges_in_window(g, w).into_iter().map(|(e, _)| e).collect()
}

/// The hexagonal lattice with its chords, the triangular lattice, and the
/// explicit length-4 extension, including an optional golden edge list for
/// the window `[0, 36]^2`.
pub fn check_tilings_and_appendix(cfg: &CheckConfig, golden: Option<&str>) -> CheckResult {
    let mut out = CheckResult::new("hex_triangular_appendix");

    // Hexagonal lattice.
    let hw = Window::new(0, 39, 0, 39).expect("fixed window");
    let grid = edge_set(&PlainGrid, &hw);
    let hex = edge_set(&HexBrickGraph, &hw);
    let chords: BTreeSet<Edge> = hex_chords(&hw).into_iter().map(|(a, b)| Edge::new(a, b)).collect();
    out.instances += 1;
    if edge_set(&hex_completion(), &hw) != grid {
        out.fail(global("hex completion differs from the grid"));
    }
    if !hex.is_disjoint(&chords) || hex.union(&chords).copied().collect::<BTreeSet<_>>() != grid {
        out.fail(global("hex edges and chords do not partition the grid edges"));
    }
    let search = hw.inflate(4).expect("small");
    for e in &chords {
        out.instances += 1;
        let dist = bfs_distances(&HexBrickGraph, e.u(), &search);
        let got = dist.get(&e.v()).copied();
        if got != Some(3) {
            out.fail(Witness::pair(e.u(), e.v(), format!("chord endpoints at hex distance {got:?}")));
        }
    }
    out.note(format!("{} chords in {hw}", chords.len()));

    // Triangular lattice.
    let tw = Window::centered(20).expect("small");
    let mut tri_max_span = 0;
    for v in tw.vertices() {
        out.instances += 1;
        let nb: BTreeSet<Vertex> = TriangularGraph.neighbor_list(v).into_iter().map(|(x, _)| x).collect();
        if nb.len() != 6 {
            out.fail(Witness::pair(v, v, format!("degree {}", nb.len())).at(v));
        }
        for x in nb {
            if x.l1(v) > 1 {
                tri_max_span = tri_max_span.max(x.l1(v));
                if x.l1(v) != 2 {
                    out.fail(Witness::pair(v, x, format!("added edge spans {}", x.l1(v))));
                }
            }
            if !TriangularGraph.neighbor_list(x).iter().any(|&(y, _)| y == v) {
                out.fail(Witness::pair(v, x, "asymmetric edge"));
            }
        }
    }
    out.record_max("triangular_added_span", tri_max_span as f64);

    // The length-4 extension.
    let aw = Window::new(0, 36, 0, 36).expect("fixed window");
    let mut spans = BTreeSet::new();
    for v in aw.vertices() {
        for x in AppendixGraph.new_edge_neighbors(v) {
            out.instances += 1;
            spans.insert(v.l1(x));
        }
    }
    if spans.iter().any(|s| *s != 2 && *s != 4) || spans.last() != Some(&4) {
        out.fail(global(format!("length-4 extension spans {spans:?}")));
    }
    out.record_max("appendix_max_span", spans.last().copied().unwrap_or(0) as f64);
    let spec = ReductionSpec { weights: cfg.params.with_rule(SlowRule::EveryMidpoint), m: 1, w: cfg.params.b(), n: 4 };
    match ReductionGraph::new_relaxed(spec, Arc::new(PlainGrid)) {
        Ok(red) if cfg.params.p() == 3 && cfg.params.b() == 2 => {
            out.instances += 1;
            let wide = Window::centered(60).expect("small");
            if edge_set(&red, &wide) != edge_set(&AppendixGraph, &wide) {
                out.fail(global("length-4 extension differs from the scale-4 emulation of H"));
            }
        }
        Ok(_) => {}
        Err(e) => out.fail(global(e.to_string())),
    }
    if let Some(text) = golden {
        out.instances += 1;
        match parse_edge_list(text) {
            Ok(want) => {
                let got = edges_in_window(&AppendixGraph, &aw);
                if got != want {
                    let want_set: BTreeSet<Edge> = want.iter().map(|(e, _)| *e).collect();
                    let got_set: BTreeSet<Edge> = got.iter().map(|(e, _)| *e).collect();
                    for e in got_set.symmetric_difference(&want_set).take(10) {
                        let side = if got_set.contains(e) { "extra" } else { "missing" };
                        out.fail(Witness::pair(e.u(), e.v(), format!("{side} edge against the golden list")));
                    }
                } else {
                    out.note(format!("golden edge list matches ({} edges)", got.len()));
                }
            }
            Err(e) => out.fail(global(format!("golden file: {e}"))),
        }
        // The canonical writer must reproduce the file byte for byte.
        if edge_list(&edges_in_window(&AppendixGraph, &aw), false) != text {
            out.fail(global("edge-list output differs from the golden bytes"));
        }
    }

    // Slice ladder.
    let bound = reduction_slice_bound(4, BoundSet::for_params(&cfg.params).total_bound);
    for j in 1..=3u32 {
        let s = 4 * 3i64.pow(j);
        for v in [Vertex::new(s, 0), Vertex::new(s, s), Vertex::new(s + 1, s / 2 + 3)] {
            out.instances += 1;
            match pair_profile(&AppendixGraph, Vertex::ORIGIN, v, cfg.cell_cap) {
                Ok(sizes) => {
                    let m = sizes.into_iter().max().unwrap_or(0);
                    out.record_max(&format!("appendix_ladder{j}_max"), m as f64);
                    if m as f64 > bound {
                        out.fail(Witness::pair(Vertex::ORIGIN, v, format!("slice of {m} above {bound:e}")));
                    }
                }
                Err(e) => engine_failure(&mut out, Vertex::ORIGIN, v, e),
            }
        }
    }
    out.bound("appendix_reduction_bound", bound);
    out.finish()
}
