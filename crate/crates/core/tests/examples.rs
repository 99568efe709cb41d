//! Worked examples through the public API, each against an independent oracle.

use std::collections::BTreeSet;

use geoslice::engine::{
    count_geodesics, distance, enumerate_geodesics, inflation_for, pair_fields, segment_geodesic, slice,
    slice_profile, window_for, Level,
};
use geoslice::extension::{appendix_graph, build_reduction, hex_brick_graph, triangular_graph};
use geoslice::lattice::{classify_edge, scaled_params};
use geoslice::verify::oracle::{binomial, heap_dijkstra};
use geoslice::{
    Edge, EdgeClass, ExtensionGraph, GeoError, ImplicitGraph, PlainGrid, ReductionSpec, SlowRule, Vertex,
    WeightParams, WeightedLattice, Window,
};

fn v(x: i64, y: i64) -> Vertex {
    Vertex::new(x, y)
}

fn h12() -> WeightedLattice {
    WeightedLattice::new(WeightParams::new(3, 1, 2).unwrap())
}

#[test]
fn window_inflation() {
    assert_eq!(inflation_for(&h12(), v(0, 0), v(6, 0)), 13);
    assert_eq!(inflation_for(&h12(), v(2, 2), v(2, 2)), 1);
    assert_eq!(inflation_for(&appendix_graph(), v(0, 0), v(10, 0)), 44);
    assert_eq!(inflation_for(&appendix_graph(), v(3, 3), v(3, 3)), 4);
}

#[test]
fn weighted_distances_match_a_heap_dijkstra() {
    let h = h12();
    let w = Window::centered(20).unwrap();
    let oracle = heap_dijkstra(&h, v(0, 0), &w);
    assert_eq!(distance(&h, v(0, 0), v(3, 0), &window_for(&h, v(0, 0), v(3, 0)).unwrap()).unwrap(), 3);
    assert_eq!(oracle[&v(3, 0)], 3);
    assert_eq!(distance(&h, v(4, 4), v(4, 4), &window_for(&h, v(4, 4), v(4, 4)).unwrap()).unwrap(), 0);
    for target in [v(1, 1), v(7, -3), v(9, 9), v(-5, 12)] {
        let win = window_for(&h, v(0, 0), target).unwrap();
        assert_eq!(distance(&h, v(0, 0), target, &win).unwrap(), oracle[&target], "{target}");
    }
}

#[test]
fn grid_slices_and_counts() {
    let g = PlainGrid;
    let w = window_for(&g, v(0, 0), v(3, 3)).unwrap();
    assert_eq!(slice(&g, v(0, 0), v(3, 3), 3, &w).unwrap().len(), 4);
    assert!(slice(&g, v(0, 0), v(3, 3), -1, &w).unwrap().is_empty());
    assert!(slice(&g, v(0, 0), v(3, 3), 7, &w).unwrap().is_empty());
    let report = slice_profile(&g, v(0, 0), v(5, 5), &window_for(&g, v(0, 0), v(5, 5)).unwrap()).unwrap();
    assert_eq!(report.sizes, vec![1, 2, 3, 4, 5, 6, 5, 4, 3, 2, 1]);
    assert_eq!(slice_profile(&g, v(1, 1), v(1, 1), &w).unwrap().sizes, vec![1]);
    for (x, want) in [(2i64, 6u64), (10, 184756)] {
        let w = window_for(&g, v(0, 0), v(x, x)).unwrap();
        assert_eq!(count_geodesics(&g, v(0, 0), v(x, x), &w, u64::MAX).unwrap(), Some(want));
        assert_eq!(binomial(2 * x as u64, x as u64), want as u128);
    }
    assert_eq!(count_geodesics(&g, v(2, 2), v(2, 2), &w, 10).unwrap(), Some(1));
}

#[test]
fn enumeration() {
    let g = PlainGrid;
    let w = window_for(&g, v(0, 0), v(2, 2)).unwrap();
    assert_eq!(enumerate_geodesics(&g, v(0, 0), v(1, 1), &w, 10).unwrap().len(), 2);
    assert_eq!(enumerate_geodesics(&g, v(0, 0), v(2, 2), &w, 5), Err(GeoError::CapExceeded(5)));
    let h = h12();
    let paths = enumerate_geodesics(&h, v(0, 0), v(2, 0), &window_for(&h, v(0, 0), v(2, 0)).unwrap(), 10).unwrap();
    assert_eq!(paths, vec![vec![v(0, 0), v(1, 0), v(2, 0)]]);
}

#[test]
fn weighted_profile_matches_enumeration() {
    let h = h12();
    let (u, t) = (v(0, 0), v(9, 0));
    let w = window_for(&h, u, t).unwrap();
    let pf = pair_fields(&h, u, t, &w).unwrap();
    let paths = enumerate_geodesics(&h, u, t, &w, 100_000).unwrap();
    let mut by_k = vec![BTreeSet::new(); pf.d as usize + 1];
    for p in &paths {
        let mut c = 0;
        by_k[0].insert(p[0]);
        for pair in p.windows(2) {
            c += h.neighbor_list(pair[0]).iter().find(|(x, _)| *x == pair[1]).unwrap().1;
            by_k[c as usize].insert(pair[1]);
        }
    }
    for (k, set) in by_k.iter().enumerate() {
        assert_eq!(pf.slice(k as i64).len(), set.len(), "k = {k}");
    }
}

#[test]
fn appendix_profile_agrees_with_two_independent_searches() {
    let g = appendix_graph();
    let (u, t) = (v(0, 0), v(40, 40));
    let w = window_for(&g, u, t).unwrap();
    let report = slice_profile(&g, u, t, &w).unwrap();
    let from_u = heap_dijkstra(&g, u, &w);
    let from_t = heap_dijkstra(&g, t, &w);
    let d = from_u[&t];
    assert_eq!(report.distance, d);
    let mut sizes = vec![0usize; d as usize + 1];
    for (x, cu) in &from_u {
        if from_t.get(x).is_some_and(|ct| cu + ct == d) {
            sizes[*cu as usize] += 1;
        }
    }
    assert_eq!(report.sizes, sizes);
    assert!(report.max_size >= 1);
}

#[test]
fn segmentation_examples() {
    let path: Vec<Vertex> = vec![v(2, 0), v(1, 0), v(0, 0), v(0, 1)];
    assert_eq!(segment_geodesic(&path, 3).unwrap().n, Level::Infinite);
    let s = segment_geodesic(&[v(1, 1), v(2, 1)], 3).unwrap();
    assert_eq!((s.n, s.u_tilde, s.v_tilde), (Level::Finite(0), v(1, 1), v(2, 1)));
    let s = segment_geodesic(&[v(3, 3), v(3, 2), v(3, 1), v(3, 0)], 3).unwrap();
    assert_eq!((s.n, s.u_tilde, s.v_tilde, s.s2()), (Level::Finite(1), v(3, 3), v(3, 0), 0..4));
}

#[test]
fn construction_examples() {
    let params = WeightParams::new(3, 1, 2).unwrap();
    let spec = ReductionSpec::new(params, 1, 22).unwrap();
    let g = build_reduction(spec, std::sync::Arc::new(PlainGrid)).unwrap();
    assert!(g.neighbor_list(v(0, 0)).contains(&(v(22, 0), 1)));
    assert_eq!(classify_edge(Edge::new(v(1, 1), v(2, 1)), 3).unwrap(), EdgeClass::Slow);
    assert!(g.is_new_edge(v(22, 22), v(33, 22)) && g.is_new_edge(v(33, 22), v(44, 22)));
    assert!(ReductionSpec::new(params, 1, 20).is_err());

    let a = appendix_graph();
    let nb: BTreeSet<Vertex> = a.neighbor_list(v(0, 0)).into_iter().map(|(x, _)| x).collect();
    let want: BTreeSet<Vertex> = [v(1, 0), v(-1, 0), v(0, 1), v(0, -1), v(4, 0), v(-4, 0), v(0, 4), v(0, -4)].into();
    assert_eq!(nb, want);
    let nb: BTreeSet<Vertex> = a.neighbor_list(v(4, 0)).into_iter().map(|(x, _)| x).collect();
    assert!([v(4, 2), v(4, -2), v(0, 0), v(8, 0)].iter().all(|x| nb.contains(x)));
    for y in 0..9 {
        let split = a.is_new_edge(v(12, 4 * y), v(12, 4 * y + 2));
        assert_eq!(split, y % 3 == 1, "column 12 at y = {y}");
    }

    let t = triangular_graph();
    assert_eq!(t.neighbor_list(v(0, 0)).len(), 6);
    let hex = hex_brick_graph();
    assert!(Window::centered(10).unwrap().vertices().all(|x| hex.neighbor_list(x).len() == 3));
    assert!(matches!(hex, ExtensionGraph::HexBrick(_)));
}

#[test]
fn scaled_lattice_example() {
    let p = WeightParams::new(3, 1, 2).unwrap();
    let s = scaled_params(&p, 2).unwrap();
    assert_eq!((s.a(), s.b()), (9, 10));
    assert_eq!(p.with_rule(SlowRule::CoprimeMidpoint).rule(), SlowRule::CoprimeMidpoint);
}
