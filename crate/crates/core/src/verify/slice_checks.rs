//! Strip classification, parent locality, level sets and slice-size bounds.

use std::collections::{BTreeSet, HashMap};

use rand::Rng;
use rayon::prelude::*;

use crate::bounds::{ceil_guarded, floor_guarded, BoundSet};
use crate::engine::{partial_slice_table, segment_geodesic, GeodesicDag, Level};
use crate::graph::{Cost, ImplicitGraph, WeightedLattice};
use crate::lattice::{checked_pow, m_parents, BlockRef, Orientation, StripRef, Vertex, Window};

use super::config::{all_pairs, random_pair_at_separation, CheckConfig};
use super::driver::{engine_failure, pair_profile, per_source, profile_from};
use super::report::{CheckResult, Witness};

/// Distinct pairs `u != v` from `region`.
pub fn region_pairs(region: &Window) -> Vec<(Vertex, Vertex)> {
    let verts: Vec<Vertex> = region.vertices().collect();
    all_pairs(&verts).into_iter().filter(|(u, v)| u != v).collect()
}

/// `count` seeded pairs with both endpoints uniform in `region`.
pub fn sampled_pairs(cfg: &CheckConfig, stream: &str, region: &Window, count: usize) -> Vec<(Vertex, Vertex)> {
    let mut rng = cfg.rng(stream);
    let mut pick = || Vertex::new(rng.gen_range(region.x_min..=region.x_max), rng.gen_range(region.y_min..=region.y_max));
    (0..count).map(|_| (pick(), pick())).filter(|(u, v)| u != v).collect()
}

fn in_open_strip(path: &[Vertex], m: i64) -> bool {
    StripRef::open_containing_all(path, m, Orientation::Horizontal).is_some()
        || StripRef::open_containing_all(path, m, Orientation::Vertical).is_some()
}

/// A geodesic avoids every open `p^n`-strip exactly when it meets `(p^n Z)^2`.
///
/// Pairs with at most `cap` geodesics are enumerated. Above the cap the
/// statement is decided over all geodesics at once by a state fold on the
/// geodesic DAG: paths meeting `(p^n Z)^2` are dropped, and the rest record
/// whether they met a horizontal and a vertical `p^n`-line. Meeting both is the
/// only way to leave every open strip without a lattice point.
pub fn check_strip_classification(cfg: &CheckConfig, n: u32, pairs: &[(Vertex, Vertex)]) -> CheckResult {
    let name = format!("strip_classification(n={n})");
    let h = WeightedLattice::new(cfg.params);
    let Ok(m) = checked_pow(cfg.params.p(), n) else {
        let mut r = CheckResult::new(name);
        r.fail(Witness { u: None, v: None, vertex: None, path: None, detail: "scale overflows".into() });
        return r.finish();
    };
    let cap = cfg.cap;
    let out = per_source(&name, &h, pairs, cfg.cell_cap, |field, targets, scratch, r| {
        let u = field.source();
        for &v in targets {
            r.instances += 1;
            let dag = match GeodesicDag::build_with(&h, field, v, scratch) {
                Ok(d) => d,
                Err(e) => {
                    engine_failure(r, u, v, e);
                    continue;
                }
            };
            if dag.count(cap).is_some() {
                let mut bad = None;
                let _ = dag.for_each_geodesic(cap, |g| {
                    let visits = g.iter().any(|w| w.is_multiple_of(m));
                    if bad.is_none() && visits == in_open_strip(g, m) {
                        bad = Some((g.to_vec(), visits));
                    }
                });
                if let Some((g, visits)) = bad {
                    let why = if visits { "meets the lattice inside an open strip" } else { "leaves every strip but misses the lattice" };
                    r.fail(Witness::pair(u, v, why).along(g));
                }
            } else {
                r.record_max("pairs_decided_by_fold", 1.0);
                let mask = dag.reachable_states(0, |s, w| {
                    if w.is_multiple_of(m) {
                        return None;
                    }
                    Some(s | u8::from(w.y.rem_euclid(m) == 0) | (u8::from(w.x.rem_euclid(m) == 0) << 1))
                });
                if mask & (1 << 3) != 0 {
                    r.fail(Witness::pair(u, v, "some geodesic leaves every strip but misses the lattice"));
                }
            }
        }
    });
    out.finish()
}

/// Two locality statements at scale `m = p^n`:
/// (i) a geodesic whose only `(mZ)^2` vertex is its endpoint `v` stays in every
/// closed `m`-block containing `u`, and `v` is an `m`-parent of `u`;
/// (ii) a geodesic whose first segment costs at least `2 b m` has level above `n`.
/// Both are applied to each enumerated geodesic and to its reversal.
pub fn check_parent_locality(cfg: &CheckConfig, n: u32, pairs: &[(Vertex, Vertex)]) -> CheckResult {
    let name = format!("parent_locality(n={n})");
    let h = WeightedLattice::new(cfg.params);
    let p = cfg.params.p();
    let Ok(m) = checked_pow(p, n) else {
        let mut r = CheckResult::new(name);
        r.fail(Witness { u: None, v: None, vertex: None, path: None, detail: "scale overflows".into() });
        return r.finish();
    };
    let threshold = 2 * cfg.params.b() * m as u64;
    let cap = cfg.cap;
    let out = per_source(&name, &h, pairs, cfg.cell_cap, |field, targets, scratch, r| {
        let u = field.source();
        for &v in targets {
            r.instances += 1;
            let dag = match GeodesicDag::build_with(&h, field, v, scratch) {
                Ok(d) => d,
                Err(e) => {
                    engine_failure(r, u, v, e);
                    continue;
                }
            };
            let d = dag.distance();
            let cost: HashMap<Vertex, Cost> = dag.vertices().iter().copied().zip(dag.costs().iter().copied()).collect();
            let mut bad: Option<(Vec<Vertex>, String)> = None;
            let mut first_bad = |g: &[Vertex], why: String| {
                if bad.is_none() {
                    bad = Some((g.to_vec(), why));
                }
            };
            let res = dag.for_each_geodesic(cap, |g| {
                let rev: Vec<Vertex> = g.iter().rev().copied().collect();
                for (path, from_end) in [(g, false), (&rev[..], true)] {
                    let start = path[0];
                    let end = *path.last().expect("non-empty");
                    let lattice_hits = path.iter().filter(|w| w.is_multiple_of(m)).count();
                    if end.is_multiple_of(m) && lattice_hits == 1 {
                        let parents = m_parents(start, m).unwrap_or_default();
                        if !parents.contains(&end) {
                            first_bad(path, format!("{end} is not a {m}-parent of {start}"));
                        }
                        for b in BlockRef::closed_containing(start, m) {
                            if let Some(w) = path.iter().find(|&&w| !b.contains(w)) {
                                first_bad(path, format!("{w} leaves the closed block {b:?}"));
                            }
                        }
                    }
                    let seg = segment_geodesic(path, p).expect("non-empty");
                    let c = cost[&seg.u_tilde];
                    let s1 = if from_end { d - c } else { c };
                    if s1 >= threshold && seg.n <= Level::Finite(n) {
                        first_bad(path, format!("first segment costs {s1} >= {threshold} but level is {}", seg.n));
                    }
                }
            });
            match res {
                Err(_) => {
                    r.skipped += 1;
                    r.note(format!("pairs above {cap} geodesics skipped"));
                }
                Ok(c) => r.record_max("max_geodesics_enumerated", c as f64),
            }
            if let Some((g, why)) = bad {
                r.fail(Witness::pair(u, v, why).along(g));
            }
        }
    });
    out.finish()
}

/// `N_H(u, v)` and `N_V(u, v)` from the geodesic DAG: `n` belongs to `N_H` when
/// some geodesic stays in the open horizontal `p^{n+1}`-strip of `u` and meets
/// `(p^n Z)^2`.
pub fn level_sets(dag: &GeodesicDag, p: i64) -> (BTreeSet<u32>, BTreeSet<u32>) {
    let extent = dag.vertices().iter().map(|w| w.x.unsigned_abs().max(w.y.unsigned_abs())).max().unwrap_or(0);
    let u = dag.source();
    let mut nh = BTreeSet::new();
    let mut nv = BTreeSet::new();
    let mut n = 0u32;
    while let (Ok(m), Ok(big)) = (checked_pow(p, n), checked_pow(p, n + 1)) {
        if m as u64 > extent {
            break;
        }
        for (set, axis) in [(&mut nh, Orientation::Horizontal), (&mut nv, Orientation::Vertical)] {
            let across = |w: Vertex| if axis == Orientation::Horizontal { w.y } else { w.x };
            let strip = across(u).div_euclid(big);
            let mask = dag.reachable_states(0, |s, w| {
                let c = across(w);
                if c.rem_euclid(big) == 0 || c.div_euclid(big) != strip {
                    return None;
                }
                Some(s | u8::from(w.is_multiple_of(m)))
            });
            if mask & 0b10 != 0 {
                set.insert(n);
            }
        }
        n += 1;
    }
    (nh, nv)
}

/// Both sides of the spacing inequality for `n1 < n2` in a level set, scaled by
/// `2 p^{n1}` to stay in integers. `delta` is the absolute coordinate gap along
/// the strip.
pub fn spacing_holds(a: i128, b: i128, p: i128, n1: u32, d: i128, delta: i128, l1: i128) -> bool {
    let q = p.pow(n1);
    let lhs_low = 2 * q * a * q + (b - a) * (l1 - 2 * q * p);
    let mid = d - a * delta;
    let low_ok = lhs_low < 2 * q * mid;
    let high_ok = q * mid < 8 * b * q * q * p + (b - a) * l1;
    low_ok && high_ok
}

/// Cardinality of `N_H`, `N_V` and the spacing inequality between their elements.
pub fn check_level_bounds(cfg: &CheckConfig, pairs: &[(Vertex, Vertex)]) -> CheckResult {
    let name = "level_bounds";
    let params = cfg.params;
    let h = WeightedLattice::new(params);
    let bounds = BoundSet::for_params(&params);
    let limit = floor_guarded(bounds.nh_bound) as usize;
    let (a, b, p) = (params.a() as i128, params.b() as i128, params.p() as i128);
    let mut out = per_source(name, &h, pairs, cfg.cell_cap, |field, targets, scratch, r| {
        let u = field.source();
        for &v in targets {
            r.instances += 1;
            let dag = match GeodesicDag::build_with(&h, field, v, scratch) {
                Ok(d) => d,
                Err(e) => {
                    engine_failure(r, u, v, e);
                    continue;
                }
            };
            let (nh, nv) = level_sets(&dag, params.p());
            r.record_max("max_|N_H|", nh.len() as f64);
            r.record_max("max_|N_V|", nv.len() as f64);
            let d = dag.distance() as i128;
            let l1 = u.l1(v) as i128;
            for (set, delta, label) in
                [(&nh, (u.x - v.x).unsigned_abs() as i128, "N_H"), (&nv, (u.y - v.y).unsigned_abs() as i128, "N_V")]
            {
                if set.len() > limit {
                    r.fail(Witness::pair(u, v, format!("|{label}| = {} exceeds {limit}: {set:?}", set.len())));
                }
                let levels: Vec<u32> = set.iter().copied().collect();
                for (i, &n1) in levels.iter().enumerate() {
                    if i + 1 < levels.len() && !spacing_holds(a, b, p, n1, d, delta, l1) {
                        r.fail(Witness::pair(u, v, format!("spacing inequality fails at n1={n1} in {label} = {set:?}")));
                    }
                }
            }
        }
    });
    out.bound("|N_H|,|N_V|", limit as f64);
    out.note("the coordinate gap in the spacing inequality is taken in absolute value");
    out.finish()
}

/// Pairs across scales: for each `j` in `1..=levels`, `per_scale` seeded pairs
/// at separation in `[3^j, 2 * 3^j]` around the origin.
pub fn ladder_pairs(cfg: &CheckConfig, stream: &str, levels: u32, per_scale: usize) -> Vec<(Vertex, Vertex)> {
    let mut rng = cfg.rng(stream);
    let mut out = Vec::new();
    for j in 1..=levels {
        let s = 3i64.pow(j);
        let Ok(region) = Window::centered(2 * s) else { continue };
        for _ in 0..per_scale {
            let sep = rng.gen_range(s..=2 * s) as u64;
            out.push(random_pair_at_separation(&mut rng, &region, sep));
        }
    }
    out
}

/// Largest slice over exhaustive pairs in `[-r, r]^2` and seeded pairs at
/// separation up to `max_separation`, against the total bound.
pub fn check_slice_bounds(cfg: &CheckConfig) -> CheckResult {
    let name = "slice_bounds";
    let params = cfg.params;
    let h = WeightedLattice::new(params);
    let bounds = BoundSet::for_params(&params);
    let ceiling = bounds.total_ceiling();
    let Ok(region) = Window::centered(cfg.exhaustive_radius) else {
        let mut r = CheckResult::new(name);
        r.fail(Witness { u: None, v: None, vertex: None, path: None, detail: "bad radius".into() });
        return r.finish();
    };
    let measure = |r: &mut CheckResult, u: Vertex, v: Vertex, sizes: &[usize]| {
        r.instances += 1;
        let max = sizes.iter().copied().max().unwrap_or(0);
        r.record_max("max_slice", max as f64);
        if max as u64 > ceiling {
            let k = sizes.iter().position(|&s| s == max).unwrap_or(0);
            r.fail(Witness::pair(u, v, format!("slice at k={k} has {max} vertices, bound {ceiling}")));
        }
    };
    let exhaustive = region_pairs(&region);
    let mut out = per_source(name, &h, &exhaustive, cfg.cell_cap, |field, targets, scratch, r| {
        let u = field.source();
        for &v in targets {
            match profile_from(&h, field, v, scratch) {
                Ok(sizes) => measure(r, u, v, &sizes),
                Err(e) => engine_failure(r, u, v, e),
            }
        }
    });
    let mut rng = cfg.rng(name);
    let sep_region = Window::centered(cfg.max_separation as i64).expect("separation fits");
    let seeded: Vec<(Vertex, Vertex)> = (0..cfg.random_pairs)
        .map(|_| {
            let sep = rng.gen_range(1..=cfg.max_separation.max(1));
            random_pair_at_separation(&mut rng, &sep_region, sep)
        })
        .collect();
    let parts: Vec<CheckResult> = seeded
        .par_iter()
        .map(|&(u, v)| {
            let mut r = CheckResult::new(name);
            match pair_profile(&h, u, v, cfg.cell_cap) {
                Ok(sizes) => measure(&mut r, u, v, &sizes),
                Err(e) => engine_failure(&mut r, u, v, e),
            }
            r
        })
        .collect();
    for p in parts {
        out.absorb(p);
    }
    out.bound("total", bounds.total_bound);
    out.note(format!(
        "{} exhaustive pairs in {region}, {} seeded pairs at separation <= {}",
        exhaustive.len(),
        seeded.len(),
        cfg.max_separation
    ));
    out.finish()
}

/// Partial slices from enumerated geodesics against their separate bounds.
pub fn check_partial_slice_bounds(cfg: &CheckConfig, pairs: &[(Vertex, Vertex)]) -> CheckResult {
    let name = "partial_slice_bounds";
    let params = cfg.params;
    let h = WeightedLattice::new(params);
    let bounds = BoundSet::for_params(&params);
    let limits = [
        ("s1", ceil_guarded(bounds.s1_bound)),
        ("s3", ceil_guarded(bounds.s1_bound)),
        ("s2n", ceil_guarded(bounds.s2n_bound)),
        ("s2", ceil_guarded(bounds.s2_bound)),
    ];
    let cap = cfg.cap;
    let mut out = per_source(name, &h, pairs, cfg.cell_cap, |field, targets, scratch, r| {
        let u = field.source();
        for &v in targets {
            r.instances += 1;
            let table = GeodesicDag::build_with(&h, field, v, scratch).and_then(|dag| partial_slice_table(&dag, params.p(), cap));
            let table = match table {
                Ok(t) => t,
                Err(crate::GeoError::CapExceeded(_)) => {
                    r.skipped += 1;
                    r.note(format!("pairs above {cap} geodesics skipped"));
                    continue;
                }
                Err(e) => {
                    engine_failure(r, u, v, e);
                    continue;
                }
            };
            for (k, part) in table.iter().enumerate() {
                let s2n = part.s2_by_level.iter().filter(|(l, _)| matches!(l, Level::Finite(_))).map(|(_, s)| s.len());
                let sizes = [part.s1.len(), part.s3.len(), s2n.max().unwrap_or(0), part.s2.len()];
                for ((key, limit), size) in limits.iter().zip(sizes) {
                    r.record_max(&format!("max_{key}"), size as f64);
                    if size as u64 > *limit {
                        r.fail(Witness::pair(u, v, format!("|{key}| = {size} at k={k} exceeds {limit}")));
                    }
                }
            }
        }
    });
    out.bound("s1,s3", bounds.s1_bound);
    out.bound("s2n", bounds.s2n_bound);
    out.bound("s2", bounds.s2_bound);
    out.finish()
}

/// Largest slice per separation band `[2 * 3^j, 4 * 3^j]`.
///
/// With `bound`, every band must stay within it. With `control`, the graph is
/// expected to be unbounded and every band must reach `3^j + 1`. Otherwise a
/// strictly increasing sequence of band maxima is flagged in the notes.
pub fn check_scale_stability(
    cfg: &CheckConfig,
    label: &str,
    graph: &dyn ImplicitGraph,
    bound: Option<f64>,
    control: bool,
    bands: u32,
    pairs_per_band: usize,
) -> CheckResult {
    let name = format!("scale_stability({label})");
    let mut rng = cfg.rng(&name);
    let mut out = CheckResult::new(name.clone());
    let mut maxima = Vec::new();
    for j in 1..=bands {
        let s = 3i64.pow(j);
        let (lo, hi) = (2 * s, 4 * s);
        let region = Window::centered(s).expect("small region");
        let mut pairs = vec![(Vertex::ORIGIN, Vertex::new(s, s)), (Vertex::ORIGIN, Vertex::new(lo, 0))];
        for _ in 0..pairs_per_band {
            let sep = rng.gen_range(lo..=hi) as u64;
            pairs.push(random_pair_at_separation(&mut rng, &region, sep));
        }
        let parts: Vec<(usize, CheckResult)> = pairs
            .par_iter()
            .map(|&(u, v)| {
                let mut r = CheckResult::new(name.clone());
                r.instances += 1;
                match pair_profile(graph, u, v, cfg.cell_cap) {
                    Ok(sizes) => (sizes.into_iter().max().unwrap_or(0), r),
                    Err(e) => {
                        engine_failure(&mut r, u, v, e);
                        (0, r)
                    }
                }
            })
            .collect();
        let mut band_max = 0;
        for (m, r) in parts {
            band_max = band_max.max(m);
            out.absorb(r);
        }
        out.record_max(&format!("band{j}_max"), band_max as f64);
        maxima.push(band_max);
        if let Some(bound) = bound {
            if band_max as u64 > ceil_guarded(bound) {
                out.fail(Witness { u: None, v: None, vertex: None, path: None, detail: format!("band {j} max {band_max} exceeds bound {bound}") });
            }
        }
        if control && (band_max as i64) < s + 1 {
            out.fail(Witness {
                u: None,
                v: None,
                vertex: None,
                path: None,
                detail: format!("control band {j} max {band_max} below {}", s + 1),
            });
        }
    }
    if let Some(b) = bound {
        out.bound("total", b);
    }
    if !control && maxima.len() > 1 && maxima.windows(2).all(|w| w[1] > w[0]) {
        out.note(format!("RED FLAG: band maxima grow monotonically: {maxima:?}"));
    }
    out.note(format!("band maxima {maxima:?}"));
    out.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{dist_map, window_for};
    use crate::graph::PlainGrid;
    use crate::lattice::WeightParams;

    fn h12() -> WeightedLattice {
        WeightedLattice::new(WeightParams::new(3, 1, 2).unwrap())
    }

    /// Level sets straight from the definition, by enumeration.
    fn level_sets_enumerated(dag: &GeodesicDag, p: i64) -> (BTreeSet<u32>, BTreeSet<u32>) {
        let mut nh = BTreeSet::new();
        let mut nv = BTreeSet::new();
        dag.for_each_geodesic(1_000_000, |g| {
            if let Level::Finite(n) = segment_geodesic(g, p).unwrap().n {
                let big = p.pow(n + 1);
                if StripRef::open_containing_all(g, big, Orientation::Horizontal).is_some() {
                    nh.insert(n);
                }
                if StripRef::open_containing_all(g, big, Orientation::Vertical).is_some() {
                    nv.insert(n);
                }
            }
        })
        .unwrap();
        (nh, nv)
    }

    #[test]
    fn level_fold_matches_enumeration() {
        let h = h12();
        for (u, v) in [((1, 1), (25, 7)), ((2, 4), (19, 5)), ((-4, 10), (13, 11)), ((5, 5), (6, 6)), ((1, 2), (31, 40))] {
            let (u, v) = (Vertex::from(u), Vertex::from(v));
            let w = window_for(&h, u, v).unwrap();
            let f = dist_map(&h, u, &w).unwrap();
            let dag = GeodesicDag::build(&h, &f, v).unwrap();
            assert_eq!(level_sets(&dag, 3), level_sets_enumerated(&dag, 3), "{u} {v}");
        }
    }

    #[test]
    fn unique_geodesic_has_one_level() {
        let h = h12();
        let (u, v) = (Vertex::new(1, 1), Vertex::new(2, 1));
        let w = window_for(&h, u, v).unwrap();
        let dag = GeodesicDag::build(&h, &dist_map(&h, u, &w).unwrap(), v).unwrap();
        assert_eq!(dag.count(10), Some(1));
        let (nh, nv) = level_sets(&dag, 3);
        assert_eq!(nh.union(&nv).count(), 1);
    }

    #[test]
    fn spacing_examples() {
        // d - a*delta comfortably between the two sides.
        assert!(spacing_holds(1, 2, 3, 0, 40, 20, 25));
        // Upper side broken.
        assert!(!spacing_holds(1, 2, 3, 0, 400, 20, 25));
    }

    #[test]
    fn small_checks_pass() {
        let cfg = CheckConfig::quick();
        let pairs = region_pairs(&Window::new(0, 9, 0, 9).unwrap());
        for n in 0..=1 {
            let r = check_strip_classification(&cfg, n, &pairs);
            assert!(r.pass, "{}", r.to_text());
            let r = check_parent_locality(&cfg, n, &pairs);
            assert!(r.pass, "{}", r.to_text());
        }
        assert!(check_level_bounds(&cfg, &ladder_pairs(&cfg, "t", 2, 5)).pass);
        let r = check_partial_slice_bounds(&cfg, &region_pairs(&Window::new(0, 5, 0, 5).unwrap()));
        assert!(r.pass, "{}", r.to_text());
        assert!(check_slice_bounds(&cfg).pass);
    }

    #[test]
    fn control_detects_growth_and_bounded_graph_passes() {
        let cfg = CheckConfig::quick();
        let grid = check_scale_stability(&cfg, "grid", &PlainGrid, None, true, 2, 3);
        assert!(grid.pass, "{}", grid.to_text());
        assert!(grid.extremes["band2_max"] >= 10.0);
        // The grid with a small bound must be caught.
        let caught = check_scale_stability(&cfg, "grid", &PlainGrid, Some(5.0), false, 2, 3);
        assert!(!caught.pass);
        assert!(caught.notes.iter().any(|n| n.contains("RED FLAG")));
        let h = check_scale_stability(&cfg, "H", &h12(), Some(14852.5), false, 2, 3);
        assert!(h.pass);
    }
}
