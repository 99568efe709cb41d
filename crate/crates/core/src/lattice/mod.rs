//! Coordinate algebra on `Z^2` and the fractal two-weight lattice.

mod edge;
mod padic;
mod path;
mod regions;
mod vertex;
mod weights;

pub use edge::{classify_edge, classify_edge_with, Edge, EdgeClass, Orientation, SlowRule};
pub use padic::{checked_pow, valuation, valuation_or_inf, vertex_level};
pub use path::{check_unit_path, dilate_path, straight_path};
pub use regions::{
    alignment, distinguished_flags, is_distinguished, m_parents, Alignment, BlockRef, BlockSide, StripRef, Window,
    MAX_WINDOW_EXTENT,
};
pub use vertex::Vertex;
pub use weights::{edge_weight, neighbors_weighted, scaled_params, WeightParams};

pub(crate) use edge::classify_on_line;
pub(crate) use weights::push_weighted_neighbors;

#[cfg(test)]
mod proptests {
    use proptest::prelude::*;

    use super::*;

    proptest! {
        #[test]
        fn reflection_symmetry(x in -5000i64..5000, y in -5000i64..5000, p in prop::sample::select(vec![3i64, 5, 7])) {
            for rule in [SlowRule::EveryMidpoint, SlowRule::CoprimeMidpoint] {
                let h = classify_edge_with(Edge::new((x, y).into(), (x + 1, y).into()), p, rule).unwrap();
                let v = classify_edge_with(Edge::new((y, x).into(), (y, x + 1).into()), p, rule).unwrap();
                prop_assert_eq!(h, v);
            }
        }

        #[test]
        fn pz2_vertices_only_have_fast_edges(x in -2000i64..2000, y in -2000i64..2000, p in prop::sample::select(vec![3i64, 5, 7])) {
            let v = Vertex::new(x * p, y * p);
            for rule in [SlowRule::EveryMidpoint, SlowRule::CoprimeMidpoint] {
                let params = WeightParams::new(p, 1, 2).unwrap().with_rule(rule);
                for (_, w) in neighbors_weighted(v, &params) {
                    prop_assert_eq!(w, 1);
                }
            }
        }

        #[test]
        fn parents_are_in_every_closed_block(x in -500i64..500, y in -500i64..500, m in 1i64..30) {
            let u = Vertex::new(x, y);
            let parents = m_parents(u, m).unwrap();
            prop_assert!(matches!(parents.len(), 1 | 2 | 4));
            for b in BlockRef::closed_containing(u, m) {
                for &v in &parents {
                    prop_assert!(b.contains(v));
                }
            }
        }

        #[test]
        fn scaled_params_compose(a in 1u64..50, gap in 1u64..50, m in 0u32..6, n in 0u32..6, p in prop::sample::select(vec![3i64, 5, 7])) {
            let base = WeightParams::new(p, a, a + gap).unwrap();
            let two_step = scaled_params(&scaled_params(&base, m).unwrap(), n).unwrap();
            prop_assert_eq!(two_step, scaled_params(&base, m + n).unwrap());
        }

        #[test]
        fn dilation_scales_length_and_endpoints(steps in prop::collection::vec(0usize..4, 0..20), n in 0u32..3) {
            let mut path = vec![Vertex::new(0, 0)];
            for s in steps {
                let (dx, dy) = [(1, 0), (-1, 0), (0, 1), (0, -1)][s];
                let last = *path.last().unwrap();
                path.push(last.offset(dx, dy).unwrap());
            }
            let d = dilate_path(&path, n, 3).unwrap();
            let m = 3i64.pow(n);
            prop_assert_eq!(d.len() - 1, (path.len() - 1) * m as usize);
            prop_assert_eq!(d[0], path[0].checked_scale(m).unwrap());
            prop_assert_eq!(*d.last().unwrap(), path.last().unwrap().checked_scale(m).unwrap());
            prop_assert!(check_unit_path(&d).is_ok());
        }
    }
}
