//! Emulating a two-weight lattice on `(N Z)^2` with unweighted long edges.
//!
//! Each weight-`w` edge of `H` between `v1` and `v2` becomes `w` collinear new
//! edges of `Z^2`-length `N / w` between `N v1` and `N v2`. Everything else is
//! inherited from the base lattice `L`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{GeoError, Result};
use crate::graph::{Cost, ImplicitGraph};
use crate::lattice::{classify_on_line, Vertex, WeightParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionSpec {
    pub weights: WeightParams,
    /// Bounded-extension constant of the base lattice.
    pub m: u64,
    /// Maximum weight of `H` (= `b`).
    pub w: u64,
    /// Scale.
    pub n: i64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl ReductionSpec {
    pub fn new(weights: WeightParams, m: u64, n: i64) -> Result<Self> {
        let spec = ReductionSpec { weights, m, w: weights.b(), n };
        spec.validate()?;
        Ok(spec)
    }

    /// Smallest common multiple of `a` and `b` strictly above `10 W M^2`.
    pub fn with_default_scale(weights: WeightParams, m: u64) -> Result<Self> {
        let (a, b) = (weights.a(), weights.b());
        let lcm = a / gcd(a, b) * b;
        let floor = Self::scale_floor(b, m)?;
        let n = (floor / lcm + 1).checked_mul(lcm).ok_or(GeoError::Overflow("reduction scale"))?;
        let n = i64::try_from(n).map_err(|_| GeoError::Overflow("reduction scale"))?;
        ReductionSpec::new(weights, m, n)
    }

    fn scale_floor(w: u64, m: u64) -> Result<u64> {
        m.checked_mul(m)
            .and_then(|mm| mm.checked_mul(w))
            .and_then(|x| x.checked_mul(10))
            .ok_or(GeoError::Overflow("10 W M^2"))
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(GeoError::InvalidReduction("M must be positive".into()));
        }
        if self.w != self.weights.b() {
            return Err(GeoError::InvalidReduction(format!(
                "W must equal the maximum weight b = {}, got {}",
                self.weights.b(),
                self.w
            )));
        }
        let floor = Self::scale_floor(self.w, self.m)?;
        if self.n <= 0 || (self.n as u64) <= floor {
            return Err(GeoError::InvalidReduction(format!("N = {} must exceed 10 W M^2 = {floor}", self.n)));
        }
        let n = self.n as u64;
        if n % self.weights.a() != 0 || n % self.weights.b() != 0 {
            return Err(GeoError::InvalidReduction(format!(
                "N = {n} is not a common multiple of the weights {} and {}",
                self.weights.a(),
                self.weights.b()
            )));
        }
        Ok(())
    }
}

/// The extension `G` of a base lattice `L`.
#[derive(Clone)]
pub struct ReductionGraph {
    spec: ReductionSpec,
    base: Arc<dyn ImplicitGraph>,
}

impl fmt::Debug for ReductionGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReductionGraph").field("spec", &self.spec).field("base", &self.base.name()).finish()
    }
}

impl ReductionGraph {
    pub fn new(spec: ReductionSpec, base: Arc<dyn ImplicitGraph>) -> Result<Self> {
        spec.validate()?;
        Self::build(spec, base)
    }

    /// Same construction without the `N > 10 W M^2` requirement. Divisibility
    /// and base-lattice checks still apply.
    pub fn new_relaxed(spec: ReductionSpec, base: Arc<dyn ImplicitGraph>) -> Result<Self> {
        let n = u64::try_from(spec.n).map_err(|_| GeoError::InvalidReduction("N must be positive".into()))?;
        if n == 0 || n % spec.weights.a() != 0 || n % spec.weights.b() != 0 {
            return Err(GeoError::InvalidReduction(format!("N = {n} is not a common multiple of the weights")));
        }
        Self::build(spec, base)
    }

    fn build(spec: ReductionSpec, base: Arc<dyn ImplicitGraph>) -> Result<Self> {
        if base.max_span() > spec.m {
            return Err(GeoError::InvalidReduction(format!(
                "base lattice {} has edges of span {} > M = {}",
                base.name(),
                base.max_span(),
                spec.m
            )));
        }
        if base.max_cost() != 1 {
            return Err(GeoError::InvalidReduction("base lattice must be unweighted".into()));
        }
        Ok(ReductionGraph { spec, base })
    }

    pub fn spec(&self) -> &ReductionSpec {
        &self.spec
    }

    pub fn base(&self) -> &Arc<dyn ImplicitGraph> {
        &self.base
    }

    /// Weight in `H` of the edge from `(along, line)` to `(along + 1, line)`.
    #[inline]
    fn h_weight(&self, along: i64, line: i64) -> i64 {
        let p = &self.spec.weights;
        p.weight_of(classify_on_line(along, line, p.p(), p.rule())) as i64
    }

    /// New-edge neighbours along one `N`-line. `along` is the coordinate that
    /// varies, `line` the fixed one (already known to be a multiple of `N`).
    fn line_neighbors(&self, along: i64, line: i64, out: &mut Vec<i64>) {
        let n = self.spec.n;
        let q = along.div_euclid(n);
        let r = along.rem_euclid(n);
        let l = line / n;
        if r == 0 {
            let step_fwd = n / self.h_weight(q, l);
            let step_back = n / self.h_weight(q - 1, l);
            out.extend(along.checked_add(step_fwd));
            out.extend(along.checked_sub(step_back));
        } else {
            let step = n / self.h_weight(q, l);
            if r % step == 0 {
                out.extend(along.checked_add(step));
                out.extend(along.checked_sub(step));
            }
        }
    }

    pub fn new_edge_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let n = self.spec.n;
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(2);
        if v.y.rem_euclid(n) == 0 {
            self.line_neighbors(v.x, v.y, &mut buf);
            out.extend(buf.drain(..).map(|x| Vertex::new(x, v.y)));
        }
        if v.x.rem_euclid(n) == 0 {
            self.line_neighbors(v.y, v.x, &mut buf);
            out.extend(buf.drain(..).map(|y| Vertex::new(v.x, y)));
        }
        out
    }

    /// Endpoints of new edges.
    pub fn is_special(&self, v: Vertex) -> bool {
        !self.new_edge_neighbors(v).is_empty()
    }

    pub fn is_new_edge(&self, u: Vertex, v: Vertex) -> bool {
        u.l1(v) > self.spec.m && self.new_edge_neighbors(u).contains(&v)
    }
}

impl ImplicitGraph for ReductionGraph {
    fn neighbors(&self, v: Vertex, out: &mut Vec<(Vertex, Cost)>) {
        self.base.neighbors(v, out);
        out.extend(self.new_edge_neighbors(v).into_iter().map(|w| (w, 1)));
    }
    fn max_span(&self) -> u64 {
        self.spec.n as u64
    }
    fn min_cost(&self) -> Cost {
        1
    }
    fn max_cost(&self) -> Cost {
        1
    }
    fn grid_stretch(&self) -> Cost {
        self.base.grid_stretch()
    }
    fn name(&self) -> String {
        let w = &self.spec.weights;
        format!("reduction(p={}, a={}, b={}, M={}, N={}, base={})", w.p(), w.a(), w.b(), self.spec.m, self.spec.n, self.base.name())
    }

    /// Walk to an `N`-parent on each side and route through `(N Z)^2` with
    /// straight new paths costing at most `W` per `N`-step.
    fn distance_upper_bound(&self, u: Vertex, v: Vertex) -> Cost {
        let n = self.spec.n as u64;
        let stretch = self.base.grid_stretch();
        let grid = stretch.saturating_mul(u.l1(v));
        let via = stretch
            .saturating_mul(4 * n)
            .saturating_add(self.spec.w.saturating_mul(u.l1(v).saturating_add(4 * n) / n + 1));
        grid.min(via)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PlainGrid;

    fn h12() -> WeightParams {
        WeightParams::new(3, 1, 2).unwrap()
    }

    #[test]
    fn default_scale() {
        let s = ReductionSpec::with_default_scale(h12(), 1).unwrap();
        assert_eq!((s.n, s.w, s.m), (22, 2, 1));
        let s = ReductionSpec::with_default_scale(WeightParams::new(3, 2, 3).unwrap(), 1).unwrap();
        assert_eq!(s.n, 36);
        let s = ReductionSpec::with_default_scale(h12(), 2).unwrap();
        assert_eq!(s.n, 82);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(ReductionSpec::new(h12(), 1, 20).is_err());
        assert!(ReductionSpec::new(h12(), 1, 23).is_err());
        assert!(ReductionSpec::new(h12(), 0, 22).is_err());
        assert!(ReductionSpec::new(h12(), 1, 22).is_ok());
        let tri = Arc::new(crate::extension::TriangularGraph);
        let spec = ReductionSpec::new(h12(), 1, 22).unwrap();
        assert!(ReductionGraph::new(spec, tri).is_err());
    }

    #[test]
    fn new_edges_from_origin() {
        let g = ReductionGraph::new(ReductionSpec::new(h12(), 1, 22).unwrap(), Arc::new(PlainGrid)).unwrap();
        let mut n = g.new_edge_neighbors(Vertex::new(0, 0));
        n.sort();
        assert_eq!(n, vec![Vertex::new(-22, 0), Vertex::new(0, -22), Vertex::new(0, 22), Vertex::new(22, 0)]);
        assert!(g.neighbor_list(Vertex::new(0, 0)).contains(&(Vertex::new(22, 0), 1)));
    }

    #[test]
    fn slow_edge_is_subdivided() {
        let g = ReductionGraph::new(ReductionSpec::new(h12(), 1, 22).unwrap(), Arc::new(PlainGrid)).unwrap();
        assert!(g.is_new_edge(Vertex::new(22, 22), Vertex::new(33, 22)));
        assert!(g.is_new_edge(Vertex::new(33, 22), Vertex::new(44, 22)));
        assert!(!g.is_new_edge(Vertex::new(22, 22), Vertex::new(44, 22)));
        assert!(g.is_special(Vertex::new(33, 22)));
        assert!(!g.is_special(Vertex::new(34, 22)));
        assert!(!g.is_special(Vertex::new(5, 7)));
    }
}
