use serde::{Deserialize, Serialize};

use super::edge::{classify_edge_with, classify_on_line, Edge, EdgeClass, SlowRule};
use super::padic::checked_pow;
use super::Vertex;
use crate::error::{GeoError, Result};

/// Parameters `(p, a, b)` of the two-weight fractal lattice `H_{a,b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightParams {
    p: i64,
    a: u64,
    b: u64,
    #[serde(default)]
    rule: SlowRule,
}

impl WeightParams {
    pub fn new(p: i64, a: u64, b: u64) -> Result<Self> {
        if p < 3 || p % 2 == 0 {
            return Err(GeoError::InvalidParams(format!("p must be odd and >= 3, got {p}")));
        }
        if a == 0 || a >= b {
            return Err(GeoError::InvalidParams(format!("need 1 <= a < b, got a={a}, b={b}")));
        }
        Ok(WeightParams { p, a, b, rule: SlowRule::default() })
    }

    pub fn with_rule(mut self, rule: SlowRule) -> Self {
        self.rule = rule;
        self
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn rule(&self) -> SlowRule {
        self.rule
    }

    pub fn weight_of(&self, class: EdgeClass) -> u64 {
        match class {
            EdgeClass::Fast => self.a,
            EdgeClass::Slow => self.b,
        }
    }
}

/// Weight of a unit edge in `H_{a,b}`.
pub fn edge_weight(e: Edge, params: &WeightParams) -> Result<u64> {
    Ok(params.weight_of(classify_edge_with(e, params.p, params.rule)?))
}

/// The four unit neighbours of `v` with their `H_{a,b}` weights, ordered +x, -x, +y, -y.
pub fn neighbors_weighted(v: Vertex, params: &WeightParams) -> Vec<(Vertex, u64)> {
    let mut out = Vec::with_capacity(4);
    push_weighted_neighbors(v, params, &mut out);
    out
}

#[inline]
pub(crate) fn push_weighted_neighbors(v: Vertex, params: &WeightParams, out: &mut Vec<(Vertex, u64)>) {
    let (p, rule) = (params.p, params.rule);
    if let Some(r) = v.offset(1, 0) {
        out.push((r, params.weight_of(classify_on_line(v.x, v.y, p, rule))));
    }
    if let Some(l) = v.offset(-1, 0) {
        out.push((l, params.weight_of(classify_on_line(l.x, v.y, p, rule))));
    }
    if let Some(u) = v.offset(0, 1) {
        out.push((u, params.weight_of(classify_on_line(v.y, v.x, p, rule))));
    }
    if let Some(d) = v.offset(0, -1) {
        out.push((d, params.weight_of(classify_on_line(d.y, v.x, p, rule))));
    }
}

/// Parameters of the coarse lattice emulated by `(p^n Z)^2`:
/// `(p, p^n a, p^n a - a + b)`.
pub fn scaled_params(params: &WeightParams, n: u32) -> Result<WeightParams> {
    let m = checked_pow(params.p, n)?;
    let a = (m as u64).checked_mul(params.a).ok_or(GeoError::Overflow("scaled a"))?;
    let b = (a - params.a).checked_add(params.b).ok_or(GeoError::Overflow("scaled b"))?;
    Ok(WeightParams { p: params.p, a, b, rule: params.rule })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(rule: SlowRule) -> WeightParams {
        WeightParams::new(3, 1, 2).unwrap().with_rule(rule)
    }

    fn e(a: (i64, i64), b: (i64, i64)) -> Edge {
        Edge::new(a.into(), b.into())
    }

    #[test]
    fn params_validation() {
        assert!(WeightParams::new(4, 1, 2).is_err());
        assert!(WeightParams::new(1, 1, 2).is_err());
        assert!(WeightParams::new(3, 2, 2).is_err());
        assert!(WeightParams::new(3, 0, 2).is_err());
        assert!(WeightParams::new(5, 2, 7).is_ok());
    }

    #[test]
    fn edge_weight_examples_coprime_rule() {
        let p = h(SlowRule::CoprimeMidpoint);
        assert_eq!(edge_weight(e((0, 0), (1, 0)), &p), Ok(1));
        assert_eq!(edge_weight(e((1, 1), (1, 2)), &p), Ok(2));
        assert_eq!(edge_weight(e((2, 0), (3, 0)), &p), Ok(1));
    }

    #[test]
    fn neighbor_examples_coprime_rule() {
        let p = h(SlowRule::CoprimeMidpoint);
        let mut n = neighbors_weighted(Vertex::new(1, 1), &p);
        n.sort();
        let want = vec![
            (Vertex::new(0, 1), 1),
            (Vertex::new(1, 0), 1),
            (Vertex::new(1, 2), 2),
            (Vertex::new(2, 1), 2),
        ];
        assert_eq!(n, want);
        // (1,-1)-(1,0) is the middle of its unit segment with quotient -1, hence slow
        let mut n = neighbors_weighted(Vertex::new(1, 0), &p);
        n.sort();
        assert_eq!(
            n,
            vec![
                (Vertex::new(0, 0), 1),
                (Vertex::new(1, -1), 2),
                (Vertex::new(1, 1), 1),
                (Vertex::new(2, 0), 1)
            ]
        );
        assert!(neighbors_weighted(Vertex::new(0, 0), &p).iter().all(|&(_, w)| w == 1));
    }

    #[test]
    fn neighbor_examples_every_midpoint_rule() {
        let p = h(SlowRule::EveryMidpoint);
        assert!(neighbors_weighted(Vertex::new(0, 0), &p).iter().all(|&(_, w)| w == 1));
        // (1,1) is interior to an open 3-block: all four incident edges are slow
        assert!(neighbors_weighted(Vertex::new(1, 1), &p).iter().all(|&(_, w)| w == 2));
        let mut n = neighbors_weighted(Vertex::new(1, 0), &p);
        n.sort();
        assert_eq!(
            n,
            vec![
                (Vertex::new(0, 0), 1),
                (Vertex::new(1, -1), 2),
                (Vertex::new(1, 1), 2),
                (Vertex::new(2, 0), 1)
            ]
        );
    }

    #[test]
    fn neighbors_agree_with_edge_weight() {
        for rule in [SlowRule::EveryMidpoint, SlowRule::CoprimeMidpoint] {
            let p = WeightParams::new(5, 2, 7).unwrap().with_rule(rule);
            for x in -30..30 {
                for y in -30..30 {
                    let v = Vertex::new(x, y);
                    for (w, c) in neighbors_weighted(v, &p) {
                        assert_eq!(edge_weight(Edge::new(v, w), &p), Ok(c));
                    }
                }
            }
        }
    }

    #[test]
    fn scaled_params_examples() {
        let p = h(SlowRule::EveryMidpoint);
        let s1 = scaled_params(&p, 1).unwrap();
        assert_eq!((s1.p(), s1.a(), s1.b()), (3, 3, 4));
        assert_eq!(scaled_params(&p, 0).unwrap(), p);
        let s2 = scaled_params(&p, 2).unwrap();
        assert_eq!((s2.a(), s2.b()), (9, 10));
        assert!(scaled_params(&p, 60).is_err());
    }
}
