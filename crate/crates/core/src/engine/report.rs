//! Slice reports and their CSV / JSON forms.
//!
//! CSV columns are `k,size,s1,s2,s3`. The partial columns are empty when the
//! partial slices were not computed.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bounds::BoundSet;
use crate::graph::Cost;
use crate::lattice::Vertex;

use super::partial::PartialSlices;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialCounts {
    pub s1: usize,
    pub s2: usize,
    pub s3: usize,
}

impl From<&PartialSlices> for PartialCounts {
    fn from(p: &PartialSlices) -> Self {
        PartialCounts { s1: p.s1.len(), s2: p.s2.len(), s3: p.s3.len() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub value: u64,
    pub limit: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SliceReport {
    pub u: Vertex,
    pub v: Vertex,
    pub distance: Cost,
    pub sizes: Vec<usize>,
    pub max_size: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub partial: Option<Vec<PartialCounts>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bounds: Option<BoundSet>,
    #[serde(default)]
    pub verdicts: Vec<Verdict>,
}

impl SliceReport {
    pub fn new(u: Vertex, v: Vertex, distance: Cost, sizes: Vec<usize>) -> Self {
        let max_size = sizes.iter().copied().max().unwrap_or(0);
        SliceReport { u, v, distance, sizes, max_size, partial: None, bounds: None, verdicts: Vec::new() }
    }

    pub fn with_partial(mut self, table: &[PartialSlices]) -> Self {
        self.partial = Some(table.iter().map(PartialCounts::from).collect());
        self
    }

    /// Attach bounds and judge the recorded sizes against them.
    pub fn with_bounds(mut self, bounds: BoundSet) -> Self {
        use crate::bounds::ceil_guarded;
        self.verdicts.push(Verdict {
            name: "total".into(),
            value: self.max_size as u64,
            limit: ceil_guarded(bounds.total_bound),
            pass: self.max_size as u64 <= ceil_guarded(bounds.total_bound),
        });
        if let Some(partial) = &self.partial {
            let s13 = partial.iter().map(|c| c.s1.max(c.s3)).max().unwrap_or(0) as u64;
            let s2 = partial.iter().map(|c| c.s2).max().unwrap_or(0) as u64;
            for (name, value, bound) in [("s1_s3", s13, bounds.s1_bound), ("s2", s2, bounds.s2_bound)] {
                let limit = ceil_guarded(bound);
                self.verdicts.push(Verdict { name: name.into(), value, limit, pass: value <= limit });
            }
        }
        self.bounds = Some(bounds);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("k,size,s1,s2,s3\n");
        for (k, size) in self.sizes.iter().enumerate() {
            match self.partial.as_ref().and_then(|p| p.get(k)) {
                Some(c) => {
                    let _ = writeln!(s, "{k},{size},{},{},{}", c.s1, c.s2, c.s3);
                }
                None => {
                    let _ = writeln!(s, "{k},{size},,,");
                }
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::WeightParams;

    #[test]
    fn csv_layout() {
        let r = SliceReport::new(Vertex::new(0, 0), Vertex::new(1, 1), 2, vec![1, 2, 1]);
        assert_eq!(r.to_csv(), "k,size,s1,s2,s3\n0,1,,,\n1,2,,,\n2,1,,,\n");
        assert_eq!(r.max_size, 2);
    }

    #[test]
    fn json_roundtrip_and_verdicts() {
        let bounds = BoundSet::for_params(&WeightParams::new(3, 1, 2).unwrap());
        let r = SliceReport::new(Vertex::new(0, 0), Vertex::new(3, 0), 3, vec![1, 1, 1, 1]).with_bounds(bounds);
        assert!(r.passed());
        let back: SliceReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
