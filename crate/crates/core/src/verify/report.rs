use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::lattice::Vertex;

/// Enough to replay a failure: the pair, a geodesic and the offending vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub u: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub v: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex: Option<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub path: Option<Vec<Vertex>>,
    pub detail: String,
}

impl Witness {
    pub fn pair(u: Vertex, v: Vertex, detail: impl Into<String>) -> Self {
        Witness { u: Some(u), v: Some(v), vertex: None, path: None, detail: detail.into() }
    }

    pub fn at(mut self, w: Vertex) -> Self {
        self.vertex = Some(w);
        self
    }

    pub fn along(mut self, path: Vec<Vertex>) -> Self {
        self.path = Some(path);
        self
    }
}

/// Witnesses kept per check; the total is always counted.
pub const MAX_WITNESSES: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub instances: u64,
    /// Instances not examined, with reasons in `notes`.
    pub skipped: u64,
    pub failure_count: u64,
    pub failures: Vec<Witness>,
    pub extremes: BTreeMap<String, f64>,
    pub bounds: BTreeMap<String, f64>,
    pub notes: Vec<String>,
    pub pass: bool,
}

impl CheckResult {
    pub fn new(name: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            instances: 0,
            skipped: 0,
            failure_count: 0,
            failures: Vec::new(),
            extremes: BTreeMap::new(),
            bounds: BTreeMap::new(),
            notes: Vec::new(),
            pass: true,
        }
    }

    pub fn fail(&mut self, w: Witness) {
        self.failure_count += 1;
        self.failures.push(w);
    }

    pub fn record_max(&mut self, key: &str, value: f64) {
        let e = self.extremes.entry(key.to_string()).or_insert(value);
        if value > *e {
            *e = value;
        }
    }

    pub fn bound(&mut self, key: &str, value: f64) {
        self.bounds.insert(key.to_string(), value);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Merge a partial result from a worker.
    pub fn absorb(&mut self, other: CheckResult) {
        self.instances += other.instances;
        self.skipped += other.skipped;
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        for (k, v) in other.extremes {
            self.record_max(&k, v);
        }
        for (k, v) in other.bounds {
            self.bounds.insert(k, v);
        }
        self.notes.extend(other.notes);
    }

    /// Sort witnesses, trim them, and set the verdict.
    pub fn finish(mut self) -> Self {
        self.failures.sort();
        self.failures.dedup();
        self.failures.truncate(MAX_WITNESSES);
        self.notes.sort();
        self.notes.dedup();
        self.pass = self.failure_count == 0;
        self
    }

    pub fn summary_line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{verdict} {}: {} instances, {} failures, {} skipped",
            self.name, self.instances, self.failure_count, self.skipped
        );
        for (k, v) in &self.extremes {
            let _ = write!(s, ", {k}={}", fmt_num(*v));
        }
        for (k, v) in &self.bounds {
            let _ = write!(s, ", bound {k}={}", fmt_num(*v));
        }
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = self.summary_line();
        s.push('\n');
        for n in &self.notes {
            let _ = writeln!(s, "  note: {n}");
        }
        for w in &self.failures {
            let _ = write!(s, "  witness:");
            if let (Some(u), Some(v)) = (w.u, w.v) {
                let _ = write!(s, " pair {u} -> {v}");
            }
            if let Some(x) = w.vertex {
                let _ = write!(s, " at {x}");
            }
            let _ = writeln!(s, ": {}", w.detail);
            if let Some(p) = &w.path {
                let pts: Vec<String> = p.iter().map(|v| format!("{},{}", v.x, v.y)).collect();
                let _ = writeln!(s, "    path {}", pts.join(" "));
            }
        }
        s
    }
}

fn fmt_num(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else if v.abs() >= 1e9 {
        format!("{v:.3e}")
    } else {
        format!("{v:.3}")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn new(seed: u64, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let pass = checks.iter().all(|c| c.pass);
        SuiteReport { seed, checks, pass }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&c.to_text());
        }
        let _ = writeln!(s, "{}", if self.pass { "all checks passed" } else { "some checks FAILED" });
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finish_sorts_and_trims() {
        let mut r = CheckResult::new("x");
        for i in (0..30).rev() {
            r.fail(Witness::pair(Vertex::new(i, 0), Vertex::new(0, 0), "bad"));
        }
        r.record_max("m", 3.0);
        r.record_max("m", 2.0);
        let r = r.finish();
        assert!(!r.pass);
        assert_eq!(r.failure_count, 30);
        assert_eq!(r.failures.len(), MAX_WITNESSES);
        assert_eq!(r.failures[0].u, Some(Vertex::new(0, 0)));
        assert_eq!(r.extremes["m"], 3.0);
    }

    #[test]
    fn suite_json_roundtrip() {
        let mut ok = CheckResult::new("b");
        ok.instances = 3;
        let s = SuiteReport::new(7, vec![ok.finish(), CheckResult::new("a").finish()]);
        assert_eq!(s.checks[0].name, "a");
        let back: SuiteReport = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(back, s);
    }
}
