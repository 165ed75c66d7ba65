//! Check reports shared by the verification suites.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: String,
    pub witness: String,
}

/// Outcome of one law or identity over every instance in range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub tag: String,
    pub instances: usize,
    pub violations: Vec<Violation>,
}

impl LawCheck {
    pub fn new(tag: impl Into<String>) -> Self {
        LawCheck {
            tag: tag.into(),
            instances: 0,
            violations: Vec::new(),
        }
    }

    /// Counts one instance and records a violation when `ok` is false.
    pub fn record(&mut self, ok: bool, instance: impl FnOnce() -> String, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.violations.push(Violation {
                instance: instance(),
                witness: witness(),
            });
        }
    }

    pub fn fail(&mut self, instance: String, witness: String) {
        self.instances += 1;
        self.violations.push(Violation { instance, witness });
    }

    pub fn pass(&mut self) {
        self.instances += 1;
    }

    pub fn merge(&mut self, other: LawCheck) {
        debug_assert_eq!(self.tag, other.tag);
        self.instances += other.instances;
        self.violations.extend(other.violations);
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub bound: usize,
    pub seed: u64,
    pub checks: Vec<LawCheck>,
    pub clean: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: impl Into<String>, bound: usize, seed: u64, checks: Vec<LawCheck>) -> Self {
        let clean = checks.iter().all(LawCheck::is_clean);
        Report {
            suite: suite.into(),
            bound,
            seed,
            checks,
            clean,
            notes: Vec::new(),
        }
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }

    pub fn check(&self, tag: &str) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.tag == tag)
    }

    pub fn violation_count(&self) -> usize {
        self.checks.iter().map(|c| c.violations.len()).sum()
    }

    /// Joins several reports under one suite name.
    pub fn combine(suite: impl Into<String>, bound: usize, seed: u64, parts: Vec<Report>) -> Self {
        let mut checks = Vec::new();
        let mut notes = Vec::new();
        for r in parts {
            checks.extend(r.checks);
            notes.extend(r.notes);
        }
        Report::new(suite, bound, seed, checks).with_notes(notes)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} (bound {}, seed {})\n", self.suite, self.bound, self.seed);
        for c in &self.checks {
            let status = if c.is_clean() { "ok" } else { "FAIL" };
            out.push_str(&format!(
                "  {:<28} {:>8} instances  {}\n",
                c.tag, c.instances, status
            ));
            for v in c.violations.iter().take(5) {
                out.push_str(&format!("    at {}: {}\n", v.instance, v.witness));
            }
            if c.violations.len() > 5 {
                out.push_str(&format!("    ... {} more\n", c.violations.len() - 5));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out.push_str(if self.clean { "clean\n" } else { "violations found\n" });
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_flag_tracks_violations() {
        let mut a = LawCheck::new("a");
        a.pass();
        let mut b = LawCheck::new("b");
        b.record(false, || "x".into(), || "y".into());
        assert!(Report::new("s", 1, 0, vec![a.clone()]).clean);
        let r = Report::new("s", 1, 0, vec![a, b]);
        assert!(!r.clean);
        assert_eq!(r.violation_count(), 1);
        assert!(r.to_text().contains("FAIL"));
        assert!(r.to_json().contains("\"clean\": false"));
    }
}
