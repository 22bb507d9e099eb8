//! Deterministic certification reports: an ordered list of named checks
//! with verdicts and witnesses, serialized with stable field order so
//! identical runs produce identical bytes.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Anchor into the verified article (section/statement slug).
    pub anchor: String,
    pub verdict: Verdict,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub spec: serde_json::Value,
    pub checks: Vec<Check>,
    pub summary: Verdict,
    pub version: String,
}

impl Report {
    pub fn new(spec: serde_json::Value) -> Self {
        Report {
            spec,
            checks: Vec::new(),
            summary: Verdict::Pass,
            version: crate::VERSION.to_string(),
        }
    }

    pub fn record(&mut self, name: &str, anchor: &str, ok: bool, witness: String) {
        if !ok {
            self.summary = Verdict::Fail;
        }
        self.checks.push(Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
            witness,
        });
    }

    pub fn passed(&self) -> bool {
        self.summary == Verdict::Pass
    }

    /// Canonical JSON bytes (serde struct order; no timing inside).
    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# Certification report (v{})\n\nspec: `{}`\n\n",
            self.version, self.spec
        ));
        out.push_str("| check | anchor | verdict | witness |\n|---|---|---|---|\n");
        for c in &self.checks {
            out.push_str(&format!(
                "| {} | {} | {} | {} |\n",
                c.name,
                c.anchor,
                match c.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "FAIL",
                },
                c.witness.replace('|', "\\|").replace('\n', "<br>")
            ));
        }
        out.push_str(&format!(
            "\nsummary: **{}**\n",
            if self.passed() { "pass" } else { "FAIL" }
        ));
        out
    }
}
