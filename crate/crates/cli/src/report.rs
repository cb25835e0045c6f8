//! The report document and its JSON / markdown renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use reclift::{CheckRecord, Verdict};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const TOOL: &str = "reclift";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// What the report was computed from; enough to rebuild the instance for
/// replay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputInfo {
    /// `preset:<name>` or the spec file path as given.
    pub source: String,
    /// SHA-256 of the spec text.
    pub digest: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idempotent: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corrupt: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunInfo {
    pub seed: u64,
    pub depth: usize,
    pub random: usize,
    pub dim_bound: usize,
    pub degree: usize,
    pub mode: String,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: InputInfo,
    pub run: RunInfo,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub verdict: Verdict,
    /// Computed values (dimensions, flags, conclusions), sorted by key.
    pub summary: BTreeMap<String, String>,
    pub checks: Vec<CheckRecord>,
}

pub fn digest(text: &str) -> String {
    let hash = Sha256::digest(text.as_bytes());
    hash.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(format!("unknown format {s:?} (json or md)")),
        }
    }
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::NoChecks => 2,
        }
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Markdown => self.markdown(),
        }
    }

    fn markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {} {}\n", self.tool, self.command);
        let _ = writeln!(out, "- version: {}", self.version);
        let _ = writeln!(out, "- input: `{}` (sha256 `{}`)", self.input.source, self.input.digest);
        if let Some(e) = &self.input.idempotent {
            let _ = writeln!(out, "- idempotent: `{e}`");
        }
        if let Some(c) = &self.input.corrupt {
            let _ = writeln!(out, "- corrupted: {c}");
        }
        let r = &self.run;
        let _ = writeln!(
            out,
            "- run: seed {}, depth {}, {} random of dim <= {}, degree {}, mode {}, bound {}",
            r.seed, r.depth, r.random, r.dim_bound, r.degree, r.mode, r.bound
        );
        if let Some(i) = &self.instance {
            let _ = writeln!(out, "- instance: `{i}`");
        }
        let _ = writeln!(out, "- verdict: **{}**", self.verdict.as_str());
        if !self.summary.is_empty() {
            out.push_str("\n## Summary\n\n| key | value |\n|---|---|\n");
            for (k, v) in &self.summary {
                let _ = writeln!(out, "| {k} | {} |", v.replace('|', "\\|"));
            }
        }
        out.push_str("\n## Checks\n\n| check | mode | samples | skipped | result |\n|---|---|---|---|---|\n");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                c.name,
                c.mode,
                c.samples,
                c.skipped,
                if c.pass { "pass" } else { "FAIL" }
            );
        }
        let failing: Vec<&CheckRecord> = self.checks.iter().filter(|c| !c.pass).collect();
        if !failing.is_empty() {
            out.push_str("\n## Witnesses\n");
            for c in failing {
                let _ = writeln!(out, "\n### {}\n\nscope: {}\n", c.name, c.scope);
                for w in &c.witnesses {
                    let dims: Vec<String> =
                        w.modules.iter().map(|m| format!("{}[{}]", m.side, m.dim)).collect();
                    let _ = writeln!(out, "- `{}` on {}: {}", w.check, dims.join(", "), w.detail);
                }
            }
        }
        out
    }
}
