//! Report files: the structured (JSON) form and a plain-text rendering.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::Expected;
use crate::classify::{Agreement, CheckStatus, ClassificationReport, Property, Verdict};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::superlie::{AxiomReport, ElementCheck};

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EntryStatus {
    /// Axioms failed or the file did not parse.
    Rejected { reason: String },
    Analyzed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub source: String,
    pub status: EntryStatus,
    /// Element-level axiom checks that were skipped for budget reasons.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unverified_axioms: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches_expected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ClassificationReport>,
}

impl AlgebraReport {
    pub fn rejected(source: &str, e: &Error) -> Self {
        AlgebraReport {
            source: source.to_string(),
            status: EntryStatus::Rejected { reason: e.to_string() },
            unverified_axioms: Vec::new(),
            expected: None,
            matches_expected: None,
            report: None,
        }
    }

    pub fn analyzed(source: &str, expected: Option<Expected>, axioms: &AxiomReport, report: ClassificationReport) -> Self {
        let mut unverified = Vec::new();
        for (label, c) in [("p-map on all even elements", &axioms.pmap_elements), ("cubic odd axiom", &axioms.cubic_odd)] {
            if let ElementCheck::Unverified { needed, cap } = c {
                unverified.push(format!("{label}: {needed} elements > cap {cap}"));
            }
        }
        let matches_expected = expected.map(|e| e.verdicts() == report.quadruple() && e.verdicts() == report.condition_quadruple());
        AlgebraReport {
            source: source.to_string(),
            status: EntryStatus::Analyzed,
            unverified_axioms: unverified,
            expected,
            matches_expected,
            report: Some(report),
        }
    }

    pub fn is_failure(&self) -> bool {
        match (&self.status, &self.report) {
            (EntryStatus::Rejected { .. }, _) => true,
            (_, Some(r)) => !r.disagreements().is_empty() || !r.failed_checks().is_empty() || self.matches_expected == Some(false) && !r.is_inconclusive(),
            _ => false,
        }
    }

    pub fn is_inconclusive(&self) -> bool {
        !self.unverified_axioms.is_empty() || self.report.as_ref().is_some_and(|r| r.is_inconclusive())
    }
}

/// Wall-clock seconds per source; kept apart so the rest is deterministic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub seconds: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub version: u32,
    pub caps: Caps,
    pub algebras: Vec<AlgebraReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl ReportFile {
    pub fn new(caps: Caps, algebras: Vec<AlgebraReport>, timing: Option<Timing>) -> Self {
        ReportFile {
            version: REPORT_VERSION,
            caps,
            algebras,
            timing,
        }
    }

    pub fn without_timing(mut self) -> Self {
        self.timing = None;
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// 0 all good, 1 any rejection/disagreement/failed check, 2 otherwise
    /// inconclusive.
    pub fn exit_code(&self) -> i32 {
        if self.algebras.iter().any(|a| a.is_failure()) {
            1
        } else if self.algebras.iter().any(|a| a.is_inconclusive()) {
            2
        } else {
            0
        }
    }
}

fn agreement_word(a: Agreement) -> &'static str {
    match a {
        Agreement::Agree => "agree",
        Agreement::Disagree => "DISAGREE",
        Agreement::Inconclusive => "inconclusive",
    }
}

/// Human-readable summary of one classification.
pub fn render_classification(out: &mut String, r: &ClassificationReport, with_checks: bool) {
    let name = r.name.as_deref().unwrap_or("(unnamed)");
    let _ = writeln!(
        out,
        "{name}: p = {}, dim L = {} + {}, dim u(L) = {}{}",
        r.p,
        r.n0,
        r.n1,
        r.envelope_dim,
        if r.envelope_built { "" } else { " (not built)" }
    );
    for p in &r.properties {
        let _ = writeln!(
            out,
            "  {:<20} condition {:<12} oracle {:<12} {}",
            p.property.to_string(),
            p.condition.to_string(),
            p.oracle.to_string(),
            agreement_word(p.agreement)
        );
        let _ = writeln!(out, "      {}", p.oracle_detail);
        for c in &p.causes {
            let _ = writeln!(out, "      cause: {c}");
        }
    }
    for (label, w) in [("module witness", &r.facts.witness_module), ("subspace witness", &r.facts.witness_subspace)] {
        let text = match w.witness() {
            Some(m) if m.display.is_empty() => format!("M = 0 (codim {})", m.codim),
            Some(m) => format!("M = span{{{}}} (codim {})", m.display.join(", "), m.codim),
            None => match w.verdict() {
                Verdict::No => "none".to_string(),
                _ => "inconclusive".to_string(),
            },
        };
        let _ = writeln!(out, "  {label}: {text}");
    }
    if with_checks {
        for c in &r.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::NotApplicable => "n/a",
                CheckStatus::Skipped => "skipped",
                CheckStatus::Inconclusive => "inconclusive",
            };
            let line = format!("  check {:<46} {status:<12} {}", c.name, c.detail);
            let _ = writeln!(out, "{}", line.trim_end());
        }
    }
}

fn quad(v: [Verdict; 4]) -> String {
    v.iter().map(|x| x.short()).collect()
}

pub fn render_text(r: &ReportFile, verbose: bool) -> String {
    let mut out = String::new();
    for a in &r.algebras {
        match (&a.status, &a.report) {
            (EntryStatus::Rejected { reason }, _) => {
                let _ = writeln!(out, "{}: rejected: {reason}", a.source);
            }
            (_, Some(rep)) => {
                if verbose {
                    render_classification(&mut out, rep, true);
                } else {
                    let expected = a.expected.map(|e| quad(e.verdicts())).unwrap_or_else(|| "----".into());
                    let status = if a.is_failure() {
                        "FAIL"
                    } else if a.is_inconclusive() {
                        "inconclusive"
                    } else {
                        "ok"
                    };
                    let _ = writeln!(
                        out,
                        "{:<28} D={:<5} condition {} oracle {} expected {} {status}",
                        a.source,
                        rep.envelope_dim,
                        quad(rep.condition_quadruple()),
                        quad(rep.quadruple()),
                        expected
                    );
                }
                for u in &a.unverified_axioms {
                    let _ = writeln!(out, "  unverified: {u}");
                }
            }
            _ => {}
        }
    }
    let _ = writeln!(
        out,
        "order: {}",
        Property::ALL.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
    );
    out
}
