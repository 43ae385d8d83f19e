//! Machine-readable reports and their human-readable tables.
//!
//! Every command of the CLI emits one [`ReportDocument`]: tool version,
//! input digest, command echo, a typed results payload and a verdict
//! summary. Field order is fixed by the struct declarations and subspaces
//! are always serialized as canonical RREF rows, so identical inputs give
//! byte-identical reports.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::verify::{CheckEntry, VerificationReport, Verdict};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub type SubspaceRows = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub input_digest: String,
    pub command: String,
    pub results: ReportResults,
    pub summary: ReportSummary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportResults {
    Classify(ClassifyResults),
    IndexComplex(IndexComplexResults),
    Verify(VerifyResults),
    Catalog(CatalogResults),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub verdict: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyResults {
    pub field: String,
    pub dim: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub completely_solvable: bool,
    pub supersolvable: String,
    pub derived_series: Vec<SubspaceRows>,
    pub lower_central_series: Vec<SubspaceRows>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radical: Option<SubspaceRows>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frattini_subalgebra: Option<SubspaceRows>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frattini_ideal: Option<SubspaceRows>,
    pub skips: Vec<SkipNote>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkipNote {
    pub what: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordDoc {
    pub completion: SubspaceRows,
    pub strict_core: SubspaceRows,
    pub quotient_dim: usize,
    pub ideal: bool,
    pub subideal: bool,
    pub maximal_completion: bool,
    pub in_s_of_m: bool,
    pub quotient_abelian: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexComplexResults {
    pub field: String,
    pub maximal: SubspaceRows,
    /// `exhaustive` over finite fields, `targeted` over the rationals,
    /// `eta_only` when only the ideal index was requested.
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<usize>,
    pub records: Vec<RecordDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abelian_ideal_completion: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyResults {
    pub corpus: String,
    pub entries: Vec<CheckEntry>,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogResults {
    pub entries: Vec<CatalogEntryDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntryDoc {
    pub name: String,
    pub description: String,
}

pub fn digest_bytes(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

impl ReportDocument {
    pub fn new(
        input_digest: String,
        command: String,
        results: ReportResults,
        summary: ReportSummary,
    ) -> Self {
        ReportDocument {
            tool_version: TOOL_VERSION.to_string(),
            input_digest,
            command,
            results,
            summary,
        }
    }

    pub fn from_verification(
        input_digest: String,
        command: String,
        report: &VerificationReport,
    ) -> Self {
        let verdict = if report.fail > 0 { "fail" } else { "ok" };
        let summary = ReportSummary {
            verdict: verdict.to_string(),
            detail: format!(
                "{} pass, {} fail, {} skip",
                report.pass, report.fail, report.skip
            ),
        };
        ReportDocument::new(
            input_digest,
            command,
            ReportResults::Verify(VerifyResults {
                corpus: report.corpus.clone(),
                entries: report.entries.clone(),
                pass: report.pass,
                fail: report.fail,
                skip: report.skip,
            }),
            summary,
        )
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    /// Plain fixed-width table for standard output.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let push_row = |out: &mut String, k: &str, v: &str| {
            out.push_str(&format!("{k:<24} {v}\n"));
        };
        push_row(&mut out, "command", &self.command);
        push_row(&mut out, "tool version", &self.tool_version);
        push_row(&mut out, "input digest", &self.input_digest);
        match &self.results {
            ReportResults::Classify(c) => {
                push_row(&mut out, "field", &c.field);
                push_row(&mut out, "dim", &c.dim.to_string());
                push_row(&mut out, "abelian", &c.abelian.to_string());
                push_row(&mut out, "nilpotent", &c.nilpotent.to_string());
                push_row(&mut out, "solvable", &c.solvable.to_string());
                push_row(
                    &mut out,
                    "completely solvable",
                    &c.completely_solvable.to_string(),
                );
                push_row(&mut out, "supersolvable", &c.supersolvable);
                push_row(
                    &mut out,
                    "derived series dims",
                    &format_dims(&c.derived_series),
                );
                push_row(
                    &mut out,
                    "lower central dims",
                    &format_dims(&c.lower_central_series),
                );
                if let Some(r) = &c.radical {
                    push_row(&mut out, "radical", &format_rows(r));
                }
                if let Some(f) = &c.frattini_subalgebra {
                    push_row(&mut out, "frattini subalgebra", &format_rows(f));
                }
                if let Some(f) = &c.frattini_ideal {
                    push_row(&mut out, "frattini ideal", &format_rows(f));
                }
                for s in &c.skips {
                    push_row(&mut out, &format!("skipped {}", s.what), &s.reason);
                }
            }
            ReportResults::IndexComplex(ic) => {
                push_row(&mut out, "field", &ic.field);
                push_row(&mut out, "mode", &ic.mode);
                push_row(&mut out, "maximal subalgebra", &format_rows(&ic.maximal));
                if let Some(eta) = ic.eta {
                    push_row(&mut out, "eta", &eta.to_string());
                }
                if let Some(ab) = ic.abelian_ideal_completion {
                    push_row(&mut out, "abelian ideal completion", &ab.to_string());
                }
                for (i, r) in ic.records.iter().enumerate() {
                    let mut tags = Vec::new();
                    if r.ideal {
                        tags.push("ideal completion");
                    } else {
                        tags.push("completion");
                    }
                    if r.maximal_completion {
                        tags.push("maximal completion");
                    }
                    if r.subideal {
                        tags.push("subideal completion");
                    }
                    if r.in_s_of_m {
                        tags.push("S(M)");
                    }
                    if r.quotient_abelian {
                        tags.push("abelian quotient");
                    }
                    push_row(
                        &mut out,
                        &format!("record {i}"),
                        &format!(
                            "{} | k(C) {} | dim C/k(C) = {} | {}",
                            format_rows(&r.completion),
                            format_rows(&r.strict_core),
                            r.quotient_dim,
                            tags.join(", ")
                        ),
                    );
                }
            }
            ReportResults::Verify(v) => {
                push_row(&mut out, "corpus", &v.corpus);
                for e in &v.entries {
                    let verdict = match &e.verdict {
                        Verdict::Pass => "pass".to_string(),
                        Verdict::Fail { witness } => format!("FAIL ({})", witness.detail),
                        Verdict::Skip { reason } => format!("skip ({reason})"),
                    };
                    push_row(&mut out, &format!("{} :: {}", e.check, e.algebra), &verdict);
                }
                push_row(
                    &mut out,
                    "totals",
                    &format!("{} pass, {} fail, {} skip", v.pass, v.fail, v.skip),
                );
            }
            ReportResults::Catalog(c) => {
                for e in &c.entries {
                    push_row(&mut out, &e.name, &e.description);
                }
            }
        }
        push_row(
            &mut out,
            "verdict",
            &format!("{} ({})", self.summary.verdict, self.summary.detail),
        );
        out
    }
}

fn format_rows(rows: &SubspaceRows) -> String {
    if rows.is_empty() {
        return "0".to_string();
    }
    let parts: Vec<String> = rows.iter().map(|r| format!("({})", r.join(", "))).collect();
    format!("<{}>", parts.join(", "))
}

fn format_dims(chain: &[SubspaceRows]) -> String {
    chain
        .iter()
        .map(|t| t.len().to_string())
        .collect::<Vec<_>>()
        .join(" > ")
}
