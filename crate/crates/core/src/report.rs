//! Assembly of the JSON classification report and the enumeration summary.
//!
//! Reports are schema-stable: identical input yields a byte-identical report
//! except for the `generated_at` timestamp.

use std::collections::BTreeMap;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{classify_theorem, ConditionResult, TheoremBranch};
use crate::complex::SimplicialComplex;
use crate::enumeration::ValidationSummary;
use crate::error::{Error, Result};
use crate::homology::{is_buchsbaum, is_cohen_macaulay, reduced_betti, FieldSpec};
use crate::ideal::{gci_route_links, gci_route_local, is_complete_intersection};
use crate::input::InputDocument;
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub generated_at: u64,
    pub n: usize,
    pub facets: Vec<VertexSet>,
    pub minimal_nonfaces: Vec<VertexSet>,
    pub is_pure: bool,
    pub core_vertices: VertexSet,
    pub is_ci: bool,
    pub gci_links: bool,
    pub gci_local: bool,
    pub gci_theorem: bool,
    pub is_gci: bool,
    pub theorem_branch: TheoremBranch,
    pub condition_results: Vec<ConditionResult>,
    /// All keyed by field label (`q`, `f2`, ...), deterministically ordered;
    /// Betti vectors start at reduced degree -1.
    pub betti_per_field: BTreeMap<String, Vec<usize>>,
    pub cm_per_field: BTreeMap<String, bool>,
    /// A face whose link has surviving low homology, per failing field.
    pub cm_witness_per_field: BTreeMap<String, (VertexSet, isize)>,
    pub buchsbaum_per_field: BTreeMap<String, bool>,
}

/// Classifies the document over the given fields. The three gCI routes must
/// agree; a disagreement is an internal error, never a silent report.
pub fn classify_report(doc: &InputDocument, fields: &[FieldSpec]) -> Result<ClassificationReport> {
    let delta = doc.complex()?;
    classify_complex(&delta, fields)
}

pub fn classify_complex(
    delta: &SimplicialComplex,
    fields: &[FieldSpec],
) -> Result<ClassificationReport> {
    let family = delta.minimal_nonfaces();
    let links = gci_route_links(delta);
    let local = gci_route_local(delta);
    let theorem = classify_theorem(delta);
    if links.is_gci != local.is_gci || local.is_gci != theorem.is_gci {
        return Err(Error::RouteDisagreement {
            links: links.is_gci,
            local: local.is_gci,
            theorem: theorem.is_gci,
        });
    }
    let mut betti_per_field = BTreeMap::new();
    let mut cm_per_field = BTreeMap::new();
    let mut cm_witness_per_field = BTreeMap::new();
    let mut buchsbaum_per_field = BTreeMap::new();
    for &field in fields {
        let label = field.label();
        betti_per_field.insert(label.clone(), reduced_betti(delta, field).values().to_vec());
        let (cm, cm_witness) = is_cohen_macaulay(delta, field);
        cm_per_field.insert(label.clone(), cm);
        if let Some(w) = cm_witness {
            cm_witness_per_field.insert(label.clone(), w);
        }
        buchsbaum_per_field.insert(label, is_buchsbaum(delta, field));
    }
    Ok(ClassificationReport {
        generated_at: unix_timestamp(),
        n: delta.n(),
        facets: delta.facets().to_vec(),
        minimal_nonfaces: family.members().to_vec(),
        is_pure: delta.is_pure(),
        core_vertices: delta.core_vertices(),
        is_ci: is_complete_intersection(&family),
        gci_links: links.is_gci,
        gci_local: local.is_gci,
        gci_theorem: theorem.is_gci,
        is_gci: theorem.is_gci,
        theorem_branch: theorem.branch,
        condition_results: theorem.conditions,
        betti_per_field,
        cm_per_field,
        cm_witness_per_field,
        buchsbaum_per_field,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub generated_at: u64,
    /// Wall-clock duration of the validation run; stripped, like the
    /// timestamp, when comparing reports for determinism.
    pub elapsed_ms: u64,
    pub n: usize,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<String>,
    pub summary: ValidationSummary,
    pub clean: bool,
}

impl EnumerationReport {
    pub fn new(
        n: usize,
        mode: String,
        seed: Option<u64>,
        checks: Vec<String>,
        summary: ValidationSummary,
        elapsed_ms: u64,
    ) -> Self {
        let clean = summary.is_clean();
        EnumerationReport {
            generated_at: unix_timestamp(),
            elapsed_ms,
            n,
            mode,
            seed,
            checks,
            summary,
            clean,
        }
    }
}

fn unix_timestamp() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Serializes a report with the timing fields zeroed, for byte-level
/// determinism comparisons.
pub fn stable_json<T: Serialize>(report: &T) -> String {
    let mut value = serde_json::to_value(report).expect("reports serialize");
    if let Some(obj) = value.as_object_mut() {
        for field in ["generated_at", "elapsed_ms"] {
            if obj.contains_key(field) {
                obj.insert(field.to_string(), serde_json::json!(0));
            }
        }
    }
    serde_json::to_string_pretty(&value).expect("values serialize")
}
