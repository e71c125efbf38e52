//! Output documents.
//!
//! Every subcommand writes one JSON document. Keys are sorted, exact values
//! are strings (`"1/2"`, `"1/2+1/2√3"`, `"1-1/2i"`), and the text ends with
//! a newline, so equal documents are equal byte for byte.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use pompeiu::geometry::PointId;
use pompeiu::linsys::{ForcingCertificate, SparseRow};
use pompeiu::search::{Exhaustion, ExhaustionReason, SearchBudget, Witness};

use crate::config::{field_name, point_strings, ProblemConfig};
use crate::CliError;

pub const FORMAT: &str = "pompeiu/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemEcho {
    pub dimension: usize,
    pub field: String,
    pub points: Vec<Vec<String>>,
    pub weights: Vec<String>,
    pub target: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessPoint {
    pub id: usize,
    pub coords: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementEntry {
    pub provenance: usize,
    /// Row-major rotation matrix.
    pub rotation: Vec<Vec<String>>,
    pub translation: Vec<String>,
    pub image_ids: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Multiplier {
    pub provenance: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Stats {
    pub cited_placements: usize,
    pub placements_tried: usize,
    pub points_interned: usize,
    pub witness_points: usize,
}

/// A self-contained forcing certificate: the problem, the witness points,
/// the cited placements with their motions, and the multipliers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub format: String,
    pub kind: String,
    pub problem: ProblemEcho,
    pub target_id: usize,
    pub witness_points: Vec<WitnessPoint>,
    pub placements: Vec<PlacementEntry>,
    pub multipliers: Vec<Multiplier>,
    pub stats: Stats,
    pub verification: String,
}

pub fn emit<T: Serialize>(doc: &T) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut text = serde_json::to_string_pretty(&value).expect("values serialize");
    text.push('\n');
    text
}

pub fn parse_value(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Document(e.to_string()))
}

pub fn parse_certificate(text: &str) -> Result<CertificateDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Document(e.to_string()))
}

pub fn problem_echo(cfg: &ProblemConfig) -> ProblemEcho {
    ProblemEcho {
        dimension: cfg.dimension,
        field: field_name(cfg.field),
        points: cfg.points.iter().map(point_strings).collect(),
        weights: cfg.weights.iter().map(ToString::to_string).collect(),
        target: point_strings(&cfg.target),
    }
}

/// The document for `cert`, citing only the placements it uses.
pub fn certificate_document(cfg: &ProblemConfig, witness: &Witness, cert: &ForcingCertificate) -> CertificateDocument {
    let cited = cert.cited();
    let placements = cited
        .iter()
        .map(|&p| {
            let pl = &witness.placements[p];
            PlacementEntry {
                provenance: p,
                rotation: pl
                    .motion
                    .rotation
                    .entries()
                    .iter()
                    .map(|row| row.iter().map(ToString::to_string).collect())
                    .collect(),
                translation: point_strings(&pl.motion.translation),
                image_ids: pl.image_ids.iter().map(|id| id.0).collect(),
            }
        })
        .collect();
    let multipliers = cert
        .multipliers
        .iter()
        .filter(|(_, l)| !l.is_zero())
        .map(|(p, l)| Multiplier {
            provenance: *p,
            value: l.to_string(),
        })
        .collect();
    CertificateDocument {
        format: FORMAT.to_string(),
        kind: "certificate".to_string(),
        problem: problem_echo(cfg),
        target_id: cert.target.0,
        witness_points: cert
            .witness_points
            .iter()
            .map(|&id| WitnessPoint {
                id: id.0,
                coords: point_strings(witness.store.get(id)),
            })
            .collect(),
        placements,
        multipliers,
        stats: Stats {
            cited_placements: cited.len(),
            placements_tried: witness.stats.placements,
            points_interned: witness.stats.points,
            witness_points: cert.witness_points.len(),
        },
        verification: "unchecked".to_string(),
    }
}

fn reason_name(reason: ExhaustionReason) -> &'static str {
    match reason {
        ExhaustionReason::PlacementBudget => "placement budget",
        ExhaustionReason::PointBudget => "point budget",
        ExhaustionReason::NoCandidates => "no candidates",
    }
}

pub fn budget_value(b: &SearchBudget) -> Value {
    serde_json::json!({
        "max_placements": b.max_placements,
        "max_points": b.max_points,
        "rotation_pool_size": b.rotation_pool_size,
    })
}

pub fn exhaustion_document(cfg: &ProblemConfig, report: &Exhaustion) -> Value {
    serde_json::json!({
        "format": FORMAT,
        "kind": "exhausted",
        "problem": problem_echo(cfg),
        "budget": budget_value(&cfg.budget),
        "reason": reason_name(report.reason),
        "placements": report.placements,
        "points": report.points,
        "rank": report.rank,
        "note": "inconclusive: no certificate within the budget",
    })
}

pub fn row_value(row: &SparseRow) -> Value {
    serde_json::json!({
        "provenance": row.provenance,
        "terms": row
            .terms()
            .iter()
            .map(|(id, c)| serde_json::json!({ "id": id.0, "coef": c.to_string() }))
            .collect::<Vec<_>>(),
    })
}

pub fn certificate_value(cert: &ForcingCertificate) -> Value {
    serde_json::json!({
        "target_id": cert.target.0,
        "multipliers": cert
            .multipliers
            .iter()
            .map(|(p, l)| serde_json::json!({ "provenance": p, "value": l.to_string() }))
            .collect::<Vec<_>>(),
        "witness_points": cert.witness_points.iter().map(|id: &PointId| id.0).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted() {
        let text = emit(&serde_json::json!({ "b": 1, "a": { "d": 2, "c": 3 } }));
        assert_eq!(text, "{\n  \"a\": {\n    \"c\": 3,\n    \"d\": 2\n  },\n  \"b\": 1\n}\n");
        assert_eq!(emit(&parse_value(&text).unwrap()), text);
    }
}
