use super::{EliminationState, ForcingCertificate, SparseRow};
use crate::error::usage;
use crate::exactfield::{ComplexElem, FieldDescriptor};
use crate::geometry::{Point, PointStore};
use crate::Result;

/// Rows generated by the lattice similarities `x ↦ b + κ·x` and the
/// certificate for the target, if one was found.
#[derive(Debug, Clone)]
pub struct SimilarityRun {
    pub store: PointStore,
    pub rows: Vec<SparseRow>,
    pub certificate: Option<ForcingCertificate>,
}

/// Feeds `Σ_j c_j · x_{b + κ·a_j} = 0` to elimination for κ in `scales`
/// (outer loop) and `b` in `translations` (inner loop), stopping at the
/// first row that makes the target forced.
///
/// The target is interned first, so it has id 0.
pub fn prop1_force(
    tuple: &[Vec<i64>],
    weights: &[ComplexElem],
    target: &[i64],
    translations: &[Vec<i64>],
    scales: &[i64],
) -> Result<SimilarityRun> {
    if translations.is_empty() || scales.is_empty() {
        return usage("translation and scale ranges must be nonempty");
    }
    if tuple.is_empty() || tuple.len() != weights.len() {
        return usage(format!("{} points but {} weights", tuple.len(), weights.len()));
    }
    let k = target.len();
    if tuple.iter().chain(translations).any(|p| p.len() != k) {
        return usage(format!("all lattice points must have dimension {k}"));
    }
    if scales.contains(&0) {
        return usage("scale 0 is not a similarity");
    }
    let mut store = PointStore::new(FieldDescriptor::Rational, k);
    let target_id = store.intern(Point::from_ints(target))?;
    let mut state = EliminationState::new();
    let mut rows = Vec::new();
    for &kappa in scales {
        for b in translations {
            let ids = tuple
                .iter()
                .map(|a| {
                    let image: Vec<i64> = b.iter().zip(a).map(|(bi, ai)| bi + kappa * ai).collect();
                    store.intern(Point::from_ints(&image))
                })
                .collect::<Result<Vec<_>>>()?;
            let row = SparseRow::from_placement(rows.len(), &ids, weights);
            rows.push(row.clone());
            state.add_row(row);
            if let Some(cert) = state.forcing_certificate(target_id) {
                return Ok(SimilarityRun {
                    store,
                    rows,
                    certificate: Some(cert),
                });
            }
        }
    }
    Ok(SimilarityRun {
        store,
        rows,
        certificate: None,
    })
}
