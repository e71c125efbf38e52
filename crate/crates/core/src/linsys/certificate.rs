use std::collections::{BTreeMap, HashMap};

use super::{Provenance, SparseRow};
use crate::exactfield::{ComplexElem, Scalar};
use crate::geometry::PointId;

/// Exact multipliers `λ_r` with `Σ λ_r · row_r = x_target`.
///
/// Any assignment satisfying every cited equation therefore vanishes at the
/// target; the cited rows' points form the finite witness set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingCertificate {
    pub target: PointId,
    pub multipliers: Vec<(Provenance, ComplexElem)>,
    pub witness_points: Vec<PointId>,
}

impl ForcingCertificate {
    /// Provenances with a nonzero multiplier, ascending.
    pub fn cited(&self) -> Vec<Provenance> {
        let mut out: Vec<_> = self
            .multipliers
            .iter()
            .filter(|(_, l)| !l.is_zero())
            .map(|(p, _)| *p)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("certificate cites unknown row {0}")]
    UnknownProvenance(Provenance),
    #[error("two rows share provenance {0}")]
    DuplicateProvenance(Provenance),
    #[error("combination has coefficient {found} at x{id}, expected {expected}")]
    Mismatch {
        id: PointId,
        expected: Box<ComplexElem>,
        found: Box<ComplexElem>,
    },
    #[error("point x{0} is missing from the witness set")]
    MissingWitness(PointId),
}

/// Re-sums `Σ λ_r · row_r` from the rows themselves and compares it with the
/// unit form at the target. Uses no elimination state.
pub fn check_certificate(rows: &[SparseRow], cert: &ForcingCertificate) -> Result<(), CertificateError> {
    let mut by_prov: HashMap<Provenance, &SparseRow> = HashMap::new();
    for r in rows {
        if by_prov.insert(r.provenance, r).is_some() {
            return Err(CertificateError::DuplicateProvenance(r.provenance));
        }
    }
    let mut sum: BTreeMap<PointId, ComplexElem> = BTreeMap::new();
    for (prov, lambda) in &cert.multipliers {
        let row = by_prov
            .get(prov)
            .ok_or(CertificateError::UnknownProvenance(*prov))?;
        if lambda.is_zero() {
            continue;
        }
        for (id, c) in row.terms() {
            if cert.witness_points.binary_search(id).is_err() {
                return Err(CertificateError::MissingWitness(*id));
            }
            let e = sum.entry(*id).or_insert_with(ComplexElem::zero);
            *e = Scalar::add(e, &Scalar::mul(lambda, c));
        }
    }
    sum.entry(cert.target).or_insert_with(ComplexElem::zero);
    for (id, found) in sum {
        let expected = if id == cert.target {
            ComplexElem::one()
        } else {
            ComplexElem::zero()
        };
        if found != expected {
            return Err(CertificateError::Mismatch {
                id,
                expected: Box::new(expected),
                found: Box::new(found),
            });
        }
    }
    Ok(())
}

pub fn verify_certificate(rows: &[SparseRow], cert: &ForcingCertificate) -> bool {
    check_certificate(rows, cert).is_ok()
}
