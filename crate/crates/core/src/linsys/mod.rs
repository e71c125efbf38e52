//! Sparse exact linear systems.
//!
//! Each rigid placement `φ` of the base tuple contributes one homogeneous
//! equation `Σ_j c_j · x_{φ(a_j)} = 0`. [`EliminationState`] keeps those rows
//! in semi-echelon form together with a ledger expressing every reduced row
//! as a combination of the original rows, so that whenever the unit vector
//! at a target lies in the row space the multipliers can be read off as a
//! [`ForcingCertificate`]. Certificates are checked by
//! [`verify_certificate`], which re-sums the cited rows from scratch.

mod certificate;
mod elimination;
mod infeasible;
mod similarity;
mod vandermonde;

use std::collections::BTreeMap;
use std::fmt;

pub use certificate::{check_certificate, verify_certificate, CertificateError, ForcingCertificate};
pub use elimination::{AddReport, EliminationState};
pub use infeasible::{infeasible_core, is_feasible, GenSystem, InfeasibleCore};
pub use similarity::{prop1_force, SimilarityRun};
pub use vandermonde::vandermonde_det;

use crate::exactfield::{ComplexElem, Scalar};
use crate::geometry::PointId;

/// Identifies the equation a row came from (a placement index or an
/// equation number).
pub type Provenance = usize;

/// A linear form `Σ coef · x_id` with ids strictly increasing and no zero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseRow {
    terms: Vec<(PointId, ComplexElem)>,
    pub provenance: Provenance,
}

impl SparseRow {
    /// Builds a row, merging repeated ids and dropping zero coefficients.
    pub fn new(provenance: Provenance, terms: impl IntoIterator<Item = (PointId, ComplexElem)>) -> Self {
        let mut acc: BTreeMap<PointId, ComplexElem> = BTreeMap::new();
        for (id, c) in terms {
            let e = acc.entry(id).or_insert_with(ComplexElem::zero);
            *e = Scalar::add(e, &c);
        }
        SparseRow {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            provenance,
        }
    }

    /// The placement equation `Σ_j c_j · x_{image_j}`.
    pub fn from_placement(provenance: Provenance, image_ids: &[PointId], weights: &[ComplexElem]) -> Self {
        assert_eq!(image_ids.len(), weights.len(), "one weight per image");
        Self::new(provenance, image_ids.iter().copied().zip(weights.iter().cloned()))
    }

    pub fn terms(&self) -> &[(PointId, ComplexElem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = PointId> + '_ {
        self.terms.iter().map(|(id, _)| *id)
    }

    pub fn coefficient(&self, id: PointId) -> ComplexElem {
        self.terms
            .binary_search_by_key(&id, |(i, _)| *i)
            .map(|k| self.terms[k].1.clone())
            .unwrap_or_else(|_| ComplexElem::zero())
    }

    /// Value of the form at the assignment `f`.
    pub fn evaluate(&self, mut f: impl FnMut(PointId) -> ComplexElem) -> ComplexElem {
        self.terms
            .iter()
            .fold(ComplexElem::zero(), |acc, (id, c)| Scalar::add(&acc, &Scalar::mul(c, &f(*id))))
    }

    /// Same linear form, ignoring provenance.
    pub fn same_form(&self, rhs: &SparseRow) -> bool {
        self.terms == rhs.terms
    }
}

impl fmt::Display for SparseRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (id, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·x{id}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_canonical() {
        let one = ComplexElem::one();
        let row = SparseRow::new(
            0,
            [
                (PointId(3), one.clone()),
                (PointId(1), one.clone()),
                (PointId(3), Scalar::neg(&one)),
                (PointId(2), ComplexElem::zero()),
            ],
        );
        assert_eq!(row.terms(), &[(PointId(1), one.clone())]);
        assert_eq!(row.coefficient(PointId(3)), ComplexElem::zero());
        assert_eq!(row.to_string(), "(1)·x1");
    }
}
