use std::collections::{BTreeMap, HashMap};

use super::{ForcingCertificate, SparseRow};
use crate::exactfield::{ComplexElem, Scalar};
use crate::geometry::PointId;

/// Outcome of [`EliminationState::add_row`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AddReport {
    ReducedToZero,
    NewPivot(PointId),
}

type Vector = BTreeMap<PointId, ComplexElem>;
type Combination = BTreeMap<usize, ComplexElem>;

#[derive(Debug, Clone)]
struct ReducedRow {
    /// Pivot coefficient normalized to one; every other id is larger.
    terms: Vector,
    /// The row as a combination of original rows (by insertion index).
    combo: Combination,
}

/// Incremental exact elimination with a multiplier ledger.
///
/// Rows are kept in semi-echelon form: each reduced row's pivot is its
/// smallest id, pivots are unique, and the pivot coefficient is one. The
/// ledger records each reduced row as an exact combination of the original
/// rows, which is what certificates are read from.
#[derive(Debug, Clone, Default)]
pub struct EliminationState {
    originals: Vec<SparseRow>,
    reduced: Vec<ReducedRow>,
    pivots: HashMap<PointId, usize>,
}

fn axpy<K: Ord + Copy>(target: &mut BTreeMap<K, ComplexElem>, scale: &ComplexElem, src: &BTreeMap<K, ComplexElem>) {
    for (k, c) in src {
        let delta = Scalar::mul(scale, c);
        let entry = target.entry(*k).or_insert_with(ComplexElem::zero);
        *entry = Scalar::add(entry, &delta);
        if entry.is_zero() {
            target.remove(k);
        }
    }
}

impl EliminationState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn originals(&self) -> &[SparseRow] {
        &self.originals
    }

    pub fn rank(&self) -> usize {
        self.reduced.len()
    }

    pub fn is_pivot(&self, id: PointId) -> bool {
        self.pivots.contains_key(&id)
    }

    /// Subtracts pivot rows from `v` in increasing id order until the
    /// smallest remaining id is not a pivot. Returns that id (or `None` once
    /// `v` is zero); `used` accumulates the subtracted combination.
    fn reduce(&self, v: &mut Vector, used: &mut Combination) -> Option<PointId> {
        let mut from = PointId(0);
        loop {
            let (&id, coef) = v.range(from..).next()?;
            let Some(&ri) = self.pivots.get(&id) else {
                return Some(id);
            };
            let coef = coef.clone();
            let row = &self.reduced[ri];
            axpy(v, &Scalar::neg(&coef), &row.terms);
            axpy(used, &coef, &row.combo);
            from = PointId(id.0 + 1);
        }
    }

    pub fn add_row(&mut self, row: SparseRow) -> AddReport {
        let index = self.originals.len();
        let mut v: Vector = row.terms().iter().cloned().collect();
        let mut used = Combination::new();
        let free = self.reduce(&mut v, &mut used);
        self.originals.push(row);
        let Some(pivot) = free else {
            return AddReport::ReducedToZero;
        };
        // combo = (e_index − used) / v[pivot]
        let mut combo = Combination::new();
        combo.insert(index, ComplexElem::one());
        axpy(&mut combo, &Scalar::neg(&ComplexElem::one()), &used);
        let inv = v[&pivot].inv().expect("pivot coefficient is nonzero");
        for c in v.values_mut().chain(combo.values_mut()) {
            *c = Scalar::mul(c, &inv);
        }
        self.pivots.insert(pivot, self.reduced.len());
        self.reduced.push(ReducedRow { terms: v, combo });
        AddReport::NewPivot(pivot)
    }

    /// Multipliers over the original rows whose combination is the unit
    /// form at `target`, if one exists.
    pub fn unit_combination(&self, target: PointId) -> Option<Vec<(usize, ComplexElem)>> {
        if !self.pivots.contains_key(&target) {
            return None;
        }
        let mut v = Vector::new();
        v.insert(target, ComplexElem::one());
        let mut used = Combination::new();
        match self.reduce(&mut v, &mut used) {
            Some(_) => None,
            None => Some(used.into_iter().collect()),
        }
    }

    /// A certificate that every solution of the rows vanishes at `target`.
    pub fn forcing_certificate(&self, target: PointId) -> Option<ForcingCertificate> {
        let combo = self.unit_combination(target)?;
        let multipliers: Vec<_> = combo
            .into_iter()
            .map(|(i, lambda)| (self.originals[i].provenance, lambda))
            .collect();
        let mut witness: Vec<PointId> = Vec::new();
        for (i, _) in self.unit_combination(target)? {
            witness.extend(self.originals[i].ids());
        }
        witness.sort();
        witness.dedup();
        Some(ForcingCertificate {
            target,
            multipliers,
            witness_points: witness,
        })
    }

    /// Recomputes every reduced row from its ledger entry and compares.
    pub fn ledger_is_sound(&self) -> bool {
        self.reduced.iter().all(|row| {
            let mut sum = Vector::new();
            for (i, lambda) in &row.combo {
                let orig: Vector = self.originals[*i].terms().iter().cloned().collect();
                axpy(&mut sum, lambda, &orig);
            }
            sum == row.terms
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, FieldElem};
    use crate::linsys::verify_certificate;
    use proptest::prelude::*;

    fn c(n: i64, d: i64) -> ComplexElem {
        ComplexElem::real(FieldElem::from(rat(n, d)))
    }

    fn row(p: usize, terms: &[(usize, i64)]) -> SparseRow {
        SparseRow::new(p, terms.iter().map(|&(id, k)| (PointId(id), c(k, 1))))
    }

    #[test]
    fn add_row_reports() {
        let mut st = EliminationState::new();
        assert_eq!(st.add_row(row(0, &[(0, 1), (1, 1)])), AddReport::NewPivot(PointId(0)));
        assert_eq!(st.add_row(row(1, &[(0, 1), (1, 1)])), AddReport::ReducedToZero);
        assert_eq!(st.rank(), 1);
    }

    #[test]
    fn triangle_forces_vertex() {
        let rows = [row(0, &[(0, 1), (1, 1)]), row(1, &[(1, 1), (2, 1)]), row(2, &[(2, 1), (0, 1)])];
        let mut st = EliminationState::new();
        assert_eq!(st.add_row(rows[0].clone()), AddReport::NewPivot(PointId(0)));
        assert_eq!(st.add_row(rows[1].clone()), AddReport::NewPivot(PointId(1)));
        assert!(st.forcing_certificate(PointId(0)).is_none());
        assert_eq!(st.add_row(rows[2].clone()), AddReport::NewPivot(PointId(2)));
        let cert = st.forcing_certificate(PointId(0)).unwrap();
        assert_eq!(cert.multipliers, vec![(0, c(1, 2)), (1, c(-1, 2)), (2, c(1, 2))]);
        assert_eq!(cert.witness_points, vec![PointId(0), PointId(1), PointId(2)]);
        assert!(verify_certificate(&rows, &cert));
        assert!(st.ledger_is_sound());
    }

    #[test]
    fn single_edge_forces_nothing() {
        let mut st = EliminationState::new();
        st.add_row(row(0, &[(0, 1), (1, 1)]));
        assert!(st.forcing_certificate(PointId(0)).is_none());
        assert!(st.forcing_certificate(PointId(1)).is_none());
        assert!(st.forcing_certificate(PointId(7)).is_none());
    }

    #[test]
    fn difference_and_sum() {
        let mut st = EliminationState::new();
        st.add_row(row(0, &[(0, 1), (1, -1)]));
        st.add_row(row(1, &[(0, 1), (1, 1)]));
        let cert = st.forcing_certificate(PointId(1)).unwrap();
        assert_eq!(cert.multipliers, vec![(0, c(-1, 2)), (1, c(1, 2))]);
    }

    proptest! {
        #[test]
        fn ledger_stays_sound(rows in prop::collection::vec(
            prop::collection::vec((0usize..7, -3i64..4), 1..4), 1..12)) {
            let mut st = EliminationState::new();
            let mut all = Vec::new();
            for (p, terms) in rows.iter().enumerate() {
                let r = row(p, terms);
                all.push(r.clone());
                st.add_row(r);
                prop_assert!(st.ledger_is_sound());
            }
            for t in 0..7 {
                if let Some(cert) = st.forcing_certificate(PointId(t)) {
                    prop_assert!(verify_certificate(&all, &cert));
                    for k in 0..cert.multipliers.len() {
                        let mut bad = cert.clone();
                        bad.multipliers[k].1 = Scalar::add(&bad.multipliers[k].1, &c(1, 3));
                        prop_assert!(!verify_certificate(&all, &bad));
                    }
                }
            }
        }
    }
}
