use super::{EliminationState, SparseRow};
use crate::exactfield::{ComplexElem, Scalar};
use crate::geometry::PointId;

/// A finite affine system `row_i · x = rhs_i`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GenSystem {
    pub rows: Vec<(SparseRow, ComplexElem)>,
}

/// A deletion-minimal infeasible subsystem, with multipliers `μ_i` such that
/// `Σ μ_i · row_i = 0` while `Σ μ_i · rhs_i = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfeasibleCore {
    pub rows: Vec<usize>,
    pub multipliers: Vec<ComplexElem>,
}

impl GenSystem {
    pub fn new(rows: Vec<(SparseRow, ComplexElem)>) -> Self {
        GenSystem { rows }
    }

    fn constant_column(&self) -> PointId {
        let max = self.rows.iter().flat_map(|(r, _)| r.ids()).map(|id| id.0).max();
        PointId(max.map_or(0, |m| m + 1))
    }

    /// Multipliers over `subset` certifying infeasibility, if the subset is
    /// infeasible. The equations are homogenized with a constant column;
    /// the subsystem is infeasible exactly when that column is forced to 0.
    fn refutation(&self, subset: &[usize]) -> Option<Vec<ComplexElem>> {
        let one = self.constant_column();
        let mut state = EliminationState::new();
        for &i in subset {
            let (row, rhs) = &self.rows[i];
            let terms = row.terms().iter().cloned().chain([(one, rhs.neg())]);
            state.add_row(SparseRow::new(i, terms));
        }
        let combo = state.unit_combination(one)?;
        let mut mu = vec![ComplexElem::zero(); subset.len()];
        for (k, lambda) in combo {
            mu[k] = lambda.neg();
        }
        Some(mu)
    }
}

pub fn is_feasible(sys: &GenSystem) -> bool {
    let all: Vec<usize> = (0..sys.rows.len()).collect();
    sys.refutation(&all).is_none()
}

/// Drops rows in index order whenever the rest stays infeasible.
pub fn infeasible_core(sys: &GenSystem) -> Option<InfeasibleCore> {
    let mut keep: Vec<usize> = (0..sys.rows.len()).collect();
    sys.refutation(&keep)?;
    let mut i = 0;
    while i < keep.len() {
        let trial: Vec<usize> = keep.iter().copied().filter(|&k| k != keep[i]).collect();
        if sys.refutation(&trial).is_some() {
            keep = trial;
        } else {
            i += 1;
        }
    }
    let multipliers = sys.refutation(&keep).expect("core stays infeasible");
    Some(InfeasibleCore { rows: keep, multipliers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, FieldElem};
    use proptest::prelude::*;

    fn c(n: i64) -> ComplexElem {
        ComplexElem::real(FieldElem::from(rat(n, 1)))
    }

    fn eq(terms: &[(usize, i64)], rhs: i64) -> (SparseRow, ComplexElem) {
        (SparseRow::new(0, terms.iter().map(|&(id, k)| (PointId(id), c(k)))), c(rhs))
    }

    /// Dense rank comparison: feasible iff rank A = rank [A | b].
    fn feasible_by_rank(sys: &GenSystem, subset: &[usize], vars: usize) -> bool {
        fn rank(mut m: Vec<Vec<ComplexElem>>) -> usize {
            let cols = m.first().map_or(0, Vec::len);
            let mut r = 0;
            for col in 0..cols {
                let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
                m.swap(r, p);
                let inv = m[r][col].inv().unwrap();
                for i in 0..m.len() {
                    if i != r && !m[i][col].is_zero() {
                        let f = m[i][col].mul(&inv);
                        for j in 0..cols {
                            let d = f.mul(&m[r][j]);
                            m[i][j] = m[i][j].sub(&d);
                        }
                    }
                }
                r += 1;
            }
            r
        }
        let a: Vec<Vec<ComplexElem>> = subset
            .iter()
            .map(|&i| (0..vars).map(|v| sys.rows[i].0.coefficient(PointId(v))).collect())
            .collect();
        let ab: Vec<Vec<ComplexElem>> = a
            .iter()
            .zip(subset)
            .map(|(row, &i)| row.iter().cloned().chain([sys.rows[i].1.clone()]).collect())
            .collect();
        rank(a) == rank(ab)
    }

    #[test]
    fn examples() {
        let sys = GenSystem::new(vec![eq(&[(0, 1)], 1), eq(&[(0, 1)], 0), eq(&[(1, 1)], 2)]);
        let core = infeasible_core(&sys).unwrap();
        assert_eq!(core.rows, vec![0, 1]);
        assert_eq!(core.multipliers, vec![c(1), c(-1)]);

        let sys = GenSystem::new(vec![
            eq(&[(0, 1), (1, 1)], 1),
            eq(&[(0, 1), (1, 1)], 1),
            eq(&[(0, 1)], 0),
            eq(&[(1, 1)], 0),
        ]);
        assert_eq!(infeasible_core(&sys).unwrap().rows, vec![1, 2, 3]);

        let sys = GenSystem::new(vec![eq(&[(0, 1)], 1), eq(&[(1, 1)], 2)]);
        assert!(is_feasible(&sys));
        assert_eq!(infeasible_core(&sys), None);
    }

    #[test]
    fn zero_row_with_nonzero_rhs() {
        let sys = GenSystem::new(vec![eq(&[(0, 1)], 1), eq(&[], 3)]);
        let core = infeasible_core(&sys).unwrap();
        assert_eq!(core.rows, vec![1]);
        assert_eq!(core.multipliers, vec![ComplexElem::real(FieldElem::from(rat(1, 3)))]);
    }

    fn system() -> impl Strategy<Value = GenSystem> {
        prop::collection::vec((prop::collection::vec((0usize..4, -2i64..3), 0..3), -2i64..3), 1..=7)
            .prop_map(|rows| GenSystem::new(rows.iter().map(|(t, b)| eq(t, *b)).collect()))
    }

    proptest! {
        #[test]
        fn core_is_deletion_minimal(sys in system()) {
            let all: Vec<usize> = (0..sys.rows.len()).collect();
            prop_assert_eq!(is_feasible(&sys), feasible_by_rank(&sys, &all, 4));
            if let Some(core) = infeasible_core(&sys) {
                prop_assert!(!feasible_by_rank(&sys, &core.rows, 4));
                for skip in &core.rows {
                    let rest: Vec<usize> = core.rows.iter().copied().filter(|k| k != skip).collect();
                    prop_assert!(feasible_by_rank(&sys, &rest, 4));
                }
                let mut lhs = SparseRow::new(0, []);
                let mut rhs = ComplexElem::zero();
                for (i, mu) in core.rows.iter().zip(&core.multipliers) {
                    let (row, b) = &sys.rows[*i];
                    lhs = SparseRow::new(0, lhs.terms().iter().cloned()
                        .chain(row.terms().iter().map(|(id, k)| (*id, mu.mul(k)))));
                    rhs = rhs.add(&mu.mul(b));
                }
                prop_assert!(lhs.is_zero());
                prop_assert_eq!(rhs, ComplexElem::one());
            }
        }
    }
}
