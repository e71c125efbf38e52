//! Finite combinatorial checkers.
//!
//! A [`CopySystem`] is a finite fragment of the family of congruent copies
//! of a tuple: points are ids, copies are id vectors. [`color_search`] looks
//! for a coloring that splits every copy evenly, [`transversal_search`] for
//! a set meeting every copy in exactly `m` points. A `None` result is an
//! obstruction for the given fragment only.
//!
//! The [`gallery`] collects the one-dimensional examples where no finite
//! forcing exists.

mod color;
pub mod gallery;
mod steinhaus;
mod transversal;

pub use color::{color_search, Coloring};
pub use steinhaus::steinhaus_1d_count;
pub use transversal::{transversal_search, Transversal};

use crate::error::usage;
use crate::exactfield::{ComplexElem, Scalar};
use crate::geometry::{Placement, PointId};
use crate::linsys::SparseRow;
use crate::Result;

/// Copies of an `copy_size`-point tuple among `point_count` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopySystem {
    point_count: usize,
    copy_size: usize,
    copies: Vec<Vec<usize>>,
}

impl CopySystem {
    pub fn new(point_count: usize, copy_size: usize, copies: Vec<Vec<usize>>) -> Result<Self> {
        if copy_size == 0 {
            return usage("copies must be nonempty");
        }
        for (i, copy) in copies.iter().enumerate() {
            if copy.len() != copy_size {
                return usage(format!("copy {i} has {} points, expected {copy_size}", copy.len()));
            }
            if let Some(&id) = copy.iter().find(|&&id| id >= point_count) {
                return usage(format!("copy {i} mentions point {id} of {point_count}"));
            }
            let mut sorted = copy.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return usage(format!("copy {i} repeats a point"));
            }
        }
        Ok(CopySystem {
            point_count,
            copy_size,
            copies,
        })
    }

    /// The copies realized by placements, over the first `point_count` ids.
    pub fn from_placements(point_count: usize, placements: &[Placement]) -> Result<Self> {
        let Some(first) = placements.first() else {
            return usage("no placements");
        };
        let copies = placements
            .iter()
            .map(|p| p.image_ids.iter().map(|id| id.0).collect())
            .collect();
        Self::new(point_count, first.image_ids.len(), copies)
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn copy_size(&self) -> usize {
        self.copy_size
    }

    pub fn copies(&self) -> &[Vec<usize>] {
        &self.copies
    }

    /// Copies containing each point.
    pub(crate) fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.point_count];
        for (c, copy) in self.copies.iter().enumerate() {
            for &p in copy {
                inc[p].push(c);
            }
        }
        inc
    }

    /// `Σ_{x ∈ copy} f(x) = 0` for every copy, one row per copy.
    pub fn to_rows(&self) -> Vec<SparseRow> {
        self.copies
            .iter()
            .enumerate()
            .map(|(i, copy)| SparseRow::new(i, copy.iter().map(|&p| (PointId(p), ComplexElem::one()))))
            .collect()
    }
}

/// From an even coloring, the nonzero function `f(x) = b_{color(x)}` with
/// `b = (1, …, 1, 1 − d)`, which sums to zero on every copy.
pub fn coloring_solution(coloring: &Coloring, d: usize) -> Vec<ComplexElem> {
    let b: Vec<ComplexElem> = (0..d)
        .map(|j| ComplexElem::from_i64(if j + 1 == d { 1 - d as i64 } else { 1 }))
        .collect();
    coloring.colors.iter().map(|&c| b[c].clone()).collect()
}

/// True if `f` satisfies every copy equation of `sys` exactly.
pub fn solves_all_ones(sys: &CopySystem, f: &[ComplexElem]) -> bool {
    sys.to_rows().iter().all(|r| r.evaluate(|id| f[id.0].clone()).is_zero())
}

/// Edges of a cycle on `k` points, for tests and examples.
pub fn cycle(k: usize) -> CopySystem {
    CopySystem::new(k, 2, (0..k).map(|i| vec![i, (i + 1) % k]).collect()).expect("valid cycle")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(CopySystem::new(3, 2, vec![vec![0, 3]]).is_err());
        assert!(CopySystem::new(3, 2, vec![vec![0, 0]]).is_err());
        assert!(CopySystem::new(3, 2, vec![vec![0, 1, 2]]).is_err());
        assert!(CopySystem::new(3, 0, vec![]).is_err());
        assert_eq!(cycle(3).copies().len(), 3);
    }

    #[test]
    fn duality_on_even_cycle() {
        let sys = cycle(6);
        let col = color_search(&sys, 2).unwrap().unwrap();
        let f = coloring_solution(&col, 2);
        assert!(f.iter().all(|v| !v.is_zero()));
        assert!(solves_all_ones(&sys, &f));
    }
}
