//! Witness search.
//!
//! [`witness_search`] grows a set of realized placements of the base tuple,
//! feeds each placement's equation to an [`EliminationState`] and stops as
//! soon as the target is forced. Candidates come from two sources, taken in
//! alternation:
//!
//! 1. in the plane, *anchored* placements that send two base points onto a
//!    pair of existing points at the same squared distance; these close
//!    cycles among points already present;
//! 2. *pool* placements that send the first base point onto an existing
//!    point under a rotation from [`rotation_pool`].
//!
//! All anchored candidates are exhausted before the next pool placement is
//! taken. The candidate order is fixed, so a run is a deterministic prefix
//! of one infinite enumeration and a larger placement or point budget never
//! loses a certificate found with a smaller one.

mod minimize;
mod pool;

use std::collections::HashSet;

pub use minimize::minimize_witness;
pub use pool::rotation_pool;

use crate::error::usage;
use crate::exactfield::{ComplexElem, FieldDescriptor, Scalar};
use crate::geometry::{
    anchored_motion_2d, apply_motion, realize_placement, Placement, Point, PointId, PointStore, RigidMotion,
    RotationMatrix,
};
use crate::linsys::{verify_certificate, AddReport, EliminationState, ForcingCertificate, Provenance, SparseRow};
use crate::{Error, Result};

/// A weighted tuple, a target point and the field everything lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    dim: usize,
    field: FieldDescriptor,
    base: Vec<Point>,
    weights: Vec<ComplexElem>,
    target: Point,
}

impl Problem {
    pub fn new(
        dim: usize,
        field: FieldDescriptor,
        base: Vec<Point>,
        weights: Vec<ComplexElem>,
        target: Point,
    ) -> Result<Self> {
        if dim < 2 {
            return usage(format!("dimension must be at least 2, got {dim}"));
        }
        if base.is_empty() {
            return usage("the base tuple is empty");
        }
        if base.len() != weights.len() {
            return usage(format!("{} base points but {} weights", base.len(), weights.len()));
        }
        for p in base.iter().chain([&target]) {
            if p.dim() != dim {
                return usage(format!("point {p} does not have dimension {dim}"));
            }
            let f = p.descriptor()?;
            if !field.contains(f) {
                return Err(Error::FieldMismatch(field, f));
            }
        }
        let mut sum = ComplexElem::zero();
        for w in &weights {
            let f = w.descriptor()?;
            if !field.contains(f) {
                return Err(Error::FieldMismatch(field, f));
            }
            sum = sum.add(w);
        }
        if sum.is_zero() {
            return usage("the weights sum to zero, so every constant function satisfies all equations");
        }
        Ok(Problem {
            dim,
            field,
            base,
            weights,
            target,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn base(&self) -> &[Point] {
        &self.base
    }

    pub fn weights(&self) -> &[ComplexElem] {
        &self.weights
    }

    pub fn target(&self) -> &Point {
        &self.target
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchBudget {
    pub max_placements: usize,
    pub max_points: usize,
    pub rotation_pool_size: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_placements: 64,
            max_points: 256,
            rotation_pool_size: 16,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessStats {
    /// `|H|`, the number of points the certificate mentions.
    pub witness_points: usize,
    /// Placements with a nonzero multiplier.
    pub cited_placements: usize,
    /// Placements realized before the certificate appeared.
    pub placements: usize,
    /// Points interned before the certificate appeared.
    pub points: usize,
}

/// A found certificate together with everything needed to re-check it.
#[derive(Debug, Clone)]
pub struct Witness {
    pub certificate: ForcingCertificate,
    /// All realized placements; the placement at index `i` produced
    /// `rows[i]`, whose provenance is `i`.
    pub placements: Vec<Placement>,
    pub rows: Vec<SparseRow>,
    pub store: PointStore,
    pub stats: WitnessStats,
}

impl Witness {
    /// The placements the certificate cites, ascending by provenance.
    pub fn cited_placements(&self) -> Vec<(Provenance, &Placement)> {
        self.certificate
            .cited()
            .into_iter()
            .map(|p| (p, &self.placements[p]))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExhaustionReason {
    PlacementBudget,
    PointBudget,
    /// Every candidate over the final point set was tried.
    NoCandidates,
}

/// An inconclusive run: no certificate within the budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exhaustion {
    pub reason: ExhaustionReason,
    pub placements: usize,
    pub points: usize,
    pub rank: usize,
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Certificate(Box<Witness>),
    Exhausted(Exhaustion),
}

enum Attempt {
    Skipped,
    Accepted,
    Finished(SearchOutcome),
}

struct Engine<'a> {
    problem: &'a Problem,
    budget: &'a SearchBudget,
    store: PointStore,
    target: PointId,
    placements: Vec<Placement>,
    rows: Vec<SparseRow>,
    seen: HashSet<Vec<(PointId, ComplexElem)>>,
    state: EliminationState,
}

impl Engine<'_> {
    fn exhausted(&self, reason: ExhaustionReason) -> Attempt {
        Attempt::Finished(SearchOutcome::Exhausted(Exhaustion {
            reason,
            placements: self.placements.len(),
            points: self.store.len(),
            rank: self.state.rank(),
        }))
    }

    fn try_motion(&mut self, motion: RigidMotion) -> Attempt {
        let images: Vec<Point> = self
            .problem
            .base
            .iter()
            .map(|a| apply_motion(&motion, a).expect("dimensions agree"))
            .collect();
        // ids the images would receive, without interning yet
        let mut fresh: Vec<&Point> = Vec::new();
        let ids: Vec<PointId> = images
            .iter()
            .map(|p| match self.store.lookup(p) {
                Some(id) => id,
                None => {
                    let k = fresh.iter().position(|q| *q == p).unwrap_or_else(|| {
                        fresh.push(p);
                        fresh.len() - 1
                    });
                    PointId(self.store.len() + k)
                }
            })
            .collect();
        let row = SparseRow::from_placement(self.placements.len(), &ids, &self.problem.weights);
        if row.is_zero() || self.seen.contains(row.terms()) {
            return Attempt::Skipped;
        }
        if self.store.len() + fresh.len() > self.budget.max_points {
            return self.exhausted(ExhaustionReason::PointBudget);
        }
        if self.placements.len() >= self.budget.max_placements {
            return self.exhausted(ExhaustionReason::PlacementBudget);
        }
        let placement = realize_placement(&self.problem.base, &motion, &mut self.store).expect("field checked");
        debug_assert_eq!(placement.image_ids, ids);
        self.seen.insert(row.terms().to_vec());
        self.placements.push(placement);
        self.rows.push(row.clone());
        if let AddReport::NewPivot(_) = self.state.add_row(row) {
            if let Some(cert) = self.state.forcing_certificate(self.target) {
                return Attempt::Finished(self.finish(cert));
            }
        }
        Attempt::Accepted
    }

    fn finish(&mut self, certificate: ForcingCertificate) -> SearchOutcome {
        assert!(
            verify_certificate(&self.rows, &certificate),
            "elimination produced a certificate that does not verify"
        );
        let stats = WitnessStats {
            witness_points: certificate.witness_points.len(),
            cited_placements: certificate.cited().len(),
            placements: self.placements.len(),
            points: self.store.len(),
        };
        SearchOutcome::Certificate(Box::new(Witness {
            certificate,
            placements: std::mem::take(&mut self.placements),
            rows: std::mem::take(&mut self.rows),
            store: self.store.clone(),
            stats,
        }))
    }

    /// Anchored candidates for the pair (x, y), both orientations of every
    /// base pair at the right distance.
    fn anchored(&mut self, x: PointId, y: PointId) -> Option<SearchOutcome> {
        let n = self.problem.base.len();
        let (px, py) = (self.store.get(x).clone(), self.store.get(y).clone());
        let d = px.dist_sqr(&py).expect("same field");
        for j1 in 0..n {
            for j2 in j1 + 1..n {
                let base = &self.problem.base;
                if base[j1].dist_sqr(&base[j2]).expect("same field") != d {
                    continue;
                }
                let Some(m) = anchored_motion_2d(base, j1, j2, &px, &py).expect("planar, distinct anchors") else {
                    continue;
                };
                if let Attempt::Finished(out) = self.try_motion(m) {
                    return Some(out);
                }
            }
        }
        None
    }
}

/// Searches for a finite set of placements whose equations force the value
/// at the problem's target to vanish.
pub fn witness_search(problem: &Problem, budget: &SearchBudget) -> SearchOutcome {
    let pool: Vec<RotationMatrix> = rotation_pool(problem.field, problem.dim, budget.rotation_pool_size);
    let mut store = PointStore::new(problem.field, problem.dim);
    let target = store.intern(problem.target.clone()).expect("target checked");
    let mut engine = Engine {
        problem,
        budget,
        store,
        target,
        placements: Vec::new(),
        rows: Vec::new(),
        seen: HashSet::new(),
        state: EliminationState::new(),
    };
    let mut anchored_upto = 0;
    let (mut point, mut rot) = (0, 0);
    loop {
        if problem.dim == 2 {
            while anchored_upto < engine.store.len() {
                let q = PointId(anchored_upto);
                for p in (0..anchored_upto).map(PointId) {
                    for (x, y) in [(p, q), (q, p)] {
                        if let Some(out) = engine.anchored(x, y) {
                            return out;
                        }
                    }
                }
                anchored_upto += 1;
            }
        }
        loop {
            if point >= engine.store.len() || pool.is_empty() {
                let Attempt::Finished(out) = engine.exhausted(ExhaustionReason::NoCandidates) else {
                    unreachable!()
                };
                return out;
            }
            let p = engine.store.get(PointId(point)).clone();
            let motion = RigidMotion::sending(pool[rot].clone(), &problem.base[0], &p).expect("dimensions agree");
            rot += 1;
            if rot == pool.len() {
                rot = 0;
                point += 1;
            }
            match engine.try_motion(motion) {
                Attempt::Skipped => continue,
                Attempt::Accepted => break,
                Attempt::Finished(out) => return out,
            }
        }
    }
}
