//! Exact geometry: points with field coordinates, rotations with exact
//! orthogonality, rigid motions, and interning of realized placements.

mod motion;
mod rotation;

use std::collections::HashMap;
use std::fmt;

pub use motion::{anchored_motion_2d, apply_motion, realize_placement, Placement, RigidMotion};
pub use rotation::{
    cayley_rotation, determinant, embed_planar_rotation, gamma, quadratic_unit, RotationMatrix,
    UnitComplex,
};

use crate::exactfield::{BigRational, FieldDescriptor, FieldElem, Scalar};
use crate::{Error, Result};

/// Dense index of an interned point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointId(pub usize);

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A point of ℝ^k with exact coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub coords: Vec<FieldElem>,
}

impl Point {
    pub fn new(coords: Vec<FieldElem>) -> Self {
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point::new(coords.iter().map(|&c| FieldElem::from_i64(c)).collect())
    }

    pub fn from_rationals(coords: &[BigRational]) -> Self {
        Point::new(coords.iter().cloned().map(FieldElem::Rational).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Point::new(vec![FieldElem::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Smallest field holding every coordinate.
    pub fn descriptor(&self) -> Result<FieldDescriptor> {
        let mut field = FieldDescriptor::Rational;
        for c in &self.coords {
            let f = c.descriptor();
            if field.contains(f) {
                continue;
            }
            if f.contains(field) {
                field = f;
            } else {
                return Err(Error::FieldMismatch(field, f));
            }
        }
        Ok(field)
    }

    fn check_dim(&self, rhs: &Point) -> Result<()> {
        if self.dim() != rhs.dim() {
            return Err(Error::Usage(format!(
                "dimension mismatch: {} vs {}",
                self.dim(),
                rhs.dim()
            )));
        }
        Ok(())
    }

    pub fn sub(&self, rhs: &Point) -> Result<Point> {
        self.check_dim(rhs)?;
        Ok(Point::new(
            self.coords.iter().zip(&rhs.coords).map(|(a, b)| Scalar::sub(a, b)).collect(),
        ))
    }

    pub fn add(&self, rhs: &Point) -> Result<Point> {
        self.check_dim(rhs)?;
        Ok(Point::new(
            self.coords.iter().zip(&rhs.coords).map(|(a, b)| Scalar::add(a, b)).collect(),
        ))
    }

    pub fn norm_sqr(&self) -> FieldElem {
        self.coords
            .iter()
            .fold(FieldElem::zero(), |acc, c| Scalar::add(&acc, &Scalar::mul(c, c)))
    }

    pub fn dist_sqr(&self, rhs: &Point) -> Result<FieldElem> {
        Ok(self.sub(rhs)?.norm_sqr())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Interns exact points as dense ids in insertion order. No tolerance: two
/// points share an id only if every coordinate is equal.
#[derive(Debug, Clone)]
pub struct PointStore {
    field: FieldDescriptor,
    dim: usize,
    ids: HashMap<Point, PointId>,
    points: Vec<Point>,
}

impl PointStore {
    pub fn new(field: FieldDescriptor, dim: usize) -> Self {
        PointStore {
            field,
            dim,
            ids: HashMap::new(),
            points: Vec::new(),
        }
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn intern(&mut self, p: Point) -> Result<PointId> {
        if p.dim() != self.dim {
            return Err(Error::Usage(format!(
                "point of dimension {} in a store of dimension {}",
                p.dim(),
                self.dim
            )));
        }
        let f = p.descriptor()?;
        if !self.field.contains(f) {
            return Err(Error::FieldMismatch(self.field, f));
        }
        if let Some(&id) = self.ids.get(&p) {
            return Ok(id);
        }
        let id = PointId(self.points.len());
        self.points.push(p.clone());
        self.ids.insert(p, id);
        Ok(id)
    }

    pub fn lookup(&self, p: &Point) -> Option<PointId> {
        self.ids.get(p).copied()
    }

    pub fn get(&self, id: PointId) -> &Point {
        &self.points[id.0]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, BigInt};
    use num_traits::Pow;

    #[test]
    fn intern_is_exact() {
        let s3 = FieldDescriptor::Quadratic(3);
        let mut store = PointStore::new(s3, 2);
        let p = Point::new(vec![FieldElem::from(rat(1, 2)), FieldElem::quad(rat(0, 1), rat(1, 2), s3)]);
        let a = store.intern(p.clone()).unwrap();
        assert_eq!(store.intern(p.clone()).unwrap(), a);

        // the same point reached through a 60° rotation of (1, 0)
        let c = FieldElem::from(rat(1, 2));
        let s = FieldElem::quad(rat(0, 1), rat(1, 2), s3);
        let q = RotationMatrix::planar(c, s, 0, 1, 2).unwrap().apply(&Point::from_ints(&[1, 0])).unwrap();
        assert_eq!(store.intern(q).unwrap(), a);

        let tiny = BigRational::new(BigInt::from(1), BigInt::from(10).pow(40u32));
        let x = Point::from_rationals(&[rat(3, 1), rat(0, 1)]);
        let y = Point::from_rationals(&[rat(3, 1) + tiny, rat(0, 1)]);
        let ix = store.intern(x).unwrap();
        let iy = store.intern(y).unwrap();
        assert_ne!(ix, iy);
        assert_eq!((a.0, ix.0, iy.0), (0, 1, 2));
    }

    #[test]
    fn intern_rejects_foreign_points() {
        let mut store = PointStore::new(FieldDescriptor::Rational, 2);
        assert!(store.intern(Point::from_ints(&[1, 2, 3])).is_err());
        let p = Point::new(vec![FieldElem::sqrt_of(2), FieldElem::zero()]);
        assert!(matches!(store.intern(p), Err(Error::FieldMismatch(..))));
    }
}
