use super::{Point, PointId, PointStore, RotationMatrix};
use crate::exactfield::{CheckedField, ComplexElem, Scalar};
use crate::error::usage;
use crate::Result;

/// An orientation-preserving isometry `x ↦ Q·x + t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RigidMotion {
    pub rotation: RotationMatrix,
    pub translation: Point,
}

impl RigidMotion {
    pub fn new(rotation: RotationMatrix, translation: Point) -> Result<Self> {
        if rotation.dim() != translation.dim() {
            return usage("rotation and translation dimensions differ");
        }
        Ok(RigidMotion { rotation, translation })
    }

    pub fn identity(k: usize) -> Self {
        RigidMotion {
            rotation: RotationMatrix::identity(k),
            translation: Point::origin(k),
        }
    }

    /// The motion `Q·x + (p − Q·a)`, which sends `a` to `p`.
    pub fn sending(rotation: RotationMatrix, a: &Point, p: &Point) -> Result<Self> {
        let t = p.sub(&rotation.apply(a)?)?;
        RigidMotion::new(rotation, t)
    }

    pub fn dim(&self) -> usize {
        self.rotation.dim()
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &RigidMotion) -> Result<Self> {
        let rotation = self.rotation.mul(&rhs.rotation)?;
        let translation = self.rotation.apply(&rhs.translation)?.add(&self.translation)?;
        RigidMotion::new(rotation, translation)
    }

    pub fn inverse(&self) -> Result<Self> {
        let qt = self.rotation.transpose();
        let t = qt.apply(&self.translation)?;
        let neg = Point::new(t.coords.iter().map(Scalar::neg).collect());
        RigidMotion::new(qt, neg)
    }
}

/// `Q·p + t`, exactly.
pub fn apply_motion(m: &RigidMotion, p: &Point) -> Result<Point> {
    m.rotation.apply(p)?.add(&m.translation)
}

/// A realized copy of the base tuple: the motion and the interned images of
/// `a_1, …, a_n` in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    pub motion: RigidMotion,
    pub image_ids: Vec<PointId>,
}

/// Applies `m` to every base point and interns the images.
pub fn realize_placement(base: &[Point], m: &RigidMotion, store: &mut PointStore) -> Result<Placement> {
    let image_ids = base
        .iter()
        .map(|a| apply_motion(m, a).and_then(|p| store.intern(p)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Placement {
        motion: m.clone(),
        image_ids,
    })
}

fn as_complex(p: &Point) -> ComplexElem {
    ComplexElem::new(p.coords[0].clone(), p.coords[1].clone())
}

/// The unique planar rigid motion with `φ(a_{j1}) = p` and `φ(a_{j2}) = q`,
/// if the squared distances agree exactly.
///
/// The rotation is the unit complex number `(q − p) / (a_{j2} − a_{j1})`,
/// whose parts lie in the field of the inputs, so no square roots are
/// needed.
pub fn anchored_motion_2d(
    base: &[Point],
    j1: usize,
    j2: usize,
    p: &Point,
    q: &Point,
) -> Result<Option<RigidMotion>> {
    if j1 == j2 {
        return usage("anchor indices must differ");
    }
    let (Some(a1), Some(a2)) = (base.get(j1), base.get(j2)) else {
        return usage(format!("anchor index out of range for a tuple of {}", base.len()));
    };
    if [a1, a2, p, q].iter().any(|x| x.dim() != 2) {
        return usage("anchored motions are planar");
    }
    let base_vec = a2.sub(a1)?;
    if base_vec.norm_sqr().is_zero() {
        return usage(format!("base points {j1} and {j2} coincide"));
    }
    let image_vec = q.sub(p)?;
    if image_vec.norm_sqr() != base_vec.norm_sqr() {
        return Ok(None);
    }
    let u = as_complex(&image_vec).try_div(&as_complex(&base_vec))?;
    let rotation = RotationMatrix::planar(u.re, u.im, 0, 1, 2)?;
    Ok(Some(RigidMotion::sending(rotation, a1, p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, FieldDescriptor, FieldElem};
    use crate::geometry::{gamma, quadratic_unit};

    const S3: FieldDescriptor = FieldDescriptor::Quadratic(3);

    fn unit_pair() -> Vec<Point> {
        vec![Point::from_ints(&[0, 0]), Point::from_ints(&[1, 0])]
    }

    fn apex() -> Point {
        Point::new(vec![FieldElem::from(rat(1, 2)), FieldElem::quad(rat(0, 1), rat(1, 2), S3)])
    }

    #[test]
    fn apply_examples() {
        let p = Point::from_ints(&[3, -2]);
        assert_eq!(apply_motion(&RigidMotion::identity(2), &p).unwrap(), p);
        let quarter = RigidMotion::new(RotationMatrix::from_unit_complex(&gamma(1)), Point::origin(2)).unwrap();
        assert_eq!(apply_motion(&quarter, &Point::from_ints(&[1, 0])).unwrap(), Point::from_ints(&[0, 1]));
        let m = RigidMotion::new(RotationMatrix::from_unit_complex(&gamma(2)), Point::from_ints(&[1, 0])).unwrap();
        assert_eq!(
            apply_motion(&m, &Point::from_ints(&[1, 0])).unwrap(),
            Point::from_rationals(&[rat(2, 5), rat(4, 5)])
        );
        assert!(apply_motion(&m, &Point::from_ints(&[1, 0, 0])).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let m = RigidMotion::new(RotationMatrix::from_unit_complex(&gamma(3)), Point::from_ints(&[2, -1])).unwrap();
        let id = m.compose(&m.inverse().unwrap()).unwrap();
        assert_eq!(id, RigidMotion::identity(2));
    }

    #[test]
    fn realize_examples() {
        let base = unit_pair();
        let mut store = PointStore::new(S3, 2);
        let id = realize_placement(&base, &RigidMotion::identity(2), &mut store).unwrap();
        assert_eq!(id.image_ids, vec![PointId(0), PointId(1)]);

        let quarter = RigidMotion::new(RotationMatrix::from_unit_complex(&gamma(1)), Point::origin(2)).unwrap();
        let pl = realize_placement(&base, &quarter, &mut store).unwrap();
        assert_eq!(store.get(pl.image_ids[1]), &Point::from_ints(&[0, 1]));

        let (c, s) = quadratic_unit(3, &rat(1, 3));
        let sixty = RigidMotion::new(RotationMatrix::planar(c, s, 0, 1, 2).unwrap(), Point::origin(2)).unwrap();
        let pl = realize_placement(&base, &sixty, &mut store).unwrap();
        assert_eq!(pl.image_ids[0], PointId(0));
        assert_eq!(store.get(pl.image_ids[1]), &apex());
    }

    #[test]
    fn anchored_examples() {
        let base = unit_pair();
        let o = Point::from_ints(&[0, 0]);
        let m = anchored_motion_2d(&base, 0, 1, &o, &Point::from_ints(&[0, 1])).unwrap().unwrap();
        assert_eq!(m.rotation, RotationMatrix::from_unit_complex(&gamma(1)));
        assert_eq!(m.translation, Point::origin(2));

        let m = anchored_motion_2d(&base, 0, 1, &o, &apex()).unwrap().unwrap();
        let (c, s) = quadratic_unit(3, &rat(1, 3));
        assert_eq!(m.rotation, RotationMatrix::planar(c, s, 0, 1, 2).unwrap());

        assert_eq!(anchored_motion_2d(&base, 0, 1, &o, &Point::from_ints(&[2, 0])).unwrap(), None);
        assert!(anchored_motion_2d(&base, 1, 1, &o, &o).is_err());
        let doubled = vec![o.clone(), o.clone()];
        assert!(anchored_motion_2d(&doubled, 0, 1, &o, &o).is_err());
    }

    #[test]
    fn anchored_round_trip() {
        let base = vec![
            Point::from_rationals(&[rat(1, 3), rat(2, 1)]),
            Point::from_rationals(&[rat(-2, 3), rat(5, 7)]),
        ];
        let m = RigidMotion::new(RotationMatrix::from_unit_complex(&gamma(4)), Point::from_ints(&[7, 1])).unwrap();
        let p = apply_motion(&m, &base[0]).unwrap();
        let q = apply_motion(&m, &base[1]).unwrap();
        let found = anchored_motion_2d(&base, 0, 1, &p, &q).unwrap().unwrap();
        assert_eq!(found, m);
        assert_eq!(apply_motion(&found, &base[1]).unwrap(), q);
    }
}
