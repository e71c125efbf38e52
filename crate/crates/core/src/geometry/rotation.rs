use std::fmt;

use num_traits::{One, Zero};

use super::Point;
use crate::exactfield::{BigRational, CheckedField, FieldDescriptor, FieldElem, Scalar};
use crate::error::usage;
use crate::{Error, Result};

/// A rational point of the unit circle, `re² + im² = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl UnitComplex {
    pub fn new(re: BigRational, im: BigRational) -> Result<Self> {
        if &re * &re + &im * &im != BigRational::one() {
            return usage(format!("({re}, {im}) is not on the unit circle"));
        }
        Ok(UnitComplex { re, im })
    }

    pub fn one() -> Self {
        UnitComplex {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        UnitComplex {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    pub fn conj(&self) -> Self {
        UnitComplex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }
}

/// `γ_k = ((1 − k²) + 2k·i) / (1 + k²)`.
///
/// Distinct `k` give distinct points, and the angles are rationally
/// independent of π, which is what makes the family useful for search.
pub fn gamma(k: u64) -> UnitComplex {
    let k = BigRational::from_integer(k.into());
    let den = BigRational::one() + &k * &k;
    UnitComplex {
        re: (BigRational::one() - &k * &k) / &den,
        im: (BigRational::from_integer(2.into()) * &k) / den,
    }
}

/// A unit vector of ℚ(√d)² with irrational sine:
/// `((1 − d·t²) / (1 + d·t²), 2t·√d / (1 + d·t²))`.
///
/// For `d = 3`, `t = 1/3` gives the 60° rotation `(1/2, √3/2)`.
pub fn quadratic_unit(d: i64, t: &BigRational) -> (FieldElem, FieldElem) {
    let dt2 = BigRational::from_integer(d.into()) * t * t;
    let den = BigRational::one() + &dt2;
    let c = (BigRational::one() - dt2) / &den;
    let s = BigRational::from_integer(2.into()) * t / den;
    (
        FieldElem::Rational(c),
        FieldElem::quad(BigRational::zero(), s, FieldDescriptor::Quadratic(d)),
    )
}

/// Determinant by exact Gaussian elimination.
pub fn determinant<T: Scalar>(m: &[Vec<T>]) -> Result<T> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return usage("determinant of a non-square matrix");
    }
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut det = T::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(T::zero());
        };
        if piv != col {
            a.swap(piv, col);
            det = det.neg();
        }
        det = det.mul(&a[col][col]);
        let inv = a[col][col].inv()?;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].mul(&inv);
            for c in col..n {
                let v = a[r][c].sub(&f.mul(&a[col][c]));
                a[r][c] = v;
            }
        }
    }
    Ok(det)
}

/// An exact element of SO(k). Construction checks `QᵀQ = I` and `det Q = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationMatrix {
    entries: Vec<Vec<FieldElem>>,
}

impl RotationMatrix {
    pub fn new(entries: Vec<Vec<FieldElem>>) -> Result<Self> {
        let k = entries.len();
        if k == 0 || entries.iter().any(|r| r.len() != k) {
            return usage("rotation matrix must be square and non-empty");
        }
        for i in 0..k {
            for j in 0..k {
                let mut dot = FieldElem::zero();
                for row in &entries {
                    dot = Scalar::add(&dot, &row[i].try_mul(&row[j])?);
                }
                let expected = if i == j { FieldElem::one() } else { FieldElem::zero() };
                if dot != expected {
                    return usage(format!("matrix is not orthogonal at ({i}, {j})"));
                }
            }
        }
        if determinant(&entries)? != FieldElem::one() {
            return usage("matrix has determinant -1 (reflection)");
        }
        Ok(RotationMatrix { entries })
    }

    pub fn identity(k: usize) -> Self {
        let entries = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| if i == j { FieldElem::one() } else { FieldElem::zero() })
                    .collect()
            })
            .collect();
        RotationMatrix { entries }
    }

    /// Counterclockwise rotation by `(c, s)` in the oriented coordinate plane
    /// `(i, j)`, identity elsewhere: column `i` is `c·e_i + s·e_j`.
    pub fn planar(c: FieldElem, s: FieldElem, i: usize, j: usize, k: usize) -> Result<Self> {
        if !(i < j && j < k) {
            return usage(format!("axes ({i}, {j}) invalid in dimension {k}"));
        }
        let mut m = Self::identity(k).entries;
        m[i][i] = c.clone();
        m[j][j] = c;
        m[i][j] = Scalar::neg(&s);
        m[j][i] = s;
        RotationMatrix::new(m)
    }

    /// The 2×2 counterclockwise rotation matrix of `u`.
    pub fn from_unit_complex(u: &UnitComplex) -> Self {
        embed_planar_rotation(u, 0, 1, 2).expect("plane (0, 1) exists in dimension 2")
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<FieldElem>] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim())
    }

    pub fn transpose(&self) -> Self {
        let k = self.dim();
        RotationMatrix {
            entries: (0..k)
                .map(|i| (0..k).map(|j| self.entries[j][i].clone()).collect())
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let k = self.dim();
        if rhs.dim() != k {
            return usage("rotation dimensions differ");
        }
        let mut out = vec![vec![FieldElem::zero(); k]; k];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for l in 0..k {
                    *cell = Scalar::add(cell, &self.entries[i][l].try_mul(&rhs.entries[l][j])?);
                }
            }
        }
        Ok(RotationMatrix { entries: out })
    }

    pub fn apply(&self, p: &Point) -> Result<Point> {
        if p.dim() != self.dim() {
            return usage(format!(
                "point of dimension {} under a rotation of dimension {}",
                p.dim(),
                self.dim()
            ));
        }
        let mut out = Vec::with_capacity(p.dim());
        for row in &self.entries {
            let mut acc = FieldElem::zero();
            for (q, x) in row.iter().zip(&p.coords) {
                acc = acc.try_add(&q.try_mul(x)?)?;
            }
            out.push(acc);
        }
        Ok(Point::new(out))
    }

    /// Smallest field holding every entry.
    pub fn descriptor(&self) -> Result<FieldDescriptor> {
        Point::new(self.entries.iter().flatten().cloned().collect()).descriptor()
    }
}

impl fmt::Display for RotationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{c}")?;
            }
        }
        write!(f, "]")
    }
}

/// Cayley transform `(I − A)⁻¹(I + A)` of the skew-symmetric matrix whose
/// strict upper triangle is `params`, listed row by row:
/// `(0,1), (0,2), …, (0,k−1), (1,2), …`.
///
/// In dimension 2 with parameter `m` the result is the transpose of the
/// counterclockwise rotation by `γ_m`.
pub fn cayley_rotation(k: usize, params: &[BigRational]) -> Result<RotationMatrix> {
    if k == 0 || params.len() != k * (k - 1) / 2 {
        return usage(format!(
            "dimension {k} needs {} Cayley parameters, got {}",
            k * k.saturating_sub(1) / 2,
            params.len()
        ));
    }
    let mut a = vec![vec![BigRational::zero(); k]; k];
    let mut it = params.iter();
    for i in 0..k {
        for j in i + 1..k {
            let v = it.next().unwrap().clone();
            a[j][i] = -&v;
            a[i][j] = v;
        }
    }
    // augmented [I − A | I + A], reduced to [I | Q]
    let mut m: Vec<Vec<BigRational>> = (0..k)
        .map(|i| {
            let delta = |j: usize| if i == j { BigRational::one() } else { BigRational::zero() };
            (0..k)
                .map(|j| delta(j) - &a[i][j])
                .chain((0..k).map(|j| delta(j) + &a[i][j]))
                .collect()
        })
        .collect();
    for col in 0..k {
        let piv = (col..k)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Usage("I − A is singular".into()))?;
        m.swap(piv, col);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..k {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in 0..2 * k {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    let q = m
        .into_iter()
        .map(|row| row.into_iter().skip(k).map(FieldElem::Rational).collect())
        .collect();
    RotationMatrix::new(q)
}

/// `u` as a counterclockwise rotation of the plane `(i, j)` inside ℝ^k:
/// column `i` is `(re, im)` and column `j` is `(−im, re)` on those axes.
pub fn embed_planar_rotation(u: &UnitComplex, i: usize, j: usize, k: usize) -> Result<RotationMatrix> {
    RotationMatrix::planar(
        FieldElem::Rational(u.re.clone()),
        FieldElem::Rational(u.im.clone()),
        i,
        j,
        k,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    fn fe(n: i64, d: i64) -> FieldElem {
        FieldElem::from(rat(n, d))
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(1), UnitComplex::new(rat(0, 1), rat(1, 1)).unwrap());
        assert_eq!(gamma(2), UnitComplex::new(rat(-3, 5), rat(4, 5)).unwrap());
        assert_eq!(gamma(3), UnitComplex::new(rat(-4, 5), rat(3, 5)).unwrap());
    }

    #[test]
    fn unit_complex_rejects_off_circle() {
        assert!(UnitComplex::new(rat(1, 2), rat(1, 2)).is_err());
    }

    #[test]
    fn cayley_examples() {
        let q = cayley_rotation(2, &[rat(1, 1)]).unwrap();
        assert_eq!(q.entries(), &[vec![fe(0, 1), fe(1, 1)], vec![fe(-1, 1), fe(0, 1)]]);
        for m in 1..=5i64 {
            let q = cayley_rotation(2, &[rat(m, 1)]).unwrap();
            let den = 1 + m * m;
            assert_eq!(q.entries()[0][0], fe(1 - m * m, den));
            assert_eq!(q.entries()[1][0], fe(-2 * m, den));
            assert_eq!(q, RotationMatrix::from_unit_complex(&gamma(m as u64)).transpose());
        }
        for k in 1..=4 {
            let zeros = vec![rat(0, 1); k * (k - 1) / 2];
            assert!(cayley_rotation(k, &zeros).unwrap().is_identity());
        }
        assert!(cayley_rotation(3, &[rat(1, 1)]).is_err());
    }

    #[test]
    fn cayley_three_dimensional() {
        let q = cayley_rotation(3, &[rat(1, 2), rat(-2, 1), rat(3, 1)]).unwrap();
        assert_eq!(q.dim(), 3);
        assert!(!q.is_identity());
    }

    #[test]
    fn planar_embedding() {
        let q = embed_planar_rotation(&gamma(1), 0, 1, 3).unwrap();
        assert_eq!(q.apply(&Point::from_ints(&[1, 0, 0])).unwrap(), Point::from_ints(&[0, 1, 0]));
        assert_eq!(q.apply(&Point::from_ints(&[0, 0, 1])).unwrap(), Point::from_ints(&[0, 0, 1]));

        let q = embed_planar_rotation(&gamma(2), 0, 2, 3).unwrap();
        let z = fe(0, 1);
        assert_eq!(
            q.entries(),
            &[
                vec![fe(-3, 5), z.clone(), fe(-4, 5)],
                vec![z.clone(), fe(1, 1), z.clone()],
                vec![fe(4, 5), z, fe(-3, 5)],
            ]
        );
        assert!(embed_planar_rotation(&UnitComplex::one(), 1, 2, 3).unwrap().is_identity());
        assert!(embed_planar_rotation(&gamma(1), 2, 1, 3).is_err());
        assert!(embed_planar_rotation(&gamma(1), 0, 3, 3).is_err());
    }

    #[test]
    fn reflections_rejected() {
        let m = vec![vec![fe(1, 1), fe(0, 1)], vec![fe(0, 1), fe(-1, 1)]];
        assert!(RotationMatrix::new(m).is_err());
        let shear = vec![vec![fe(1, 1), fe(1, 1)], vec![fe(0, 1), fe(1, 1)]];
        assert!(RotationMatrix::new(shear).is_err());
    }

    #[test]
    fn sixty_degrees() {
        let (c, s) = quadratic_unit(3, &rat(1, 3));
        assert_eq!(c, fe(1, 2));
        assert_eq!(s, FieldElem::quad(rat(0, 1), rat(1, 2), FieldDescriptor::Quadratic(3)));
        assert!(RotationMatrix::planar(c, s, 0, 1, 2).is_ok());
    }

    #[test]
    fn determinant_small() {
        let m = vec![vec![fe(2, 1), fe(1, 1)], vec![fe(1, 1), fe(3, 1)]];
        assert_eq!(determinant(&m).unwrap(), fe(5, 1));
        let m = vec![vec![fe(0, 1), fe(1, 1)], vec![fe(1, 1), fe(0, 1)]];
        assert_eq!(determinant(&m).unwrap(), fe(-1, 1));
    }
}
