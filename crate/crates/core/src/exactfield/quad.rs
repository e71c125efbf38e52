use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{BigRational, CheckedField, FieldDescriptor, Scalar};
use crate::{Error, Result};

/// `a + b·√d` in the real quadratic field ℚ(√d).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub a: BigRational,
    pub b: BigRational,
    pub d: i64,
}

impl QuadElem {
    pub fn conjugate(&self) -> QuadElem {
        QuadElem {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d,
        }
    }

    /// Field norm `a² − d·b²`; zero only for the zero element.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(self.d.into()) * &self.b * &self.b
    }
}

/// An exact scalar of ℚ or ℚ(√d).
///
/// Elements are kept canonical: a value whose surd part is zero is always the
/// `Rational` variant, so equality and hashing are exact structural
/// comparisons.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rational(BigRational),
    Quadratic(QuadElem),
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        FieldElem::Rational(BigRational::one())
    }

    pub fn from_i64(v: i64) -> Self {
        FieldElem::Rational(BigRational::from_integer(v.into()))
    }

    /// `a + b·√d`, where `field` must be a quadratic descriptor unless `b = 0`.
    pub fn quad(a: BigRational, b: BigRational, field: FieldDescriptor) -> Self {
        match field {
            FieldDescriptor::Quadratic(d) => Self::canonical(a, b, Some(d)),
            FieldDescriptor::Rational => {
                assert!(b.is_zero(), "surd part in the rational field");
                FieldElem::Rational(a)
            }
        }
    }

    /// `√d` itself.
    pub fn sqrt_of(d: i64) -> Self {
        Self::canonical(BigRational::zero(), BigRational::one(), Some(d))
    }

    fn canonical(a: BigRational, b: BigRational, d: Option<i64>) -> Self {
        match d {
            Some(d) if !b.is_zero() => FieldElem::Quadratic(QuadElem { a, b, d }),
            _ => FieldElem::Rational(a),
        }
    }

    /// Smallest field containing this element.
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            FieldElem::Rational(_) => FieldDescriptor::Rational,
            FieldElem::Quadratic(q) => FieldDescriptor::Quadratic(q.d),
        }
    }

    /// Rational part `a` of `a + b√d`.
    pub fn rational_part(&self) -> &BigRational {
        match self {
            FieldElem::Rational(a) => a,
            FieldElem::Quadratic(q) => &q.a,
        }
    }

    /// Coefficient `b` of `√d` (zero for rationals).
    pub fn surd_part(&self) -> BigRational {
        match self {
            FieldElem::Rational(_) => BigRational::zero(),
            FieldElem::Quadratic(q) => q.b.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElem::Rational(a) => Some(a),
            FieldElem::Quadratic(_) => None,
        }
    }

    fn parts(&self) -> (&BigRational, Option<(&BigRational, i64)>) {
        match self {
            FieldElem::Rational(a) => (a, None),
            FieldElem::Quadratic(q) => (&q.a, Some((&q.b, q.d))),
        }
    }

    fn common_d(&self, rhs: &Self) -> Result<Option<i64>> {
        match (self.descriptor(), rhs.descriptor()) {
            (FieldDescriptor::Quadratic(x), FieldDescriptor::Quadratic(y)) if x != y => Err(
                Error::FieldMismatch(self.descriptor(), rhs.descriptor()),
            ),
            (FieldDescriptor::Quadratic(x), _) | (_, FieldDescriptor::Quadratic(x)) => Ok(Some(x)),
            _ => Ok(None),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, FieldElem::Rational(a) if a.is_zero())
    }

    /// Sign of the real number `a + b√d`.
    pub fn signum(&self) -> i8 {
        match self {
            FieldElem::Rational(a) => sign(a),
            FieldElem::Quadratic(q) => {
                let (sa, sb) = (sign(&q.a), sign(&q.b));
                if sa == 0 || sa == sb {
                    return sb;
                }
                // opposite signs: compare a² with d·b²
                let diff = &q.a * &q.a - BigRational::from_integer(q.d.into()) * &q.b * &q.b;
                if sign(&diff) > 0 {
                    sa
                } else {
                    sb
                }
            }
        }
    }
}

fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl From<BigRational> for FieldElem {
    fn from(v: BigRational) -> Self {
        FieldElem::Rational(v)
    }
}

impl From<i64> for FieldElem {
    fn from(v: i64) -> Self {
        FieldElem::from_i64(v)
    }
}

impl From<QuadElem> for FieldElem {
    fn from(q: QuadElem) -> Self {
        FieldElem::canonical(q.a, q.b, Some(q.d))
    }
}

impl CheckedField for FieldElem {
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        let d = self.common_d(rhs)?;
        let (a1, s1) = self.parts();
        let (a2, s2) = rhs.parts();
        let b = match (s1, s2) {
            (Some((b1, _)), Some((b2, _))) => b1 + b2,
            (Some((b, _)), None) | (None, Some((b, _))) => b.clone(),
            (None, None) => BigRational::zero(),
        };
        Ok(Self::canonical(a1 + a2, b, d))
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&Scalar::neg(rhs))
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let d = self.common_d(rhs)?;
        let (a1, s1) = self.parts();
        let (a2, s2) = rhs.parts();
        Ok(match (s1, s2) {
            (None, None) => FieldElem::Rational(a1 * a2),
            (Some((b1, d)), None) => Self::canonical(a1 * a2, b1 * a2, Some(d)),
            (None, Some((b2, d))) => Self::canonical(a1 * a2, a1 * b2, Some(d)),
            (Some((b1, _)), Some((b2, _))) => {
                let dd = d.expect("quadratic operands carry a discriminant");
                let dr = BigRational::from_integer(dd.into());
                Self::canonical(a1 * a2 + dr * b1 * b2, a1 * b2 + b1 * a2, d)
            }
        })
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.common_d(rhs)?;
        self.try_mul(&rhs.inv()?)
    }
}

impl Scalar for FieldElem {
    fn zero() -> Self {
        FieldElem::zero()
    }
    fn one() -> Self {
        FieldElem::one()
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("field mismatch")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("field mismatch")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("field mismatch")
    }
    fn neg(&self) -> Self {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(-a),
            FieldElem::Quadratic(q) => FieldElem::Quadratic(QuadElem {
                a: -&q.a,
                b: -&q.b,
                d: q.d,
            }),
        }
    }
    fn inv(&self) -> Result<Self> {
        match self {
            FieldElem::Rational(a) => {
                if a.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(FieldElem::Rational(a.recip()))
                }
            }
            FieldElem::Quadratic(q) => {
                // (a + b√d)⁻¹ = (a − b√d) / (a² − d b²)
                let n = q.norm();
                Ok(Self::canonical(&q.a / &n, -&q.b / &n, Some(q.d)))
            }
        }
    }
    fn from_i64(v: i64) -> Self {
        FieldElem::from_i64(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $scalar:ident, $ty:ty) => {
        impl $tr<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                Scalar::$scalar(self, rhs)
            }
        }
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                Scalar::$scalar(&self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(Add, add, add, FieldElem);
forward_binop!(Sub, sub, sub, FieldElem);
forward_binop!(Mul, mul, mul, FieldElem);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        Scalar::neg(self)
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        Scalar::neg(&self)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self {
            FieldElem::Rational(_) => None,
            FieldElem::Quadratic(q) => Some(q.d),
        };
        let terms = [(self.rational_part().clone(), None), (self.surd_part(), d)];
        f.write_str(&super::literal::render_terms(
            terms.iter().map(|(c, d)| (c, *d, false)),
        ))
    }
}
