use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::quad::forward_binop;
use super::{BigRational, CheckedField, FieldDescriptor, FieldElem, Scalar};
use crate::{Error, Result};

/// `re + im·i` with both parts in the same real field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexElem {
    pub re: FieldElem,
    pub im: FieldElem,
}

impl ComplexElem {
    pub fn new(re: FieldElem, im: FieldElem) -> Self {
        ComplexElem { re, im }
    }

    pub fn real(re: FieldElem) -> Self {
        ComplexElem {
            re,
            im: FieldElem::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::real(FieldElem::zero())
    }

    pub fn one() -> Self {
        Self::real(FieldElem::one())
    }

    pub fn i() -> Self {
        ComplexElem::new(FieldElem::zero(), FieldElem::one())
    }

    pub fn from_rational(v: BigRational) -> Self {
        Self::real(FieldElem::Rational(v))
    }

    pub fn conj(&self) -> Self {
        ComplexElem::new(self.re.clone(), Scalar::neg(&self.im))
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> FieldElem {
        Scalar::add(&Scalar::mul(&self.re, &self.re), &Scalar::mul(&self.im, &self.im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Smallest field containing both parts, or a mismatch error.
    pub fn descriptor(&self) -> Result<FieldDescriptor> {
        let (a, b) = (self.re.descriptor(), self.im.descriptor());
        if a.contains(b) {
            Ok(a)
        } else if b.contains(a) {
            Ok(b)
        } else {
            Err(Error::FieldMismatch(a, b))
        }
    }
}

impl From<FieldElem> for ComplexElem {
    fn from(v: FieldElem) -> Self {
        ComplexElem::real(v)
    }
}

impl CheckedField for ComplexElem {
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        Ok(ComplexElem::new(self.re.try_add(&rhs.re)?, self.im.try_add(&rhs.im)?))
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        Ok(ComplexElem::new(self.re.try_sub(&rhs.re)?, self.im.try_sub(&rhs.im)?))
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let re = self.re.try_mul(&rhs.re)?.try_sub(&self.im.try_mul(&rhs.im)?)?;
        let im = self.re.try_mul(&rhs.im)?.try_add(&self.im.try_mul(&rhs.re)?)?;
        Ok(ComplexElem::new(re, im))
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        rhs.descriptor()?;
        self.try_mul(&rhs.inv()?)
    }
}

impl Scalar for ComplexElem {
    fn zero() -> Self {
        ComplexElem::zero()
    }
    fn one() -> Self {
        ComplexElem::one()
    }
    fn is_zero(&self) -> bool {
        ComplexElem::is_zero(self)
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
        ComplexElem::new(Scalar::neg(&self.re), Scalar::neg(&self.im))
    }
    fn inv(&self) -> Result<Self> {
        // re² + im² vanishes only at zero because the field is real
        let n = self.norm_sqr().inv()?;
        let c = self.conj();
        Ok(ComplexElem::new(Scalar::mul(&c.re, &n), Scalar::mul(&c.im, &n)))
    }
    fn from_i64(v: i64) -> Self {
        ComplexElem::real(FieldElem::from_i64(v))
    }
}

forward_binop!(Add, add, add, ComplexElem);
forward_binop!(Sub, sub, sub, ComplexElem);
forward_binop!(Mul, mul, mul, ComplexElem);

impl Neg for &ComplexElem {
    type Output = ComplexElem;
    fn neg(self) -> ComplexElem {
        Scalar::neg(self)
    }
}

impl fmt::Display for ComplexElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = |x: &FieldElem| match x {
            FieldElem::Rational(_) => None,
            FieldElem::Quadratic(q) => Some(q.d),
        };
        let terms = [
            (self.re.rational_part().clone(), None, false),
            (self.re.surd_part(), d(&self.re), false),
            (self.im.rational_part().clone(), None, true),
            (self.im.surd_part(), d(&self.im), true),
        ];
        f.write_str(&super::literal::render_terms(
            terms.iter().map(|(c, d, i)| (c, *d, *i)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    #[test]
    fn i_squared() {
        assert_eq!(&ComplexElem::i() * &ComplexElem::i(), ComplexElem::from_i64(-1));
    }

    #[test]
    fn inverse_over_sqrt3() {
        let f = FieldDescriptor::Quadratic(3);
        let z = ComplexElem::new(
            FieldElem::quad(rat(1, 2), rat(1, 1), f),
            FieldElem::quad(rat(-2, 1), rat(1, 3), f),
        );
        assert_eq!(&z * &z.inv().unwrap(), ComplexElem::one());
        assert_eq!(ComplexElem::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        let f = FieldDescriptor::Quadratic(3);
        let z = ComplexElem::new(FieldElem::from_i64(1), FieldElem::quad(rat(0, 1), rat(-1, 2), f));
        assert_eq!(z.to_string(), "1-1/2√3i");
        assert_eq!(ComplexElem::i().to_string(), "i");
        assert_eq!(ComplexElem::zero().to_string(), "0");
    }
}
