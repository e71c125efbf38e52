//! Exact scalars.
//!
//! Coordinates live in ℚ or in one real quadratic field ℚ(√d); weights live
//! in the complexification of that field. [`IntPolynomial`] and [`QuotElem`]
//! provide the integer-polynomial and quotient-ring arithmetic used for the
//! integer relations between powers of a root of `cx² + x + c`.

mod complex;
mod literal;
mod poly;
mod quad;
mod quotient;

use std::fmt;
use std::hash::Hash;

pub use complex::ComplexElem;
pub use literal::parse_rational;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{has_rational_root, primitive_part, IntPolynomial};
pub use quad::{FieldElem, QuadElem};
pub use quotient::{lemma2_relation, quot_power, IntegerRelation, QuotElem};

use crate::{Error, Result};

/// Names the field every coordinate of a computation lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rational,
    /// ℚ(√d) with `d ≥ 2` squarefree.
    Quadratic(i64),
}

impl FieldDescriptor {
    pub fn quadratic(d: i64) -> Result<Self> {
        if d < 2 {
            return Err(Error::Usage(format!(
                "quadratic field needs a discriminant d >= 2, got {d}"
            )));
        }
        if !is_squarefree(d as u64) {
            return Err(Error::Usage(format!("discriminant {d} is not squarefree")));
        }
        Ok(FieldDescriptor::Quadratic(d))
    }

    pub fn discriminant(self) -> Option<i64> {
        match self {
            FieldDescriptor::Rational => None,
            FieldDescriptor::Quadratic(d) => Some(d),
        }
    }

    /// True if every element of `other` is an element of `self`.
    pub fn contains(self, other: FieldDescriptor) -> bool {
        other == FieldDescriptor::Rational || self == other
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "Q"),
            FieldDescriptor::Quadratic(d) => write!(f, "Q(√{d})"),
        }
    }
}

pub(crate) fn is_squarefree(mut n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Exact scalar arithmetic shared by rationals, field elements and complex
/// elements. Mixed-field operands panic; use the `try_*` methods of the
/// concrete types to get an error instead.
pub trait Scalar: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn from_i64(v: i64) -> Self;
}

/// Arithmetic requested through [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Eq,
}

/// Result of [`field_arith`]: a value, or the outcome of an equality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithResult<T> {
    Value(T),
    Bool(bool),
}

/// Operations that can fail on a field mismatch, implemented by
/// [`FieldElem`] and [`ComplexElem`].
pub trait CheckedField: Scalar {
    fn try_add(&self, rhs: &Self) -> Result<Self>;
    fn try_sub(&self, rhs: &Self) -> Result<Self>;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn try_div(&self, rhs: &Self) -> Result<Self>;
}

/// Uniform entry point for exact arithmetic. Unary operations (`Neg`, `Inv`)
/// ignore `rhs`.
pub fn field_arith<T: CheckedField>(lhs: &T, rhs: &T, op: FieldOp) -> Result<ArithResult<T>> {
    use ArithResult::*;
    Ok(match op {
        FieldOp::Add => Value(lhs.try_add(rhs)?),
        FieldOp::Sub => Value(lhs.try_sub(rhs)?),
        FieldOp::Mul => Value(lhs.try_mul(rhs)?),
        FieldOp::Div => Value(lhs.try_div(rhs)?),
        FieldOp::Neg => Value(lhs.neg()),
        FieldOp::Inv => Value(lhs.inv()?),
        FieldOp::Eq => {
            // mismatched fields are a usage error even for equality
            lhs.try_sub(rhs)?;
            Bool(lhs == rhs)
        }
    })
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
