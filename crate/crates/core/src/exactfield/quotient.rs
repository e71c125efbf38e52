use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::rat_div_rem;
use super::{has_rational_root, BigRational, IntPolynomial};
use crate::error::usage;
use crate::{Error, Result};

/// An element of ℚ\[x\]/(p), stored as its reduced coefficient vector of
/// length `deg p` (lowest degree first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotElem {
    coeffs: Vec<BigRational>,
    modulus: IntPolynomial,
}

impl QuotElem {
    fn dim(modulus: &IntPolynomial) -> usize {
        modulus.degree().unwrap_or(0)
    }

    /// Reduces an arbitrary rational polynomial modulo `modulus`.
    pub fn from_poly(poly: &[BigRational], modulus: &IntPolynomial) -> Self {
        let (_, mut rem) = rat_div_rem(poly, &modulus.to_rational());
        rem.resize(Self::dim(modulus), BigRational::zero());
        QuotElem {
            coeffs: rem,
            modulus: modulus.clone(),
        }
    }

    pub fn one(modulus: &IntPolynomial) -> Self {
        Self::from_poly(&[BigRational::one()], modulus)
    }

    /// The class of `x`.
    pub fn x(modulus: &IntPolynomial) -> Self {
        Self::from_poly(&[BigRational::zero(), BigRational::one()], modulus)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn modulus(&self) -> &IntPolynomial {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn same_ring(&self, rhs: &Self) -> Result<()> {
        if self.modulus != rhs.modulus {
            return usage(format!(
                "quotient rings differ: {} vs {}",
                self.modulus, rhs.modulus
            ));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_ring(rhs)?;
        Ok(QuotElem {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            modulus: self.modulus.clone(),
        })
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        QuotElem {
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
            modulus: self.modulus.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.same_ring(rhs)?;
        let mut prod = vec![BigRational::zero(); (self.coeffs.len() * 2).saturating_sub(1).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        Ok(Self::from_poly(&prod, &self.modulus))
    }
}

fn check_modulus(p: &IntPolynomial) -> Result<()> {
    match p.degree() {
        Some(d) if d >= 2 => {}
        _ => return usage(format!("modulus {p} must have degree at least 2")),
    }
    // Degree 2 and 3: no rational root is equivalent to irreducible. Higher
    // degrees are only screened for linear factors.
    if let Some(root) = has_rational_root(p)? {
        return usage(format!("modulus {p} is reducible (root {root})"));
    }
    Ok(())
}

/// `x^e` reduced modulo `p`, by square-and-multiply in ℚ\[x\]/(p).
pub fn quot_power(e: u64, p: &IntPolynomial) -> Result<QuotElem> {
    check_modulus(p)?;
    power_unchecked(e, p)
}

fn power_unchecked(e: u64, p: &IntPolynomial) -> Result<QuotElem> {
    let mut result = QuotElem::one(p);
    let mut base = QuotElem::x(p);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base)?;
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base)?;
        }
    }
    Ok(result)
}

/// An integer relation `n₁·α^r + n₂·α^s + n₃·α^t = 0` for a root `α` of
/// `c·x² + x + c`, together with the integer cofactor `q` such that
/// `n₁x^r + n₂x^s + n₃x^t = (c·x² + x + c)·q(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerRelation {
    pub c: i64,
    pub exponents: [u64; 3],
    pub n: [BigInt; 3],
    pub cofactor: IntPolynomial,
}

impl IntegerRelation {
    pub fn sum(&self) -> BigInt {
        self.n.iter().sum()
    }

    /// `n₁x^r + n₂x^s + n₃x^t` as an integer polynomial.
    pub fn relation_polynomial(&self) -> IntPolynomial {
        self.n
            .iter()
            .zip(self.exponents)
            .fold(IntPolynomial::new(Vec::new()), |acc, (n, e)| {
                acc.add(&IntPolynomial::monomial(n.clone(), e as usize))
            })
    }
}

/// Computes the primitive integer relation among `α^r, α^s, α^t`.
///
/// The reduced powers are vectors in the two-dimensional ℚ-space
/// ℚ\[x\]/(cx² + x + c); the relation spans the kernel of the 2×3 matrix they
/// form, which is the cross product of its rows. Denominators are cleared
/// only at the end. The triple is normalized so that `n₃ > 0`, or `n₂ > 0`
/// when `n₃ = 0`.
pub fn lemma2_relation(c: i64, r: u64, s: u64, t: u64) -> Result<IntegerRelation> {
    if c <= 1 {
        return usage(format!("c must exceed 1, got {c}"));
    }
    if !(r < s && s < t) {
        return usage(format!("exponents must satisfy r < s < t, got ({r}, {s}, {t})"));
    }
    let p = IntPolynomial::lemma2_modulus(c);
    check_modulus(&p)?;
    let cols = [power_unchecked(r, &p)?, power_unchecked(s, &p)?, power_unchecked(t, &p)?];
    let row = |i: usize| -> [BigRational; 3] { [0, 1, 2].map(|j| cols[j].coeffs()[i].clone()) };
    let (u, v) = (row(0), row(1));
    let kernel = [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ];
    if kernel.iter().all(Zero::is_zero) {
        // only possible if α^(s-r) were rational, which irreducibility excludes
        return Err(Error::Usage("reduced powers are linearly dependent in pairs".into()));
    }
    let lcm = kernel.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let mut n: [BigInt; 3] = kernel.map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer());
    let g = n.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    for x in n.iter_mut() {
        *x = &*x / &g;
    }
    let flip = if !n[2].is_zero() { n[2].is_negative() } else { n[1].is_negative() };
    if flip {
        for x in n.iter_mut() {
            *x = -&*x;
        }
    }
    let mut rel = IntegerRelation {
        c,
        exponents: [r, s, t],
        n,
        cofactor: IntPolynomial::new(Vec::new()),
    };
    rel.cofactor = rel
        .relation_polynomial()
        .div_exact(&p)
        .ok_or_else(|| Error::Usage("relation polynomial not divisible by the modulus".into()))?;
    if !rel.sum().gcd(&BigInt::from(c)).is_one() {
        return Err(Error::Usage(format!(
            "relation coefficient sum {} is not prime to {c}",
            rel.sum()
        )));
    }
    Ok(rel)
}
