use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::BigRational;
use crate::error::usage;
use crate::Result;

/// A polynomial in ℤ\[x\], coefficients lowest degree first.
///
/// The highest stored coefficient is nonzero; the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c·x² + x + c`.
    pub fn lemma2_modulus(c: i64) -> Self {
        Self::from_i64s(&[c, 1, c])
    }

    /// `n·x^e`.
    pub fn monomial(n: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = n;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[BigInt], i: usize| v.get(i).cloned().unwrap_or_default();
        Self::new((0..len).map(|i| get(&self.coeffs, i) + get(&rhs.coeffs, i)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    }

    /// Exact division in ℚ\[x\]; returns `None` unless `divisor` divides
    /// `self` with an integral quotient.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = rat_div_rem(&self.to_rational(), &divisor.to_rational());
        if !r.is_empty() || !q.iter().all(|c| c.is_integer()) {
            return None;
        }
        Some(Self::new(q.into_iter().map(|c| c.to_integer()).collect()))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let coef = if mag.is_one() && e > 0 { String::new() } else { mag.to_string() };
            let var = match e {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            };
            write!(f, "{sign}{coef}{var}")?;
            first = false;
        }
        Ok(())
    }
}

/// Long division in ℚ\[x\] on trimmed coefficient vectors (lowest first).
/// The remainder is trimmed; an empty vector is the zero polynomial.
pub(crate) fn rat_div_rem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let den_len = den.iter().rposition(|c| !c.is_zero()).map_or(0, |p| p + 1);
    assert!(den_len > 0, "division by the zero polynomial");
    let lead = &den[den_len - 1];
    let mut rem: Vec<BigRational> = num.to_vec();
    trim(&mut rem);
    if rem.len() < den_len {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - den_len + 1];
    while rem.len() >= den_len {
        let shift = rem.len() - den_len;
        let factor = rem.last().unwrap() / lead;
        for (i, d) in den[..den_len].iter().enumerate() {
            rem[shift + i] -= &factor * d;
        }
        quot[shift] = factor;
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Splits `p` into its positive content and primitive part.
///
/// The sign stays with the primitive part: `−3x → (3, −x)`.
pub fn primitive_part(p: &IntPolynomial) -> Result<(BigInt, IntPolynomial)> {
    if p.is_zero() {
        return usage("primitive part of the zero polynomial");
    }
    let content = p.content();
    let prim = IntPolynomial::new(p.coeffs.iter().map(|c| c / &content).collect());
    Ok((content, prim))
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Finds a rational root by testing every candidate `±u/v` with `u | a₀` and
/// `v | a_n`. Among several roots the one with smallest `|num| + |den|` is
/// returned, positive first on ties.
pub fn has_rational_root(p: &IntPolynomial) -> Result<Option<BigRational>> {
    match p.degree() {
        None | Some(0) => return usage("rational roots of a constant polynomial"),
        _ => {}
    }
    if p.coeffs[0].is_zero() {
        return Ok(Some(BigRational::zero()));
    }
    let (_, prim) = primitive_part(p)?;
    let nums = positive_divisors(&prim.coeffs[0]);
    let dens = positive_divisors(prim.leading().unwrap());
    let mut candidates: Vec<(BigInt, BigRational)> = Vec::new();
    for u in &nums {
        for v in &dens {
            if u.gcd(v).is_one() {
                let q = BigRational::new(u.clone(), v.clone());
                candidates.push((u + v, q.clone()));
                candidates.push((u + v, -q));
            }
        }
    }
    // stable sort keeps +q ahead of -q within equal heights
    candidates.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(candidates
        .into_iter()
        .map(|(_, q)| q)
        .find(|q| p.eval(q).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use proptest::prelude::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_part(&poly(&[6, 2, 4])).unwrap(), (2.into(), poly(&[3, 1, 2])));
        assert_eq!(primitive_part(&poly(&[2, 1, 2])).unwrap(), (1.into(), poly(&[2, 1, 2])));
        assert_eq!(primitive_part(&poly(&[0, -3])).unwrap(), (3.into(), poly(&[0, -1])));
        assert!(primitive_part(&poly(&[])).is_err());
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(has_rational_root(&poly(&[2, 1, 2])).unwrap(), None);
        assert_eq!(has_rational_root(&poly(&[-1, 0, 1])).unwrap(), Some(rat(1, 1)));
        assert_eq!(has_rational_root(&poly(&[-3, 2])).unwrap(), Some(rat(3, 2)));
        assert_eq!(has_rational_root(&poly(&[0, 5, 1])).unwrap(), Some(rat(0, 1)));
        // roots -1/2 and 3: height 3 vs 4
        assert_eq!(has_rational_root(&poly(&[-3, -5, 2])).unwrap(), Some(rat(-1, 2)));
        assert!(has_rational_root(&poly(&[7])).is_err());
    }

    #[test]
    fn lemma2_moduli_irreducible() {
        for c in 2..=50 {
            assert_eq!(has_rational_root(&IntPolynomial::lemma2_modulus(c)).unwrap(), None, "c={c}");
        }
    }

    #[test]
    fn exact_division() {
        let p = poly(&[2, 1, 2]);
        let q = poly(&[1, -4, 0, 7]);
        assert_eq!(p.mul(&q).div_exact(&p), Some(q));
        assert_eq!(poly(&[1, 0, 1]).div_exact(&p), None);
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[2, 1, 2]).to_string(), "2x^2+x+2");
        assert_eq!(poly(&[0, -1]).to_string(), "-x");
    }

    proptest! {
        #[test]
        fn content_divides(coeffs in prop::collection::vec(-60i64..60, 1..7)) {
            let p = poly(&coeffs);
            prop_assume!(!p.is_zero());
            let (content, prim) = primitive_part(&p).unwrap();
            prop_assert!(content > BigInt::zero());
            for c in p.coeffs() {
                prop_assert!((c % &content).is_zero());
            }
            prop_assert!(prim.content().is_one());
            let scaled = IntPolynomial::new(prim.coeffs().iter().map(|c| c * &content).collect());
            prop_assert_eq!(scaled, p);
        }

        // Gauss's lemma: content is multiplicative.
        #[test]
        fn gauss_lemma(a in prop::collection::vec(-20i64..20, 1..5), b in prop::collection::vec(-20i64..20, 1..5)) {
            let (p, q) = (poly(&a), poly(&b));
            prop_assume!(!p.is_zero() && !q.is_zero());
            prop_assert_eq!(p.mul(&q).content(), p.content() * q.content());
        }

        #[test]
        fn found_roots_are_roots(coeffs in prop::collection::vec(-30i64..30, 2..5)) {
            let p = poly(&coeffs);
            prop_assume!(p.degree().is_some_and(|d| d >= 1));
            if let Some(r) = has_rational_root(&p).unwrap() {
                prop_assert!(p.eval(&r).is_zero());
            }
        }
    }
}
