//! Exact literals: `p/q`, `p/q+r/s√d`, and complex sums such as
//! `1/2-3√2i`. Rendering and parsing are inverse to each other.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{BigRational, ComplexElem, FieldDescriptor, FieldElem, Scalar};
use crate::{Error, Result};

fn parse_err<T>(literal: &str, reason: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        literal: literal.to_string(),
        reason: reason.into(),
    })
}

/// Parses `p`, `-p`, or `p/q` into a reduced rational. Decimals are rejected.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let parse_int = |t: &str, allow_sign: bool| -> Result<BigInt> {
        let digits = if allow_sign {
            t.strip_prefix(['-', '+']).unwrap_or(t)
        } else {
            t
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return parse_err(text, "expected an integer or a fraction p/q");
        }
        t.trim_start_matches('+')
            .parse::<BigInt>()
            .or_else(|_| parse_err(text, "bad integer"))
    };
    let n = parse_int(num, true)?;
    let d = match den {
        Some(d) => parse_int(d, false)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return parse_err(text, "zero denominator");
    }
    Ok(BigRational::new(n, d))
}

struct Term {
    coef: BigRational,
    surd: Option<i64>,
    imag: bool,
}

fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = 0;
    for (idx, ch) in s.char_indices() {
        if idx > start && (ch == '+' || ch == '-') {
            out.push(&s[start..idx]);
            start = idx;
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_term(literal: &str, term: &str) -> Result<Term> {
    let (negative, mut rest) = match term.as_bytes().first() {
        Some(b'-') => (true, &term[1..]),
        Some(b'+') => (false, &term[1..]),
        _ => (false, term),
    };
    let imag = rest.ends_with('i');
    if imag {
        rest = &rest[..rest.len() - 1];
        rest = rest.strip_suffix('*').unwrap_or(rest);
    }
    let (coef_text, surd) = if let Some(pos) = rest.find('√') {
        (&rest[..pos], Some(&rest[pos + '√'.len_utf8()..]))
    } else if let Some(pos) = rest.find("sqrt") {
        let r = &rest[pos + 4..];
        let r = r
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(r);
        (&rest[..pos], Some(r))
    } else {
        (rest, None)
    };
    let coef_text = coef_text.strip_suffix('*').unwrap_or(coef_text);
    if coef_text.is_empty() && surd.is_none() && !imag {
        return parse_err(literal, "empty term");
    }
    let mut coef = if coef_text.is_empty() {
        BigRational::one()
    } else {
        parse_rational(coef_text).or_else(|_| parse_err(literal, format!("bad coefficient {coef_text:?}")))?
    };
    if negative {
        coef = -coef;
    }
    let surd = match surd {
        None => None,
        Some(t) => match t.parse::<i64>() {
            Ok(d) => Some(d),
            Err(_) => return parse_err(literal, format!("bad surd {t:?}")),
        },
    };
    Ok(Term { coef, surd, imag })
}

fn parse_terms(text: &str, field: FieldDescriptor) -> Result<Vec<Term>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return parse_err(text, "empty literal");
    }
    let terms = split_terms(&compact)
        .into_iter()
        .map(|t| parse_term(text, t))
        .collect::<Result<Vec<_>>>()?;
    for t in &terms {
        if let Some(d) = t.surd {
            if field != FieldDescriptor::Quadratic(d) {
                return parse_err(text, format!("√{d} is not an element of {field}"));
            }
        }
    }
    Ok(terms)
}

fn accumulate(terms: &[Term], field: FieldDescriptor, imag: bool) -> FieldElem {
    let mut acc = FieldElem::zero();
    for t in terms.iter().filter(|t| t.imag == imag) {
        let v = match t.surd {
            None => FieldElem::Rational(t.coef.clone()),
            Some(_) => FieldElem::quad(BigRational::zero(), t.coef.clone(), field),
        };
        acc = Scalar::add(&acc, &v);
    }
    acc
}

impl FieldElem {
    /// Parses a real literal such as `3`, `-1/2` or `1/2+1/2√3` (also
    /// accepted: `sqrt(3)`) as an element of `field`.
    pub fn parse(text: &str, field: FieldDescriptor) -> Result<Self> {
        let terms = parse_terms(text, field)?;
        if terms.iter().any(|t| t.imag) {
            return parse_err(text, "imaginary term in a real literal");
        }
        Ok(accumulate(&terms, field, false))
    }
}

impl ComplexElem {
    /// Parses a complex literal: a signed sum of real terms and terms ending
    /// in `i`, e.g. `1`, `2i`, `1/2-1/2√3i`.
    pub fn parse(text: &str, field: FieldDescriptor) -> Result<Self> {
        let terms = parse_terms(text, field)?;
        Ok(ComplexElem::new(
            accumulate(&terms, field, false),
            accumulate(&terms, field, true),
        ))
    }
}

/// Renders a signed sum of terms `coef·[√d]·[i]`, skipping zero terms.
pub(crate) fn render_terms<'a>(
    terms: impl Iterator<Item = (&'a BigRational, Option<i64>, bool)>,
) -> String {
    let mut out = String::new();
    for (coef, surd, imag) in terms {
        if coef.is_zero() {
            continue;
        }
        if coef.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = coef.abs();
        let has_unit = surd.is_some() || imag;
        if !(has_unit && mag.is_one()) {
            out.push_str(&mag.to_string());
        }
        if let Some(d) = surd {
            out.push('√');
            out.push_str(&d.to_string());
        }
        if imag {
            out.push('i');
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
