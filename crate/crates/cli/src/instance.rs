//! Plain-text instances.
//!
//! Copy systems:
//!
//! ```text
//! points 3
//! copy 0 1
//! copy 1 2
//! copy 2 0
//! ```
//!
//! An optional `size n` line fixes the copy size when there are no copies.
//!
//! Affine systems, one equation per line, variables `x0, x1, …`:
//!
//! ```text
//! x0 + x1 = 1
//! 2x0 - 1/2x1 = 3
//! (1+i)x2 = 0
//! ```
//!
//! Coefficients are rationals, or complex literals in parentheses. `#`
//! starts a comment in both formats.

use pompeiu::combinat::CopySystem;
use pompeiu::exactfield::{parse_rational, ComplexElem, FieldDescriptor, Scalar};
use pompeiu::geometry::PointId;
use pompeiu::linsys::{GenSystem, SparseRow};

use crate::CliError;

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_copy_system(text: &str) -> Result<CopySystem, CliError> {
    let mut points = None;
    let mut size = None;
    let mut copies: Vec<Vec<usize>> = Vec::new();
    let mut last = 1;
    for (line, l) in lines(text) {
        last = line;
        let mut words = l.split_whitespace();
        let head = words.next().unwrap_or("");
        let nums = words
            .map(|w| w.parse::<usize>().map_err(|_| CliError::at(line, format!("bad number {w:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        match (head, nums.as_slice()) {
            ("points", [n]) if points.is_none() => points = Some(*n),
            ("size", [n]) if size.is_none() => size = Some(*n),
            ("copy", ids) if !ids.is_empty() => copies.push(ids.to_vec()),
            _ => return Err(CliError::at(line, format!("unexpected line {l:?}"))),
        }
    }
    let points = points.ok_or_else(|| CliError::at(last, "missing `points` line"))?;
    let size = size
        .or_else(|| copies.first().map(Vec::len))
        .ok_or_else(|| CliError::at(last, "no copies and no `size` line"))?;
    Ok(CopySystem::new(points, size, copies)?)
}

pub fn render_copy_system(sys: &CopySystem) -> String {
    let mut out = format!("points {}\nsize {}\n", sys.point_count(), sys.copy_size());
    for c in sys.copies() {
        let ids: Vec<String> = c.iter().map(ToString::to_string).collect();
        out.push_str(&format!("copy {}\n", ids.join(" ")));
    }
    out
}

fn parse_term(term: &str, line: usize) -> Result<(Option<PointId>, ComplexElem), CliError> {
    let (neg, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, term.strip_prefix('+').unwrap_or(term).trim()),
    };
    let (coef_text, var) = match body.rfind('x') {
        Some(pos) => (body[..pos].trim(), Some(&body[pos + 1..])),
        None => (body, None),
    };
    let coef = if coef_text.is_empty() {
        ComplexElem::one()
    } else if let Some(inner) = coef_text.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        ComplexElem::parse(inner, FieldDescriptor::Rational).map_err(|e| CliError::at(line, e))?
    } else {
        ComplexElem::from_rational(parse_rational(coef_text).map_err(|e| CliError::at(line, e))?)
    };
    let coef = if neg { coef.neg() } else { coef };
    let id = match var {
        None => None,
        Some(v) => Some(PointId(
            v.parse().map_err(|_| CliError::at(line, format!("bad variable x{v}")))?,
        )),
    };
    Ok((id, coef))
}

/// Splits at top-level `+`/`-`, keeping the sign with its term.
fn split_signed(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > start && !s[start..i].trim().is_empty() => {
                out.push(s[start..i].trim());
                start = i;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

pub fn parse_gen_system(text: &str) -> Result<GenSystem, CliError> {
    let mut rows = Vec::new();
    for (line, l) in lines(text) {
        let Some((lhs, rhs)) = l.split_once('=') else {
            return Err(CliError::at(line, "expected `lhs = rhs`"));
        };
        let mut terms = Vec::new();
        for t in split_signed(lhs.trim()) {
            match parse_term(t, line)? {
                (Some(id), c) => terms.push((id, c)),
                (None, c) if c.is_zero() => {}
                (None, _) => return Err(CliError::at(line, "constant on the left-hand side")),
            }
        }
        let rhs = match parse_term(rhs.trim(), line)? {
            (None, c) => c,
            (Some(_), _) => return Err(CliError::at(line, "variable on the right-hand side")),
        };
        rows.push((SparseRow::new(rows.len(), terms), rhs));
    }
    Ok(GenSystem::new(rows))
}

pub fn render_equation(row: &SparseRow, rhs: &ComplexElem) -> String {
    let lhs: Vec<String> = row.terms().iter().map(|(id, c)| format!("({c})x{id}")).collect();
    let lhs = if lhs.is_empty() { "0".to_string() } else { lhs.join(" + ") };
    format!("{lhs} = {rhs}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use pompeiu::linsys::infeasible_core;

    #[test]
    fn copy_system_round_trip() {
        let sys = parse_copy_system("# triangle\npoints 3\ncopy 0 1\ncopy 1 2\ncopy 2 0\n").unwrap();
        assert_eq!(sys.copies().len(), 3);
        assert_eq!(parse_copy_system(&render_copy_system(&sys)).unwrap(), sys);
        assert!(parse_copy_system("points 2\ncopy 0 2\n").is_err());
        assert!(parse_copy_system("copy 0 1\n").is_err());
    }

    #[test]
    fn equations() {
        let sys = parse_gen_system("x0 + x1 = 1\n2x0 - 1/2x1 = 3\n(1+i)x2 - x0 = -1/3\n").unwrap();
        assert_eq!(sys.rows.len(), 3);
        assert_eq!(sys.rows[1].0.coefficient(PointId(1)).to_string(), "-1/2");
        assert_eq!(sys.rows[2].0.coefficient(PointId(2)).to_string(), "1+i");
        assert_eq!(sys.rows[2].1.to_string(), "-1/3");
        let err = parse_gen_system("x0 = 1\nx0 = x1\n").unwrap_err().to_string();
        assert!(err.starts_with("line 2"), "{err}");
    }

    #[test]
    fn duplicate_row_example() {
        let sys = parse_gen_system("x0 + x1 = 1\nx0 + x1 = 1\nx0 = 0\nx1 = 0\n").unwrap();
        assert_eq!(infeasible_core(&sys).unwrap().rows, vec![1, 2, 3]);
    }
}
