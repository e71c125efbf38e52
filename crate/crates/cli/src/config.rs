//! The key-value problem format.
//!
//! ```text
//! # the unit pair over Q(√3)
//! dimension = 2
//! field = quad 3
//! points = 0,0; 1,0
//! weights = 1, 1
//! target = 0,0
//! max_placements = 64
//! ```
//!
//! `field` is `q` or `quad d`. Points are separated by `;`, coordinates by
//! `,`. Coordinates are exact literals (`3`, `-1/2`, `1/2+1/2√3`), weights
//! may be complex (`1/2-1/2√3i`). Budget keys are optional. Blank lines and
//! `#` comments are ignored; unknown or repeated keys are errors.

use std::collections::BTreeMap;

use pompeiu::exactfield::{ComplexElem, FieldDescriptor, FieldElem, Scalar};
use pompeiu::geometry::Point;
use pompeiu::search::{Problem, SearchBudget};

use crate::CliError;

const KEYS: [&str; 8] = [
    "dimension",
    "field",
    "points",
    "weights",
    "target",
    "max_placements",
    "max_points",
    "rotation_pool_size",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemConfig {
    pub dimension: usize,
    pub field: FieldDescriptor,
    pub points: Vec<Point>,
    pub weights: Vec<ComplexElem>,
    pub target: Point,
    pub budget: SearchBudget,
}

pub fn parse_field(text: &str) -> Result<FieldDescriptor, CliError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    match words.as_slice() {
        ["q"] | ["Q"] => Ok(FieldDescriptor::Rational),
        ["quad", d] => {
            let d: i64 = d
                .parse()
                .map_err(|_| CliError::Usage(format!("bad discriminant {d:?}")))?;
            Ok(FieldDescriptor::quadratic(d)?)
        }
        _ => Err(CliError::Usage(format!("field must be `q` or `quad d`, got {text:?}"))),
    }
}

pub fn field_name(field: FieldDescriptor) -> String {
    match field {
        FieldDescriptor::Rational => "q".to_string(),
        FieldDescriptor::Quadratic(d) => format!("quad {d}"),
    }
}

pub fn parse_point(text: &str, field: FieldDescriptor) -> Result<Point, CliError> {
    let coords = text
        .split(',')
        .map(|c| FieldElem::parse(c.trim(), field))
        .collect::<pompeiu::Result<Vec<_>>>()?;
    Ok(Point::new(coords))
}

pub fn parse_points(text: &str, field: FieldDescriptor) -> Result<Vec<Point>, CliError> {
    text.split(';').map(|p| parse_point(p, field)).collect()
}

pub fn parse_weights(text: &str, field: FieldDescriptor) -> Result<Vec<ComplexElem>, CliError> {
    text.split(',')
        .map(|w| ComplexElem::parse(w.trim(), field).map_err(CliError::from))
        .collect()
}

pub fn point_strings(p: &Point) -> Vec<String> {
    p.coords.iter().map(ToString::to_string).collect()
}

impl ProblemConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(CliError::at(line, "expected `key = value`"));
            };
            let key = key.trim();
            let Some(&key) = KEYS.iter().find(|k| **k == key) else {
                return Err(CliError::at(line, format!("unknown key {key:?}")));
            };
            if entries.insert(key, (line, value.trim())).is_some() {
                return Err(CliError::at(line, format!("repeated key {key:?}")));
            }
        }
        let last = text.lines().count().max(1);
        let get = |key: &str| entries.get(key).copied().ok_or_else(|| CliError::at(last, format!("missing key {key:?}")));
        let at = |line: usize| move |e: CliError| CliError::at(line, e);
        let count = |key: &str, default: usize| -> Result<usize, CliError> {
            match entries.get(key) {
                None => Ok(default),
                Some(&(line, v)) => v
                    .parse::<usize>()
                    .ok()
                    .filter(|n| *n > 0)
                    .ok_or_else(|| CliError::at(line, format!("{key} must be a positive integer"))),
            }
        };

        let (line, v) = get("dimension")?;
        let dimension: usize = v
            .parse()
            .ok()
            .filter(|k| *k >= 2)
            .ok_or_else(|| CliError::at(line, "dimension must be an integer >= 2"))?;
        let (line, v) = get("field")?;
        let field = parse_field(v).map_err(at(line))?;
        let (line, v) = get("points")?;
        let points = parse_points(v, field).map_err(at(line))?;
        if let Some(p) = points.iter().find(|p| p.dim() != dimension) {
            return Err(CliError::at(line, format!("point {p} does not have dimension {dimension}")));
        }
        let (line, v) = get("weights")?;
        let weights = parse_weights(v, field).map_err(at(line))?;
        if weights.len() != points.len() {
            return Err(CliError::at(line, format!("{} weights for {} points", weights.len(), points.len())));
        }
        if weights.iter().fold(ComplexElem::zero(), |s, w| s.add(w)).is_zero() {
            return Err(CliError::at(
                line,
                "weights sum to zero; a nonzero sum is necessary, since every constant function satisfies the equations",
            ));
        }
        let (line, v) = get("target")?;
        let target = parse_point(v, field).map_err(at(line))?;
        if target.dim() != dimension {
            return Err(CliError::at(line, format!("target does not have dimension {dimension}")));
        }
        let defaults = SearchBudget::default();
        let budget = SearchBudget {
            max_placements: count("max_placements", defaults.max_placements)?,
            max_points: count("max_points", defaults.max_points)?,
            rotation_pool_size: count("rotation_pool_size", defaults.rotation_pool_size)?,
        };
        Ok(ProblemConfig {
            dimension,
            field,
            points,
            weights,
            target,
            budget,
        })
    }

    pub fn problem(&self) -> Result<Problem, CliError> {
        Ok(Problem::new(
            self.dimension,
            self.field,
            self.points.clone(),
            self.weights.clone(),
            self.target.clone(),
        )?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pompeiu::exactfield::BigRational;

    const PAIR: &str = "dimension = 2\nfield = quad 3\npoints = 0,0; 1,0\nweights = 1, 1\ntarget = 0,0\n";

    #[test]
    fn parses_the_unit_pair() {
        let cfg = ProblemConfig::parse(PAIR).unwrap();
        assert_eq!(cfg.field, FieldDescriptor::Quadratic(3));
        assert_eq!(cfg.points, vec![Point::from_ints(&[0, 0]), Point::from_ints(&[1, 0])]);
        assert_eq!(cfg.budget, SearchBudget::default());
    }

    #[test]
    fn surd_coordinates() {
        let p = parse_point("1/2+1/2√3, 0", FieldDescriptor::Quadratic(3)).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p.coords[0], FieldElem::quad(half.clone(), half, FieldDescriptor::Quadratic(3)));
    }

    #[test]
    fn zero_weight_sum_cites_line() {
        let text = PAIR.replace("weights = 1, 1", "weights = 1, -1");
        let err = ProblemConfig::parse(&text).unwrap_err().to_string();
        assert!(err.starts_with("line 4:"), "{err}");
        assert!(err.contains("nonzero sum is necessary"));
    }

    #[test]
    fn rejections() {
        let cases = [
            (PAIR.replace("field = quad 3", "field = quad 4"), "line 2"),
            (PAIR.replace("weights = 1, 1", "weights = 1, 1/0"), "line 4"),
            (format!("{PAIR}colour = red\n"), "line 6"),
            (format!("{PAIR}target = 1,1\n"), "line 6"),
            (PAIR.replace("points = 0,0; 1,0", "points = 0,0; 1,0,0"), "line 3"),
            (PAIR.replace("dimension = 2", "dimension = 1"), "line 1"),
            (format!("{PAIR}max_points = 0\n"), "line 6"),
        ];
        for (text, line) in cases {
            let err = ProblemConfig::parse(&text).unwrap_err().to_string();
            assert!(err.starts_with(line), "{err}");
        }
    }
}
