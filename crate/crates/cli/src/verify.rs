//! Standalone certificate checking.
//!
//! [`verify_document`] reads nothing but the document. It re-parses every
//! value, checks each rotation for `QᵀQ = I` and `det Q = 1`, re-applies
//! each motion to the base tuple and matches the images against the listed
//! witness points, rebuilds each placement's equation from the weights and
//! finally re-sums the multipliers. Only field arithmetic is shared with the
//! search; no elimination code is used.

use std::collections::{BTreeMap, HashMap, HashSet};

use pompeiu::exactfield::{ComplexElem, FieldDescriptor, FieldElem, Scalar};

use crate::config::parse_field;
use crate::document::CertificateDocument;

/// Outcome of checking a document; it passes iff there are no diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub diagnostics: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.diagnostics.is_empty()
    }
}

type Coords = Vec<FieldElem>;

fn parse_coords(text: &[String], field: FieldDescriptor) -> Result<Coords, String> {
    text.iter()
        .map(|c| FieldElem::parse(c, field).map_err(|e| e.to_string()))
        .collect()
}

fn det(mut m: Vec<Vec<FieldElem>>) -> FieldElem {
    let n = m.len();
    let mut acc = FieldElem::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return FieldElem::zero();
        };
        if piv != col {
            m.swap(piv, col);
            acc = acc.neg();
        }
        acc = acc.mul(&m[col][col]);
        let inv = m[col][col].inv().expect("nonzero pivot");
        for r in col + 1..n {
            let f = m[r][col].mul(&inv);
            for c in col..n {
                let d = f.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&d);
            }
        }
    }
    acc
}

fn check(doc: &CertificateDocument, out: &mut Vec<String>) -> Result<(), String> {
    let p = &doc.problem;
    let field = parse_field(&p.field).map_err(|e| e.to_string())?;
    let k = p.dimension;
    let base = p
        .points
        .iter()
        .map(|c| parse_coords(c, field))
        .collect::<Result<Vec<_>, _>>()?;
    let weights = p
        .weights
        .iter()
        .map(|w| ComplexElem::parse(w, field).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let target = parse_coords(&p.target, field)?;
    if base.is_empty() || base.len() != weights.len() {
        return Err("base tuple and weights do not match".into());
    }
    if base.iter().chain([&target]).any(|c| c.len() != k) {
        return Err(format!("a problem point does not have dimension {k}"));
    }
    if weights.iter().fold(ComplexElem::zero(), |s, w| s.add(w)).is_zero() {
        return Err("weights sum to zero".into());
    }

    let mut by_coords: HashMap<Coords, usize> = HashMap::new();
    let mut ids = HashSet::new();
    for wp in &doc.witness_points {
        let c = parse_coords(&wp.coords, field)?;
        if c.len() != k {
            out.push(format!("witness point {} has the wrong dimension", wp.id));
            continue;
        }
        if !ids.insert(wp.id) {
            out.push(format!("witness id {} is listed twice", wp.id));
        }
        if let Some(other) = by_coords.insert(c, wp.id) {
            out.push(format!("witness points {other} and {} coincide", wp.id));
        }
    }
    if by_coords.get(&target) != Some(&doc.target_id) {
        out.push(format!("witness point {} is not the target", doc.target_id));
    }

    let mut rows: HashMap<usize, BTreeMap<usize, ComplexElem>> = HashMap::new();
    let mut covered = HashSet::new();
    let identity = |i: usize, j: usize| if i == j { FieldElem::one() } else { FieldElem::zero() };
    for pl in &doc.placements {
        let tag = format!("placement {}", pl.provenance);
        let q = pl
            .rotation
            .iter()
            .map(|r| parse_coords(r, field))
            .collect::<Result<Vec<_>, _>>()?;
        if q.len() != k || q.iter().any(|r| r.len() != k) {
            out.push(format!("{tag}: rotation is not {k}×{k}"));
            continue;
        }
        let orthogonal = (0..k).all(|i| {
            (0..k).all(|j| (0..k).fold(FieldElem::zero(), |s, r| s.add(&q[r][i].mul(&q[r][j]))) == identity(i, j))
        });
        if !orthogonal {
            out.push(format!("{tag}: rotation is not orthogonal"));
            continue;
        }
        if det(q.clone()) != FieldElem::one() {
            out.push(format!("{tag}: rotation has determinant -1"));
            continue;
        }
        let t = parse_coords(&pl.translation, field)?;
        if t.len() != k || pl.image_ids.len() != base.len() {
            out.push(format!("{tag}: translation or image list has the wrong length"));
            continue;
        }
        let mut row: BTreeMap<usize, ComplexElem> = BTreeMap::new();
        for (j, a) in base.iter().enumerate() {
            let image: Coords = (0..k)
                .map(|i| (0..k).fold(t[i].clone(), |s, r| s.add(&q[i][r].mul(&a[r]))))
                .collect();
            match by_coords.get(&image) {
                Some(&id) if id == pl.image_ids[j] => {
                    covered.insert(id);
                    let e = row.entry(id).or_insert_with(ComplexElem::zero);
                    *e = e.add(&weights[j]);
                }
                Some(&id) => out.push(format!("{tag}: image of a_{} is point {id}, not {}", j + 1, pl.image_ids[j])),
                None => out.push(format!("{tag}: image of a_{} is not a witness point", j + 1)),
            }
        }
        if rows.insert(pl.provenance, row).is_some() {
            out.push(format!("{tag} is listed twice"));
        }
    }
    for wp in &doc.witness_points {
        if !covered.contains(&wp.id) {
            out.push(format!("witness point {} is not the image of any placement", wp.id));
        }
    }

    let mut sum: BTreeMap<usize, ComplexElem> = BTreeMap::new();
    let mut seen = HashSet::new();
    for m in &doc.multipliers {
        if !seen.insert(m.provenance) {
            out.push(format!("multiplier for placement {} is listed twice", m.provenance));
        }
        let lambda = ComplexElem::parse(&m.value, field).map_err(|e| e.to_string())?;
        let Some(row) = rows.get(&m.provenance) else {
            out.push(format!("multiplier cites unknown placement {}", m.provenance));
            continue;
        };
        for (id, c) in row {
            let e = sum.entry(*id).or_insert_with(ComplexElem::zero);
            *e = e.add(&lambda.mul(c));
        }
    }
    sum.entry(doc.target_id).or_insert_with(ComplexElem::zero);
    for (id, v) in &sum {
        let want = if *id == doc.target_id { ComplexElem::one() } else { ComplexElem::zero() };
        if *v != want {
            out.push(format!("combination has coefficient {v} at point {id}, expected {want}"));
        }
    }
    Ok(())
}

pub fn verify_document(doc: &CertificateDocument) -> VerifyReport {
    let mut diagnostics = Vec::new();
    if doc.kind != "certificate" {
        diagnostics.push(format!("document kind is {:?}, not \"certificate\"", doc.kind));
    }
    if let Err(e) = check(doc, &mut diagnostics) {
        diagnostics.push(e);
    }
    VerifyReport { diagnostics }
}
