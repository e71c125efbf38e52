use std::collections::HashMap;

use crate::error::usage;
use crate::linsys::{check_certificate, EliminationState, ForcingCertificate, Provenance, SparseRow};
use crate::Result;

fn force_with(rows: &HashMap<Provenance, &SparseRow>, keep: &[Provenance], cert: &ForcingCertificate) -> Option<ForcingCertificate> {
    let mut state = EliminationState::new();
    for p in keep {
        state.add_row(rows[p].clone());
    }
    state.forcing_certificate(cert.target)
}

/// Drops cited rows one at a time, in ascending provenance order, whenever
/// the remaining cited rows still force the target.
///
/// The result is deletion-minimal: removing any further row destroys the
/// certificate. It need not be of minimum size.
pub fn minimize_witness(rows: &[SparseRow], cert: &ForcingCertificate) -> Result<ForcingCertificate> {
    if let Err(e) = check_certificate(rows, cert) {
        return usage(format!("certificate does not verify: {e}"));
    }
    let by_prov: HashMap<Provenance, &SparseRow> = rows.iter().map(|r| (r.provenance, r)).collect();
    let mut keep = cert.cited();
    let mut i = 0;
    while i < keep.len() {
        let trial: Vec<Provenance> = keep.iter().copied().filter(|&p| p != keep[i]).collect();
        if force_with(&by_prov, &trial, cert).is_some() {
            keep = trial;
        } else {
            i += 1;
        }
    }
    Ok(force_with(&by_prov, &keep, cert).expect("kept rows still force the target"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{ComplexElem, Scalar};
    use crate::geometry::PointId;
    use crate::linsys::verify_certificate;

    fn edge(p: usize, a: usize, b: usize) -> SparseRow {
        SparseRow::new(p, [(PointId(a), ComplexElem::one()), (PointId(b), ComplexElem::one())])
    }

    fn certify(rows: &[SparseRow], target: usize) -> ForcingCertificate {
        let mut st = EliminationState::new();
        for r in rows {
            st.add_row(r.clone());
        }
        st.forcing_certificate(PointId(target)).unwrap()
    }

    #[test]
    fn duplicate_edge_dropped() {
        let rows = vec![edge(0, 0, 1), edge(1, 1, 2), edge(2, 2, 0)];
        let mut with_dup = rows.clone();
        with_dup.insert(0, edge(7, 0, 1));
        let cert = ForcingCertificate {
            multipliers: vec![
                (7, ComplexElem::from_i64(1).div(&ComplexElem::from_i64(4)).unwrap()),
                (0, ComplexElem::from_i64(1).div(&ComplexElem::from_i64(4)).unwrap()),
                (1, ComplexElem::from_i64(-1).div(&ComplexElem::from_i64(2)).unwrap()),
                (2, ComplexElem::from_i64(1).div(&ComplexElem::from_i64(2)).unwrap()),
            ],
            ..certify(&rows, 0)
        };
        assert!(verify_certificate(&with_dup, &cert));
        let min = minimize_witness(&with_dup, &cert).unwrap();
        assert_eq!(min.cited().len(), 3);
        assert!(verify_certificate(&with_dup, &min));
    }

    #[test]
    fn minimal_triangle_unchanged() {
        let rows = vec![edge(0, 0, 1), edge(1, 1, 2), edge(2, 2, 0)];
        let cert = certify(&rows, 0);
        assert_eq!(minimize_witness(&rows, &cert).unwrap(), cert);
    }

    #[test]
    fn bad_certificate_rejected() {
        let rows = vec![edge(0, 0, 1), edge(1, 1, 2), edge(2, 2, 0)];
        let mut cert = certify(&rows, 0);
        cert.multipliers[0].1 = cert.multipliers[0].1.neg();
        assert!(minimize_witness(&rows, &cert).is_err());
    }
}
