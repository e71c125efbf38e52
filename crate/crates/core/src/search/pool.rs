use std::collections::HashSet;

use crate::exactfield::{BigRational, FieldDescriptor};
use crate::geometry::{cayley_rotation, embed_planar_rotation, gamma, quadratic_unit, RotationMatrix};

/// Largest `m` for which `γ_m` is listed before the Cayley rotations.
const GAMMA_LIMIT: u64 = 6;

fn planes(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect()
}

/// Parameters `t` for the irrational units of ℚ(√d); `1/d` comes first
/// because for `d = 3` it is the 60° rotation.
fn unit_parameters(d: i64) -> Vec<BigRational> {
    let r = |n: i64, m: i64| BigRational::new(n.into(), m.into());
    let mut ts = vec![r(1, d), r(1, 1), r(2, 1), r(1, 2), r(3, 1), r(1, 3), r(3, 2), r(2, 3)];
    let mut seen = HashSet::new();
    ts.retain(|t| seen.insert(t.clone()));
    ts
}

/// Integer vectors of length `len` with max-norm exactly `n`, in
/// lexicographic order.
fn shell(len: usize, n: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-n; len];
    loop {
        if cur.iter().any(|v| v.abs() == n) {
            out.push(cur.clone());
        }
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n {
                cur[i] += 1;
                break;
            }
            cur[i] = -n;
        }
    }
}

/// A deterministic list of exact rotations of ℝ^k with entries in `field`.
///
/// Order: the identity; for ℚ(√d), the irrational units of the field in
/// each coordinate plane; `γ_1, …, γ_6` in each coordinate plane (planes in
/// lexicographic order, `m` outer); then Cayley rotations with integer
/// parameters of growing max-norm. Duplicates are dropped and the list is
/// cut at `size`.
pub fn rotation_pool(field: FieldDescriptor, k: usize, size: usize) -> Vec<RotationMatrix> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |r: RotationMatrix, out: &mut Vec<RotationMatrix>| {
        if out.len() < size && seen.insert(r.clone()) {
            out.push(r);
        }
        out.len() >= size
    };
    if push(RotationMatrix::identity(k), &mut out) {
        return out;
    }
    let planes = planes(k);
    if planes.is_empty() {
        return out;
    }
    if let FieldDescriptor::Quadratic(d) = field {
        for t in unit_parameters(d) {
            let (c, s) = quadratic_unit(d, &t);
            for &(i, j) in &planes {
                let r = RotationMatrix::planar(c.clone(), s.clone(), i, j, k).expect("unit vector");
                if push(r, &mut out) {
                    return out;
                }
            }
        }
    }
    for m in 1..=GAMMA_LIMIT {
        for &(i, j) in &planes {
            let r = embed_planar_rotation(&gamma(m), i, j, k).expect("plane inside dimension");
            if push(r, &mut out) {
                return out;
            }
        }
    }
    for n in 1.. {
        for params in shell(planes.len(), n) {
            let params: Vec<BigRational> = params.into_iter().map(|v| BigRational::from_integer(v.into())).collect();
            let r = cayley_rotation(k, &params).expect("I − A is invertible for skew A");
            if push(r, &mut out) {
                return out;
            }
        }
    }
    unreachable!("the Cayley family is infinite")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::FieldElem;
    use crate::geometry::determinant;

    #[test]
    fn planar_prefix() {
        let pool = rotation_pool(FieldDescriptor::Rational, 2, 3);
        assert_eq!(
            pool,
            vec![
                RotationMatrix::identity(2),
                RotationMatrix::from_unit_complex(&gamma(1)),
                RotationMatrix::from_unit_complex(&gamma(2)),
            ]
        );
        assert_eq!(rotation_pool(FieldDescriptor::Rational, 2, 1), vec![RotationMatrix::identity(2)]);
    }

    #[test]
    fn spatial_planes() {
        let pool = rotation_pool(FieldDescriptor::Rational, 3, 4);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert!(pool.contains(&embed_planar_rotation(&gamma(1), i, j, 3).unwrap()));
        }
    }

    #[test]
    fn quadratic_units_lead() {
        let pool = rotation_pool(FieldDescriptor::Quadratic(3), 2, 2);
        let (c, s) = quadratic_unit(3, &BigRational::new(1.into(), 3.into()));
        assert_eq!(c, FieldElem::from(BigRational::new(1.into(), 2.into())));
        assert_eq!(pool[1], RotationMatrix::planar(c, s, 0, 1, 2).unwrap());
    }

    #[test]
    fn pools_are_exact_rotations() {
        for (field, k) in [
            (FieldDescriptor::Rational, 2),
            (FieldDescriptor::Rational, 3),
            (FieldDescriptor::Quadratic(2), 3),
            (FieldDescriptor::Quadratic(5), 4),
        ] {
            let pool = rotation_pool(field, k, 60);
            assert_eq!(pool.len(), 60);
            let uniq: HashSet<_> = pool.iter().collect();
            assert_eq!(uniq.len(), 60);
            for q in &pool {
                assert!(q.transpose().mul(q).unwrap().is_identity());
                assert_eq!(determinant(q.entries()).unwrap(), FieldElem::one());
            }
        }
    }

    #[test]
    fn shell_enumeration() {
        assert_eq!(shell(1, 2), vec![vec![-2], vec![2]]);
        assert_eq!(shell(2, 1).len(), 8);
        assert_eq!(shell(3, 1).len(), 26);
    }
}
