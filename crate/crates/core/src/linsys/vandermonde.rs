use crate::error::usage;
use crate::exactfield::Scalar;
use crate::Result;

/// Determinant of the s×s matrix with entry `z_j^k` in row `k = 1..s`,
/// column `j`, computed as `(Π z_j) · Π_{i<j} (z_j − z_i)`.
///
/// Entries must be nonzero and pairwise distinct, in which case the result
/// is nonzero.
pub fn vandermonde_det<T: Scalar>(z: &[T]) -> Result<T> {
    for (j, zj) in z.iter().enumerate() {
        if zj.is_zero() {
            return usage(format!("entry {j} is zero"));
        }
        if let Some(i) = z[..j].iter().position(|zi| zi == zj) {
            return usage(format!("entries {i} and {j} coincide"));
        }
    }
    let mut det = T::one();
    for (j, zj) in z.iter().enumerate() {
        det = det.mul(zj);
        for zi in &z[..j] {
            det = det.mul(&zj.sub(zi));
        }
    }
    Ok(det)
}
