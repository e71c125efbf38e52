use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactfield::BigRational;

/// `|S ∩ {σ·1 + t, …, σ·n + t}|` for `S = ⋃_{u ∈ ℤ} ([0, 1) + n·u)`, where
/// `σ` is the sign of `sign`.
///
/// `x ∈ S` iff `x − n·⌊x/n⌋ ∈ [0, 1)`. The count is always one: the copy
/// is a full set of residues modulo `n` shifted by `t`.
pub fn steinhaus_1d_count(n: u64, t: &BigRational, sign: i64) -> usize {
    assert!(n >= 1, "n must be positive");
    let nq = BigRational::from_integer(n.into());
    let sigma: i64 = if sign < 0 { -1 } else { 1 };
    (1..=n as i64)
        .filter(|j| {
            let x = BigRational::from_integer((sigma * j).into()) + t;
            let q = (x.numer() * nq.denom()).div_floor(&(x.denom() * nq.numer()));
            let r = &x - &nq * BigRational::from_integer(q);
            r >= BigRational::zero() && r < BigRational::one()
        })
        .count()
}
