//! Complements for the orbits of powers of a regular nilpotent.
//!
//! Both shapes live in the basis where `e = ẽ^k` shifts `v_j` to `v_{j-k}`;
//! [`power_frame`] moves them to the Jordan basis of the orbit's partition.

use num_traits::One;

use crate::error::{Error, Result};
use crate::lie::{AlgebraKind, Family, SubalgebraBasis};
use crate::partitions::power_partition;
use crate::ratlin::{RatMatrix, Rational};

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n < 2 || k == 0 || k > n {
        return Err(Error::Precondition(format!("need 1 <= k <= n and n >= 2, got n={n}, k={k}")));
    }
    Ok(())
}

/// `ẽ^k`: ones at `(i, i+k)`.
pub fn regular_power(n: usize, k: usize) -> RatMatrix {
    let mut e = RatMatrix::zeros(n, n);
    for i in 0..n.saturating_sub(k) {
        e[(i, i + k)] = Rational::one();
    }
    e
}

/// Matrices whose first `q` rows vanish and whose next `k - q` rows vanish
/// outside the first `q` columns, where `n = kl + q`. Lives in `gl_n`.
pub fn witness_fig1(n: usize, k: usize) -> Result<SubalgebraBasis> {
    check_nk(n, k)?;
    let q = n % k;
    let mut mats = Vec::new();
    for i in q..n {
        let cols = if i < k { q } else { n };
        for j in 0..cols {
            mats.push(RatMatrix::unit(n, i, j));
        }
    }
    Ok(SubalgebraBasis::from_parts_unchecked(AlgebraKind::gl(n), mats))
}

/// Solvable variant for `k >= n/2`: with `q = n - k` and blocks `(q, k-q, q)`,
/// the first diagonal block is lower triangular with diagonal `t`, the last is
/// upper triangular with diagonal `-t`, the middle row block sits over the first
/// column block and the last row block over the first two.
pub fn witness_solvable_spherical(n: usize, k: usize) -> Result<SubalgebraBasis> {
    check_nk(n, k)?;
    if 2 * k < n {
        return Err(Error::Precondition(format!(
            "solvable complement needs k >= n/2, got n={n}, k={k}"
        )));
    }
    let q = n - k;
    let mut mats = Vec::new();
    for t in 0..q {
        mats.push(&RatMatrix::unit(n, t, t) - &RatMatrix::unit(n, k + t, k + t));
    }
    for i in 0..q {
        for j in 0..i {
            mats.push(RatMatrix::unit(n, i, j));
        }
    }
    for i in k..n {
        for j in i + 1..n {
            mats.push(RatMatrix::unit(n, i, j));
        }
    }
    for i in q..k {
        for j in 0..q {
            mats.push(RatMatrix::unit(n, i, j));
        }
    }
    for i in k..n {
        for j in 0..k {
            mats.push(RatMatrix::unit(n, i, j));
        }
    }
    Ok(SubalgebraBasis::from_parts_unchecked(AlgebraKind::gl(n), mats))
}

/// Permutation matrix `P` with `P J P^T = ẽ^k`, where `J` is the Jordan matrix
/// of `power_partition(n, k)`: the chain through `v_r, v_{r+k}, ...` becomes block `r`.
pub fn power_frame(n: usize, k: usize) -> Result<RatMatrix> {
    check_nk(n, k)?;
    let lambda = power_partition(n, k)?;
    let mut p = RatMatrix::zeros(n, n);
    let mut offset = 0;
    for (r, &len) in lambda.parts().iter().enumerate() {
        for t in 0..len {
            p[(r + t * k, offset + t)] = Rational::one();
        }
        offset += len;
    }
    Ok(p)
}

/// A `ẽ^k`-frame subalgebra moved to the Jordan frame of `power_partition(n, k)`,
/// optionally projected to `sl_n`.
pub fn to_jordan_frame(h: &SubalgebraBasis, k: usize, family: Family) -> Result<SubalgebraBasis> {
    let p = power_frame(h.n(), k)?;
    let pt = p.transpose();
    let moved = h.conjugate(&pt, &p);
    Ok(match family {
        Family::Gl => moved,
        Family::Sl => moved.to_sl(),
    })
}
