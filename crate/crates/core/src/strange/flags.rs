//! Partial flags, their stabilizers, and the explicit flags that complement
//! centralizers of two- and three-part nilpotents.
//!
//! Vectors `v_1..v_n` are the Jordan basis of `jordan_nilpotent(lambda)`:
//! block after block, with `x v_j = v_{j-1}` inside each block.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{AlgebraKind, SubalgebraBasis};
use crate::partitions::{tilde_orbit, Partition};
use crate::ratlin::{kernel_of_rows, Rational, Subspace};
use crate::seaweed::Composition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagSpec {
    n: usize,
    spaces: Vec<Subspace>,
}

impl FlagSpec {
    /// Checks ambient dimensions, strictly increasing proper dimensions, and nesting.
    pub fn new(n: usize, spaces: Vec<Subspace>) -> Result<Self> {
        for s in &spaces {
            if s.ambient_dim() != n {
                return Err(Error::AmbientMismatch {
                    left: n,
                    right: s.ambient_dim(),
                });
            }
            if s.dim() == 0 || s.dim() >= n {
                return Err(Error::NotNested(format!("subspace of dimension {} in Q^{n}", s.dim())));
            }
        }
        for w in spaces.windows(2) {
            if w[0].dim() >= w[1].dim() || !w[1].contains_subspace(&w[0]) {
                return Err(Error::NotNested(format!(
                    "subspace of dimension {} is not contained in the next one of dimension {}",
                    w[0].dim(),
                    w[1].dim()
                )));
            }
        }
        Ok(Self { n, spaces })
    }

    /// Coordinate flag `<v_1..v_{d_1}> ⊂ <v_1..v_{d_2}> ⊂ ...`.
    pub fn standard(n: usize, dims: &[usize]) -> Result<Self> {
        let spaces = dims
            .iter()
            .map(|&d| Subspace::span(n, (0..d.min(n)).map(|i| unit_vector(n, i)).collect()))
            .collect();
        Self::new(n, spaces)
    }

    /// Builds a flag from lists of spanning vectors given as 1-based sums of basis vectors.
    fn from_index_sums(n: usize, spaces: &[Vec<Vec<usize>>]) -> Result<Self> {
        let spaces = spaces
            .iter()
            .map(|gens| {
                let vectors = gens
                    .iter()
                    .map(|idx| {
                        let mut v = vec![Rational::zero(); n];
                        for &i in idx {
                            v[i - 1] += Rational::one();
                        }
                        v
                    })
                    .collect();
                Subspace::from_independent(n, vectors)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, spaces)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    /// Successive quotient dimensions, ending with `n - dim V_last`.
    pub fn composition(&self) -> Composition {
        let mut blocks = Vec::new();
        let mut prev = 0;
        for d in self.dims().into_iter().chain(std::iter::once(self.n)) {
            blocks.push(d - prev);
            prev = d;
        }
        Composition::new(blocks).expect("dimensions strictly increase")
    }
}

fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

#[derive(Serialize)]
struct FlagJson {
    n: usize,
    dims: Vec<usize>,
    bases: Vec<Vec<Vec<String>>>,
}

impl Serialize for FlagSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FlagJson {
            n: self.n,
            dims: self.dims(),
            bases: self
                .spaces
                .iter()
                .map(|s| {
                    s.basis()
                        .iter()
                        .map(|v| v.iter().map(ToString::to_string).collect())
                        .collect()
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

/// `{X : X V_i ⊆ V_i for all i}`, traceless for `sl_n`.
pub fn flag_stabilizer(flag: &FlagSpec, kind: AlgebraKind) -> Result<SubalgebraBasis> {
    let n = kind.n;
    if flag.n != n {
        return Err(Error::AmbientMismatch { left: flag.n, right: n });
    }
    // For each covector a vanishing on V_i and each v in V_i: a^T X v = 0,
    // which is linear in the entries X_{rc} with coefficient a_r v_c.
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for space in &flag.spaces {
        let annihilator = space.annihilator();
        for a in &annihilator {
            for v in space.basis() {
                let mut row = vec![Rational::zero(); n * n];
                for (r, ar) in a.iter().enumerate() {
                    if ar.is_zero() {
                        continue;
                    }
                    for (c, vc) in v.iter().enumerate() {
                        if !vc.is_zero() {
                            row[r * n + c] = ar * vc;
                        }
                    }
                }
                rows.push(row);
            }
        }
    }
    if kind.is_sl() {
        let mut trace = vec![Rational::zero(); n * n];
        for i in 0..n {
            trace[i * n + i] = Rational::one();
        }
        rows.push(trace);
    }
    let mats = if rows.is_empty() {
        SubalgebraBasis::full(kind).into_mats()
    } else {
        kernel_of_rows(&rows, n * n)
            .into_iter()
            .map(|v| crate::lie::unflatten(n, v))
            .collect()
    };
    Ok(SubalgebraBasis::from_parts_unchecked(kind, mats))
}

/// Flag for the orbit `tilde_orbit(n)`: for `n = 2m`,
/// `<v_{m+1}> ⊂ <v_{m+1}, v_m + v_{2m}>`; for `n = 2m+1`, the plane
/// `<v_{m+2}, v_{m+1} + v_{2m+1}>`.
pub fn witness_flag_two_part(n: usize) -> Result<FlagSpec> {
    if n < 4 {
        return Err(Error::Precondition(format!("two-part flag needs n >= 4, got {n}")));
    }
    let m = n / 2;
    if n % 2 == 0 {
        FlagSpec::from_index_sums(
            n,
            &[vec![vec![m + 1]], vec![vec![m + 1], vec![m, 2 * m]]],
        )
    } else {
        FlagSpec::from_index_sums(n, &[vec![vec![m + 2], vec![m + 1, 2 * m + 1]]])
    }
}

/// Partition handled by [`witness_flag_three_part`]: `(m+2, m-1, m-1)`,
/// `(m+3, m-1, m-1)` or `(m+3, m, m-1)` for `n = 3m, 3m+1, 3m+2`.
pub fn three_part_partition(n: usize) -> Result<Partition> {
    let m = n / 3;
    if m < 2 {
        return Err(Error::Precondition(format!(
            "three-part flag needs positive parts, which fails for n={n}"
        )));
    }
    let parts = match n % 3 {
        0 => vec![m + 2, m - 1, m - 1],
        1 => vec![m + 3, m - 1, m - 1],
        _ => vec![m + 3, m, m - 1],
    };
    Partition::new(parts)
}

/// Three-part flags: `n = 3m`: `<v_{m+2}> ⊂ <v_{m+2}, v_{m+1}+v_{2m+1}, v_m+v_{3m}>`;
/// `n = 3m+1`: `<v_{m+3}, v_{m+2}+v_{2m+2}, v_{m+1}+v_{3m+1}>`;
/// `n = 3m+2`: `<v_{m+3}, v_{m+1}+v_{2m+3}, v_{m+2}+v_{3m+2}>`.
pub fn witness_flag_three_part(n: usize) -> Result<FlagSpec> {
    three_part_partition(n)?;
    let m = n / 3;
    match n % 3 {
        0 => FlagSpec::from_index_sums(
            n,
            &[
                vec![vec![m + 2]],
                vec![vec![m + 2], vec![m + 1, 2 * m + 1], vec![m, 3 * m]],
            ],
        ),
        1 => FlagSpec::from_index_sums(
            n,
            &[vec![vec![m + 3], vec![m + 2, 2 * m + 2], vec![m + 1, 3 * m + 1]]],
        ),
        _ => FlagSpec::from_index_sums(
            n,
            &[vec![vec![m + 3], vec![m + 1, 2 * m + 3], vec![m + 2, 3 * m + 2]]],
        ),
    }
}

/// Partition whose centralizer the two-part flag complements.
pub fn two_part_partition(n: usize) -> Result<Partition> {
    tilde_orbit(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::orbit_dim;
    use crate::seaweed::{seaweed_basis, SeaweedSpec};
    use crate::strange::pair::check_pair;
    use crate::lie::Family;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn standard_flag_gives_parabolic() {
        let flag = FlagSpec::standard(9, &[1, 3]).unwrap();
        assert_eq!(flag.composition().blocks(), &[1, 2, 6]);
        let stab = flag_stabilizer(&flag, AlgebraKind::sl(9)).unwrap();
        assert_eq!(stab.dim(), 60);
        let parabolic = seaweed_basis(&SeaweedSpec::parabolic(flag.composition()), Family::Sl).unwrap();
        assert!(parabolic.mats().iter().all(|m| stab.contains(m)));
    }

    #[test]
    fn trivial_and_full_flags() {
        let empty = FlagSpec::new(4, vec![]).unwrap();
        assert_eq!(flag_stabilizer(&empty, AlgebraKind::gl(4)).unwrap().dim(), 16);
        let full = FlagSpec::standard(4, &[1, 2, 3]).unwrap();
        let b = flag_stabilizer(&full, AlgebraKind::sl(4)).unwrap();
        assert_eq!(b.dim(), 9);
        assert!(b.is_solvable());
    }

    #[test]
    fn nesting_is_enforced() {
        let a = Subspace::span(3, vec![unit_vector(3, 0)]);
        let b = Subspace::span(3, vec![unit_vector(3, 1), unit_vector(3, 2)]);
        assert!(matches!(FlagSpec::new(3, vec![a, b]), Err(Error::NotNested(_))));
    }

    #[test]
    fn two_part_examples() {
        let f = witness_flag_two_part(8).unwrap();
        assert_eq!(f.dims(), vec![1, 2]);
        let mut v5 = vec![Rational::zero(); 8];
        v5[4] = Rational::one();
        assert!(f.spaces()[0].contains(&v5));
        assert_eq!(witness_flag_two_part(9).unwrap().dims(), vec![2]);
        assert!(witness_flag_two_part(3).is_err());
        for n in [4, 5, 8, 9] {
            let lambda = two_part_partition(n).unwrap();
            let h = flag_stabilizer(&witness_flag_two_part(n).unwrap(), AlgebraKind::sl(n)).unwrap();
            let r = check_pair(&lambda, &h, AlgebraKind::sl(n)).unwrap();
            assert!(r.is_strange_pair, "n={n}: {r:?}");
        }
    }

    #[test]
    fn sl9_three_part_example() {
        assert_eq!(three_part_partition(9).unwrap(), p("5,2,2"));
        let f = witness_flag_three_part(9).unwrap();
        assert_eq!(f.composition().blocks(), &[1, 2, 6]);
        let kind = AlgebraKind::sl(9);
        let h = flag_stabilizer(&f, kind).unwrap();
        assert_eq!(h.dim(), 60);
        assert_eq!(orbit_dim(&p("5,2,2")), 60);
        let r = check_pair(&p("5,2,2"), &h, kind).unwrap();
        assert!(r.is_strange_pair && r.h_is_subalgebra);
    }

    #[test]
    fn three_part_partitions() {
        assert_eq!(three_part_partition(7).unwrap(), p("5,1,1"));
        assert_eq!(three_part_partition(8).unwrap(), p("5,2,1"));
        assert_eq!(three_part_partition(6).unwrap(), p("4,1,1"));
        assert!(three_part_partition(5).is_err());
        assert!(witness_flag_three_part(4).is_err());
    }
}
