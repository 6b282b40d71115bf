//! Exact rational linear algebra: rank, kernels, subspace sums and
//! intersections, and seeded integer sampling.

mod echelon;
mod elim;
mod matrix;
pub mod poly;
mod rng;
mod subspace;

pub use echelon::EchelonBasis;
pub use matrix::RatMatrix;
pub use rng::{derive_seed, SeededRng};
pub use subspace::Subspace;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    rank_of_rows(&m.row_vecs(), m.cols())
}

pub(crate) fn rank_of_rows(rows: &[Vec<Rational>], cols: usize) -> usize {
    elim::rank_of_integer_rows(elim::integer_rows(rows), cols)
}

/// Basis of `{v : M v = 0}`, one vector per free column of the reduced echelon form.
pub fn kernel_basis(m: &RatMatrix) -> Subspace {
    let vectors = kernel_of_rows(&m.row_vecs(), m.cols());
    Subspace::from_independent_unchecked(m.cols(), vectors)
}

pub(crate) fn kernel_of_rows(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    elim::rref_of_integer_rows(elim::integer_rows(rows), cols).kernel()
}

/// Reduced echelon rows (pivot entries equal to one) spanning the same row space.
pub(crate) fn echelon_rows(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    elim::rref_of_integer_rows(elim::integer_rows(rows), cols).normalized_rows()
}

/// Some solution of `M x = b`, if one exists.
pub fn solve(m: &RatMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != m.rows() {
        return Err(Error::Shape(format!(
            "right-hand side has {} entries, matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    let cols = m.cols();
    let rows: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(-b[i].clone());
            row
        })
        .collect();
    let rref = elim::rref_of_integer_rows(elim::integer_rows(&rows), cols + 1);
    if rref.pivots.contains(&cols) {
        return Ok(None);
    }
    // The kernel vector for the augmented column has last coordinate one.
    let kernel = rref.kernel();
    let v = kernel
        .into_iter()
        .find(|v| v[cols] == num_traits::One::one())
        .expect("augmented column is free");
    Ok(Some(v[..cols].to_vec()))
}

/// Integer column vector with entries uniform in `[-height, height]`.
pub fn random_vector(dim: usize, height: u64, rng: &mut SeededRng) -> Result<RatMatrix> {
    if height == 0 {
        return Err(Error::Precondition("height must be at least 1".into()));
    }
    let entries = (0..dim).map(|_| rat(rng.int_in(height))).collect();
    Ok(RatMatrix::column(entries))
}

/// `dim(A + B)`.
pub fn sum_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    a.check_ambient(b)?;
    let rows: Vec<Vec<Rational>> = a.basis().iter().chain(b.basis()).cloned().collect();
    Ok(rank_of_rows(&rows, a.ambient_dim()))
}

/// Basis of `A ∩ B`, obtained from the kernel of `[A | -B]`.
pub fn intersection_basis(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.check_ambient(b)?;
    let n = a.ambient_dim();
    let (da, db) = (a.dim(), b.dim());
    if da == 0 || db == 0 {
        return Ok(Subspace::zero(n));
    }
    // Rows of the coefficient system: one equation per ambient coordinate.
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            a.basis()
                .iter()
                .map(|v| v[i].clone())
                .chain(b.basis().iter().map(|v| -v[i].clone()))
                .collect()
        })
        .collect();
    let coeffs = kernel_of_rows(&rows, da + db);
    let vectors = coeffs
        .into_iter()
        .map(|c| {
            let mut v = vec![Rational::from_integer(0.into()); n];
            for (ci, basis_vec) in c[..da].iter().zip(a.basis()) {
                if num_traits::Zero::is_zero(ci) {
                    continue;
                }
                for (vi, bi) in v.iter_mut().zip(basis_vec) {
                    *vi += ci * bi;
                }
            }
            v
        })
        .collect();
    Ok(Subspace::from_independent_unchecked(n, vectors))
}

/// Dimension of `A ∩ B` from the rank identity, without building a basis.
pub fn intersection_dim(a: &Subspace, b: &Subspace) -> Result<usize> {
    Ok(a.dim() + b.dim() - sum_dim(a, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::identity(3)), 3);
        assert_eq!(rank(&RatMatrix::from_i64_rows(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&RatMatrix::zeros(3, 4)), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let m = RatMatrix::from_rows(vec![
            vec![frac(1, 2), frac(1, 3)],
            vec![frac(3, 2), rat(1)],
        ])
        .unwrap();
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&RatMatrix::identity(4)).dim(), 0);
        assert_eq!(kernel_basis(&RatMatrix::zeros(2, 3)).dim(), 3);
    }

    #[test]
    fn sum_and_intersection_examples() {
        let line_x = Subspace::span(2, vec![vec![rat(1), rat(0)]]);
        let line_y = Subspace::span(2, vec![vec![rat(1), rat(1)]]);
        assert_eq!(sum_dim(&line_x, &line_y).unwrap(), 2);
        assert_eq!(intersection_basis(&line_x, &line_y).unwrap().dim(), 0);
        assert_eq!(sum_dim(&line_x, &line_x).unwrap(), 1);
        let same = intersection_basis(&line_x, &line_x).unwrap();
        assert_eq!(same.dim(), 1);
        assert!(line_x.contains(&same.basis()[0]));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(matches!(sum_dim(&a, &b), Err(Error::AmbientMismatch { .. })));
        assert!(intersection_basis(&a, &b).is_err());
    }

    #[test]
    fn random_vector_precondition_and_determinism() {
        let mut rng = SeededRng::new(7);
        assert!(random_vector(3, 0, &mut rng).is_err());
        let a = random_vector(5, 10, &mut SeededRng::new(3)).unwrap();
        let b = random_vector(5, 10, &mut SeededRng::new(3)).unwrap();
        assert_eq!(a, b);
        assert!(a
            .entries()
            .iter()
            .all(|x| x.is_integer() && x.numer().magnitude() <= &10u32.into()));
    }

    #[test]
    fn solve_finds_preimage() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2, 0], &[0, 1, 1]]);
        let b = vec![rat(3), rat(2)];
        let x = solve(&m, &b).unwrap().unwrap();
        let mx = &m * &RatMatrix::column(x);
        assert_eq!(mx.col_vec(0), b);
        let singular = RatMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert!(solve(&singular, &[rat(1), rat(2)]).unwrap().is_none());
    }

    fn small_matrix(max_dim: usize) -> impl Strategy<Value = RatMatrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                RatMatrix::from_entries(r, c, v.into_iter().map(rat).collect()).unwrap()
            })
        })
    }

    fn random_subspace(n: usize, k: usize, rng: &mut SeededRng) -> Subspace {
        let vecs = (0..k)
            .map(|_| {
                // Sparse-ish vectors so that nontrivial intersections actually occur.
                (0..n)
                    .map(|_| if rng.int_in(1) == 0 { rat(rng.int_in(2)) } else { rat(0) })
                    .collect()
            })
            .collect();
        Subspace::span(n, vecs)
    }

    proptest! {
        #[test]
        fn rank_equals_rank_of_transpose(m in small_matrix(7)) {
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in small_matrix(7)) {
            let k = kernel_basis(&m);
            prop_assert_eq!(k.dim() + rank(&m), m.cols());
            for v in k.basis() {
                let mv = &m * &RatMatrix::column(v.clone());
                prop_assert!(mv.is_zero());
            }
        }

        #[test]
        fn resolving_recovers_column_space_points(m in small_matrix(6), seed in 0u64..1000) {
            let mut rng = SeededRng::new(seed);
            let v = random_vector(m.cols(), 5, &mut rng).unwrap();
            let b = (&m * &v).col_vec(0);
            let x = solve(&m, &b).unwrap();
            prop_assert!(x.is_some());
            let mx = &m * &RatMatrix::column(x.unwrap());
            prop_assert_eq!(mx.col_vec(0), b);
        }
    }

    #[test]
    fn dimension_identity_on_random_subspaces() {
        let mut rng = SeededRng::new(2024);
        for trial in 0..100 {
            let n = 1 + (trial % 10);
            let ka = rng.index(n + 1);
            let kb = rng.index(n + 1);
            let a = random_subspace(n, ka, &mut rng);
            let b = random_subspace(n, kb, &mut rng);
            let cap = intersection_basis(&a, &b).unwrap();
            let sum = sum_dim(&a, &b).unwrap();
            assert_eq!(cap.dim() + sum, a.dim() + b.dim());
            for v in cap.basis() {
                assert!(a.contains(v) && b.contains(v));
                assert!(!v.iter().all(Zero::is_zero));
            }
        }
    }
}
