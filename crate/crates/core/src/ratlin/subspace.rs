use super::{echelon_rows, rank_of_rows, Rational};
use crate::error::{Error, Result};

/// A linear subspace of `Q^ambient_dim`, held as a list of independent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                (0..ambient_dim)
                    .map(|j| super::rat(i64::from(i == j)))
                    .collect()
            })
            .collect();
        Self { ambient_dim, basis }
    }

    /// Span of arbitrary vectors; the stored basis is the reduced echelon form.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "vector length must equal ambient dimension");
        }
        let basis = if vectors.is_empty() {
            Vec::new()
        } else {
            echelon_rows(&vectors, ambient_dim)
        };
        Self { ambient_dim, basis }
    }

    /// Keeps the given vectors as the basis after checking they are independent.
    pub fn from_independent(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient_dim) {
            return Err(Error::Shape("vector length must equal ambient dimension".into()));
        }
        if rank_of_rows(&vectors, ambient_dim) != vectors.len() {
            return Err(Error::DependentBasis);
        }
        Ok(Self {
            ambient_dim,
            basis: vectors,
        })
    }

    pub(crate) fn from_independent_unchecked(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Self {
        Self { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<Rational>> {
        self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        if v.iter().all(num_traits::Zero::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rank_of_rows(&rows, self.ambient_dim) == self.basis.len()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        if other.ambient_dim != self.ambient_dim {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        rank_of_rows(&rows, self.ambient_dim) == self.basis.len()
    }

    pub(crate) fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Row vectors whose common kernel is exactly this subspace.
    pub fn annihilator(&self) -> Vec<Vec<Rational>> {
        super::kernel_of_rows(&self.basis, self.ambient_dim)
    }
}
