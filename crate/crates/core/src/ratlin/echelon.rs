use num_traits::Zero;

use super::{echelon_rows, Rational};

/// Reduced echelon basis held sparsely, for repeated membership tests.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ambient_dim: usize,
    // (pivot column, nonzero entries) with the pivot entry equal to one.
    rows: Vec<(usize, Vec<(usize, Rational)>)>,
}

impl EchelonBasis {
    pub fn new(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        let rows = if vectors.is_empty() {
            Vec::new()
        } else {
            echelon_rows(vectors, ambient_dim)
        };
        let rows = rows
            .into_iter()
            .map(|row| {
                let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero echelon row");
                let sparse = row
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect();
                (pivot, sparse)
            })
            .collect();
        Self { ambient_dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &mut [Rational]) {
        assert_eq!(v.len(), self.ambient_dim);
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let c = v[*pivot].clone();
            for (j, x) in row {
                v[*j] -= &c * x;
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self.rows.iter().map(|(p, _)| v[*p].clone()).collect();
        let mut w = v.to_vec();
        for ((_, row), c) in self.rows.iter().zip(&coords) {
            if c.is_zero() {
                continue;
            }
            for (j, x) in row {
                w[*j] -= c * x;
            }
        }
        w.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|(_, row)| {
                let mut v = vec![Rational::zero(); self.ambient_dim];
                for (j, x) in row {
                    v[*j] = x.clone();
                }
                v
            })
            .collect()
    }
}
