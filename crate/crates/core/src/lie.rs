//! `gl_n` and `sl_n` as concrete matrix Lie algebras: brackets, centralizers,
//! sl2-triples, the Kirillov form and a Monte-Carlo index.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::ratlin::{self, rat, EchelonBasis, RatMatrix, Rational, SeededRng, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "GL")]
    Gl,
    #[serde(rename = "SL")]
    Sl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraKind {
    pub family: Family,
    pub n: usize,
}

impl AlgebraKind {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("matrix size must be at least 2, got {n}")));
        }
        Ok(Self { family, n })
    }

    /// Panics if `n < 2`.
    pub fn gl(n: usize) -> Self {
        Self::new(Family::Gl, n).expect("n >= 2")
    }

    /// Panics if `n < 2`.
    pub fn sl(n: usize) -> Self {
        Self::new(Family::Sl, n).expect("n >= 2")
    }

    pub fn is_sl(&self) -> bool {
        self.family == Family::Sl
    }

    pub fn dim(&self) -> usize {
        match self.family {
            Family::Gl => self.n * self.n,
            Family::Sl => self.n * self.n - 1,
        }
    }

    pub fn with_family(&self, family: Family) -> Self {
        Self { family, n: self.n }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Gl => write!(f, "gl_{}", self.n),
            Family::Sl => write!(f, "sl_{}", self.n),
        }
    }
}

pub(crate) fn flatten(m: &RatMatrix) -> Vec<Rational> {
    m.entries().to_vec()
}

pub(crate) fn unflatten(n: usize, v: Vec<Rational>) -> RatMatrix {
    RatMatrix::from_entries(n, n, v).expect("vector of length n^2")
}

/// Indices of a maximal independent subset, scanning left to right.
fn independent_subset(n2: usize, vectors: &[Vec<Rational>]) -> Vec<usize> {
    if vectors.is_empty() {
        return Vec::new();
    }
    // Columns are the vectors; pivot columns of the echelon form are independent.
    let rows: Vec<Vec<Rational>> = (0..n2)
        .map(|i| vectors.iter().map(|v| v[i].clone()).collect())
        .collect();
    let ech = EchelonBasis::new(vectors.len(), &rows);
    ech.vectors()
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect()
}

/// A linearly independent list of `n x n` matrices spanning a Lie subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraBasis {
    kind: AlgebraKind,
    mats: Vec<RatMatrix>,
}

impl SubalgebraBasis {
    /// Checks shapes, independence and (for `sl_n`) tracelessness. Bracket
    /// closure is not checked; see [`SubalgebraBasis::closed`].
    pub fn new(kind: AlgebraKind, mats: Vec<RatMatrix>) -> Result<Self> {
        let n = kind.n;
        if let Some(m) = mats.iter().find(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Shape(format!(
                "expected {n}x{n} matrices, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        if kind.is_sl() && mats.iter().any(|m| !m.trace().is_zero()) {
            return Err(Error::Precondition("sl_n elements must be traceless".into()));
        }
        let flat: Vec<Vec<Rational>> = mats.iter().map(flatten).collect();
        if ratlin::rank_of_rows(&flat, n * n) != mats.len() {
            return Err(Error::DependentBasis);
        }
        Ok(Self { kind, mats })
    }

    /// Like [`SubalgebraBasis::new`], and also certifies closure under the bracket.
    pub fn closed(kind: AlgebraKind, mats: Vec<RatMatrix>) -> Result<Self> {
        let h = Self::new(kind, mats)?;
        if !h.is_closed() {
            return Err(Error::NotClosed);
        }
        Ok(h)
    }

    /// Keeps a maximal independent subset of a spanning list, in order.
    pub fn span(kind: AlgebraKind, mats: Vec<RatMatrix>) -> Result<Self> {
        let n2 = kind.n * kind.n;
        let flat: Vec<Vec<Rational>> = mats.iter().map(flatten).collect();
        let keep = independent_subset(n2, &flat);
        let picked = keep.into_iter().map(|i| mats[i].clone()).collect();
        Self::new(kind, picked)
    }

    pub(crate) fn from_parts_unchecked(kind: AlgebraKind, mats: Vec<RatMatrix>) -> Self {
        Self { kind, mats }
    }

    /// The whole of `gl_n` or `sl_n` in the matrix-unit basis (with
    /// `e_ii - e_{i+1,i+1}` for the diagonal of `sl_n`).
    pub fn full(kind: AlgebraKind) -> Self {
        let n = kind.n;
        let mut mats = Vec::with_capacity(kind.dim());
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    mats.push(RatMatrix::unit(n, i, j));
                }
            }
        }
        match kind.family {
            Family::Gl => mats.extend((0..n).map(|i| RatMatrix::unit(n, i, i))),
            Family::Sl => mats.extend((0..n - 1).map(|i| {
                &RatMatrix::unit(n, i, i) - &RatMatrix::unit(n, i + 1, i + 1)
            })),
        }
        Self { kind, mats }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.kind.n
    }

    pub fn dim(&self) -> usize {
        self.mats.len()
    }

    pub fn mats(&self) -> &[RatMatrix] {
        &self.mats
    }

    pub fn into_mats(self) -> Vec<RatMatrix> {
        self.mats
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::from_independent(self.n() * self.n(), self.mats.iter().map(flatten).collect())
            .expect("basis is independent")
    }

    pub fn echelon(&self) -> EchelonBasis {
        let flat: Vec<Vec<Rational>> = self.mats.iter().map(flatten).collect();
        EchelonBasis::new(self.n() * self.n(), &flat)
    }

    pub fn contains(&self, m: &RatMatrix) -> bool {
        self.echelon().contains(m.entries())
    }

    pub fn is_closed(&self) -> bool {
        let ech = self.echelon();
        let d = self.mats.len();
        (0..d).into_par_iter().all(|i| {
            ((i + 1)..d).all(|j| {
                let b = bracket_unchecked(&self.mats[i], &self.mats[j]);
                ech.contains(b.entries())
            })
        })
    }

    /// `(h + k I) ∩ sl_n`, i.e. the traceless projection of `h`.
    pub fn to_sl(&self) -> Self {
        let n = self.n();
        let n_rat = rat(n as i64);
        let projected: Vec<RatMatrix> = self
            .mats
            .iter()
            .map(|m| {
                let t = m.trace();
                if t.is_zero() {
                    m.clone()
                } else {
                    m - &RatMatrix::identity(n).scale(&(t / &n_rat))
                }
            })
            .collect();
        Self::span(self.kind.with_family(Family::Sl), projected).expect("traceless projections")
    }

    /// The same matrices regarded inside `gl_n`.
    pub fn as_gl(&self) -> Self {
        Self {
            kind: self.kind.with_family(Family::Gl),
            mats: self.mats.clone(),
        }
    }

    /// `g h g^{-1}`, given both `g` and its inverse.
    pub fn conjugate(&self, g: &RatMatrix, g_inv: &RatMatrix) -> Self {
        let mats = self.mats.par_iter().map(|m| &(g * m) * g_inv).collect();
        Self {
            kind: self.kind,
            mats,
        }
    }

    /// `[h, h]`.
    pub fn derived(&self) -> Self {
        let d = self.mats.len();
        let brackets: Vec<RatMatrix> = (0..d)
            .flat_map(|i| ((i + 1)..d).map(move |j| (i, j)))
            .map(|(i, j)| bracket_unchecked(&self.mats[i], &self.mats[j]))
            .filter(|b| !b.is_zero())
            .collect();
        Self::span(self.kind, brackets).expect("brackets are traceless for sl_n")
    }

    /// Dimensions along the derived series until it stabilizes.
    pub fn derived_series_dims(&self) -> Vec<usize> {
        let mut dims = vec![self.dim()];
        let mut cur = self.clone();
        loop {
            let next = cur.derived();
            let d = next.dim();
            if d == *dims.last().expect("nonempty") {
                break;
            }
            dims.push(d);
            if d == 0 {
                break;
            }
            cur = next;
        }
        dims
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series_dims().last() == Some(&0)
    }
}

fn check_square_pair(x: &RatMatrix, y: &RatMatrix) -> Result<()> {
    if !x.is_square() || !y.is_square() || x.rows() != y.rows() {
        return Err(Error::Shape(format!(
            "bracket needs equal square matrices, got {}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    Ok(())
}

fn bracket_unchecked(x: &RatMatrix, y: &RatMatrix) -> RatMatrix {
    &(x * y) - &(y * x)
}

/// `XY - YX`.
pub fn bracket(x: &RatMatrix, y: &RatMatrix) -> Result<RatMatrix> {
    check_square_pair(x, y)?;
    Ok(bracket_unchecked(x, y))
}

/// Whether the span of `mats` is closed under the bracket.
pub fn is_subalgebra(mats: &[RatMatrix]) -> Result<bool> {
    let Some(first) = mats.first() else {
        return Ok(true);
    };
    let n = first.rows();
    let kind = AlgebraKind::new(Family::Gl, n.max(2))?;
    if n < 2 {
        return Ok(true);
    }
    Ok(SubalgebraBasis::new(kind, mats.to_vec())?.is_closed())
}

/// Block-diagonal Jordan matrix with superdiagonal ones inside each block
/// (`x v_j = v_{j-1}`), blocks in the order of the parts.
pub fn jordan_nilpotent(lambda: &Partition) -> RatMatrix {
    let n = lambda.n();
    let mut e = RatMatrix::zeros(n, n);
    let mut start = 0;
    for &l in lambda.parts() {
        for i in start..start + l - 1 {
            e[(i, i + 1)] = Rational::one();
        }
        start += l;
    }
    e
}

/// Jordan matrix with the blocks in the given order (not necessarily decreasing).
pub fn jordan_from_blocks(blocks: &[usize]) -> RatMatrix {
    let n: usize = blocks.iter().sum();
    let mut e = RatMatrix::zeros(n, n);
    let mut start = 0;
    for &l in blocks {
        for i in start..start + l.saturating_sub(1) {
            e[(i, i + 1)] = Rational::one();
        }
        start += l;
    }
    e
}

/// Coefficient rows of the linear map `X -> XA - AX` on `n x n` matrices.
fn commutator_equations(a: &RatMatrix) -> Vec<Vec<Rational>> {
    let n = a.rows();
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // (XA - AX)_{ij} = sum_k X_{ik} A_{kj} - A_{ik} X_{kj}
            let mut row = vec![Rational::zero(); n * n];
            for k in 0..n {
                if !a[(k, j)].is_zero() {
                    row[i * n + k] += &a[(k, j)];
                }
                if !a[(i, k)].is_zero() {
                    row[k * n + j] -= &a[(i, k)];
                }
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    rows
}

fn trace_equation(n: usize) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); n * n];
    for i in 0..n {
        row[i * n + i] = Rational::one();
    }
    row
}

/// Basis of `{X : [X, e] = 0}`, intersected with `sl_n` when requested.
pub fn centralizer_basis(e: &RatMatrix, kind: AlgebraKind) -> Result<SubalgebraBasis> {
    let n = kind.n;
    if e.rows() != n || e.cols() != n {
        return Err(Error::Shape(format!("expected a {n}x{n} matrix")));
    }
    let mut rows = commutator_equations(e);
    if kind.is_sl() {
        rows.push(trace_equation(n));
    }
    let kernel = if rows.is_empty() {
        Subspace::full(n * n).into_basis()
    } else {
        ratlin::kernel_of_rows(&rows, n * n)
    };
    let mats = kernel.into_iter().map(|v| unflatten(n, v)).collect();
    Ok(SubalgebraBasis::from_parts_unchecked(kind, mats))
}

/// Standard sl2-triple through the Jordan matrix of `lambda`: per block of
/// size `l`, `h = diag(l-1, l-3, ..., 1-l)` and `f` has subdiagonal `i(l-i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: RatMatrix,
    pub h: RatMatrix,
    pub f: RatMatrix,
}

impl Sl2Triple {
    pub fn relations_hold(&self) -> bool {
        let two = rat(2);
        bracket_unchecked(&self.h, &self.e) == self.e.scale(&two)
            && bracket_unchecked(&self.h, &self.f) == self.f.scale(&-two)
            && bracket_unchecked(&self.e, &self.f) == self.h
    }
}

pub fn sl2_triple(lambda: &Partition) -> Sl2Triple {
    let n = lambda.n();
    let e = jordan_nilpotent(lambda);
    let mut h = RatMatrix::zeros(n, n);
    let mut f = RatMatrix::zeros(n, n);
    let mut start = 0;
    for &l in lambda.parts() {
        for i in 0..l {
            h[(start + i, start + i)] = rat(l as i64 - 1 - 2 * i as i64);
            if i + 1 < l {
                f[(start + i + 1, start + i)] = rat(((i + 1) * (l - 1 - i)) as i64);
            }
        }
        start += l;
    }
    Sl2Triple { e, h, f }
}

/// A linear form `y -> trace(xi_matrix * y)` on `gl_n` or `sl_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    pub kind: AlgebraKind,
    pub xi_matrix: RatMatrix,
}

impl Functional {
    pub fn new(kind: AlgebraKind, xi_matrix: RatMatrix) -> Result<Self> {
        if xi_matrix.rows() != kind.n || xi_matrix.cols() != kind.n {
            return Err(Error::Shape(format!("functional must be {0}x{0}", kind.n)));
        }
        Ok(Self { kind, xi_matrix })
    }

    pub fn eval(&self, y: &RatMatrix) -> Rational {
        self.xi_matrix.trace_product(y)
    }

    pub fn random(kind: AlgebraKind, height: u64, rng: &mut SeededRng) -> Self {
        let n = kind.n;
        let entries = (0..n * n).map(|_| rat(rng.int_in(height))).collect();
        Self {
            kind,
            xi_matrix: RatMatrix::from_entries(n, n, entries).expect("n^2 entries"),
        }
    }
}

/// Gram matrix of `(x, y) -> xi([x, y])` on the basis of `h`.
pub fn kirillov_form_matrix(h: &SubalgebraBasis, xi: &Functional) -> Result<RatMatrix> {
    if h.n() != xi.kind.n {
        return Err(Error::AmbientMismatch {
            left: h.n(),
            right: xi.kind.n,
        });
    }
    let d = h.dim();
    // xi([m_i, m_j]) = trace([xi, m_i] m_j)
    let twisted: Vec<RatMatrix> = h
        .mats()
        .par_iter()
        .map(|m| bracket_unchecked(&xi.xi_matrix, m))
        .collect();
    let rows: Vec<Vec<Rational>> = (0..d)
        .into_par_iter()
        .map(|i| {
            (0..d)
                .map(|j| {
                    if j == i {
                        Rational::zero()
                    } else {
                        twisted[i].trace_product(&h.mats()[j])
                    }
                })
                .collect()
        })
        .collect();
    if d == 0 {
        return Ok(RatMatrix::zeros(0, 0));
    }
    RatMatrix::from_rows(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexEstimate {
    /// `dim h - max rank`; an upper bound on the index, exact for a generic draw.
    pub upper_bound_on_index: usize,
    pub max_rank_seen: usize,
    pub dim: usize,
    pub trials_run: usize,
    pub ranks: Vec<usize>,
}

/// Monte-Carlo index of `h`: the smallest corank of the Kirillov form over
/// random integer functionals. Trial `i` draws from `rng.fork(i)`, so the
/// estimate for `t` trials is a prefix of the estimate for `t + 1`.
pub fn index_monte_carlo(
    h: &SubalgebraBasis,
    trials: usize,
    height: u64,
    rng: &SeededRng,
) -> Result<IndexEstimate> {
    if trials == 0 {
        return Err(Error::Precondition("at least one trial is required".into()));
    }
    if height == 0 {
        return Err(Error::Precondition("height must be at least 1".into()));
    }
    let d = h.dim();
    let ranks: Vec<usize> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut r = rng.fork(t as u64);
            let xi = Functional::random(h.kind(), height, &mut r);
            kirillov_form_matrix(h, &xi).map(|m| m.rank())
        })
        .collect::<Result<_>>()?;
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    Ok(IndexEstimate {
        upper_bound_on_index: d - max_rank,
        max_rank_seen: max_rank,
        dim: d,
        trials_run: trials,
        ranks,
    })
}

/// Stabilizer of a functional in the ambient algebra, i.e. the matrix
/// centralizer of `xi_matrix`.
pub fn centralizer_of_functional(xi: &Functional) -> Result<SubalgebraBasis> {
    centralizer_basis(&xi.xi_matrix, xi.kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn bracket_examples() {
        let x = RatMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        assert!(bracket(&x, &x).unwrap().is_zero());
        let e12 = RatMatrix::unit(2, 0, 1);
        let e21 = RatMatrix::unit(2, 1, 0);
        let expected = RatMatrix::from_i64_rows(&[&[1, 0], &[0, -1]]);
        assert_eq!(bracket(&e12, &e21).unwrap(), expected);
        let t = sl2_triple(&p("2"));
        assert_eq!(bracket(&t.h, &t.e).unwrap(), t.e.scale(&rat(2)));
        assert!(bracket(&x, &RatMatrix::identity(3)).is_err());
    }

    #[test]
    fn subalgebra_examples() {
        assert!(is_subalgebra(SubalgebraBasis::full(AlgebraKind::gl(2)).mats()).unwrap());
        let pair = [RatMatrix::unit(2, 0, 1), RatMatrix::unit(2, 1, 0)];
        assert!(!is_subalgebra(&pair).unwrap());
        let dependent = [RatMatrix::unit(2, 0, 1), RatMatrix::unit(2, 0, 1).scale(&rat(3))];
        assert_eq!(is_subalgebra(&dependent), Err(Error::DependentBasis));
    }

    #[test]
    fn jordan_examples() {
        assert!(jordan_nilpotent(&Partition::trivial(4)).is_zero());
        let e = jordan_nilpotent(&p("5"));
        for i in 0..4 {
            assert_eq!(e[(i, i + 1)], rat(1));
        }
        assert_eq!(e.rank(), 4);
        assert_eq!(jordan_nilpotent(&p("2,2,1")).rank(), 2);
    }

    #[test]
    fn centralizer_examples() {
        let gl3 = AlgebraKind::gl(3);
        assert_eq!(centralizer_basis(&RatMatrix::zeros(3, 3), gl3).unwrap().dim(), 9);
        let c = centralizer_basis(&jordan_nilpotent(&p("5,2,2")), AlgebraKind::sl(9)).unwrap();
        assert_eq!(c.dim(), 20);
        // principal nilpotent: span of powers
        let n = 5;
        let e = jordan_nilpotent(&Partition::principal(n));
        let c = centralizer_basis(&e, AlgebraKind::gl(n)).unwrap();
        assert_eq!(c.dim(), n);
        for k in 0..n as u32 {
            assert!(c.contains(&e.pow(k)));
        }
        assert_eq!(
            centralizer_basis(&jordan_nilpotent(&p("2,1")), gl3).unwrap().dim(),
            5
        );
    }

    #[test]
    fn sl2_examples() {
        let t = sl2_triple(&p("2"));
        assert_eq!(t.e, RatMatrix::unit(2, 0, 1));
        assert_eq!(t.h, RatMatrix::from_i64_rows(&[&[1, 0], &[0, -1]]));
        assert_eq!(t.f, RatMatrix::unit(2, 1, 0));
        let t3 = sl2_triple(&p("3"));
        assert_eq!(t3.f[(1, 0)], rat(2));
        assert_eq!(t3.f[(2, 1)], rat(2));
        assert!(t3.relations_hold());
        assert!(sl2_triple(&p("3,2")).relations_hold());
    }

    #[test]
    fn kirillov_examples() {
        let b = crate::seaweed::borel(AlgebraKind::sl(2));
        let zero = Functional::new(AlgebraKind::sl(2), RatMatrix::zeros(2, 2)).unwrap();
        assert!(kirillov_form_matrix(&b, &zero).unwrap().is_zero());
        let diag = SubalgebraBasis::new(
            AlgebraKind::gl(3),
            (0..3).map(|i| RatMatrix::unit(3, i, i)).collect(),
        )
        .unwrap();
        let xi = Functional::random(AlgebraKind::gl(3), 10, &mut SeededRng::new(1));
        assert!(kirillov_form_matrix(&diag, &xi).unwrap().is_zero());
        let est = index_monte_carlo(&b, 8, 10, &SeededRng::new(1)).unwrap();
        assert_eq!(est.max_rank_seen, 2);
        assert_eq!(est.upper_bound_on_index, 0);
    }

    #[test]
    fn kirillov_is_antisymmetric() {
        let h = SubalgebraBasis::full(AlgebraKind::gl(3));
        let xi = Functional::random(AlgebraKind::gl(3), 10, &mut SeededRng::new(9));
        let m = kirillov_form_matrix(&h, &xi).unwrap();
        assert_eq!(m.transpose(), -&m);
        assert_eq!(m.rank() % 2, 0);
    }

    #[test]
    fn full_sl_index_is_rank() {
        for n in 2..=4 {
            let est = index_monte_carlo(
                &SubalgebraBasis::full(AlgebraKind::sl(n)),
                4,
                10,
                &SeededRng::new(1),
            )
            .unwrap();
            assert_eq!(est.upper_bound_on_index, n - 1);
        }
    }

    #[test]
    fn functional_centralizers() {
        let gl = AlgebraKind::gl(4);
        let id = Functional::new(gl, RatMatrix::identity(4)).unwrap();
        assert_eq!(centralizer_of_functional(&id).unwrap().dim(), 16);
        let d = RatMatrix::diagonal(&[rat(1), rat(2), rat(3), rat(4)]);
        let c = centralizer_of_functional(&Functional::new(gl, d).unwrap()).unwrap();
        assert_eq!(c.dim(), 4);
        let mut z = jordan_nilpotent(&Partition::principal(4));
        z[(3, 0)] = rat(1);
        assert_eq!(centralizer_of_functional(&Functional::new(gl, z).unwrap()).unwrap().dim(), 4);
    }

    #[test]
    fn index_trials_are_monotone() {
        let b = crate::seaweed::borel(AlgebraKind::sl(5));
        let mut prev = usize::MAX;
        for t in 1..=6 {
            let est = index_monte_carlo(&b, t, 2, &SeededRng::new(3)).unwrap();
            assert!(est.upper_bound_on_index <= prev);
            prev = est.upper_bound_on_index;
        }
    }

    #[test]
    fn sl_conversion_adds_identity_direction() {
        // The subalgebra with zero first row in gl_3 has dim 6; its sl-version also has dim 6.
        let n = 3;
        let mats: Vec<RatMatrix> = (1..n)
            .flat_map(|i| (0..n).map(move |j| RatMatrix::unit(n, i, j)))
            .collect();
        let h = SubalgebraBasis::closed(AlgebraKind::gl(n), mats).unwrap();
        let s = h.to_sl();
        assert_eq!(s.dim(), 6);
        assert!(s.is_closed());
        assert!(s.mats().iter().all(|m| m.trace().is_zero()));
    }

    #[test]
    fn solvability() {
        assert!(crate::seaweed::borel(AlgebraKind::gl(4)).is_solvable());
        assert!(!SubalgebraBasis::full(AlgebraKind::sl(2)).is_solvable());
    }
}
