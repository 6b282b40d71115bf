use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{centralizer_basis, jordan_nilpotent, AlgebraKind, Functional, SubalgebraBasis};
use crate::partitions::{orbit_dim, Partition};
use crate::ratlin::{rank_of_rows, RatMatrix, Rational};

/// Dimension census of `g^xi` against a candidate complement `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub dim_g: usize,
    pub dim_orbit: usize,
    pub dim_h: usize,
    /// `codim(g^xi + h)`.
    pub a: usize,
    /// `dim(g^xi ∩ h)`.
    pub b: usize,
    pub is_strange_pair: bool,
    pub h_is_subalgebra: bool,
}

/// `dim span(a ∪ b)` for two lists of `n x n` matrices.
pub(crate) fn span_dim(n: usize, a: &[RatMatrix], b: &[RatMatrix]) -> usize {
    let rows: Vec<Vec<Rational>> = a.iter().chain(b).map(|m| m.entries().to_vec()).collect();
    if rows.is_empty() {
        return 0;
    }
    rank_of_rows(&rows, n * n)
}

/// `(a, b)` for a stabilizer `g^xi` and `h`, both given by bases.
pub(crate) fn ab_from_bases(dim_g: usize, stab: &SubalgebraBasis, h: &SubalgebraBasis) -> (usize, usize) {
    let sum = span_dim(h.n(), stab.mats(), h.mats());
    (dim_g - sum, stab.dim() + h.dim() - sum)
}

fn check_same_algebra(left: AlgebraKind, right: AlgebraKind) -> Result<()> {
    if left.n != right.n {
        return Err(Error::AmbientMismatch {
            left: left.n,
            right: right.n,
        });
    }
    if left.family != right.family {
        return Err(Error::Precondition(format!("{left} and {right} are different algebras")));
    }
    Ok(())
}

/// `a = codim(g^xi + h)` and `b = dim(g^xi ∩ h)`.
pub fn ab_invariants(xi: &Functional, h: &SubalgebraBasis) -> Result<(usize, usize)> {
    check_same_algebra(xi.kind, h.kind())?;
    let stab = centralizer_basis(&xi.xi_matrix, xi.kind)?;
    Ok(ab_from_bases(xi.kind.dim(), &stab, h))
}

/// Checks `g^e ⊕ h = g` for an arbitrary nilpotent `e` in the orbit of dimension `dim_orbit`.
pub fn check_pair_at(e: &RatMatrix, dim_orbit: usize, h: &SubalgebraBasis, kind: AlgebraKind) -> Result<PairReport> {
    check_same_algebra(kind, h.kind())?;
    let stab = centralizer_basis(e, kind)?;
    let (a, b) = ab_from_bases(kind.dim(), &stab, h);
    Ok(PairReport {
        dim_g: kind.dim(),
        dim_orbit,
        dim_h: h.dim(),
        a,
        b,
        is_strange_pair: a == 0 && b == 0 && h.dim() == dim_orbit,
        h_is_subalgebra: h.is_closed(),
    })
}

/// Checks `g^e ⊕ h = g` at the Jordan matrix `e` of `lambda`. Bracket closure
/// is reported in `h_is_subalgebra` and does not enter `is_strange_pair`.
pub fn check_pair(lambda: &Partition, h: &SubalgebraBasis, kind: AlgebraKind) -> Result<PairReport> {
    if lambda.n() != kind.n {
        return Err(Error::AmbientMismatch {
            left: lambda.n(),
            right: kind.n,
        });
    }
    check_pair_at(&jordan_nilpotent(lambda), orbit_dim(lambda), h, kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Family;
    use crate::ratlin::SeededRng;
    use crate::seaweed::borel;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn full_algebra_has_a_zero() {
        let kind = AlgebraKind::sl(4);
        let e = jordan_nilpotent(&p("2,2"));
        let xi = Functional::new(kind, e.clone()).unwrap();
        let (a, b) = ab_invariants(&xi, &SubalgebraBasis::full(kind)).unwrap();
        assert_eq!(a, 0);
        assert_eq!(b, centralizer_basis(&e, kind).unwrap().dim());
    }

    #[test]
    fn borel_parity() {
        let kind = AlgebraKind::sl(3);
        let xi = Functional::new(kind, jordan_nilpotent(&p("3"))).unwrap();
        let h = borel(kind);
        let (a, b) = ab_invariants(&xi, &h).unwrap();
        assert!(a + b >= 1);
        assert_eq!((a + b) % 2, h.dim() % 2);
    }

    #[test]
    fn full_sl_is_not_a_complement() {
        let kind = AlgebraKind::sl(5);
        let r = check_pair(&p("2,2,1"), &SubalgebraBasis::full(kind), kind).unwrap();
        assert!(r.b > 0);
        assert!(!r.is_strange_pair);
        assert!(r.h_is_subalgebra);
    }

    #[test]
    fn mismatches_are_errors() {
        let xi = Functional::random(AlgebraKind::gl(3), 5, &mut SeededRng::new(1));
        assert!(ab_invariants(&xi, &borel(AlgebraKind::gl(4))).is_err());
        assert!(ab_invariants(&xi, &borel(AlgebraKind::new(Family::Sl, 3).unwrap())).is_err());
        assert!(check_pair(&p("3,1"), &borel(AlgebraKind::sl(3)), AlgebraKind::sl(3)).is_err());
    }
}
