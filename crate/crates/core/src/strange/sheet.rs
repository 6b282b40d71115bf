//! Sampling the Slodowy slice `e + g^f` and re-testing the complement there.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{centralizer_basis, sl2_triple, SubalgebraBasis};
use crate::partitions::Partition;
use crate::ratlin::{poly, rat, RatMatrix, SeededRng};
use crate::strange::pair::ab_from_bases;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SheetReport {
    pub samples: usize,
    pub samples_ok: usize,
    /// Samples that failed on the first draw and passed on the resample.
    pub resampled: usize,
    pub regular_semisimple_hit: bool,
}

/// `g^z ∩ h = 0` together with `dim h + dim g^z = dim g`.
pub fn complements_at(z: &RatMatrix, h: &SubalgebraBasis) -> Result<bool> {
    let kind = h.kind();
    let stab = centralizer_basis(z, kind)?;
    Ok(ab_from_bases(kind.dim(), &stab, h) == (0, 0))
}

/// `g^z ∩ h = 0`.
pub fn meets_trivially(z: &RatMatrix, h: &SubalgebraBasis) -> Result<bool> {
    let kind = h.kind();
    let stab = centralizer_basis(z, kind)?;
    Ok(ab_from_bases(kind.dim(), &stab, h).1 == 0)
}

/// Distinct eigenvalues: the characteristic polynomial is squarefree.
pub fn is_regular_semisimple(z: &RatMatrix) -> bool {
    poly::is_squarefree(&poly::char_poly(z))
}

/// `e_{n,1} + ẽ` for the regular nilpotent `ẽ`: a regular semisimple point of
/// the slice through the principal orbit.
pub fn principal_slice_point(n: usize) -> RatMatrix {
    let mut z = crate::lie::jordan_nilpotent(&Partition::principal(n));
    z[(n - 1, 0)] = rat(1);
    z
}

/// Draws `z = e + sum c_i b_i` over a basis `b_i` of `g^f` with integer
/// coefficients in `[-height, height]` and tests `g^z ∩ h = 0`. A sample that
/// fails is redrawn once.
pub fn sheet_check(
    lambda: &Partition,
    h: &SubalgebraBasis,
    samples: usize,
    height: u64,
    rng: &SeededRng,
) -> Result<SheetReport> {
    if lambda.n() != h.n() {
        return Err(Error::AmbientMismatch {
            left: lambda.n(),
            right: h.n(),
        });
    }
    let triple = sl2_triple(lambda);
    let slice = centralizer_basis(&triple.f, h.kind())?;
    let draw = |r: &mut SeededRng| {
        let mut z = triple.e.clone();
        for b in slice.mats() {
            let c = rat(r.int_in(height));
            z = &z + &b.scale(&c);
        }
        z
    };
    let mut report = SheetReport {
        samples,
        samples_ok: 0,
        resampled: 0,
        regular_semisimple_hit: false,
    };
    for i in 0..samples {
        for attempt in 0..2u64 {
            let z = draw(&mut rng.fork_path(&[i as u64, attempt]));
            if meets_trivially(&z, h)? {
                report.samples_ok += 1;
                report.resampled += attempt as usize;
                report.regular_semisimple_hit |= is_regular_semisimple(&z);
                break;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{jordan_nilpotent, AlgebraKind};
    use crate::strange::{flag_stabilizer, witness_fig1, witness_flag_two_part};

    #[test]
    fn principal_slice_point_is_regular_semisimple() {
        for n in 2..=6 {
            let z = principal_slice_point(n);
            assert!(is_regular_semisimple(&z));
            assert!(complements_at(&z, &witness_fig1(n, 1).unwrap()).unwrap());
        }
        assert!(!is_regular_semisimple(&jordan_nilpotent(&Partition::principal(3))));
    }

    #[test]
    fn nilpotent_point_itself() {
        let n = 4;
        let e = jordan_nilpotent(&Partition::principal(n));
        assert!(complements_at(&e, &witness_fig1(n, 1).unwrap()).unwrap());
    }

    #[test]
    fn two_part_flag_propagates() {
        let lambda: Partition = "3,1".parse().unwrap();
        let h = flag_stabilizer(&witness_flag_two_part(4).unwrap(), AlgebraKind::sl(4)).unwrap();
        let r = sheet_check(&lambda, &h, 20, 10, &SeededRng::new(1)).unwrap();
        assert_eq!(r.samples_ok, 20);
    }

    #[test]
    fn principal_samples() {
        let n = 5;
        let r = sheet_check(&Partition::principal(n), &witness_fig1(n, 1).unwrap(), 20, 10, &SeededRng::new(2))
            .unwrap();
        assert_eq!(r.samples_ok, 20);
        assert!(r.regular_semisimple_hit);
    }
}
