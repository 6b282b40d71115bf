//! Dense univariate polynomials over the rationals, coefficients low degree first.

use num_traits::{One, Zero};

use super::{rat, RatMatrix, Rational};

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Characteristic polynomial `det(tI - M)` by Faddeev–LeVerrier.
pub fn char_poly(m: &RatMatrix) -> Vec<Rational> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut acc = RatMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m * &acc;
        let c = &coeffs[n - k + 1];
        for i in 0..n {
            next[(i, i)] += c;
        }
        coeffs[n - k] = -(m.trace_product(&next)) / rat(k as i64);
        acc = next;
    }
    coeffs
}

pub fn derivative(p: &[Rational]) -> Vec<Rational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * rat(i as i64))
        .collect()
}

fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let b = trim(b.to_vec());
    let lead = b.last().expect("division by the zero polynomial").clone();
    let mut r = trim(a.to_vec());
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let q = r.last().expect("nonempty") / &lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &q * c;
        }
        r = trim(r);
    }
    r
}

/// Monic greatest common divisor.
pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in &mut a {
            *c /= &lead;
        }
    }
    a
}

/// No repeated roots over an algebraic closure.
pub fn is_squarefree(p: &[Rational]) -> bool {
    let p = trim(p.to_vec());
    if p.len() <= 2 {
        return true;
    }
    gcd(&p, &derivative(&p)).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn char_poly_examples() {
        let m = RatMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        // t^2 - 5t - 2
        assert_eq!(char_poly(&m), ints(&[-2, -5, 1]));
        let d = RatMatrix::diagonal(&ints(&[1, 2, 3]));
        assert_eq!(char_poly(&d), ints(&[-6, 11, -6, 1]));
        assert_eq!(char_poly(&RatMatrix::zeros(3, 3)), ints(&[0, 0, 0, 1]));
    }

    #[test]
    fn squarefree_examples() {
        assert!(is_squarefree(&ints(&[-6, 11, -6, 1])));
        assert!(!is_squarefree(&ints(&[0, 0, 1])));
        // (t-1)^2 (t+2)
        assert!(!is_squarefree(&ints(&[2, -3, 0, 1])));
        assert_eq!(gcd(&ints(&[-1, 0, 1]), &ints(&[1, 1])), ints(&[1, 1]));
    }
}
