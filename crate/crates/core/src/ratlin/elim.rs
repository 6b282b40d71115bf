//! Integer elimination kernels.
//!
//! Every routine runs first on `i128` with checked arithmetic and falls back to
//! `BigInt` when an intermediate value overflows. Rational inputs are brought to
//! integer rows by clearing denominators row by row, which does not change the
//! row space.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

pub(crate) trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn div_exact(&self, other: &Self) -> Option<Self>;
    fn abs_lt(&self, other: &Self) -> bool;
    fn gcd(&self, other: &Self) -> Self;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        debug_assert!(self.checked_rem(*other) == Some(0));
        self.checked_div(*other)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        debug_assert!(Zero::is_zero(&(self % other)));
        Some(self / other)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Clears denominators row by row. Returns integer rows spanning the same row space.
pub(crate) fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(<BigInt as One>::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect()
}

fn to_small(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    let limit = BigInt::from(i64::MAX);
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    if x.magnitude() > limit.magnitude() {
                        None
                    } else {
                        x.to_i128()
                    }
                })
                .collect()
        })
        .collect()
}

fn pick_pivot<S: Scalar>(a: &[Vec<S>], from: usize, col: usize) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, row) in a.iter().enumerate().skip(from) {
        if row[col].is_zero() {
            continue;
        }
        match best {
            None => best = Some(i),
            Some(b) if row[col].abs_lt(&a[b][col]) => best = Some(i),
            _ => {}
        }
    }
    best
}

/// Fraction-free (Bareiss) row echelon form; returns the rank or `None` on overflow.
fn bareiss_rank<S: Scalar>(mut a: Vec<Vec<S>>, cols: usize) -> Option<usize> {
    let rows = a.len();
    let mut prev = S::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = pick_pivot(&a, r, c) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let factor = row[c].clone();
            for j in (c + 1)..cols {
                let lhs = pivot.mul(&row[j])?;
                let rhs = if factor.is_zero() {
                    S::zero()
                } else {
                    factor.mul(&pivot_row[j])?
                };
                row[j] = lhs.sub(&rhs)?.div_exact(&prev)?;
            }
            row[c] = S::zero();
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

pub(crate) fn rank_of_integer_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    if let Some(small) = to_small(&rows) {
        if let Some(r) = bareiss_rank(small, cols) {
            return r;
        }
    }
    bareiss_rank(rows, cols).expect("bigint arithmetic cannot overflow")
}

/// Reduced row echelon form over the integers, with each row divided by its content.
pub(crate) struct Rref {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

fn normalize_row<S: Scalar>(row: &mut [S]) -> Option<()> {
    let mut g = S::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if g.is_zero() {
        return Some(());
    }
    // Leading nonzero entry positive.
    let lead_neg = row.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false);
    let g = if lead_neg { g.neg()? } else { g };
    if g != S::one() {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x = x.div_exact(&g)?;
            }
        }
    }
    Some(())
}

fn rref_generic<S: Scalar>(mut a: Vec<Vec<S>>, cols: usize) -> Option<(Vec<Vec<S>>, Vec<usize>)> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = pick_pivot(&a, r, c) else {
            continue;
        };
        a.swap(r, p);
        normalize_row(&mut a[r])?;
        let pivot_row = a[r].clone();
        let pivot = pivot_row[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for j in 0..cols {
                let lhs = if row[j].is_zero() { S::zero() } else { pivot.mul(&row[j])? };
                let rhs = if pivot_row[j].is_zero() {
                    S::zero()
                } else {
                    factor.mul(&pivot_row[j])?
                };
                row[j] = lhs.sub(&rhs)?;
            }
            normalize_row(row)?;
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Some((a, pivots))
}

pub(crate) fn rref_of_integer_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Rref {
    if let Some(small) = to_small(&rows) {
        if let Some((reduced, pivots)) = rref_generic(small, cols) {
            let rows = reduced
                .into_iter()
                .map(|row| row.iter().map(Scalar::to_bigint).collect())
                .collect();
            return Rref { rows, pivots, cols };
        }
    }
    let (rows, pivots) = rref_generic(rows, cols).expect("bigint arithmetic cannot overflow");
    Rref { rows, pivots, cols }
}

impl Rref {
    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One kernel vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !Zero::is_zero(&row[f]) {
                        v[p] = -Rational::new(row[f].clone(), row[p].clone());
                    }
                }
                v
            })
            .collect()
    }

    /// The rows as rational vectors with pivot entries scaled to one.
    pub fn normalized_rows(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .zip(&self.pivots)
            .map(|(row, &p)| {
                let lead = &row[p];
                row.iter()
                    .map(|x| Rational::new(x.clone(), lead.clone()))
                    .collect()
            })
            .collect()
    }
}
