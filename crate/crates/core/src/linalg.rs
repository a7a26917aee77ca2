//! Exact Gaussian elimination.
//!
//! Pivots are always taken as the first nonzero entry in row order.

use num_integer::Integer;
use num_traits::{PrimInt, Signed};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Solves `A X = B` for a square nonsingular `A`, with `B` given as a list of
/// right-hand-side columns. Returns the solution columns in the same order.
pub fn solve_many(a: &[Vec<Rational>], rhs: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let size = a.len();
    if a.iter().any(|row| row.len() != size) || rhs.iter().any(|col| col.len() != size) {
        return Err(Error::Domain("linear system is not square".into()));
    }
    let width = size + rhs.len();
    let mut m: Vec<Vec<Rational>> = (0..size)
        .map(|r| {
            let mut row = Vec::with_capacity(width);
            row.extend(a[r].iter().cloned());
            row.extend(rhs.iter().map(|col| col[r].clone()));
            row
        })
        .collect();

    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::Singular)?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        if !inv.is_one() {
            for x in m[col][col..].iter_mut() {
                *x *= &inv;
            }
        }
        let (above, rest) = m.split_at_mut(col);
        let (pivot_row, below) = rest.split_first_mut().expect("pivot row");
        for row in above.iter_mut().chain(below.iter_mut()) {
            let f = row[col].clone();
            if f.is_zero() {
                continue;
            }
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
    }

    Ok((0..rhs.len())
        .map(|j| m.iter().map(|row| row[size + j].clone()).collect())
        .collect())
}

/// Incrementally tests vectors for linear independence over the rationals.
#[derive(Debug, Default, Clone)]
pub struct RationalEchelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RationalEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the vectors accepted so far.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                let inv = v[p].recip();
                for x in v.iter_mut() {
                    *x *= &inv;
                }
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

/// Fraction-free incremental echelon form over a machine integer type.
///
/// Each stored row is primitive (content 1). All arithmetic is checked; any
/// overflow is reported as [`Overflow`] and the caller is expected to redo the
/// computation in a wider type or with [`RationalEchelon`].
#[derive(Debug, Clone)]
pub struct IntegerEchelon<T = i128> {
    rows: Vec<(usize, Vec<T>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

impl<T> Default for IntegerEchelon<T> {
    fn default() -> Self {
        IntegerEchelon { rows: Vec::new() }
    }
}

impl<T: PrimInt + Integer + Signed> IntegerEchelon<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, mut v: Vec<T>) -> std::result::Result<bool, Overflow> {
        for (p, row) in &self.rows {
            let a = v[*p];
            if a.is_zero() {
                continue;
            }
            let b = row[*p];
            // Entries before the pivot are zero in `row`.
            for (x, &r) in v[*p..].iter_mut().zip(&row[*p..]) {
                *x = x
                    .checked_mul(&b)
                    .and_then(|xb| r.checked_mul(&a).and_then(|ra| xb.checked_sub(&ra)))
                    .ok_or(Overflow)?;
            }
            if *p > 0 {
                for x in &mut v[..*p] {
                    *x = x.checked_mul(&b).ok_or(Overflow)?;
                }
            }
            make_primitive(&mut v);
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                Ok(true)
            }
            None => Ok(false),
        }
    }
}

fn make_primitive<T: PrimInt + Integer + Signed>(v: &mut [T]) {
    let mut g = T::zero();
    for x in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g > T::one() {
        for x in v.iter_mut() {
            *x = *x / g;
        }
    }
}
