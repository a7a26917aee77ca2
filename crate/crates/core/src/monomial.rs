//! Monomials as exponent vectors, and finite sets of them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{check_dim, Error, Result};

/// A monomial `x1^w1 * ... * xn^wn`, stored as its exponent vector.
///
/// The derived `Ord` is the standard lex order with `x1` most significant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exps,
}

/// Exponent storage; inline for the dimensions that occur in practice.
pub(crate) type Exps = SmallVec<[u32; 6]>;

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial {
            exps: Exps::from_slice(&exps),
        }
    }

    pub(crate) fn from_exps(exps: Exps) -> Self {
        Monomial { exps }
    }

    pub fn from_slice(exps: &[u32]) -> Self {
        Monomial {
            exps: Exps::from_slice(exps),
        }
    }

    pub fn one(n: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; n],
        }
    }

    /// The variable `x_{var+1}` (0-based `var`).
    pub fn var(n: usize, var: usize) -> Self {
        let mut exps: Exps = smallvec::smallvec![0; n];
        exps[var] = 1;
        Monomial { exps }
    }

    /// The square-free monomial `prod_{i in set} x_i` (0-based indices).
    pub fn square_free(n: usize, set: &[usize]) -> Self {
        let mut exps: Exps = smallvec::smallvec![0; n];
        for &i in set {
            exps[i] = 1;
        }
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.exps.into_vec()
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Support of a square-free monomial, as sorted 0-based indices.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// `self | other`, componentwise `<=`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other` when `other | self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if self.dim() != other.dim() || !other.divides_unchecked(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Proper divisors of the form `self / x_i`.
    pub fn lower_neighbours(&self) -> impl Iterator<Item = Monomial> + '_ {
        (0..self.exps.len())
            .filter(|&i| self.exps[i] > 0)
            .map(move |i| {
                let mut exps = self.exps.clone();
                exps[i] -= 1;
                Monomial { exps }
            })
    }

    /// Ordering used for listing: total degree first, then `x1` before `x2`.
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite set of monomials sharing one ambient dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialSet {
    n: usize,
    elements: BTreeSet<Monomial>,
}

impl MonomialSet {
    pub fn new(n: usize) -> Self {
        MonomialSet {
            n,
            elements: BTreeSet::new(),
        }
    }

    pub fn from_monomials(n: usize, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut set = MonomialSet::new(n);
        for m in monomials {
            set.insert(m)?;
        }
        Ok(set)
    }

    pub(crate) fn from_sorted_unchecked(n: usize, elements: BTreeSet<Monomial>) -> Self {
        MonomialSet { n, elements }
    }

    pub fn insert(&mut self, m: Monomial) -> Result<bool> {
        check_dim(self.n, m.dim())?;
        Ok(self.elements.insert(m))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elements.contains(m)
    }

    /// Iterates in standard lex order.
    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter()
    }

    /// Elements in listing order (see [`Monomial::display_cmp`]).
    pub fn sorted_for_display(&self) -> Vec<&Monomial> {
        let mut v: Vec<&Monomial> = self.elements.iter().collect();
        v.sort_by(|a, b| a.display_cmp(b));
        v
    }

    /// Closed under taking divisors.
    pub fn is_down_set(&self) -> bool {
        self.elements
            .iter()
            .all(|m| m.lower_neighbours().all(|d| self.elements.contains(&d)))
    }

    pub fn max_exponent(&self) -> Option<u32> {
        self.elements
            .iter()
            .flat_map(|m| m.exps.iter().copied())
            .max()
    }

    pub fn union(&self, other: &MonomialSet) -> Result<MonomialSet> {
        check_dim(self.n, other.n)?;
        Ok(MonomialSet {
            n: self.n,
            elements: self.elements.union(&other.elements).cloned().collect(),
        })
    }

    pub(crate) fn require_down_set(&self) -> Result<()> {
        if self.is_down_set() {
            Ok(())
        } else {
            Err(Error::Domain(
                "monomial set is not closed under division".into(),
            ))
        }
    }
}

impl<'a> IntoIterator for &'a MonomialSet {
    type Item = &'a Monomial;
    type IntoIter = std::collections::btree_set::Iter<'a, Monomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

impl fmt::Display for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.sorted_for_display().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
