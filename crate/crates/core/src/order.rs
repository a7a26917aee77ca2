//! Lexicographic term orders induced by a ranking of the variables.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::error::{check_dim, Error, Result};
use crate::monomial::Monomial;

/// A lex order `x_{i1} > x_{i2} > ... > x_{in}`.
///
/// `priority` holds the 0-based variable indices, most significant first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexOrder {
    priority: Vec<usize>,
}

impl LexOrder {
    /// Validates that `priority` is a permutation of `0..priority.len()`.
    pub fn new(priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &i in &priority {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Domain(format!(
                    "variable ranking {:?} is not a permutation of 1..={n}",
                    priority.iter().map(|i| i + 1).collect::<Vec<_>>()
                )));
            }
        }
        Ok(LexOrder { priority })
    }

    /// Builds an order from 1-based variable indices.
    pub fn from_one_based(priority: &[usize]) -> Result<Self> {
        if priority.contains(&0) {
            return Err(Error::Domain("variable indices are 1-based".into()));
        }
        Self::new(priority.iter().map(|i| i - 1).collect())
    }

    /// `x1 > x2 > ... > xn`.
    pub fn standard(n: usize) -> Self {
        LexOrder {
            priority: (0..n).collect(),
        }
    }

    /// `x_var` first, remaining variables in increasing index order.
    /// Any such order eliminates `x_var`.
    pub fn eliminating(n: usize, var: usize) -> Self {
        assert!(var < n);
        let mut priority = vec![var];
        priority.extend((0..n).filter(|&j| j != var));
        LexOrder { priority }
    }

    /// All `n!` lex orders, in lexicographic order of their rankings.
    pub fn all(n: usize) -> impl Iterator<Item = LexOrder> {
        (0..n).permutations(n).map(|priority| LexOrder { priority })
    }

    pub fn dim(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.priority.iter().map(|i| i + 1).collect()
    }

    pub fn most_significant(&self) -> usize {
        self.priority[0]
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        check_dim(self.dim(), a.dim())?;
        check_dim(self.dim(), b.dim())?;
        Ok(self.compare_unchecked(a, b))
    }

    pub(crate) fn compare_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        for &i in &self.priority {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Exponents permuted so that plain lexicographic comparison of keys
    /// agrees with this order.
    pub(crate) fn key(&self, exps: &[u32]) -> Vec<u32> {
        self.priority.iter().map(|&i| exps[i]).collect()
    }

    pub(crate) fn unkey(&self, key: &[u32]) -> Vec<u32> {
        let mut exps = vec![0; key.len()];
        for (pos, &i) in self.priority.iter().enumerate() {
            exps[i] = key[pos];
        }
        exps
    }
}

impl fmt::Display for LexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.one_based().iter().join(","))
    }
}

impl fmt::Debug for LexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
