//! Finite point sets inside the grid `{0, ..., k-1}^n`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialSet};

pub type Point = Vec<u32>;

/// A duplicate-free point set in `{0, ..., k-1}^n`, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    n: usize,
    k: u32,
    points: Vec<Point>,
}

impl PointSet {
    /// Validates and deduplicates. Duplicates are silently merged; use
    /// [`PointSet::new_counting_duplicates`] to learn how many there were.
    pub fn new(n: usize, k: u32, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        Self::new_counting_duplicates(n, k, points).map(|(set, _)| set)
    }

    pub fn new_counting_duplicates(
        n: usize,
        k: u32,
        points: impl IntoIterator<Item = Point>,
    ) -> Result<(Self, usize)> {
        if n == 0 {
            return Err(Error::Domain("dimension n must be positive".into()));
        }
        if k == 0 {
            return Err(Error::Domain("alphabet size k must be positive".into()));
        }
        let mut seen = BTreeSet::new();
        let mut duplicates = 0;
        for p in points {
            if p.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.len(),
                });
            }
            if let Some(&c) = p.iter().find(|&&c| c >= k) {
                return Err(Error::Domain(format!("coordinate {c} is outside 0..{k}")));
            }
            if !seen.insert(p) {
                duplicates += 1;
            }
        }
        Ok((
            PointSet {
                n,
                k,
                points: seen.into_iter().collect(),
            },
            duplicates,
        ))
    }

    pub(crate) fn from_sorted_unchecked(n: usize, k: u32, points: Vec<Point>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        PointSet { n, k, points }
    }

    pub fn empty(n: usize, k: u32) -> Result<Self> {
        Self::new(n, k, std::iter::empty())
    }

    /// The full grid `{0, ..., k-1}^n` in lexicographic order.
    pub fn grid(n: usize, k: u32) -> Result<Self> {
        let cells = grid_points(n, k);
        Self::new(n, k, cells)
    }

    /// The subset of the grid selected by the bits of `mask`, where bit `j`
    /// refers to the `j`-th grid point in lexicographic order.
    pub fn from_grid_mask(n: usize, k: u32, mask: u64) -> Result<Self> {
        if n == 0 || k == 0 {
            return Self::new(n, k, []);
        }
        let cells = (k as u64).checked_pow(n as u32);
        if cells.is_some_and(|c| c < 64 && mask >> c != 0) {
            return Err(Error::Domain("mask selects points outside the grid".into()));
        }
        // Bit j is grid point j: its base-k digits, most significant first.
        let pts = (0..64u32)
            .filter(|j| mask >> j & 1 == 1)
            .map(|j| {
                let mut p = vec![0u32; n];
                let mut rest = j;
                for c in p.iter_mut().rev() {
                    *c = rest % k;
                    rest /= k;
                }
                p
            })
            .collect();
        // Increasing bits give increasing points.
        Ok(Self::from_sorted_unchecked(n, k, pts))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        self.points
            .binary_search_by(|q| q.as_slice().cmp(p))
            .is_ok()
    }

    /// Closed under coordinatewise decrease.
    pub fn is_down_set(&self) -> bool {
        self.points.iter().all(|p| {
            (0..self.n).all(|i| {
                p[i] == 0 || {
                    let mut q = p.clone();
                    q[i] -= 1;
                    self.contains(&q)
                }
            })
        })
    }

    /// Closed under coordinatewise increase within the grid.
    pub fn is_up_set(&self) -> bool {
        self.points.iter().all(|p| {
            (0..self.n).all(|i| {
                p[i] + 1 >= self.k || {
                    let mut q = p.clone();
                    q[i] += 1;
                    self.contains(&q)
                }
            })
        })
    }

    /// Reads every point as an exponent vector.
    pub fn as_monomials(&self) -> MonomialSet {
        MonomialSet::from_sorted_unchecked(
            self.n,
            self.points
                .iter()
                .map(|p| Monomial::new(p.clone()))
                .collect(),
        )
    }
}

pub(crate) fn grid_points(n: usize, k: u32) -> Vec<Point> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..k).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("(")?;
            for (j, c) in p.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet(n={}, k={}, {self})", self.n, self.k)
    }
}
