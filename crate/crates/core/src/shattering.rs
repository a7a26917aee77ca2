//! Shattering, VC dimension and the Sauer–Shelah count.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::LexOrder;
use crate::point::PointSet;
use crate::standard::sm_lex;

/// Largest ground set for which [`shattered_family`] tests every subset.
pub const MAX_SHATTER_DIM: usize = 20;

/// A family of distinct subsets of `{1, ..., n}`, stored as bit masks
/// (bit `i` stands for element `i + 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    n: usize,
    sets: BTreeSet<u64>,
}

impl SetSystem {
    pub fn from_masks(n: usize, masks: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n == 0 || n > 63 {
            return Err(Error::Domain(format!("ground set size {n} outside 1..=63")));
        }
        let mut sets = BTreeSet::new();
        for m in masks {
            if m >> n != 0 {
                return Err(Error::Domain(format!(
                    "set {m:#b} is not a subset of 1..={n}"
                )));
            }
            sets.insert(m);
        }
        Ok(SetSystem { n, sets })
    }

    /// Sets given by their 1-based elements.
    pub fn from_one_based(n: usize, sets: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut masks = Vec::new();
        for s in sets {
            let mut m = 0u64;
            for e in s {
                if e == 0 || e > n || e > 63 {
                    return Err(Error::Domain(format!("element {e} outside 1..={n}")));
                }
                m |= 1 << (e - 1);
            }
            masks.push(m);
        }
        Self::from_masks(n, masks)
    }

    /// Reads a `k = 2` point set as characteristic vectors.
    pub fn from_point_set(v: &PointSet) -> Result<Self> {
        if v.alphabet() != 2 {
            return Err(Error::Domain(format!(
                "a set system needs k = 2, the point set has k = {}",
                v.alphabet()
            )));
        }
        Self::from_masks(
            v.dim(),
            v.points().iter().map(|p| {
                p.iter()
                    .enumerate()
                    .fold(0u64, |m, (i, &c)| m | (c as u64) << i)
            }),
        )
    }

    /// The characteristic vectors as a point set in `{0,1}^n`.
    pub fn to_point_set(&self) -> PointSet {
        let pts = self
            .sets
            .iter()
            .map(|&m| (0..self.n).map(|i| (m >> i & 1) as u32).collect());
        PointSet::new(self.n, 2, pts).expect("characteristic vectors are valid")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn masks(&self) -> &BTreeSet<u64> {
        &self.sets
    }

    pub fn contains_mask(&self, m: u64) -> bool {
        self.sets.contains(&m)
    }

    /// Member sets as sorted 0-based index lists.
    pub fn sets(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|&m| mask_to_indices(m)).collect()
    }

    pub fn shatters_mask(&self, s: u64) -> bool {
        let traces: HashSet<u64> = self.sets.iter().map(|&f| f & s).collect();
        traces.len() as u64 == 1u64 << s.count_ones()
    }

    /// `Sh(F)` as masks. Shattered sets are closed downwards, so only
    /// one-element extensions of shattered sets need testing.
    pub fn shattered_masks(&self) -> BTreeSet<u64> {
        let mut sh = BTreeSet::new();
        if self.sets.is_empty() {
            return sh;
        }
        let mut frontier = vec![0u64];
        sh.insert(0);
        while let Some(s) = frontier.pop() {
            for i in 0..self.n {
                let t = s | 1 << i;
                if t != s && !sh.contains(&t) && self.shatters_mask(t) {
                    sh.insert(t);
                    frontier.push(t);
                }
            }
        }
        sh
    }
}

pub(crate) fn mask_to_indices(m: u64) -> Vec<usize> {
    (0..64).filter(|&i| m >> i & 1 == 1).collect()
}

/// Summary of `Sh(V)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShatterReport {
    /// Shattered sets as sorted 0-based index lists, listed in increasing
    /// lexicographic order.
    pub shattered: Vec<Vec<usize>>,
    /// Size of the largest shattered set, `-1` when nothing is shattered.
    pub vc_dim: i64,
    /// `|Sh(V)| - |V|`. Only meaningful as an extremality measure when `k = 2`.
    pub extremal_gap: i64,
    /// `Some(gap == 0)` for `k = 2`, `None` otherwise.
    pub s_extremal: Option<bool>,
}

/// Whether every assignment `S -> {0, ..., k-1}` is the restriction of some
/// point of `V`. `s` holds 0-based coordinates.
pub fn shatters(v: &PointSet, s: &[usize]) -> Result<bool> {
    if let Some(&i) = s.iter().find(|&&i| i >= v.dim()) {
        return Err(Error::Domain(format!(
            "coordinate {} outside 1..={}",
            i + 1,
            v.dim()
        )));
    }
    let s: Vec<usize> = s
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let needed = (v.alphabet() as u64).checked_pow(s.len() as u32);
    if needed.is_none_or(|need| need > v.len() as u64) {
        return Ok(false);
    }
    let traces: HashSet<Vec<u32>> = v
        .points()
        .iter()
        .map(|p| s.iter().map(|&i| p[i]).collect())
        .collect();
    // Odometer over all assignments; stop at the first one not realized.
    let mut assignment = vec![0u32; s.len()];
    loop {
        if !traces.contains(&assignment) {
            return Ok(false);
        }
        let Some(pos) = assignment.iter().rposition(|&c| c + 1 < v.alphabet()) else {
            return Ok(true);
        };
        assignment[pos] += 1;
        for c in &mut assignment[pos + 1..] {
            *c = 0;
        }
    }
}

/// `Sh(V)` by testing every subset of the coordinates.
pub fn shattered_family(v: &PointSet) -> Result<ShatterReport> {
    if v.dim() > MAX_SHATTER_DIM {
        return Err(Error::GuardExceeded {
            what: "dimension n for subset enumeration",
            value: v.dim(),
            limit: MAX_SHATTER_DIM,
        });
    }
    let mut shattered = Vec::new();
    for mask in 0u64..1 << v.dim() {
        let s = mask_to_indices(mask);
        if shatters(v, &s)? {
            shattered.push(s);
        }
    }
    shattered.sort();
    let vc_dim = shattered.iter().map(|s| s.len() as i64).max().unwrap_or(-1);
    let extremal_gap = shattered.len() as i64 - v.len() as i64;
    Ok(ShatterReport {
        shattered,
        vc_dim,
        extremal_gap,
        s_extremal: (v.alphabet() == 2).then_some(extremal_gap == 0),
    })
}

/// Equality in the Sauer–Shelah bound `|Sh(F)| >= |F|`.
pub fn is_s_extremal(f: &SetSystem) -> bool {
    f.shattered_masks().len() == f.len()
}

/// Recomputes `Sh(F)` as the union over all lex orders of the (square-free)
/// standard monomials of `I(F)` and compares it with the definition.
/// A `false` result indicates a bug.
pub fn sh_equals_sm_union(f: &SetSystem, limits: &Limits) -> Result<bool> {
    limits.check_factorial(f.dim())?;
    let v = f.to_point_set();
    let mut union = BTreeSet::new();
    for ord in LexOrder::all(f.dim()) {
        for m in sm_lex(&v, &ord)?.monomials.iter() {
            if !m.is_square_free() {
                return Ok(false);
            }
            union.insert(m.support().iter().fold(0u64, |acc, &i| acc | 1 << i));
        }
    }
    Ok(union == f.shattered_masks())
}
