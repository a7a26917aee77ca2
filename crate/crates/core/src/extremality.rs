//! Deciding whether a point set is extremal, i.e. whether its lex standard
//! monomials do not depend on the lex order.
//!
//! Three deciders are provided. [`is_extremal_fast`] needs only the `n`
//! orders in which some variable is most significant, since a non-extremal
//! set already shows two different standard sets among any family of
//! elimination orders, one per variable. [`is_extremal_bruteforce`] compares
//! all `n!` lex orders directly and [`is_extremal_downshift`] compares the
//! `n!` composite downshifts.

use crate::downshift::sm_via_downshift;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::monomial::MonomialSet;
use crate::order::LexOrder;
use crate::point::PointSet;
use crate::standard::{sm_lex, sm_lex_counted};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalityVerdict {
    pub extremal: bool,
    /// Two orders with different standard monomials; present iff not extremal.
    pub witness: Option<(LexOrder, LexOrder)>,
    /// The common standard monomials; present iff extremal.
    pub sm: Option<MonomialSet>,
    /// Every order examined with its standard monomials, in examination order.
    pub per_order: Vec<(LexOrder, MonomialSet)>,
}

impl ExtremalityVerdict {
    /// The witness is the first order paired with the first later order
    /// whose set differs from it, which is the lexicographically first
    /// differing pair.
    fn from_per_order(per_order: Vec<(LexOrder, MonomialSet)>) -> Self {
        let differing = per_order
            .iter()
            .skip(1)
            .find(|(_, s)| *s != per_order[0].1)
            .map(|(o, _)| (per_order[0].0.clone(), o.clone()));
        match differing {
            Some(w) => ExtremalityVerdict {
                extremal: false,
                witness: Some(w),
                sm: None,
                per_order,
            },
            None => ExtremalityVerdict {
                extremal: true,
                witness: None,
                sm: per_order.first().map(|(_, s)| s.clone()),
                per_order,
            },
        }
    }
}

/// Work done by [`is_extremal_fast_with_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FastStats {
    pub sm_computations: usize,
    /// Elementary steps of the sectioning recursion plus one per monomial
    /// compared between orders.
    pub operations: u64,
}

/// The `n` orders used by the fast test: `x_i` first, then the others in
/// increasing index order.
pub fn fast_orders(n: usize) -> Vec<LexOrder> {
    (0..n).map(|i| LexOrder::eliminating(n, i)).collect()
}

pub fn is_extremal_fast(v: &PointSet) -> ExtremalityVerdict {
    is_extremal_fast_with_stats(v).0
}

pub fn is_extremal_fast_with_stats(v: &PointSet) -> (ExtremalityVerdict, FastStats) {
    let mut stats = FastStats::default();
    let per_order: Vec<(LexOrder, MonomialSet)> = fast_orders(v.dim())
        .into_iter()
        .map(|ord| {
            stats.sm_computations += 1;
            let sm = sm_lex_counted(v, &ord, &mut stats.operations)
                .expect("orders are built for the point set's dimension")
                .monomials;
            (ord, sm)
        })
        .collect();
    stats.operations += (per_order.len().saturating_sub(1) * v.len()) as u64;
    (ExtremalityVerdict::from_per_order(per_order), stats)
}

pub fn is_extremal_bruteforce(v: &PointSet, limits: &Limits) -> Result<ExtremalityVerdict> {
    limits.check_factorial(v.dim())?;
    let per_order = LexOrder::all(v.dim())
        .map(|ord| sm_lex(v, &ord).map(|r| (ord, r.monomials)))
        .collect::<Result<_>>()?;
    Ok(ExtremalityVerdict::from_per_order(per_order))
}

/// Compares `D_{π(n), ..., π(1)}(V)` over all permutations `π`; the
/// permutation is reported as the lex order `x_{π(1)} > ... > x_{π(n)}`.
pub fn is_extremal_downshift(v: &PointSet, limits: &Limits) -> Result<ExtremalityVerdict> {
    limits.check_factorial(v.dim())?;
    let per_order = LexOrder::all(v.dim())
        .map(|ord| sm_via_downshift(v, &ord).map(|s| (ord, s)))
        .collect::<Result<_>>()?;
    Ok(ExtremalityVerdict::from_per_order(per_order))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusPredicate {
    Extremal,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub size: usize,
    pub subsets: u64,
    pub extremal: u64,
    /// Subsets of this size satisfying the census predicate.
    pub matched: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusSummary {
    pub n: usize,
    pub k: u32,
    pub predicate: CensusPredicate,
    pub subsets: u64,
    pub extremal: u64,
    pub rows: Vec<CensusRow>,
    /// The first [`CENSUS_EXCEPTION_CAP`] non-extremal subsets found.
    pub non_extremal: Vec<PointSet>,
}

pub const CENSUS_EXCEPTION_CAP: usize = 32;

/// Classifies every subset of `{0, ..., k-1}^n`, checking the fast decider
/// against the brute-force one on each.
pub fn census(
    n: usize,
    k: u32,
    predicate: CensusPredicate,
    limits: &Limits,
) -> Result<CensusSummary> {
    let cells = (k as u64)
        .checked_pow(n as u32)
        .filter(|&c| c <= limits.max_census_cells && c < 64)
        .ok_or(Error::GuardExceeded {
            what: "grid size k^n for census",
            value: (k as usize).saturating_pow(n as u32),
            limit: (limits.max_census_cells as usize).min(63),
        })?;
    limits.check_factorial(n)?;

    let mut rows: Vec<CensusRow> = (0..=cells as usize)
        .map(|size| CensusRow {
            size,
            subsets: 0,
            extremal: 0,
            matched: 0,
        })
        .collect();
    let mut non_extremal = Vec::new();
    for mask in 0..1u64 << cells {
        let v = PointSet::from_grid_mask(n, k, mask)?;
        let fast = is_extremal_fast(&v);
        let brute = is_extremal_bruteforce(&v, limits)?;
        if fast.extremal != brute.extremal {
            return Err(Error::Inconsistent(format!(
                "fast and brute-force deciders disagree on {v}"
            )));
        }
        let row = &mut rows[v.len()];
        row.subsets += 1;
        if fast.extremal {
            row.extremal += 1;
        } else if non_extremal.len() < CENSUS_EXCEPTION_CAP {
            non_extremal.push(v);
        }
        if predicate == CensusPredicate::All || fast.extremal {
            row.matched += 1;
        }
    }
    Ok(CensusSummary {
        n,
        k,
        predicate,
        subsets: 1 << cells,
        extremal: rows.iter().map(|r| r.extremal).sum(),
        rows,
        non_extremal,
    })
}
