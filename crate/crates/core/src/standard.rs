//! Lex standard monomials of vanishing ideals of finite point sets.
//!
//! [`sm_lex`] is the sectioning recursion: split the point set by the value
//! of the least significant variable, solve each section one dimension down,
//! and keep `m * x^w` exactly when `m` is standard for at least `w + 1`
//! sections. [`sm_oracle`] is an independent greedy linear-algebra
//! computation used to cross-check it.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{PrimInt, Signed};

use crate::error::{check_dim, Error, Result};
use crate::limits::Limits;
use crate::linalg::{IntegerEchelon, RationalEchelon};
use crate::monomial::{Exps, Monomial, MonomialSet};
use crate::order::LexOrder;
use crate::point::{grid_points, PointSet};
use crate::polynomial::monomial_value;
use crate::rational::Rational;

/// Standard monomials of `I(V)` for one lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmResult {
    pub order: LexOrder,
    pub monomials: MonomialSet,
}

pub fn sm_lex(v: &PointSet, ord: &LexOrder) -> Result<SmResult> {
    let mut ops = 0;
    sm_lex_counted(v, ord, &mut ops)
}

/// As [`sm_lex`], adding the number of elementary steps taken to `ops`: one
/// per point per partitioning pass, one per section monomial merged and one
/// per monomial emitted.
pub fn sm_lex_counted(v: &PointSet, ord: &LexOrder, ops: &mut u64) -> Result<SmResult> {
    check_dim(v.dim(), ord.dim())?;
    let prio = ord.priority();
    // Coordinates permuted so that position j holds the j-th most
    // significant variable.
    let mut keyed: Vec<Exps> = v
        .points()
        .iter()
        .map(|p| prio.iter().map(|&i| p[i]).collect())
        .collect();
    let found = sectioned(&mut keyed, v.dim(), ops);
    let monomials: BTreeSet<Monomial> = found
        .into_iter()
        .map(|key| {
            let mut e: Exps = smallvec::smallvec![0; key.len()];
            for (j, &i) in prio.iter().enumerate() {
                e[i] = key[j];
            }
            Monomial::from_exps(e)
        })
        .collect();
    Ok(SmResult {
        order: ord.clone(),
        monomials: MonomialSet::from_sorted_unchecked(v.dim(), monomials),
    })
}

/// Standard monomials of the keyed `points` in the first `depth` positions
/// (the remaining positions are ignored and left zero). Sections on the
/// least significant active position are the runs after sorting by it.
fn sectioned(points: &mut [Exps], depth: usize, ops: &mut u64) -> Vec<Exps> {
    let Some(first) = points.first() else {
        return Vec::new();
    };
    let n = first.len();
    let last = depth - 1;
    *ops += points.len() as u64;
    if last == 0 {
        *ops += points.len() as u64;
        return (0..points.len() as u32)
            .map(|w| {
                let mut e: Exps = smallvec::smallvec![0; n];
                e[0] = w;
                e
            })
            .collect();
    }

    points.sort_unstable_by_key(|p| p[last]);
    let mut merged = Vec::with_capacity(points.len());
    for section in points.chunk_by_mut(|a, b| a[last] == b[last]) {
        merged.extend(sectioned(section, last, ops));
    }
    *ops += merged.len() as u64;

    // A monomial standard for c sections yields exponents 0..c-1 on `last`.
    merged.sort_unstable();
    let mut out = Vec::with_capacity(points.len());
    for run in merged.chunk_by(|a, b| a == b) {
        for w in 0..run.len() as u32 {
            let mut e = run[0].clone();
            e[last] = w;
            out.push(e);
        }
    }
    *ops += out.len() as u64;
    out
}

/// Greedy oracle: walk the grid monomials `x^w` (every `w_i < k`) upwards in
/// `ord` and keep those whose evaluation vector on `V` is independent of the
/// ones kept so far.
pub fn sm_oracle(v: &PointSet, ord: &LexOrder) -> Result<SmResult> {
    check_dim(v.dim(), ord.dim())?;
    let mut candidates = grid_points(v.dim(), v.alphabet());
    candidates.sort_by_cached_key(|e| ord.key(e));

    let chosen = greedy_integer::<i64>(v, &candidates)
        .or_else(|| greedy_integer::<i128>(v, &candidates))
        .unwrap_or_else(|| greedy_rational(v, &candidates));
    Ok(SmResult {
        order: ord.clone(),
        monomials: MonomialSet::from_sorted_unchecked(
            v.dim(),
            chosen.into_iter().map(Monomial::new).collect(),
        ),
    })
}

fn greedy_integer<T: PrimInt + Integer + Signed>(
    v: &PointSet,
    candidates: &[Vec<u32>],
) -> Option<Vec<Vec<u32>>> {
    let mut echelon = IntegerEchelon::<T>::new();
    let mut chosen = Vec::new();
    for e in candidates {
        if chosen.len() == v.len() {
            break;
        }
        let column: Vec<T> = v
            .points()
            .iter()
            .map(|p| integer_value(e, p))
            .collect::<Option<_>>()?;
        if echelon.insert(column).ok()? {
            chosen.push(e.clone());
        }
    }
    Some(chosen)
}

fn greedy_rational(v: &PointSet, candidates: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut echelon = RationalEchelon::new();
    let mut chosen = Vec::new();
    for e in candidates {
        if chosen.len() == v.len() {
            break;
        }
        let column: Vec<Rational> = v.points().iter().map(|p| monomial_value(e, p)).collect();
        if echelon.insert(column) {
            chosen.push(e.clone());
        }
    }
    chosen
}

fn integer_value<T: PrimInt>(exps: &[u32], point: &[u32]) -> Option<T> {
    exps.iter().zip(point).try_fold(T::one(), |acc, (&e, &c)| {
        num_traits::checked_pow(T::from(c)?, e as usize).and_then(|x| acc.checked_mul(&x))
    })
}

/// [`sm_lex`] for each of the `n!` lex orders, in the order of [`LexOrder::all`].
pub fn sm_all_lex(v: &PointSet, limits: &Limits) -> Result<Vec<SmResult>> {
    limits.check_factorial(v.dim())?;
    LexOrder::all(v.dim()).map(|ord| sm_lex(v, &ord)).collect()
}

/// Applies an injective relabelling `maps[i]` to coordinate `i` of every point.
/// `maps[i][c]` is the image of the value `c`; each map must cover `0..k`.
/// The alphabet of the result is one more than the largest image value.
pub fn relabel(v: &PointSet, maps: &[Vec<u32>]) -> Result<PointSet> {
    check_dim(v.dim(), maps.len())?;
    let k = v.alphabet() as usize;
    let mut top = 0;
    for (i, map) in maps.iter().enumerate() {
        if map.len() < k {
            return Err(Error::Domain(format!(
                "map for coordinate {} covers {} values, need {k}",
                i + 1,
                map.len()
            )));
        }
        let image: BTreeSet<u32> = map[..k].iter().copied().collect();
        if image.len() != k {
            return Err(Error::Domain(format!(
                "map for coordinate {} is not injective",
                i + 1
            )));
        }
        top = top.max(*image.last().expect("k > 0"));
    }
    let new_k = top
        .checked_add(1)
        .ok_or_else(|| Error::Domain("image value too large".into()))?;
    let pts = v.points().iter().map(|p| {
        p.iter()
            .zip(maps)
            .map(|(&c, map)| map[c as usize])
            .collect()
    });
    PointSet::new(v.dim(), new_k, pts)
}
