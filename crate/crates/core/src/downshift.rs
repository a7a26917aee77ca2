//! Downshift (compression) operators on point sets and set systems.
//!
//! `D_i` replaces every nonempty `i`-section of a point set by the initial
//! segment `{0, ..., m-1}` of the same size `m`. Compositions follow the
//! right-to-left convention `D_{i1,...,il}(V) = D_{i1}(D_{i2}(...D_{il}(V)))`:
//! the last listed index acts first.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{check_dim, Error, Result};
use crate::monomial::MonomialSet;
use crate::order::LexOrder;
use crate::point::PointSet;
use crate::shattering::SetSystem;

/// Identifies the line through `V` along `axis` with the other coordinates
/// fixed to `fixed` (listed in increasing coordinate order, `axis` skipped).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SectionKey {
    pub axis: usize,
    pub fixed: Vec<u32>,
}

impl SectionKey {
    fn validate(&self, v: &PointSet) -> Result<()> {
        check_axis(v, self.axis)?;
        check_dim(v.dim() - 1, self.fixed.len())?;
        if let Some(&c) = self.fixed.iter().find(|&&c| c >= v.alphabet()) {
            return Err(Error::Domain(format!(
                "fixed coordinate {c} is outside 0..{}",
                v.alphabet()
            )));
        }
        Ok(())
    }
}

fn check_axis(v: &PointSet, axis: usize) -> Result<()> {
    if axis >= v.dim() {
        return Err(Error::Domain(format!(
            "coordinate index {} outside 1..={}",
            axis + 1,
            v.dim()
        )));
    }
    Ok(())
}

fn without(p: &[u32], axis: usize) -> Vec<u32> {
    p.iter()
        .enumerate()
        .filter(|&(j, _)| j != axis)
        .map(|(_, &c)| c)
        .collect()
}

fn with(fixed: &[u32], axis: usize, value: u32) -> Vec<u32> {
    let mut p = Vec::with_capacity(fixed.len() + 1);
    p.extend_from_slice(&fixed[..axis]);
    p.push(value);
    p.extend_from_slice(&fixed[axis..]);
    p
}

/// The values `a` such that inserting `a` at `key.axis` into `key.fixed`
/// gives a point of `V`.
pub fn section(v: &PointSet, key: &SectionKey) -> Result<BTreeSet<u32>> {
    key.validate(v)?;
    Ok(v.points()
        .iter()
        .filter(|p| without(p, key.axis) == key.fixed)
        .map(|p| p[key.axis])
        .collect())
}

/// `D_i(V)` for the 0-based coordinate `axis`.
pub fn downshift_i(v: &PointSet, axis: usize) -> Result<PointSet> {
    check_axis(v, axis)?;
    let mut sizes: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    for p in v.points() {
        *sizes.entry(without(p, axis)).or_insert(0) += 1;
    }
    let mut pts: Vec<Vec<u32>> = sizes
        .iter()
        .flat_map(|(fixed, &m)| (0..m).map(move |a| with(fixed, axis, a)))
        .collect();
    pts.sort_unstable();
    Ok(PointSet::from_sorted_unchecked(v.dim(), v.alphabet(), pts))
}

/// `D_{seq[0]}(D_{seq[1]}(... D_{seq[last]}(V)))`, 0-based indices.
pub fn downshift_seq(v: &PointSet, seq: &[usize]) -> Result<PointSet> {
    for &i in seq {
        check_axis(v, i)?;
    }
    let mut cur = v.clone();
    for &i in seq.iter().rev() {
        cur = downshift_i(&cur, i)?;
    }
    Ok(cur)
}

/// Standard monomials read off a composite downshift: for the order
/// `x_{i1} > ... > x_{in}` apply `D_{in, ..., i1}`, i.e. the most significant
/// variable is compressed first.
pub fn sm_via_downshift(v: &PointSet, ord: &LexOrder) -> Result<MonomialSet> {
    check_dim(v.dim(), ord.dim())?;
    let seq: Vec<usize> = ord.priority().iter().rev().copied().collect();
    Ok(downshift_seq(v, &seq)?.as_monomials())
}

/// Set-system downshift by the 0-based element `i`:
/// `{F \ {i}} ∪ {F : i ∈ F, F \ {i} ∈ 𝓕}`.
pub fn downshift_family(f: &SetSystem, i: usize) -> Result<SetSystem> {
    if i >= f.dim() {
        return Err(Error::Domain(format!(
            "element {} outside 1..={}",
            i + 1,
            f.dim()
        )));
    }
    let bit = 1u64 << i;
    let sets = f.masks();
    let out = sets.iter().map(|&s| {
        if s & bit != 0 && sets.contains(&(s & !bit)) {
            s
        } else {
            s & !bit
        }
    });
    SetSystem::from_masks(f.dim(), out)
}
