//! Degree-dominated universal Gröbner bases of vanishing ideals.
//!
//! For an extremal point set with standard monomials `S`, every minimal
//! monomial `x^u` outside `S` has a unique representation
//! `f_u = x^u + sum_{x^v in S} a_v x^v` vanishing on the set. Each `f_u` is
//! degree dominated, so `x^u` leads it for every term order, and the `f_u`
//! together form a universal Gröbner basis. No S-polynomial completion is
//! involved: the basis is certified by comparing the monomials its leading
//! terms leave uncovered against the standard monomials.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{check_dim, Error, Result};
use crate::extremality::is_extremal_fast;
use crate::linalg::solve_many;
use crate::monomial::{Exps, Monomial, MonomialSet};
use crate::order::LexOrder;
use crate::point::PointSet;
use crate::polynomial::{monomial_value, Polynomial};
use crate::rational::Rational;
use crate::shattering::{is_s_extremal, SetSystem};
use crate::standard::sm_lex;

/// `f_{S,H} = x_H * prod_{i in S \ H} (x_i - 1)`, 0-based index sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetShape {
    pub s: Vec<usize>,
    pub h: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    /// The dominating term (for forced single-order bases: the leading
    /// monomial under that order).
    pub lead: Monomial,
    pub poly: Polynomial,
    /// Set when the generator coincides with some `f_{S,H}`.
    pub shape: Option<SetShape>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    n: usize,
    generators: Vec<Generator>,
    order_free: bool,
    order: Option<LexOrder>,
}

impl GroebnerBasis {
    fn new(n: usize, mut generators: Vec<Generator>, order: Option<LexOrder>) -> Self {
        generators.sort_by(|a, b| b.lead.cmp(&a.lead));
        GroebnerBasis {
            n,
            generators,
            order_free: order.is_none(),
            order,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True when the basis is Gröbner for every term order.
    pub fn order_free(&self) -> bool {
        self.order_free
    }

    /// The single order a forced basis was built for.
    pub fn order(&self) -> Option<&LexOrder> {
        self.order.as_ref()
    }

    pub fn leads(&self) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().map(|g| &g.lead)
    }

    /// Monomials divisible by no leading term. `None` when that set is
    /// infinite (some variable has no pure power among the leads).
    pub fn uncovered_monomials(&self) -> Option<MonomialSet> {
        let leads: Vec<&Monomial> = self.leads().collect();
        let covered = |m: &Monomial| leads.iter().any(|l| l.divides_unchecked(m));
        let capped = (0..self.n).all(|i| {
            leads.iter().any(|l| {
                l.exponents()
                    .iter()
                    .enumerate()
                    .all(|(j, &e)| j == i || e == 0)
            })
        });
        if !capped {
            return None;
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![Monomial::one(self.n)];
        while let Some(m) = stack.pop() {
            if covered(&m) || !seen.insert(m.clone()) {
                continue;
            }
            for i in 0..self.n {
                let mut e = m.exponents().to_vec();
                e[i] += 1;
                stack.push(Monomial::new(e));
            }
        }
        Some(MonomialSet::from_sorted_unchecked(self.n, seen))
    }

    /// One generator per line, terms in descending standard lex order.
    pub fn render_lines(&self) -> Vec<String> {
        let std = LexOrder::standard(self.n);
        self.generators
            .iter()
            .map(|g| g.poly.render(&std))
            .collect()
    }
}

/// Minimal monomials (under division) outside the down-set `sm`.
pub fn minimal_nonstandard(sm: &MonomialSet, n: usize, k: u32) -> Result<MonomialSet> {
    check_dim(n, sm.dim())?;
    sm.require_down_set()?;
    if let Some(e) = sm.max_exponent().filter(|&e| e >= k) {
        return Err(Error::Domain(format!("exponent {e} is not below k = {k}")));
    }
    let mut out = MonomialSet::new(n);
    if sm.is_empty() {
        out.insert(Monomial::one(n))?;
        return Ok(out);
    }
    for s in sm.iter() {
        for i in 0..n {
            let mut e = s.exponents().to_vec();
            e[i] += 1;
            let u = Monomial::new(e);
            if !sm.contains(&u) && u.lower_neighbours().all(|d| sm.contains(&d)) {
                out.insert(u)?;
            }
        }
    }
    Ok(out)
}

/// The unique `x^u + sum_{x^v in sm} a_v x^v` vanishing on `V`.
pub fn standard_representation(u: &Monomial, v: &PointSet, sm: &MonomialSet) -> Result<Polynomial> {
    Ok(standard_representations(std::slice::from_ref(u), v, sm)?.remove(0))
}

/// [`standard_representation`] for several monomials, sharing one elimination.
pub fn standard_representations(
    us: &[Monomial],
    v: &PointSet,
    sm: &MonomialSet,
) -> Result<Vec<Polynomial>> {
    let n = v.dim();
    check_dim(n, sm.dim())?;
    if sm.len() != v.len() {
        return Err(Error::Domain(format!(
            "{} standard monomials for {} points",
            sm.len(),
            v.len()
        )));
    }
    for u in us {
        check_dim(n, u.dim())?;
        if sm.contains(u) {
            return Err(Error::Domain(format!("{u} is itself standard")));
        }
    }
    let basis: Vec<&Monomial> = sm.iter().collect();
    let matrix: Vec<Vec<Rational>> = v
        .points()
        .iter()
        .map(|p| {
            basis
                .iter()
                .map(|m| monomial_value(m.exponents(), p))
                .collect()
        })
        .collect();
    let rhs: Vec<Vec<Rational>> = us
        .iter()
        .map(|u| {
            v.points()
                .iter()
                .map(|p| -monomial_value(u.exponents(), p))
                .collect()
        })
        .collect();
    let solutions = solve_many(&matrix, &rhs)?;
    Ok(us
        .iter()
        .zip(solutions)
        .map(|(u, alpha)| {
            let mut f = Polynomial::monomial(u.clone());
            for (m, a) in basis.iter().zip(alpha) {
                f.add_term((*m).clone(), a);
            }
            f
        })
        .collect())
}

fn basis_from_sm(v: &PointSet, sm: &MonomialSet, order: Option<LexOrder>) -> Result<GroebnerBasis> {
    let mins: Vec<Monomial> = minimal_nonstandard(sm, v.dim(), v.alphabet())?
        .iter()
        .cloned()
        .collect();
    let polys = standard_representations(&mins, v, sm)?;
    let generators = mins
        .into_iter()
        .zip(polys)
        .map(|(lead, poly)| Generator {
            lead,
            poly,
            shape: None,
        })
        .collect();
    Ok(GroebnerBasis::new(v.dim(), generators, order))
}

/// The degree-dominated universal Gröbner basis of `I(V)` for extremal `V`.
pub fn universal_basis(v: &PointSet) -> Result<GroebnerBasis> {
    let verdict = is_extremal_fast(v);
    match (verdict.sm, verdict.witness) {
        (Some(sm), _) => basis_from_sm(v, &sm, None),
        (None, Some(witness)) => Err(Error::NotExtremal { witness }),
        (None, None) => unreachable!("a verdict carries either sm or a witness"),
    }
}

/// Skips the extremality check and builds the reduced Gröbner basis for the
/// single order `ord`. The result is labelled as not order free.
pub fn universal_basis_forced(v: &PointSet, ord: &LexOrder) -> Result<GroebnerBasis> {
    let sm = sm_lex(v, ord)?.monomials;
    basis_from_sm(v, &sm, Some(ord.clone()))
}

/// A generator made monic on its leading monomial, with exponents permuted
/// so that plain vector comparison is the order.
struct Keyed {
    lead: Exps,
    tail: Vec<(Exps, Rational)>,
}

fn key_of(ord: &LexOrder, m: &Monomial) -> Exps {
    ord.priority().iter().map(|&i| m.exponents()[i]).collect()
}

/// Sorted by decreasing lead; the sort is stable, so equal leads keep
/// generator order.
fn keyed_generators(basis: &GroebnerBasis, ord: &LexOrder) -> Result<Vec<Keyed>> {
    let mut gens = Vec::with_capacity(basis.len());
    for g in &basis.generators {
        let lm = g.poly.leading_monomial(ord)?;
        let inv = g.poly.coefficient(&lm).recip();
        gens.push(Keyed {
            lead: key_of(ord, &lm),
            tail: g
                .poly
                .terms()
                .filter(|(m, _)| **m != lm)
                .map(|(m, c)| (key_of(ord, m), c * &inv))
                .collect(),
        });
    }
    gens.sort_by(|a, b| b.lead.cmp(&a.lead));
    Ok(gens)
}

/// Normal form of `p` modulo `basis` under `ord`.
///
/// Terms are processed from the largest down; a term divisible by the
/// leading monomial of some generator is cancelled by the generator with the
/// largest such leading monomial (ties go to the earlier generator).
pub fn reduce(p: &Polynomial, basis: &GroebnerBasis, ord: &LexOrder) -> Result<Polynomial> {
    Reducer::new(basis, ord)?.reduce(p)
}

/// [`reduce`] with the generators prepared once for repeated use.
pub struct Reducer {
    ord: LexOrder,
    gens: Vec<Keyed>,
    /// Every tail term divides its lead, enabling the dense path.
    dominated: bool,
}

impl Reducer {
    pub fn new(basis: &GroebnerBasis, ord: &LexOrder) -> Result<Self> {
        check_dim(basis.n, ord.dim())?;
        let gens = keyed_generators(basis, ord)?;
        let dominated = gens.iter().all(|g| {
            g.tail
                .iter()
                .all(|(t, _)| t.iter().zip(&g.lead).all(|(x, y)| x <= y))
        });
        Ok(Reducer {
            ord: ord.clone(),
            gens,
            dominated,
        })
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        check_dim(self.ord.dim(), p.dim())?;
        let keyed: Vec<(Exps, Rational)> = p
            .terms()
            .map(|(m, c)| (key_of(&self.ord, m), c.clone()))
            .collect();
        if self.dominated {
            if let Some(normal) = reduce_dense(&keyed, &self.gens, &self.ord) {
                return Ok(normal);
            }
        }
        Ok(reduce_sparse(keyed, &self.gens, &self.ord))
    }
}

fn reduce_sparse(p: Vec<(Exps, Rational)>, gens: &[Keyed], ord: &LexOrder) -> Polynomial {
    let mut rem: BTreeMap<Exps, Rational> = p.into_iter().collect();
    let mut normal = Polynomial::zero(ord.dim());
    while let Some((top, c)) = rem.pop_last() {
        let divisor = gens
            .iter()
            .find(|g| g.lead.iter().zip(&top).all(|(a, b)| a <= b));
        match divisor {
            Some(g) => {
                for (t, tc) in &g.tail {
                    let k: Exps = t
                        .iter()
                        .zip(&top)
                        .zip(&g.lead)
                        .map(|((a, b), l)| a + b - l)
                        .collect();
                    let delta = &c * tc;
                    match rem.entry(k) {
                        Entry::Vacant(e) => {
                            e.insert(-delta);
                        }
                        Entry::Occupied(mut e) => {
                            *e.get_mut() -= &delta;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
            None => normal.add_term(Monomial::from_slice(&ord.unkey(&top)), c),
        }
    }
    normal
}

/// Largest dense work array [`reduce_dense`] will allocate.
const DENSE_CELLS: usize = 1 << 16;

/// Reduction on a dense array over the exponent box of `p`.
///
/// Valid when every tail term of every generator divides its lead: a
/// reduction step then only creates terms below the current one
/// componentwise, so nothing leaves the box. Cells are indexed mixed-radix
/// with the most significant variable first, which makes the index order
/// the lex order and every shifted tail term a fixed offset below the term
/// it cancels. Returns `None` when the box is too large.
fn reduce_dense(p: &[(Exps, Rational)], gens: &[Keyed], ord: &LexOrder) -> Option<Polynomial> {
    let n = ord.dim();
    let mut radix = vec![1usize; n];
    for (e, _) in p {
        for (r, &x) in radix.iter_mut().zip(e) {
            *r = (*r).max(x as usize + 1);
        }
    }
    let mut weight = vec![0usize; n];
    let mut cells = 1usize;
    for i in (0..n).rev() {
        weight[i] = cells;
        cells = cells.checked_mul(radix[i]).filter(|&c| c <= DENSE_CELLS)?;
    }
    let index = |e: &[u32]| -> usize { e.iter().zip(&weight).map(|(&x, w)| x as usize * w).sum() };
    // Generators whose lead leaves the box can never divide a term. Each is
    // kept as (lead, lead index, tail as (index offset below lead, coefficient)).
    #[allow(clippy::type_complexity)]
    let gens: Vec<(&Exps, usize, Vec<(usize, &Rational)>)> = gens
        .iter()
        .filter(|g| g.lead.iter().zip(&radix).all(|(&x, &r)| (x as usize) < r))
        .map(|g| {
            let li = index(&g.lead);
            (
                &g.lead,
                li,
                g.tail.iter().map(|(t, c)| (li - index(t), c)).collect(),
            )
        })
        .collect();

    let mut dense = vec![Rational::zero(); cells];
    for (e, c) in p {
        dense[index(e)] = c.clone();
    }
    let mut normal = Polynomial::zero(n);
    let mut top = vec![0u32; n];
    for at in (0..cells).rev() {
        if dense[at].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut dense[at]);
        let mut rest = at;
        for (i, w) in weight.iter().enumerate() {
            top[i] = (rest / w) as u32;
            rest %= w;
        }
        match gens
            .iter()
            .find(|(lead, _, _)| lead.iter().zip(&top).all(|(a, b)| a <= b))
        {
            Some((_, _, tail)) => {
                for &(offset, tc) in tail {
                    dense[at - offset] -= &(&c * tc);
                }
            }
            None => normal.add_term(Monomial::from_slice(&ord.unkey(&top)), c),
        }
    }
    Some(normal)
}

/// Expands `f_{S,H}` for 0-based index sets `H ⊆ S ⊆ {0, ..., n-1}`.
pub fn f_sh(s: &[usize], h: &[usize], n: usize) -> Result<Polynomial> {
    let s_set: BTreeSet<usize> = s.iter().copied().collect();
    let h_set: BTreeSet<usize> = h.iter().copied().collect();
    if let Some(&i) = s_set.iter().find(|&&i| i >= n) {
        return Err(Error::Domain(format!("index {} outside 1..={n}", i + 1)));
    }
    if !h_set.is_subset(&s_set) {
        return Err(Error::Domain("H must be a subset of S".into()));
    }
    let h_vec: Vec<usize> = h_set.iter().copied().collect();
    let mut f = Polynomial::monomial(Monomial::square_free(n, &h_vec));
    for &i in s_set.difference(&h_set) {
        f = f.mul(&Polynomial::linear(n, i, Rational::one()))?;
    }
    Ok(f)
}

fn match_shape(poly: &Polynomial, lead: &Monomial) -> Option<SetShape> {
    let low = poly.support().min_by_key(|m| m.degree())?;
    if !low.is_square_free() {
        return None;
    }
    let shape = SetShape {
        s: lead.support(),
        h: low.support(),
    };
    let expected = f_sh(&shape.s, &shape.h, lead.dim()).ok()?;
    (expected == *poly).then_some(shape)
}

/// The universal Gröbner basis of `I(F)` for a shattering-extremal family:
/// one generator per minimal square-free non-standard monomial `x_S`, matched
/// against the `f_{S,H}` shape where possible, plus `x_i^2 - x_i` for every `i`.
pub fn set_system_basis(f: &SetSystem) -> Result<GroebnerBasis> {
    if !is_s_extremal(f) {
        return Err(Error::NotShatteringExtremal {
            shattered: f.shattered_masks().len(),
            size: f.len(),
        });
    }
    let n = f.dim();
    let v = f.to_point_set();
    let sm = is_extremal_fast(&v).sm.ok_or_else(|| {
        Error::Inconsistent(
            "shattering-extremal family whose standard monomials depend on the order".into(),
        )
    })?;
    let mins: Vec<Monomial> = minimal_nonstandard(&sm, n, 2)?
        .iter()
        .filter(|m| m.is_square_free())
        .cloned()
        .collect();
    let polys = standard_representations(&mins, &v, &sm)?;
    let mut generators: Vec<Generator> = mins
        .into_iter()
        .zip(polys)
        .map(|(lead, poly)| {
            let shape = match_shape(&poly, &lead);
            Generator { lead, poly, shape }
        })
        .collect();
    for i in 0..n {
        let mut sq = vec![0; n];
        sq[i] = 2;
        let lead = Monomial::new(sq);
        let mut poly = Polynomial::monomial(lead.clone());
        poly.add_term(Monomial::var(n, i), -Rational::one());
        generators.push(Generator {
            lead,
            poly,
            shape: None,
        });
    }
    Ok(GroebnerBasis::new(n, generators, None))
}

/// Checks that `basis` is a Gröbner basis of `I(V)`: every generator
/// vanishes on `V`, and the monomials left uncovered by the leading terms
/// are exactly the standard monomials for each order in `orders`. For
/// order-free bases every generator must also be degree dominated by its
/// lead. On failure the error names the first violated condition.
pub fn verify_basis(basis: &GroebnerBasis, v: &PointSet, orders: &[LexOrder]) -> Result<()> {
    check_dim(basis.n, v.dim())?;
    let fail = |msg: String| Err(Error::Inconsistent(msg));
    for g in &basis.generators {
        for p in v.points() {
            if !g.poly.evaluate(p)?.is_zero() {
                return fail(format!("generator {} does not vanish at {p:?}", g.poly));
            }
        }
        if basis.order_free && g.poly.is_degree_dominated()?.as_ref() != Some(&g.lead) {
            return fail(format!(
                "generator {} is not dominated by {}",
                g.poly, g.lead
            ));
        }
    }
    let Some(uncovered) = basis.uncovered_monomials() else {
        return fail("leading terms leave infinitely many monomials uncovered".into());
    };
    if uncovered.len() != v.len() {
        return fail(format!(
            "{} uncovered monomials for {} points",
            uncovered.len(),
            v.len()
        ));
    }
    for ord in orders {
        if sm_lex(v, ord)?.monomials != uncovered {
            return fail(format!(
                "uncovered monomials differ from the standard monomials for {ord}"
            ));
        }
    }
    Ok(())
}

/// Grid points outside `V` at which every generator vanishes. Empty when the
/// basis cuts out exactly `V` inside the grid.
pub fn spurious_zeros(basis: &GroebnerBasis, v: &PointSet) -> Result<Vec<Vec<u32>>> {
    let inside: HashSet<&[u32]> = v.points().iter().map(Vec::as_slice).collect();
    let mut out = Vec::new();
    for w in crate::point::grid_points(v.dim(), v.alphabet()) {
        if inside.contains(w.as_slice()) {
            continue;
        }
        let mut all_zero = true;
        for g in &basis.generators {
            if !g.poly.evaluate(&w)?.is_zero() {
                all_zero = false;
                break;
            }
        }
        if all_zero {
            out.push(w);
        }
    }
    Ok(out)
}
