mod common;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use extremal_core::downshift::{downshift_family, downshift_i};
use extremal_core::groebner::spurious_zeros;
use extremal_core::*;
use proptest::prelude::*;

fn point_set(max_n: usize, max_k: u32, max_len: usize) -> impl Strategy<Value = PointSet> {
    (1..=max_n, 2..=max_k).prop_flat_map(move |(n, k)| {
        prop::collection::vec(prop::collection::vec(0..k, n), 0..=max_len)
            .prop_map(move |pts| PointSet::new(n, k, pts).unwrap())
    })
}

fn order(n: usize) -> impl Strategy<Value = LexOrder> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|p| LexOrder::new(p).unwrap())
}

fn with_order(s: impl Strategy<Value = PointSet>) -> impl Strategy<Value = (PointSet, LexOrder)> {
    s.prop_flat_map(|v| {
        let n = v.dim();
        (Just(v), order(n))
    })
}

fn monomial(n: usize, max_e: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_e, n).prop_map(Monomial::new)
}

fn polynomial(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(n, 3), -6i64..=6), 0..6).prop_map(move |terms| {
        Polynomial::from_terms(
            n,
            terms
                .into_iter()
                .map(|(m, c)| (m, Rational::from_integer(c))),
        )
        .unwrap()
    })
}

fn family(max_n: usize) -> impl Strategy<Value = SetSystem> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0..1u64 << n, 0..=1usize << n)
            .prop_map(move |m| SetSystem::from_masks(n, m).unwrap())
    })
}

/// Downward closure of random points, inside `{0..k-1}^n`.
fn down_set(max_n: usize, max_k: u32) -> impl Strategy<Value = PointSet> {
    point_set(max_n, max_k, 6).prop_map(|v| {
        let mut closed = BTreeSet::new();
        let mut stack: Vec<Vec<u32>> = v.points().to_vec();
        while let Some(p) = stack.pop() {
            if closed.insert(p.clone()) {
                for i in 0..p.len() {
                    if p[i] > 0 {
                        let mut q = p.clone();
                        q[i] -= 1;
                        stack.push(q);
                    }
                }
            }
        }
        PointSet::new(v.dim(), v.alphabet(), closed).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn lex_compare_is_a_multiplicative_total_order(
        (ord, a, b, c) in (1..=5usize).prop_flat_map(|n| (order(n), monomial(n, 4), monomial(n, 4), monomial(n, 4)))
    ) {
        let ab = ord.compare(&a, &b).unwrap();
        prop_assert_eq!(ab, ord.compare(&b, &a).unwrap().reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let bc = ord.compare(&b, &c).unwrap();
        if ab != Ordering::Greater && bc != Ordering::Greater {
            prop_assert_ne!(ord.compare(&a, &c).unwrap(), Ordering::Greater);
        }
        let ac = a.mul(&c).unwrap();
        let bc2 = b.mul(&c).unwrap();
        prop_assert_eq!(ord.compare(&ac, &bc2).unwrap(), ab);
        prop_assert_ne!(ord.compare(&Monomial::one(a.dim()), &ac).unwrap(), Ordering::Greater);
    }

    #[test]
    fn dominating_term_leads_every_lex_order(
        (top, divisors) in (1..=5usize).prop_flat_map(|n| {
            (monomial(n, 3), prop::collection::vec((prop::collection::vec(0..=3u32, n), -9i64..=9), 0..6))
        })
    ) {
        let n = top.dim();
        let mut p = Polynomial::monomial(top.clone());
        for (cut, c) in divisors {
            let e: Vec<u32> = top.exponents().iter().zip(&cut).map(|(&t, &d)| t.saturating_sub(d)).collect();
            let m = Monomial::new(e);
            if m != top {
                p.add_term(m, Rational::from_integer(c));
            }
        }
        prop_assert_eq!(p.is_degree_dominated().unwrap(), Some(top.clone()));
        for ord in LexOrder::all(n) {
            prop_assert_eq!(&p.leading_monomial(&ord).unwrap(), &top);
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        (p, q, x) in (1..=4usize).prop_flat_map(|n| (polynomial(n), polynomial(n), prop::collection::vec(0..7u32, n)))
    ) {
        let (ep, eq) = (p.evaluate(&x).unwrap(), q.evaluate(&x).unwrap());
        prop_assert_eq!(p.add(&q).unwrap().evaluate(&x).unwrap(), &ep + &eq);
        prop_assert_eq!(p.mul(&q).unwrap().evaluate(&x).unwrap(), &ep * &eq);
    }

    #[test]
    fn rendering_round_trips((p, ord) in (1..=4usize).prop_flat_map(|n| (polynomial(n), order(n)))) {
        prop_assert_eq!(Polynomial::parse(p.dim(), &p.render(&ord)).unwrap(), p);
    }

    #[test]
    fn frr_matches_greedy_oracle((v, ord) in with_order(point_set(5, 4, 60))) {
        let fast = sm_lex(&v, &ord).unwrap();
        prop_assert_eq!(&fast, &sm_oracle(&v, &ord).unwrap());
        prop_assert_eq!(fast.monomials.len(), v.len());
        prop_assert!(fast.monomials.is_down_set());
        prop_assert!(fast.monomials.max_exponent().is_none_or(|e| e < v.alphabet()));
    }

    #[test]
    fn downshift_bridge((v, ord) in with_order(point_set(5, 4, 60))) {
        let sm = sm_lex(&v, &ord).unwrap().monomials;
        prop_assert_eq!(&sm_via_downshift(&v, &ord).unwrap(), &sm);
        for i in 0..v.dim() {
            let once = downshift_i(&v, i).unwrap();
            prop_assert_eq!(once.len(), v.len());
            prop_assert_eq!(&downshift_i(&once, i).unwrap(), &once);
        }
    }

    #[test]
    fn standard_monomials_survive_relabeling(
        (v, ord, seed) in with_order(point_set(4, 4, 40)).prop_flat_map(|(v, o)| (Just(v), Just(o), any::<u64>()))
    ) {
        let maps = common::random_relabeling(&mut common::rng(seed), v.dim(), v.alphabet());
        let w = relabel(&v, &maps).unwrap();
        prop_assert_eq!(w.len(), v.len());
        prop_assert_eq!(sm_lex(&w, &ord).unwrap(), sm_lex(&v, &ord).unwrap());
    }

    #[test]
    fn family_downshift_does_not_grow_shattering((f, i) in family(6).prop_flat_map(|f| {
        let n = f.dim();
        (Just(f), 0..n)
    })) {
        let d = downshift_family(&f, i).unwrap();
        prop_assert_eq!(d.len(), f.len());
        prop_assert!(d.shattered_masks().is_subset(&f.shattered_masks()));
    }

    #[test]
    fn shattering_report_is_consistent(v in point_set(5, 3, 40)) {
        let r = shattered_family(&v).unwrap();
        let sets: BTreeSet<Vec<usize>> = r.shattered.iter().cloned().collect();
        for s in &r.shattered {
            for drop in 0..s.len() {
                let mut t = s.clone();
                t.remove(drop);
                prop_assert!(sets.contains(&t));
            }
        }
        prop_assert_eq!(r.vc_dim, r.shattered.iter().map(|s| s.len() as i64).max().unwrap_or(-1));
        if v.alphabet() == 2 {
            prop_assert!(r.extremal_gap >= 0);
            let f = SetSystem::from_point_set(&v).unwrap();
            prop_assert_eq!(f.shattered_masks().len(), r.shattered.len());
        }
    }

    #[test]
    fn s_extremality_is_order_independence(f in family(6)) {
        let all = sm_all_lex(&f.to_point_set(), &Limits::default()).unwrap();
        let same = all.iter().all(|r| r.monomials == all[0].monomials);
        prop_assert_eq!(is_s_extremal(&f), same);
    }

    #[test]
    fn deciders_agree(v in point_set(5, 3, 40)) {
        let l = Limits::default();
        let fast = is_extremal_fast(&v);
        let brute = is_extremal_bruteforce(&v, &l).unwrap();
        let down = is_extremal_downshift(&v, &l).unwrap();
        prop_assert_eq!(fast.extremal, brute.extremal);
        prop_assert_eq!(fast.extremal, down.extremal);
        prop_assert_eq!(fast.witness.is_some(), !fast.extremal);
        prop_assert_eq!(fast.sm.is_some(), fast.extremal);
        if let Some((a, b)) = &fast.witness {
            prop_assert_ne!(sm_lex(&v, a).unwrap(), sm_lex(&v, b).unwrap());
        }
    }

    #[test]
    fn down_sets_and_up_sets_are_extremal(v in down_set(4, 4)) {
        prop_assert!(v.is_down_set());
        prop_assert!(is_extremal_fast(&v).extremal);
        let k = v.alphabet();
        let flipped = PointSet::new(
            v.dim(),
            k,
            v.points().iter().map(|p| p.iter().map(|&c| k - 1 - c).collect::<Vec<u32>>()),
        )
        .unwrap();
        prop_assert!(flipped.is_up_set());
        prop_assert!(is_extremal_fast(&flipped).extremal);
    }

    #[test]
    fn universal_basis_is_certified(v in point_set(4, 3, 30)) {
        let Ok(basis) = universal_basis(&v) else {
            prop_assert!(!is_extremal_fast(&v).extremal);
            return Ok(());
        };
        let n = v.dim();
        verify_basis(&basis, &v, &LexOrder::all(n).collect::<Vec<_>>()).unwrap();
        let leads: Vec<&Monomial> = basis.leads().collect();
        for (i, a) in leads.iter().enumerate() {
            for (j, b) in leads.iter().enumerate() {
                prop_assert!(i == j || !a.divides(b).unwrap());
            }
        }
        for g in basis.generators() {
            for ord in LexOrder::all(n) {
                prop_assert_eq!(&g.poly.leading_monomial(&ord).unwrap(), &g.lead);
            }
        }
        prop_assert!(spurious_zeros(&basis, &v).unwrap().is_empty());
    }

    #[test]
    fn reduction_is_sound_and_linear(
        (v, ord, seed) in with_order(point_set(4, 3, 30)).prop_flat_map(|(v, o)| (Just(v), Just(o), any::<u64>()))
    ) {
        let Ok(basis) = universal_basis(&v) else { return Ok(()) };
        let n = v.dim();
        let mut rng = common::rng(seed);
        let mut member = Polynomial::zero(n);
        for g in basis.generators() {
            member = member.add(&common::random_poly(&mut rng, n, 2, 3).mul(&g.poly).unwrap()).unwrap();
        }
        prop_assert!(reduce(&member, &basis, &ord).unwrap().is_zero());

        let sm = basis.uncovered_monomials().unwrap();
        let p = common::random_poly(&mut rng, n, 4, 5);
        let q = common::random_poly(&mut rng, n, 4, 5);
        let (rp, rq) = (reduce(&p, &basis, &ord).unwrap(), reduce(&q, &basis, &ord).unwrap());
        prop_assert_eq!(reduce(&p.add(&q).unwrap(), &basis, &ord).unwrap(), rp.add(&rq).unwrap());
        prop_assert!(rp.support().all(|m| sm.contains(m)));
        // Normal forms agree with the polynomial on the point set.
        for x in v.points() {
            prop_assert_eq!(rp.evaluate(x).unwrap(), p.evaluate(x).unwrap());
        }
        prop_assert_eq!(reduce(&p.add(&member).unwrap(), &basis, &ord).unwrap(), rp);
    }
}

#[test]
fn family_downshift_matches_point_downshift_exhaustively() {
    for n in 1..=4usize {
        for mask in 0..1u64 << (1 << n) {
            let f =
                SetSystem::from_masks(n, (0..1u64 << n).filter(|s| mask >> s & 1 == 1)).unwrap();
            let v = f.to_point_set();
            for i in 0..n {
                let via_points = SetSystem::from_point_set(&downshift_i(&v, i).unwrap()).unwrap();
                assert_eq!(
                    downshift_family(&f, i).unwrap(),
                    via_points,
                    "n={n} F={:?} i={i}",
                    f.sets()
                );
            }
        }
    }
}
