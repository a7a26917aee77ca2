#![allow(dead_code)]

use extremal_core::{LexOrder, Monomial, PointSet, Polynomial, Rational, SetSystem};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Every `(n, k)` with `k >= 2` and `k^n <= 16`, plus the one-point grids.
pub fn exhaustive_shapes() -> Vec<(usize, u32)> {
    let mut shapes = Vec::new();
    for n in 1..=4usize {
        shapes.push((n, 1));
        for k in 2..=16u32 {
            if (k as u64).pow(n as u32) <= 16 {
                shapes.push((n, k));
            }
        }
    }
    shapes
}

/// All subsets of all grids in [`exhaustive_shapes`], visited one at a time.
pub fn for_each_exhaustive(mut f: impl FnMut(&PointSet)) -> usize {
    let mut count = 0;
    for (n, k) in exhaustive_shapes() {
        let cells = (k as u64).pow(n as u32);
        for mask in 0..1u64 << cells {
            f(&PointSet::from_grid_mask(n, k, mask).unwrap());
            count += 1;
        }
    }
    count
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random subset of `{0..k-1}^n` with at most `max_len` points.
pub fn random_point_set(rng: &mut StdRng, n: usize, k: u32, max_len: usize) -> PointSet {
    let cells = (k as usize).pow(n as u32);
    let len = rng.gen_range(0..=max_len.min(cells));
    let pts = (0..len).map(|_| (0..n).map(|_| rng.gen_range(0..k)).collect::<Vec<u32>>());
    PointSet::new(n, k, pts).unwrap()
}

/// `n <= max_n`, `2 <= k <= max_k`, `|V| <= max_len` (before deduplication).
pub fn random_instance(rng: &mut StdRng, max_n: usize, max_k: u32, max_len: usize) -> PointSet {
    let n = rng.gen_range(1..=max_n);
    let k = rng.gen_range(2..=max_k);
    random_point_set(rng, n, k, max_len)
}

pub fn random_family(rng: &mut StdRng, n: usize) -> SetSystem {
    let len = rng.gen_range(0..=1usize << n);
    SetSystem::from_masks(n, (0..len).map(|_| rng.gen_range(0..1u64 << n))).unwrap()
}

pub fn random_order(rng: &mut StdRng, n: usize) -> LexOrder {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    LexOrder::new(p).unwrap()
}

/// Random polynomial of total degree at most `max_deg` with small integer
/// coefficients.
pub fn random_poly(rng: &mut StdRng, n: usize, max_deg: u32, max_terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let mut e = vec![0u32; n];
        for _ in 0..rng.gen_range(0..=max_deg) {
            e[rng.gen_range(0..n)] += 1;
        }
        let c = rng.gen_range(-5i64..=5);
        p.add_term(Monomial::new(e), Rational::from_integer(c));
    }
    p
}

/// Injective maps `{0..k-1} -> {0..2k+2}`, one per coordinate.
pub fn random_relabeling(rng: &mut StdRng, n: usize, k: u32) -> Vec<Vec<u32>> {
    (0..n)
        .map(|_| {
            let mut pool: Vec<u32> = (0..2 * k + 3).collect();
            pool.shuffle(rng);
            pool.truncate(k as usize);
            pool
        })
        .collect()
}

/// Up to `count` distinct lex orders drawn uniformly without replacement
/// (all of them when fewer exist).
pub fn distinct_random_orders(rng: &mut StdRng, n: usize, count: usize) -> Vec<LexOrder> {
    let mut all: Vec<LexOrder> = LexOrder::all(n).collect();
    all.shuffle(rng);
    all.truncate(count);
    all
}
