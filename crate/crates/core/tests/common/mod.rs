#![allow(dead_code)]

use idemgen::{FiniteSemigroup, PartialMap};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_map<R: Rng>(rng: &mut R, degree: usize, undefined: f64) -> PartialMap {
    let images: Vec<Option<usize>> =
        (0..degree).map(|_| if rng.gen_bool(undefined) { None } else { Some(rng.gen_range(0..degree)) }).collect();
    PartialMap::new(&images)
}

/// Closures of 2-3 random partial maps on 3-4 points with at most `cap`
/// elements, in generation order.
pub fn random_closures<R: Rng>(rng: &mut R, count: usize, cap: usize) -> Vec<FiniteSemigroup> {
    let mut out = Vec::new();
    while out.len() < count {
        let degree = rng.gen_range(3..=4);
        let k = rng.gen_range(2..=3);
        let gens: Vec<PartialMap> = (0..k).map(|_| random_map(rng, degree, 0.2)).collect();
        if let Ok(s) = FiniteSemigroup::generate(&gens, cap) {
            out.push(s);
        }
    }
    out
}

/// Like [`random_closures`], keeping only regular semigroups with at least
/// two idempotents.
pub fn random_regular<R: Rng>(rng: &mut R, count: usize, cap: usize) -> Vec<FiniteSemigroup> {
    let mut out = Vec::new();
    while out.len() < count {
        let s = random_closures(rng, 1, cap).pop().unwrap();
        if s.idempotents().len() >= 2 && s.regularity().regular {
            out.push(s);
        }
    }
    out
}

pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k×k` minors and the `k`-th factor is `d_k / d_{k-1}`.
pub fn invariant_factors(m: &[Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let mut divisors = vec![BigInt::one()];
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        divisors.push(g);
    }
    (1..divisors.len())
        .map(|k| if divisors[k].is_zero() { BigInt::zero() } else { &divisors[k] / &divisors[k - 1] })
        .collect()
}

/// A random `n×n` integer matrix of determinant ±1, as a product of
/// elementary operations.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 if i != j => {
                let k = BigInt::from(rng.gen_range(-3i64..=3));
                let src = m[j].clone();
                for (x, y) in m[i].iter_mut().zip(&src) {
                    *x += y * &k;
                }
            }
            1 => m.swap(i, j),
            _ => {
                for x in m[i].iter_mut() {
                    *x = -&*x;
                }
            }
        }
    }
    m
}

pub fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|r| (0..cols).map(|j| r.iter().zip(b).map(|(x, row)| x * &row[j]).sum()).collect())
        .collect()
}
