//! Deterministic enumeration of points of finite Grassmannians.
//!
//! A point of `Gr(k, n)` over `GF(q)` is represented by the unique `k × n`
//! RREF matrix whose rows span it. Points are ordered first by pivot set
//! (lexicographic) and then by the free entries read as base-`q` digits, with
//! the last free position varying fastest. Projective space `P^(d-1)` is the
//! case `k = 1`, i.e. vectors whose first nonzero coordinate is 1.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::matrix::Mat;

const CHUNK: u128 = 2048;

/// Number of `k`-dimensional subspaces of `GF(q)^n`, saturating at `u128::MAX`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        let a = q.checked_pow((n - i) as u32).and_then(|x| x.checked_sub(1));
        let b = q.checked_pow((i + 1) as u32).map(|x| x - 1);
        match (a, b, num.checked_mul(a.unwrap_or(0))) {
            (Some(_), Some(b), Some(nn)) => {
                num = nn;
                den *= b;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
            _ => return u128::MAX,
        }
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Number of points of `P^(d-1)(GF(q))`.
pub fn projective_count(d: usize, q: u64) -> u128 {
    gaussian_binomial(d, 1, q)
}

pub fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

struct Cell {
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    count: u128,
}

pub struct Grassmannian {
    n: usize,
    k: usize,
    q: u64,
    cells: Vec<Cell>,
    offsets: Vec<u128>,
    total: u128,
}

impl Grassmannian {
    pub fn new(n: usize, k: usize, q: u64) -> Self {
        let mut cells = Vec::new();
        if k <= n {
            for pivots in combinations(n, k) {
                let mut free = Vec::new();
                for (r, &p) in pivots.iter().enumerate() {
                    for c in p + 1..n {
                        if !pivots.contains(&c) {
                            free.push((r, c));
                        }
                    }
                }
                let count = (q as u128).checked_pow(free.len() as u32).unwrap_or(u128::MAX);
                cells.push(Cell { pivots, free, count });
            }
        }
        let mut offsets = Vec::with_capacity(cells.len());
        let mut total: u128 = 0;
        for c in &cells {
            offsets.push(total);
            total = total.saturating_add(c.count);
        }
        Grassmannian { n, k, q, cells, offsets, total }
    }

    pub fn len(&self) -> u128 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// The `idx`-th point as a `k × n` RREF matrix.
    pub fn point<F: FiniteField>(&self, ctx: &F::Ctx, idx: u128) -> Mat<F> {
        let ci = self.offsets.partition_point(|&o| o <= idx) - 1;
        let cell = &self.cells[ci];
        let mut rest = idx - self.offsets[ci];
        let mut m = Mat::zeros(self.k, self.n, ctx);
        for (r, &p) in cell.pivots.iter().enumerate() {
            m.set(r, p, F::one(ctx));
        }
        for &(r, c) in cell.free.iter().rev() {
            let d = (rest % self.q as u128) as u64;
            rest /= self.q as u128;
            if d != 0 {
                m.set(r, c, F::element(ctx, d));
            }
        }
        m
    }

    /// First point (in enumeration order) where `f` succeeds.
    pub fn find_first<F, T>(&self, ctx: &F::Ctx, f: impl Fn(&Mat<F>) -> Option<T> + Sync) -> Option<(u128, T)>
    where
        F: FiniteField,
        T: Send,
    {
        par_find_first(self.total, |i| f(&self.point(ctx, i)))
    }

    /// Point minimizing `key`, ties broken by enumeration order.
    pub fn min_by_key<F, K, T>(
        &self,
        ctx: &F::Ctx,
        f: impl Fn(&Mat<F>) -> Option<(K, T)> + Sync,
    ) -> Option<(u128, K, T)>
    where
        F: FiniteField,
        K: Ord + Send,
        T: Send,
    {
        let chunks = chunk_count(self.total);
        (0..chunks)
            .into_par_iter()
            .filter_map(|c| {
                chunk_range(c, self.total)
                    .filter_map(|i| f(&self.point(ctx, i)).map(|(key, t)| (key, i, t)))
                    .min_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)))
            })
            .min_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)))
            .map(|(key, i, t)| (i, key, t))
    }
}

fn chunk_count(total: u128) -> usize {
    total.div_ceil(CHUNK) as usize
}

fn chunk_range(c: usize, total: u128) -> impl Iterator<Item = u128> {
    let lo = c as u128 * CHUNK;
    lo..(lo + CHUNK).min(total)
}

/// Smallest index in `0..total` where `f` succeeds; the parallel split does
/// not affect which index is returned.
pub fn par_find_first<T: Send>(total: u128, f: impl Fn(u128) -> Option<T> + Sync) -> Option<(u128, T)> {
    (0..chunk_count(total)).into_par_iter().find_map_first(|c| chunk_range(c, total).find_map(|i| f(i).map(|t| (i, t))))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
