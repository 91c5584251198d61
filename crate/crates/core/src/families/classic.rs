//! Diagonal, Toeplitz and related constructions.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;
use crate::subspace::MatrixSubspace;

/// Cells of every diagonal of a `rows × cols` matrix. Diagonal `d = i − j`
/// runs from `−(cols − 1)` to `rows − 1`; cells are listed by increasing row.
pub fn diagonals(rows: usize, cols: usize) -> Vec<Vec<(usize, usize)>> {
    let lo = -(cols as i64 - 1);
    let hi = rows as i64 - 1;
    (lo..=hi)
        .map(|d| {
            (0..rows)
                .filter_map(|i| {
                    let j = i as i64 - d;
                    (0..cols as i64).contains(&j).then_some((i, j as usize))
                })
                .collect()
        })
        .collect()
}

fn power<F: Field>(ctx: &F::Ctx, base: i64, e: usize) -> F {
    let b = F::from_i64(ctx, base);
    (0..e).fold(F::one(ctx), |acc, _| acc.mul(&b))
}

/// `span{D_0, …, D_(p−k−1)}` with `D_j = diag(1^j, 2^j, …, p^j)`.
pub fn vandermonde_diagonal_space<F: Field>(p: usize, k: usize, ctx: &F::Ctx) -> Result<MatrixSubspace<F>> {
    if p == 0 || k > p {
        return Err(Error::ParameterOutOfRange(format!("vandermonde needs 0 <= k <= p, p >= 1 (p = {p}, k = {k})")));
    }
    let gens: Vec<Mat<F>> = (0..p - k)
        .map(|j| Mat::from_fn(p, p, ctx, |r, c| if r == c { power(ctx, r as i64 + 1, j) } else { F::zero(ctx) }))
        .collect();
    MatrixSubspace::span(p, p, ctx, &gens)
}

fn check_mnk(m: usize, n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= m.min(n) {
        return Err(Error::ParameterOutOfRange(format!("need 1 <= k < min(m, n) (m = {m}, n = {n}, k = {k})")));
    }
    Ok(())
}

/// The space `N ⊆ Mat(n, m)` that vanishes on diagonals of length at most
/// `k` and carries the Vandermonde space of dimension `p − k` on each
/// diagonal of length `p > k`. No nonzero element has rank `≤ k`.
pub fn min_rank_diagonal_annihilator<F: Field>(
    m: usize,
    n: usize,
    k: usize,
    ctx: &F::Ctx,
) -> Result<MatrixSubspace<F>> {
    check_mnk(m, n, k)?;
    let mut gens = Vec::new();
    for diag in diagonals(n, m) {
        let p = diag.len();
        if p <= k {
            continue;
        }
        for j in 0..p - k {
            let mut g = Mat::zeros(n, m, ctx);
            for (t, &(r, c)) in diag.iter().enumerate() {
                g.set(r, c, power(ctx, t as i64 + 1, j));
            }
            gens.push(g);
        }
    }
    MatrixSubspace::span(n, m, ctx, &gens)
}

/// The pre-annihilator of [`min_rank_diagonal_annihilator`]: a k-transitive
/// subspace of `Mat(m, n)` of dimension `k(m + n − k)`.
pub fn minimal_k_transitive<F: Field>(m: usize, n: usize, k: usize, ctx: &F::Ctx) -> Result<MatrixSubspace<F>> {
    Ok(min_rank_diagonal_annihilator(m, n, k, ctx)?.preannihilator())
}

/// The all-ones matrix on the first diagonal of length `k + 1` of the
/// `n × m` ambient. It lies in the pre-annihilator of
/// `minimal_k_transitive(m, n, k)` and has rank exactly `k + 1`.
pub fn shortest_diagonal_element<F: Field>(m: usize, n: usize, k: usize, ctx: &F::Ctx) -> Result<Mat<F>> {
    check_mnk(m, n, k)?;
    let diag = diagonals(n, m).into_iter().find(|d| d.len() == k + 1).expect("diagonal lengths run 1..=min(m, n)");
    let mut g = Mat::zeros(n, m, ctx);
    for (r, c) in diag {
        g.set(r, c, F::one(ctx));
    }
    Ok(g)
}

pub fn toeplitz_space<F: Field>(n: usize, ctx: &F::Ctx) -> Result<MatrixSubspace<F>> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange("toeplitz needs n >= 1".into()));
    }
    let gens: Vec<Mat<F>> = diagonals(n, n)
        .iter()
        .map(|d| {
            let mut g = Mat::zeros(n, n, ctx);
            for &(r, c) in d {
                g.set(r, c, F::one(ctx));
            }
            g
        })
        .collect();
    MatrixSubspace::span(n, n, ctx, &gens)
}

/// Constant along anti-diagonals `i + j = s`.
pub fn hankel_space<F: Field>(n: usize, ctx: &F::Ctx) -> Result<MatrixSubspace<F>> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange("hankel needs n >= 1".into()));
    }
    let gens: Vec<Mat<F>> = (0..2 * n - 1)
        .map(|s| Mat::from_fn(n, n, ctx, |i, j| if i + j == s { F::one(ctx) } else { F::zero(ctx) }))
        .collect();
    MatrixSubspace::span(n, n, ctx, &gens)
}

pub fn trace_zero<F: Field>(n: usize, ctx: &F::Ctx) -> Result<MatrixSubspace<F>> {
    if n < 2 {
        return Err(Error::ParameterOutOfRange("trace_zero needs n >= 2".into()));
    }
    Ok(MatrixSubspace::span(n, n, ctx, &[Mat::identity(n, ctx)])?.preannihilator())
}

/// `R = E_11 + … + E_(k+1)(k+1)` in `Mat(n, m)`.
pub fn rank_annihilator_generator<F: Field>(m: usize, n: usize, k: usize, ctx: &F::Ctx) -> Result<Mat<F>> {
    if k + 1 > m.min(n) {
        return Err(Error::ParameterOutOfRange(format!("need k + 1 <= min(m, n) (m = {m}, n = {n}, k = {k})")));
    }
    Ok(Mat::from_fn(n, m, ctx, |i, j| if i == j && i <= k { F::one(ctx) } else { F::zero(ctx) }))
}

/// `{R}^⊥ ⊆ Mat(m, n)`: k-transitive but not (k+1)-transitive.
pub fn rank_annihilator_space<F: Field>(m: usize, n: usize, k: usize, ctx: &F::Ctx) -> Result<MatrixSubspace<F>> {
    let r = rank_annihilator_generator(m, n, k, ctx)?;
    Ok(MatrixSubspace::span(n, m, ctx, &[r])?.preannihilator())
}

/// `sl_d ⊗ Mat(m)`, block trace zero matrices in `Mat(dm)`.
pub fn sl_tensor_full<F: Field>(d: usize, m: usize, ctx: &F::Ctx) -> Result<MatrixSubspace<F>> {
    if d < 2 || m == 0 {
        return Err(Error::ParameterOutOfRange(format!("sl tensor needs d >= 2, m >= 1 (d = {d}, m = {m})")));
    }
    trace_zero(d, ctx)?.tensor(&MatrixSubspace::full(m, m, ctx))
}

/// `[x; M]` with `x` an arbitrary row.
pub fn row_augmented_space<F: Field>(inner: &MatrixSubspace<F>) -> MatrixSubspace<F> {
    inner.row_augmented()
}

/// `span{E_ij : (i, j) ∈ cells}` in `Mat(n)`, zero-based cells.
pub fn pattern_space<F: Field>(n: usize, cells: &[(usize, usize)], ctx: &F::Ctx) -> Result<MatrixSubspace<F>> {
    if let Some(&(i, j)) = cells.iter().find(|&&(i, j)| i >= n || j >= n) {
        return Err(Error::ParameterOutOfRange(format!("cell ({i}, {j}) outside Mat({n})")));
    }
    Ok(MatrixSubspace::pattern(n, n, ctx, cells))
}

/// Compression of the `big × big` Toeplitz space to its leading `n × n`
/// corner by the coordinate projection onto the first `n` basis vectors.
pub fn corner_toeplitz<F: Field>(n: usize, big: usize, ctx: &F::Ctx) -> Result<MatrixSubspace<F>> {
    if n == 0 || n > big {
        return Err(Error::ParameterOutOfRange(format!("corner needs 1 <= n <= N (n = {n}, N = {big})")));
    }
    let p = Mat::from_fn(big, big, ctx, |i, j| if i == j && i < n { F::one(ctx) } else { F::zero(ctx) });
    toeplitz_space(big, ctx)?.compress(&p, &p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    type Q = Rational;

    #[test]
    fn diagonal_convention() {
        let d = diagonals(2, 3);
        assert_eq!(d.len(), 4);
        assert_eq!(d[0], vec![(0, 2)]);
        assert_eq!(d[2], vec![(0, 0), (1, 1)]);
        assert_eq!(d[3], vec![(1, 0)]);
        let total: usize = d.iter().map(Vec::len).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn vandermonde_examples() {
        let v = vandermonde_diagonal_space::<Q>(4, 2, &()).unwrap();
        assert_eq!(v.dim(), 2);
        let d0 = Mat::<Q>::identity(4, &());
        let d1 = Mat::from_fn(4, 4, &(), |i, j| Q::int(if i == j { i as i64 + 1 } else { 0 }));
        assert_eq!(v, MatrixSubspace::from_generators(&[d0, d1]).unwrap());
        let full = vandermonde_diagonal_space::<Q>(3, 0, &()).unwrap();
        let diag = MatrixSubspace::<Q>::pattern(3, 3, &(), &[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(full, diag);
        assert!(vandermonde_diagonal_space::<Q>(2, 3, &()).is_err());
    }

    #[test]
    fn diagonal_annihilator_dims() {
        for (m, n, k) in [(3, 3, 1), (4, 4, 2), (4, 5, 2), (2, 5, 1), (5, 3, 2)] {
            let nn = min_rank_diagonal_annihilator::<Q>(m, n, k, &()).unwrap();
            assert_eq!(nn.shape(), (n, m));
            assert_eq!(nn.dim(), m * n - k * (m + n - k));
            let l = minimal_k_transitive::<Q>(m, n, k, &()).unwrap();
            assert_eq!((l.shape(), l.dim()), ((m, n), k * (m + n - k)));
            let w = shortest_diagonal_element::<Q>(m, n, k, &()).unwrap();
            assert_eq!(w.rank(), k + 1);
            assert!(nn.contains(&w).unwrap());
        }
        assert!(minimal_k_transitive::<Q>(3, 3, 3, &()).is_err());
        assert!(minimal_k_transitive::<Q>(3, 3, 0, &()).is_err());
    }

    #[test]
    fn toeplitz_and_hankel() {
        for n in 1..=5 {
            assert_eq!(toeplitz_space::<Q>(n, &()).unwrap().dim(), 2 * n - 1);
            assert_eq!(hankel_space::<Q>(n, &()).unwrap().dim(), 2 * n - 1);
        }
        let t3 = toeplitz_space::<Q>(3, &()).unwrap();
        assert!(t3.contains(&Mat::identity(3, &())).unwrap());
        for b in t3.preannihilator().basis() {
            for d in diagonals(3, 3) {
                let s = d.iter().fold(Q::int(0), |acc, &(i, j)| acc.add(b.get(i, j)));
                assert!(s.is_zero());
            }
        }
        // Hankel is Toeplitz times the flip
        let flip = Mat::<Q>::from_fn(4, 4, &(), |i, j| Q::int((i + j == 3) as i64));
        let h = toeplitz_space::<Q>(4, &()).unwrap().equivalence_transform(&Mat::identity(4, &()), &flip).unwrap();
        assert_eq!(h, hankel_space(4, &()).unwrap());
    }

    #[test]
    fn trace_zero_and_rank_annihilator() {
        let tz = trace_zero::<Q>(3, &()).unwrap();
        assert_eq!(tz.dim(), 8);
        assert!(tz.contains(&Mat::unit(3, 3, 0, 1, &())).unwrap());
        assert_eq!(tz.preannihilator(), MatrixSubspace::span(3, 3, &(), &[Mat::identity(3, &())]).unwrap());
        let ra = rank_annihilator_space::<Q>(3, 3, 1, &()).unwrap();
        assert_eq!(ra.dim(), 8);
        assert!(rank_annihilator_space::<Q>(2, 2, 2, &()).is_err());
    }

    #[test]
    fn sl_tensor_dual() {
        let l = sl_tensor_full::<Q>(2, 2, &()).unwrap();
        assert_eq!((l.shape(), l.dim()), ((4, 4), 12));
        let scalars = MatrixSubspace::span(2, 2, &(), &[Mat::<Q>::identity(2, &())]).unwrap();
        assert_eq!(l.preannihilator(), scalars.tensor(&MatrixSubspace::full(2, 2, &())).unwrap());
    }

    #[test]
    fn corner_and_patterns() {
        for (n, big) in [(2, 4), (3, 5), (3, 3)] {
            let c = corner_toeplitz::<Q>(n, big, &()).unwrap();
            assert_eq!(c, toeplitz_space(n, &()).unwrap());
        }
        let upper = pattern_space::<Fp>(2, &[(0, 0), (0, 1), (1, 1)], &5).unwrap();
        assert_eq!(upper.dim(), 3);
        assert!(upper.is_pattern());
        assert!(pattern_space::<Q>(2, &[(2, 0)], &()).is_err());
        let aug = row_augmented_space(&toeplitz_space::<Q>(3, &()).unwrap());
        assert_eq!((aug.shape(), aug.dim()), ((4, 3), 8));
    }
}
