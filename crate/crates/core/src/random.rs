//! Seeded random subspaces and patterns for sampling experiments.

use rand::Rng;

use crate::field::{Field, FiniteField, Rational};
use crate::matrix::Mat;
use crate::subspace::MatrixSubspace;

/// Span of `gens` matrices with entries drawn from `sample`.
pub fn random_subspace<F: Field>(
    rows: usize,
    cols: usize,
    gens: usize,
    ctx: &F::Ctx,
    mut sample: impl FnMut() -> F,
) -> MatrixSubspace<F> {
    let mats: Vec<Mat<F>> = (0..gens).map(|_| Mat::from_fn(rows, cols, ctx, |_, _| sample())).collect();
    MatrixSubspace::span(rows, cols, ctx, &mats).unwrap()
}

/// Uniform entries from the finite field.
pub fn random_subspace_ff<F: FiniteField, R: Rng>(
    rows: usize,
    cols: usize,
    gens: usize,
    ctx: &F::Ctx,
    rng: &mut R,
) -> MatrixSubspace<F> {
    let q = F::size(ctx);
    random_subspace(rows, cols, gens, ctx, || F::element(ctx, rng.random_range(0..q)))
}

/// Integer entries in `-range..=range`.
pub fn random_subspace_q<R: Rng>(
    rows: usize,
    cols: usize,
    gens: usize,
    range: i64,
    rng: &mut R,
) -> MatrixSubspace<Rational> {
    random_subspace(rows, cols, gens, &(), || Rational::int(rng.random_range(-range..=range)))
}

/// Each cell of `Mat(n)` independently with probability `density`.
pub fn random_pattern<R: Rng>(n: usize, density: f64, rng: &mut R) -> Vec<(usize, usize)> {
    (0..n * n).filter(|_| rng.random_bool(density)).map(|c| (c / n, c % n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_and_bounded() {
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        let s = random_subspace_ff::<Fp, _>(3, 3, 4, &3, &mut a);
        assert_eq!(s, random_subspace_ff::<Fp, _>(3, 3, 4, &3, &mut b));
        assert!(s.dim() <= 4);
        let q = random_subspace_q(2, 3, 2, 2, &mut a);
        assert_eq!(q.shape(), (2, 3));
        assert!(random_pattern(3, 0.5, &mut a).iter().all(|&(i, j)| i < 3 && j < 3));
    }
}
