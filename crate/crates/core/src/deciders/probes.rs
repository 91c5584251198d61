//! Direct checks of the definitions, independent of the pre-annihilator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;
use crate::subspace::MatrixSubspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DefinitionalOutcome<F: Field> {
    /// `n × k` matrix `X` with independent columns such that `A ↦ A·X`
    /// restricted to `L` is not onto `Mat(m, k)`.
    DisprovedWithTuple(Mat<F>),
    NoCounterexampleFound {
        checked: u64,
    },
}

/// Whether every `Y ∈ Mat(m, k)` equals `A·X` for some `A ∈ L`.
pub fn tuple_is_transitive<F: Field>(l: &MatrixSubspace<F>, x: &Mat<F>) -> Result<bool> {
    if x.rows() != l.cols() {
        return Err(Error::Shape(format!("tuple with {} rows for Mat{:?}", x.rows(), l.shape())));
    }
    let target = l.rows() * x.cols();
    if l.dim() < target {
        return Ok(false);
    }
    let rows = l.basis().iter().map(|a| a.mul(x).map(Mat::into_data)).collect::<Result<Vec<_>>>()?;
    Ok(Mat::from_rows(l.ctx(), &rows)?.rank() == target)
}

fn random_int_mat<F: Field>(rows: usize, cols: usize, ctx: &F::Ctx, rng: &mut ChaCha8Rng, range: i64) -> Mat<F> {
    Mat::from_fn(rows, cols, ctx, |_, _| F::from_i64(ctx, rng.random_range(-range..=range)))
}

/// Samples random integer tuples and tests surjectivity for each. Any
/// failure is an exact disproof of k-transitivity.
pub fn definitional_transitivity_sample<F: Field>(
    l: &MatrixSubspace<F>,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<DefinitionalOutcome<F>> {
    if k == 0 || k > l.cols() {
        return Err(Error::InvalidParameter(format!("k = {k} for {} columns", l.cols())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut draws = 0;
    while checked < trials as u64 && draws < 20 * trials.max(1) {
        draws += 1;
        let x = random_int_mat(l.cols(), k, l.ctx(), &mut rng, 3);
        if x.rank() < k {
            continue;
        }
        checked += 1;
        if !tuple_is_transitive(l, &x)? {
            return Ok(DefinitionalOutcome::DisprovedWithTuple(x));
        }
    }
    Ok(DefinitionalOutcome::NoCounterexampleFound { checked })
}

/// `{A ∈ L : A·u = 0 for every row u of U}`.
pub fn killing_subspace<F: Field>(l: &MatrixSubspace<F>, u: &Mat<F>) -> Result<MatrixSubspace<F>> {
    let (m, n) = l.shape();
    if u.cols() != n {
        return Err(Error::Shape(format!("vectors of length {} for Mat({m},{n})", u.cols())));
    }
    let ut = u.transpose();
    let basis = l.basis();
    let images = basis.iter().map(|a| a.mul(&ut)).collect::<Result<Vec<_>>>()?;
    let eq = Mat::from_fn(m * u.rows(), basis.len(), l.ctx(), |r, c| images[c].data()[r].clone());
    let gens = eq.kernel().iter().map(|c| l.element(c)).collect::<Result<Vec<_>>>()?;
    MatrixSubspace::span(m, n, l.ctx(), &gens)
}

/// With `U` the span of the rows of `u`, returns a vector `x ∉ U` killed by
/// every element of `L` that kills `U`, i.e. a separation failure at `U`.
pub fn separation_failure<F: Field>(l: &MatrixSubspace<F>, u: &Mat<F>) -> Result<Option<Vec<F>>> {
    let n = l.cols();
    let w = killing_subspace(l, u)?;
    let common = if w.is_zero() {
        Mat::<F>::identity(n, l.ctx()).rows_as_vecs()
    } else {
        let rows: Vec<Vec<F>> = w.basis().iter().flat_map(|b| b.rows_as_vecs()).collect();
        Mat::from_rows(l.ctx(), &rows)?.kernel()
    };
    let k1 = u.rank();
    if common.len() <= k1 {
        return Ok(None);
    }
    for x in common {
        let mut rows = u.rows_as_vecs();
        rows.push(x.clone());
        if Mat::from_rows(l.ctx(), &rows)?.rank() > k1 {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// True iff `x = (x_1 … x_k)` has independent columns and every element of
/// `L` killing `x_1 … x_(k-1)` also kills `x_k`.
pub fn verify_separation_witness<F: Field>(l: &MatrixSubspace<F>, x: &Mat<F>) -> Result<bool> {
    let k = x.cols();
    if k == 0 || x.rows() != l.cols() || x.rank() < k {
        return Ok(false);
    }
    let xt = x.transpose();
    let u = Mat::from_fn(k - 1, x.rows(), l.ctx(), |i, j| xt.get(i, j).clone());
    let xk = xt.row(k - 1).to_vec();
    for a in killing_subspace(l, &u)?.basis() {
        if a.mul_vec(&xk)?.iter().any(|v| !v.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Assembles the `n × k` witness from the rows of `u` and the extra vector.
pub(crate) fn separation_tuple<F: Field>(u: &Mat<F>, x: &[F]) -> Mat<F> {
    let k1 = u.rows();
    Mat::from_fn(x.len(), k1 + 1, u.ctx(), |i, j| if j < k1 { u.get(j, i).clone() } else { x[i].clone() })
}

/// True iff every generator lies in `L`, has rank at most `r`, and the
/// generators span `L`.
pub fn verify_rank_spanning<F: Field>(l: &MatrixSubspace<F>, r: usize, gens: &[Mat<F>]) -> Result<bool> {
    for g in gens {
        if g.shape() != l.shape() || !l.contains(g)? || g.rank() > r {
            return Ok(false);
        }
    }
    Ok(MatrixSubspace::span(l.rows(), l.cols(), l.ctx(), gens)? == *l)
}

/// Random small-integer combinations of the basis; the first with nonzero
/// determinant.
pub fn find_invertible<F: Field>(l: &MatrixSubspace<F>, attempts: usize, seed: u64) -> Result<Option<Mat<F>>> {
    if l.rows() != l.cols() {
        return Err(Error::Shape("invertible elements need a square ambient".into()));
    }
    if l.is_zero() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let c: Vec<F> = (0..l.dim()).map(|_| F::from_i64(l.ctx(), rng.random_range(-3..=3))).collect();
        let a = l.element(&c)?;
        if a.is_invertible() {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    fn toeplitz(n: usize) -> MatrixSubspace<Q> {
        let gens: Vec<Mat<Q>> = (-(n as i64 - 1)..n as i64)
            .map(|d| Mat::from_fn(n, n, &(), |i, j| Q::int((i as i64 - j as i64 == d) as i64)))
            .collect();
        MatrixSubspace::from_generators(&gens).unwrap()
    }

    #[test]
    fn definitional_samples() {
        let full = MatrixSubspace::<Q>::full(3, 3, &());
        for k in 1..=3 {
            assert!(matches!(
                definitional_transitivity_sample(&full, k, 10, 1).unwrap(),
                DefinitionalOutcome::NoCounterexampleFound { checked: 10 }
            ));
        }
        let e11 = MatrixSubspace::<Q>::pattern(2, 2, &(), &[(0, 0)]);
        assert!(matches!(
            definitional_transitivity_sample(&e11, 1, 10, 1).unwrap(),
            DefinitionalOutcome::DisprovedWithTuple(_)
        ));
        assert!(!tuple_is_transitive(&e11, &Mat::ints(&[[0], [1]])).unwrap());
        assert!(matches!(
            definitional_transitivity_sample(&toeplitz(3), 2, 10, 7).unwrap(),
            DefinitionalOutcome::DisprovedWithTuple(_)
        ));
    }

    #[test]
    fn toeplitz_separation_witnesses() {
        let t3 = toeplitz(3);
        let x = Mat::ints(&[[1, 0, 0], [0, 0, 1], [0, 1, 0]]);
        assert!(verify_separation_witness(&t3, &x).unwrap());
        let t4 = toeplitz(4);
        let x4 = Mat::ints(&[[1, 0, 0], [0, 0, 1], [0, 0, 0], [0, 1, 0]]);
        assert!(verify_separation_witness(&t4, &x4).unwrap());
        // (e1, e2) is not a 2-separation failure
        assert!(!verify_separation_witness(&t3, &Mat::ints(&[[1, 0], [0, 1], [0, 0]])).unwrap());
        let u = Mat::ints(&[[1, 0, 0], [0, 0, 1]]);
        assert_eq!(separation_failure(&t3, &u).unwrap().map(|v| v.len()), Some(3));
    }

    #[test]
    fn rank_spanning() {
        let t3 = toeplitz(3);
        let gens: Vec<Mat<Q>> = (1..=5)
            .map(|a| {
                Mat::from_fn(3, 3, &(), |i, j| {
                    let e = i as i32 - j as i32;
                    Rational(num_rational::BigRational::from_integer(a.into()).pow(e))
                })
            })
            .collect();
        assert!(verify_rank_spanning(&t3, 1, &gens).unwrap());
        assert!(!verify_rank_spanning(&t3, 1, &gens[..4]).unwrap());
        let m2 = MatrixSubspace::<Q>::full(2, 2, &());
        assert!(!verify_rank_spanning(&m2, 2, &[Mat::identity(2, &())]).unwrap());
    }

    #[test]
    fn invertibles() {
        let a = find_invertible(&toeplitz(3), 50, 3).unwrap().unwrap();
        assert!(a.is_invertible() && toeplitz(3).contains(&a).unwrap());
        let sing = MatrixSubspace::<Q>::pattern(2, 2, &(), &[(0, 1), (0, 0)]);
        assert_eq!(find_invertible(&sing, 50, 3).unwrap(), None);
    }
}
