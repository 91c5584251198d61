//! Elements of a subspace whose column space lies in a prescribed subspace.
//!
//! Every matrix of rank at most `k` has its column space inside some
//! `k`-dimensional `X`. If the rows of `R` (`k × a`) span `X`, those matrices
//! are exactly `Rᵀ·M` with `M` of size `k × b`, and membership in `V` is a
//! linear condition on `M`. Searching over `X` instead of over coefficient
//! vectors is what makes exhaustive finite-field certification affordable.

use crate::enumerate::combinations;
use crate::field::Field;
use crate::matrix::{kernel_from_rref, Mat};
use crate::subspace::MatrixSubspace;

use super::verdict::RankWitness;

/// Rows `c` with `c · vec(A) = 0` for every `A ∈ V`, and only for those.
pub(crate) fn defining_equations<F: Field>(v: &MatrixSubspace<F>) -> Mat<F> {
    let w = v.rows() * v.cols();
    let eqs = v.coords().kernel();
    let data: Vec<F> = eqs.into_iter().flatten().collect();
    Mat::new(data.len() / w.max(1), w, v.ctx(), data).unwrap()
}

/// Linear system in `vec(M)` expressing `Rᵀ·M ∈ V`.
fn restricted_system<F: Field>(eqs: &Mat<F>, a: usize, b: usize, r: &Mat<F>) -> Mat<F> {
    let k = r.rows();
    let ctx = eqs.ctx();
    let mut sys: Mat<F> = Mat::zeros(eqs.rows(), k * b, ctx);
    for l in 0..k {
        for (i, ri) in r.row(l).iter().enumerate().take(a) {
            if ri.is_zero() {
                continue;
            }
            for e in 0..eqs.rows() {
                for j in 0..b {
                    let c = eqs.get(e, i * b + j);
                    if !c.is_zero() {
                        let cur = sys.get(e, l * b + j).add(&c.mul(ri));
                        sys.set(e, l * b + j, cur);
                    }
                }
            }
        }
    }
    sys
}

fn assemble<F: Field>(r: &Mat<F>, a: usize, b: usize, m: &[F]) -> Mat<F> {
    let k = r.rows();
    let ctx = r.ctx();
    Mat::from_fn(a, b, ctx, |i, j| {
        (0..k).fold(F::zero(ctx), |acc, l| {
            let x = r.get(l, i);
            if x.is_zero() {
                acc
            } else {
                acc.add(&x.mul(&m[l * b + j]))
            }
        })
    })
}

/// Basis of `{T ∈ V : col(T) ⊆ rowspace(R)}` for `R` with independent rows.
pub(crate) fn column_restricted<F: Field>(eqs: &Mat<F>, a: usize, b: usize, r: &Mat<F>) -> Vec<Mat<F>> {
    let sys = restricted_system(eqs, a, b, r);
    sys.kernel().iter().map(|m| assemble(r, a, b, m)).collect()
}

/// Some nonzero `T ∈ V` with `col(T) ⊆ rowspace(R)`, if one exists.
pub(crate) fn first_column_restricted<F: Field>(eqs: &Mat<F>, a: usize, b: usize, r: &Mat<F>) -> Option<Mat<F>> {
    let sys = restricted_system(eqs, a, b, r);
    let (red, piv) = sys.rref();
    if piv.len() == sys.cols() {
        return None;
    }
    let m = kernel_from_rref(&red, &piv).into_iter().next()?;
    Some(assemble(r, a, b, &m))
}

/// Tries every coordinate subspace `span{e_i : i ∈ S}`, `|S| = k`, on the
/// smaller side of the matrix. Returns a witness of rank at most `k`.
pub(crate) fn coordinate_subset_search<F: Field>(
    v: &MatrixSubspace<F>,
    k: usize,
    max_subsets: usize,
) -> Option<RankWitness<F>> {
    let transpose = v.rows() > v.cols();
    let space = if transpose { v.transpose_space() } else { v.clone() };
    let (a, b) = space.shape();
    if k == 0 || k >= a {
        return None;
    }
    let subsets = combinations(a, k);
    if subsets.len() > max_subsets {
        return None;
    }
    let eqs = defining_equations(&space);
    let ctx = v.ctx();
    subsets.iter().find_map(|s| {
        let r = Mat::from_fn(k, a, ctx, |l, i| if s[l] == i { F::one(ctx) } else { F::zero(ctx) });
        let t = first_column_restricted(&eqs, a, b, &r)?;
        let t = if transpose { t.transpose() } else { t };
        RankWitness::verified(v, t, k)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn toeplitz3_dual() -> MatrixSubspace<Rational> {
        let gens: Vec<Mat<Rational>> = (-2i64..=2)
            .map(|d| Mat::from_fn(3, 3, &(), |i, j| Rational::int((i as i64 - j as i64 == d) as i64)))
            .collect();
        MatrixSubspace::from_generators(&gens).unwrap().preannihilator()
    }

    #[test]
    fn equations_cut_out_the_space() {
        let v = toeplitz3_dual();
        let eqs = defining_equations(&v);
        assert_eq!(eqs.rows(), 5);
        for b in v.basis() {
            assert!(eqs.mul_vec(b.data()).unwrap().iter().all(|x| x.is_zero()));
        }
        let z = MatrixSubspace::<Rational>::zero(2, 2, &());
        assert_eq!(defining_equations(&z).rows(), 4);
    }

    #[test]
    fn restricted_elements_have_small_column_space() {
        let v = toeplitz3_dual();
        let eqs = defining_equations(&v);
        // X = span{e1, e2}
        let r = Mat::ints(&[[1, 0, 0], [0, 1, 0]]);
        let sols = column_restricted(&eqs, 3, 3, &r);
        assert!(!sols.is_empty());
        for t in &sols {
            assert!(v.contains(t).unwrap());
            assert!(t.row(2).iter().all(|x| x.is_zero()));
        }
        let one = Mat::ints(&[[1, 0, 0]]);
        assert!(first_column_restricted(&eqs, 3, 3, &one).is_none());
    }

    #[test]
    fn finds_diagonal_difference() {
        let w = coordinate_subset_search(&toeplitz3_dual(), 2, 100).unwrap();
        assert_eq!(w.rank, 2);
        assert!(w.verify(&toeplitz3_dual()));
        assert!(coordinate_subset_search(&toeplitz3_dual(), 1, 100).is_none());
    }
}
