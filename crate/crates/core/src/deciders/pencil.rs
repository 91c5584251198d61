//! Exact low-rank analysis of one- and two-dimensional spaces.
//!
//! For `V = span{B0, B1}`, an element `c0·B0 + c1·B1` has rank at most `k`
//! iff every `(k+1)`-minor vanishes there. Each minor is a binary form of
//! degree `k+1`, so a nonzero point exists over the algebraic closure iff
//! the forms share a root on the projective line. Dehomogenizing at `c0 = 1`
//! turns this into a univariate gcd, plus a separate test for the point
//! `(0 : 1)`, which is a common root iff no minor reaches full degree.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

use crate::enumerate::combinations;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Mat;
use crate::poly::Poly;
use crate::subspace::MatrixSubspace;

use super::numeric::{Embed, NumericOptions};
use super::verdict::RankWitness;

/// Upper limit on the number of minors formed.
pub const MAX_MINORS: u128 = 400_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PencilOutcome<F: Field> {
    /// No nonzero element of rank `≤ k`, even over the algebraic closure.
    NoLowRank {
        certificate: String,
    },
    Witness(RankWitness<F>),
    /// Such elements exist over the closure, but none is defined over `F`.
    /// `gcd` is the common factor of the dehomogenized minors.
    ExistsOverClosure {
        gcd: String,
    },
}

fn submatrix<F: Field>(m: &Mat<F>, rows: &[usize], cols: &[usize]) -> Mat<F> {
    Mat::from_fn(rows.len(), cols.len(), m.ctx(), |i, j| m.get(rows[i], cols[j]).clone())
}

fn numeric_roots<F: Embed>(g: &Poly<F>) -> Vec<Complex64> {
    let Some(deg) = g.degree() else { return Vec::new() };
    if deg == 0 {
        return Vec::new();
    }
    let lead = F::to_complex64(g.lead().unwrap().embed());
    let c: Vec<Complex64> = g.coeffs().iter().map(|x| F::to_complex64(x.embed()) / lead).collect();
    let comp = DMatrix::from_fn(deg, deg, |i, j| {
        if j == deg - 1 {
            -c[i]
        } else if i == j + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Schur::new(comp).eigenvalues().map(|e| e.iter().copied().collect()).unwrap_or_default()
}

pub fn pencil_min_rank_exact<F: Embed>(v: &MatrixSubspace<F>, k: usize) -> Result<PencilOutcome<F>> {
    let ctx = v.ctx();
    let (a, b) = v.shape();
    match v.dim() {
        0 => return Ok(PencilOutcome::NoLowRank { certificate: "zero space".into() }),
        1 => {
            let b0 = v.basis_element(0);
            let r = b0.rank();
            return Ok(match RankWitness::verified(v, b0, k) {
                Some(w) => PencilOutcome::Witness(w),
                None => PencilOutcome::NoLowRank { certificate: format!("single generator of rank {r}") },
            });
        }
        2 => {}
        d => return Err(Error::DimensionTooLarge(d)),
    }
    let (b0, b1) = (v.basis_element(0), v.basis_element(1));
    let d = k + 1;
    if d > a.min(b) {
        return Ok(PencilOutcome::Witness(RankWitness::verified(v, b0, k).expect("rank ≤ min(m, n) ≤ k")));
    }
    let row_sets = combinations(a, d);
    let col_sets = combinations(b, d);
    let count = row_sets.len() as u128 * col_sets.len() as u128;
    if count > MAX_MINORS {
        return Err(Error::BudgetExceeded { needed: count, budget: MAX_MINORS });
    }
    // interpolate each minor of B0 + t·B1 from its values at t = 0..=d
    let ts: Vec<F> = (0..=d as i64).map(|t| F::from_i64(ctx, t)).collect();
    let samples: Vec<Mat<F>> = ts.iter().map(|t| b0.add(&b1.scale(t)).unwrap()).collect();
    let vander = Mat::from_fn(d + 1, d + 1, ctx, |i, j| (0..j).fold(F::one(ctx), |acc, _| acc.mul(&ts[i])));
    let vinv = vander.inverse().expect("distinct nodes");
    let mut gcd = Poly::zero(ctx);
    let mut infinity_common = true;
    for rs in &row_sets {
        for cs in &col_sets {
            let vals = samples.iter().map(|m| submatrix(m, rs, cs).det()).collect::<Result<Vec<F>>>()?;
            let g = Poly::new(ctx, vinv.mul_vec(&vals)?);
            if g.is_zero() {
                continue;
            }
            if !g.coeff(d).is_zero() {
                infinity_common = false;
            }
            gcd = gcd.gcd(&g);
            if gcd.degree() == Some(0) && !infinity_common {
                return Ok(PencilOutcome::NoLowRank { certificate: "minors have no common root".into() });
            }
        }
    }
    if gcd.is_zero() {
        // every minor vanishes identically
        let w = RankWitness::verified(v, b0, k).expect("all minors vanish");
        return Ok(PencilOutcome::Witness(w));
    }
    if infinity_common {
        if let Some(w) = RankWitness::verified(v, b1.clone(), k) {
            return Ok(PencilOutcome::Witness(w));
        }
    }
    if gcd.degree() == Some(0) {
        return Ok(PencilOutcome::NoLowRank { certificate: "minors have no common root".into() });
    }
    let opts = NumericOptions::default();
    let mut candidates: Vec<F> = Vec::new();
    if gcd.degree() == Some(1) {
        candidates.push(gcd.coeff(0).neg());
    }
    candidates.extend(numeric_roots(&gcd).into_iter().filter_map(|z| F::snap_complex(z, &opts)));
    for r in candidates {
        if !gcd.eval(&r).is_zero() {
            continue;
        }
        if let Some(w) = RankWitness::verified(v, b0.add(&b1.scale(&r))?, k) {
            return Ok(PencilOutcome::Witness(w));
        }
    }
    Ok(PencilOutcome::ExistsOverClosure { gcd: gcd.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{GaussRational, Rational};

    type Q = Rational;

    fn span(ms: &[Mat<Q>]) -> MatrixSubspace<Q> {
        MatrixSubspace::from_generators(ms).unwrap()
    }

    #[test]
    fn singleton() {
        let v = span(&[Mat::ints(&[[1, 0], [0, 2]])]);
        assert!(matches!(pencil_min_rank_exact(&v, 1).unwrap(), PencilOutcome::NoLowRank { .. }));
    }

    #[test]
    fn diagonal_pencils() {
        let v = span(&[Mat::ints(&[[1, 0], [0, 0]]), Mat::ints(&[[0, 0], [0, 1]])]);
        match pencil_min_rank_exact(&v, 1).unwrap() {
            PencilOutcome::Witness(w) => assert_eq!(w.rank, 1),
            o => panic!("{o:?}"),
        }
        let v = span(&[Mat::identity(2, &()), Mat::ints(&[[1, 0], [0, -1]])]);
        match pencil_min_rank_exact(&v, 1).unwrap() {
            PencilOutcome::Witness(w) => assert!(w.verify(&v) && w.rank == 1),
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn irrational_and_nonreal_roots() {
        // det(c0·I + c1·[[0,2],[1,0]]) = c0² − 2c1²: roots ±√2, not rational
        let v = span(&[Mat::identity(2, &()), Mat::ints(&[[0, 2], [1, 0]])]);
        assert!(matches!(pencil_min_rank_exact(&v, 1).unwrap(), PencilOutcome::ExistsOverClosure { .. }));
        // det(c0·I + c1·J) with J² = −I is c0² + c1²: roots ±i
        let j = Mat::ints(&[[0, -1], [1, 0]]);
        let v = span(&[Mat::identity(2, &()), j.clone()]);
        assert!(matches!(pencil_min_rank_exact(&v, 1).unwrap(), PencilOutcome::ExistsOverClosure { .. }));
        let vi = MatrixSubspace::<GaussRational>::from_generators(&[
            Mat::identity(2, &()),
            Mat::from_ints(&(), &[[0, -1], [1, 0]]),
        ])
        .unwrap();
        match pencil_min_rank_exact(&vi, 1).unwrap() {
            PencilOutcome::Witness(w) => assert_eq!(w.rank, 1),
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn root_at_infinity_and_no_root() {
        let v = span(&[Mat::identity(2, &()), Mat::ints(&[[0, 1], [0, 0]])]);
        match pencil_min_rank_exact(&v, 1).unwrap() {
            PencilOutcome::Witness(w) => assert_eq!(w.matrix, Mat::ints(&[[0, 1], [0, 0]])),
            o => panic!("{o:?}"),
        }
        let v3 = span(&[Mat::identity(3, &()), Mat::ints(&[[0, 1, 0], [0, 0, 1], [0, 0, 0]])]);
        assert!(matches!(pencil_min_rank_exact(&v3, 1).unwrap(), PencilOutcome::NoLowRank { .. }));
        assert!(matches!(pencil_min_rank_exact(&v3, 2).unwrap(), PencilOutcome::Witness(_)));
        let big = MatrixSubspace::<Q>::full(2, 2, &());
        assert_eq!(pencil_min_rank_exact(&big, 1), Err(Error::DimensionTooLarge(4)));
    }
}
