//! Floating-point search for low-rank elements, with exact verification.
//!
//! Alternates between the subspace and the rank-`k` matrices: truncate the
//! SVD of the current element, then project back onto the span of the basis
//! by least squares and renormalize the coefficients. A converged candidate
//! is snapped to exact entries in three ways (coefficients, column space, row
//! space) and only an exactly verified element is ever returned.

use nalgebra::{ComplexField, DMatrix, DVector};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::field::{Field, GaussRational, Rational};
use crate::matrix::Mat;
use crate::subspace::MatrixSubspace;

use super::lowrank::{column_restricted, defining_equations};
use super::verdict::RankWitness;

#[derive(Clone, Debug, PartialEq)]
pub struct NumericOptions {
    pub restarts: usize,
    pub iterations: usize,
    /// Relative residual `‖M − P_k(M)‖ / ‖M‖` at which a candidate is snapped.
    pub tol: f64,
    /// Largest denominator tried by the continued-fraction snapping.
    pub max_den: u64,
    /// Largest accepted gap between a float and its rational snap.
    pub snap_tol: f64,
}

impl Default for NumericOptions {
    fn default() -> Self {
        NumericOptions { restarts: 6, iterations: 400, tol: 1e-9, max_den: 1_000_000, snap_tol: 1e-7 }
    }
}

/// Best rational approximation by continued-fraction convergents: the first
/// convergent within `tol` of `x`, provided its denominator is at most
/// `max_den`.
pub fn rationalize(x: f64, max_den: u64, tol: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let scale = x.abs().max(1.0);
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e17 {
            return None;
        }
        let ai = a as i128;
        let h2 = ai.checked_mul(h1)?.checked_add(h0)?;
        let k2 = ai.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den as i128 {
            return None;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (x - h1 as f64 / k1 as f64).abs() <= tol * scale {
            return Some(BigRational::new(h1.into(), k1.into()));
        }
        let frac = r - a;
        if frac <= 0.0 {
            return None;
        }
        r = 1.0 / frac;
    }
    None
}

/// Exact fields with a floating-point embedding.
pub trait Embed: Field {
    type S: ComplexField<RealField = f64> + Copy;

    fn embed(&self) -> Self::S;
    fn snap(x: Self::S, opts: &NumericOptions) -> Option<Self>;
    fn snap_complex(z: Complex64, opts: &NumericOptions) -> Option<Self>;
    fn random_scalar(rng: &mut ChaCha8Rng) -> Self::S;
    fn to_complex64(x: Self::S) -> Complex64;
}

impl Embed for Rational {
    type S = f64;

    fn embed(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    fn snap(x: f64, opts: &NumericOptions) -> Option<Self> {
        rationalize(x, opts.max_den, opts.snap_tol).map(Rational)
    }

    fn snap_complex(z: Complex64, opts: &NumericOptions) -> Option<Self> {
        if z.im.abs() > opts.snap_tol * z.re.abs().max(1.0) {
            return None;
        }
        Self::snap(z.re, opts)
    }

    fn random_scalar(rng: &mut ChaCha8Rng) -> f64 {
        StandardNormal.sample(rng)
    }

    fn to_complex64(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }
}

impl Embed for GaussRational {
    type S = Complex64;

    fn embed(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    fn snap(z: Complex64, opts: &NumericOptions) -> Option<Self> {
        let scale = z.norm().max(1.0);
        let part = |x: f64| {
            if x.abs() <= opts.snap_tol * scale {
                Some(BigRational::zero())
            } else {
                rationalize(x, opts.max_den, opts.snap_tol)
            }
        };
        Some(GaussRational::new(part(z.re)?, part(z.im)?))
    }

    fn snap_complex(z: Complex64, opts: &NumericOptions) -> Option<Self> {
        Self::snap(z, opts)
    }

    fn random_scalar(rng: &mut ChaCha8Rng) -> Complex64 {
        Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
    }

    fn to_complex64(x: Complex64) -> Complex64 {
        x
    }
}

pub fn embed_mat<F: Embed>(m: &Mat<F>) -> DMatrix<F::S> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).embed())
}

fn normalize<S: ComplexField<RealField = f64> + Copy>(c: &mut DVector<S>) -> bool {
    let n = c.norm();
    if n == 0.0 || !n.is_finite() {
        return false;
    }
    c.unscale_mut(n);
    true
}

/// Searches `V` for a nonzero element of rank at most `k`. Deterministic in
/// `seed`; never returns an element that fails exact verification.
pub fn rank_witness_search_numeric<F: Embed>(
    v: &MatrixSubspace<F>,
    k: usize,
    seed: u64,
    opts: &NumericOptions,
) -> Option<RankWitness<F>> {
    let (a, b) = v.shape();
    let d = v.dim();
    if d == 0 || k == 0 {
        return None;
    }
    if k >= a.min(b) {
        return RankWitness::verified(v, v.basis_element(0), k);
    }
    let coords = v.coords();
    let g = DMatrix::from_fn(a * b, d, |r, c| coords.get(c, r).embed());
    let g_svd = g.clone().svd(true, true);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..opts.restarts {
        let mut c = DVector::from_fn(d, |_, _| F::random_scalar(&mut rng));
        if !normalize(&mut c) {
            continue;
        }
        for _ in 0..opts.iterations {
            let flat = &g * &c;
            let m = DMatrix::from_fn(a, b, |i, j| flat[i * b + j]);
            let svd = m.svd(true, true);
            let sv = &svd.singular_values;
            let total: f64 = sv.iter().map(|s| s * s).sum::<f64>().sqrt();
            let tail: f64 = sv.iter().skip(k).map(|s| s * s).sum::<f64>().sqrt();
            if total == 0.0 || !total.is_finite() {
                break;
            }
            if tail / total <= opts.tol {
                let cand = DMatrix::from_fn(a, b, |i, j| flat[i * b + j]);
                if let Some(w) = rationalize_and_verify(v, k, &cand, opts) {
                    return Some(w);
                }
                break;
            }
            let (u, vt) = (svd.u.as_ref().unwrap(), svd.v_t.as_ref().unwrap());
            let mut p = DMatrix::<F::S>::zeros(a, b);
            for l in 0..k {
                let s = F::S::from_real(sv[l]);
                for i in 0..a {
                    for j in 0..b {
                        p[(i, j)] += u[(i, l)] * s * vt[(l, j)];
                    }
                }
            }
            let target = DVector::from_fn(a * b, |r, _| p[(r / b, r % b)]);
            c = match g_svd.solve(&target, 1e-13) {
                Ok(x) => x,
                Err(_) => break,
            };
            if !normalize(&mut c) {
                break;
            }
        }
    }
    None
}

/// Gauss-Jordan in floating point, pivoting on the largest entry of each
/// column and treating entries below `eps` as zero.
fn numeric_rref<S: ComplexField<RealField = f64> + Copy>(mut m: DMatrix<S>, eps: f64) -> DMatrix<S> {
    let (rows, cols) = m.shape();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let (best, val) =
            (row..rows)
                .map(|i| (i, m[(i, col)].modulus()))
                .fold((row, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if val < eps {
            for i in row..rows {
                m[(i, col)] = S::zero();
            }
            continue;
        }
        m.swap_rows(row, best);
        let piv = m[(row, col)];
        for j in 0..cols {
            m[(row, j)] /= piv;
        }
        for i in 0..rows {
            if i != row {
                let f = m[(i, col)];
                for j in 0..cols {
                    let t = m[(row, j)];
                    m[(i, j)] -= f * t;
                }
            }
        }
        row += 1;
    }
    m
}

fn snap_mat<F: Embed>(m: &DMatrix<F::S>, ctx: &F::Ctx, opts: &NumericOptions) -> Option<Mat<F>> {
    let data = (0..m.nrows())
        .flat_map(|i| (0..m.ncols()).map(move |j| (i, j)))
        .map(|(i, j)| F::snap(m[(i, j)], opts))
        .collect::<Option<Vec<F>>>()?;
    Mat::new(m.nrows(), m.ncols(), ctx, data).ok()
}

/// Elements of `v` whose column space is the snapped top-`k` left singular
/// space of `cand`.
fn snap_column_space<F: Embed>(
    v: &MatrixSubspace<F>,
    k: usize,
    cand: &DMatrix<F::S>,
    opts: &NumericOptions,
) -> Option<Mat<F>> {
    let (a, b) = v.shape();
    let svd = cand.clone().svd(true, false);
    let u = svd.u?;
    let basis_t = DMatrix::from_fn(k, a, |l, i| u[(i, l)].conjugate());
    let r = snap_mat::<F>(&numeric_rref(basis_t, 1e-6), v.ctx(), opts)?;
    let (r, piv) = r.rref();
    if piv.is_empty() {
        return None;
    }
    let r = Mat::from_fn(piv.len(), a, v.ctx(), |i, j| r.get(i, j).clone());
    let eqs = defining_equations(v);
    column_restricted(&eqs, a, b, &r).into_iter().next()
}

/// Tries to turn a numerical candidate into an exactly verified witness.
pub fn rationalize_and_verify<F: Embed>(
    v: &MatrixSubspace<F>,
    k: usize,
    cand: &DMatrix<F::S>,
    opts: &NumericOptions,
) -> Option<RankWitness<F>> {
    let (a, b) = v.shape();
    if cand.shape() != (a, b) || v.is_zero() {
        return None;
    }
    // coefficients sit at the pivot positions of the canonical basis
    let coeffs: Vec<F::S> = v.pivots().iter().map(|&p| cand[(p / b, p % b)]).collect();
    let (jmax, cmax) =
        coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| (j, c.modulus()))
            .fold((0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
    if cmax > 0.0 {
        let lead = coeffs[jmax];
        let exact = coeffs.iter().map(|&c| F::snap(c / lead, opts)).collect::<Option<Vec<F>>>();
        if let Some(t) = exact.and_then(|c| v.element(&c).ok()) {
            if let Some(w) = RankWitness::verified(v, t, k) {
                return Some(w);
            }
        }
    }
    if let Some(t) = snap_column_space(v, k, cand, opts) {
        if let Some(w) = RankWitness::verified(v, t, k) {
            return Some(w);
        }
    }
    let vt = v.transpose_space();
    let t = snap_column_space(&vt, k, &cand.transpose(), opts)?;
    RankWitness::verified(v, t.transpose(), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Rational;

    #[test]
    fn continued_fractions() {
        let r = |x: f64| rationalize(x, 1_000_000, 1e-9);
        assert_eq!(r(0.5), Some(BigRational::new(1.into(), 2.into())));
        assert_eq!(r(-2.0 / 3.0), Some(BigRational::new((-2).into(), 3.into())));
        assert_eq!(r(0.0), Some(BigRational::zero()));
        assert_eq!(r(355.0 / 113.0), Some(BigRational::new(355.into(), 113.into())));
        assert_eq!(rationalize(std::f64::consts::PI, 1000, 1e-9), None);
        assert_eq!(r(f64::NAN), None);
    }

    #[test]
    fn recovers_rank_one_generator() {
        let r = Mat::<Q>::ints(&[[1, 2], [3, 6]]);
        let v = MatrixSubspace::from_generators(std::slice::from_ref(&r)).unwrap();
        let w = rank_witness_search_numeric(&v, 1, 3, &NumericOptions::default()).unwrap();
        assert_eq!(w.matrix.rank(), 1);
        assert!(v.contains(&w.matrix).unwrap());
    }

    #[test]
    fn finds_rank_two_in_toeplitz_dual() {
        let gens: Vec<Mat<Q>> =
            (-2i64..=2).map(|d| Mat::from_fn(3, 3, &(), |i, j| Q::int((i as i64 - j as i64 == d) as i64))).collect();
        let v = MatrixSubspace::from_generators(&gens).unwrap().preannihilator();
        let w = rank_witness_search_numeric(&v, 2, 11, &NumericOptions::default()).unwrap();
        assert!(w.verify(&v) && w.rank <= 2);
    }

    #[test]
    fn rejects_near_misses() {
        let v = MatrixSubspace::from_generators(&[Mat::<Q>::identity(2, &())]).unwrap();
        let cand = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 1e-12]);
        assert_eq!(rationalize_and_verify(&v, 1, &cand, &NumericOptions::default()), None);
    }

    #[test]
    fn gaussian_search() {
        // c0·I + c1·J is singular iff c0 = ±i·c1
        let j = Mat::<GaussRational>::from_ints(&(), &[[0, -1], [1, 0]]);
        let v = MatrixSubspace::from_generators(&[j, Mat::identity(2, &())]).unwrap();
        let w = rank_witness_search_numeric(&v, 1, 5, &NumericOptions::default()).unwrap();
        assert!(w.verify(&v) && w.rank == 1);
    }
}
