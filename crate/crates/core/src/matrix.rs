//! Dense matrices over an exact field and the elimination routines everything
//! else is built on.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FiniteTarget, Fp, Fp2, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<F: Field> {
    rows: usize,
    cols: usize,
    ctx: F::Ctx,
    data: Vec<F>,
}

/// A matrix after reduction to a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteMat {
    Prime(Mat<Fp>),
    Quad(Mat<Fp2>),
}

impl<F: Field> Mat<F> {
    pub fn new(rows: usize, cols: usize, ctx: &F::Ctx, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if let Some(bad) = data.iter().find(|x| x.ctx() != *ctx) {
            return Err(Error::FieldMismatch(F::tag(ctx).to_string(), F::tag(&bad.ctx()).to_string()));
        }
        Ok(Mat { rows, cols, ctx: ctx.clone(), data })
    }

    pub fn zeros(rows: usize, cols: usize, ctx: &F::Ctx) -> Self {
        Mat { rows, cols, ctx: ctx.clone(), data: vec![F::zero(ctx); rows * cols] }
    }

    pub fn identity(n: usize, ctx: &F::Ctx) -> Self {
        Mat::from_fn(n, n, ctx, |i, j| if i == j { F::one(ctx) } else { F::zero(ctx) })
    }

    /// Matrix unit `E_ij`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize, ctx: &F::Ctx) -> Self {
        let mut m = Mat::zeros(rows, cols, ctx);
        m.data[i * cols + j] = F::one(ctx);
        m
    }

    pub fn from_fn(rows: usize, cols: usize, ctx: &F::Ctx, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, ctx: ctx.clone(), data }
    }

    pub fn from_ints<R: AsRef<[i64]>>(ctx: &F::Ctx, rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.as_ref().len());
        Mat::from_fn(r, c, ctx, |i, j| F::from_i64(ctx, rows[i].as_ref()[j]))
    }

    pub fn from_rows(ctx: &F::Ctx, rows: &[Vec<F>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Mat::new(r, c, ctx, rows.concat())
    }

    /// Column vector.
    pub fn column(ctx: &F::Ctx, v: &[F]) -> Self {
        Mat { rows: v.len(), cols: 1, ctx: ctx.clone(), data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    /// Row-major entries.
    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows_as_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat { rows: self.rows, cols: self.cols, ctx: ctx.clone(), data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> Result<G>) -> Result<Mat<G>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Mat { rows: self.rows, cols: self.cols, ctx: ctx.clone(), data })
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, &self.ctx, |i, j| self.get(j, i).clone())
    }

    pub fn conj_transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, &self.ctx, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(&self.ctx, |x| x.mul(c))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(Mat::from_fn(self.rows, self.cols, &self.ctx, |i, j| self.get(i, j).add(rhs.get(i, j))))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        Ok(Mat::from_fn(self.rows, self.cols, &self.ctx, |i, j| self.get(i, j).sub(rhs.get(i, j))))
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if self.shape() != rhs.shape() {
            return Err(Error::Shape(format!("{:?} vs {:?}", self.shape(), rhs.shape())));
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!("cannot multiply {:?} by {:?}", self.shape(), rhs.shape())));
        }
        let mut out: Mat<F> = Mat::zeros(self.rows, rhs.cols, &self.ctx);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows).map(|i| crate::field::dot(&self.ctx, self.row(i), v)).collect())
    }

    /// Kronecker product; block `(i, j)` is `self[i][j] · rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (r, c) = (rhs.rows, rhs.cols);
        Mat::from_fn(self.rows * r, self.cols * c, &self.ctx, |i, j| self.get(i / r, j / c).mul(rhs.get(i % r, j % c)))
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(&self.ctx), |acc, i| acc.add(self.get(i, i)))
    }

    /// Reduced row-echelon form and pivot columns.
    ///
    /// Pivots are taken leftmost-first, using the first nonzero row at or below
    /// the current pivot row, so the output is canonical.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m.data, m.rows, m.cols, m.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        rref_in_place(&mut data, self.rows, self.cols, self.cols).len()
    }

    /// Canonical basis of the right null space: one vector per free column, in
    /// increasing order, with that free variable set to one.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// Some exact solution of `self · x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let w = self.cols + 1;
        let mut data = Vec::with_capacity(self.rows * w);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.push(b[i].clone());
        }
        let pivots = rref_in_place(&mut data, self.rows, w, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(&self.ctx); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = data[r * w + self.cols].clone();
        }
        debug_assert_eq!(self.mul_vec(&x).unwrap(), b);
        Ok(Some(x))
    }

    pub fn det(&self) -> Result<F> {
        if !self.is_square() {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = F::one(&self.ctx);
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r * n + c].is_zero()) else {
                return Ok(F::zero(&self.ctx));
            };
            if p != c {
                for j in 0..n {
                    a.swap(p * n + j, c * n + j);
                }
                det = det.neg();
            }
            let piv = a[c * n + c].clone();
            det = det.mul(&piv);
            let pinv = piv.inv().unwrap();
            for r in c + 1..n {
                let f = a[r * n + c].mul(&pinv);
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = a[c * n + j].mul(&f);
                    a[r * n + j] = a[r * n + j].sub(&v);
                }
            }
        }
        Ok(det)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut data = Vec::with_capacity(n * 2 * n);
        for i in 0..n {
            data.extend_from_slice(self.row(i));
            data.extend((0..n).map(|j| if i == j { F::one(&self.ctx) } else { F::zero(&self.ctx) }));
        }
        let pivots = rref_in_place(&mut data, n, 2 * n, n);
        if pivots.len() < n {
            return None;
        }
        Some(Mat::from_fn(n, n, &self.ctx, |i, j| data[i * 2 * n + n + j].clone()))
    }

    /// Stacks matrices of equal width vertically.
    pub fn vstack(ctx: &F::Ctx, cols: usize, parts: &[&Mat<F>]) -> Result<Self> {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.cols != cols {
                return Err(Error::Shape("vstack width mismatch".into()));
            }
            rows += p.rows;
            data.extend_from_slice(&p.data);
        }
        Ok(Mat { rows, cols, ctx: ctx.clone(), data })
    }

    pub fn reduce_to(&self, target: &FiniteTarget) -> Result<FiniteMat> {
        Ok(match target {
            FiniteTarget::Prime(p) => FiniteMat::Prime(self.try_map(p, |x| x.to_prime_field(*p))?),
            FiniteTarget::Quad(c) => FiniteMat::Quad(self.try_map(c, |x| x.to_quad_field(c))?),
        })
    }

    /// Entrywise reduction into `GF(q)`, `q` a prime or a prime square.
    pub fn reduce_mod(&self, q: u64) -> Result<FiniteMat> {
        let target = FiniteTarget::for_order(q)?;
        self.reduce_to(&target)
    }
}

impl Mat<Rational> {
    pub fn ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Mat::from_ints(&(), rows)
    }
}

/// Row-reduces a row-major `rows × width` block in place, considering pivots
/// only in the first `pivot_cols` columns. Returns the pivot columns.
pub(crate) fn rref_in_place<F: Field>(a: &mut [F], rows: usize, width: usize, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * width + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..width {
                a.swap(p * width + j, r * width + j);
            }
        }
        let inv = a[r * width + c].inv().unwrap();
        for j in c..width {
            if !a[r * width + j].is_zero() {
                a[r * width + j] = a[r * width + j].mul(&inv);
            }
        }
        let pivot_row: Vec<(usize, F)> =
            (c..width).filter(|&j| !a[r * width + j].is_zero()).map(|j| (j, a[r * width + j].clone())).collect();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a[i * width + c].clone();
            if f.is_zero() {
                continue;
            }
            for (j, v) in &pivot_row {
                a[i * width + j] = a[i * width + j].sub(&f.mul(v));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn kernel_from_rref<F: Field>(r: &Mat<F>, pivots: &[usize]) -> Vec<Vec<F>> {
    let n = r.cols();
    let ctx = r.ctx();
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![F::zero(ctx); n];
            v[f] = F::one(ctx);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = r.get(row, f).neg();
            }
            v
        })
        .collect()
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl<F: Field> fmt::Display for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::<Rational>::identity(3, &()).rank(), 3);
        assert_eq!(Mat::<Rational>::zeros(2, 5, &()).rank(), 0);
        let tri = Mat::ints(&[[0, 0, 1], [0, 1, 1], [1, 1, 1]]);
        assert_eq!(tri.rank(), 3);
    }

    #[test]
    fn rref_examples() {
        let (r, p) = Mat::<Rational>::identity(3, &()).rref();
        assert_eq!(r, Mat::identity(3, &()));
        assert_eq!(p, vec![0, 1, 2]);

        let (r, p) = Mat::ints(&[[2, 4], [1, 2]]).rref();
        assert_eq!(r, Mat::ints(&[[1, 2], [0, 0]]));
        assert_eq!(p, vec![0]);

        let a: Mat<Fp> = Mat::from_ints(&2, &[[1, 1], [1, 2]]);
        let (r, p) = a.rref();
        assert_eq!(r, Mat::identity(2, &2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn kernel_examples() {
        assert!(Mat::<Rational>::identity(3, &()).kernel().is_empty());
        assert_eq!(Mat::<Rational>::zeros(2, 3, &()).kernel().len(), 3);
        let a = Mat::ints(&[[1, 1, 1]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_examples() {
        let i2 = Mat::<Rational>::identity(2, &());
        let b = vec![Rational::int(3), Rational::new(1, 2)];
        assert_eq!(i2.solve(&b).unwrap(), Some(b.clone()));

        let a = Mat::ints(&[[1, 1]]);
        let x = a.solve(&[Rational::int(5)]).unwrap().unwrap();
        assert_eq!(x[0].add(&x[1]), Rational::int(5));

        let a = Mat::ints(&[[1], [1]]);
        assert_eq!(a.solve(&[Rational::int(0), Rational::int(1)]).unwrap(), None);
        assert!(a.solve(&[Rational::int(0)]).is_err());
    }

    #[test]
    fn reduce_examples() {
        let i3 = Mat::<Rational>::identity(3, &());
        assert_eq!(i3.reduce_mod(5).unwrap(), FiniteMat::Prime(Mat::identity(3, &5)));
        let half = Mat::new(1, 1, &(), vec![Rational::new(1, 2)]).unwrap();
        assert_eq!(half.reduce_mod(7).unwrap(), FiniteMat::Prime(Mat::from_ints(&7, &[[4]])));
        let fifth = Mat::new(1, 1, &(), vec![Rational::new(1, 5)]).unwrap();
        assert!(matches!(fifth.reduce_mod(5), Err(Error::BadPrime { .. })));
    }

    #[test]
    fn det_and_inverse() {
        let a = Mat::ints(&[[2, 1, 0], [1, 3, 1], [0, 1, 4]]);
        assert_eq!(a.det().unwrap(), Rational::int(18));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Mat::identity(3, &()));
        assert!(Mat::ints(&[[1, 2], [2, 4]]).inverse().is_none());
    }

    #[test]
    fn kron_block_convention() {
        let a = Mat::ints(&[[1, 2], [3, 4]]);
        let b = Mat::ints(&[[0, 1], [1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.shape(), (4, 4));
        assert_eq!(*k.get(0, 3), Rational::int(2));
        assert_eq!(*k.get(3, 0), Rational::int(3));
    }
}
