//! Linear subspaces of `Mat(m, n)` in canonical form.
//!
//! A subspace is stored as the RREF of the coordinate matrix whose rows are
//! the row-major vectorizations of a basis. Two equal subspaces therefore have
//! identical representations, and equality is a plain comparison.
//!
//! The trace pairing `⟨A, T⟩ = Tr(A·T)` pairs `A ∈ Mat(m, n)` with
//! `T ∈ Mat(n, m)`. Writing it out, `Tr(A·T) = Σ_{i,j} A[i][j]·T[j][i]`, so in
//! row-major coordinates of `T` (index `j·m + i`) the pairing row of `A` is the
//! vectorization of `Aᵀ`. For example, with `A = E₁₂` in `Mat(2, 2)` the
//! pairing row is `vec(E₂₁) = (0, 0, 1, 0)`, which picks out `T[1][0]`, and
//! indeed `Tr(E₁₂·T) = T[1][0]` (0-based indices).

use crate::error::{Error, Result};
use crate::field::{Field, FiniteTarget, Fp, Fp2};
use crate::matrix::{rref_in_place, Mat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixSubspace<F: Field> {
    rows: usize,
    cols: usize,
    ctx: F::Ctx,
    /// `dim × (rows·cols)`, in RREF with no zero rows.
    coords: Mat<F>,
    pivots: Vec<usize>,
}

/// A subspace after reduction to a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteSubspace {
    Prime(MatrixSubspace<Fp>),
    Quad(MatrixSubspace<Fp2>),
}

impl FiniteSubspace {
    pub fn dim(&self) -> usize {
        match self {
            FiniteSubspace::Prime(s) => s.dim(),
            FiniteSubspace::Quad(s) => s.dim(),
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            FiniteSubspace::Prime(s) => *s.ctx() as u64,
            FiniteSubspace::Quad(s) => s.ctx().p as u64 * s.ctx().p as u64,
        }
    }
}

impl<F: Field> MatrixSubspace<F> {
    /// Canonical span of `vectors`, each of length `rows·cols`.
    pub fn from_vectors(rows: usize, cols: usize, ctx: &F::Ctx, vectors: &[Vec<F>]) -> Result<Self> {
        let width = rows * cols;
        if let Some(v) = vectors.iter().find(|v| v.len() != width) {
            return Err(Error::Shape(format!("vector of length {} in Mat({rows},{cols})", v.len())));
        }
        let mut data: Vec<F> = vectors.concat();
        let n = vectors.len();
        let pivots = rref_in_place(&mut data, n, width, width);
        data.truncate(pivots.len() * width);
        let coords = Mat::new(pivots.len(), width, ctx, data)?;
        Ok(MatrixSubspace { rows, cols, ctx: ctx.clone(), coords, pivots })
    }

    /// Span of matrices sharing the ambient shape `rows × cols`.
    pub fn span(rows: usize, cols: usize, ctx: &F::Ctx, mats: &[Mat<F>]) -> Result<Self> {
        for m in mats {
            if m.shape() != (rows, cols) {
                return Err(Error::Shape(format!("{:?} generator in Mat({rows},{cols})", m.shape())));
            }
            if m.ctx() != ctx {
                return Err(Error::FieldMismatch(F::tag(ctx).to_string(), F::tag(m.ctx()).to_string()));
            }
        }
        let vecs: Vec<Vec<F>> = mats.iter().map(|m| m.data().to_vec()).collect();
        Self::from_vectors(rows, cols, ctx, &vecs)
    }

    /// Span of a non-empty generator list; the shape is taken from the first.
    pub fn from_generators(mats: &[Mat<F>]) -> Result<Self> {
        let first = mats.first().ok_or(Error::EmptyGenerators)?;
        let (r, c) = first.shape();
        Self::span(r, c, first.ctx(), mats)
    }

    pub fn zero(rows: usize, cols: usize, ctx: &F::Ctx) -> Self {
        Self::from_vectors(rows, cols, ctx, &[]).unwrap()
    }

    pub fn full(rows: usize, cols: usize, ctx: &F::Ctx) -> Self {
        let units: Vec<Mat<F>> = (0..rows * cols).map(|k| Mat::unit(rows, cols, k / cols, k % cols, ctx)).collect();
        Self::span(rows, cols, ctx, &units).unwrap()
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

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.rows * self.cols - self.dim()
    }

    pub fn is_full(&self) -> bool {
        self.codim() == 0
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn coords(&self) -> &Mat<F> {
        &self.coords
    }

    /// Coordinate positions of the RREF pivots. The coefficient of basis
    /// element `i` in any element of the space is that element's entry at
    /// `pivots()[i]`.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> Vec<Mat<F>> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    pub fn basis_element(&self, i: usize) -> Mat<F> {
        Mat::new(self.rows, self.cols, &self.ctx, self.coords.row(i).to_vec()).unwrap()
    }

    /// `Σ coeffs[i]·basis[i]`.
    pub fn element(&self, coeffs: &[F]) -> Result<Mat<F>> {
        if coeffs.len() != self.dim() {
            return Err(Error::Shape(format!("{} coefficients for a {}-dim space", coeffs.len(), self.dim())));
        }
        let w = self.rows * self.cols;
        let mut v = vec![F::zero(&self.ctx); w];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, x) in self.coords.row(i).iter().enumerate() {
                if !x.is_zero() {
                    v[k] = v[k].add(&c.mul(x));
                }
            }
        }
        Mat::new(self.rows, self.cols, &self.ctx, v)
    }

    /// Coefficients of `a` in the canonical basis, or `None` if `a ∉ self`.
    pub fn coordinates(&self, a: &Mat<F>) -> Result<Option<Vec<F>>> {
        if a.shape() != self.shape() {
            return Err(Error::Shape(format!("{:?} matrix against Mat{:?}", a.shape(), self.shape())));
        }
        let coeffs: Vec<F> = self.pivots.iter().map(|&p| a.data()[p].clone()).collect();
        let mut residual = a.data().to_vec();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, x) in self.coords.row(i).iter().enumerate() {
                if !x.is_zero() {
                    residual[k] = residual[k].sub(&c.mul(x));
                }
            }
        }
        Ok(residual.iter().all(|x| x.is_zero()).then_some(coeffs))
    }

    pub fn contains(&self, a: &Mat<F>) -> Result<bool> {
        Ok(self.coordinates(a)?.is_some())
    }

    fn check_same_ambient(&self, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!("Mat{:?} vs Mat{:?}", self.shape(), other.shape())));
        }
        if self.ctx != other.ctx {
            return Err(Error::FieldMismatch(F::tag(&self.ctx).to_string(), F::tag(&other.ctx).to_string()));
        }
        Ok(())
    }

    fn check_same_field(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::FieldMismatch(F::tag(&self.ctx).to_string(), F::tag(&other.ctx).to_string()));
        }
        Ok(())
    }

    /// `{T ∈ Mat(n, m) : Tr(A·T) = 0 for all A ∈ self}`.
    pub fn preannihilator(&self) -> Self {
        let (m, n) = self.shape();
        let pairing: Vec<F> = self.basis().iter().flat_map(|a| a.transpose().into_data()).collect();
        let pm = Mat::new(self.dim(), n * m, &self.ctx, pairing).unwrap();
        Self::from_vectors(n, m, &self.ctx, &pm.kernel()).unwrap()
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_same_ambient(other)?;
        let mut vecs: Vec<Vec<F>> = (0..self.dim()).map(|i| self.coords.row(i).to_vec()).collect();
        vecs.extend((0..other.dim()).map(|i| other.coords.row(i).to_vec()));
        Self::from_vectors(self.rows, self.cols, &self.ctx, &vecs)
    }

    /// Intersection from the kernel of `[Lᵀ | -Mᵀ]`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_same_ambient(other)?;
        let (d1, d2) = (self.dim(), other.dim());
        if d1 == 0 || d2 == 0 {
            return Ok(Self::zero(self.rows, self.cols, &self.ctx));
        }
        let w = self.rows * self.cols;
        let stacked = Mat::from_fn(w, d1 + d2, &self.ctx, |k, j| {
            if j < d1 {
                self.coords.get(j, k).clone()
            } else {
                other.coords.get(j - d1, k).neg()
            }
        });
        let vecs: Vec<Vec<F>> =
            stacked.kernel().into_iter().map(|z| self.element(&z[..d1]).unwrap().into_data()).collect();
        Self::from_vectors(self.rows, self.cols, &self.ctx, &vecs)
    }

    /// Span of Kronecker products of basis pairs, inside `Mat(l·m, p·n)`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_same_field(other)?;
        let gens: Vec<Mat<F>> =
            self.basis().iter().flat_map(|a| other.basis().into_iter().map(move |b| a.kron(&b))).collect();
        Self::span(self.rows * other.rows, self.cols * other.cols, &self.ctx, &gens)
    }

    /// `span{A·B : A ∈ self, B ∈ other}`. Products of basis elements suffice
    /// because the product map is bilinear.
    pub fn product_span(&self, other: &Self) -> Result<Self> {
        self.check_same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "product of Mat({},{}) and Mat({},{}) spaces",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let lb = self.basis();
        let rb = other.basis();
        let mut gens = Vec::with_capacity(lb.len() * rb.len());
        for a in &lb {
            for b in &rb {
                gens.push(a.mul(b)?);
            }
        }
        Self::span(self.rows, other.cols, &self.ctx, &gens)
    }

    /// Least `r ≤ max_r` with `span(L ∪ L² ∪ … ∪ L^r) = Mat(n, n)`.
    pub fn power_span_index(&self, max_r: usize) -> Result<Option<usize>> {
        if self.rows != self.cols {
            return Err(Error::Shape("power span of a non-square space".into()));
        }
        let mut power = self.clone();
        let mut acc = self.clone();
        for r in 1..=max_r {
            if acc.is_full() {
                return Ok(Some(r));
            }
            if r == max_r {
                break;
            }
            power = power.product_span(self)?;
            let next = acc.sum(&power)?;
            if next == acc {
                // once L^(r+1) adds nothing, no later power does
                return Ok(None);
            }
            acc = next;
        }
        Ok(None)
    }

    pub fn contains_space(&self, other: &Self) -> Result<bool> {
        self.check_same_ambient(other)?;
        for b in other.basis() {
            if !self.contains(&b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `span{S·A·T}` for invertible `S`, `T`.
    pub fn equivalence_transform(&self, s: &Mat<F>, t: &Mat<F>) -> Result<Self> {
        if !s.is_square() || !t.is_square() || s.cols() != self.rows || t.rows() != self.cols {
            return Err(Error::Shape(format!(
                "transform {:?}·L·{:?} for L in Mat{:?}",
                s.shape(),
                t.shape(),
                self.shape()
            )));
        }
        if !s.is_invertible() || !t.is_invertible() {
            return Err(Error::SingularTransform);
        }
        let gens = self.basis().iter().map(|a| s.mul(a)?.mul(t)).collect::<Result<Vec<_>>>()?;
        Self::span(s.rows(), t.cols(), &self.ctx, &gens)
    }

    /// `{Q·A·P}` written as maps from `range(P)` to `range(Q)`, with both
    /// ranges based on the pivot columns of the RREF of `P` and `Q`.
    pub fn compress(&self, q: &Mat<F>, p: &Mat<F>) -> Result<Self> {
        if q.shape() != (self.rows, self.rows) || p.shape() != (self.cols, self.cols) {
            return Err(Error::Shape(format!(
                "compression by {:?} and {:?} of Mat{:?}",
                q.shape(),
                p.shape(),
                self.shape()
            )));
        }
        if q.mul(q)? != *q || p.mul(p)? != *p {
            return Err(Error::NotIdempotent);
        }
        let range_basis = |m: &Mat<F>| -> Mat<F> {
            let (_, piv) = m.rref();
            Mat::from_fn(m.rows(), piv.len(), m.ctx(), |i, j| m.get(i, piv[j]).clone())
        };
        let bq = range_basis(q);
        let bp = range_basis(p);
        let (r, s) = (bq.cols(), bp.cols());
        let mut gens = Vec::with_capacity(self.dim());
        for a in self.basis() {
            let image = q.mul(&a)?.mul(&bp)?;
            let mut c = Mat::zeros(r, s, &self.ctx);
            for j in 0..s {
                let col = bq.solve(&image.col(j))?.expect("Q·A·p lies in range(Q)");
                for (i, v) in col.into_iter().enumerate() {
                    c.set(i, j, v);
                }
            }
            gens.push(c);
        }
        Self::span(r, s, &self.ctx, &gens)
    }

    pub fn transpose_space(&self) -> Self {
        let gens: Vec<Mat<F>> = self.basis().iter().map(|a| a.transpose()).collect();
        Self::span(self.cols, self.rows, &self.ctx, &gens).unwrap()
    }

    pub fn adjoint_space(&self) -> Self {
        let gens: Vec<Mat<F>> = self.basis().iter().map(|a| a.conj_transpose()).collect();
        Self::span(self.cols, self.rows, &self.ctx, &gens).unwrap()
    }

    /// Positions hit by some element of the space.
    pub fn support(&self) -> Vec<(usize, usize)> {
        (0..self.rows * self.cols)
            .filter(|&k| (0..self.dim()).any(|i| !self.coords.get(i, k).is_zero()))
            .map(|k| (k / self.cols, k % self.cols))
            .collect()
    }

    /// Smallest span of matrix units containing the space.
    pub fn diagonal_bimodule_closure(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Shape("bimodule closure of a non-square space".into()));
        }
        Ok(Self::pattern(self.rows, self.cols, &self.ctx, &self.support()))
    }

    pub fn pattern(rows: usize, cols: usize, ctx: &F::Ctx, cells: &[(usize, usize)]) -> Self {
        let gens: Vec<Mat<F>> = cells.iter().map(|&(i, j)| Mat::unit(rows, cols, i, j, ctx)).collect();
        Self::span(rows, cols, ctx, &gens).unwrap()
    }

    /// True when the space is spanned by matrix units.
    pub fn is_pattern(&self) -> bool {
        self.diagonal_bimodule_closure().map(|c| c == *self).unwrap_or(false)
    }

    /// Image of the space under the projection onto diagonal matrices.
    pub fn diagonal_expectation(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Shape("diagonal expectation of a non-square space".into()));
        }
        let n = self.rows;
        let gens: Vec<Mat<F>> = self
            .basis()
            .iter()
            .map(|a| {
                Mat::from_fn(n, n, &self.ctx, |i, j| if i == j { a.get(i, i).clone() } else { F::zero(&self.ctx) })
            })
            .collect();
        Self::span(n, n, &self.ctx, &gens)
    }

    pub fn map_field<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> Result<G>) -> Result<MatrixSubspace<G>> {
        let vecs = (0..self.dim())
            .map(|i| self.coords.row(i).iter().map(&f).collect::<Result<Vec<G>>>())
            .collect::<Result<Vec<_>>>()?;
        MatrixSubspace::from_vectors(self.rows, self.cols, ctx, &vecs)
    }

    /// Entrywise reduction of the canonical basis, re-canonicalized. The
    /// reduced space may have smaller dimension.
    pub fn reduce_to(&self, target: &FiniteTarget) -> Result<FiniteSubspace> {
        Ok(match target {
            FiniteTarget::Prime(p) => FiniteSubspace::Prime(self.map_field(p, |x| x.to_prime_field(*p))?),
            FiniteTarget::Quad(c) => FiniteSubspace::Quad(self.map_field(c, |x| x.to_quad_field(c))?),
        })
    }

    /// Appends a row of free entries above every element (`[x; M]`).
    pub fn row_augmented(&self) -> Self {
        let (m, n) = self.shape();
        let mut vecs: Vec<Vec<F>> = (0..n).map(|j| Mat::<F>::unit(m + 1, n, 0, j, &self.ctx).into_data()).collect();
        for b in self.basis() {
            let mut v = vec![F::zero(&self.ctx); n];
            v.extend_from_slice(b.data());
            vecs.push(v);
        }
        Self::from_vectors(m + 1, n, &self.ctx, &vecs).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    fn toeplitz3() -> MatrixSubspace<Q> {
        let gens: Vec<Mat<Q>> =
            (-2i64..=2).map(|d| Mat::from_fn(3, 3, &(), |i, j| Q::int((i as i64 - j as i64 == d) as i64))).collect();
        MatrixSubspace::from_generators(&gens).unwrap()
    }

    fn trace_zero3() -> MatrixSubspace<Q> {
        MatrixSubspace::span(3, 3, &(), &[Mat::identity(3, &())]).unwrap().preannihilator()
    }

    #[test]
    fn generators() {
        let i2 = Mat::<Q>::identity(2, &());
        let s = MatrixSubspace::from_generators(&[i2.clone(), i2.scale(&Q::int(2))]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(MatrixSubspace::<Q>::full(3, 3, &()).dim(), 9);
        assert_eq!(toeplitz3().dim(), 5);
        assert_eq!(MatrixSubspace::<Q>::from_generators(&[]), Err(Error::EmptyGenerators));
        let bad = MatrixSubspace::from_generators(&[i2, Mat::identity(3, &())]);
        assert!(matches!(bad, Err(Error::Shape(_))));
    }

    #[test]
    fn membership() {
        let t = toeplitz3();
        assert!(t.contains(&Mat::identity(3, &())).unwrap());
        assert!(!trace_zero3().contains(&Mat::identity(3, &())).unwrap());
        assert!(t.contains(&Mat::zeros(3, 3, &())).unwrap());
        assert!(t.contains(&Mat::zeros(2, 3, &())).is_err());
    }

    #[test]
    fn preannihilator_examples() {
        assert!(MatrixSubspace::<Q>::full(3, 3, &()).preannihilator().is_zero());
        let tp = toeplitz3().preannihilator();
        assert_eq!(tp.dim(), 4);
        for b in tp.basis() {
            for d in -2i64..=2 {
                let s = (0..3)
                    .flat_map(|i| (0..3).map(move |j| (i, j)))
                    .filter(|&(i, j)| i as i64 - j as i64 == d)
                    .fold(Q::int(0), |acc, (i, j)| acc.add(b.get(i, j)));
                assert!(s.is_zero());
            }
        }
        let r = Mat::ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 0]]);
        assert_eq!(MatrixSubspace::from_generators(&[r]).unwrap().preannihilator().dim(), 8);
    }

    #[test]
    fn pairing_convention_on_rectangles() {
        // L ⊆ Mat(2,3) gives L_⊥ ⊆ Mat(3,2) with Tr(A·T) = 0
        let a = Mat::ints(&[[1, 2, 0], [0, 1, 3]]);
        let l = MatrixSubspace::from_generators(std::slice::from_ref(&a)).unwrap();
        let lp = l.preannihilator();
        assert_eq!(lp.shape(), (3, 2));
        assert_eq!(lp.dim(), 5);
        for t in lp.basis() {
            assert!(a.mul(&t).unwrap().trace().is_zero());
        }
    }

    #[test]
    fn sum_and_intersection() {
        let t = toeplitz3();
        assert_eq!(t.sum(&t).unwrap(), t);
        assert_eq!(t.intersect(&t).unwrap(), t);
        assert_eq!(t.intersect(&trace_zero3()).unwrap().dim(), 4);
        let e11 = MatrixSubspace::<Q>::pattern(3, 3, &(), &[(0, 0)]);
        let e22 = MatrixSubspace::pattern(3, 3, &(), &[(1, 1)]);
        assert_eq!(e11.sum(&e22).unwrap().dim(), 2);
    }

    #[test]
    fn tensor_examples() {
        let i2 = MatrixSubspace::from_generators(&[Mat::<Q>::identity(2, &())]).unwrap();
        assert_eq!(i2.tensor(&MatrixSubspace::full(2, 2, &())).unwrap().dim(), 4);
        let t2 = MatrixSubspace::from_generators(&[
            Mat::ints(&[[1, 0], [0, 1]]),
            Mat::ints(&[[0, 1], [0, 0]]),
            Mat::ints(&[[0, 0], [1, 0]]),
        ])
        .unwrap();
        assert_eq!(t2.tensor(&t2).unwrap().dim(), 9);
    }

    #[test]
    fn product_examples() {
        let m2 = MatrixSubspace::<Q>::full(2, 2, &());
        assert_eq!(m2.product_span(&m2).unwrap(), m2);
        assert!(toeplitz3().product_span(&toeplitz3()).unwrap().is_full());
        let e12 = MatrixSubspace::<Q>::pattern(2, 2, &(), &[(0, 1)]);
        assert!(e12.product_span(&e12).unwrap().is_zero());
    }

    #[test]
    fn power_index() {
        assert_eq!(MatrixSubspace::<Q>::full(3, 3, &()).power_span_index(5).unwrap(), Some(1));
        assert_eq!(toeplitz3().power_span_index(5).unwrap(), Some(2));
        let e12 = MatrixSubspace::<Q>::pattern(2, 2, &(), &[(0, 1)]);
        assert_eq!(e12.power_span_index(6).unwrap(), None);
    }

    #[test]
    fn equivalence() {
        let t = toeplitz3();
        let i3 = Mat::<Q>::identity(3, &());
        assert_eq!(t.equivalence_transform(&i3, &i3).unwrap(), t);
        let s = Mat::ints(&[[1, 2, 0], [0, 1, 0], [3, 0, 1]]);
        let tt = Mat::ints(&[[2, 0, 1], [1, 1, 0], [0, 0, 1]]);
        assert_eq!(t.equivalence_transform(&s, &tt).unwrap().dim(), 5);
        let full = MatrixSubspace::<Q>::full(3, 3, &());
        assert_eq!(full.equivalence_transform(&s, &tt).unwrap(), full);
        let sing = Mat::ints(&[[1, 1, 0], [1, 1, 0], [0, 0, 1]]);
        assert_eq!(t.equivalence_transform(&sing, &tt), Err(Error::SingularTransform));
    }

    #[test]
    fn compression() {
        let t = toeplitz3();
        let i3 = Mat::<Q>::identity(3, &());
        assert_eq!(t.compress(&i3, &i3).unwrap(), t);
        let p = Mat::ints(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]);
        let c = MatrixSubspace::<Q>::full(4, 4, &()).compress(&p, &p).unwrap();
        assert_eq!(c, MatrixSubspace::full(2, 2, &()));
        let not_idem = Mat::ints(&[[1, 1, 0], [0, 1, 0], [0, 0, 0]]);
        assert_eq!(t.compress(&not_idem, &i3), Err(Error::NotIdempotent));
    }

    #[test]
    fn transposes() {
        let t = toeplitz3();
        assert_eq!(t.transpose_space(), t);
        let e12 = MatrixSubspace::<Q>::pattern(2, 2, &(), &[(0, 1)]);
        assert_eq!(e12.transpose_space(), MatrixSubspace::pattern(2, 2, &(), &[(1, 0)]));
        assert_eq!(t.adjoint_space().adjoint_space(), t);
    }

    #[test]
    fn bimodule_closure() {
        let d = MatrixSubspace::from_generators(&[Mat::ints(&[[1, 0], [0, 1]])]).unwrap();
        assert_eq!(d.diagonal_bimodule_closure().unwrap(), MatrixSubspace::pattern(2, 2, &(), &[(0, 0), (1, 1)]));
        assert!(toeplitz3().diagonal_bimodule_closure().unwrap().is_full());
        let p = MatrixSubspace::<Q>::pattern(3, 3, &(), &[(0, 1), (2, 2)]);
        assert_eq!(p.diagonal_bimodule_closure().unwrap(), p);
    }

    #[test]
    fn row_augmentation() {
        assert_eq!(toeplitz3().row_augmented().dim(), 8);
        assert_eq!(MatrixSubspace::<Q>::zero(3, 3, &()).row_augmented().shape(), (4, 3));
    }
}
