//! Block constructions in which both a space and its pre-annihilator are
//! transitive, and the rank-one certificate showing that a tensor square of
//! such a space is not transitive.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::deciders::ff_low_rank_search;
use crate::error::{Error, Result};
use crate::field::{Field, FiniteField, NumberField, NumberFieldCtx, Rational};
use crate::matrix::Mat;
use crate::poly::Poly;
use crate::random::random_subspace_ff;
use crate::subspace::MatrixSubspace;

use super::classic::min_rank_diagonal_annihilator;

/// Applies a linear map on `Mat(n)`, given by its matrix on row-major
/// coordinates, to `a`.
pub fn apply_map<F: Field>(map: &Mat<F>, a: &Mat<F>) -> Result<Mat<F>> {
    let v = map.mul_vec(a.data())?;
    Mat::new(a.rows(), a.cols(), a.ctx(), v)
}

/// Adjoint of a map on `Mat(n)` for the pairing `⟨A, X⟩ = Tr(A·X)`.
pub fn pairing_adjoint<F: Field>(map: &Mat<F>, n: usize) -> Mat<F> {
    let t = |r: usize| (r % n) * n + r / n;
    Mat::from_fn(n * n, n * n, map.ctx(), |i, j| map.get(t(j), t(i)).clone())
}

/// `Φ([[a, b], [c, d]]) = [[d, 2c], [b, a]]` on row-major coordinates.
pub fn phi_example<F: Field>(ctx: &F::Ctx) -> Mat<F> {
    Mat::from_ints(ctx, &[[0, 0, 0, 1], [0, 0, 2, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
}

fn blocks<F: Field>(tl: &Mat<F>, tr: &Mat<F>, bl: &Mat<F>, br: &Mat<F>) -> Mat<F> {
    let n = tl.rows();
    Mat::from_fn(2 * n, 2 * n, tl.ctx(), |i, j| {
        let src = match (i < n, j < n) {
            (true, true) => tl,
            (true, false) => tr,
            (false, true) => bl,
            (false, false) => br,
        };
        src.get(i % n, j % n).clone()
    })
}

/// `{[[A, Φ(B)], [B, A]]}` with the example `Φ`, together with that `Φ`.
pub fn dual_transitive_8dim<F: Field>(ctx: &F::Ctx) -> (MatrixSubspace<F>, Mat<F>) {
    let phi = phi_example(ctx);
    let z = Mat::zeros(2, 2, ctx);
    let mut gens = Vec::new();
    for c in 0..4 {
        let e = Mat::unit(2, 2, c / 2, c % 2, ctx);
        gens.push(blocks(&e, &z, &z, &e));
        gens.push(blocks(&z, &apply_map(&phi, &e).unwrap(), &e, &z));
    }
    (MatrixSubspace::span(4, 4, ctx, &gens).unwrap(), phi)
}

/// The pre-annihilator of [`dual_transitive_8dim`] written out entrywise:
/// `[[a, b, −h, −g], [c, d, −f, −e], [e, f, −a, −b], [g/2, h, −c, −d]]`.
pub fn dual_transitive_8dim_preannihilator() -> MatrixSubspace<Rational> {
    let gens: Vec<Mat<Rational>> = (0..8)
        .map(|p| {
            let v = |q: usize| Rational::int((p == q) as i64);
            let [a, b, c, d, e, f, g, h] = std::array::from_fn(v);
            let half = g.mul(&Rational::new(1, 2));
            Mat::from_fn(4, 4, &(), |i, j| {
                let row = [
                    [&a, &b, &h.neg(), &g.neg()],
                    [&c, &d, &f.neg(), &e.neg()],
                    [&e, &f, &a.neg(), &b.neg()],
                    [&half, &h, &c.neg(), &d.neg()],
                ];
                row[i][j].clone()
            })
        })
        .collect();
    MatrixSubspace::from_generators(&gens).unwrap()
}

/// `{[[A, B], [Φ(B), Φ(A)]]}` for a map `Φ` on `Mat(n)`.
pub fn phi_block_from_map<F: Field>(n: usize, phi: &Mat<F>) -> Result<MatrixSubspace<F>> {
    if phi.shape() != (n * n, n * n) {
        return Err(Error::Shape(format!("map of shape {:?} on Mat({n})", phi.shape())));
    }
    let ctx = phi.ctx();
    let z = Mat::zeros(n, n, ctx);
    let mut gens = Vec::new();
    for c in 0..n * n {
        let e = Mat::unit(n, n, c / n, c % n, ctx);
        let pe = apply_map(phi, &e)?;
        gens.push(blocks(&e, &z, &z, &pe));
        gens.push(blocks(&z, &e, &pe, &z));
    }
    MatrixSubspace::span(2 * n, 2 * n, ctx, &gens)
}

/// Whether `(2 + √2)·k < n`, decided exactly as `n − 2k > 0` and
/// `(n − 2k)² > 2k²`.
pub fn phi_block_admissible(n: usize, k: usize) -> bool {
    let (n, k) = (n as i128, k as i128);
    k >= 1 && n - 2 * k > 0 && (n - 2 * k).pow(2) > 2 * k * k
}

/// `Φ = J·T·Q`: `Q` reads off the coordinates of `A` at the non-pivot
/// positions of the canonical basis of `N` after reducing `A` modulo `N`,
/// and `T` sends the `i`-th such coordinate to the `i`-th basis element of
/// `N`. The kernel of `Φ` is `N` and its image lies in `N`.
pub fn phi_theorem_map<F: Field>(n: usize, k: usize, ctx: &F::Ctx) -> Result<Mat<F>> {
    if !phi_block_admissible(n, k) {
        return Err(Error::ParameterOutOfRange(format!("phi block needs 1 <= k < n/(2 + sqrt 2) (n = {n}, k = {k})")));
    }
    let nn: MatrixSubspace<F> = min_rank_diagonal_annihilator(n, n, k, ctx)?;
    let basis = nn.basis();
    let free = n * n - nn.dim();
    if free > basis.len() {
        return Err(Error::ParameterOutOfRange(format!(
            "quotient of dimension {free} exceeds dim N = {}",
            basis.len()
        )));
    }
    quotient_map(&nn, &basis[..free])
}

/// The map on `Mat(n)` with kernel `nn` sending the `i`-th non-pivot
/// coordinate of `A` modulo `nn` to `target[i]`.
fn quotient_map<F: Field>(nn: &MatrixSubspace<F>, target: &[Mat<F>]) -> Result<Mat<F>> {
    let (n, ctx) = (nn.rows(), nn.ctx());
    let basis = nn.basis();
    let pivots = nn.pivots();
    let free: Vec<usize> = (0..n * n).filter(|c| !pivots.contains(c)).collect();
    if target.len() != free.len() {
        return Err(Error::Shape(format!("{} targets for a quotient of dimension {}", target.len(), free.len())));
    }
    let mut map: Mat<F> = Mat::zeros(n * n, n * n, ctx);
    for c in 0..n * n {
        // coordinates of e_c modulo N at the free positions
        let residue: Vec<F> = match pivots.iter().position(|&p| p == c) {
            Some(r) => free.iter().map(|&f| basis[r].data()[f].neg()).collect(),
            None => free.iter().map(|&f| if f == c { F::one(ctx) } else { F::zero(ctx) }).collect(),
        };
        for (i, coef) in residue.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (r, x) in target[i].data().iter().enumerate() {
                let cur = map.get(r, c).add(&coef.mul(x));
                map.set(r, c, cur);
            }
        }
    }
    Ok(map)
}

/// Seeded search over a finite field for `N ⊆ Mat(n)` of dimension
/// `(n − k)²` and `W ⊆ N` of dimension `n² − (n − k)²` such that `N`, `N⊥`
/// and `W⊥` have no nonzero element of rank `≤ k`. With `Φ` of kernel `N` and
/// image `W`, both the block space and its pre-annihilator are k-transitive.
/// Returns `Φ` and the block space.
pub fn phi_block_search_ff<F: FiniteField>(
    n: usize,
    k: usize,
    ctx: &F::Ctx,
    seed: u64,
    attempts: usize,
    budget: u128,
) -> Result<Option<(Mat<F>, MatrixSubspace<F>)>> {
    if !phi_block_admissible(n, k) {
        return Err(Error::ParameterOutOfRange(format!("phi block needs 1 <= k < n/(2 + sqrt 2) (n = {n}, k = {k})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (dn, dw) = ((n - k) * (n - k), n * n - (n - k) * (n - k));
    let free_of_low_rank =
        |v: &MatrixSubspace<F>| -> Result<bool> { Ok(ff_low_rank_search(v, k, budget)?.witness.is_none()) };
    for _ in 0..attempts {
        let nn = random_subspace_ff::<F, _>(n, n, dn, ctx, &mut rng);
        if nn.dim() != dn || !free_of_low_rank(&nn)? || !free_of_low_rank(&nn.preannihilator())? {
            continue;
        }
        let q = F::size(ctx);
        let target: Vec<Mat<F>> = (0..dw)
            .map(|_| {
                let c: Vec<F> = (0..dn).map(|_| F::element(ctx, rng.random_range(0..q))).collect();
                nn.element(&c)
            })
            .collect::<Result<_>>()?;
        let w = MatrixSubspace::span(n, n, ctx, &target)?;
        if w.dim() != dw || !free_of_low_rank(&w.preannihilator())? {
            continue;
        }
        let phi = quotient_map(&nn, &target)?;
        let l = phi_block_from_map(n, &phi)?;
        return Ok(Some((phi, l)));
    }
    Ok(None)
}

/// `[[A, B], [Φ(B), Φ(A)]]` with `Φ` from [`phi_theorem_map`]. Every nonzero
/// element has rank `> k`, so the pre-annihilator is k-transitive. The space
/// itself is not: `N⊥ ⊆ ker Φᵗ` holds rank-one matrices.
pub fn phi_block_space<F: Field>(n: usize, k: usize, ctx: &F::Ctx) -> Result<MatrixSubspace<F>> {
    phi_block_from_map(n, &phi_theorem_map(n, k, ctx)?)
}

/// `det(x·I − P)`, by interpolation at `x = 0, …, d`.
pub fn characteristic_polynomial(p: &Mat<Rational>) -> Result<Poly<Rational>> {
    if !p.is_square() {
        return Err(Error::Shape("characteristic polynomial of a non-square matrix".into()));
    }
    let d = p.rows();
    let xs: Vec<Rational> = (0..=d as i64).map(Rational::int).collect();
    let vals = xs.iter().map(|x| Mat::identity(d, &()).scale(x).sub(p)?.det()).collect::<Result<Vec<_>>>()?;
    let vander = Mat::from_fn(d + 1, d + 1, &(), |i, j| (0..j).fold(Rational::int(1), |acc, _| acc.mul(&xs[i])));
    let coeffs = vander.solve(&vals)?.expect("distinct nodes");
    Ok(Poly::new(&(), coeffs))
}

fn divisors(v: i64) -> Vec<i64> {
    let v = v.unsigned_abs();
    (1..=v).filter(|d| v.is_multiple_of(*d)).map(|d| d as i64).collect()
}

/// Rational roots with multiplicity and the remaining cofactor.
fn split_rational_roots(f: &Poly<Rational>) -> Result<(Vec<Rational>, Poly<Rational>)> {
    let mut rest = f.monic();
    let mut roots = Vec::new();
    while rest.degree().unwrap_or(0) >= 1 && rest.coeff(0).is_zero() {
        roots.push(Rational::int(0));
        rest = Poly::new(&(), rest.coeffs()[1..].to_vec());
    }
    let deg = rest.degree().unwrap_or(0);
    if deg == 0 {
        return Ok((roots, rest));
    }
    let lcm = rest.coeffs().iter().fold(num_bigint::BigInt::from(1), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints = rest
        .coeffs()
        .iter()
        .map(|c| {
            let v = c.numer() * (&lcm / c.denom());
            i64::try_from(v).ok().filter(|x| x.unsigned_abs() <= 1_000_000)
        })
        .collect::<Option<Vec<i64>>>()
        .ok_or_else(|| Error::Unsupported("coefficients too large for the rational root search".into()))?;
    let mut candidates = Vec::new();
    for p in divisors(ints[0]) {
        for q in divisors(ints[deg]) {
            candidates.push(Rational::new(p, q));
            candidates.push(Rational::new(-p, q));
        }
    }
    candidates.sort_by(|a, b| a.0.cmp(&b.0));
    candidates.dedup();
    for r in candidates {
        while rest.degree().unwrap_or(0) >= 1 && rest.eval(&r).is_zero() {
            let lin = Poly::new(&(), vec![r.neg(), Rational::int(1)]);
            rest = rest.div_rem(&lin).0;
            roots.push(r.clone());
        }
    }
    Ok((roots, rest))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvalue {
    /// Display form; `α` denotes a root of the quadratic factor.
    pub value: String,
    pub eigenspace_dim: usize,
    /// Rank of each eigenspace basis vector, read as an `n × n` matrix.
    pub ranks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenAnalysis {
    pub charpoly: String,
    /// Non-linear irreducible factor left after removing rational roots.
    pub quadratic_factor: Option<String>,
    pub squarefree: bool,
    pub eigenvalues: Vec<Eigenvalue>,
}

impl EigenAnalysis {
    /// Distinct eigenvalues over the algebraic closure.
    pub fn distinct(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn all_eigenvectors_rank(&self, r: usize) -> bool {
        self.eigenvalues.iter().all(|e| e.ranks.iter().all(|&x| x == r))
    }
}

fn eigen_ranks<F: Field>(p: &Mat<F>, lambda: &F, n: usize) -> Result<(usize, Vec<usize>)> {
    let ctx = p.ctx();
    let d = p.rows();
    let shifted = Mat::from_fn(d, d, ctx, |i, j| {
        let x = p.get(i, j).neg();
        if i == j {
            x.add(lambda)
        } else {
            x
        }
    });
    let ker = shifted.kernel();
    let ranks = ker.iter().map(|v| Mat::new(n, n, ctx, v.clone()).map(|m| m.rank())).collect::<Result<Vec<_>>>()?;
    Ok((ker.len(), ranks))
}

/// Exact eigen-structure of a map on `Mat(n)`. Supports characteristic
/// polynomials that split over `Q` up to a single quadratic factor, whose
/// roots are handled in `Q[x]/(factor)`.
pub fn eigen_analysis(p: &Mat<Rational>, n: usize) -> Result<EigenAnalysis> {
    if p.shape() != (n * n, n * n) {
        return Err(Error::Shape(format!("map of shape {:?} on Mat({n})", p.shape())));
    }
    let chi = characteristic_polynomial(p)?;
    let squarefree = chi.is_squarefree();
    let (roots, rest) = split_rational_roots(&chi)?;
    let mut eigenvalues = Vec::new();
    let mut seen: Vec<Rational> = Vec::new();
    for r in roots {
        if seen.contains(&r) {
            continue;
        }
        let (dim, ranks) = eigen_ranks(p, &r, n)?;
        eigenvalues.push(Eigenvalue { value: r.to_string(), eigenspace_dim: dim, ranks });
        seen.push(r);
    }
    let quadratic_factor = match rest.degree() {
        Some(0) | None => None,
        Some(2) => {
            let ctx = NumberFieldCtx::new(&rest)?;
            let alpha = NumberField::generator(&ctx);
            // the other root is −c1 − α for x² + c1·x + c0
            let beta = NumberField::from_rational(&ctx, &rest.coeff(1).neg()).sub(&alpha);
            let pk = p.map(&ctx, |x| NumberField::from_rational(&ctx, x));
            for (name, root) in [("α", alpha), ("-α", beta)] {
                let (dim, ranks) = eigen_ranks(&pk, &root, n)?;
                let label = if rest.coeff(1).is_zero() { name.to_string() } else { format!("{name} (root of {rest})") };
                eigenvalues.push(Eigenvalue { value: label, eigenspace_dim: dim, ranks });
            }
            Some(rest.to_string())
        }
        Some(d) => return Err(Error::Unsupported(format!("irreducible factor of degree {d}"))),
    };
    Ok(EigenAnalysis { charpoly: chi.to_string(), quadratic_factor, squarefree, eigenvalues })
}

/// The rank-one certificate for `L ⊗ Mat(4) + Mat(4) ⊗ L`, `L` the
/// 8-dimensional example, and its consequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorCertificate {
    /// `u·vᵀ` with `u = (e4, e3, e2, e1)`, `v = (e4, e3, −e2, −e1)` stacked.
    pub witness: Mat<Rational>,
    pub rank: usize,
    /// Membership of `witness` in `L ⊗ Mat(4) + Mat(4) ⊗ L`.
    pub in_sum: bool,
    /// `L ⊗ Mat(4) + Mat(4) ⊗ L` equals the pre-annihilator of `L⊥ ⊗ L⊥`.
    pub sum_is_dual: bool,
    /// The eight block equations, each checked by membership in `L`.
    pub equations: Vec<(String, bool)>,
    /// `witness·(D ⊗ D)` with `D = diag(1, 1, −1, −1)`: a rank-one element
    /// of the pre-annihilator of `L ⊗ L`, using `L⊥ = L·D`.
    pub tensor_square_witness: Mat<Rational>,
    /// `L⊥ = L·D`.
    pub dual_is_right_translate: bool,
}

impl TensorCertificate {
    pub fn holds(&self) -> bool {
        self.rank == 1
            && self.in_sum
            && self.sum_is_dual
            && self.dual_is_right_translate
            && self.equations.len() == 8
            && self.equations.iter().all(|(_, ok)| *ok)
    }
}

pub fn fully_transitive_counterexample_certificate() -> Result<TensorCertificate> {
    let (l, _) = dual_transitive_8dim::<Rational>(&());
    let e = |i: usize| -> Vec<Rational> { (0..4).map(|j| Rational::int((i == j) as i64)).collect() };
    let neg = |v: Vec<Rational>| -> Vec<Rational> { v.iter().map(Rational::neg).collect() };
    let u = [e(3), e(2), e(1), e(0)];
    let v = [e(3), e(2), neg(e(1)), neg(e(0))];
    let stack = |parts: &[Vec<Rational>; 4]| Mat::column(&(), &parts.concat());
    let (uc, vc) = (stack(&u), stack(&v));
    let witness = uc.mul(&vc.transpose())?;
    let full = MatrixSubspace::<Rational>::full(4, 4, &());
    let sum = l.tensor(&full)?.sum(&full.tensor(&l)?)?;
    let lp = l.preannihilator();
    let sum_is_dual = lp.tensor(&lp)?.preannihilator() == sum;
    let outer = |i: usize, j: usize| Mat::column(&(), &u[i]).mul(&Mat::column(&(), &v[j]).transpose()).unwrap();
    let system: [(usize, usize, i64, usize, usize); 8] = [
        (1, 1, 1, 3, 3),
        (1, 2, 1, 3, 4),
        (2, 1, 1, 4, 3),
        (2, 2, 1, 4, 4),
        (2, 4, 1, 3, 1),
        (2, 3, 1, 3, 2),
        (1, 3, 1, 4, 2),
        (1, 4, 2, 4, 1),
    ];
    let mut equations = Vec::new();
    for (i, j, c, p, q) in system {
        let lhs = outer(i - 1, j - 1).sub(&outer(p - 1, q - 1).scale(&Rational::int(c)))?;
        let coef = if c == 1 { String::new() } else { c.to_string() };
        equations.push((format!("u{i}v{j}* - {coef}u{p}v{q}*"), l.contains(&lhs)?));
    }
    let d = Mat::<Rational>::from_ints(&(), &[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]);
    let dual_is_right_translate = l.equivalence_transform(&Mat::identity(4, &()), &d)? == lp;
    let tensor_square_witness = witness.mul(&d.kron(&d))?;
    Ok(TensorCertificate {
        rank: witness.rank(),
        in_sum: sum.contains(&witness)?,
        witness,
        sum_is_dual,
        equations,
        tensor_square_witness,
        dual_is_right_translate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    type Q = Rational;

    #[test]
    fn phi_example_table() {
        let phi = phi_example::<Q>(&());
        let a = Mat::ints(&[[1, 2], [3, 4]]);
        assert_eq!(apply_map(&phi, &a).unwrap(), Mat::ints(&[[4, 6], [2, 1]]));
    }

    #[test]
    fn dual8_matches_display() {
        let (l, _) = dual_transitive_8dim::<Q>(&());
        assert_eq!(l.dim(), 8);
        let x = Mat::ints(&[[1, 2, 8, 14], [3, 4, 6, 5], [5, 6, 1, 2], [7, 8, 3, 4]]);
        assert!(l.contains(&x).unwrap());
        assert_eq!(l.preannihilator(), dual_transitive_8dim_preannihilator());
    }

    #[test]
    fn example_eigen_structure() {
        let phi = phi_example::<Q>(&());
        for map in [phi.clone(), pairing_adjoint(&phi, 2)] {
            let e = eigen_analysis(&map, 2).unwrap();
            assert!(e.squarefree);
            assert_eq!(e.distinct(), 4);
            assert!(e.eigenvalues.iter().all(|x| x.eigenspace_dim == 1));
            assert!(e.all_eigenvectors_rank(2));
            assert_eq!(e.quadratic_factor.as_deref().map(|s| s.contains('2')), Some(true));
        }
        // a rank-one eigenvector is detected
        let swap = Mat::<Q>::from_ints(&(), &[[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 2]]);
        let e = eigen_analysis(&swap, 2).unwrap();
        assert!(!e.all_eigenvectors_rank(2));
    }

    #[test]
    fn charpoly_oracle() {
        // companion matrix of x³ − 2x + 5
        let c = Mat::<Q>::ints(&[[0, 0, -5], [1, 0, 2], [0, 1, 0]]);
        let chi = characteristic_polynomial(&c).unwrap();
        let want: Vec<Q> = [5, -2, 0, 1].iter().map(|&x| Q::int(x)).collect();
        assert_eq!(chi.coeffs(), want.as_slice());
        let (roots, rest) = split_rational_roots(&Poly::new(&(), want)).unwrap();
        assert!(roots.is_empty() && rest.degree() == Some(3));
    }

    #[test]
    fn theorem_map_properties() {
        assert!(phi_block_admissible(4, 1));
        assert!(!phi_block_admissible(4, 2));
        assert!(!phi_block_admissible(3, 1));
        assert!(phi_block_admissible(7, 2));
        assert!(!phi_block_admissible(6, 2));
        let n = 4;
        let phi = phi_theorem_map::<Q>(n, 1, &()).unwrap();
        let nn = min_rank_diagonal_annihilator::<Q>(n, n, 1, &()).unwrap();
        assert_eq!(phi.rank(), n * n - nn.dim());
        for b in nn.basis() {
            assert!(apply_map(&phi, &b).unwrap().data().iter().all(|x| x.is_zero()));
        }
        for c in 0..n * n {
            let img = apply_map(&phi, &Mat::unit(n, n, c / n, c % n, &())).unwrap();
            assert!(nn.contains(&img).unwrap());
        }
        let l = phi_block_space::<Q>(4, 1, &()).unwrap();
        assert_eq!((l.shape(), l.dim()), ((8, 8), 32));
        assert!(matches!(phi_block_space::<Q>(4, 2, &()), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn theorem_map_leaves_corner_units_in_dual() {
        // N vanishes on the corner cells, so diag(0, E) lies in L⊥ for any T
        let l = phi_block_space::<Q>(4, 1, &()).unwrap();
        let lp = l.preannihilator();
        for (i, j) in [(0, 3), (3, 0)] {
            let w = blocks(
                &Mat::zeros(4, 4, &()),
                &Mat::zeros(4, 4, &()),
                &Mat::zeros(4, 4, &()),
                &Mat::unit(4, 4, i, j, &()),
            );
            assert!(lp.contains(&w).unwrap());
            assert_eq!(w.rank(), 1);
        }
    }

    #[test]
    fn generic_search_gives_both_transitive() {
        let (phi, l) =
            phi_block_search_ff::<Fp>(4, 1, &5, 7, 20, 1_000_000).unwrap().expect("found within 20 attempts");
        assert_eq!(phi.rank(), 7);
        assert_eq!(l.dim(), 32);
        assert!(ff_low_rank_search(&l, 1, 1_000_000).unwrap().witness.is_none());
        assert!(ff_low_rank_search(&l.preannihilator(), 1, 1_000_000).unwrap().witness.is_none());
    }

    #[test]
    fn theorem_dual_form() {
        // L⊥ = {[[Φᵗ(X), −Y], [Φᵗ(Y), −X]]}
        let phi = phi_example::<Q>(&());
        let l = phi_block_from_map(2, &phi).unwrap();
        let adj = pairing_adjoint(&phi, 2);
        let mut gens = Vec::new();
        for c in 0..4 {
            let e = Mat::<Q>::unit(2, 2, c / 2, c % 2, &());
            let z = Mat::zeros(2, 2, &());
            gens.push(blocks(&apply_map(&adj, &e).unwrap(), &z, &z, &e.scale(&Q::int(-1))));
            gens.push(blocks(&z, &e.scale(&Q::int(-1)), &apply_map(&adj, &e).unwrap(), &z));
        }
        assert_eq!(l.preannihilator(), MatrixSubspace::from_generators(&gens).unwrap());
    }

    #[test]
    fn certificate() {
        let c = fully_transitive_counterexample_certificate().unwrap();
        assert!(c.holds(), "{c:?}");
        assert_eq!(c.tensor_square_witness.rank(), 1);
    }

    #[test]
    fn finite_field_builds() {
        let (l, _) = dual_transitive_8dim::<Fp>(&5);
        assert_eq!(l.dim(), 8);
    }
}
