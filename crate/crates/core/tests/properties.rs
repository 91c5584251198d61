use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use translab::deciders::{check_k_transitive, rationalize_and_verify, CheckOptions, NumericOptions};
use translab::random::{random_subspace_ff, random_subspace_q};
use translab::{Field, Fp, Mat, MatrixSubspace, Rational};

fn gf(p: u32, rows: usize, cols: usize, gens: usize, seed: u64) -> MatrixSubspace<Fp> {
    random_subspace_ff::<Fp, _>(rows, cols, gens, &p, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn q_mat(rows: usize, cols: usize, entries: &[i64]) -> Mat<Rational> {
    Mat::from_fn(rows, cols, &(), |i, j| Rational::int(entries[(i * cols + j) % entries.len()]))
}

fn pairs_to_zero<F: Field>(a: &MatrixSubspace<F>, b: &MatrixSubspace<F>) -> bool {
    let bb = b.basis();
    a.basis().iter().all(|x| bb.iter().all(|t| x.mul(t).unwrap().trace().is_zero()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_transpose_invariant(rows in 1usize..5, cols in 1usize..5, entries in prop::collection::vec(-3i64..=3, 1..25)) {
        let a = q_mat(rows, cols, &entries);
        prop_assert_eq!(a.rank(), a.transpose().rank());
        prop_assert!(a.rank() <= rows.min(cols));
        let (r, piv) = a.rref();
        prop_assert_eq!(piv.len(), a.rank());
        prop_assert_eq!(r.rref().0, r);
    }

    #[test]
    fn span_is_canonical(seed in any::<u64>(), rows in 1usize..4, cols in 1usize..4, gens in 0usize..6) {
        let s = gf(5, rows, cols, gens, seed);
        let mut shuffled = s.basis();
        shuffled.reverse();
        let scaled: Vec<_> = shuffled.iter().map(|b| b.scale(&Fp::from_signed(3, 5))).collect();
        prop_assert_eq!(MatrixSubspace::span(rows, cols, &5, &scaled).unwrap(), s);
    }

    #[test]
    fn preannihilator_is_an_involution(seed in any::<u64>(), rows in 1usize..4, cols in 1usize..4, gens in 0usize..8) {
        let s = gf(7, rows, cols, gens, seed);
        let p = s.preannihilator();
        prop_assert_eq!(p.shape(), (cols, rows));
        prop_assert_eq!(s.dim() + p.dim(), rows * cols);
        prop_assert!(pairs_to_zero(&s, &p));
        prop_assert_eq!(p.preannihilator(), s);
    }

    #[test]
    fn sum_and_intersection_dimensions(seed in any::<u64>(), ga in 0usize..6, gb in 0usize..6) {
        let a = gf(3, 2, 3, ga, seed);
        let b = gf(3, 2, 3, gb, seed.wrapping_add(1));
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(s.contains_space(&a).unwrap() && a.contains_space(&i).unwrap());
    }

    #[test]
    fn dual_of_tensor(seed in any::<u64>(), ga in 0usize..5, gb in 0usize..4) {
        let a = gf(5, 2, 2, ga, seed);
        let b = gf(5, 1, 3, gb, seed ^ 0x55);
        let lhs = a.tensor(&b).unwrap().preannihilator();
        let fa = MatrixSubspace::full(a.cols(), a.rows(), &5);
        let fb = MatrixSubspace::full(b.cols(), b.rows(), &5);
        let rhs = a.preannihilator().tensor(&fb).unwrap().sum(&fa.tensor(&b.preannihilator()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_is_associative(seed in any::<u64>()) {
        let a = gf(3, 1, 2, 1, seed);
        let b = gf(3, 2, 1, 2, seed ^ 1);
        let c = gf(3, 2, 2, 2, seed ^ 2);
        let left = a.tensor(&b).unwrap().tensor(&c).unwrap();
        let right = a.tensor(&b.tensor(&c).unwrap()).unwrap();
        prop_assert_eq!(left.dim(), a.dim() * b.dim() * c.dim());
        prop_assert_eq!(left, right);
    }

    #[test]
    fn compression_keeps_transitivity(seed in any::<u64>(), gens in 5usize..10, keep_r in 1u8..8, keep_c in 1u8..8) {
        let l = gf(3, 3, 3, gens, seed);
        let proj = |mask: u8| Mat::from_fn(3, 3, &3, |i, j| Fp::from_signed((i == j && mask >> i & 1 == 1) as i64, 3));
        let (qm, pm) = (proj(keep_r), proj(keep_c));
        let c = l.compress(&qm, &pm).unwrap();
        prop_assert!(c.dim() <= l.dim());
        prop_assert_eq!(c.shape(), (keep_r.count_ones() as usize, keep_c.count_ones() as usize));
        let opts = CheckOptions::default();
        if check_k_transitive(&l, 1, &opts).unwrap().status.is_certified() {
            prop_assert!(check_k_transitive(&c, 1, &opts).unwrap().status.is_certified());
        }
    }

    #[test]
    fn perturbed_candidates_never_certify_full_rank(entries in prop::collection::vec(-4i64..=4, 9), noise in prop::collection::vec(-1e-3f64..1e-3, 9)) {
        let t = q_mat(3, 3, &entries);
        prop_assume!(t.rank() == 3);
        let v = MatrixSubspace::from_generators(std::slice::from_ref(&t)).unwrap();
        let cand = DMatrix::from_fn(3, 3, |i, j| entries[3 * i + j] as f64 + noise[3 * i + j]);
        prop_assert!(rationalize_and_verify(&v, 1, &cand, &NumericOptions::default()).is_none());
        prop_assert!(rationalize_and_verify(&v, 2, &cand, &NumericOptions::default()).is_none());
    }

    #[test]
    fn snapped_witnesses_verify(x in prop::collection::vec(-3i64..=3, 3), y in prop::collection::vec(-3i64..=3, 3), eps in -1e-11f64..1e-11) {
        prop_assume!(x.iter().any(|&v| v != 0) && y.iter().any(|&v| v != 0));
        let t = Mat::from_fn(3, 3, &(), |i, j| Rational::int(x[i] * y[j]));
        let v = MatrixSubspace::from_generators(&[t]).unwrap();
        let cand = DMatrix::from_fn(3, 3, |i, j| (x[i] * y[j]) as f64 + eps);
        let w = rationalize_and_verify(&v, 1, &cand, &NumericOptions::default());
        prop_assert!(w.as_ref().is_some_and(|w| w.rank == 1 && w.verify(&v)));
    }

    #[test]
    fn verdicts_are_seed_deterministic(seed in any::<u64>()) {
        let l = random_subspace_q(3, 3, 6, 2, &mut ChaCha8Rng::seed_from_u64(seed));
        let opts = CheckOptions { seed, ..Default::default() };
        let a = check_k_transitive(&l, 1, &opts).unwrap();
        let b = check_k_transitive(&l, 1, &opts).unwrap();
        prop_assert_eq!(a.to_json(), b.to_json());
    }
}
