use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::combinations;
use crate::error::{Error, Result};
use crate::field::{Field, FieldTag, FiniteField, Fp, Fp2, GaussRational, Rational};
use crate::matrix::Mat;
use crate::subspace::{FiniteSubspace, MatrixSubspace};

use super::ff::{ff_low_rank_search, separation_ff, LowRankSearch, DEFAULT_BUDGET};
use super::lowrank::coordinate_subset_search;
use super::numeric::{rank_witness_search_numeric, NumericOptions};
use super::pencil::{pencil_min_rank_exact, PencilOutcome};
use super::probes::{separation_failure, separation_tuple};
use super::verdict::{Evidence, RankWitness, SeparationVerdict, Status, TransitivityVerdict};

pub const DEFAULT_SEED: u64 = 1729;
pub const DEFAULT_PRIMES: [u32; 2] = [5, 7];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Exact searches, then numeric search, then finite-field certification.
    #[default]
    Auto,
    /// Only exact procedures (pencils, coordinate subsets).
    Exact,
    Numeric,
    FiniteField,
}

impl Strategy {
    fn exact(self) -> bool {
        matches!(self, Strategy::Auto | Strategy::Exact)
    }

    fn numeric(self) -> bool {
        matches!(self, Strategy::Auto | Strategy::Numeric)
    }

    fn finite(self) -> bool {
        matches!(self, Strategy::Auto | Strategy::FiniteField)
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "exact" => Ok(Strategy::Exact),
            "numeric" => Ok(Strategy::Numeric),
            "ff" | "finite-field" => Ok(Strategy::FiniteField),
            _ => Err(Error::InvalidParameter(format!("unknown strategy {s:?} (auto, exact, numeric, ff)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOptions {
    pub strategy: Strategy,
    pub primes: Vec<u32>,
    pub budget: u128,
    pub seed: u64,
    pub numeric: NumericOptions,
    /// Largest number of coordinate subspaces tried by exact searches.
    pub max_subsets: usize,
    /// Random tuples drawn by the exact separation search.
    pub samples: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            strategy: Strategy::Auto,
            primes: DEFAULT_PRIMES.to_vec(),
            budget: DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
            numeric: NumericOptions::default(),
            max_subsets: 5000,
            samples: 200,
        }
    }
}

/// Field-specific capabilities of the deciders.
pub trait Decidable: Field {
    const HAS_NUMERIC: bool = false;

    fn pencil(_v: &MatrixSubspace<Self>, _k: usize) -> Option<Result<PencilOutcome<Self>>> {
        None
    }

    fn numeric(_v: &MatrixSubspace<Self>, _k: usize, _seed: u64, _o: &NumericOptions) -> Option<RankWitness<Self>> {
        None
    }

    /// Exhaustive search over the field itself, for finite fields.
    fn own_low_rank(_v: &MatrixSubspace<Self>, _k: usize, _budget: u128) -> Option<Result<LowRankSearch<Self>>> {
        None
    }

    fn own_separation(_l: &MatrixSubspace<Self>, _k: usize, _budget: u128) -> Option<Result<(Option<Mat<Self>>, u64)>> {
        None
    }
}

impl Decidable for Rational {
    const HAS_NUMERIC: bool = true;

    fn pencil(v: &MatrixSubspace<Self>, k: usize) -> Option<Result<PencilOutcome<Self>>> {
        Some(pencil_min_rank_exact(v, k))
    }

    fn numeric(v: &MatrixSubspace<Self>, k: usize, seed: u64, o: &NumericOptions) -> Option<RankWitness<Self>> {
        rank_witness_search_numeric(v, k, seed, o)
    }
}

impl Decidable for GaussRational {
    const HAS_NUMERIC: bool = true;

    fn pencil(v: &MatrixSubspace<Self>, k: usize) -> Option<Result<PencilOutcome<Self>>> {
        Some(pencil_min_rank_exact(v, k))
    }

    fn numeric(v: &MatrixSubspace<Self>, k: usize, seed: u64, o: &NumericOptions) -> Option<RankWitness<Self>> {
        rank_witness_search_numeric(v, k, seed, o)
    }
}

macro_rules! finite_decidable {
    ($t:ty) => {
        impl Decidable for $t {
            fn own_low_rank(v: &MatrixSubspace<Self>, k: usize, budget: u128) -> Option<Result<LowRankSearch<Self>>> {
                Some(ff_low_rank_search(v, k, budget))
            }

            fn own_separation(
                l: &MatrixSubspace<Self>,
                k: usize,
                budget: u128,
            ) -> Option<Result<(Option<Mat<Self>>, u64)>> {
                Some(separation_ff(l, k, budget))
            }
        }
    };
}

finite_decidable!(Fp);
finite_decidable!(Fp2);

fn tag_of<F: Field>(s: &MatrixSubspace<F>) -> FieldTag {
    F::tag(s.ctx())
}

fn verdict<F: Field>(
    l: &MatrixSubspace<F>,
    k: usize,
    status: Status,
    witness: Option<RankWitness<F>>,
    evidence: Evidence,
) -> TransitivityVerdict<F> {
    TransitivityVerdict { k, field: tag_of(l), status, witness, evidence }
}

/// Outcome of searching one reduction for low-rank elements.
enum PrimeResult {
    Clean { tag: FieldTag, enumerated: u64, method: &'static str },
    Hit { tag: FieldTag, witness: String },
}

fn search_reduced<F: FiniteField>(v: &MatrixSubspace<F>, k: usize, budget: u128) -> Result<PrimeResult> {
    let tag = tag_of(v);
    let s = ff_low_rank_search(v, k, budget)?;
    Ok(match s.witness {
        Some(w) => PrimeResult::Hit { tag, witness: format!("{:?}", w.matrix.rows_as_vecs()) },
        None => PrimeResult::Clean { tag, enumerated: s.enumerated, method: s.method },
    })
}

fn reduce_pair<F: Field>(
    l: &MatrixSubspace<F>,
    lp: &MatrixSubspace<F>,
    p: u32,
) -> std::result::Result<(FiniteSubspace, FiniteSubspace), String> {
    let target = F::default_target(l.ctx(), p).map_err(|e| format!("p = {p}: {e}"))?;
    let lr = l.reduce_to(&target).map_err(|e| format!("p = {p}: {e}"))?;
    let lpr = lp.reduce_to(&target).map_err(|e| format!("p = {p}: {e}"))?;
    if lr.dim() != l.dim() || lpr.dim() != lp.dim() {
        return Err(format!(
            "p = {p}: dimension drops under reduction ({} -> {}, dual {} -> {})",
            l.dim(),
            lr.dim(),
            lp.dim(),
            lpr.dim()
        ));
    }
    Ok((lr, lpr))
}

/// Decides whether `L` is k-transitive, i.e. whether its pre-annihilator has
/// no nonzero element of rank at most `k`.
pub fn check_k_transitive<F: Decidable>(
    l: &MatrixSubspace<F>,
    k: usize,
    opts: &CheckOptions,
) -> Result<TransitivityVerdict<F>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut ev = Evidence::default();
    let lp = l.preannihilator();
    if lp.is_zero() {
        ev.tag("dual-zero");
        return Ok(verdict(l, k, Status::CertifiedExact, None, ev));
    }
    if k >= l.rows().min(l.cols()) {
        ev.tag("forced-full-space");
        let w = RankWitness::verified(&lp, lp.basis_element(0), k).expect("rank ≤ min(m, n) ≤ k");
        return Ok(verdict(l, k, Status::Disproved, Some(w), ev));
    }
    if let Some(res) = F::own_low_rank(&lp, k, opts.budget) {
        let s = res?;
        ev.tag(s.method);
        ev.enumerated = s.enumerated;
        if let FieldTag::Prime(p) | FieldTag::Quad(p) = tag_of(l) {
            ev.primes.push(p);
        }
        return Ok(match s.witness {
            Some(w) => verdict(l, k, Status::Disproved, Some(w), ev),
            None => verdict(l, k, Status::CertifiedFiniteField(vec![tag_of(l)]), None, ev),
        });
    }
    if opts.strategy.exact() && lp.dim() <= 2 {
        if let Some(res) = F::pencil(&lp, k) {
            ev.tag(if lp.dim() == 1 { "singleton" } else { "pencil" });
            match res {
                Ok(PencilOutcome::Witness(w)) => return Ok(verdict(l, k, Status::Disproved, Some(w), ev)),
                Ok(PencilOutcome::NoLowRank { certificate }) => {
                    ev.note(certificate);
                    return Ok(verdict(l, k, Status::CertifiedExact, None, ev));
                }
                Ok(PencilOutcome::ExistsOverClosure { gcd }) => {
                    ev.note(format!(
                        "rank <= {k} elements exist over the algebraic closure but not over {}; common factor {gcd}",
                        tag_of(l)
                    ));
                    return Ok(verdict(l, k, Status::Unknown, None, ev));
                }
                Err(Error::BudgetExceeded { needed, .. }) => ev.note(format!("pencil skipped: {needed} minors")),
                Err(e) => return Err(e),
            }
        }
    }
    if opts.strategy.exact() {
        ev.tag("coordinate-subsets");
        if let Some(w) = coordinate_subset_search(&lp, k, opts.max_subsets) {
            return Ok(verdict(l, k, Status::Disproved, Some(w), ev));
        }
    }
    if opts.strategy.numeric() {
        if let Some(w) = F::numeric(&lp, k, opts.seed, &opts.numeric) {
            ev.tag("numeric-als");
            ev.seed = Some(opts.seed);
            return Ok(verdict(l, k, Status::Disproved, Some(w), ev));
        }
        if F::HAS_NUMERIC {
            ev.tag("numeric-als");
            ev.seed = Some(opts.seed);
        }
    }
    if opts.strategy.finite() && !opts.primes.is_empty() {
        let mut certified = Vec::new();
        for &p in &opts.primes {
            ev.primes.push(p);
            let (_, lpr) = match reduce_pair(l, &lp, p) {
                Ok(x) => x,
                Err(msg) => {
                    ev.note(msg);
                    continue;
                }
            };
            let res = match &lpr {
                FiniteSubspace::Prime(s) => search_reduced(s, k, opts.budget)?,
                FiniteSubspace::Quad(s) => search_reduced(s, k, opts.budget)?,
            };
            match res {
                PrimeResult::Clean { tag, enumerated, method } => {
                    ev.tag(method);
                    ev.enumerated += enumerated;
                    certified.push(tag);
                }
                PrimeResult::Hit { tag, witness } => {
                    ev.note(format!("rank <= {k} element over {tag} (not a disproof over {}): {witness}", tag_of(l)));
                }
            }
        }
        if certified.len() == opts.primes.len() {
            return Ok(verdict(l, k, Status::CertifiedFiniteField(certified), None, ev));
        }
    }
    Ok(verdict(l, k, Status::Unknown, None, ev))
}

/// A `Disproved` verdict from a supplied candidate, after exact verification.
pub fn disprove_with_witness<F: Field>(l: &MatrixSubspace<F>, k: usize, t: Mat<F>) -> Result<TransitivityVerdict<F>> {
    let lp = l.preannihilator();
    let w = RankWitness::verified(&lp, t, k).ok_or_else(|| {
        Error::InvalidParameter(format!("candidate is not a nonzero rank <= {k} element of the pre-annihilator"))
    })?;
    let mut ev = Evidence::default();
    ev.tag("supplied-witness");
    Ok(verdict(l, k, Status::Disproved, Some(w), ev))
}

fn sep_verdict<F: Field>(
    l: &MatrixSubspace<F>,
    k: usize,
    status: Status,
    witness: Option<Mat<F>>,
    evidence: Evidence,
) -> SeparationVerdict<F> {
    SeparationVerdict { k, field: tag_of(l), status, witness, evidence }
}

fn separation_reduced<F: FiniteField>(l: &MatrixSubspace<F>, k: usize, budget: u128) -> Result<PrimeResult> {
    let tag = tag_of(l);
    let (hit, visited) = separation_ff(l, k, budget)?;
    Ok(match hit {
        Some(x) => PrimeResult::Hit { tag, witness: format!("{:?}", x.rows_as_vecs()) },
        None => PrimeResult::Clean { tag, enumerated: visited, method: "ff-grassmannian" },
    })
}

/// Decides whether `L ⊆ Mat(m, n)` is k-separating: for all independent
/// `x_1 … x_k` some element kills `x_1 … x_(k-1)` but not `x_k`.
pub fn check_k_separating<F: Decidable>(
    l: &MatrixSubspace<F>,
    k: usize,
    opts: &CheckOptions,
) -> Result<SeparationVerdict<F>> {
    let n = l.cols();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!("k = {k} must lie in 1..={n}")));
    }
    let mut ev = Evidence::default();
    if l.is_full() {
        ev.tag("full-space");
        return Ok(sep_verdict(l, k, Status::CertifiedExact, None, ev));
    }
    if let Some(res) = F::own_separation(l, k, opts.budget) {
        let (hit, visited) = res?;
        ev.tag("ff-grassmannian");
        ev.enumerated = visited;
        return Ok(match hit {
            Some(x) => sep_verdict(l, k, Status::Disproved, Some(x), ev),
            None => sep_verdict(l, k, Status::CertifiedFiniteField(vec![tag_of(l)]), None, ev),
        });
    }
    let ctx = l.ctx();
    if opts.strategy.exact() || opts.strategy.numeric() {
        let subsets = combinations(n, k - 1);
        if subsets.len() <= opts.max_subsets {
            ev.tag("coordinate-subsets");
            for s in &subsets {
                let u = Mat::from_fn(k - 1, n, ctx, |i, j| if s[i] == j { F::one(ctx) } else { F::zero(ctx) });
                if let Some(x) = separation_failure(l, &u)? {
                    return Ok(sep_verdict(l, k, Status::Disproved, Some(separation_tuple(&u, &x)), ev));
                }
            }
        }
        if k > 1 {
            ev.tag("random-tuples");
            ev.seed = Some(opts.seed);
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            for _ in 0..opts.samples {
                let u = Mat::from_fn(k - 1, n, ctx, |_, _| F::from_i64(ctx, rng.random_range(-3..=3)));
                if u.rank() < k - 1 {
                    continue;
                }
                if let Some(x) = separation_failure(l, &u)? {
                    return Ok(sep_verdict(l, k, Status::Disproved, Some(separation_tuple(&u, &x)), ev));
                }
            }
        }
    }
    if opts.strategy.finite() && !opts.primes.is_empty() {
        let mut certified = Vec::new();
        for &p in &opts.primes {
            ev.primes.push(p);
            let target = match F::default_target(ctx, p) {
                Ok(t) => t,
                Err(e) => {
                    ev.note(format!("p = {p}: {e}"));
                    continue;
                }
            };
            let lr = match l.reduce_to(&target) {
                Ok(x) if x.dim() == l.dim() => x,
                Ok(x) => {
                    ev.note(format!("p = {p}: dimension drops under reduction ({} -> {})", l.dim(), x.dim()));
                    continue;
                }
                Err(e) => {
                    ev.note(format!("p = {p}: {e}"));
                    continue;
                }
            };
            let res = match &lr {
                FiniteSubspace::Prime(s) => separation_reduced(s, k, opts.budget)?,
                FiniteSubspace::Quad(s) => separation_reduced(s, k, opts.budget)?,
            };
            match res {
                PrimeResult::Clean { tag, enumerated, method } => {
                    ev.tag(method);
                    ev.enumerated += enumerated;
                    certified.push(tag);
                }
                PrimeResult::Hit { tag, witness } => {
                    ev.note(format!("separation fails over {tag} (not a disproof over {}): {witness}", tag_of(l)));
                }
            }
        }
        if certified.len() == opts.primes.len() {
            return Ok(sep_verdict(l, k, Status::CertifiedFiniteField(certified), None, ev));
        }
    }
    Ok(sep_verdict(l, k, Status::Unknown, None, ev))
}
