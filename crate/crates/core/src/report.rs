//! The reproduction report: every claimed property of the named families,
//! recomputed, one row per claim.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::deciders::{
    check_k_separating, check_k_transitive, disprove_with_witness, find_invertible, min_rank_ff_exhaustive,
    rank_extremes_ff, verify_rank_spanning, verify_separation_witness, CheckOptions, Decidable, Status,
    TransitivityVerdict,
};
use crate::error::Result;
use crate::families::{self as fam, FamilySpec};
use crate::field::{Field, FieldTag, Fp, Rational};
use crate::matrix::Mat;
use crate::random::{random_pattern, random_subspace_ff};
use crate::subspace::MatrixSubspace;

pub const REPORT_SCHEMA: &str = "translab-report/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub id: String,
    pub claim: String,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
    pub soundness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub seed: u64,
    pub primes: Vec<u32>,
    pub rows: Vec<ReportRow>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": REPORT_SCHEMA,
            "seed": self.seed,
            "primes": self.primes,
            "passed": self.rows.iter().filter(|r| r.pass).count(),
            "total": self.rows.len(),
            "rows": self.rows,
        })
    }

    pub fn to_table(&self) -> String {
        let w = |f: fn(&ReportRow) -> &str, min: usize| {
            self.rows.iter().map(|r| f(r).chars().count()).max().unwrap_or(0).max(min)
        };
        let (wi, wc, we) = (w(|r| &r.id, 2), w(|r| &r.computed, 8), w(|r| &r.expected, 8));
        let mut out = format!("{:<wi$}  {:<4}  {:<wc$}  {:<we$}  soundness\n", "id", "ok", "computed", "expected");
        for r in &self.rows {
            let ok = if r.pass { "pass" } else { "FAIL" };
            out.push_str(&format!(
                "{:<wi$}  {ok:<4}  {:<wc$}  {:<we$}  {}\n",
                r.id, r.computed, r.expected, r.soundness
            ));
        }
        let passed = self.rows.iter().filter(|r| r.pass).count();
        out.push_str(&format!("{passed}/{} claims reproduced\n", self.rows.len()));
        out
    }
}

const EXACT: &str = "exact computation";

fn row(
    id: impl Into<String>,
    claim: &str,
    computed: impl ToString,
    expected: impl ToString,
    pass: bool,
    soundness: &str,
) -> ReportRow {
    ReportRow {
        id: id.into(),
        claim: claim.into(),
        computed: computed.to_string(),
        expected: expected.to_string(),
        pass,
        soundness: soundness.into(),
    }
}

fn error_row(id: impl Into<String>, claim: &str, expected: &str, e: impl std::fmt::Display) -> ReportRow {
    row(id, claim, format!("error: {e}"), expected, false, "none")
}

fn status_text(s: &Status) -> String {
    match s {
        Status::CertifiedFiniteField(fs) => {
            let list: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
            format!("CertifiedFiniteField[{}]", list.join(","))
        }
        other => other.name().to_string(),
    }
}

fn q_spec(spec: &str) -> Result<MatrixSubspace<Rational>> {
    spec.parse::<FamilySpec>()?.build(&())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Want {
    Certified,
    Exact,
    Disproved,
}

fn judge<F: Field>(v: &TransitivityVerdict<F>, want: Want) -> bool {
    match want {
        Want::Certified => v.status.is_certified(),
        Want::Exact => v.status == Status::CertifiedExact,
        Want::Disproved => v.status == Status::Disproved && v.witness.is_some(),
    }
}

fn want_text(want: Want) -> &'static str {
    match want {
        Want::Certified => "certified",
        Want::Exact => "CertifiedExact",
        Want::Disproved => "Disproved",
    }
}

fn transitivity_row<F: Decidable>(
    id: String,
    claim: &str,
    l: Result<MatrixSubspace<F>>,
    k: usize,
    opts: &CheckOptions,
    want: Want,
) -> ReportRow {
    match l.and_then(|l| check_k_transitive(&l, k, opts)) {
        Ok(v) => row(id, claim, status_text(&v.status), want_text(want), judge(&v, want), &v.soundness()),
        Err(e) => error_row(id, claim, want_text(want), e),
    }
}

fn dim_row(spec: &str, claim: &str) -> ReportRow {
    let id = format!("dim({spec})");
    match spec.parse::<FamilySpec>().and_then(|s| Ok((s.build::<Rational>(&())?.dim(), s.manifest().dim))) {
        Ok((got, want)) => row(id, claim, got, want, got == want, EXACT),
        Err(e) => error_row(id, claim, "", e),
    }
}

fn minimal_rows(opts: &CheckOptions) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for (m, n, k) in [(3, 3, 1), (4, 5, 2), (5, 5, 2), (3, 5, 2)] {
        let spec = format!("minimal:{m},{n},{k}");
        rows.push(dim_row(&spec, "minimal k-transitive dimension is k(m+n-k)"));
        rows.push(transitivity_row(
            format!("transitive({spec}, k={k})"),
            "the minimal construction is k-transitive",
            q_spec(&spec),
            k,
            opts,
            Want::Certified,
        ));
        let id = format!("not-transitive({spec}, k={})", k + 1);
        let claim = "the minimal construction is not (k+1)-transitive";
        let res = q_spec(&spec).and_then(|l| {
            let w = fam::shortest_diagonal_element::<Rational>(m, n, k, &())?;
            disprove_with_witness(&l, k + 1, w)
        });
        rows.push(match res {
            Ok(v) => {
                let r = v.witness.as_ref().map_or(0, |w| w.rank);
                row(
                    id,
                    claim,
                    format!("Disproved, witness rank {r}"),
                    format!("Disproved, witness rank {}", k + 1),
                    r == k + 1,
                    &v.soundness(),
                )
            }
            Err(e) => error_row(id, claim, "Disproved", e),
        });
    }
    {
        let (p, k, q) = (5, 2, 7);
        let id = format!("min-rank(vandermonde:{p},{k}) over GF({q})");
        let claim = "nonzero elements of the Vandermonde diagonal space have rank > k";
        let got = fam::vandermonde_diagonal_space::<Fp>(p, k, &q)
            .and_then(|v| min_rank_ff_exhaustive(&v, opts.budget))
            .map(|w| w.map_or(0, |w| w.rank));
        rows.push(match got {
            Ok(r) => row(id, claim, r, k + 1, r == k + 1, &format!("exhaustive over GF({q})")),
            Err(e) => error_row(id, claim, &(k + 1).to_string(), e),
        });
    }
    let claim = "the diagonal annihilator has no nonzero element of rank <= k";
    let got = fam::min_rank_diagonal_annihilator::<Fp>(3, 3, 1, &5)
        .and_then(|v| min_rank_ff_exhaustive(&v, opts.budget))
        .map(|w| w.map_or(0, |w| w.rank));
    rows.push(match got {
        Ok(r) => row("min-rank(diagann:3,3,1) over GF(5)", claim, r, 2, r == 2, "exhaustive over GF(5)"),
        Err(e) => error_row("min-rank(diagann:3,3,1) over GF(5)", claim, "2", e),
    });
    rows
}

fn classic_rows(opts: &CheckOptions) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    rows.push(dim_row("tracezero:3", "trace zero matrices have codimension one"));
    rows.push(transitivity_row(
        "transitive(tracezero:3, k=2)".into(),
        "trace zero matrices in Mat(n) are (n-1)-transitive",
        q_spec("tracezero:3"),
        2,
        opts,
        Want::Exact,
    ));
    rows.push(transitivity_row(
        "transitive(rankann:3,3,1, k=1)".into(),
        "the annihilator of a rank k+1 matrix is k-transitive",
        q_spec("rankann:3,3,1"),
        1,
        opts,
        Want::Exact,
    ));
    rows.push(transitivity_row(
        "not-transitive(rankann:3,3,1, k=2)".into(),
        "the annihilator of a rank k+1 matrix is not (k+1)-transitive",
        q_spec("rankann:3,3,1"),
        2,
        opts,
        Want::Disproved,
    ));
    for n in 2..=5 {
        rows.push(dim_row(&format!("toeplitz:{n}"), "Toeplitz matrices form a space of dimension 2n-1"));
    }
    for n in 2..=4 {
        let want = if n == 2 { Want::Exact } else { Want::Certified };
        rows.push(transitivity_row(
            format!("transitive(toeplitz:{n}, k=1)"),
            "Toeplitz matrices are transitive",
            q_spec(&format!("toeplitz:{n}")),
            1,
            opts,
            want,
        ));
    }
    for n in [3, 4] {
        let claim = "Toeplitz matrices are 2-separating";
        let id = format!("separating(toeplitz:{n}, k=2)");
        let mut o = opts.clone();
        o.primes = vec![5];
        rows.push(match q_spec(&format!("toeplitz:{n}")).and_then(|l| check_k_separating(&l, 2, &o)) {
            Ok(v) => row(id, claim, status_text(&v.status), "certified", v.status.is_certified(), &v.soundness()),
            Err(e) => error_row(id, claim, "certified", e),
        });
        let claim = "Toeplitz matrices are not 3-separating: the tuple (e1, en, e2) fails";
        let id = format!("not-separating(toeplitz:{n}, k=3)");
        let x = Mat::<Rational>::from_fn(n, 3, &(), |i, j| Rational::int((i == [0, n - 1, 1][j]) as i64));
        rows.push(match q_spec(&format!("toeplitz:{n}")).and_then(|l| verify_separation_witness(&l, &x)) {
            Ok(ok) => row(
                id,
                claim,
                if ok { "tuple verified" } else { "tuple rejected" },
                "tuple verified",
                ok,
                "exact witness over Q",
            ),
            Err(e) => error_row(id, claim, "tuple verified", e),
        });
    }
    let claim = "the rank-one matrices [a^(i-j)] at 2n-1 distinct nonzero a span the Toeplitz space";
    let gens: Vec<Mat<Rational>> = (1..=5)
        .map(|a| {
            Mat::from_fn(3, 3, &(), |i, j| {
                Rational(num_rational::BigRational::from_integer(a.into()).pow(i as i32 - j as i32))
            })
        })
        .collect();
    rows.push(match q_spec("toeplitz:3").and_then(|l| verify_rank_spanning(&l, 1, &gens)) {
        Ok(ok) => row("rank-one-span(toeplitz:3)", claim, ok, true, ok, EXACT),
        Err(e) => error_row("rank-one-span(toeplitz:3)", claim, "true", e),
    });
    rows
}

fn dual_rows(opts: &CheckOptions) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    let (l, phi) = fam::dual_transitive_8dim::<Rational>(&());
    let lp = l.preannihilator();
    let mut both = Vec::new();
    let mut soundness = String::new();
    let mut pass = true;
    for (name, s) in [("L", &l), ("L_perp", &lp)] {
        match check_k_transitive(s, 1, opts) {
            Ok(v) => {
                pass &= opts.primes.iter().all(|&p| v.status.certifies_over(FieldTag::Prime(p)));
                both.push(format!("{name}: {}", status_text(&v.status)));
                soundness = v.soundness();
            }
            Err(e) => {
                pass = false;
                both.push(format!("{name}: error {e}"));
            }
        }
    }
    let primes: Vec<String> = opts.primes.iter().map(|p| format!("GF({p})")).collect();
    rows.push(row(
        "dual-trans-both",
        "both L and its pre-annihilator are transitive",
        both.join("; "),
        format!("both certified over {}", primes.join(",")),
        pass,
        &soundness,
    ));
    let displayed = fam::dual_transitive_8dim_preannihilator();
    rows.push(row(
        "dual8-preannihilator",
        "the displayed pre-annihilator is correct",
        lp == displayed,
        true,
        lp == displayed,
        EXACT,
    ));
    let claim = "Phi has four distinct eigenvalues, each with rank-two eigenvectors";
    for (id, map) in [("phi-eigen", phi.clone()), ("phi-adjoint-eigen", fam::pairing_adjoint(&phi, 2))] {
        rows.push(match fam::eigen_analysis(&map, 2) {
            Ok(e) => {
                let ranks: Vec<String> = e.eigenvalues.iter().map(|x| format!("{:?}", x.ranks)).collect();
                let ok = e.squarefree && e.distinct() == 4 && e.all_eigenvectors_rank(2);
                row(
                    id,
                    claim,
                    format!("{} eigenvalues, ranks {}", e.distinct(), ranks.join(" ")),
                    "4 eigenvalues, all rank 2",
                    ok,
                    "exact over Q and Q(sqrt 2)",
                )
            }
            Err(e) => error_row(id, claim, "4 eigenvalues, all rank 2", e),
        });
    }
    let mut o = opts.clone();
    o.primes = vec![5];
    let claim = "the Phi-block space and its pre-annihilator are k-transitive";
    let res = fam::phi_block_space::<Rational>(4, 1, &()).and_then(|l| {
        let a = check_k_transitive(&l, 1, &o)?;
        let b = check_k_transitive(&l.preannihilator(), 1, &o)?;
        Ok((a, b))
    });
    rows.push(match res {
        Ok((a, b)) => row(
            "phiblock(4,1)-both",
            claim,
            format!("L: {}; L_perp: {}", status_text(&a.status), status_text(&b.status)),
            "both certified over GF(5)",
            a.status.certifies_over(FieldTag::Prime(5)) && b.status.certifies_over(FieldTag::Prime(5)),
            &a.soundness(),
        ),
        Err(e) => error_row("phiblock(4,1)-both", claim, "both certified over GF(5)", e),
    });
    let claim = "with generic N and image of Phi, both the block space and its pre-annihilator are k-transitive";
    let res = fam::phi_block_search_ff::<Fp>(4, 1, &5, opts.seed, 20, opts.budget).and_then(|found| {
        let Some((_, l)) = found else { return Ok(None) };
        let a = check_k_transitive(&l, 1, &o)?;
        let b = check_k_transitive(&l.preannihilator(), 1, &o)?;
        Ok(Some((a, b)))
    });
    let id = "phiblock-generic(4,1) over GF(5)";
    rows.push(match res {
        Ok(Some((a, b))) => row(
            id,
            claim,
            format!("L: {}; L_perp: {}", status_text(&a.status), status_text(&b.status)),
            "both certified over GF(5)",
            a.status.certifies_over(FieldTag::Prime(5)) && b.status.certifies_over(FieldTag::Prime(5)),
            "exhaustive over GF(5); seeded search",
        ),
        Ok(None) => row(id, claim, "no instance in 20 attempts", "both certified over GF(5)", false, "none"),
        Err(e) => error_row(id, claim, "both certified over GF(5)", e),
    });
    rows
}

fn tensor_rows(opts: &CheckOptions) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    let claim = "the displayed u v* is a rank-one solution of the block system";
    let cert = fam::fully_transitive_counterexample_certificate();
    match &cert {
        Ok(c) => {
            let ok = c.equations.iter().filter(|e| e.1).count();
            rows.push(row(
                "tensor-rank-one-certificate",
                claim,
                format!("rank {}, member {}, {ok}/8 equations", c.rank, c.in_sum),
                "rank 1, member true, 8/8 equations",
                c.holds(),
                "exact witness over Q",
            ));
        }
        Err(e) => rows.push(error_row("tensor-rank-one-certificate", claim, "rank 1, member true, 8/8 equations", e)),
    }
    let claim = "L tensor L is not transitive";
    let (l, _) = fam::dual_transitive_8dim::<Rational>(&());
    let res = cert.and_then(|c| disprove_with_witness(&l.tensor(&l)?, 1, c.tensor_square_witness));
    rows.push(match res {
        Ok(v) => row(
            "not-transitive(dual8 x dual8)",
            claim,
            status_text(&v.status),
            "Disproved",
            judge(&v, Want::Disproved),
            &v.soundness(),
        ),
        Err(e) => error_row("not-transitive(dual8 x dual8)", claim, "Disproved", e),
    });
    let claim = "(L x M)_perp = L_perp x Mat + Mat x M_perp";
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut agree = 0;
    let total = 10;
    for _ in 0..total {
        let a = random_subspace_ff::<Fp, _>(2, 3, 3, &5, &mut rng);
        let b = random_subspace_ff::<Fp, _>(2, 2, 2, &5, &mut rng);
        let lhs = a.tensor(&b).map(|t| t.preannihilator());
        let rhs = (|| {
            let fa = MatrixSubspace::full(a.cols(), a.rows(), &5);
            let fb = MatrixSubspace::full(b.cols(), b.rows(), &5);
            a.preannihilator().tensor(&fb)?.sum(&fa.tensor(&b.preannihilator())?)
        })();
        if let (Ok(x), Ok(y)) = (lhs, rhs) {
            agree += (x == y) as usize;
        }
    }
    rows.push(row(
        "dual-tensor-identity",
        claim,
        format!("{agree}/{total} random pairs"),
        format!("{total}/{total} random pairs"),
        agree == total,
        "exact over GF(5)",
    ));
    for (d, m, k, want) in [(2, 2, 1, Want::Certified), (3, 1, 2, Want::Exact), (2, 2, 2, Want::Disproved)] {
        rows.push(transitivity_row(
            format!("transitive(sltensor:{d},{m}, k={k})"),
            "sl_d x Mat(m) is (d-1)-transitive and no more",
            fam::sl_tensor_full::<Rational>(d, m, &()),
            k,
            opts,
            want,
        ));
    }
    let claim = "the pre-annihilator of sl_d x Mat(m) has minimum rank d";
    let got =
        fam::sl_tensor_full::<Fp>(2, 2, &5).and_then(|l| min_rank_ff_exhaustive(&l.preannihilator(), opts.budget));
    rows.push(match got {
        Ok(w) => {
            let r = w.map_or(0, |w| w.rank);
            row("min-rank(sltensor:2,2 dual) over GF(5)", claim, r, 2, r == 2, "exhaustive over GF(5)")
        }
        Err(e) => error_row("min-rank(sltensor:2,2 dual) over GF(5)", claim, "2", e),
    });
    rows
}

fn product_rows(opts: &CheckOptions) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    let claim = "span L^2 is everything for a transitive L spanned by rank ones";
    for n in 2..=4 {
        let id = format!("power-index(toeplitz:{n})");
        rows.push(match q_spec(&format!("toeplitz:{n}")).and_then(|l| l.power_span_index(6)) {
            Ok(r) => row(id, claim, format!("{r:?}"), "Some(2)", r == Some(2), EXACT),
            Err(e) => error_row(id, claim, "Some(2)", e),
        });
    }
    let (l, _) = fam::dual_transitive_8dim::<Rational>(&());
    let res = (|| {
        let sq = l.product_span(&l)?;
        let both = l.sum(&sq)?;
        Ok::<_, crate::error::Error>((both.diagonal_expectation()?.dim(), both.is_full(), l.power_span_index(6)?))
    })();
    match res {
        Ok((dd, full, idx)) => {
            rows.push(row(
                "prodM-diag-dim",
                "the diagonal part of span{L, L^2} is only three dimensional",
                dd,
                3,
                dd == 3,
                EXACT,
            ));
            rows.push(row("prodM-not-full", "span{L, L^2} is not Mat(4)", full, false, !full, EXACT));
            rows.push(row(
                "prodM-power-index",
                "span{L, L^2, L^3} is Mat(4)",
                format!("{idx:?}"),
                "Some(3)",
                idx == Some(3),
                EXACT,
            ));
        }
        Err(e) => rows.push(error_row("prodM", "products of the dual example", "", e)),
    }
    let claim = "the span of products of k- and l-transitive spaces is min{k+l, m, p}-transitive";
    let mut o = opts.clone();
    o.primes = vec![5];
    let prod = q_spec("minimal:4,4,1").and_then(|a| a.product_span(&a));
    rows.push(transitivity_row("transitive(minimal:4,4,1 squared, k=2)".into(), claim, prod, 2, &o, Want::Certified));
    let claim = "[x; M] is n-separating yet need not be transitive";
    let res =
        q_spec("rowaug:zero:3,3").and_then(|l| Ok((check_k_separating(&l, 3, &o)?, check_k_transitive(&l, 1, opts)?)));
    rows.push(match res {
        Ok((s, t)) => row(
            "rowaug(zero:3,3)",
            claim,
            format!("3-sep {}; 1-trans {}", status_text(&s.status), status_text(&t.status)),
            "3-sep certified; 1-trans Disproved",
            s.status.is_certified() && t.status == Status::Disproved,
            &s.soundness(),
        ),
        Err(e) => error_row("rowaug(zero:3,3)", claim, "3-sep certified; 1-trans Disproved", e),
    });
    rows
}

fn invertible_rows(opts: &CheckOptions) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    let claim = "a transitive space contains invertible elements";
    let specs = [
        "toeplitz:3",
        "hankel:3",
        "minimal:4,4,1",
        "tracezero:3",
        "rankann:3,3,1",
        "dual8",
        "phiblock:4,1",
        "sltensor:2,2",
        "full:3,3",
    ];
    for s in specs {
        let id = format!("invertible({s})");
        rows.push(match q_spec(s).and_then(|l| find_invertible(&l, 200, opts.seed)) {
            Ok(a) => {
                let ok = a.as_ref().is_some_and(|a| a.is_invertible());
                row(id, claim, if ok { "found" } else { "none" }, "found", ok, "exact witness over Q")
            }
            Err(e) => error_row(id, claim, "found", e),
        });
    }
    let claim = "observation: min nonzero rank r plus max singular rank s is at least n";
    for s in ["toeplitz:2", "toeplitz:3", "tracezero:2", "minimal:3,3,1", "full:2,2"] {
        let id = format!("r+s({s}) over GF(5)");
        let res = s
            .parse::<FamilySpec>()
            .and_then(|f| f.build::<Fp>(&5))
            .and_then(|l| Ok((l.rows(), rank_extremes_ff(&l, opts.budget)?)));
        rows.push(match res {
            Ok((n, e)) => {
                let r = e.min_nonzero.as_ref().map_or(0, |x| x.0);
                let sr = e.max_singular.as_ref().map_or(0, |x| x.0);
                row(
                    id,
                    claim,
                    format!("r={r}, s={sr}"),
                    format!("r+s >= {n}"),
                    r + sr >= n,
                    "exhaustive over GF(5); observation only",
                )
            }
            Err(e) => error_row(id, claim, "r+s >= n", e),
        });
    }
    rows
}

fn pattern_rows(opts: &CheckOptions) -> Vec<ReportRow> {
    let claim = "a pattern space is transitive iff it is the full matrix space";
    let mut o = opts.clone();
    o.primes = vec![5];
    let mut agree = 0;
    let mut total = 0;
    let mut cases: Vec<(usize, Vec<(usize, usize)>)> =
        (0..16u32).map(|mask| (2, (0..4).filter(|b| mask >> b & 1 == 1).map(|c| (c / 2, c % 2)).collect())).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    cases.extend((0..40).map(|_| (3, random_pattern(3, 0.8, &mut rng))));
    for (n, cells) in cases {
        total += 1;
        let Ok(l) = fam::pattern_space::<Fp>(n, &cells, &5) else { continue };
        if let Ok(v) = check_k_transitive(&l, 1, &o) {
            agree += (v.status.is_certified() == l.is_full()) as usize;
        }
    }
    vec![row(
        "masa-patterns",
        claim,
        format!("{agree}/{total} agree"),
        format!("{total}/{total} agree"),
        agree == total,
        "exhaustive over GF(5)",
    )]
}

type Section = fn(&CheckOptions) -> Vec<ReportRow>;

/// Recomputes every claim. Sections run in parallel; rows keep manifest order.
pub fn report_paper(opts: &CheckOptions) -> Report {
    let sections: [Section; 7] =
        [minimal_rows, classic_rows, dual_rows, tensor_rows, product_rows, invertible_rows, pattern_rows];
    let rows = sections.par_iter().map(|f| f(opts)).collect::<Vec<_>>().concat();
    Report { seed: opts.seed, primes: opts.primes.clone(), rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_layout() {
        let r = Report {
            seed: 1,
            primes: vec![5],
            rows: vec![row("a", "c", 1, 1, true, "exact"), row("bb", "c", 2, 3, false, "none")],
        };
        let t = r.to_table();
        assert!(t.contains("pass") && t.contains("FAIL") && t.ends_with("1/2 claims reproduced\n"));
        assert!(!r.all_pass());
        assert_eq!(r.to_json()["schema"], REPORT_SCHEMA);
    }

    #[test]
    fn minimal_section() {
        let rows = minimal_rows(&CheckOptions::default());
        assert!(rows.iter().all(|r| r.pass), "{rows:#?}");
        assert!(rows.iter().any(|r| r.id == "dim(minimal:4,5,2)" && r.computed == "14"));
    }
}
