//! Named, parameterized subspaces with their expected properties.

mod classic;
mod dual;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{Field, FieldTag, Fp2Ctx, GaussRational, Rational};
use crate::io::AnySubspace;
use crate::subspace::MatrixSubspace;

pub use classic::{
    corner_toeplitz, diagonals, hankel_space, min_rank_diagonal_annihilator, minimal_k_transitive, pattern_space,
    rank_annihilator_generator, rank_annihilator_space, row_augmented_space, shortest_diagonal_element, sl_tensor_full,
    toeplitz_space, trace_zero, vandermonde_diagonal_space,
};
pub use dual::{
    apply_map, characteristic_polynomial, dual_transitive_8dim, dual_transitive_8dim_preannihilator, eigen_analysis,
    fully_transitive_counterexample_certificate, pairing_adjoint, phi_block_admissible, phi_block_from_map,
    phi_block_search_ff, phi_block_space, phi_example, phi_theorem_map, EigenAnalysis, Eigenvalue, TensorCertificate,
};

/// A family member, addressable as `name:params`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Toeplitz {
        n: usize,
    },
    Hankel {
        n: usize,
    },
    Minimal {
        m: usize,
        n: usize,
        k: usize,
    },
    DiagonalAnnihilator {
        m: usize,
        n: usize,
        k: usize,
    },
    VandermondeDiag {
        p: usize,
        k: usize,
    },
    TraceZero {
        n: usize,
    },
    RankAnnihilator {
        m: usize,
        n: usize,
        k: usize,
    },
    DualTransitive8,
    /// Built on the diagonal annihilator. Only the pre-annihilator is
    /// k-transitive: corner units of `N⊥` give rank-one elements of `L⊥`.
    PhiBlock {
        n: usize,
        k: usize,
    },
    SlTensorFull {
        d: usize,
        m: usize,
    },
    RowAugmented(Box<FamilySpec>),
    /// Zero-based cells of `Mat(n)`.
    Pattern {
        n: usize,
        cells: Vec<(usize, usize)>,
    },
    Full {
        m: usize,
        n: usize,
    },
    Zero {
        m: usize,
        n: usize,
    },
    CornerToeplitz {
        n: usize,
        big: usize,
    },
}

/// Claimed properties of a family member. `None` means no claim.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Manifest {
    pub shape: (usize, usize),
    pub dim: usize,
    /// Largest `k` for which the space is claimed k-transitive.
    pub transitive: Option<usize>,
    /// Smallest `k` for which k-transitivity is claimed to fail.
    pub not_transitive: Option<usize>,
    /// Largest `k` for which the pre-annihilator is claimed k-transitive.
    pub dual_transitive: Option<usize>,
    /// Claimed least rank of a nonzero element.
    pub min_rank: Option<usize>,
    pub separating: Option<usize>,
    pub not_separating: Option<usize>,
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parse(format!("expected a nonnegative integer, got {s:?}")))
}

fn params<const N: usize>(name: &str, s: &str) -> Result<[usize; N]> {
    let vals = s.split(',').map(parse_usize).collect::<Result<Vec<_>>>()?;
    vals.try_into().map_err(|v: Vec<usize>| Error::Parse(format!("{name} takes {N} parameters, got {}", v.len())))
}

fn parse_cells(n: usize, s: &str) -> Result<Vec<(usize, usize)>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|c| {
            let (i, j) = c.split_once('-').ok_or_else(|| Error::Parse(format!("cell {c:?} is not i-j")))?;
            let (i, j) = (parse_usize(i)?, parse_usize(j)?);
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::Parse(format!("cell {i}-{j} outside 1..={n}")));
            }
            Ok((i - 1, j - 1))
        })
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let spec = match name {
            "toeplitz" => FamilySpec::Toeplitz { n: params::<1>(name, rest)?[0] },
            "hankel" => FamilySpec::Hankel { n: params::<1>(name, rest)?[0] },
            "minimal" => {
                let [m, n, k] = params(name, rest)?;
                FamilySpec::Minimal { m, n, k }
            }
            "diagann" => {
                let [m, n, k] = params(name, rest)?;
                FamilySpec::DiagonalAnnihilator { m, n, k }
            }
            "vandermonde" => {
                let [p, k] = params(name, rest)?;
                FamilySpec::VandermondeDiag { p, k }
            }
            "tracezero" => FamilySpec::TraceZero { n: params::<1>(name, rest)?[0] },
            "rankann" => {
                let [m, n, k] = params(name, rest)?;
                FamilySpec::RankAnnihilator { m, n, k }
            }
            "dual8" if rest.is_empty() => FamilySpec::DualTransitive8,
            "phiblock" => {
                let [n, k] = params(name, rest)?;
                FamilySpec::PhiBlock { n, k }
            }
            "sltensor" => {
                let [d, m] = params(name, rest)?;
                FamilySpec::SlTensorFull { d, m }
            }
            "rowaug" => FamilySpec::RowAugmented(Box::new(rest.parse()?)),
            "pattern" => {
                let (n, cells) = rest.split_once(':').unwrap_or((rest, ""));
                let n = parse_usize(n)?;
                FamilySpec::Pattern { n, cells: parse_cells(n, cells)? }
            }
            "full" => {
                let [m, n] = params(name, rest)?;
                FamilySpec::Full { m, n }
            }
            "zero" => {
                let [m, n] = params(name, rest)?;
                FamilySpec::Zero { m, n }
            }
            "corner-toeplitz" => {
                let [n, big] = params(name, rest)?;
                FamilySpec::CornerToeplitz { n, big }
            }
            _ => return Err(Error::Parse(format!("unknown family spec {s:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Toeplitz { n } => write!(f, "toeplitz:{n}"),
            FamilySpec::Hankel { n } => write!(f, "hankel:{n}"),
            FamilySpec::Minimal { m, n, k } => write!(f, "minimal:{m},{n},{k}"),
            FamilySpec::DiagonalAnnihilator { m, n, k } => write!(f, "diagann:{m},{n},{k}"),
            FamilySpec::VandermondeDiag { p, k } => write!(f, "vandermonde:{p},{k}"),
            FamilySpec::TraceZero { n } => write!(f, "tracezero:{n}"),
            FamilySpec::RankAnnihilator { m, n, k } => write!(f, "rankann:{m},{n},{k}"),
            FamilySpec::DualTransitive8 => write!(f, "dual8"),
            FamilySpec::PhiBlock { n, k } => write!(f, "phiblock:{n},{k}"),
            FamilySpec::SlTensorFull { d, m } => write!(f, "sltensor:{d},{m}"),
            FamilySpec::RowAugmented(inner) => write!(f, "rowaug:{inner}"),
            FamilySpec::Pattern { n, cells } => {
                let cells: Vec<String> = cells.iter().map(|(i, j)| format!("{}-{}", i + 1, j + 1)).collect();
                write!(f, "pattern:{n}:{}", cells.join(","))
            }
            FamilySpec::Full { m, n } => write!(f, "full:{m},{n}"),
            FamilySpec::Zero { m, n } => write!(f, "zero:{m},{n}"),
            FamilySpec::CornerToeplitz { n, big } => write!(f, "corner-toeplitz:{n},{big}"),
        }
    }
}

fn out_of_range(msg: String) -> Result<()> {
    Err(Error::ParameterOutOfRange(msg))
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let mnk = |m: usize, n: usize, k: usize| {
            if k == 0 || k >= m.min(n) {
                out_of_range(format!("need 1 <= k < min(m, n), got m = {m}, n = {n}, k = {k}"))
            } else {
                Ok(())
            }
        };
        match self {
            FamilySpec::Toeplitz { n } | FamilySpec::Hankel { n } if *n == 0 => out_of_range("need n >= 1".into()),
            FamilySpec::Minimal { m, n, k } | FamilySpec::DiagonalAnnihilator { m, n, k } => mnk(*m, *n, *k),
            FamilySpec::VandermondeDiag { p, k } if *p == 0 || k > p => {
                out_of_range("need 0 <= k <= p, p >= 1".to_string())
            }
            FamilySpec::TraceZero { n } if *n < 2 => out_of_range("need n >= 2".into()),
            FamilySpec::RankAnnihilator { m, n, k } if k + 1 > *m.min(n) => {
                out_of_range(format!("need k + 1 <= min(m, n), got m = {m}, n = {n}, k = {k}"))
            }
            FamilySpec::PhiBlock { n, k } if !phi_block_admissible(*n, *k) => {
                out_of_range(format!("need 1 <= k < n/(2 + sqrt 2), got n = {n}, k = {k}"))
            }
            FamilySpec::SlTensorFull { d, m } if *d < 2 || *m == 0 => out_of_range("need d >= 2, m >= 1".into()),
            FamilySpec::RowAugmented(inner) => inner.validate(),
            FamilySpec::Pattern { n, cells } if *n == 0 || cells.iter().any(|&(i, j)| i >= *n || j >= *n) => {
                out_of_range(format!("cells must lie in Mat({n})"))
            }
            FamilySpec::Full { m, n } | FamilySpec::Zero { m, n } if *m == 0 || *n == 0 => {
                out_of_range("ambient dimensions must be positive".into())
            }
            FamilySpec::CornerToeplitz { n, big } if *n == 0 || n > big => out_of_range("need 1 <= n <= N".into()),
            _ => Ok(()),
        }
    }

    pub fn build<F: Field>(&self, ctx: &F::Ctx) -> Result<MatrixSubspace<F>> {
        self.validate()?;
        match self {
            FamilySpec::Toeplitz { n } => toeplitz_space(*n, ctx),
            FamilySpec::Hankel { n } => hankel_space(*n, ctx),
            FamilySpec::Minimal { m, n, k } => minimal_k_transitive(*m, *n, *k, ctx),
            FamilySpec::DiagonalAnnihilator { m, n, k } => min_rank_diagonal_annihilator(*m, *n, *k, ctx),
            FamilySpec::VandermondeDiag { p, k } => vandermonde_diagonal_space(*p, *k, ctx),
            FamilySpec::TraceZero { n } => trace_zero(*n, ctx),
            FamilySpec::RankAnnihilator { m, n, k } => rank_annihilator_space(*m, *n, *k, ctx),
            FamilySpec::DualTransitive8 => Ok(dual_transitive_8dim(ctx).0),
            FamilySpec::PhiBlock { n, k } => phi_block_space(*n, *k, ctx),
            FamilySpec::SlTensorFull { d, m } => sl_tensor_full(*d, *m, ctx),
            FamilySpec::RowAugmented(inner) => Ok(row_augmented_space(&inner.build(ctx)?)),
            FamilySpec::Pattern { n, cells } => pattern_space(*n, cells, ctx),
            FamilySpec::Full { m, n } => Ok(MatrixSubspace::full(*m, *n, ctx)),
            FamilySpec::Zero { m, n } => Ok(MatrixSubspace::zero(*m, *n, ctx)),
            FamilySpec::CornerToeplitz { n, big } => corner_toeplitz(*n, *big, ctx),
        }
    }

    /// Builds over the field named by `tag`.
    pub fn build_any(&self, tag: FieldTag) -> Result<AnySubspace> {
        Ok(match tag {
            FieldTag::Rational => self.build::<Rational>(&())?.into(),
            FieldTag::Gaussian => self.build::<GaussRational>(&())?.into(),
            FieldTag::Prime(p) => {
                crate::field::check_modulus(p)?;
                self.build::<crate::field::Fp>(&p)?.into()
            }
            FieldTag::Quad(p) => self.build::<crate::field::Fp2>(&Fp2Ctx::new(p)?)?.into(),
        })
    }

    /// Closed-form dimension and claimed transitivity data over `Q`.
    pub fn manifest(&self) -> Manifest {
        let sq = |n: usize| (n, n);
        match self {
            FamilySpec::Toeplitz { n } | FamilySpec::Hankel { n } | FamilySpec::CornerToeplitz { n, .. } => {
                let n = *n;
                Manifest {
                    shape: sq(n),
                    dim: 2 * n - 1,
                    transitive: Some(1),
                    not_transitive: (n >= 2).then_some(2),
                    separating: (n >= 2).then_some(2),
                    not_separating: (n >= 3 && matches!(self, FamilySpec::Toeplitz { .. })).then_some(3),
                    ..Default::default()
                }
            }
            FamilySpec::Minimal { m, n, k } => Manifest {
                shape: (*m, *n),
                dim: k * (m + n - k),
                transitive: Some(*k),
                not_transitive: Some(k + 1),
                separating: Some(k + 1),
                ..Default::default()
            },
            FamilySpec::DiagonalAnnihilator { m, n, k } => Manifest {
                shape: (*n, *m),
                dim: m * n - k * (m + n - k),
                min_rank: Some(k + 1),
                dual_transitive: Some(*k),
                ..Default::default()
            },
            FamilySpec::VandermondeDiag { p, k } => {
                Manifest { shape: sq(*p), dim: p - k, min_rank: (k < p).then_some(k + 1), ..Default::default() }
            }
            FamilySpec::TraceZero { n } => Manifest {
                shape: sq(*n),
                dim: n * n - 1,
                transitive: Some(n - 1),
                not_transitive: Some(*n),
                ..Default::default()
            },
            FamilySpec::RankAnnihilator { m, n, k } => Manifest {
                shape: (*m, *n),
                dim: m * n - 1,
                transitive: Some(*k),
                not_transitive: Some(k + 1),
                ..Default::default()
            },
            FamilySpec::DualTransitive8 => Manifest {
                shape: sq(4),
                dim: 8,
                transitive: Some(1),
                not_transitive: Some(2),
                dual_transitive: Some(1),
                min_rank: Some(2),
                ..Default::default()
            },
            FamilySpec::PhiBlock { n, k } => Manifest {
                shape: sq(2 * n),
                dim: 2 * n * n,
                not_transitive: Some(1),
                dual_transitive: Some(*k),
                min_rank: Some(k + 1),
                ..Default::default()
            },
            FamilySpec::SlTensorFull { d, m } => Manifest {
                shape: sq(d * m),
                dim: (d * d - 1) * m * m,
                transitive: Some(d - 1),
                not_transitive: Some(*d),
                ..Default::default()
            },
            FamilySpec::RowAugmented(inner) => {
                let im = inner.manifest();
                Manifest {
                    shape: (im.shape.0 + 1, im.shape.1),
                    dim: im.dim + im.shape.1,
                    transitive: im.transitive,
                    not_transitive: im.not_transitive,
                    separating: Some(im.shape.1),
                    ..Default::default()
                }
            }
            FamilySpec::Pattern { n, cells } => {
                let mut distinct = cells.clone();
                distinct.sort_unstable();
                distinct.dedup();
                let full = distinct.len() == n * n;
                Manifest {
                    shape: sq(*n),
                    dim: distinct.len(),
                    transitive: full.then_some(*n),
                    not_transitive: (!full).then_some(1),
                    ..Default::default()
                }
            }
            FamilySpec::Full { m, n } => Manifest {
                shape: (*m, *n),
                dim: m * n,
                transitive: Some(*m.min(n)),
                separating: Some(*n),
                ..Default::default()
            },
            FamilySpec::Zero { m, n } => {
                Manifest { shape: (*m, *n), dim: 0, not_transitive: Some(1), ..Default::default() }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    #[test]
    fn builds_over_every_field() {
        let spec: FamilySpec = "toeplitz:3".parse().unwrap();
        for tag in ["Q", "Qi", "GF(5)", "GF(3^2)"] {
            let s = spec.build_any(tag.parse().unwrap()).unwrap();
            assert_eq!((s.dim(), s.field().to_string()), (5, tag.to_string()));
        }
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "toeplitz:4",
            "hankel:2",
            "minimal:4,5,2",
            "diagann:3,3,1",
            "vandermonde:5,2",
            "tracezero:3",
            "rankann:3,3,1",
            "dual8",
            "phiblock:4,1",
            "sltensor:2,2",
            "rowaug:toeplitz:3",
            "rowaug:zero:3,3",
            "pattern:2:1-1,1-2,2-2",
            "pattern:2:",
            "full:2,3",
            "zero:3,3",
            "corner-toeplitz:2,4",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("(minimal:3,3,1)".parse::<FamilySpec>().unwrap(), FamilySpec::Minimal { m: 3, n: 3, k: 1 });
    }

    #[test]
    fn parse_errors() {
        for s in [
            "toeplitz",
            "toeplitz:a",
            "minimal:3,3",
            "minimal:3,3,3",
            "phiblock:4,2",
            "nope:1",
            "pattern:2:3-1",
            "dual8:1",
        ] {
            assert!(s.parse::<FamilySpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn dimensions_match_manifest() {
        let mut specs = Vec::new();
        for m in 2..=6 {
            for n in 2..=6 {
                for k in 1..m.min(n).min(4) {
                    specs.push(FamilySpec::Minimal { m, n, k });
                    specs.push(FamilySpec::DiagonalAnnihilator { m, n, k });
                    specs.push(FamilySpec::RankAnnihilator { m, n, k });
                }
            }
        }
        for n in 1..=6 {
            specs.push(FamilySpec::Toeplitz { n });
            specs.push(FamilySpec::Hankel { n });
            specs.push(FamilySpec::RowAugmented(Box::new(FamilySpec::Toeplitz { n })));
            for k in 0..=n {
                specs.push(FamilySpec::VandermondeDiag { p: n, k });
            }
        }
        for d in 2..=4 {
            specs.push(FamilySpec::TraceZero { n: d });
            for m in 1..=2 {
                specs.push(FamilySpec::SlTensorFull { d, m });
            }
        }
        specs.push(FamilySpec::DualTransitive8);
        specs.push(FamilySpec::PhiBlock { n: 4, k: 1 });
        specs.push(FamilySpec::CornerToeplitz { n: 3, big: 5 });
        for spec in specs {
            let l = spec.build::<Rational>(&()).unwrap();
            let man = spec.manifest();
            assert_eq!((l.shape(), l.dim()), (man.shape, man.dim), "{spec}");
        }
    }
}
