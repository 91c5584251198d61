//! Exact scalar fields.
//!
//! Every algorithm in the crate is generic over [`Field`]. Four concrete
//! fields are supported: the rationals, the Gaussian rationals `Q(i)`, prime
//! fields `GF(p)` and their quadratic extensions `GF(p^2)`. A fifth field,
//! [`NumberField`], is a simple-extension helper used for exact eigenvector
//! analysis and is not exposed through the file formats.

mod gaussian;
mod number_field;
mod prime;
mod quad;
mod rational;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub use gaussian::GaussRational;
pub use number_field::{NumberField, NumberFieldCtx};
pub(crate) use prime::check_modulus;
pub use prime::{is_prime, Fp};
pub use quad::{smallest_nonresidue, Fp2, Fp2Ctx};
pub use rational::Rational;

use crate::error::{Error, Result};

/// Arithmetic over an exact field.
///
/// Elements carry enough context (e.g. the modulus) to rebuild their field,
/// so zero and one are produced from a [`Field::Ctx`].
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, v: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    /// Field involution used by adjoints. Identity unless overridden.
    fn conj(&self) -> Self {
        self.clone()
    }

    fn tag(ctx: &Self::Ctx) -> FieldTag;

    /// Parses the canonical entry string produced by `Display`.
    fn parse(ctx: &Self::Ctx, s: &str) -> Result<Self>;

    /// Image of this element in `GF(p)`.
    fn to_prime_field(&self, p: u32) -> Result<Fp>;

    /// Image of this element in `GF(p^2)`.
    fn to_quad_field(&self, ctx: &Fp2Ctx) -> Result<Fp2>;

    /// Which finite field a reduction "mod `p`" lands in by default.
    fn default_target(ctx: &Self::Ctx, p: u32) -> Result<FiniteTarget>;

    /// Number of elements when the field is finite.
    fn order(_ctx: &Self::Ctx) -> Option<u64> {
        None
    }

    /// Floating-point embedding (only for characteristic-zero fields).
    fn to_complex(&self) -> Option<Complex64> {
        None
    }

    /// Builds `re + im*i` when that number lies in the field.
    fn from_rational_parts(_ctx: &Self::Ctx, _re: &BigRational, _im: &BigRational) -> Option<Self> {
        None
    }

    fn is_finite(ctx: &Self::Ctx) -> bool {
        Self::order(ctx).is_some()
    }
}

/// A field with an explicit, deterministic enumeration of its elements.
pub trait FiniteField: Field {
    fn size(ctx: &Self::Ctx) -> u64;

    /// The `idx`-th element; index 0 is zero and index 1 is one.
    fn element(ctx: &Self::Ctx, idx: u64) -> Self;

    fn characteristic(ctx: &Self::Ctx) -> u32;
}

/// Name of a supported field, as used in JSON and on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rational,
    Gaussian,
    Prime(u32),
    Quad(u32),
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "Q"),
            FieldTag::Gaussian => write!(f, "Qi"),
            FieldTag::Prime(p) => write!(f, "GF({p})"),
            FieldTag::Quad(p) => write!(f, "GF({p}^2)"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "Q" => return Ok(FieldTag::Rational),
            "Qi" | "Q(i)" => return Ok(FieldTag::Gaussian),
            _ => {}
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("unknown field tag {s:?}")))?;
        let (base, quad) = match inner.strip_suffix("^2") {
            Some(b) => (b, true),
            None => (inner, false),
        };
        let p: u32 = base.trim().parse().map_err(|_| Error::Parse(format!("bad modulus in field tag {s:?}")))?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p as u64));
        }
        if quad {
            if p == 2 {
                return Err(Error::Unsupported("GF(2^2) has no quadratic non-residue model".into()));
            }
            Ok(FieldTag::Quad(p))
        } else {
            Ok(FieldTag::Prime(p))
        }
    }
}

impl Serialize for FieldTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldTag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Destination of a reduction to a finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteTarget {
    Prime(u32),
    Quad(Fp2Ctx),
}

impl FiniteTarget {
    pub fn tag(&self) -> FieldTag {
        match self {
            FiniteTarget::Prime(p) => FieldTag::Prime(*p),
            FiniteTarget::Quad(c) => FieldTag::Quad(c.p),
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            FiniteTarget::Prime(p) => *p as u64,
            FiniteTarget::Quad(c) => c.p as u64 * c.p as u64,
        }
    }

    /// Target for `q = p` or `q = p^2`.
    pub fn for_order(q: u64) -> Result<Self> {
        if q <= u32::MAX as u64 && is_prime(q as u32) {
            return Ok(FiniteTarget::Prime(q as u32));
        }
        let r = (q as f64).sqrt().round() as u64;
        if r * r == q && r <= u32::MAX as u64 && is_prime(r as u32) {
            return Ok(FiniteTarget::Quad(Fp2Ctx::new(r as u32)?));
        }
        Err(Error::NotPrime(q))
    }
}

/// Sum of products `Σ a_i b_i`.
pub fn dot<F: Field>(ctx: &F::Ctx, a: &[F], b: &[F]) -> F {
    a.iter().zip(b).fold(F::zero(ctx), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { acc.add(&x.mul(y)) })
}
