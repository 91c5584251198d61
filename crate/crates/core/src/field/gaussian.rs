use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{parse_rational, rational_mod, write_rational};
use super::{Field, FieldTag, FiniteTarget, Fp, Fp2, Fp2Ctx};
use crate::error::{Error, Result};

/// `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn i() -> Self {
        GaussRational { re: BigRational::zero(), im: BigRational::one() }
    }

    fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write_rational(f, &self.re);
        }
        if !self.re.is_zero() {
            write_rational(f, &self.re)?;
            if self.im.is_positive() {
                write!(f, "+")?;
            }
        }
        write_rational(f, &self.im)?;
        write!(f, " i")
    }
}

fn parse_gaussian(s: &str) -> Result<GaussRational> {
    let t = s.trim();
    let Some(body) = t.strip_suffix('i') else {
        return Ok(GaussRational::new(parse_rational(t)?, BigRational::zero()));
    };
    let body = body.trim_end();
    // split at the last sign that is not the leading one
    let split =
        body.char_indices().filter(|&(idx, c)| idx > 0 && (c == '+' || c == '-')).map(|(idx, _)| idx).next_back();
    match split {
        Some(idx) => {
            let re = parse_rational(&body[..idx])?;
            let im_text = body[idx..].trim_start_matches('+');
            Ok(GaussRational::new(re, parse_rational(im_text)?))
        }
        None => Ok(GaussRational::new(BigRational::zero(), parse_rational(body)?)),
    }
}

impl Field for GaussRational {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero(_: &()) -> Self {
        GaussRational::new(BigRational::zero(), BigRational::zero())
    }

    fn one(_: &()) -> Self {
        GaussRational::new(BigRational::one(), BigRational::zero())
    }

    fn from_i64(_: &(), v: i64) -> Self {
        GaussRational::new(BigRational::from_integer(v.into()), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    fn sub(&self, rhs: &Self) -> Self {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    fn mul(&self, rhs: &Self) -> Self {
        GaussRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }

    fn neg(&self) -> Self {
        GaussRational::new(-&self.re, -&self.im)
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(GaussRational::new(&self.re / &n, -&self.im / &n))
    }

    fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -&self.im)
    }

    fn tag(_: &()) -> FieldTag {
        FieldTag::Gaussian
    }

    fn parse(_: &(), s: &str) -> Result<Self> {
        parse_gaussian(s)
    }

    /// Sends `i` to the smallest square root of `-1` mod `p`.
    fn to_prime_field(&self, p: u32) -> Result<Fp> {
        let i = Fp::from_signed(-1, p)
            .sqrt()
            .ok_or_else(|| Error::BadPrime { p: p as u64, reason: "no square root of -1 in GF(p)".into() })?;
        let re = Fp::new(rational_mod(&self.re, p)?, p);
        let im = Fp::new(rational_mod(&self.im, p)?, p);
        Ok(re.add(&im.mul(&i)))
    }

    fn to_quad_field(&self, ctx: &Fp2Ctx) -> Result<Fp2> {
        let i = Fp2::sqrt(&Fp2::from_i64(ctx, -1)).expect("GF(p^2) contains sqrt(-1)");
        let re = Fp2::new(rational_mod(&self.re, ctx.p)?, 0, ctx);
        let im = Fp2::new(rational_mod(&self.im, ctx.p)?, 0, ctx);
        Ok(re.add(&im.mul(&i)))
    }

    fn default_target(_: &(), p: u32) -> Result<FiniteTarget> {
        if p % 4 == 1 {
            Ok(FiniteTarget::Prime(p))
        } else {
            Ok(FiniteTarget::Quad(Fp2Ctx::new(p)?))
        }
    }

    fn to_complex(&self) -> Option<Complex64> {
        Some(Complex64::new(self.re.to_f64()?, self.im.to_f64()?))
    }

    fn from_rational_parts(_: &(), re: &BigRational, im: &BigRational) -> Option<Self> {
        Some(GaussRational::new(re.clone(), im.clone()))
    }
}
