use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, FieldTag, FiniteTarget, Fp, Fp2, Fp2Ctx};
use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn int(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rational(f, &self.0)
    }
}

pub(crate) fn write_rational(f: &mut impl fmt::Write, r: &BigRational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Reduces `r` into `GF(p)`; fails when `p` divides the denominator.
pub(crate) fn rational_mod(r: &BigRational, p: u32) -> Result<u32> {
    let pb = BigInt::from(p);
    let d = r.denom().mod_floor(&pb);
    if d.is_zero() {
        return Err(Error::BadPrime {
            p: p as u64,
            reason: format!("denominator of {} divisible by {p}", RatDisplay(r)),
        });
    }
    let n = r.numer().mod_floor(&pb).to_u32().unwrap();
    let d = d.to_u32().unwrap();
    let dinv = Fp::new(d, p).inv().unwrap();
    Ok(Fp::new(n, p).mul(&dinv).value())
}

struct RatDisplay<'a>(&'a BigRational);

impl fmt::Display for RatDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rational(f, self.0)
    }
}

impl Field for Rational {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero(_: &()) -> Self {
        Rational(BigRational::zero())
    }

    fn one(_: &()) -> Self {
        Rational(BigRational::one())
    }

    fn from_i64(_: &(), v: i64) -> Self {
        Rational::int(v)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn tag(_: &()) -> FieldTag {
        FieldTag::Rational
    }

    fn parse(_: &(), s: &str) -> Result<Self> {
        parse_rational(s).map(Rational)
    }

    fn to_prime_field(&self, p: u32) -> Result<Fp> {
        Ok(Fp::new(rational_mod(&self.0, p)?, p))
    }

    fn to_quad_field(&self, ctx: &Fp2Ctx) -> Result<Fp2> {
        Ok(Fp2::new(rational_mod(&self.0, ctx.p)?, 0, ctx))
    }

    fn default_target(_: &(), p: u32) -> Result<FiniteTarget> {
        Ok(FiniteTarget::Prime(p))
    }

    fn to_complex(&self) -> Option<Complex64> {
        Some(Complex64::new(self.to_f64(), 0.0))
    }

    fn from_rational_parts(_: &(), re: &BigRational, im: &BigRational) -> Option<Self> {
        im.is_zero().then(|| Rational(re.clone()))
    }
}

impl Rational {
    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let r = Rational::new(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::parse(&(), "-3/2").unwrap(), r);
        assert_eq!(Rational::parse(&(), "4/2").unwrap().to_string(), "2");
        assert!(Rational::parse(&(), "1/0").is_err());
        assert!(Rational::parse(&(), "x").is_err());
    }

    #[test]
    fn reduction() {
        assert_eq!(Rational::new(1, 2).to_prime_field(7).unwrap().value(), 4);
        assert_eq!(Rational::new(-1, 3).to_prime_field(5).unwrap().value(), 3);
        assert!(matches!(Rational::new(1, 5).to_prime_field(5), Err(Error::BadPrime { .. })));
    }
}
