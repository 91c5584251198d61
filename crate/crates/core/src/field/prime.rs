use std::fmt;

use num_rational::BigRational;

use super::{Field, FieldTag, FiniteField, FiniteTarget, Fp2, Fp2Ctx};
use crate::error::{Error, Result};

/// Element of `GF(p)` for a prime `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u32,
    p: u32,
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Fp {
    pub fn new(v: u32, p: u32) -> Self {
        Fp { v: v % p, p }
    }

    pub fn from_signed(v: i64, p: u32) -> Self {
        Fp { v: v.rem_euclid(p as i64) as u32, p }
    }

    pub fn value(&self) -> u32 {
        self.v
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Smallest square root, if any.
    pub fn sqrt(&self) -> Option<Fp> {
        (0..self.p).map(|x| Fp::new(x, self.p)).find(|x| x.mul(x) == *self)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.v, self.p)
    }
}

pub(crate) fn check_modulus(p: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p as u64));
    }
    if p >= 1 << 31 {
        return Err(Error::Unsupported(format!("modulus {p} too large")));
    }
    Ok(())
}

/// Parses `"k mod p"` and checks that `p` matches the field.
pub(crate) fn split_mod(s: &str, p: u32) -> Result<&str> {
    let (body, m) = s.rsplit_once(" mod ").ok_or_else(|| Error::Parse(format!("expected \"k mod {p}\", got {s:?}")))?;
    let m: u32 = m.trim().parse().map_err(|_| Error::Parse(format!("bad modulus in {s:?}")))?;
    if m != p {
        return Err(Error::Parse(format!("entry {s:?} is not over GF({p})")));
    }
    Ok(body.trim())
}

impl Field for Fp {
    type Ctx = u32;

    fn ctx(&self) -> u32 {
        self.p
    }

    fn zero(p: &u32) -> Self {
        Fp { v: 0, p: *p }
    }

    fn one(p: &u32) -> Self {
        Fp { v: 1 % *p, p: *p }
    }

    fn from_i64(p: &u32, v: i64) -> Self {
        Fp::from_signed(v, *p)
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn is_one(&self) -> bool {
        self.v == 1
    }

    fn add(&self, rhs: &Self) -> Self {
        let s = self.v as u64 + rhs.v as u64;
        Fp { v: (s % self.p as u64) as u32, p: self.p }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let s = self.v as u64 + self.p as u64 - rhs.v as u64;
        Fp { v: (s % self.p as u64) as u32, p: self.p }
    }

    fn mul(&self, rhs: &Self) -> Self {
        Fp { v: ((self.v as u64 * rhs.v as u64) % self.p as u64) as u32, p: self.p }
    }

    fn neg(&self) -> Self {
        if self.v == 0 {
            *self
        } else {
            Fp { v: self.p - self.v, p: self.p }
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        let v = pow_mod(self.v as u64, self.p as u64 - 2, self.p as u64) as u32;
        Some(Fp { v, p: self.p })
    }

    fn tag(p: &u32) -> FieldTag {
        FieldTag::Prime(*p)
    }

    fn parse(p: &u32, s: &str) -> Result<Self> {
        let body = split_mod(s.trim(), *p)?;
        let v: u32 = body.parse().map_err(|_| Error::Parse(format!("bad residue in {s:?}")))?;
        if v >= *p {
            return Err(Error::Parse(format!("residue in {s:?} not reduced")));
        }
        Ok(Fp::new(v, *p))
    }

    fn to_prime_field(&self, p: u32) -> Result<Fp> {
        if p == self.p {
            Ok(*self)
        } else {
            Err(Error::FieldMismatch(format!("GF({})", self.p), format!("GF({p})")))
        }
    }

    fn to_quad_field(&self, ctx: &Fp2Ctx) -> Result<Fp2> {
        if ctx.p == self.p {
            Ok(Fp2::new(self.v, 0, ctx))
        } else {
            Err(Error::FieldMismatch(format!("GF({})", self.p), format!("GF({}^2)", ctx.p)))
        }
    }

    fn default_target(p: &u32, _: u32) -> Result<FiniteTarget> {
        Ok(FiniteTarget::Prime(*p))
    }

    fn order(p: &u32) -> Option<u64> {
        Some(*p as u64)
    }

    fn from_rational_parts(_: &u32, _: &BigRational, _: &BigRational) -> Option<Self> {
        None
    }
}

impl FiniteField for Fp {
    fn size(p: &u32) -> u64 {
        *p as u64
    }

    fn element(p: &u32, idx: u64) -> Self {
        Fp::new(idx as u32, *p)
    }

    fn characteristic(p: &u32) -> u32 {
        *p
    }
}
