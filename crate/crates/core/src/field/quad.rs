use std::fmt;

use super::prime::{check_modulus, pow_mod, split_mod};
use super::{Field, FieldTag, FiniteField, FiniteTarget, Fp};
use crate::error::{Error, Result};

/// Smallest positive quadratic non-residue modulo an odd prime.
pub fn smallest_nonresidue(p: u32) -> Option<u32> {
    if p < 3 {
        return None;
    }
    (2..p).find(|&w| pow_mod(w as u64, (p as u64 - 1) / 2, p as u64) == p as u64 - 1)
}

/// `GF(p^2) = GF(p)[w] / (w^2 - ω)` with ω the smallest non-residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp2Ctx {
    pub p: u32,
    pub omega: u32,
}

impl Fp2Ctx {
    pub fn new(p: u32) -> Result<Self> {
        check_modulus(p)?;
        let omega =
            smallest_nonresidue(p).ok_or_else(|| Error::Unsupported(format!("GF({p}^2) needs an odd prime")))?;
        Ok(Fp2Ctx { p, omega })
    }
}

/// Element `a + b·w` of `GF(p^2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp2 {
    a: u32,
    b: u32,
    ctx: Fp2Ctx,
}

impl Fp2 {
    pub fn new(a: u32, b: u32, ctx: &Fp2Ctx) -> Self {
        Fp2 { a: a % ctx.p, b: b % ctx.p, ctx: *ctx }
    }

    pub fn parts(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    fn fp(&self, v: u32) -> Fp {
        Fp::new(v, self.ctx.p)
    }

    fn from_fp(a: Fp, b: Fp, ctx: &Fp2Ctx) -> Self {
        Fp2 { a: a.value(), b: b.value(), ctx: *ctx }
    }

    /// Some square root of `x`, found by search.
    pub fn sqrt(x: &Fp2) -> Option<Fp2> {
        let c = x.ctx;
        (0..c.p as u64 * c.p as u64).map(|i| Fp2::element(&c, i)).find(|y| y.mul(y) == *x)
    }
}

impl fmt::Debug for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.ctx.p;
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a} mod {p}"),
            (0, b) => write!(f, "{b}w mod {p}"),
            (a, b) => write!(f, "{a}+{b}w mod {p}"),
        }
    }
}

impl Field for Fp2 {
    type Ctx = Fp2Ctx;

    fn ctx(&self) -> Fp2Ctx {
        self.ctx
    }

    fn zero(ctx: &Fp2Ctx) -> Self {
        Fp2 { a: 0, b: 0, ctx: *ctx }
    }

    fn one(ctx: &Fp2Ctx) -> Self {
        Fp2 { a: 1, b: 0, ctx: *ctx }
    }

    fn from_i64(ctx: &Fp2Ctx, v: i64) -> Self {
        Fp2 { a: v.rem_euclid(ctx.p as i64) as u32, b: 0, ctx: *ctx }
    }

    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        let p = self.ctx.p as u64;
        Fp2 {
            a: ((self.a as u64 + rhs.a as u64) % p) as u32,
            b: ((self.b as u64 + rhs.b as u64) % p) as u32,
            ctx: self.ctx,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let p = self.ctx.p as u64;
        Fp2 {
            a: ((self.a as u64 + p - rhs.a as u64) % p) as u32,
            b: ((self.b as u64 + p - rhs.b as u64) % p) as u32,
            ctx: self.ctx,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let p = self.ctx.p as u64;
        let (a, b, c, d) = (self.a as u64, self.b as u64, rhs.a as u64, rhs.b as u64);
        let bd = b * d % p;
        let re = (a * c + bd * self.ctx.omega as u64) % p;
        let im = (a * d + b * c) % p;
        Fp2 { a: re as u32, b: im as u32, ctx: self.ctx }
    }

    fn neg(&self) -> Self {
        let p = self.ctx.p;
        Fp2 { a: (p - self.a) % p, b: (p - self.b) % p, ctx: self.ctx }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // (a + bw)^{-1} = (a - bw) / (a^2 - ω b^2)
        let a = self.fp(self.a);
        let b = self.fp(self.b);
        let w = self.fp(self.ctx.omega);
        let norm = a.mul(&a).sub(&w.mul(&b).mul(&b));
        let ninv = norm.inv()?;
        Some(Fp2::from_fp(a.mul(&ninv), b.neg().mul(&ninv), &self.ctx))
    }

    /// Frobenius `x ↦ x^p`, i.e. `a + bw ↦ a - bw`.
    fn conj(&self) -> Self {
        Fp2 { a: self.a, b: (self.ctx.p - self.b) % self.ctx.p, ctx: self.ctx }
    }

    fn tag(ctx: &Fp2Ctx) -> FieldTag {
        FieldTag::Quad(ctx.p)
    }

    fn parse(ctx: &Fp2Ctx, s: &str) -> Result<Self> {
        let body = split_mod(s.trim(), ctx.p)?;
        let bad = || Error::Parse(format!("bad GF({}^2) entry {s:?}", ctx.p));
        let num = |t: &str| -> Result<u32> {
            let v: u32 = t.trim().parse().map_err(|_| bad())?;
            if v >= ctx.p {
                return Err(bad());
            }
            Ok(v)
        };
        let (a, b) = match body.strip_suffix('w') {
            None => (num(body)?, 0),
            Some(rest) => match rest.split_once('+') {
                Some((a, b)) => (num(a)?, num(b)?),
                None => (0, num(rest)?),
            },
        };
        Ok(Fp2::new(a, b, ctx))
    }

    fn to_prime_field(&self, p: u32) -> Result<Fp> {
        if self.b == 0 && p == self.ctx.p {
            Ok(Fp::new(self.a, p))
        } else {
            Err(Error::FieldMismatch(format!("GF({}^2)", self.ctx.p), format!("GF({p})")))
        }
    }

    fn to_quad_field(&self, ctx: &Fp2Ctx) -> Result<Fp2> {
        if *ctx == self.ctx {
            Ok(*self)
        } else {
            Err(Error::FieldMismatch(format!("GF({}^2)", self.ctx.p), format!("GF({}^2)", ctx.p)))
        }
    }

    fn default_target(ctx: &Fp2Ctx, _: u32) -> Result<FiniteTarget> {
        Ok(FiniteTarget::Quad(*ctx))
    }

    fn order(ctx: &Fp2Ctx) -> Option<u64> {
        Some(ctx.p as u64 * ctx.p as u64)
    }
}

impl FiniteField for Fp2 {
    fn size(ctx: &Fp2Ctx) -> u64 {
        ctx.p as u64 * ctx.p as u64
    }

    fn element(ctx: &Fp2Ctx, idx: u64) -> Self {
        let p = ctx.p as u64;
        Fp2 { a: (idx % p) as u32, b: (idx / p % p) as u32, ctx: *ctx }
    }

    fn characteristic(ctx: &Fp2Ctx) -> u32 {
        ctx.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonresidues() {
        assert_eq!(smallest_nonresidue(3), Some(2));
        assert_eq!(smallest_nonresidue(5), Some(2));
        assert_eq!(smallest_nonresidue(7), Some(3));
        assert_eq!(smallest_nonresidue(2), None);
    }

    #[test]
    fn every_nonzero_element_inverts() {
        let ctx = Fp2Ctx::new(7).unwrap();
        let one = Fp2::one(&ctx);
        for i in 1..49 {
            let x = Fp2::element(&ctx, i);
            assert_eq!(x.mul(&x.inv().unwrap()), one, "{x}");
            // Frobenius is a field automorphism of order two
            assert_eq!(x.conj().conj(), x);
            let y = Fp2::element(&ctx, (i * 5 + 3) % 49);
            assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        }
    }

    #[test]
    fn entry_strings_round_trip() {
        let ctx = Fp2Ctx::new(7).unwrap();
        for i in 0..49 {
            let x = Fp2::element(&ctx, i);
            let s = x.to_string();
            assert_eq!(Fp2::parse(&ctx, &s).unwrap(), x, "{s}");
        }
        assert_eq!(Fp2::new(3, 4, &ctx).to_string(), "3+4w mod 7");
        assert_eq!(Fp2::new(0, 4, &ctx).to_string(), "4w mod 7");
    }

    #[test]
    fn minus_one_has_a_root() {
        let ctx = Fp2Ctx::new(7).unwrap();
        let m1 = Fp2::from_i64(&ctx, -1);
        let r = Fp2::sqrt(&m1).unwrap();
        assert_eq!(r.mul(&r), m1);
    }
}
