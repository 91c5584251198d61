use std::fmt;
use std::sync::Arc;

use super::{Field, FieldTag, FiniteTarget, Fp, Fp2, Fp2Ctx, Rational};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Modulus of `Q[x]/(g)`; `g` is monic and assumed irreducible by the caller.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberFieldCtx(Arc<Vec<Rational>>);

impl NumberFieldCtx {
    pub fn new(modulus: &Poly<Rational>) -> Result<Self> {
        match modulus.degree() {
            Some(d) if d >= 1 => Ok(NumberFieldCtx(Arc::new(modulus.monic().coeffs().to_vec()))),
            _ => Err(Error::InvalidParameter("number field modulus must have degree >= 1".into())),
        }
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    fn modulus(&self) -> Poly<Rational> {
        Poly::new(&(), self.0.to_vec())
    }
}

/// Element of `Q[x]/(g)`, stored as its reduced representative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumberField {
    ctx: NumberFieldCtx,
    rep: Vec<Rational>,
}

impl NumberField {
    pub fn from_poly(ctx: &NumberFieldCtx, p: &Poly<Rational>) -> Self {
        let r = p.div_rem(&ctx.modulus()).1;
        NumberField { ctx: ctx.clone(), rep: r.coeffs().to_vec() }
    }

    /// The class of `x`, a root of the modulus.
    pub fn generator(ctx: &NumberFieldCtx) -> Self {
        NumberField::from_poly(ctx, &Poly::x(&()))
    }

    pub fn from_rational(ctx: &NumberFieldCtx, r: &Rational) -> Self {
        NumberField::from_poly(ctx, &Poly::constant(r.clone()))
    }

    fn poly(&self) -> Poly<Rational> {
        Poly::new(&(), self.rep.clone())
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.rep.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Field for NumberField {
    type Ctx = NumberFieldCtx;

    fn ctx(&self) -> NumberFieldCtx {
        self.ctx.clone()
    }

    fn zero(ctx: &NumberFieldCtx) -> Self {
        NumberField { ctx: ctx.clone(), rep: Vec::new() }
    }

    fn one(ctx: &NumberFieldCtx) -> Self {
        NumberField::from_rational(ctx, &Rational::int(1))
    }

    fn from_i64(ctx: &NumberFieldCtx, v: i64) -> Self {
        NumberField::from_rational(ctx, &Rational::int(v))
    }

    fn is_zero(&self) -> bool {
        self.rep.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        NumberField::from_poly(&self.ctx, &self.poly().add(&rhs.poly()))
    }

    fn sub(&self, rhs: &Self) -> Self {
        NumberField::from_poly(&self.ctx, &self.poly().sub(&rhs.poly()))
    }

    fn mul(&self, rhs: &Self) -> Self {
        NumberField::from_poly(&self.ctx, &self.poly().mul(&rhs.poly()))
    }

    fn neg(&self) -> Self {
        NumberField { ctx: self.ctx.clone(), rep: self.rep.iter().map(|c| c.neg()).collect() }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = self.poly().ext_gcd(&self.ctx.modulus());
        if g.degree() != Some(0) {
            // modulus was reducible
            return None;
        }
        Some(NumberField::from_poly(&self.ctx, &s))
    }

    fn tag(_: &NumberFieldCtx) -> FieldTag {
        FieldTag::Rational
    }

    fn parse(_: &NumberFieldCtx, s: &str) -> Result<Self> {
        Err(Error::Unsupported(format!("number-field entries are not serialized ({s:?})")))
    }

    fn to_prime_field(&self, _: u32) -> Result<Fp> {
        Err(Error::Unsupported("reduction of number-field elements".into()))
    }

    fn to_quad_field(&self, _: &Fp2Ctx) -> Result<Fp2> {
        Err(Error::Unsupported("reduction of number-field elements".into()))
    }

    fn default_target(_: &NumberFieldCtx, _: u32) -> Result<FiniteTarget> {
        Err(Error::Unsupported("reduction of number-field elements".into()))
    }
}
