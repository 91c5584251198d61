//! JSON interchange for matrices and subspaces.
//!
//! A subspace file looks like
//!
//! ```json
//! {"rows": 2, "cols": 2, "field": "Q", "basis": [["1", "0", "0", "1"]]}
//! ```
//!
//! where each basis entry is a row-major list of `rows·cols` entry strings.
//! Rationals are written `a/b` (or `a` when `b = 1`), Gaussian rationals
//! `a/b+c/d i`, prime-field elements `k mod p` and elements of `GF(p^2)`
//! `a+bw mod p` with `w² = ω`, the least quadratic non-residue mod `p`.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{check_modulus, Field, FieldTag, Fp, Fp2, Fp2Ctx, GaussRational, Rational};
use crate::matrix::Mat;
use crate::subspace::MatrixSubspace;

pub fn mat_to_json<F: Field>(m: &Mat<F>) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect();
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "field": F::tag(m.ctx()).to_string(),
        "entries": rows,
    })
}

pub fn subspace_to_json<F: Field>(s: &MatrixSubspace<F>) -> Value {
    let basis: Vec<Vec<String>> =
        (0..s.dim()).map(|i| s.coords().row(i).iter().map(|x| x.to_string()).collect()).collect();
    json!({
        "rows": s.rows(),
        "cols": s.cols(),
        "field": F::tag(s.ctx()).to_string(),
        "basis": basis,
    })
}

/// Pretty-printed, byte-stable serialization.
pub fn subspace_to_string<F: Field>(s: &MatrixSubspace<F>) -> String {
    serde_json::to_string_pretty(&subspace_to_json(s)).expect("JSON values always serialize")
}

/// A subspace over any of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnySubspace {
    Q(MatrixSubspace<Rational>),
    Qi(MatrixSubspace<GaussRational>),
    Fp(MatrixSubspace<Fp>),
    Fp2(MatrixSubspace<Fp2>),
}

/// Runs `$body` with `$s` bound to the concrete subspace inside an
/// [`AnySubspace`]. The body must have the same type for every field.
#[macro_export]
macro_rules! with_subspace {
    ($any:expr, $s:ident => $body:expr) => {
        match $any {
            $crate::io::AnySubspace::Q($s) => $body,
            $crate::io::AnySubspace::Qi($s) => $body,
            $crate::io::AnySubspace::Fp($s) => $body,
            $crate::io::AnySubspace::Fp2($s) => $body,
        }
    };
}

/// Like [`with_subspace!`] for two subspaces that must share a field.
#[macro_export]
macro_rules! with_subspace_pair {
    ($a:expr, $b:expr, ($x:ident, $y:ident) => $body:expr) => {
        match ($a, $b) {
            ($crate::io::AnySubspace::Q($x), $crate::io::AnySubspace::Q($y)) => Ok($body),
            ($crate::io::AnySubspace::Qi($x), $crate::io::AnySubspace::Qi($y)) => Ok($body),
            ($crate::io::AnySubspace::Fp($x), $crate::io::AnySubspace::Fp($y)) => Ok($body),
            ($crate::io::AnySubspace::Fp2($x), $crate::io::AnySubspace::Fp2($y)) => Ok($body),
            (x, y) => Err($crate::Error::FieldMismatch(x.field().to_string(), y.field().to_string())),
        }
    };
}

impl AnySubspace {
    pub fn field(&self) -> FieldTag {
        with_subspace!(self, s => s_tag(s))
    }

    pub fn dim(&self) -> usize {
        with_subspace!(self, s => s.dim())
    }

    pub fn shape(&self) -> (usize, usize) {
        with_subspace!(self, s => s.shape())
    }

    pub fn to_json(&self) -> Value {
        with_subspace!(self, s => subspace_to_json(s))
    }

    pub fn to_json_string(&self) -> String {
        with_subspace!(self, s => subspace_to_string(s))
    }
}

fn s_tag<F: Field>(s: &MatrixSubspace<F>) -> FieldTag {
    F::tag(s.ctx())
}

impl From<MatrixSubspace<Rational>> for AnySubspace {
    fn from(s: MatrixSubspace<Rational>) -> Self {
        AnySubspace::Q(s)
    }
}

impl From<MatrixSubspace<GaussRational>> for AnySubspace {
    fn from(s: MatrixSubspace<GaussRational>) -> Self {
        AnySubspace::Qi(s)
    }
}

impl From<MatrixSubspace<Fp>> for AnySubspace {
    fn from(s: MatrixSubspace<Fp>) -> Self {
        AnySubspace::Fp(s)
    }
}

impl From<MatrixSubspace<Fp2>> for AnySubspace {
    fn from(s: MatrixSubspace<Fp2>) -> Self {
        AnySubspace::Fp2(s)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSubspace {
    rows: usize,
    cols: usize,
    field: String,
    basis: Vec<Vec<String>>,
}

/// Parses a subspace file. Generators are re-canonicalized; with `strict`,
/// a linearly dependent generator list is rejected instead.
pub fn parse_subspace(text: &str, strict: bool) -> Result<AnySubspace> {
    let raw: RawSubspace = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if raw.rows == 0 || raw.cols == 0 {
        return Err(Error::Parse("rows, cols: must be positive".into()));
    }
    let tag: FieldTag = raw.field.parse().map_err(|e: Error| Error::Parse(format!("field: {e}")))?;
    match tag {
        FieldTag::Rational => build(&raw, &(), strict).map(AnySubspace::Q),
        FieldTag::Gaussian => build(&raw, &(), strict).map(AnySubspace::Qi),
        FieldTag::Prime(p) => {
            check_modulus(p).map_err(|e| Error::Parse(format!("field: {e}")))?;
            build(&raw, &p, strict).map(AnySubspace::Fp)
        }
        FieldTag::Quad(p) => {
            let ctx = Fp2Ctx::new(p).map_err(|e| Error::Parse(format!("field: {e}")))?;
            build(&raw, &ctx, strict).map(AnySubspace::Fp2)
        }
    }
}

fn build<F: Field>(raw: &RawSubspace, ctx: &F::Ctx, strict: bool) -> Result<MatrixSubspace<F>> {
    let width = raw.rows * raw.cols;
    let mut vecs = Vec::with_capacity(raw.basis.len());
    for (i, entries) in raw.basis.iter().enumerate() {
        if entries.len() != width {
            return Err(Error::Parse(format!(
                "basis[{i}]: expected {width} entries for a {}x{} matrix, found {}",
                raw.rows,
                raw.cols,
                entries.len()
            )));
        }
        let v = entries
            .iter()
            .enumerate()
            .map(|(j, e)| F::parse(ctx, e).map_err(|err| Error::Parse(format!("basis[{i}][{j}]: {err}"))))
            .collect::<Result<Vec<F>>>()?;
        vecs.push(v);
    }
    let s = MatrixSubspace::from_vectors(raw.rows, raw.cols, ctx, &vecs)?;
    if strict && s.dim() < vecs.len() {
        return Err(Error::Parse(format!(
            "basis: {} generators span only {} dimensions (strict mode)",
            vecs.len(),
            s.dim()
        )));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let text = r#"{"rows":2,"cols":2,"field":"Q","basis":[["2","4","1/2","0"],["1","2","0","0"]]}"#;
        let s = parse_subspace(text, false).unwrap();
        assert_eq!(s.dim(), 2);
        let out = s.to_json_string();
        let again = parse_subspace(&out, true).unwrap();
        assert_eq!(again, s);
        assert_eq!(again.to_json_string(), out);
    }

    #[test]
    fn all_fields_round_trip() {
        for text in [
            r#"{"rows":1,"cols":2,"field":"Qi","basis":[["1/2+3/4 i","-5 i"]]}"#,
            r#"{"rows":1,"cols":2,"field":"GF(5)","basis":[["3 mod 5","1 mod 5"]]}"#,
            r#"{"rows":1,"cols":2,"field":"GF(7^2)","basis":[["2+3w mod 7","4w mod 7"]]}"#,
        ] {
            let s = parse_subspace(text, true).unwrap();
            assert_eq!(parse_subspace(&s.to_json_string(), true).unwrap(), s);
        }
    }

    #[test]
    fn errors_name_the_offending_entry() {
        let bad = r#"{"rows":1,"cols":2,"field":"Q","basis":[["1","x/2"]]}"#;
        let e = parse_subspace(bad, false).unwrap_err().to_string();
        assert!(e.contains("basis[0][1]"), "{e}");
        let short = r#"{"rows":1,"cols":2,"field":"Q","basis":[["1"]]}"#;
        assert!(parse_subspace(short, false).unwrap_err().to_string().contains("basis[0]"));
        let dep = r#"{"rows":1,"cols":1,"field":"Q","basis":[["1"],["2"]]}"#;
        assert_eq!(parse_subspace(dep, false).unwrap().dim(), 1);
        assert!(parse_subspace(dep, true).is_err());
        let e = parse_subspace("{\"rows\":1,\n\"cols\":}", false).unwrap_err().to_string();
        assert!(e.contains("line 2"), "{e}");
        assert!(parse_subspace(r#"{"rows":1,"cols":1,"field":"GF(6)","basis":[]}"#, false).is_err());
    }
}
