use serde::Serialize;
use serde_json::{json, Value};

use crate::field::{Field, FieldTag};
use crate::io::mat_to_json;
use crate::matrix::Mat;
use crate::subspace::MatrixSubspace;

/// How a verdict was reached.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub strategies: Vec<String>,
    /// Points visited by exhaustive enumerations.
    pub enumerated: u64,
    pub primes: Vec<u32>,
    pub seed: Option<u64>,
    pub notes: Vec<String>,
}

impl Evidence {
    pub(crate) fn tag(&mut self, s: &str) {
        if !self.strategies.iter().any(|t| t == s) {
            self.strategies.push(s.to_string());
        }
    }

    pub(crate) fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Disproved,
    CertifiedExact,
    /// Exhaustively certified over each of the listed finite fields only.
    CertifiedFiniteField(Vec<FieldTag>),
    Unknown,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Disproved => "Disproved",
            Status::CertifiedExact => "CertifiedExact",
            Status::CertifiedFiniteField(_) => "CertifiedFiniteField",
            Status::Unknown => "Unknown",
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Status::CertifiedExact | Status::CertifiedFiniteField(_))
    }

    /// Certified over the given finite field (or exactly).
    pub fn certifies_over(&self, tag: FieldTag) -> bool {
        match self {
            Status::CertifiedExact => true,
            Status::CertifiedFiniteField(fs) => fs.contains(&tag),
            _ => false,
        }
    }

    fn fields_json(&self) -> Value {
        match self {
            Status::CertifiedFiniteField(fs) => json!(fs.iter().map(|f| f.to_string()).collect::<Vec<_>>()),
            _ => Value::Null,
        }
    }
}

/// The statement a verdict actually supports, given the field of the input.
pub fn soundness_label(status: &Status, field: FieldTag) -> String {
    let exact_input = matches!(field, FieldTag::Rational | FieldTag::Gaussian);
    match status {
        Status::Disproved if exact_input => format!("exact witness over {field}; disproof valid over C"),
        Status::Disproved => format!("witness over {field}; disproof valid over extensions of {field} only"),
        Status::CertifiedExact => format!("certified over the algebraic closure of {field}"),
        Status::CertifiedFiniteField(fs) => {
            let list: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
            if exact_input {
                format!("certified over {} only; not a proof over C", list.join(", "))
            } else {
                format!("certified over {} only", list.join(", "))
            }
        }
        Status::Unknown => "undecided".to_string(),
    }
}

/// A nonzero element of a subspace with an exactly verified rank bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankWitness<F: Field> {
    /// Coordinates in the canonical basis of the space it was drawn from.
    pub coefficients: Vec<F>,
    pub matrix: Mat<F>,
    pub rank: usize,
    pub bound: usize,
}

impl<F: Field> RankWitness<F> {
    /// Builds a witness after checking membership, nonzeroness and the bound.
    pub fn verified(space: &MatrixSubspace<F>, matrix: Mat<F>, bound: usize) -> Option<Self> {
        if matrix.is_zero() {
            return None;
        }
        let coefficients = space.coordinates(&matrix).ok()??;
        let rank = matrix.rank();
        (rank <= bound).then_some(RankWitness { coefficients, matrix, rank, bound })
    }

    /// Re-checks every invariant against `space` from scratch.
    pub fn verify(&self, space: &MatrixSubspace<F>) -> bool {
        !self.matrix.is_zero()
            && self.matrix.rank() == self.rank
            && self.rank <= self.bound
            && space.element(&self.coefficients).is_ok_and(|m| m == self.matrix)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "bound": self.bound,
            "coefficients": self.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "matrix": mat_to_json(&self.matrix),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityVerdict<F: Field> {
    pub k: usize,
    pub field: FieldTag,
    pub status: Status,
    /// For `Disproved`: a low-rank element of the pre-annihilator.
    pub witness: Option<RankWitness<F>>,
    pub evidence: Evidence,
}

impl<F: Field> TransitivityVerdict<F> {
    pub fn soundness(&self) -> String {
        soundness_label(&self.status, self.field)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "property": "k-transitive",
            "k": self.k,
            "field": self.field.to_string(),
            "status": self.status.name(),
            "fields": self.status.fields_json(),
            "soundness": self.soundness(),
            "witness": self.witness.as_ref().map(|w| w.to_json()),
            "evidence": self.evidence,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationVerdict<F: Field> {
    pub k: usize,
    pub field: FieldTag,
    pub status: Status,
    /// For `Disproved`: `n × k` matrix `(x_1 … x_k)` such that every element
    /// killing `x_1 … x_(k-1)` also kills `x_k`.
    pub witness: Option<Mat<F>>,
    pub evidence: Evidence,
}

impl<F: Field> SeparationVerdict<F> {
    pub fn soundness(&self) -> String {
        soundness_label(&self.status, self.field)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "property": "k-separating",
            "k": self.k,
            "field": self.field.to_string(),
            "status": self.status.name(),
            "fields": self.status.fields_json(),
            "soundness": self.soundness(),
            "witness": self.witness.as_ref().map(mat_to_json),
            "evidence": self.evidence,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn witness_verification() {
        let r = Mat::<Rational>::ints(&[[1, 0], [0, 1]]);
        let v = MatrixSubspace::from_generators(std::slice::from_ref(&r)).unwrap();
        assert!(RankWitness::verified(&v, r.clone(), 1).is_none());
        let w = RankWitness::verified(&v, r.clone(), 2).unwrap();
        assert!(w.verify(&v));
        assert!(RankWitness::verified(&v, Mat::zeros(2, 2, &()), 2).is_none());
        assert!(RankWitness::verified(&v, Mat::ints(&[[1, 0], [0, 0]]), 2).is_none());
    }

    #[test]
    fn labels_never_overclaim() {
        let ff = Status::CertifiedFiniteField(vec![FieldTag::Prime(5), FieldTag::Prime(7)]);
        let s = soundness_label(&ff, FieldTag::Rational);
        assert!(s.contains("GF(5), GF(7) only"));
        assert!(s.contains("not a proof over C"));
        assert!(soundness_label(&Status::Disproved, FieldTag::Prime(3)).contains("only"));
    }
}
