//! Transitivity and separation verdicts, low-rank witness searches and rank
//! statistics.
//!
//! A subspace `L ⊆ Mat(m, n)` is k-transitive exactly when its
//! pre-annihilator contains no nonzero element of rank at most `k`, so most
//! of this module is about finding, or excluding, such elements.

mod check;
pub mod ff;
mod lowrank;
pub mod numeric;
pub mod pencil;
pub mod probes;
pub mod verdict;

pub use check::{
    check_k_separating, check_k_transitive, disprove_with_witness, CheckOptions, Decidable, Strategy, DEFAULT_PRIMES,
    DEFAULT_SEED,
};
pub use ff::{
    definitional_exhaustive, ff_low_rank_search, min_rank_ff_exhaustive, rank_extremes_ff, rank_one_elements_ff,
    separation_ff, LowRankSearch, RankExtremes, DEFAULT_BUDGET,
};
pub use numeric::{rank_witness_search_numeric, rationalize, rationalize_and_verify, Embed, NumericOptions};
pub use pencil::{pencil_min_rank_exact, PencilOutcome};
pub use probes::{
    definitional_transitivity_sample, find_invertible, killing_subspace, separation_failure, tuple_is_transitive,
    verify_rank_spanning, verify_separation_witness, DefinitionalOutcome,
};
pub use verdict::{soundness_label, Evidence, RankWitness, SeparationVerdict, Status, TransitivityVerdict};
