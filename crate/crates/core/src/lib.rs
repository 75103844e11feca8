//! Ternary square-free words: enumeration, Brinkhuis triples and growth-rate
//! bounds.
//!
//! The crate is organised around the objects it computes with:
//!
//! * [`words`] — letters, words over `{0,1,2}`, square detection, reversal
//!   and letter permutations;
//! * [`enumeration`] — backtracking enumeration and counting of square-free
//!   words, including the head/tail-restricted families `A1`/`A2`;
//! * [`triples`] — construction and exact verification of generalised and
//!   special Brinkhuis triples, and substitution of triples into words;
//! * [`search`] — the three-step hunt for optimal special triples
//!   (admissible words, feasible pairs/triples, maximum-weight selection),
//!   plus the exhaustive `(2,1,1)`-triple search;
//! * [`bounds`] — exact-exponent bound arithmetic for the growth rate of
//!   the ternary square-free language.

pub mod bounds;
pub mod enumeration;
pub mod search;
pub mod triples;
pub mod words;

pub use bounds::{best_bounds, lower_bound, upper_bound, BoundReport, Direction};
pub use enumeration::{
    check_subadditivity, count_square_free, count_square_free_upto, enumerate_family,
    family_stats, Family, FamilyStats,
};
pub use search::{
    build_catalog, build_hypergraph, is_admissible, optimal_triple, search_211, table_row,
    AdmissibleCatalog, FeasibleHypergraph, SearchRow,
};
pub use triples::{
    apply_substitution, composed_word_conditions, heads_tails_filter, verify_special_triple,
    verify_triple, BrinkhuisTriple, GeneratorSet, HeadTail, Signature, SquareWitness, Verdict,
    Verification,
};
pub use words::{Letter, LetterPermutation, Word};
