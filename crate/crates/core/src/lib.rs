//! Generalized pseudostandard binary words: θ-palindromic closure, prefix
//! chains, normalization of directive bi-sequences, and the φ_k morphism
//! family.

pub mod closure;
pub mod error;
pub mod lab;
pub mod morphism;
pub mod normalize;
pub mod pal_index;
pub mod sequence;
pub mod word;

pub use closure::{
    generate_chain, generate_chain_until, generate_prefixes, generate_word_prefix, infer_chain,
    infer_chain_with_limit, pseudopalindromic_prefixes, BreakReason, ChainStep, DirectiveBiSequence, Generator,
    MembershipVerdict, PrefixChain,
};
pub use error::{Error, ParseError, Result};
pub use lab::{
    classify, enumerate_morphisms, search, verify_corollary, verify_lemma_recurrences, verify_proposition, Claim,
    Classification, SearchReport, SearchSummary, Verdict, VerificationOutcome,
};
pub use morphism::{IncidenceMatrix, Morphism};
pub use normalize::{
    is_normalized, is_periodic, normalize, normalize_with_bound, periodicity_witness, NormalizationReport,
    PeriodicityWitness, PrefixRule, DEFAULT_BOUNDARY_BOUND,
};
pub use pal_index::PalSuffixIndex;
pub use sequence::{EventuallyPeriodic, Symbol};
pub use word::{
    apply_antimorphism, complement, is_theta_palindrome, longest_theta_palindromic_suffix_len,
    palindromic_prefix_table, smallest_period, theta_palindromic_closure, Antimorphism, Letter, Word,
};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
