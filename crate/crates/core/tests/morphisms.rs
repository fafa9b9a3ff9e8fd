mod common;

use common::*;
use pseudostandard::{
    classify, enumerate_morphisms, generate_word_prefix, search, verify_corollary, verify_lemma_recurrences,
    verify_proposition, DirectiveBiSequence, Letter, Morphism, Verdict,
};

#[test]
fn phi_family_claims_hold_for_small_k() {
    for k in 1..=5 {
        let lemma = verify_lemma_recurrences(k, 3 * (k + 1) + 2).unwrap();
        assert!(lemma.pass, "{lemma:?}");
        let prop = verify_proposition(k, 100_000).unwrap();
        assert!(prop.pass, "{prop:?}");
        let cor = verify_corollary(k, 100_000).unwrap();
        assert!(cor.pass, "{cor:?}");
    }
}

#[test]
fn thue_morse_identity() {
    let tm: Morphism = "0>01,1>10".parse().unwrap();
    let lambda = DirectiveBiSequence::phi_family(1, Letter::Zero);
    assert_eq!(
        tm.fixed_point_prefix(Letter::Zero, 10_000).unwrap(),
        generate_word_prefix(&lambda, 10_000).unwrap()
    );
}

#[test]
fn phi_fixed_points_are_uniformly_recurrent() {
    for k in 1..=5 {
        let u = Morphism::phi_k(k).unwrap().fixed_point_prefix(Letter::Zero, 10_000).unwrap();
        for len in 1..=8 {
            let window = uniform_window(&u, len);
            assert!(window <= 40 * (3 * k + 1) * len, "k = {k}, len = {len}: window {window}");
        }
    }
}

#[test]
fn classification_examples() {
    for k in 1..=5 {
        let c = classify(&Morphism::phi_k(k).unwrap(), 4096).unwrap();
        assert_eq!(c.verdict, Verdict::PhiFamily { k });
    }
    let fib = classify(&"0>01,1>0".parse().unwrap(), 4096).unwrap();
    assert_eq!(fib.verdict, Verdict::SturmianCandidate);
    let fib_inferred = fib.inferred.unwrap();
    assert_eq!(fib_inferred.theta.to_string(), "RE(R)");
    let zeros = classify(&"0>00,1>11".parse().unwrap(), 4096).unwrap();
    assert_eq!(zeros.verdict, Verdict::NotPrimitive);
}

/// Every morphism reported as not pseudostandard really has a fixed point
/// no closure chain can follow.
#[test]
fn not_pseudostandard_verdicts_are_refuted_by_brute_force() {
    let report = search(3, 256, 1).unwrap();
    let mut refuted = 0;
    for c in &report.records {
        if let Verdict::NotPseudostandard { .. } = c.verdict {
            let u = c.morphism.fixed_point_prefix(c.letter.unwrap(), 256).unwrap();
            assert!(!some_chain_explains(&u), "{}", c.morphism);
            refuted += 1;
        }
    }
    assert!(refuted > 0);
}

#[test]
fn periodic_verdicts_exhibit_their_period() {
    let report = search(3, 1024, 1).unwrap();
    for c in &report.records {
        if let Verdict::PeriodicFixedPoint { period } = c.verdict {
            let u = c.morphism.fixed_point_prefix(c.letter.unwrap(), 1024).unwrap();
            assert!(has_period(&u, period));
        }
    }
}

#[test]
fn search_is_deterministic_and_parallel_safe() {
    let render = |jobs| {
        let mut out = Vec::new();
        search(3, 1024, jobs).unwrap().write_json_lines(&mut out).unwrap();
        out
    };
    let serial = render(1);
    assert_eq!(serial, render(1));
    assert_eq!(serial, render(3));
    assert_eq!(serial, render(8));
}

#[test]
fn image_length_one_is_all_filtered() {
    let report = search(1, 64, 1).unwrap();
    assert_eq!(report.summary.total, 4);
    assert!(report
        .records
        .iter()
        .all(|c| matches!(c.verdict, Verdict::NotPrimitive | Verdict::NotProlongable)));
    assert_eq!(enumerate_morphisms(4).count(), 900);
}
