mod common;

use common::*;
use proptest::prelude::*;
use pseudostandard::{
    generate_word_prefix, is_normalized, is_periodic, normalize, periodicity_witness, smallest_period, Antimorphism,
    DirectiveBiSequence, EventuallyPeriodic, Letter,
};

fn family_member() -> impl Strategy<Value = DirectiveBiSequence> {
    let letter = prop_oneof![Just(Letter::Zero), Just(Letter::One)];
    let theta = prop_oneof![Just(Antimorphism::R), Just(Antimorphism::E)];
    (
        prop::collection::vec(letter.clone(), 0..=3),
        prop::collection::vec(letter, 1..=3),
        prop::collection::vec(theta.clone(), 0..=3),
        prop::collection::vec(theta, 1..=3),
    )
        .prop_map(|(dp, dq, tp, tq)| {
            DirectiveBiSequence::new(EventuallyPeriodic::new(dp, dq).unwrap(), EventuallyPeriodic::new(tp, tq).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn normalize_preserves_word_and_is_idempotent(lambda in family_member()) {
        let report = normalize(&lambda).unwrap();
        prop_assert!(report.cycle_found);
        prop_assert_eq!(
            generate_word_prefix(&report.output, 2048).unwrap(),
            generate_word_prefix(&lambda, 2048).unwrap()
        );
        let again = normalize(&report.output).unwrap();
        prop_assert_eq!(again.rules_applied(), 0);
        prop_assert_eq!(&again.output, &report.output);
        prop_assert!(is_normalized(&report.output, 12).unwrap());
    }

    #[test]
    fn periodicity_criterion_matches_the_word(lambda in family_member()) {
        let u = generate_word_prefix(&lambda, 10_000).unwrap();
        let p = smallest_period(&u);
        if is_periodic(&lambda) {
            prop_assert!(p <= 1024, "periodic by criterion but smallest period {}", p);
        } else {
            prop_assert!(p > 512, "aperiodic by criterion but period {}", p);
        }
    }

    #[test]
    fn witness_holds_past_n0(lambda in family_member()) {
        if let Some(w) = periodicity_witness(&lambda) {
            for n in w.n0 + 1..w.n0 + 50 {
                prop_assert_eq!(lambda.delta_at(n + 1) == w.letter, lambda.theta_at(n) == w.theta);
            }
            if w.n0 >= 1 {
                prop_assert_ne!(lambda.delta_at(w.n0 + 1) == w.letter, lambda.theta_at(w.n0) == w.theta);
            }
        }
    }
}

#[test]
fn smallest_period_matches_brute_force_on_generated_words() {
    let lambda = DirectiveBiSequence::parse("0(0)", "R(ER)").unwrap();
    let u = generate_word_prefix(&lambda, 400).unwrap();
    let brute = (1..=u.len()).find(|&p| has_period(&u, p)).unwrap();
    assert_eq!(smallest_period(&u), brute);
}
