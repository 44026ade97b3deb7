mod strategies;

use braidloom::artin::braids_equal;
use braidloom::pure::{comb, comb_a_word, to_a_word, CombOrder};
use proptest::prelude::*;
use strategies::a_word;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn combs_recompose_and_stay_in_their_factors(a in a_word(2..=5, 6)) {
        let p = a.expand();
        prop_assert!(p.is_pure());
        for order in [CombOrder::Ascending, CombOrder::Descending] {
            let f = comb(&p, order).unwrap();
            prop_assert!(f.components().all(|(j, c)| c.in_factor(j)));
            prop_assert!(braids_equal(&f.recompose().expand(), &p).unwrap());
            prop_assert_eq!(comb_a_word(&f.recompose(), order).unwrap(), f);
        }
    }

    #[test]
    fn a_words_round_trip(a in a_word(2..=5, 6)) {
        let back = to_a_word(&a.expand()).unwrap();
        prop_assert!(braids_equal(&back.expand(), &a.expand()).unwrap());
    }

    #[test]
    fn combing_is_independent_of_the_spelling(a in a_word(2..=4, 5)) {
        let spelled = to_a_word(&a.expand()).unwrap();
        for order in [CombOrder::Ascending, CombOrder::Descending] {
            prop_assert_eq!(comb_a_word(&a, order).unwrap(), comb_a_word(&spelled, order).unwrap());
        }
    }
}
