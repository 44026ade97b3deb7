mod strategies;

use braidloom::braid::{BraidWord, Letter};
use braidloom::invariants::{homfly, jones_from_homfly, jones_via_bracket, mfw_bound};
use proptest::prelude::*;
use strategies::word;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn homfly_is_a_conjugacy_invariant((w, c) in (2usize..=5).prop_flat_map(|n| (word(n..=n, 10), word(n..=n, 3)))) {
        let conj = BraidWord::product(w.strands(), [&c.inverse(), &w, &c]).unwrap();
        prop_assert_eq!(homfly(&conj).unwrap(), homfly(&w).unwrap());
    }

    #[test]
    fn homfly_survives_stabilisation(w in word(1..=5, 10), positive in any::<bool>()) {
        let n = w.strands();
        let mut s = w.with_strands(n + 1).unwrap();
        s.push(Letter::new(n, positive));
        prop_assert_eq!(homfly(&s).unwrap(), homfly(&w).unwrap());
    }

    #[test]
    fn mirror_and_inv(w in word(2..=5, 10)) {
        let p = homfly(&w).unwrap();
        prop_assert_eq!(homfly(&w.mirror()).unwrap(), p.mirror());
        prop_assert_eq!(jones_via_bracket(&w.inv()).unwrap(), jones_via_bracket(&w).unwrap());
    }

    #[test]
    fn jones_oracles_agree(w in word(2..=5, 12)) {
        prop_assert_eq!(jones_from_homfly(&homfly(&w).unwrap()), jones_via_bracket(&w).unwrap());
    }

    #[test]
    fn mfw_bounds_the_strand_count(w in word(1..=5, 12)) {
        prop_assert!(mfw_bound(&homfly(&w).unwrap()) <= w.strands());
    }
}
