mod strategies;

use braidloom::artin::braids_equal;
use braidloom::braid::BraidWord;
use proptest::prelude::*;
use strategies::word;

#[test]
fn braid_relations() {
    let a = BraidWord::from_ints(&[1, 2, 1], 3).unwrap();
    let b = BraidWord::from_ints(&[2, 1, 2], 3).unwrap();
    assert!(braids_equal(&a, &b).unwrap());
    let far = BraidWord::from_ints(&[1, 3], 4).unwrap();
    assert!(braids_equal(&far, &BraidWord::from_ints(&[3, 1], 4).unwrap()).unwrap());
    let adj = BraidWord::from_ints(&[1, 2], 3).unwrap();
    assert!(!braids_equal(&adj, &BraidWord::from_ints(&[2, 1], 3).unwrap()).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn free_reduction_keeps_the_braid(w in word(2..=6, 20)) {
        let r = w.free_reduce();
        prop_assert!(r.is_freely_reduced());
        prop_assert!(braids_equal(&r, &w).unwrap());
    }

    #[test]
    fn inverse_cancels(w in word(2..=6, 16)) {
        let p = w.mul(&w.inverse()).unwrap();
        prop_assert!(braids_equal(&p, &BraidWord::identity(w.strands())).unwrap());
        prop_assert!(p.free_reduce().is_empty());
    }

    #[test]
    fn inv_is_an_involutive_antihomomorphism((a, b) in (2usize..=5).prop_flat_map(|n| (word(n..=n, 10), word(n..=n, 10)))) {
        prop_assert_eq!(a.inv().inv(), a.clone());
        let lhs = a.mul(&b).unwrap().inv();
        let rhs = b.inv().mul(&a.inv()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn permutation_is_a_homomorphism((a, b) in (2usize..=6).prop_flat_map(|n| (word(n..=n, 10), word(n..=n, 10)))) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.permutation(), a.permutation().then(&b.permutation()));
    }

    #[test]
    fn mirror_negates_writhe(w in word(2..=6, 16)) {
        prop_assert_eq!(w.mirror().writhe(), -w.writhe());
        prop_assert_eq!(w.mirror().mirror(), w);
    }
}
