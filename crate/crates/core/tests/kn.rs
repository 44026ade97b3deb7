mod strategies;

use braidloom::pure::{kn_element, kn_member, kn_member_a, AWord};
use proptest::prelude::*;
use strategies::top_factor;

#[test]
fn small_members() {
    assert!(kn_member_a(&AWord::identity(4)).unwrap());
    let k = AWord::parse("A[1,3]", Some(3)).unwrap();
    assert!(kn_member_a(&kn_element(&k).unwrap()).unwrap());
    assert!(!kn_member_a(&AWord::parse("A[1,2]", Some(3)).unwrap()).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_under_product_and_inverse((a, b) in (2usize..=5).prop_flat_map(|n| (top_factor(n..=n, 3), top_factor(n..=n, 3)))) {
        let ka = kn_element(&a).unwrap();
        let kb = kn_element(&b).unwrap();
        prop_assert!(kn_member_a(&ka).unwrap());
        prop_assert!(kn_member_a(&ka.mul(&kb)).unwrap());
        prop_assert!(kn_member_a(&ka.inverse()).unwrap());
        prop_assert!(kn_member(&ka.expand()).unwrap());
    }
}
