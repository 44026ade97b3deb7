mod strategies;

use braidloom::codec::{
    code_inv, decode_int, decode_tuple, encode_int, encode_tuple, inflate, is_canonical,
    is_tight_woven, tuple_inv, tuple_mirror, WebCode,
};
use braidloom::tables::enumerate_tuples;
use proptest::prelude::*;
use strategies::tuple;

#[test]
fn small_codes() {
    assert_eq!(decode_int(WebCode(-5)).unwrap().to_ints(), vec![-1, -1, -1]);
    assert_eq!(decode_int(WebCode(15)).unwrap().strands(), 3);
    assert!(decode_int(WebCode(0)).is_err());
    assert!(decode_int(WebCode(1)).is_err());
    assert!(decode_int(WebCode(-1)).is_err());
    assert_eq!("-1362201".parse::<WebCode>().unwrap(), WebCode(-1362201));
}

#[test]
fn enumeration_is_exact_up_to_length_eight() {
    let tuples = enumerate_tuples(8, 1..=9).unwrap();
    for t in &tuples {
        let w = decode_tuple(t).unwrap();
        assert!(is_tight_woven(&w));
        assert_eq!(&encode_tuple(&w).unwrap(), t);
    }
    let mut sorted = tuples.clone();
    sorted.dedup();
    assert_eq!(sorted.len(), tuples.len());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tuples_round_trip(t in tuple(12)) {
        if let Ok(w) = decode_tuple(&t) {
            prop_assert!(is_tight_woven(&w));
            prop_assert_eq!(encode_tuple(&w).unwrap(), t.clone());
            if is_canonical(&t) {
                prop_assert_eq!(decode_int(encode_int(&t).unwrap()).unwrap(), w);
            }
        }
    }

    #[test]
    fn symmetries_commute_with_decoding(t in tuple(12)) {
        if let Ok(w) = decode_tuple(&t) {
            prop_assert_eq!(decode_tuple(&tuple_mirror(&t)).unwrap(), w.mirror());
            prop_assert_eq!(decode_tuple(&tuple_inv(&t)).unwrap(), w.inv());
        }
    }

    #[test]
    fn code_symmetries(m in 2i64..2_000_000, negative in any::<bool>()) {
        let j = WebCode(if negative { -m } else { m });
        if let Ok(t) = inflate(j) {
            prop_assert!(is_canonical(&t));
            prop_assert_eq!(encode_int(&t).unwrap(), j);
            let i = code_inv(j).unwrap();
            prop_assert_eq!(code_inv(i).unwrap(), j);
            prop_assert_eq!(code_inv(j.mirror()).unwrap(), i.mirror());
        }
    }
}
