//! Proptest strategies shared by the property tests.
#![allow(dead_code)]

use braidloom::braid::{BraidWord, Letter};
use braidloom::codec::CodeTuple;
use braidloom::pure::{ALetter, AWord};
use proptest::collection::vec;
use proptest::prelude::*;

pub fn word(
    strands: std::ops::RangeInclusive<usize>,
    max_len: usize,
) -> impl Strategy<Value = BraidWord> {
    strands.prop_flat_map(move |n| {
        // One strand admits only the empty word.
        let len = if n > 1 { max_len } else { 0 };
        vec((1..n.max(2), any::<bool>()), 0..=len).prop_map(move |ls| {
            let letters = ls.into_iter().map(|(i, p)| Letter::new(i, p)).collect();
            BraidWord::new(letters, n).unwrap()
        })
    })
}

/// Pure braids as products of `A_{ij}^{±1}`.
pub fn a_word(
    strands: std::ops::RangeInclusive<usize>,
    max_len: usize,
) -> impl Strategy<Value = AWord> {
    strands.prop_flat_map(move |n| {
        vec(
            (2..=n, any::<prop::sample::Index>(), any::<bool>()),
            0..=max_len,
        )
        .prop_map(move |ls| {
            let letters = ls
                .into_iter()
                .map(|(j, i, p)| ALetter::new(i.index(j - 1) + 1, j, p))
                .collect();
            AWord::new(letters, n).unwrap()
        })
    })
}

/// Words in `P_n^n`.
pub fn top_factor(
    strands: std::ops::RangeInclusive<usize>,
    max_len: usize,
) -> impl Strategy<Value = AWord> {
    strands.prop_flat_map(move |n| {
        vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            let letters = ls.into_iter().map(|(i, p)| ALetter::new(i, n, p)).collect();
            AWord::new(letters, n).unwrap()
        })
    })
}

/// Arbitrary digit tuples; not all of them describe a knot.
pub fn tuple(max_len: usize) -> impl Strategy<Value = CodeTuple> {
    (any::<bool>(), vec(0u8..=2, 0..=max_len)).prop_map(|(p, cs)| CodeTuple::new(p, cs).unwrap())
}
