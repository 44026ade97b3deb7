//! Random generators shared by the integration tests.
#![allow(dead_code)]

use braidloom::braid::{BraidWord, Letter};
use braidloom::pure::{ALetter, AWord};
use rand::Rng;

pub fn random_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| Letter::new(rng.gen_range(1..strands), rng.gen_bool(0.5)))
        .collect();
    BraidWord::new(letters, strands).unwrap()
}

/// A pure word found by rejection sampling, so the letters are unbiased.
pub fn random_pure_word<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    loop {
        let len = rng.gen_range(0..=max_len);
        let w = random_word(rng, strands, len);
        if w.is_pure() {
            return w;
        }
    }
}

/// A word in `P_n^n`: letters `A_{i,n}^{±1}`.
pub fn random_top_factor<R: Rng>(rng: &mut R, strands: usize, len: usize) -> AWord {
    let letters = (0..len)
        .map(|_| ALetter::new(rng.gen_range(1..strands), strands, rng.gen_bool(0.5)))
        .collect();
    AWord::new(letters, strands).unwrap()
}

/// An arbitrary pure A-word on `strands` strands.
pub fn random_a_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> AWord {
    let letters = (0..len)
        .map(|_| {
            let j = rng.gen_range(2..=strands);
            ALetter::new(rng.gen_range(1..j), j, rng.gen_bool(0.5))
        })
        .collect();
    AWord::new(letters, strands).unwrap()
}
