//! The faithful Artin action of `B_n` on the free group `F_n`, used as an
//! exact equality oracle for braids.
//!
//! `σ_i` acts by `x_i ↦ x_i x_{i+1} x_i^{-1}`, `x_{i+1} ↦ x_i`. The action of a
//! word is the composite of its letters' automorphisms, left to right, so
//! appending a letter only touches two images.

use std::fmt;

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::limits::limits;

/// A freely reduced word in `x_1, …, x_n`; `-k` is `x_k^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn generator(k: usize) -> Self {
        FreeWord(vec![k as i32])
    }

    pub fn from_letters(letters: &[i32]) -> Self {
        let mut w = FreeWord::default();
        for &l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn push(&mut self, l: i32) {
        debug_assert!(l != 0);
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn extend_word(&mut self, other: &FreeWord) {
        for &l in &other.0 {
            self.push(l);
        }
    }

    pub fn extend_inverse(&mut self, other: &FreeWord) {
        for &l in other.0.iter().rev() {
            self.push(-l);
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    /// If this word is `u x_k^{±1} u^{-1}`, returns `k`.
    pub fn conjugate_of_generator(&self) -> Option<usize> {
        let n = self.0.len();
        if n.is_multiple_of(2) {
            return None;
        }
        let mid = n / 2;
        let ok = (0..mid).all(|t| self.0[t] == -self.0[n - 1 - t]);
        ok.then(|| self.0[mid].unsigned_abs() as usize)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("x{l}")
                } else {
                    format!("x{}^-1", -l)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// An endomorphism of `F_n` given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeEndo {
    images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn identity(n: usize) -> Self {
        FreeEndo {
            images: (1..=n).map(FreeWord::generator).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Image of `x_k` (1-based).
    pub fn image(&self, k: usize) -> &FreeWord {
        &self.images[k - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| w.0.len() == 1 && w.0[0] == k as i32 + 1)
    }

    pub fn total_len(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }

    /// Replaces `self` by `self ∘ φ_letter`.
    pub(crate) fn compose_letter(&mut self, l: Letter, cap: usize) -> Result<()> {
        let i = l.index() - 1;
        let xi = std::mem::take(&mut self.images[i]);
        let xj = std::mem::take(&mut self.images[i + 1]);
        let (new_i, new_j) = if l.is_positive() {
            // x_i ↦ x_i x_{i+1} x_i^{-1}, x_{i+1} ↦ x_i
            let mut w = xi.clone();
            w.extend_word(&xj);
            w.extend_inverse(&xi);
            (w, xi)
        } else {
            // x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}
            let mut w = xj.inverse();
            w.extend_word(&xi);
            w.extend_word(&xj);
            (xj, w)
        };
        if new_i.len() > cap || new_j.len() > cap {
            return Err(Error::cap("Artin action image length", cap));
        }
        self.images[i] = new_i;
        self.images[i + 1] = new_j;
        Ok(())
    }

    /// Applies the endomorphism to a free word.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::default();
        for &l in &w.0 {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.extend_word(img);
            } else {
                out.extend_inverse(img);
            }
        }
        out
    }
}

/// The automorphism of `F_n` induced by a braid word. Functorial:
/// `artin_action(a·b) = artin_action(a) ∘ artin_action(b)`.
pub fn artin_action(w: &BraidWord) -> Result<FreeEndo> {
    let cap = limits().max_image_len;
    let mut e = FreeEndo::identity(w.strands());
    for &l in w.letters() {
        e.compose_letter(l, cap)?;
    }
    Ok(e)
}

/// Exact equality test in `B_n`.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    is_trivial(&a.mul(&b.inverse())?)
}

/// Whether the word represents the identity braid.
pub fn is_trivial(w: &BraidWord) -> Result<bool> {
    let q = w.free_reduce();
    if q.is_empty() {
        return Ok(true);
    }
    if !q.is_pure() {
        return Ok(false);
    }
    // Images of intermediate prefixes can outgrow the cap even when the
    // whole word is small; a cyclic rotation is conjugate to the word, so it
    // is trivial exactly when the word is, and may stay under the cap.
    let mut last = None;
    for k in 0..ROTATIONS {
        let at = k * q.len() / ROTATIONS;
        if k > 0 && at == (k - 1) * q.len() / ROTATIONS {
            continue;
        }
        let mut letters = q.letters()[at..].to_vec();
        letters.extend_from_slice(&q.letters()[..at]);
        let r = BraidWord::new(letters, q.strands())?.free_reduce();
        match artin_action(&r) {
            Ok(act) => return Ok(act.is_identity()),
            Err(e @ Error::ResourceCap { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::cap("Artin action image length", limits().max_image_len)))
}

/// Cyclic rotations tried by [`is_trivial`] before giving up on the cap.
const ROTATIONS: usize = 8;

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ints: &[i32], n: usize) -> BraidWord {
        BraidWord::from_ints(ints, n).unwrap()
    }

    #[test]
    fn generator_action() {
        let e = artin_action(&w(&[1], 2)).unwrap();
        assert_eq!(e.image(1).letters(), &[1, 2, -1]);
        assert_eq!(e.image(2).letters(), &[1]);
        assert!(artin_action(&w(&[1, -1], 2)).unwrap().is_identity());
        assert!(artin_action(&w(&[-1, 1], 2)).unwrap().is_identity());
    }

    #[test]
    fn equality_examples() {
        assert!(braids_equal(&w(&[2, -1, 2, -1], 3), &w(&[-1, -2, -2, 1, 1, 2], 3)).unwrap());
        assert!(braids_equal(&w(&[1, 2, 1], 3), &w(&[2, 1, 2], 3)).unwrap());
        assert!(!braids_equal(&w(&[1], 2), &w(&[-1], 2)).unwrap());
        assert!(braids_equal(&w(&[1, 3], 4), &w(&[3, 1], 4)).unwrap());
        assert!(!braids_equal(&w(&[1, 2], 3), &w(&[2, 1], 3)).unwrap());
        assert!(braids_equal(&w(&[1], 2), &w(&[1], 3)).is_err());
    }

    #[test]
    fn functorial() {
        let a = w(&[1, -2, 3, 1], 4);
        let b = w(&[-3, 2, 2], 4);
        let ea = artin_action(&a).unwrap();
        let eb = artin_action(&b).unwrap();
        let eab = artin_action(&a.mul(&b).unwrap()).unwrap();
        for k in 1..=4 {
            assert_eq!(&ea.apply(eb.image(k)), eab.image(k));
        }
    }

    #[test]
    fn pure_braids_conjugate_generators() {
        let p = crate::braid::expand_a(1, 3, 4).unwrap();
        let e = artin_action(&p).unwrap();
        for k in 1..=4 {
            assert_eq!(e.image(k).conjugate_of_generator(), Some(k));
        }
    }
}
