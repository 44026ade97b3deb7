//! Tight words of `W_n^1` and their compact encodings.
//!
//! A tight word follows a single *main* strand from position 1 to position
//! `n`, so it is fixed by its first sign and one ternary digit per adjacent
//! pair of letters (the [`CodeTuple`]). Dropping the leading and trailing
//! zero digits and reading the rest in a mixed radix gives the signed
//! integer [`WebCode`] used in knot tables.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::artin::braids_equal;
use crate::braid::{BraidWord, Letter, TypeVector};
use crate::error::{Error, Result};
use crate::weave::WovenBraid;

/// `(e_1; c_1, …, c_{l-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeTuple {
    pub positive: bool,
    pub cs: Vec<u8>,
}

impl CodeTuple {
    pub fn new(positive: bool, cs: Vec<u8>) -> Result<Self> {
        if let Some(c) = cs.iter().find(|&&c| c > 2) {
            return Err(Error::InvalidCode(format!("digit {c} outside 0..=2")));
        }
        Ok(CodeTuple { positive, cs })
    }

    pub fn lead_sign(&self) -> i32 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    /// Length of the encoded word.
    pub fn word_len(&self) -> usize {
        self.cs.len() + 1
    }

    /// The digits with leading and trailing zeros removed.
    pub fn stripped(&self) -> &[u8] {
        let start = self
            .cs
            .iter()
            .position(|&c| c != 0)
            .unwrap_or(self.cs.len());
        let end = self
            .cs
            .iter()
            .rposition(|&c| c != 0)
            .map_or(start, |e| e + 1);
        &self.cs[start..end]
    }
}

impl fmt::Display for CodeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.cs.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "({}; {})",
            if self.positive { "+1" } else { "-1" },
            digits.join(",")
        )
    }
}

/// Signed integer form of a stripped tuple. `0` is reserved and never decodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WebCode(pub i64);

impl WebCode {
    pub fn value(self) -> i64 {
        self.0
    }

    pub fn mirror(self) -> WebCode {
        WebCode(-self.0)
    }
}

impl fmt::Display for WebCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for WebCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .parse::<i64>()
            .map(WebCode)
            .map_err(|_| Error::Parse(format!("not an integer code: {s:?}")))
    }
}

/// Letters `(index, sign)` produced by the decoding recursion, started at
/// index `start`. Also returns the final direction of the main strand.
fn walk(positive: bool, cs: &[u8], start: i64) -> (Vec<(i64, i32)>, i32) {
    let mut d: i64 = 1;
    let mut i = start;
    let mut e = if positive { 1 } else { -1 };
    let mut out = Vec::with_capacity(cs.len() + 1);
    out.push((i, e));
    for &c in cs {
        if c == 2 {
            d = -d;
        } else {
            i += d;
        }
        if c == 1 {
            e = -e;
        }
        out.push((i, e));
    }
    (out, d as i32)
}

fn word_from_walk(letters: &[(i64, i32)]) -> Result<BraidWord> {
    let min = letters.iter().map(|l| l.0).min().unwrap_or(1);
    if min < 1 {
        return Err(Error::InvalidCode(format!("index {min} below 1")));
    }
    let max = letters.iter().map(|l| l.0).max().unwrap_or(1) as usize;
    let ls = letters
        .iter()
        .map(|&(i, e)| Letter::new(i as usize, e > 0))
        .collect();
    BraidWord::new(ls, max + 1)
}

fn is_full_cycle(w: &BraidWord) -> bool {
    w.permutation().cycle_count() == 1
}

/// Expands a woven word `π_n β` of type `(n)` into its tight word.
pub fn tighten(w: &BraidWord) -> Result<BraidWord> {
    Ok(WovenBraid::from_word(w, &TypeVector::single(w.strands()))?.tight_word())
}

/// Whether `w` is the tight word of a woven braid of type `(n)`: every
/// letter moves the main strand, nothing cancels, and the permutation is an
/// `n`-cycle.
pub fn is_tight_woven(w: &BraidWord) -> bool {
    encode_tuple(w).is_ok()
}

fn digits_of(w: &BraidWord) -> Result<CodeTuple> {
    let ls = w.letters();
    let first = ls
        .first()
        .ok_or_else(|| Error::InvalidCode("empty word has no tuple".into()))?;
    let mut cs = Vec::with_capacity(ls.len().saturating_sub(1));
    for pair in ls.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let c = if a.index() == b.index() {
            if a.sign() != b.sign() {
                return Err(Error::InvalidCode(format!(
                    "cancelling pair {a} {b}",
                    a = a.as_int(),
                    b = b.as_int()
                )));
            }
            2
        } else if a.index().abs_diff(b.index()) > 1 {
            return Err(Error::InvalidCode(format!(
                "letters {} and {} cannot both involve the main strand",
                a.as_int(),
                b.as_int()
            )));
        } else if a.sign() == b.sign() {
            0
        } else {
            1
        };
        cs.push(c);
    }
    Ok(CodeTuple {
        positive: first.is_positive(),
        cs,
    })
}

/// `(e_1; c_1, …, c_{l-1})` of a tight word of `W_n^1`.
pub fn encode_tuple(w: &BraidWord) -> Result<CodeTuple> {
    let t = digits_of(w)?;
    let (walked, _) = walk(t.positive, &t.cs, 1);
    let same = walked.len() == w.len()
        && walked
            .iter()
            .zip(w.letters())
            .all(|(&(i, e), l)| i == l.index() as i64 && e == l.sign());
    if !same || w.max_index() + 1 != w.strands() || !is_full_cycle(w) {
        return Err(Error::InvalidCode(format!(
            "{w} is not a tight word of a woven braid"
        )));
    }
    Ok(t)
}

/// Inverts [`encode_tuple`]; fails unless the tuple describes a tight word of `W_n^1`.
pub fn decode_tuple(t: &CodeTuple) -> Result<BraidWord> {
    let (walked, _) = walk(t.positive, &t.cs, 1);
    let w = word_from_walk(&walked)?;
    if !is_full_cycle(&w) {
        return Err(Error::InvalidCode(format!("{t} does not close to a knot")));
    }
    Ok(w)
}

/// `e_1 · ((c_u − 1) + 2 c_{u+1} + 6 c_{u+2} + ⋯)` on the stripped digits.
pub fn encode_int(t: &CodeTuple) -> Result<WebCode> {
    let s = t.stripped();
    let Some((&first, rest)) = s.split_first() else {
        return Ok(WebCode(0));
    };
    let overflow = || Error::InvalidCode("code does not fit in 64 bits".into());
    let mut acc: i64 = 0;
    for &c in rest.iter().rev() {
        acc = acc
            .checked_mul(3)
            .and_then(|a| a.checked_add(c as i64))
            .ok_or_else(overflow)?;
    }
    let m = acc
        .checked_mul(2)
        .and_then(|a| a.checked_add(first as i64 - 1))
        .ok_or_else(overflow)?;
    Ok(WebCode(if t.positive { m } else { -m }))
}

/// Stripped digits `(c_u, …, c_v)` of a nonzero code.
pub fn code_digits(j: WebCode) -> Result<Vec<u8>> {
    if j.0 == 0 {
        return Err(Error::InvalidCode("0 is reserved".into()));
    }
    let m = j.0.unsigned_abs();
    let mut digits = vec![(m % 2) as u8 + 1];
    let mut rest = m / 2;
    while rest > 0 {
        digits.push((rest % 3) as u8);
        rest /= 3;
    }
    Ok(digits)
}

/// The canonical full tuple for a code: fewest leading zeros keeping every
/// index at least 1, then the trailing zeros that carry the main strand to
/// the top position.
pub fn inflate(j: WebCode) -> Result<CodeTuple> {
    let run = code_digits(j)?;
    let positive = j.0 > 0;
    let (walked, d_end) = walk(positive, &run, 1);
    let min = walked.iter().map(|l| l.0).min().unwrap_or(1);
    let lead = (1 - min).max(0) as usize;
    if d_end < 0 {
        return Err(Error::InvalidCode(format!(
            "{j}: main strand finishes moving down"
        )));
    }
    let last = walked.last().map_or(1, |l| l.0) + lead as i64;
    let max = walked.iter().map(|l| l.0).max().unwrap_or(1) + lead as i64;
    let trail = (max - last) as usize;
    let mut cs = vec![0; lead];
    cs.extend_from_slice(&run);
    cs.extend(std::iter::repeat_n(0, trail));
    let t = CodeTuple { positive, cs };
    decode_tuple(&t).map_err(|_| Error::InvalidCode(format!("{j} does not decode to a knot")))?;
    Ok(t)
}

/// Tight word of the web with the given code.
pub fn decode_int(j: WebCode) -> Result<BraidWord> {
    decode_tuple(&inflate(j)?)
}

/// Whether `t` is the inflation its own code decodes to.
pub fn is_canonical(t: &CodeTuple) -> bool {
    match encode_int(t) {
        Ok(j) if j.0 != 0 => inflate(j).is_ok_and(|u| &u == t),
        _ => false,
    }
}

pub fn tuple_mirror(t: &CodeTuple) -> CodeTuple {
    CodeTuple {
        positive: !t.positive,
        cs: t.cs.clone(),
    }
}

pub fn tuple_inv(t: &CodeTuple) -> CodeTuple {
    let odd = t.cs.iter().map(|&c| c as u32).sum::<u32>() % 2 == 1;
    CodeTuple {
        positive: t.positive ^ odd,
        cs: t.cs.iter().rev().copied().collect(),
    }
}

/// Code of `inv(ω)` where `ω` has code `j`.
pub fn code_inv(j: WebCode) -> Result<WebCode> {
    encode_int(&tuple_inv(&inflate(j)?))
}

/// Closure diagram is alternating: signs follow `ε (−1)^i` for some fixed `ε`.
pub fn is_alternating_tight(w: &BraidWord) -> bool {
    let parity = |l: &Letter| {
        let odd = l.index() % 2 == 1;
        l.is_positive() ^ odd
    };
    let mut it = w.letters().iter().map(parity);
    match it.next() {
        None => true,
        Some(first) => it.all(|p| p == first),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symmetry {
    /// `inv(ω) = ω`.
    Symmetric,
    /// `inv(ω) = mirr(ω)`.
    Antisymmetric,
    None,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::Symmetric => "symmetric",
            Symmetry::Antisymmetric => "antisymmetric",
            Symmetry::None => "none",
        })
    }
}

/// Compares `inv(ω)` with `ω` and `mirr(ω)` in the braid group.
pub fn symmetry_class(w: &BraidWord) -> Result<Symmetry> {
    let i = w.inv();
    if braids_equal(&i, w)? {
        Ok(Symmetry::Symmetric)
    } else if braids_equal(&i, &w.mirror())? {
        Ok(Symmetry::Antisymmetric)
    } else {
        Ok(Symmetry::None)
    }
}
