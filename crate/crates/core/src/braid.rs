//! Braid words over the standard Artin generators, permutations and type vectors.
//!
//! Conventions: `σ_i` lets the strand at position `i` pass over the strand at
//! position `i + 1`. Words are read left to right, so the product `a·b` means
//! "first `a`, then `b`". Strand positions are 1-based throughout.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A signed Artin generator `σ_i^{±1}`, stored as a nonzero integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: usize, positive: bool) -> Self {
        assert!(index >= 1, "generator index must be positive");
        let i = index as i32;
        Letter(if positive { i } else { -i })
    }

    pub fn from_int(v: i32) -> Option<Self> {
        (v != 0).then_some(Letter(v))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    #[inline]
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    #[inline]
    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    #[inline]
    pub fn as_int(self) -> i32 {
        self.0
    }
}

/// A braid word on an explicit number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    letters: Vec<Letter>,
    strands: usize,
}

impl BraidWord {
    pub fn new(letters: Vec<Letter>, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Precondition(
                "a braid needs at least one strand".into(),
            ));
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= strands) {
            return Err(Error::IndexOutOfRange {
                index: bad.index(),
                strands,
            });
        }
        Ok(BraidWord { letters, strands })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1);
        BraidWord {
            letters: Vec::new(),
            strands,
        }
    }

    /// Builds a word from signed generator indices (`-2` is `σ_2^{-1}`).
    pub fn from_ints(ints: &[i32], strands: usize) -> Result<Self> {
        let letters = ints
            .iter()
            .map(|&v| {
                Letter::from_int(v).ok_or_else(|| Error::Parse("zero is not a generator".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(letters, strands)
    }

    /// Parses whitespace-separated signed indices; the strand count defaults to
    /// `max|index| + 1` (or 1 for the empty word).
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let ints = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad generator token '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        let inferred = ints
            .iter()
            .map(|v| v.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
            + 1;
        BraidWord::from_ints(&ints, strands.unwrap_or(inferred))
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    #[inline]
    pub fn strands(&self) -> usize {
        self.strands
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_ints(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.as_int()).collect()
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    /// Appends a letter, cancelling against the current tail.
    pub fn push_reduced(&mut self, l: Letter) {
        debug_assert!(l.index() < self.strands);
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn push(&mut self, l: Letter) {
        debug_assert!(l.index() < self.strands);
        self.letters.push(l);
    }

    /// Concatenation `self · other`.
    pub fn mul(&self, other: &BraidWord) -> Result<BraidWord> {
        check_strands(self, other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            letters,
            strands: self.strands,
        })
    }

    /// Concatenation of several words of equal strand count.
    pub fn product<'a>(
        strands: usize,
        parts: impl IntoIterator<Item = &'a BraidWord>,
    ) -> Result<BraidWord> {
        let mut out = BraidWord::identity(strands);
        for p in parts {
            if p.strands != strands {
                return Err(Error::StrandMismatch {
                    left: strands,
                    right: p.strands,
                });
            }
            out.letters.extend_from_slice(&p.letters);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
            strands: self.strands,
        }
    }

    /// Cancels adjacent pairs `σ_i^{±1} σ_i^{∓1}` until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out = BraidWord::identity(self.strands);
        for &l in &self.letters {
            out.push_reduced(l);
        }
        out
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }

    /// Rotation by π about the axis perpendicular to the projection plane:
    /// reverses the word and sends `σ_i` to `σ_{n-i}`.
    pub fn inv(&self) -> BraidWord {
        let n = self.strands as i32;
        BraidWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter(l.sign() * (n - l.index() as i32)))
                .collect(),
            strands: self.strands,
        }
    }

    /// The automorphism `σ_i ↦ σ_i^{-1}`.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().map(|l| l.inverse()).collect(),
            strands: self.strands,
        }
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.sign() as i64).sum()
    }

    /// The same word viewed on more strands (extra strands are straight).
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(self.letters.clone(), strands)
    }

    /// Induced permutation of strand positions.
    pub fn permutation(&self) -> Permutation {
        // arrangement[pos] = starting position of the strand now at pos
        let mut arrangement: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            let i = l.index() - 1;
            arrangement.swap(i, i + 1);
        }
        let mut images = vec![0; self.strands];
        for (pos, &start) in arrangement.iter().enumerate() {
            images[start] = pos;
        }
        Permutation { images }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }
}

fn check_strands(a: &BraidWord, b: &BraidWord) -> Result<()> {
    if a.strands != b.strands {
        Err(Error::StrandMismatch {
            left: a.strands,
            right: b.strands,
        })
    } else {
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.as_int())?;
            first = false;
        }
        Ok(())
    }
}

/// `A_{ij} = σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}^{-1} ⋯ σ_{j-1}^{-1}`.
pub fn expand_a(i: usize, j: usize, strands: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= strands) {
        return Err(Error::Precondition(format!(
            "A[{i},{j}] needs 1 <= i < j <= {strands}"
        )));
    }
    let mut letters = Vec::with_capacity(2 * (j - i));
    letters.extend((i + 1..j).rev().map(|k| Letter::new(k, true)));
    letters.push(Letter::new(i, true));
    letters.push(Letter::new(i, true));
    letters.extend((i + 1..j).map(|k| Letter::new(k, false)));
    Ok(BraidWord { letters, strands })
}

/// A permutation of strand positions: `images[p]` is where the strand that
/// starts at position `p` ends up (0-based internally, 1-based in display).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::Precondition("not a permutation".into()));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|v| v - 1).collect(),
        })
    }

    /// The transposition of positions `a` and `b` (1-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of the 1-based point `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p - 1] + 1
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    /// `self` followed by `other`: `x ↦ other(self(x))`. Matches word order,
    /// so `(a·b).permutation() == a.permutation().then(&b.permutation())`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Cycles as 1-based orbit lists, each starting at its smallest element,
    /// in order of smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.images[x];
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// The positive permutation braid realising this permutation: every pair
    /// of strands crosses at most once, always with a positive crossing.
    pub fn positive_lift(&self) -> BraidWord {
        let n = self.len();
        // arrangement[pos] = target position of the strand currently at pos
        let mut arrangement: Vec<usize> = self.images.clone();
        let mut letters = Vec::new();
        loop {
            let mut swapped = false;
            for pos in 0..n.saturating_sub(1) {
                if arrangement[pos] > arrangement[pos + 1] {
                    arrangement.swap(pos, pos + 1);
                    letters.push(Letter::new(pos + 1, true));
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        BraidWord {
            letters,
            strands: n.max(1),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// The type `(n_1, …, n_k)` of a woven braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeVector {
    parts: Vec<usize>,
}

impl TypeVector {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidType(format!("{parts:?}")));
        }
        Ok(TypeVector { parts })
    }

    /// The single-component type `(n)`.
    pub fn single(n: usize) -> Self {
        assert!(n >= 1);
        TypeVector { parts: vec![n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn strands(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn components(&self) -> usize {
        self.parts.len()
    }

    /// `N = {n_1, n_1 + n_2, …, n}`, ascending.
    pub fn ends(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// `N̄ = {1, …, n} \ N`, ascending.
    pub fn interior(&self) -> Vec<usize> {
        let ends = self.ends();
        (1..=self.strands()).filter(|s| !ends.contains(s)).collect()
    }

    pub fn is_end(&self, s: usize) -> bool {
        self.ends().contains(&s)
    }
}

impl FromStr for TypeVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidType(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        TypeVector::new(parts)
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// `π_{n_1…n_k} = σ_1 σ_2 ⋯ σ_{n-1}` with the generators at indices in `N` omitted.
pub fn perm_braid(t: &TypeVector) -> BraidWord {
    let n = t.strands();
    let ends = t.ends();
    let letters = (1..n)
        .filter(|i| !ends.contains(i))
        .map(|i| Letter::new(i, true))
        .collect();
    BraidWord {
        letters,
        strands: n,
    }
}
