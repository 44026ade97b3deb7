//! The pure braid group as an iterated semidirect product of the free groups
//! `P_n^j = ⟨A_{1j}, …, A_{j-1,j}⟩`.
//!
//! Pure σ-words are rewritten into A-letters by peeling off the highest strand:
//! `p = K · E` with `K ∈ P_n^n` and `E` a pure braid on the remaining strands.
//! Iterating gives the descending comb `p = _nβ ⋯ _2β` directly; the ascending
//! comb is obtained from the descending comb of `p^{-1}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::artin::{braids_equal, FreeEndo, FreeWord};
use crate::braid::{expand_a, perm_braid, BraidWord, Letter, TypeVector};
use crate::error::{Error, Result};
use crate::limits::limits;

/// `A_{ij}^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ALetter {
    pub i: usize,
    pub j: usize,
    pub positive: bool,
}

impl ALetter {
    pub fn new(i: usize, j: usize, positive: bool) -> Self {
        ALetter { i, j, positive }
    }

    pub fn inverse(self) -> Self {
        ALetter {
            positive: !self.positive,
            ..self
        }
    }

    pub fn sign(self) -> i32 {
        if self.positive {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for ALetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "A[{},{}]", self.i, self.j)
        } else {
            write!(f, "A[{},{}]^-1", self.i, self.j)
        }
    }
}

/// A freely reduced word in the letters `A_{ij}^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AWord {
    letters: Vec<ALetter>,
    strands: usize,
}

impl AWord {
    pub fn identity(strands: usize) -> Self {
        AWord {
            letters: Vec::new(),
            strands,
        }
    }

    pub fn new(letters: Vec<ALetter>, strands: usize) -> Result<Self> {
        let mut w = AWord::identity(strands);
        for l in letters {
            if !(1 <= l.i && l.i < l.j && l.j <= strands) {
                return Err(Error::Precondition(format!(
                    "{l} invalid on {strands} strands"
                )));
            }
            w.push(l);
        }
        Ok(w)
    }

    /// Parses whitespace-separated tokens `A[i,j]` / `A[i,j]^-1`.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            letters.push(parse_a_token(tok)?);
        }
        let inferred = letters.iter().map(|l| l.j).max().unwrap_or(1);
        AWord::new(letters, strands.unwrap_or(inferred))
    }

    pub fn letters(&self) -> &[ALetter] {
        &self.letters
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: ALetter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn extend(&mut self, other: &AWord) {
        for &l in &other.letters {
            self.push(l);
        }
    }

    pub fn mul(&self, other: &AWord) -> AWord {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn inverse(&self) -> AWord {
        AWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
            strands: self.strands,
        }
    }

    /// Same letters on a larger strand count.
    pub fn with_strands(&self, strands: usize) -> Result<AWord> {
        AWord::new(self.letters.clone(), strands)
    }

    /// Whether every letter has second index `j`.
    pub fn in_factor(&self, j: usize) -> bool {
        self.letters.iter().all(|l| l.j == j)
    }

    /// σ-word obtained by substituting the defining expansion of each letter.
    pub fn expand(&self) -> BraidWord {
        let mut out = BraidWord::identity(self.strands.max(1));
        for l in &self.letters {
            let a = expand_a(l.i, l.j, self.strands).expect("letters validated on construction");
            let a = if l.positive { a } else { a.inverse() };
            for &x in a.letters() {
                out.push(x);
            }
        }
        out
    }
}

fn parse_a_token(tok: &str) -> Result<ALetter> {
    let bad = || Error::Parse(format!("bad A-letter '{tok}'"));
    let (body, positive) = match tok.strip_suffix("^-1") {
        Some(b) => (b, false),
        None => (tok.strip_suffix("^1").unwrap_or(tok), true),
    };
    let inner = body
        .strip_prefix("A[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(bad)?;
    let (i, j) = inner.split_once(',').ok_or_else(bad)?;
    let i = i.trim().parse().map_err(|_| bad())?;
    let j = j.trim().parse().map_err(|_| bad())?;
    Ok(ALetter::new(i, j, positive))
}

impl FromStr for AWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AWord::parse(s, None)
    }
}

impl fmt::Display for AWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CombOrder {
    /// `β = β_2 β_3 ⋯ β_n`
    Ascending,
    /// `β = _nβ ⋯ _3β _2β`
    Descending,
}

/// One free-factor component per index `2..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PureFactorization {
    order: CombOrder,
    strands: usize,
    /// `components[j - 2]` lies in `P_n^j`.
    components: Vec<AWord>,
}

impl PureFactorization {
    pub fn order(&self) -> CombOrder {
        self.order
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Component in `P_n^j`, `2 ≤ j ≤ n`.
    pub fn component(&self, j: usize) -> &AWord {
        &self.components[j - 2]
    }

    /// `(j, component)` pairs, ascending in `j`.
    pub fn components(&self) -> impl Iterator<Item = (usize, &AWord)> {
        self.components.iter().enumerate().map(|(k, c)| (k + 2, c))
    }

    /// Indices with a nontrivial component.
    pub fn support(&self) -> Vec<usize> {
        self.components()
            .filter(|(_, c)| !c.is_empty())
            .map(|(j, _)| j)
            .collect()
    }

    /// Product of the components in the factorization's order.
    pub fn recompose(&self) -> AWord {
        let mut out = AWord::identity(self.strands);
        match self.order {
            CombOrder::Ascending => self.components.iter().for_each(|c| out.extend(c)),
            CombOrder::Descending => self.components.iter().rev().for_each(|c| out.extend(c)),
        }
        out
    }
}

/// Splits a pure braid on `m` strands as `K · E`, with `K` a word in
/// `A_{1m}, …, A_{m-1,m}` (letters `±r`) and `E` pure on `m - 1` strands.
fn peel_top_strand(p: &BraidWord) -> Result<(FreeWord, BraidWord)> {
    let m = p.strands();
    let cap_img = limits().max_image_len;
    let cap_a = limits().max_a_word;
    // conj[r] = E A_{r,m} E^{-1}, as a word in the A_{·,m}
    let mut conj = FreeEndo::identity(m - 1);
    let mut k = FreeWord::default();
    let mut rest = BraidWord::identity(m - 1);
    let mut q = m;

    for &l in p.letters() {
        let i = l.index();
        if i + 1 < q || i > q {
            // crossing away from the top strand; with the top strand routed
            // underneath everything it retracts to a crossing on m - 1 strands
            let idx = if i > q { i - 1 } else { i };
            let sl = Letter::new(idx, l.is_positive());
            rest.push(sl);
            conj.compose_letter(sl.inverse(), cap_img)?;
        } else if i == q {
            // top strand moves up from q to q + 1
            if l.is_positive() {
                k.extend_word(conj.image(q));
            }
            q += 1;
        } else {
            // i + 1 == q: top strand moves down from q to q - 1
            if !l.is_positive() {
                k.extend_inverse(conj.image(q - 1));
            }
            q -= 1;
        }
        if k.len() > cap_a {
            return Err(Error::cap("A-word length while combing", cap_a));
        }
    }
    if q != m {
        return Err(Error::NotPure);
    }
    Ok((k, rest))
}

/// Descending comb components, `out[j - 2] ∈ P_n^j`.
fn descending_components(p: &BraidWord) -> Result<Vec<AWord>> {
    let n = p.strands();
    if !p.is_pure() {
        return Err(Error::NotPure);
    }
    let mut comps = vec![AWord::identity(n); n.saturating_sub(1)];
    let mut current = p.free_reduce();
    for m in (2..=n).rev() {
        let (k, rest) = peel_top_strand(&current)?;
        let c = &mut comps[m - 2];
        for &r in k.letters() {
            c.push(ALetter::new(r.unsigned_abs() as usize, m, r > 0));
        }
        current = rest.free_reduce();
    }
    Ok(comps)
}

/// Rewrites a pure σ-word as a word in the `A_{ij}`. The result is the
/// descending comb written out as a single word.
pub fn to_a_word(p: &BraidWord) -> Result<AWord> {
    let comps = descending_components(p)?;
    let mut out = AWord::identity(p.strands());
    for c in comps.iter().rev() {
        out.extend(c);
    }
    Ok(out)
}

/// Unique factorization of a pure braid into free-factor components.
pub fn comb(p: &BraidWord, order: CombOrder) -> Result<PureFactorization> {
    let n = p.strands();
    let components = match order {
        CombOrder::Descending => descending_components(p)?,
        CombOrder::Ascending => descending_components(&p.inverse())?
            .into_iter()
            .map(|c| c.inverse())
            .collect(),
    };
    Ok(PureFactorization {
        order,
        strands: n,
        components,
    })
}

pub fn comb_a_word(a: &AWord, order: CombOrder) -> Result<PureFactorization> {
    comb(&a.expand(), order)
}

fn check_index(s: usize, n: usize) -> Result<()> {
    if !(2..=n).contains(&s) {
        return Err(Error::Precondition(format!(
            "string index {s} not in 2..={n}"
        )));
    }
    Ok(())
}

/// The unique `_sp ∈ P_n^s` such that string `s` is free in `(_sp)^{-1} p`.
pub fn left_s_factor(p: &BraidWord, s: usize) -> Result<AWord> {
    check_index(s, p.strands())?;
    Ok(comb(p, CombOrder::Descending)?.component(s).clone())
}

/// The unique `p_s ∈ P_n^s` such that string `s` is free in `p (p_s)^{-1}`.
pub fn right_s_factor(p: &BraidWord, s: usize) -> Result<AWord> {
    check_index(s, p.strands())?;
    Ok(comb(p, CombOrder::Ascending)?.component(s).clone())
}

/// Whether `p` can be written without letters `A_{is}`.
pub fn is_free(p: &BraidWord, s: usize) -> Result<bool> {
    check_index(s, p.strands())?;
    Ok(comb(p, CombOrder::Descending)?.component(s).is_empty())
}

/// `∇(A_{1j}) = 1`, `∇(A_{ij}) = A_{i-1,j-1}` for `i ≥ 2`.
pub fn nabla(a: &AWord) -> AWord {
    let mut out = AWord::identity(a.strands());
    for l in a.letters() {
        if l.i >= 2 {
            out.push(ALetter::new(l.i - 1, l.j - 1, l.positive));
        }
    }
    out
}

/// `Φ_n = ∇ ∘ Δ` for type `(n)`: kills letters with `j = n`, keeps the rest.
pub fn phi(a: &AWord) -> AWord {
    let n = a.strands();
    let mut out = AWord::identity(n);
    for l in a.letters() {
        if l.j < n {
            out.push(*l);
        }
    }
    out
}

/// `Δ(w) = π w π^{-1}` for the permutation braid `π` of type `t`.
pub fn delta(w: &BraidWord, t: &TypeVector) -> Result<BraidWord> {
    let pi = perm_braid(t);
    Ok(pi.mul(w)?.mul(&pi.inverse())?.free_reduce())
}

/// `κ = b ∇(b) ∇²(b) ⋯ ∇^{n-2}(b)` for `b ∈ P_n^n`.
pub fn kn_element(b: &AWord) -> Result<AWord> {
    let n = b.strands();
    if !b.in_factor(n) {
        return Err(Error::Precondition(format!("{b} is not in P_{n}^{n}")));
    }
    let mut out = AWord::identity(n);
    let mut cur = b.clone();
    for _ in 0..n.saturating_sub(1) {
        out.extend(&cur);
        cur = nabla(&cur);
    }
    Ok(out)
}

/// Membership in `K_n = { κ ∈ P_n | ∇(κ) = Φ_n(κ) }`.
pub fn kn_member_a(a: &AWord) -> Result<bool> {
    braids_equal(&nabla(a).expand(), &phi(a).expand())
}

pub fn kn_member(p: &BraidWord) -> Result<bool> {
    kn_member_a(&to_a_word(p)?)
}
