//! The embedded table of minimal webs for prime knots through nine
//! crossings, its verification against the invariant oracles, and
//! exhaustive web enumeration for minimality checks.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::artin::braids_equal;
use crate::braid::BraidWord;
use crate::codec::{
    code_inv, decode_int, decode_tuple, encode_int, encode_tuple, is_alternating_tight,
    is_canonical, symmetry_class, CodeTuple, Symmetry, WebCode,
};
use crate::error::{Error, Result};
use crate::invariants::{
    closure_components, homfly, jones_from_homfly, jones_via_bracket, mfw_bound,
};
use crate::limits::limits;
use crate::poly::TwoVarLaurent;

const TABLE_TEXT: &str = include_str!("../data/table1.txt");
pub const TABLE_SHA256: &str = "8027b3ec001db0f062b974885299c554476c2325e8bcffcf80b7e0f5ba39605b";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Superscript {
    None,
    /// symmetric web
    S,
    /// antisymmetric web
    A,
    /// non-invertible knot
    N,
    /// antisymmetric web of a non-invertible knot
    AN,
}

impl Superscript {
    fn suffix(self) -> &'static str {
        match self {
            Superscript::None => "",
            Superscript::S => "^s",
            Superscript::A => "^a",
            Superscript::N => "^n",
            Superscript::AN => "^an",
        }
    }
}

/// Knot symmetry column: r (reversible only), f (fully symmetric),
/// i (amphicheiral, not invertible), n (no symmetry).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KnotSymmetry {
    R,
    F,
    I,
    N,
}

impl KnotSymmetry {
    pub fn amphicheiral(self) -> bool {
        matches!(self, KnotSymmetry::F | KnotSymmetry::I)
    }
}

impl fmt::Display for KnotSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KnotSymmetry::R => "r",
            KnotSymmetry::F => "f",
            KnotSymmetry::I => "i",
            KnotSymmetry::N => "n",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCode {
    pub value: i64,
    /// Printed as `±j`.
    pub both_signs: bool,
    pub superscript: Superscript,
    /// Printed in italics: the tight word alternates.
    pub italic: bool,
}

impl TableCode {
    /// The listed integers, `j` and `-j` for a `±` entry.
    pub fn codes(&self) -> Vec<WebCode> {
        if self.both_signs {
            vec![WebCode(self.value), WebCode(-self.value)]
        } else {
            vec![WebCode(self.value)]
        }
    }

    /// Webs represented: a plain integer stands for `ω` and `inv(ω)`.
    pub fn webs(&self) -> usize {
        let per = if self.superscript == Superscript::None {
            2
        } else {
            1
        };
        per * self.codes().len()
    }
}

impl fmt::Display for TableCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.both_signs {
            f.write_str("+-")?;
        }
        write!(f, "{}{}", self.value, self.superscript.suffix())?;
        if self.italic {
            f.write_str("*")?;
        }
        Ok(())
    }
}

impl FromStr for TableCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Integrity(format!("bad table code {s:?}"));
        let mut rest = s.trim();
        let both_signs = rest.starts_with("+-");
        if both_signs {
            rest = &rest[2..];
        }
        let italic = rest.ends_with('*');
        rest = rest.trim_end_matches('*');
        let (num, sup) = match rest.split_once('^') {
            Some((n, sup)) => (n, sup),
            None => (rest, ""),
        };
        let superscript = match sup {
            "" => Superscript::None,
            "s" => Superscript::S,
            "a" => Superscript::A,
            "n" => Superscript::N,
            "an" => Superscript::AN,
            _ => return Err(bad()),
        };
        let value = num.parse::<i64>().map_err(|_| bad())?;
        Ok(TableCode {
            value,
            both_signs,
            superscript,
            italic,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRow {
    pub label: String,
    pub codes: Vec<TableCode>,
    /// Braid index.
    pub b: usize,
    /// Tight word length.
    pub l: usize,
    pub n_webs: usize,
    pub sym: KnotSymmetry,
}

impl KnotRow {
    pub fn all_codes(&self) -> Vec<WebCode> {
        self.codes.iter().flat_map(TableCode::codes).collect()
    }

    pub fn webs_from_codes(&self) -> usize {
        self.codes.iter().map(TableCode::webs).sum()
    }
}

fn parse_row(line: &str) -> Result<KnotRow> {
    let bad = || Error::Integrity(format!("bad table row {line:?}"));
    let cols: Vec<&str> = line.split('|').map(str::trim).collect();
    if cols.len() != 6 {
        return Err(bad());
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let codes = cols[1]
        .split(',')
        .map(str::parse)
        .collect::<Result<Vec<TableCode>>>()?;
    let sym = match cols[5] {
        "r" => KnotSymmetry::R,
        "f" => KnotSymmetry::F,
        "i" => KnotSymmetry::I,
        "n" => KnotSymmetry::N,
        _ => return Err(bad()),
    };
    Ok(KnotRow {
        label: cols[0].to_string(),
        codes,
        b: num(cols[2])?,
        l: num(cols[3])?,
        n_webs: num(cols[4])?,
        sym,
    })
}

/// Parses the table text format (comments start with `#`).
pub fn parse_table(text: &str) -> Result<Vec<KnotRow>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_row)
        .collect()
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// The embedded table, after checking its digest.
pub fn load_table() -> Result<Vec<KnotRow>> {
    let digest = sha256_hex(TABLE_TEXT.as_bytes());
    if digest != TABLE_SHA256 {
        return Err(Error::Integrity(format!(
            "table digest {digest} does not match"
        )));
    }
    let rows = parse_table(TABLE_TEXT)?;
    if rows.len() != 84 {
        return Err(Error::Integrity(format!(
            "expected 84 rows, found {}",
            rows.len()
        )));
    }
    Ok(rows)
}

pub fn find_row<'a>(rows: &'a [KnotRow], label: &str) -> Option<&'a KnotRow> {
    rows.iter().find(|r| r.label == label)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub code: i64,
    pub word: Option<String>,
    pub error: Option<String>,
    pub length_ok: bool,
    pub strands_ok: bool,
    pub knot_ok: bool,
    pub italic_ok: bool,
    pub symmetry: Option<Symmetry>,
    pub symmetry_ok: bool,
    /// Code of `inv(ω)`.
    pub inv_code: Option<i64>,
    /// `|j| ≤ |code(inv ω)|` where the integer stands for two webs.
    pub listing_ok: bool,
    pub oracle_ok: bool,
    pub homfly: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowReport {
    pub label: String,
    pub entries: Vec<EntryReport>,
    pub decode_length: bool,
    pub strand_count: bool,
    pub n_webs: bool,
    pub homfly_equal: bool,
    pub mirror_pairs: bool,
    pub symmetry_flags: bool,
    pub italics: bool,
    pub oracle_agreement: bool,
    pub mfw: Option<usize>,
    pub mfw_le_b: bool,
    /// Reported, not required.
    pub mfw_sharp: bool,
    /// Reported, not required.
    pub listing_convention: bool,
}

impl RowReport {
    /// All required checks hold.
    pub fn passed(&self) -> bool {
        self.decode_length
            && self.strand_count
            && self.n_webs
            && self.homfly_equal
            && self.mirror_pairs
            && self.symmetry_flags
            && self.italics
            && self.oracle_agreement
            && self.mfw_le_b
    }

    pub fn failed_checks(&self) -> Vec<&'static str> {
        [
            (self.decode_length, "decode-length"),
            (self.strand_count, "strand-count"),
            (self.n_webs, "n-webs"),
            (self.homfly_equal, "homfly-equal"),
            (self.mirror_pairs, "mirror-pairs"),
            (self.symmetry_flags, "symmetry-flags"),
            (self.italics, "italics"),
            (self.oracle_agreement, "oracle-agreement"),
            (self.mfw_le_b, "mfw-bound"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

fn expected_symmetry(s: Superscript) -> Symmetry {
    match s {
        Superscript::S => Symmetry::Symmetric,
        Superscript::A | Superscript::AN => Symmetry::Antisymmetric,
        Superscript::None | Superscript::N => Symmetry::None,
    }
}

struct Entry {
    report: EntryReport,
    word: Option<BraidWord>,
    poly: Option<TwoVarLaurent>,
}

fn check_entry(row: &KnotRow, tc: &TableCode, code: WebCode) -> Entry {
    let mut rep = EntryReport {
        code: code.0,
        word: None,
        error: None,
        length_ok: false,
        strands_ok: false,
        knot_ok: false,
        italic_ok: false,
        symmetry: None,
        symmetry_ok: false,
        inv_code: None,
        listing_ok: false,
        oracle_ok: false,
        homfly: None,
    };
    let w = match decode_int(code) {
        Ok(w) => w,
        Err(e) => {
            rep.error = Some(e.to_string());
            return Entry {
                report: rep,
                word: None,
                poly: None,
            };
        }
    };
    rep.word = Some(w.to_string());
    rep.length_ok = w.len() == row.l;
    rep.strands_ok = w.strands() == row.b;
    rep.knot_ok = closure_components(&w) == 1;
    rep.italic_ok = is_alternating_tight(&w) == tc.italic;

    let mut errors = Vec::new();
    match symmetry_class(&w) {
        Ok(s) => {
            rep.symmetry = Some(s);
            rep.symmetry_ok = s == expected_symmetry(tc.superscript);
        }
        Err(e) => errors.push(e.to_string()),
    }
    match code_inv(code) {
        Ok(ic) => {
            rep.inv_code = Some(ic.0);
            rep.listing_ok = tc.superscript != Superscript::None || code.0.abs() <= ic.0.abs();
        }
        Err(e) => errors.push(e.to_string()),
    }
    let poly = match homfly(&w) {
        Ok(p) => {
            rep.homfly = Some(p.to_string());
            match jones_via_bracket(&w) {
                Ok(j) => rep.oracle_ok = jones_from_homfly(&p) == j,
                Err(e) => errors.push(e.to_string()),
            }
            Some(p)
        }
        Err(e) => {
            errors.push(e.to_string());
            None
        }
    };
    if !errors.is_empty() {
        rep.error = Some(errors.join("; "));
    }
    Entry {
        report: rep,
        word: Some(w),
        poly,
    }
}

/// Runs every per-row check.
pub fn verify_row(row: &KnotRow) -> RowReport {
    let mut entries: Vec<(&TableCode, Entry)> = Vec::new();
    for tc in &row.codes {
        for code in tc.codes() {
            entries.push((tc, check_entry(row, tc, code)));
        }
    }
    let all = |f: &dyn Fn(&EntryReport) -> bool| entries.iter().all(|(_, e)| f(&e.report));

    let polys: Vec<Option<&TwoVarLaurent>> = entries.iter().map(|(_, e)| e.poly.as_ref()).collect();
    let homfly_equal = polys.iter().all(Option::is_some) && polys.windows(2).all(|p| p[0] == p[1]);

    let mut mirror_pairs = true;
    let has_pm = row.codes.iter().any(|c| c.both_signs);
    if row.sym == KnotSymmetry::F && !has_pm {
        mirror_pairs = false;
    }
    if has_pm && !row.sym.amphicheiral() {
        mirror_pairs = false;
    }
    for tc in row.codes.iter().filter(|c| c.both_signs) {
        let find = |v: i64| {
            entries
                .iter()
                .find(|(_, e)| e.report.code == v)
                .map(|(_, e)| e)
        };
        match (find(tc.value), find(-tc.value)) {
            (Some(a), Some(b)) => {
                let words = match (&a.word, &b.word) {
                    (Some(x), Some(y)) => braids_equal(&x.mirror(), y).unwrap_or(false),
                    _ => false,
                };
                let polys = match (&a.poly, &b.poly) {
                    (Some(p), Some(q)) => &p.mirror() == q,
                    _ => false,
                };
                mirror_pairs &= words && polys;
            }
            _ => mirror_pairs = false,
        }
    }

    let mfw = polys.first().copied().flatten().map(mfw_bound);
    RowReport {
        label: row.label.clone(),
        decode_length: all(&|e| e.length_ok),
        strand_count: all(&|e| e.strands_ok && e.knot_ok),
        n_webs: row.webs_from_codes() == row.n_webs,
        homfly_equal,
        mirror_pairs,
        symmetry_flags: all(&|e| e.symmetry_ok),
        italics: all(&|e| e.italic_ok),
        oracle_agreement: all(&|e| e.oracle_ok),
        mfw,
        mfw_le_b: mfw.is_some_and(|m| m <= row.b),
        mfw_sharp: mfw == Some(row.b),
        listing_convention: all(&|e| e.listing_ok),
        entries: entries.into_iter().map(|(_, e)| e.report).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Averages {
    /// Σ n / rows.
    pub webs_per_knot: f64,
    /// Σ l·n / Σ n: each web weighted once.
    pub length_per_web: f64,
    /// Σ l / rows: each knot weighted once.
    pub length_per_row: f64,
}

pub fn averages(rows: &[KnotRow]) -> Averages {
    let k = rows.len().max(1) as f64;
    let webs: usize = rows.iter().map(|r| r.n_webs).sum();
    let weighted: usize = rows.iter().map(|r| r.n_webs * r.l).sum();
    let lengths: usize = rows.iter().map(|r| r.l).sum();
    Averages {
        webs_per_knot: webs as f64 / k,
        length_per_web: weighted as f64 / webs.max(1) as f64,
        length_per_row: lengths as f64 / k,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub rows: Vec<RowReport>,
    pub averages: Averages,
    /// Knots with a symmetric web listed.
    pub symmetric_knots: usize,
    /// Amphicheiral knots, and how many of them list an antisymmetric web.
    pub amphicheiral_knots: usize,
    pub amphicheiral_with_antisymmetric: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(RowReport::passed)
    }

    pub fn mfw_strict_rows(&self) -> Vec<&str> {
        self.rows
            .iter()
            .filter(|r| !r.mfw_sharp)
            .map(|r| r.label.as_str())
            .collect()
    }
}

/// Verifies the given rows in parallel; output order follows the input.
pub fn verify_table(rows: &[KnotRow]) -> VerifyReport {
    let reports: Vec<RowReport> = rows.par_iter().map(verify_row).collect();
    let has = |r: &KnotRow, s: &[Superscript]| r.codes.iter().any(|c| s.contains(&c.superscript));
    let amph: Vec<&KnotRow> = rows.iter().filter(|r| r.sym.amphicheiral()).collect();
    VerifyReport {
        averages: averages(rows),
        symmetric_knots: rows.iter().filter(|r| has(r, &[Superscript::S])).count(),
        amphicheiral_knots: amph.len(),
        amphicheiral_with_antisymmetric: amph
            .iter()
            .filter(|r| has(r, &[Superscript::A, Superscript::AN]))
            .count(),
        rows: reports,
    }
}

/// Walk state while extending a tuple digit by digit.
#[derive(Clone, Copy)]
struct Walk {
    index: i64,
    dir: i64,
    max: i64,
}

impl Walk {
    fn step(self, c: u8) -> Walk {
        let mut w = self;
        if c == 2 {
            w.dir = -w.dir;
        } else {
            w.index += w.dir;
        }
        w.max = w.max.max(w.index);
        w
    }

    /// Main strand ends on the top position.
    fn closes(self) -> bool {
        self.dir == 1 && self.index == self.max
    }
}

fn extend(
    positive: bool,
    cs: &mut Vec<u8>,
    walk: Walk,
    max_len: usize,
    strands: &RangeInclusive<usize>,
    out: &mut Vec<CodeTuple>,
) {
    if walk.closes() && strands.contains(&(walk.max as usize + 1)) {
        out.push(CodeTuple {
            positive,
            cs: cs.clone(),
        });
    }
    if cs.len() + 1 >= max_len {
        return;
    }
    for c in 0..=2u8 {
        let next = walk.step(c);
        if next.index < 1 || next.max as usize + 1 > *strands.end() {
            continue;
        }
        cs.push(c);
        extend(positive, cs, next, max_len, strands, out);
        cs.pop();
    }
}

/// Every valid tuple with word length `≤ max_len` whose strand count lies in
/// `strands`, sorted by length, then sign, then digits.
pub fn enumerate_tuples(max_len: usize, strands: RangeInclusive<usize>) -> Result<Vec<CodeTuple>> {
    let cap = limits().max_enum_len;
    if max_len > cap {
        return Err(Error::cap("enumeration length", cap));
    }
    if max_len == 0 {
        return Ok(Vec::new());
    }
    let start = Walk {
        index: 1,
        dir: 1,
        max: 1,
    };
    // Split work on the first few digits.
    let depth = (max_len - 1).min(4);
    let mut prefixes: Vec<(bool, Vec<u8>, Walk)> =
        vec![(true, vec![], start), (false, vec![], start)];
    let mut shallow = Vec::new();
    for _ in 0..depth {
        let mut next = Vec::new();
        for (pos, cs, w) in prefixes {
            if w.closes() && strands.contains(&(w.max as usize + 1)) {
                shallow.push(CodeTuple {
                    positive: pos,
                    cs: cs.clone(),
                });
            }
            for c in 0..=2u8 {
                let s = w.step(c);
                if s.index < 1 || s.max as usize + 1 > *strands.end() {
                    continue;
                }
                let mut cs2 = cs.clone();
                cs2.push(c);
                next.push((pos, cs2, s));
            }
        }
        prefixes = next;
    }
    let mut out: Vec<CodeTuple> = prefixes
        .into_par_iter()
        .flat_map_iter(|(pos, mut cs, w)| {
            let mut found = Vec::new();
            extend(pos, &mut cs, w, max_len, &strands, &mut found);
            found
        })
        .collect();
    out.extend(shallow);
    out.sort_by(|a, b| (a.cs.len(), !a.positive, &a.cs).cmp(&(b.cs.len(), !b.positive, &b.cs)));
    Ok(out)
}

/// Tight words of all webs with length `≤ max_len` on a strand count in `strands`.
pub fn enumerate_webs(
    max_len: usize,
    strands: RangeInclusive<usize>,
) -> Result<Vec<(CodeTuple, BraidWord)>> {
    enumerate_tuples(max_len, strands)?
        .into_iter()
        .map(|t| decode_tuple(&t).map(|w| (t, w)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub b: usize,
    pub l: usize,
    /// Webs on at most `b` strands, shorter than `l`, with the target HOMFLY.
    pub shorter: Vec<String>,
    /// Codes of canonical webs on exactly `b` strands of length `l` with the target HOMFLY.
    pub matches: Vec<i64>,
}

impl MinimalityReport {
    pub fn minimal(&self) -> bool {
        self.shorter.is_empty() && !self.matches.is_empty()
    }
}

/// Searches all webs on at most `b` strands up to length `l` for the target HOMFLY.
pub fn minimality_check(target: &TwoVarLaurent, b: usize, l: usize) -> Result<MinimalityReport> {
    let webs = enumerate_webs(l, 1..=b)?;
    let hits: Vec<(CodeTuple, BraidWord)> = webs
        .into_par_iter()
        .map(|(t, w)| homfly(&w).map(|p| (p == *target).then_some((t, w))))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut shorter = Vec::new();
    let mut matches = Vec::new();
    for (t, w) in hits {
        if w.len() < l {
            shorter.push(w.to_string());
        } else if w.strands() == b && is_canonical(&t) {
            matches.push(encode_int(&t)?.0);
        }
    }
    matches.sort_unstable();
    Ok(MinimalityReport {
        b,
        l,
        shorter,
        matches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowMinimality {
    pub label: String,
    pub report: MinimalityReport,
    /// Listed codes closed under `inv`.
    pub expected: Vec<i64>,
    pub reproduces: bool,
}

/// Rows whose minimality search stays small: at most three strands and
/// length at most ten.
pub fn minimality_feasible(row: &KnotRow) -> bool {
    row.b <= 3 && row.l <= 10
}

/// Minimality search for a row, compared with the listed codes and their
/// `inv` images (HOMFLY does not see orientation).
pub fn row_minimality(row: &KnotRow) -> Result<RowMinimality> {
    let first = *row
        .all_codes()
        .first()
        .ok_or_else(|| Error::Integrity(format!("row {} has no codes", row.label)))?;
    let target = homfly(&decode_int(first)?)?;
    let report = minimality_check(&target, row.b, row.l)?;
    let mut expected = Vec::new();
    for c in row.all_codes() {
        expected.push(c.0);
        expected.push(code_inv(c)?.0);
    }
    expected.sort_unstable();
    expected.dedup();
    let reproduces = report.shorter.is_empty() && report.matches == expected;
    Ok(RowMinimality {
        label: row.label.clone(),
        report,
        expected,
        reproduces,
    })
}

/// All webs a row stands for, as codes: plain integers also stand for
/// `inv(ω)`.
pub fn row_web_codes(row: &KnotRow) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for tc in &row.codes {
        for c in tc.codes() {
            out.push(c.0);
            if tc.superscript == Superscript::None {
                out.push(code_inv(c)?.0);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Whether `code` is listed in the row, directly or through `inv`.
pub fn listed_in_row(row: &KnotRow, code: WebCode) -> Result<bool> {
    let inv = code_inv(code)?;
    Ok(row.all_codes().iter().any(|&c| c == code || c == inv))
}

/// Code of a tight web word.
pub fn code_of_word(w: &BraidWord) -> Result<WebCode> {
    encode_int(&encode_tuple(w)?)
}

/// Counts tuples per word length, as a compact regression fingerprint.
pub fn tuple_counts(max_len: usize) -> Result<BTreeMap<usize, usize>> {
    let mut m = BTreeMap::new();
    for t in enumerate_tuples(max_len, 1..=max_len + 1)? {
        *m.entry(t.word_len()).or_insert(0) += 1;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_loads() {
        let rows = load_table().unwrap();
        assert_eq!(rows.len(), 84);
        let r = find_row(&rows, "3_1").unwrap();
        assert_eq!(r.codes.len(), 1);
        assert_eq!(r.codes[0].to_string(), "-5^s*");
        assert_eq!((r.b, r.l, r.n_webs, r.sym), (2, 3, 1, KnotSymmetry::R));
        let r = find_row(&rows, "9_25").unwrap();
        assert_eq!((r.codes.len(), r.b, r.l, r.n_webs), (5, 5, 14, 10));
        let r = find_row(&rows, "8_17").unwrap();
        let shown: Vec<String> = r.codes.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, ["1275^an", "-2715^n", "-3772^n", "12083^an"]);
        assert_eq!(r.sym, KnotSymmetry::I);
    }

    #[test]
    fn digest_detects_edits() {
        assert_ne!(sha256_hex(b"3_1 | -5 | 2 | 3 | 1 | r"), TABLE_SHA256);
        assert_eq!(sha256_hex(TABLE_TEXT.as_bytes()), TABLE_SHA256);
    }

    #[test]
    fn small_rows_verify() {
        let rows = load_table().unwrap();
        for label in ["3_1", "4_1", "6_2"] {
            let rep = verify_row(find_row(&rows, label).unwrap());
            assert!(rep.passed(), "{label}: {:?}", rep.failed_checks());
        }
    }

    #[test]
    fn enumeration_small_cases() {
        let one = enumerate_webs(1, 1..=10).unwrap();
        assert_eq!(one.len(), 2);
        assert_eq!(one[0].1.to_ints(), vec![1]);
        let three = enumerate_webs(3, 2..=2).unwrap();
        let words: Vec<Vec<i32>> = three.iter().map(|(_, w)| w.to_ints()).collect();
        assert!(words.contains(&vec![-1, -1, -1]));
        assert!(words.contains(&vec![1, 1, 1]));
    }

    #[test]
    fn trefoil_is_minimal() {
        let target = homfly(&decode_int(WebCode(-5)).unwrap()).unwrap();
        let rep = minimality_check(&target, 2, 3).unwrap();
        assert!(rep.shorter.is_empty());
        assert_eq!(rep.matches, vec![-5]);
    }
}
