//! Laurent polynomials with integer coefficients.
//!
//! Every value this crate produces (bracket, Jones, HOMFLY) lies in
//! `Z[x^{±1}]` or `Z[v^{±1}, z^{±1}]`, so integer coefficients are exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

fn monomial(out: &mut String, coeff: i64, powers: &[(&str, i32)], first: bool) {
    let vars: Vec<String> = powers
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(v, e)| {
            if *e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    let mag = coeff.unsigned_abs();
    if first {
        if coeff < 0 {
            out.push('-');
        }
    } else {
        out.push_str(if coeff < 0 { " - " } else { " + " });
    }
    if vars.is_empty() {
        out.push_str(&mag.to_string());
    } else {
        if mag != 1 {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(&vars.join("*"));
    }
}

/// `Σ c_k x^k`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OneVarLaurent {
    terms: BTreeMap<i32, i64>,
}

impl OneVarLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Substitutes `x ↦ x^k` for a nonzero integer `k`.
    pub fn rescale(&self, k: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Divides every exponent by `k`, if all are multiples of it.
    pub fn try_unscale(&self, k: i32) -> Option<Self> {
        self.terms()
            .map(|(e, c)| (e % k == 0).then_some((e / k, c)))
            .collect::<Option<Vec<_>>>()
            .map(Self::from_terms)
    }

    pub fn shift(&self, by: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e + by, c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms().enumerate() {
            monomial(&mut out, c, &[(var, e)], k == 0);
        }
        out
    }
}

impl fmt::Display for OneVarLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

impl Add for &OneVarLaurent {
    type Output = OneVarLaurent;
    fn add(self, rhs: &OneVarLaurent) -> OneVarLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&OneVarLaurent> for OneVarLaurent {
    fn add_assign(&mut self, rhs: &OneVarLaurent) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl Sub for &OneVarLaurent {
    type Output = OneVarLaurent;
    fn sub(self, rhs: &OneVarLaurent) -> OneVarLaurent {
        self + &(-rhs)
    }
}

impl Neg for &OneVarLaurent {
    type Output = OneVarLaurent;
    fn neg(self) -> OneVarLaurent {
        OneVarLaurent::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }
}

impl Mul for &OneVarLaurent {
    type Output = OneVarLaurent;
    fn mul(self, rhs: &OneVarLaurent) -> OneVarLaurent {
        let mut out = OneVarLaurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// `Σ c_{a,b} v^a z^b`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoVarLaurent {
    terms: BTreeMap<(i32, i32), i64>,
}

impl TwoVarLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, v: i32, z: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(v, z, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i32, i32), i64)>) -> Self {
        let mut p = Self::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn add_term(&mut self, v: i32, z: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry((v, z)).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&(v, z));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, v: i32, z: i32) -> i64 {
        self.terms.get(&(v, z)).copied().unwrap_or(0)
    }

    /// `((v_exp, z_exp), coefficient)` in ascending `(v, z)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    /// Multiplies by `c · v^a z^b`.
    pub fn scale(&self, c: i64, a: i32, b: i32) -> Self {
        Self::from_terms(self.terms().map(|((x, y), k)| ((x + a, y + b), k * c)))
    }

    /// Lowest and highest power of `v`.
    pub fn v_range(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|k| k.0);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), v| (lo.min(v), hi.max(v))))
    }

    /// `P(v, z) ↦ P(v^{-1}, -z)`, the value on the mirror image.
    pub fn mirror(&self) -> Self {
        Self::from_terms(
            self.terms()
                .map(|((a, b), c)| ((-a, b), if b % 2 == 0 { c } else { -c })),
        )
    }

    /// Substitutes `v = x^p`, `z = x^q − x^{-q}`; `None` if negative powers
    /// of `z` do not cancel.
    pub fn specialize(&self, p: i32, q: i32) -> Option<OneVarLaurent> {
        let z = OneVarLaurent::from_terms([(q, 1), (-q, -1)]);
        let min_z = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        let mut num = OneVarLaurent::zero();
        for ((a, b), c) in self.terms() {
            num += &(&OneVarLaurent::monomial(c, a * p) * &z.pow((b - min_z) as u32));
        }
        if min_z >= 0 {
            Some(&num * &z.pow(min_z as u32))
        } else {
            divide_exact(&num, &z.pow((-min_z) as u32))
        }
    }

    pub fn to_string_in(&self, v: &str, z: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, ((a, b), c)) in self.terms().enumerate() {
            monomial(&mut out, c, &[(v, a), (z, b)], k == 0);
        }
        out
    }
}

/// Exact division in `Z[x^{±1}]`, `None` when `den` does not divide `num`.
pub fn divide_exact(num: &OneVarLaurent, den: &OneVarLaurent) -> Option<OneVarLaurent> {
    let (dlo, dhi) = (den.min_degree()?, den.max_degree()?);
    let lead = den.coeff(dhi);
    let mut rem = num.clone();
    let mut q = OneVarLaurent::zero();
    while let Some(hi) = rem.max_degree() {
        let lo = rem.min_degree()?;
        if hi - lo < dhi - dlo {
            return None;
        }
        let c = rem.coeff(hi);
        if c % lead != 0 {
            return None;
        }
        let term = OneVarLaurent::monomial(c / lead, hi - dhi);
        rem = &rem - &(&term * den);
        q += &term;
    }
    Some(q)
}

impl fmt::Display for TwoVarLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("v", "z"))
    }
}

impl Add for &TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn add(self, rhs: &TwoVarLaurent) -> TwoVarLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&TwoVarLaurent> for TwoVarLaurent {
    fn add_assign(&mut self, rhs: &TwoVarLaurent) {
        for ((a, b), c) in rhs.terms() {
            self.add_term(a, b, c);
        }
    }
}

impl Neg for &TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn neg(self) -> TwoVarLaurent {
        self.scale(-1, 0, 0)
    }
}

impl Sub for &TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn sub(self, rhs: &TwoVarLaurent) -> TwoVarLaurent {
        self + &(-rhs)
    }
}

impl Mul for &TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn mul(self, rhs: &TwoVarLaurent) -> TwoVarLaurent {
        let mut out = TwoVarLaurent::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in rhs.terms() {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_var_arithmetic() {
        let x = OneVarLaurent::from_terms([(1, 1), (-1, 1)]);
        let sq = &x * &x;
        assert_eq!(sq, OneVarLaurent::from_terms([(2, 1), (0, 2), (-2, 1)]));
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.to_string(), "t^-2 + 2 + t^2");
        assert_eq!(
            OneVarLaurent::from_terms([(-1, -3), (2, 1)]).to_string(),
            "-3*t^-1 + t^2"
        );
        assert_eq!(divide_exact(&sq, &x), Some(x.clone()));
        assert_eq!(divide_exact(&x, &OneVarLaurent::from_terms([(0, 2)])), None);
    }

    #[test]
    fn two_var_display_and_mirror() {
        let p = TwoVarLaurent::from_terms([((2, 0), 2), ((4, 0), -1), ((2, 2), 1)]);
        assert_eq!(p.to_string(), "2*v^2 + v^2*z^2 - v^4");
        let m = p.mirror();
        assert_eq!(m.to_string(), "-v^-4 + 2*v^-2 + v^-2*z^2");
        assert_eq!(m.mirror(), p);
        assert_eq!(p.v_range(), Some((2, 4)));
    }

    #[test]
    fn specialisation_handles_negative_z() {
        // (v^-1 - v) / z at v = x^2, z = x - x^-1 is -(x + x^-1)
        let delta = TwoVarLaurent::from_terms([((-1, -1), 1), ((1, -1), -1)]);
        assert_eq!(
            delta.specialize(2, 1).unwrap(),
            OneVarLaurent::from_terms([(1, -1), (-1, -1)])
        );
    }
}
