//! Conjugating arbitrary braids into woven form.
//!
//! A woven braid of type `(n_1, …, n_k)` is `π_{n_1…n_k} β_{n_1} β_{n_1+n_2} ⋯ β_n`
//! with each `β_j ∈ P_n^j`. [`weave`] follows the constructive conjugation:
//! normalise the permutation, then free the strings in `N̄` one at a time by
//! multiplying the running pure conjugator `α` with left `s`-factors.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::artin::braids_equal;
use crate::braid::{perm_braid, BraidWord, Permutation, TypeVector};
use crate::error::{Error, Result};
use crate::pure::{comb, delta, AWord, CombOrder};

/// `π_type · β_{j_1} β_{j_2} ⋯` with `j_1 < j_2 < ⋯` ranging over `N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WovenBraid {
    ty: TypeVector,
    components: BTreeMap<usize, AWord>,
}

impl WovenBraid {
    /// Builds a woven braid from its components; keys must be exactly `N`
    /// (missing keys are taken as trivial) and each component must lie in its factor.
    pub fn new(ty: TypeVector, components: BTreeMap<usize, AWord>) -> Result<Self> {
        let n = ty.strands();
        let ends = ty.ends();
        let mut full = BTreeMap::new();
        for &j in &ends {
            full.insert(j, AWord::identity(n));
        }
        for (j, c) in components {
            if !ends.contains(&j) || !c.in_factor(j) || c.strands() != n {
                return Err(Error::NotWoven);
            }
            full.insert(j, c);
        }
        Ok(WovenBraid {
            ty,
            components: full,
        })
    }

    /// Type `(n)` with the single component `β ∈ P_n^n`.
    pub fn single(beta: AWord) -> Result<Self> {
        let n = beta.strands();
        WovenBraid::new(TypeVector::single(n), BTreeMap::from([(n, beta)]))
    }

    /// Recovers the permutation-times-components form of `w`, failing if `w` is not woven of type `ty`.
    pub fn from_word(w: &BraidWord, ty: &TypeVector) -> Result<Self> {
        if w.strands() != ty.strands() {
            return Err(Error::StrandMismatch {
                left: w.strands(),
                right: ty.strands(),
            });
        }
        let pi = perm_braid(ty);
        if w.permutation() != pi.permutation() {
            return Err(Error::NotWoven);
        }
        let pure = pi.inverse().mul(w)?.free_reduce();
        let c = comb(&pure, CombOrder::Ascending)?;
        if c.support().iter().any(|j| !ty.is_end(*j)) {
            return Err(Error::NotWoven);
        }
        let components = ty
            .ends()
            .into_iter()
            .filter(|&j| j >= 2)
            .map(|j| (j, c.component(j).clone()))
            .collect();
        WovenBraid::new(ty.clone(), components)
    }

    pub fn ty(&self) -> &TypeVector {
        &self.ty
    }

    pub fn strands(&self) -> usize {
        self.ty.strands()
    }

    pub fn components(&self) -> &BTreeMap<usize, AWord> {
        &self.components
    }

    pub fn component(&self, j: usize) -> Option<&AWord> {
        self.components.get(&j)
    }

    /// Product of the components in ascending order.
    pub fn pure_part(&self) -> AWord {
        let mut out = AWord::identity(self.strands());
        for c in self.components.values() {
            out.extend(c);
        }
        out
    }

    /// `π_type` followed by the expanded components (not reduced).
    pub fn word(&self) -> BraidWord {
        let mut w = perm_braid(&self.ty);
        for &l in self.pure_part().expand().letters() {
            w.push(l);
        }
        w
    }

    /// The freely reduced expansion; unique for the element when the type is `(n)`.
    pub fn tight_word(&self) -> BraidWord {
        self.word().free_reduce()
    }
}

/// Conjugates the permutation into the standard cycle form of `π_type`.
///
/// Cycles are ordered by length (descending), ties broken by smallest element.
/// The returned `τ` satisfies `τ^{-1} p τ = Π(π_type)` in word order, i.e.
/// `tau.inverse().then(p).then(&tau)`.
pub fn cycle_normalize(p: &Permutation) -> (TypeVector, Permutation) {
    let n = p.len();
    let mut cycles = p.cycles();
    cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let ty = TypeVector::new(cycles.iter().map(|c| c.len()).collect()).expect("nonempty cycles");
    let target = perm_braid(&ty).permutation();

    let mut images = vec![0; n];
    let mut base = 0;
    for c in &cycles {
        // τ(p^k(x_0)) = P^k(base + 1)
        let mut y = base + 1;
        for &x in c {
            images[x - 1] = y;
            y = target.apply(y);
        }
        base += c.len();
    }
    let tau = Permutation::from_images(&images).expect("bijection by construction");
    (ty, tau)
}

/// Output of [`weave`]: `woven = conjugator^{-1} · b · conjugator`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weaving {
    pub woven: WovenBraid,
    pub conjugator: BraidWord,
}

/// The running pure conjugator after processing string `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeaveStep {
    pub s: usize,
    pub alpha: AWord,
}

/// Everything the weaving iteration works with, exposed for inspection.
#[derive(Debug, Clone)]
pub struct WeaveState {
    pub ty: TypeVector,
    /// Lift `π_τ` of the normalising permutation.
    pub pi_tau: BraidWord,
    /// `π_type^{-1} π_τ^{-1} b π_τ`, a pure braid.
    pub beta_tilde: BraidWord,
    pub steps: Vec<WeaveStep>,
}

impl WeaveState {
    /// `α^{-1} β̃ Δ(α)`.
    pub fn twisted(&self, alpha: &AWord) -> Result<BraidWord> {
        let a = alpha.expand();
        let d = delta(&a, &self.ty)?;
        Ok(a.inverse().mul(&self.beta_tilde)?.mul(&d)?.free_reduce())
    }

    /// `F(α)`: the strings in `N̄` that are not free in `α^{-1} β̃ Δ(α)`.
    pub fn unfree(&self, alpha: &AWord) -> Result<Vec<usize>> {
        let c = comb(&self.twisted(alpha)?, CombOrder::Descending)?;
        Ok(c.support()
            .into_iter()
            .filter(|&s| !self.ty.is_end(s))
            .collect())
    }
}

fn weave_inner(b: &BraidWord) -> Result<(Weaving, WeaveState)> {
    let n = b.strands();
    let (ty, tau) = cycle_normalize(&b.permutation());
    let pi = perm_braid(&ty);
    let pi_tau = tau.positive_lift().with_strands(n)?;
    let beta_tilde =
        BraidWord::product(n, [&pi.inverse(), &pi_tau.inverse(), b, &pi_tau])?.free_reduce();
    debug_assert!(beta_tilde.is_pure());

    let mut state = WeaveState {
        ty: ty.clone(),
        pi_tau: pi_tau.clone(),
        beta_tilde,
        steps: Vec::new(),
    };
    let mut alpha = AWord::identity(n);
    for s in ty.interior().into_iter().filter(|&s| s >= 2) {
        let d = state.twisted(&alpha)?;
        let c = comb(&d, CombOrder::Descending)?;
        alpha.extend(c.component(s));
        state.steps.push(WeaveStep {
            s,
            alpha: alpha.clone(),
        });
    }

    let pure = state.twisted(&alpha)?;
    let asc = comb(&pure, CombOrder::Ascending)?;
    if asc.support().iter().any(|&j| !ty.is_end(j)) {
        return Err(Error::Precondition(
            "weaving iteration left a non-free string".into(),
        ));
    }
    let components = ty
        .ends()
        .into_iter()
        .filter(|&j| j >= 2)
        .map(|j| (j, asc.component(j).clone()))
        .collect();
    let woven = WovenBraid::new(ty.clone(), components)?;
    let conjugator = pi_tau.mul(&delta(&alpha.expand(), &ty)?)?.free_reduce();
    Ok((Weaving { woven, conjugator }, state))
}

/// Finds a woven conjugate of `b` together with the conjugating braid.
pub fn weave(b: &BraidWord) -> Result<Weaving> {
    weave_inner(b).map(|(w, _)| w)
}

/// As [`weave`], also returning the intermediate state of the iteration.
pub fn weave_traced(b: &BraidWord) -> Result<(Weaving, WeaveState)> {
    weave_inner(b)
}

/// Whether `w` is woven of type `ty`.
pub fn is_woven(w: &BraidWord, ty: &TypeVector) -> Result<bool> {
    match WovenBraid::from_word(w, ty) {
        Ok(_) => Ok(true),
        Err(Error::NotWoven) | Err(Error::StrandMismatch { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Checks the conjugacy certificate `woven = γ^{-1} b γ` exactly.
pub fn verify_weaving(b: &BraidWord, result: &Weaving) -> Result<bool> {
    let g = &result.conjugator;
    let conj = BraidWord::product(b.strands(), [&g.inverse(), b, g])?;
    braids_equal(&result.woven.word(), &conj)
}
