//! Link invariants of braid closures.
//!
//! Two independent routes are implemented so they can check each other:
//! the HOMFLY polynomial through the Hecke algebra with its Markov trace, and
//! the Jones polynomial through the Kauffman bracket state sum.
//!
//! Conventions: `σ_i` is a positive crossing, HOMFLY satisfies
//! `v^{-1} P(L₊) − v P(L₋) = z P(L₀)` with `P(unknot) = 1`, and Jones values
//! are stored in `s = t^{1/2}` so links with an even number of components
//! need no fractional exponents. `V(t) = P(v = t, z = t^{1/2} − t^{-1/2})`.

use std::cell::RefCell;
use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::limits::limits;
use crate::poly::{OneVarLaurent, TwoVarLaurent};

pub fn closure_components(w: &BraidWord) -> usize {
    w.permutation().cycle_count()
}

pub fn writhe(w: &BraidWord) -> i64 {
    w.writhe()
}

type HeckeElement = HashMap<Vec<u8>, TwoVarLaurent>;

fn z_times(p: &TwoVarLaurent) -> TwoVarLaurent {
    p.scale(1, 0, 1)
}

/// Right multiplication by `h_i^{±1}` (0-based `i`) in the standard basis
/// `T_w`, with `h² = z h + 1`.
fn mul_generator(x: &HeckeElement, i: usize, positive: bool) -> HeckeElement {
    let mut out: HeckeElement = HashMap::with_capacity(x.len() * 2);
    let mut put = |k: Vec<u8>, c: TwoVarLaurent| {
        let slot = out.entry(k).or_default();
        *slot += &c;
    };
    for (arr, c) in x {
        let up = arr[i] < arr[i + 1];
        let mut swapped = arr.clone();
        swapped.swap(i, i + 1);
        match (positive, up) {
            (true, true) | (false, false) => put(swapped, c.clone()),
            (true, false) => {
                put(arr.clone(), z_times(c));
                put(swapped, c.clone());
            }
            (false, true) => {
                put(arr.clone(), -&z_times(c));
                put(swapped, c.clone());
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

thread_local! {
    static TRACE_MEMO: RefCell<HashMap<Vec<u8>, TwoVarLaurent>> = RefCell::new(HashMap::new());
}

/// `(v^{-1} − v) / z`, the value of a split unknot.
fn loop_value() -> TwoVarLaurent {
    TwoVarLaurent::from_terms([((-1, -1), 1), ((1, -1), -1)])
}

/// Markov trace of `T_arr`, normalised by `Tr(1) = 1` on one strand,
/// `Tr(x) = δ Tr(x)` when a strand is added and `Tr(x T_{n-1}) = v^{-1} Tr(x)`.
fn trace_basis(arr: &[u8]) -> TwoVarLaurent {
    if arr.len() <= 1 {
        return TwoVarLaurent::one();
    }
    if let Some(hit) = TRACE_MEMO.with(|m| m.borrow().get(arr).cloned()) {
        return hit;
    }
    let n = arr.len();
    let top = (n - 1) as u8;
    let k = arr
        .iter()
        .position(|&a| a == top)
        .expect("arrangement of 0..n");
    let value = if k == n - 1 {
        &loop_value() * &trace_basis(&arr[..n - 1])
    } else {
        // T_arr = T_{arr'} T_{n-2} ⋯ T_k with the top label of arr' last;
        // cycle T_{n-2} to the front and apply the Markov property.
        let mut moved: Vec<u8> = arr.iter().copied().filter(|&a| a != top).collect();
        moved.push(top);
        let mut x: HeckeElement = HashMap::from([(moved, TwoVarLaurent::one())]);
        for i in (k..n.saturating_sub(2)).rev() {
            x = mul_generator(&x, i, true);
        }
        let mut acc = TwoVarLaurent::zero();
        for (a, c) in &x {
            acc += &(c * &trace_basis(&a[..n - 1]));
        }
        acc.scale(1, -1, 0)
    };
    TRACE_MEMO.with(|m| m.borrow_mut().insert(arr.to_vec(), value.clone()));
    value
}

/// HOMFLY polynomial of the closure.
pub fn homfly(w: &BraidWord) -> Result<TwoVarLaurent> {
    let lim = limits();
    let n = w.strands();
    if n > lim.max_homfly_strands {
        return Err(Error::cap("HOMFLY strand count", lim.max_homfly_strands));
    }
    let r = w.free_reduce();
    if r.len() > lim.max_homfly_len {
        return Err(Error::cap("HOMFLY word length", lim.max_homfly_len));
    }
    let identity: Vec<u8> = (0..n as u8).collect();
    let mut x: HeckeElement = HashMap::from([(identity, TwoVarLaurent::one())]);
    for l in r.letters() {
        x = mul_generator(&x, l.index() - 1, l.is_positive());
    }
    let mut acc = TwoVarLaurent::zero();
    for (a, c) in &x {
        acc += &(c * &trace_basis(a));
    }
    Ok(acc.scale(1, r.writhe() as i32, 0))
}

/// Kauffman bracket of the closed braid diagram, in powers of `A`.
pub fn kauffman_bracket(w: &BraidWord) -> Result<OneVarLaurent> {
    let cap = limits().max_bracket_crossings;
    let c = w.len();
    if c > cap {
        return Err(Error::cap("bracket crossing count", cap));
    }
    let n = w.strands();
    let idx: Vec<usize> = w.letters().iter().map(|l| l.index() - 1).collect();
    let pos: Vec<bool> = w.letters().iter().map(|l| l.is_positive()).collect();

    // seg(p, level) for level in 0..c; level c wraps to 0 through the closure.
    let seg = |p: usize, level: usize| p * c.max(1) + if level == c { 0 } else { level };
    let count_loops = |state: u64| -> (i32, usize) {
        let mut parent: Vec<usize> = (0..n * c.max(1)).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut comps = n * c.max(1);
        let mut union = |parent: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        };
        let mut ab = 0i32;
        for t in 0..c {
            let i = idx[t];
            let a_smoothing = state >> t & 1 == 0;
            ab += if a_smoothing { 1 } else { -1 };
            // σ_i^{+1}: A joins each strand to itself; σ_i^{-1}: A turns back.
            let vertical = a_smoothing == pos[t];
            for p in 0..n {
                if p != i && p != i + 1 {
                    union(&mut parent, seg(p, t), seg(p, t + 1));
                }
            }
            if vertical {
                union(&mut parent, seg(i, t), seg(i, t + 1));
                union(&mut parent, seg(i + 1, t), seg(i + 1, t + 1));
            } else {
                union(&mut parent, seg(i, t), seg(i + 1, t));
                union(&mut parent, seg(i, t + 1), seg(i + 1, t + 1));
            }
        }
        (ab, comps)
    };

    if c == 0 {
        return Ok(loop_power(n - 1));
    }
    let states = 1u64 << c;
    let histogram: HashMap<(i32, usize), i64> = (0..states)
        .into_par_iter()
        .fold(HashMap::new, |mut h, s| {
            *h.entry(count_loops(s)).or_insert(0) += 1;
            h
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let mut out = OneVarLaurent::zero();
    for ((ab, loops), count) in histogram {
        let term = &OneVarLaurent::monomial(count, ab) * &loop_power(loops - 1);
        out += &term;
    }
    Ok(out)
}

/// `(−A² − A^{-2})^k`.
fn loop_power(k: usize) -> OneVarLaurent {
    OneVarLaurent::from_terms([(2, -1), (-2, -1)]).pow(k as u32)
}

/// Jones polynomial in `s = t^{1/2}` from the bracket:
/// `(−A³)^{−w} ⟨D⟩` at `A = s^{-1/2}`.
pub fn jones_via_bracket(w: &BraidWord) -> Result<OneVarLaurent> {
    let br = kauffman_bracket(w)?;
    let wr = w.writhe() as i32;
    let sign = if wr % 2 == 0 { 1 } else { -1 };
    let f = &br * &OneVarLaurent::monomial(sign, -3 * wr);
    let halved = f
        .try_unscale(2)
        .expect("bracket exponents have the parity of the writhe");
    Ok(halved.rescale(-1))
}

/// Jones polynomial in `s = t^{1/2}` by specialising HOMFLY.
pub fn jones_from_homfly(p: &TwoVarLaurent) -> OneVarLaurent {
    p.specialize(2, 1)
        .expect("HOMFLY values specialise to Jones")
}

/// Text form of a Jones value in `t` when exponents allow, else in `s = t^{1/2}`.
pub fn format_jones(j: &OneVarLaurent) -> String {
    match j.try_unscale(2) {
        Some(t) => t.to_string_in("t"),
        None => j.to_string_in("s"),
    }
}

/// Lower bound for the braid index: `(v-spread)/2 + 1`.
pub fn mfw_bound(p: &TwoVarLaurent) -> usize {
    match p.v_range() {
        Some((lo, hi)) => ((hi - lo) / 2 + 1) as usize,
        None => 0,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub components: usize,
    pub writhe: i64,
    pub jones: String,
    pub homfly: String,
    pub mfw_bound: usize,
}

/// Components, writhe, Jones (bracket route), HOMFLY and MFW bound.
pub fn invariant_report(w: &BraidWord) -> Result<InvariantReport> {
    let p = homfly(w)?;
    let j = jones_via_bracket(w)?;
    Ok(InvariantReport {
        components: closure_components(w),
        writhe: writhe(w),
        jones: format_jones(&j),
        homfly: p.to_string(),
        mfw_bound: mfw_bound(&p),
    })
}
