//! Moves between webs: conjugation by `K_n` (type I) and
//! stabilisation/destabilisation (types II⁺ and II⁻).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter, TypeVector};
use crate::error::{Error, Result};
use crate::pure::{kn_member_a, ALetter, AWord};
use crate::weave::WovenBraid;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Move {
    I { kappa: AWord },
    IIPlus { positive: bool },
    IIMinus,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::I { kappa } => write!(f, "I[{kappa}]"),
            Move::IIPlus { positive: true } => f.write_str("II+[+]"),
            Move::IIPlus { positive: false } => f.write_str("II+[-]"),
            Move::IIMinus => f.write_str("II-"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub kind: Move,
    pub before: WovenBraid,
    pub after: WovenBraid,
}

fn require_single(omega: &WovenBraid) -> Result<usize> {
    let n = omega.strands();
    if omega.ty().components() != 1 {
        return Err(Error::InvalidType(format!(
            "moves act on type ({n}), got {}",
            omega.ty()
        )));
    }
    Ok(n)
}

/// `κ^{-1} ω κ` for `κ ∈ K_n`; rejects `κ ∉ K_n`.
pub fn move_i(omega: &WovenBraid, kappa: &AWord) -> Result<WovenBraid> {
    let n = require_single(omega)?;
    if kappa.strands() != n {
        return Err(Error::StrandMismatch {
            left: n,
            right: kappa.strands(),
        });
    }
    if !kn_member_a(kappa)? {
        return Err(Error::NotInKn);
    }
    move_i_unchecked(omega, kappa)
}

/// `κ^{-1} ω κ` without the `K_n` test; fails with [`Error::NotWoven`] when
/// the conjugate leaves `W_n^1`.
pub fn move_i_unchecked(omega: &WovenBraid, kappa: &AWord) -> Result<WovenBraid> {
    let n = require_single(omega)?;
    let k = kappa.expand();
    let conj = BraidWord::product(n, [&k.inverse(), &omega.word(), &k])?.free_reduce();
    WovenBraid::from_word(&conj, &TypeVector::single(n))
}

/// `ω σ_n^{±1}` on `n + 1` strands.
pub fn move_ii_plus(omega: &WovenBraid, positive: bool) -> Result<WovenBraid> {
    let n = require_single(omega)?;
    let mut w = omega.word().with_strands(n + 1)?;
    w.push(Letter::new(n, positive));
    WovenBraid::from_word(&w.free_reduce(), &TypeVector::single(n + 1))
}

/// Strips a trailing `σ_{n-1}^{±1}` from the freely reduced word when the
/// remainder is woven of type `(n-1)`.
pub fn move_ii_minus(w: &BraidWord) -> Result<WovenBraid> {
    let n = w.strands();
    let r = w.free_reduce();
    let no_tail =
        || Error::Precondition(format!("no destabilisable σ_{} tail", n.saturating_sub(1)));
    let last = r.letters().last().copied().ok_or_else(no_tail)?;
    if n < 2 || last.index() != n - 1 {
        return Err(no_tail());
    }
    let prefix = &r.letters()[..r.len() - 1];
    if prefix.iter().any(|l| l.index() == n - 1) {
        return Err(no_tail());
    }
    let shorter = BraidWord::new(prefix.to_vec(), n - 1)?;
    WovenBraid::from_word(&shorter, &TypeVector::single(n - 1)).map_err(|e| match e {
        Error::NotWoven => Error::Precondition("prefix is not woven".into()),
        e => e,
    })
}

/// Applies a move and records it. II⁻ reads its input from the tight word.
pub fn apply_move(omega: &WovenBraid, mv: &Move) -> Result<MoveRecord> {
    let after = match mv {
        Move::I { kappa } => move_i(omega, kappa)?,
        Move::IIPlus { positive } => move_ii_plus(omega, *positive)?,
        Move::IIMinus => {
            require_single(omega)?;
            move_ii_minus(&omega.tight_word())?
        }
    };
    Ok(MoveRecord {
        kind: mv.clone(),
        before: omega.clone(),
        after,
    })
}

/// `β ↦ β↑`: `A_{i,n} ↦ A_{i,n+1}`, landing on `n + 1` strands.
pub fn arrow_up(b: &AWord) -> Result<AWord> {
    let n = b.strands();
    if !b.in_factor(n) {
        return Err(Error::Precondition(format!("{b} is not in P_{n}^{n}")));
    }
    let letters = b
        .letters()
        .iter()
        .map(|l| ALetter::new(l.i, n + 1, l.positive))
        .collect();
    AWord::new(letters, n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::braids_equal;
    use crate::braid::perm_braid;
    use crate::pure::kn_element;

    fn w(ints: &[i32], n: usize) -> BraidWord {
        BraidWord::from_ints(ints, n).unwrap()
    }

    fn woven(ints: &[i32], n: usize) -> WovenBraid {
        WovenBraid::from_word(&w(ints, n), &TypeVector::single(n)).unwrap()
    }

    #[test]
    fn move_i_examples() {
        let om = woven(&[1, 2, 3, 3, -2, -2, 3], 4);
        let id = AWord::identity(4);
        assert_eq!(move_i(&om, &id).unwrap(), om);

        let k = kn_element(&AWord::parse("A[1,4]", Some(4)).unwrap()).unwrap();
        assert_eq!(k.to_string(), "A[1,4]");
        let moved = move_i(&om, &k).unwrap();
        assert!(braids_equal(
            &moved.word(),
            &BraidWord::product(4, [&k.expand().inverse(), &om.word(), &k.expand()]).unwrap()
        )
        .unwrap());

        let om3 = woven(&[1, 2, 2, -1, -1, -2], 3);
        let bad = AWord::parse("A[1,2]", Some(3)).unwrap();
        assert_eq!(move_i(&om3, &bad), Err(Error::NotInKn));
        assert_eq!(move_i_unchecked(&om3, &bad), Err(Error::NotWoven));
    }

    #[test]
    fn stabilisation_examples() {
        let unknot = woven(&[1], 2);
        let up = move_ii_plus(&unknot, true).unwrap();
        assert_eq!(up.tight_word().to_ints(), vec![1, 2]);

        let tref = woven(&[-1, -1, -1], 2);
        let up = move_ii_plus(&tref, false).unwrap();
        assert_eq!(up.ty(), &TypeVector::single(3));
        assert_eq!(up.tight_word().to_ints(), vec![-1, -1, -1, -2]);

        assert_eq!(
            move_ii_minus(&w(&[1, 2], 3))
                .unwrap()
                .tight_word()
                .to_ints(),
            vec![1]
        );
        assert_eq!(
            move_ii_minus(&w(&[-1, -1, -1, -2], 3))
                .unwrap()
                .tight_word()
                .to_ints(),
            vec![-1, -1, -1]
        );
        assert!(move_ii_minus(&w(&[-1, -1, -1], 2)).is_err());
        assert!(move_ii_minus(&w(&[2, 1, 2], 3)).is_err());
    }

    #[test]
    fn round_trip_through_records() {
        let om = woven(&[1, 2, 2, -1, -1, -2], 3);
        let r = apply_move(&om, &Move::IIPlus { positive: true }).unwrap();
        let back = apply_move(&r.after, &Move::IIMinus).unwrap();
        assert_eq!(back.after, om);
    }

    #[test]
    fn arrow_up_identities() {
        let b = AWord::parse("A[1,3] A[2,3]^-1 A[1,3]", Some(3)).unwrap();
        let up = arrow_up(&b).unwrap();
        assert_eq!(up.to_string(), "A[1,4] A[2,4]^-1 A[1,4]");
        assert!(arrow_up(&AWord::identity(3)).unwrap().is_empty());
        assert!(arrow_up(&AWord::parse("A[1,2]", Some(3)).unwrap()).is_err());

        let pi_n = perm_braid(&TypeVector::single(3)).with_strands(4).unwrap();
        let pi_n1 = perm_braid(&TypeVector::single(4));
        let s = w(&[3], 4);
        let s2 = w(&[3, 3], 4);
        let bw = b.expand().with_strands(4).unwrap();
        let lhs = BraidWord::product(4, [&pi_n, &bw, &s.inverse()]).unwrap();
        let rhs = BraidWord::product(4, [&pi_n1, &s2.inverse(), &up.expand()]).unwrap();
        assert!(braids_equal(&lhs, &rhs).unwrap());
        let lhs = BraidWord::product(4, [&pi_n, &bw, &s]).unwrap();
        let rhs = BraidWord::product(4, [&pi_n1, &s2.inverse(), &up.expand(), &s2]).unwrap();
        assert!(braids_equal(&lhs, &rhs).unwrap());
    }
}
