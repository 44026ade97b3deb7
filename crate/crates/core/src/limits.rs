//! Process-wide resource caps.
//!
//! Every cap fails loudly with [`Error::ResourceCap`](crate::Error::ResourceCap)
//! when exceeded; nothing is silently truncated.

use std::sync::RwLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum length of a single free-group image in the Artin action.
    pub max_image_len: usize,
    /// Maximum length of an A-word produced while combing.
    pub max_a_word: usize,
    /// Maximum crossing count for the bracket state sum.
    pub max_bracket_crossings: usize,
    /// Maximum strand count for the Hecke-algebra HOMFLY computation.
    pub max_homfly_strands: usize,
    /// Maximum word length for the Hecke-algebra HOMFLY computation.
    pub max_homfly_len: usize,
    /// Maximum tight length accepted by the web enumerator.
    pub max_enum_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_image_len: 1_000_000,
            max_a_word: 100_000,
            max_bracket_crossings: 24,
            max_homfly_strands: 7,
            max_homfly_len: 30,
            max_enum_len: 16,
        }
    }
}

static LIMITS: RwLock<Option<Limits>> = RwLock::new(None);

pub fn limits() -> Limits {
    LIMITS
        .read()
        .map(|g| g.unwrap_or_default())
        .unwrap_or_default()
}

pub fn set_limits(l: Limits) {
    if let Ok(mut g) = LIMITS.write() {
        *g = Some(l);
    }
}
