//! Special factors and the four parameters `H`, `K`, `L`, `R` that govern
//! the shape of a word's factor complexity.
//!
//! A factor `u` of `w` is *right special* when both `ua` and `ub` occur in
//! `w`, and *left special* when both `au` and `bu` do. `R` (resp. `L`) is
//! the smallest length at which no right (resp. left) special factor exists;
//! `H` (resp. `K`) is the shortest length of a prefix (resp. suffix) of `w`
//! that occurs only once. Every word satisfies `R + K <= |w|`, with equality
//! characterizing trapezoidal words.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Error;
use crate::word::{Letter, Word};

/// All special factors of a word, grouped by side. Each list is ordered by
/// length and lexicographically within a length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecialFactors {
    pub left: Vec<Word>,
    pub right: Vec<Word>,
    /// Factors that are special on both sides.
    pub bispecial: Vec<Word>,
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

/// Bitmask of the letters adjacent to each occurrence of every length-`len`
/// factor, on the given side (bit 0 for `a`, bit 1 for `b`). A factor is
/// special on that side exactly when its mask is `0b11`.
fn extension_masks(w: &Word, len: usize, side: Side) -> HashMap<&[Letter], u8> {
    let n = w.len();
    let mut masks: HashMap<&[Letter], u8> = HashMap::new();
    for i in 0..=n - len {
        let mask = masks.entry(&w.letters()[i..i + len]).or_insert(0);
        match side {
            Side::Right => {
                if i + len < n {
                    *mask |= 1 << w[i + len].index();
                }
            }
            Side::Left => {
                if i > 0 {
                    *mask |= 1 << w[i - 1].index();
                }
            }
        }
    }
    masks
}

/// Computes a side's de Luca parameter: the smallest length with no special
/// factor, plus a witness of maximal length (`None` when not even `ε` is
/// special). Special factors are closed under shortening on the relevant
/// side, so scanning lengths upward until the first empty level is exact.
fn special_parameter(w: &Word, side: Side) -> (usize, Option<Word>) {
    let n = w.len();
    let mut witness: Option<Word> = None;
    for len in 0..=n {
        let masks = extension_masks(w, len, side);
        let longest = masks
            .iter()
            .filter(|&(_, &m)| m == 0b11)
            .map(|(factor, _)| *factor)
            .min();
        match longest {
            Some(factor) => witness = Some(Word::from_letters(factor.iter().copied())),
            None => return (len, witness),
        }
    }
    unreachable!("a factor as long as the word itself cannot be special");
}

/// All left special, right special and bispecial factors of `w`.
pub fn special_factors(w: &Word) -> SpecialFactors {
    let n = w.len();
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut bispecial = Vec::new();
    for len in 0..n {
        let left_masks = extension_masks(w, len, Side::Left);
        let right_masks = extension_masks(w, len, Side::Right);
        let mut level_left: Vec<&[Letter]> = left_masks
            .iter()
            .filter(|&(_, &m)| m == 0b11)
            .map(|(f, _)| *f)
            .collect();
        let mut level_right: Vec<&[Letter]> = right_masks
            .iter()
            .filter(|&(_, &m)| m == 0b11)
            .map(|(f, _)| *f)
            .collect();
        level_left.sort_unstable();
        level_right.sort_unstable();
        for f in &level_left {
            if level_right.contains(f) {
                bispecial.push(Word::from_letters(f.iter().copied()));
            }
        }
        left.extend(level_left.into_iter().map(|f| Word::from_letters(f.iter().copied())));
        right.extend(level_right.into_iter().map(|f| Word::from_letters(f.iter().copied())));
    }
    SpecialFactors {
        left,
        right,
        bispecial,
    }
}

/// The de Luca parameters of a non-empty word, with witnesses.
///
/// * `H` — shortest length of a prefix occurring exactly once; `h_w` is the
///   longest repeated prefix, of length `H - 1`.
/// * `K` — the same for suffixes, with witness `k_w`.
/// * `R` — smallest length with no right special factor; `r_w` is a longest
///   right special factor (length `R - 1`), absent when `R = 0`.
/// * `L` — the same on the left, with witness `l_w`.
///
/// When several longest special factors exist, the lexicographically
/// smallest is stored. Letter powers are the extreme case: `R = L = 0` and
/// `K = H = |w|`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DeLucaParameters {
    #[serde(rename = "H")]
    pub h: usize,
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "R")]
    pub r: usize,
    pub h_w: Word,
    pub k_w: Word,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_w: Option<Word>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_w: Option<Word>,
}

/// Computes `H`, `K`, `L`, `R` and their witnesses. Errors on the empty
/// word, for which the parameters are undefined.
pub fn de_luca_parameters(w: &Word) -> Result<DeLucaParameters, Error> {
    if w.is_empty() {
        return Err(Error::empty_word("de_luca_parameters"));
    }
    let h_w = w.longest_repeated_prefix().expect("word is non-empty");
    let k_w = w.longest_repeated_suffix().expect("word is non-empty");
    let (r, r_w) = special_parameter(w, Side::Right);
    let (l, l_w) = special_parameter(w, Side::Left);
    Ok(DeLucaParameters {
        h: h_w.len() + 1,
        k: k_w.len() + 1,
        l,
        r,
        h_w,
        k_w,
        l_w,
        r_w,
    })
}
