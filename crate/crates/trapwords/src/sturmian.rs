//! Balance, minimal pathological pairs and central words.
//!
//! A binary word is *balanced* when any two factors of the same length have
//! `a`-counts within one of each other; the finite Sturmian words are
//! exactly the balanced ones. An unbalanced word admits a minimal-length
//! pair of factors violating balance, and that pair always has the shape
//! `x·u·x` / `y·u·y` for a single *central* word `u` — the central root.

use serde::Serialize;

use crate::error::Error;
use crate::word::{Letter, Word};

/// Is `w` balanced? Decided per factor length via the spread between the
/// minimal and maximal `a`-count of a sliding window; balance fails exactly
/// when some length has spread at least two.
pub fn is_balanced(w: &Word) -> bool {
    spread_violation_length(w).is_none()
}

/// Minimal and maximal `a`-count over all factors of length `len`.
fn a_count_min_max(w: &Word, len: usize) -> (usize, usize) {
    let mut count = w.letters()[..len]
        .iter()
        .filter(|&&l| l == Letter::A)
        .count();
    let (mut min, mut max) = (count, count);
    for i in len..w.len() {
        count += usize::from(w[i] == Letter::A);
        count -= usize::from(w[i - len] == Letter::A);
        min = min.min(count);
        max = max.max(count);
    }
    (min, max)
}

/// The smallest factor length at which balance fails, if any. Length-1
/// factors can differ by at most one `a`, so the scan starts at 2.
fn spread_violation_length(w: &Word) -> Option<usize> {
    (2..=w.len()).find(|&len| {
        let (min, max) = a_count_min_max(w, len);
        max - min >= 2
    })
}

/// First-occurring factors of length `len` attaining the maximal and the
/// minimal `a`-count. At the minimal violating length these are unique as
/// words, so any window attaining the extreme spells the same factor.
fn extremal_factors(w: &Word, len: usize) -> (Word, Word) {
    let a_count = |win: &[Letter]| win.iter().filter(|&&l| l == Letter::A).count();
    let mut richest: &[Letter] = &w.letters()[..len];
    let mut poorest: &[Letter] = richest;
    for win in w.letters().windows(len) {
        if a_count(win) > a_count(richest) {
            richest = win;
        }
        if a_count(win) < a_count(poorest) {
            poorest = win;
        }
    }
    (
        Word::from_letters(richest.iter().copied()),
        Word::from_letters(poorest.iter().copied()),
    )
}

/// A minimal-length witness that a word is unbalanced.
///
/// `f = x·u·x` and `g = y·u·y` are equal-length factors whose `a`-counts
/// differ by exactly two, minimal among all balance violations; the interior
/// `u` is the same central word for every minimal pair (the *central root*).
/// `f` is whichever of the two occurs first in `w`; the stored positions are
/// the earliest occurrences of each, and occurrences of `f` and `g` never
/// overlap.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PathologicalDecomposition {
    pub f: Word,
    pub g: Word,
    pub u: Word,
    pub x: Letter,
    pub y: Letter,
    pub f_position: usize,
    pub g_position: usize,
}

/// The minimal pathological pair of `w`, or `None` when `w` is balanced.
pub fn minimal_pathological_pair(w: &Word) -> Option<PathologicalDecomposition> {
    let len = spread_violation_length(w)?;
    let (rich, poor) = extremal_factors(w, len);
    debug_assert_eq!(rich.count(Letter::A), poor.count(Letter::A) + 2);
    debug_assert_eq!((rich[0], rich[len - 1]), (Letter::A, Letter::A));
    debug_assert_eq!((poor[0], poor[len - 1]), (Letter::B, Letter::B));
    let u = rich.factor(1..len - 1);
    debug_assert_eq!(u, poor.factor(1..len - 1));
    let rich_pos = w.occurrences(&rich).positions[0];
    let poor_pos = w.occurrences(&poor).positions[0];
    let (f, g, x, y, f_position, g_position) = if rich_pos < poor_pos {
        (rich, poor, Letter::A, Letter::B, rich_pos, poor_pos)
    } else {
        (poor, rich, Letter::B, Letter::A, poor_pos, rich_pos)
    };
    debug_assert!(g_position >= f_position + len, "pair occurrences overlap");
    Some(PathologicalDecomposition {
        f,
        g,
        u,
        x,
        y,
        f_position,
        g_position,
    })
}

/// The central root of an unbalanced word: the interior shared by every
/// minimal pathological pair. Errors when `w` is balanced.
pub fn central_root(w: &Word) -> Result<Word, Error> {
    match minimal_pathological_pair(w) {
        Some(pair) => Ok(pair.u),
        None => Err(Error::Precondition {
            op: "central_root",
            message: format!("\"{w}\" is balanced, so it has no pathological pair"),
        }),
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Does `p` satisfy `w[i] = w[i + p]` wherever both sides exist? Values
/// `p >= |w|` hold vacuously.
fn has_period(w: &Word, p: usize) -> bool {
    (p..w.len()).all(|i| w[i] == w[i - p])
}

/// Is `w` central: does it have coprime periods `p`, `q` with
/// `|w| = p + q - 2`? Periods beyond `|w|` count vacuously, which matters
/// only for letter powers (`p = 1`, `q = |w| + 1`) and the empty word
/// (`p = q = 1`). There are φ(n + 2) central words of each length `n`.
pub fn is_central(w: &Word) -> bool {
    let n = w.len();
    (1..=n / 2 + 1).any(|p| {
        let q = n + 2 - p;
        gcd(p, q) == 1 && has_period(w, p) && has_period(w, q)
    })
}

/// Independent characterization kept as a cross-check: `w` is central iff
/// it is a palindrome and both `a·w·a` and `b·w·b` are balanced.
pub fn is_central_via_palindrome_extension(w: &Word) -> bool {
    w.is_palindrome()
        && Letter::ALPHABET.iter().all(|&x| {
            let extended = Word::from_letters(
                std::iter::once(x)
                    .chain(w.iter().copied())
                    .chain(std::iter::once(x)),
            );
            is_balanced(&extended)
        })
}

/// Structural form of a central word: a letter power (with `ε` as the
/// zeroth power of `a`), or the cross form `w = u1·x·y·u2 = u2·y·x·u1` with
/// `x != y` and `u1`, `u2` central.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CentralDecomposition {
    LetterPower { letter: Letter, exponent: usize },
    Cross { u1: Word, u2: Word, x: Letter, y: Letter },
}

/// Decomposes a central word into its structural form, scanning split
/// points left to right and returning the first match (deterministic; a
/// central word can satisfy the cross equations at more than one split).
/// Errors on non-central input.
pub fn central_decomposition(w: &Word) -> Result<CentralDecomposition, Error> {
    if !is_central(w) {
        return Err(Error::Precondition {
            op: "central_decomposition",
            message: format!("\"{w}\" is not central"),
        });
    }
    match w.first() {
        None => {
            return Ok(CentralDecomposition::LetterPower {
                letter: Letter::A,
                exponent: 0,
            })
        }
        Some(&first) if w.iter().all(|&l| l == first) => {
            return Ok(CentralDecomposition::LetterPower {
                letter: first,
                exponent: w.len(),
            })
        }
        Some(_) => {}
    }
    for i in 0..w.len() - 1 {
        let (x, y) = (w[i], w[i + 1]);
        if x == y {
            continue;
        }
        let u1 = w.factor(0..i);
        let u2 = w.factor(i + 2..w.len());
        let crossed: Word = u2
            .iter()
            .chain(&[y, x])
            .chain(u1.iter())
            .copied()
            .collect();
        if crossed == *w {
            debug_assert!(is_central(&u1) && is_central(&u2));
            return Ok(CentralDecomposition::Cross { u1, u2, x, y });
        }
    }
    Err(Error::Verification {
        op: "central_decomposition",
        message: format!("central word \"{w}\" admits no cross decomposition"),
    })
}

/// All central words of length `n`, in lexicographic order.
pub fn central_words(n: usize) -> Vec<Word> {
    crate::word::words_of_length(n).filter(is_central).collect()
}
