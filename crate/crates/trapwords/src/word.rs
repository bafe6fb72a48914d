//! Binary words over `{a, b}` and their elementary combinatorics: factors,
//! factor complexity, occurrences, borders, periods and palindromic factors.
//!
//! [`Word`] is an immutable sequence of [`Letter`]s. All operations return
//! fresh values. Sets of words iterate in lexicographic order (`a < b`, with
//! proper prefixes ordered first), which every enumeration routine in the
//! crate relies on for determinism.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::{Deref, Range};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// One of the two letters of the alphabet, ordered `A < B`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub const ALPHABET: [Letter; 2] = [Letter::A, Letter::B];

    /// The other letter of the alphabet.
    pub fn other(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            _ => None,
        }
    }

    pub(crate) fn index(self) -> usize {
        match self {
            Letter::A => 0,
            Letter::B => 1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(match self {
            Letter::A => "a",
            Letter::B => "b",
        })
    }
}

/// A finite word over `{a, b}`.
///
/// Dereferences to `&[Letter]`, so slice operations (`len`, indexing,
/// `windows`, ...) are available directly. The derived `Ord` is the
/// lexicographic order on letter sequences.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Longest word accepted by [`Word::parse`]. Longer words can still be
    /// built programmatically via [`Word::from_letters`].
    pub const MAX_PARSE_LEN: usize = 1 << 16;

    /// The empty word.
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        Word(letters.into_iter().collect())
    }

    /// Parses a word from ASCII text. Only `a` and `b` are accepted; the
    /// empty string parses as the empty word. On failure the error names the
    /// offending character and its (0-based) position.
    pub fn parse(s: &str) -> Result<Word, Error> {
        let mut letters = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            match Letter::from_char(c) {
                Some(l) => letters.push(l),
                None => return Err(Error::Parse { found: c, position }),
            }
        }
        if letters.len() > Self::MAX_PARSE_LEN {
            return Err(Error::TooLong {
                op: "parse",
                length: letters.len(),
                limit: Self::MAX_PARSE_LEN,
            });
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// The factor `w[range]` as a fresh word. Panics if the range is out of
    /// bounds, like slice indexing.
    pub fn factor(&self, range: Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// The reversed word.
    pub fn reversal(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// The `k`-th power `w^k` (the empty word for `k = 0`).
    pub fn power(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// The prefix of length `len` of the periodic infinite word `w w w ...`.
    /// Callers must ensure `w` is non-empty.
    pub(crate) fn periodic_extension(&self, len: usize) -> Word {
        debug_assert!(!self.is_empty());
        Word(self.0.iter().copied().cycle().take(len).collect())
    }

    /// All distinct factors of length `n`, in lexicographic order. Empty for
    /// `n > |w|`; `{ε}` for `n = 0`.
    pub fn factors_of_length(&self, n: usize) -> BTreeSet<Word> {
        let mut set = BTreeSet::new();
        if n == 0 {
            set.insert(Word::new());
        } else if n <= self.len() {
            for win in self.0.windows(n) {
                set.insert(Word(win.to_vec()));
            }
        }
        set
    }

    /// The factor complexity sequence `f_w(0), f_w(1), ..., f_w(|w|)`, where
    /// `f_w(n)` is the number of distinct factors of length `n`. Always
    /// starts at 1 (the empty factor) and ends at 1 (the word itself).
    pub fn factor_complexity(&self) -> Vec<usize> {
        let n = self.len();
        let mut counts = Vec::with_capacity(n + 1);
        counts.push(1);
        let mut seen: HashSet<&[Letter]> = HashSet::new();
        for len in 1..=n {
            seen.clear();
            for win in self.0.windows(len) {
                seen.insert(win);
            }
            counts.push(seen.len());
        }
        counts
    }

    /// Does `factor` occur in `self`?
    pub fn contains_factor(&self, factor: &Word) -> bool {
        factor.len() <= self.len()
            && (factor.is_empty() || self.0.windows(factor.len()).any(|w| w == factor.letters()))
    }

    /// All start positions of `factor` in `self`, in increasing order. The
    /// empty factor occurs at every one of the `|w| + 1` positions.
    pub fn occurrences(&self, factor: &Word) -> OccurrenceList {
        let mut positions = Vec::new();
        if factor.len() <= self.len() {
            for i in 0..=self.len() - factor.len() {
                if &self.0[i..i + factor.len()] == factor.letters() {
                    positions.push(i);
                }
            }
        }
        OccurrenceList {
            factor: factor.clone(),
            positions,
        }
    }

    /// All borders (factors that are both a proper prefix and a proper
    /// suffix) in order of increasing length. The empty word has no borders;
    /// every non-empty word has at least the border `ε`.
    pub fn borders(&self) -> Vec<Word> {
        let w = &self.0;
        let n = w.len();
        if n == 0 {
            return Vec::new();
        }
        // Failure-function chain: fail[i] is the longest proper border of w[..=i].
        let mut fail = vec![0usize; n];
        for i in 1..n {
            let mut k = fail[i - 1];
            while k > 0 && w[i] != w[k] {
                k = fail[k - 1];
            }
            if w[i] == w[k] {
                k += 1;
            }
            fail[i] = k;
        }
        let mut lens = vec![0usize];
        let mut k = fail[n - 1];
        while k > 0 {
            lens.push(k);
            k = fail[k - 1];
        }
        lens.sort_unstable();
        lens.into_iter().map(|l| self.factor(0..l)).collect()
    }

    /// Minimal period, fractional root and longest border of a non-empty
    /// word. The period is `|w|` minus the longest-border length.
    pub fn period_data(&self) -> Result<PeriodData, Error> {
        if self.is_empty() {
            return Err(Error::empty_word("period_data"));
        }
        let longest_border = self.borders().pop().expect("non-empty word has a border");
        let period = self.len() - longest_border.len();
        Ok(PeriodData {
            period,
            fractional_root: self.factor(0..period),
            longest_border,
        })
    }

    /// Is the word primitive, i.e. not a proper integer power `u^k`, `k >= 2`?
    /// Decided by whether the minimal period properly divides the length.
    pub fn is_primitive(&self) -> Result<bool, Error> {
        if self.is_empty() {
            return Err(Error::empty_word("is_primitive"));
        }
        let p = self.period_data()?.period;
        Ok(!(p < self.len() && self.len().is_multiple_of(p)))
    }

    /// All distinct palindromic factors including `ε`, in lexicographic
    /// order. A word of length `n` has at most `n + 1` of them.
    pub fn palindromic_factors(&self) -> BTreeSet<Word> {
        let mut set = BTreeSet::new();
        set.insert(Word::new());
        for (start, len) in distinct_palindromes(&self.0) {
            set.insert(self.factor(start..start + len));
        }
        set
    }

    /// Number of distinct palindromic factors including `ε`; equivalent to
    /// `palindromic_factors().len()` without materializing the factors.
    pub fn palindromic_factor_count(&self) -> usize {
        distinct_palindromes(&self.0).len() + 1
    }

    /// Z-array: `z[i]` is the length of the longest common prefix of `w` and
    /// `w[i..]`, with `z[0] = |w|` by convention.
    pub fn z_array(&self) -> Vec<usize> {
        let w = &self.0;
        let n = w.len();
        let mut z = vec![0usize; n];
        if n == 0 {
            return z;
        }
        z[0] = n;
        let (mut l, mut r) = (0usize, 0usize);
        for i in 1..n {
            let mut k = if i < r { (r - i).min(z[i - l]) } else { 0 };
            while i + k < n && w[k] == w[i + k] {
                k += 1;
            }
            z[i] = k;
            if i + k > r {
                l = i;
                r = i + k;
            }
        }
        z
    }

    /// The longest prefix that occurs at least twice in `w` (occurrences may
    /// overlap). `None` for the empty word; `ε` when the first letter occurs
    /// only once.
    pub fn longest_repeated_prefix(&self) -> Option<Word> {
        if self.is_empty() {
            return None;
        }
        let z = self.z_array();
        let h = (1..self.len()).map(|i| z[i]).max().unwrap_or(0);
        Some(self.factor(0..h))
    }

    /// The longest suffix that occurs at least twice in `w`.
    pub fn longest_repeated_suffix(&self) -> Option<Word> {
        self.reversal().longest_repeated_prefix().map(|p| p.reversal())
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word, Error> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Iterator over all `2^n` words of length `n` in lexicographic order
/// (`a < b`). The backbone of every brute-force census and generator in the
/// crate. Panics for `n >= 64`, far beyond any exhaustive sweep.
pub fn words_of_length(n: usize) -> impl Iterator<Item = Word> {
    assert!(n < 64, "length {n} is out of range for exhaustive enumeration");
    (0..1u64 << n).map(move |bits| word_from_bits(bits, n))
}

/// The length-`n` word whose letters are the low `n` bits of `bits`, most
/// significant first (`0` is `a`), so increasing `bits` is lexicographic.
pub(crate) fn word_from_bits(bits: u64, n: usize) -> Word {
    Word::from_letters((0..n).map(|i| {
        if bits >> (n - 1 - i) & 1 == 0 {
            Letter::A
        } else {
            Letter::B
        }
    }))
}

/// Occurrence positions of one factor inside a host word.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OccurrenceList {
    pub factor: Word,
    /// Start positions in increasing order; occurrences may overlap.
    pub positions: Vec<usize>,
}

/// Minimal period and the derived data of a non-empty word.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PeriodData {
    /// The minimal period `π_w`.
    pub period: usize,
    /// The prefix of length `π_w` (the fractional root `z_w`).
    pub fractional_root: Word,
    pub longest_border: Word,
}

/// Node of the palindromic factor tree. `len = -1` marks the imaginary root
/// that lets single letters be formed as `c · (root) · c`.
struct PalNode {
    len: isize,
    link: usize,
    next: [Option<usize>; 2],
}

/// First occurrence `(start, len)` of every distinct non-empty palindromic
/// factor of `w`, built incrementally: when letter `i` is appended, the only
/// palindromic suffix of `w[..=i]` that can be new is the longest one, so at
/// most one node is created per position.
fn distinct_palindromes(w: &[Letter]) -> Vec<(usize, usize)> {
    let mut nodes = vec![
        PalNode {
            len: -1,
            link: 0,
            next: [None; 2],
        },
        PalNode {
            len: 0,
            link: 0,
            next: [None; 2],
        },
    ];
    let mut last = 1usize;
    let mut found = Vec::new();

    // Longest node X (starting from `from`) whose palindrome, extended by
    // w[i] on both sides, still fits: w[i - 1 - len(X)] == w[i].
    let extendable = |nodes: &[PalNode], mut x: usize, i: usize| -> usize {
        loop {
            let j = i as isize - 1 - nodes[x].len;
            if j >= 0 && w[j as usize] == w[i] {
                return x;
            }
            x = nodes[x].link;
        }
    };

    for (i, letter) in w.iter().enumerate() {
        let c = letter.index();
        let cur = extendable(&nodes, last, i);
        if let Some(existing) = nodes[cur].next[c] {
            last = existing;
            continue;
        }
        let len = nodes[cur].len + 2;
        let link = if len == 1 {
            1
        } else {
            let next_suffix = extendable(&nodes, nodes[cur].link, i);
            nodes[next_suffix].next[c].expect("shorter palindromic suffix already registered")
        };
        let id = nodes.len();
        nodes.push(PalNode {
            len,
            link,
            next: [None; 2],
        });
        nodes[cur].next[c] = Some(id);
        found.push((i + 1 - len as usize, len as usize));
        last = id;
    }
    found
}
