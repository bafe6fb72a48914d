//! Trapezoidal and closed words: predicates, decompositions and the
//! aggregate classification report.
//!
//! A non-empty binary word is *trapezoidal* when it has at most `n + 1`
//! distinct factors of each length `n`; its complexity profile then rises
//! with unit slope, stays flat, and falls with unit slope. The crate decides
//! trapezoidality through the parameter identity `R + K = |w|` and keeps six
//! further equivalent routes (plus ten for closedness) as mutually checking
//! oracles.
//!
//! A word is *closed* when it is empty or has a border occurring in it only
//! as a prefix and as a suffix. Closedness splits the trapezoidal words
//! cleanly: every trapezoidal word is open or Sturmian, and the closed
//! trapezoidal words are exactly the closed balanced ones.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Error;
use crate::special::{de_luca_parameters, special_factors, DeLucaParameters};
use crate::sturmian::{is_balanced, is_central, minimal_pathological_pair};
use crate::word::{Letter, Word};

/// Whether a word is closed or open.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Openness {
    Open,
    Closed,
}

/// Is `w` closed: empty, or possessing a factor that occurs exactly twice,
/// as a prefix and as a suffix? Equivalently, the longest repeated prefix
/// has no internal occurrence. Single letters are closed (the border `ε`
/// occurs exactly twice); `ab` is open.
pub fn is_closed(w: &Word) -> bool {
    if w.is_empty() {
        return true;
    }
    let z = w.z_array();
    let h = (1..w.len()).map(|i| z[i]).max().unwrap_or(0);
    // An occurrence of the longest repeated prefix starting in
    // [1, |w| - h - 1] is internal (neither the prefix nor the suffix one).
    !(1..w.len() - h).any(|i| z[i] >= h)
}

/// Ten equivalent descriptions of closedness for a non-empty word, each
/// evaluated by a direct occurrence scan, independent of [`is_closed`]. The
/// test suites assert that all ten always agree with it. With `h` the
/// longest repeated prefix, `k` the longest repeated suffix and `b` the
/// longest border, the entries are:
///
/// 0. some border occurs exactly twice, as prefix and suffix;
/// 1. `h` has no internal occurrence;
/// 2. `k` has no internal occurrence;
/// 3. `h` is not right special;
/// 4. `k` is not left special;
/// 5. some border has no internal occurrence;
/// 6. `b` has no internal occurrence;
/// 7. the word is a complete return to `h`;
/// 8. the word is a complete return to `b`;
/// 9. some border `u` satisfies `Fact(w) ∩ ΣuΣ = ∅`.
pub fn closed_characterization_oracles(w: &Word) -> Result<[bool; 10], Error> {
    if w.is_empty() {
        return Err(Error::empty_word("closed_characterization_oracles"));
    }
    let n = w.len();
    // Longest repeated prefix by downward scan over prefix lengths.
    let h = (0..n)
        .rev()
        .map(|len| w.factor(0..len))
        .find(|p| w.occurrences(p).positions.len() >= 2)
        .expect("ε is always repeated in a non-empty word");
    let k = {
        let rev = w.reversal();
        (0..n)
            .rev()
            .map(|len| rev.factor(0..len))
            .find(|p| rev.occurrences(p).positions.len() >= 2)
            .expect("ε is always repeated in a non-empty word")
            .reversal()
    };
    // Borders by direct prefix/suffix comparison.
    let borders: Vec<Word> = (0..n)
        .filter(|&len| w.letters()[..len] == w.letters()[n - len..])
        .map(|len| w.factor(0..len))
        .collect();
    let longest_border = borders.last().expect("ε is a border").clone();

    let no_internal = |u: &Word| {
        w.occurrences(u)
            .positions
            .iter()
            .all(|&i| i == 0 || i == n - u.len())
    };
    let complete_return = |u: &Word| {
        w.occurrences(u).positions == vec![0, n - u.len()] && u.len() < n
    };
    let right_extensions = |u: &Word| -> BTreeSet<Letter> {
        w.occurrences(u)
            .positions
            .iter()
            .filter(|&&i| i + u.len() < n)
            .map(|&i| w[i + u.len()])
            .collect()
    };
    let left_extensions = |u: &Word| -> BTreeSet<Letter> {
        w.occurrences(u)
            .positions
            .iter()
            .filter(|&&i| i > 0)
            .map(|&i| w[i - 1])
            .collect()
    };
    let frontier_free = |u: &Word| {
        // No factor of the shape x·u·y.
        u.len() + 2 > n
            || !(0..=n - u.len() - 2).any(|i| w.letters()[i + 1..i + 1 + u.len()] == *u.letters())
    };

    Ok([
        borders.iter().any(&complete_return),
        no_internal(&h),
        no_internal(&k),
        right_extensions(&h).len() < 2,
        left_extensions(&k).len() < 2,
        borders.iter().any(no_internal),
        no_internal(&longest_border),
        complete_return(&h),
        complete_return(&longest_border),
        borders.iter().any(frontier_free),
    ])
}

/// Is `w` trapezoidal? Decided via `R + K = |w|`; the inequality
/// `R + K <= |w|` holds for every word, and equality is one of seven
/// equivalent characterizations (see
/// [`trapezoidal_characterizations`]). Errors on the empty word.
pub fn is_trapezoidal(w: &Word) -> Result<bool, Error> {
    if w.is_empty() {
        return Err(Error::empty_word("is_trapezoidal"));
    }
    let p = de_luca_parameters(w)?;
    Ok(p.r + p.k == w.len())
}

/// Seven equivalent descriptions of trapezoidality, each computed by its
/// own route; they must agree on every non-empty word:
///
/// 0. the complexity profile is a trapezoid: unit-slope rise, plateau,
///    unit-slope fall;
/// 1. `|w| = L + H`;
/// 2. `|w| = R + K`;
/// 3. at most one left special factor of each length;
/// 4. at most one right special factor of each length;
/// 5. `f_w(n) <= n + 1` for every `n`;
/// 6. `|f_w(n + 1) - f_w(n)| <= 1` for every `n < |w|`.
pub fn trapezoidal_characterizations(w: &Word) -> Result<[bool; 7], Error> {
    if w.is_empty() {
        return Err(Error::empty_word("trapezoidal_characterizations"));
    }
    let n = w.len();
    let f = w.factor_complexity();
    let p = de_luca_parameters(w)?;
    let specials = special_factors(w);

    // Greedy reconstruction of the trapezoid: the longest unit-slope rise,
    // then the longest plateau, then the tail must fall by exactly one.
    let shape = {
        let mut m = 0;
        while m < n && f[m + 1] == f[m] + 1 {
            m += 1;
        }
        let mut plateau_end = m;
        while plateau_end < n && f[plateau_end + 1] == f[plateau_end] {
            plateau_end += 1;
        }
        (plateau_end..n).all(|i| f[i + 1] + 1 == f[i])
    };
    let at_most_one_per_length = |factors: &[Word]| {
        (0..n).all(|len| factors.iter().filter(|u| u.len() == len).count() <= 1)
    };

    Ok([
        shape,
        n == p.l + p.h,
        n == p.r + p.k,
        at_most_one_per_length(&specials.left),
        at_most_one_per_length(&specials.right),
        f.iter().enumerate().all(|(len, &c)| c <= len + 1),
        (0..n).all(|i| f[i].abs_diff(f[i + 1]) <= 1),
    ])
}

/// The two halves of a non-Sturmian trapezoidal word `w = p·q`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PqSplit {
    pub p: Word,
    pub q: Word,
}

/// Splits a non-Sturmian trapezoidal word as `w = p·q`, where `|q| = K` and,
/// with `(f, g)` the minimal pathological pair, `p` is a suffix of a power
/// of the reversed fractional root of `f` and `q` is a prefix of a power of
/// the fractional root of `g`. The split is derived from `K` and then every
/// claimed property is re-verified, including that the longest right special
/// factor is the prefix of length `R - 1`; a failed check reports a
/// `Verification` error and would indicate a bug.
pub fn dalessandro_factorization(w: &Word) -> Result<PqSplit, Error> {
    if !is_trapezoidal(w)? {
        return Err(Error::Precondition {
            op: "dalessandro_factorization",
            message: format!("\"{w}\" is not trapezoidal"),
        });
    }
    let Some(pair) = minimal_pathological_pair(w) else {
        return Err(Error::Precondition {
            op: "dalessandro_factorization",
            message: format!("\"{w}\" is Sturmian; the split applies to non-Sturmian trapezoidal words"),
        });
    };
    let params = de_luca_parameters(w)?;
    let verify = |ok: bool, claim: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::Verification {
                op: "dalessandro_factorization",
                message: format!("{claim} fails for \"{w}\""),
            })
        }
    };

    let p = w.factor(0..w.len() - params.k);
    let q = w.factor(w.len() - params.k..w.len());
    verify(p.len() == params.r, "|p| = R")?;
    // p in Suff({reversal(z_f)}*) iff reversal(p) is a prefix of z_f^∞.
    let z_f = pair.f.period_data()?.fractional_root;
    let z_g = pair.g.period_data()?.fractional_root;
    verify(
        p.reversal() == z_f.periodic_extension(p.len()),
        "p lies among the suffixes of powers of the reversed root of f",
    )?;
    verify(
        q == z_g.periodic_extension(q.len()),
        "q lies among the prefixes of powers of the root of g",
    )?;
    let expected_r_witness = (params.r > 0).then(|| w.factor(0..params.r - 1));
    verify(
        params.r_w == expected_r_witness,
        "the longest right special factor is the prefix of length R - 1",
    )?;
    Ok(PqSplit { p, q })
}

/// Is `w` rich: does it attain the maximal number `|w| + 1` of distinct
/// palindromic factors (counting `ε`)? Every trapezoidal word is rich; the
/// converse fails (`aabbaa` is rich but not trapezoidal).
pub fn is_rich(w: &Word) -> bool {
    w.palindromic_factor_count() == w.len() + 1
}

/// Is `w` semicentral: trapezoidal with its longest repeated prefix,
/// longest repeated suffix, longest left special factor and longest right
/// special factor all equal? Equivalently `w = u·x·y·u` with `u` central and
/// `x != y`; semicentral words are open and of even length.
pub fn is_semicentral(w: &Word) -> bool {
    if w.is_empty() {
        return false;
    }
    let p = de_luca_parameters(w).expect("word is non-empty");
    p.r + p.k == w.len()
        && match (&p.r_w, &p.l_w) {
            (Some(r_w), Some(l_w)) => {
                r_w == &p.h_w && l_w == &p.h_w && p.h_w == p.k_w
            }
            _ => false,
        }
}

/// The structural triple of a semicentral word `w = u·x·y·u`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SemicentralTriple {
    pub u: Word,
    pub x: Letter,
    pub y: Letter,
}

/// Splits a semicentral word as `u·x·y·u` and verifies `u` is central with
/// `x != y`. Errors on non-semicentral input.
pub fn semicentral_decompose(w: &Word) -> Result<SemicentralTriple, Error> {
    if !is_semicentral(w) {
        return Err(Error::Precondition {
            op: "semicentral_decompose",
            message: format!("\"{w}\" is not semicentral"),
        });
    }
    let m = (w.len() - 2) / 2;
    let u = w.factor(0..m);
    let (x, y) = (w[m], w[m + 1]);
    let consistent = w.len().is_multiple_of(2)
        && x != y
        && is_central(&u)
        && w.factor(m + 2..w.len()) == u;
    if !consistent {
        return Err(Error::Verification {
            op: "semicentral_decompose",
            message: format!("\"{w}\" is semicentral but does not split as u·x·y·u"),
        });
    }
    Ok(SemicentralTriple { u, x, y })
}

/// Everything the crate can say about one non-empty word.
///
/// The optional fields are present exactly when they apply:
/// `closed_witness` (the longest border, which for a closed word has no
/// internal occurrence) when the word is closed, `pq_split` when it is
/// trapezoidal but not Sturmian, `semicentral_triple` when it is
/// semicentral.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TrapezoidalReport {
    pub word: Word,
    pub is_trapezoidal: bool,
    pub is_sturmian: bool,
    pub is_rich: bool,
    pub is_palindrome: bool,
    pub openness: Openness,
    pub is_semicentral: bool,
    pub parameters: DeLucaParameters,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_witness: Option<Word>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pq_split: Option<PqSplit>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semicentral_triple: Option<SemicentralTriple>,
}

/// Classifies `w` in every dimension at once. Errors on the empty word.
pub fn classify(w: &Word) -> Result<TrapezoidalReport, Error> {
    if w.is_empty() {
        return Err(Error::empty_word("classify"));
    }
    let parameters = de_luca_parameters(w)?;
    let trapezoidal = parameters.r + parameters.k == w.len();
    let sturmian = is_balanced(w);
    let closed = is_closed(w);
    let semicentral = is_semicentral(w);
    Ok(TrapezoidalReport {
        word: w.clone(),
        is_trapezoidal: trapezoidal,
        is_sturmian: sturmian,
        is_rich: is_rich(w),
        is_palindrome: w.is_palindrome(),
        openness: if closed {
            Openness::Closed
        } else {
            Openness::Open
        },
        is_semicentral: semicentral,
        parameters,
        closed_witness: closed.then(|| w.borders().pop().expect("word is non-empty")),
        pq_split: if trapezoidal && !sturmian {
            Some(dalessandro_factorization(w)?)
        } else {
            None
        },
        semicentral_triple: if semicentral {
            Some(semicentral_decompose(w)?)
        } else {
            None
        },
    })
}

/// Point checks of the laws tying palindromes, balance and closedness.
/// Each law flag is `true` when the law holds for this word, vacuously so
/// when its hypothesis does not apply.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SturmianPalindromeChecks {
    pub is_palindrome: bool,
    pub is_sturmian: bool,
    pub is_closed_trapezoidal: bool,
    /// For closed trapezoidal words: the longest repeated prefix is a
    /// palindrome iff the word is a balanced palindrome.
    pub h_palindromic_iff_sturmian_palindrome: bool,
    /// For palindromes: balance holds iff the minimal period is `R + 1`.
    pub palindrome_period_law: bool,
    /// For closed trapezoidal words: the longest left and right special
    /// factors coincide and form a central word (vacuous when none exist).
    pub special_factors_central: bool,
}

/// Evaluates the palindrome laws on one non-empty word.
pub fn sturmian_palindrome_tests(w: &Word) -> Result<SturmianPalindromeChecks, Error> {
    if w.is_empty() {
        return Err(Error::empty_word("sturmian_palindrome_tests"));
    }
    let params = de_luca_parameters(w)?;
    let palindrome = w.is_palindrome();
    let sturmian = is_balanced(w);
    let closed_trapezoidal = is_closed(w) && params.r + params.k == w.len();
    let h_palindromic_iff_sturmian_palindrome =
        !closed_trapezoidal || (params.h_w.is_palindrome() == (palindrome && sturmian));
    let palindrome_period_law = !palindrome || {
        let period = w.period_data()?.period;
        sturmian == (period == params.r + 1)
    };
    let special_factors_central = !closed_trapezoidal
        || match (&params.l_w, &params.r_w) {
            (None, None) => true,
            (Some(l), Some(r)) => l == r && is_central(l),
            _ => false,
        };
    Ok(SturmianPalindromeChecks {
        is_palindrome: palindrome,
        is_sturmian: sturmian,
        is_closed_trapezoidal: closed_trapezoidal,
        h_palindromic_iff_sturmian_palindrome,
        palindrome_period_law,
        special_factors_central,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::words_of_length;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn closed_word_examples() {
        for s in ["aabbaa", "ababa", "a", "aaa", "abba", "abaab", "aababaaba", "abaababaaba"] {
            assert!(is_closed(&w(s)), "{s}");
        }
        assert!(is_closed(&Word::new()));
        for s in ["ab", "aabbaaa", "aaba", "aaabab", "abaa"] {
            assert!(!is_closed(&w(s)), "{s}");
        }
    }

    #[test]
    fn characterization_oracles_on_known_words() {
        assert_eq!(closed_characterization_oracles(&w("abba")).unwrap(), [true; 10]);
        assert_eq!(closed_characterization_oracles(&w("aaba")).unwrap(), [false; 10]);
        assert!(closed_characterization_oracles(&Word::new()).is_err());
    }

    #[test]
    fn characterization_oracles_agree_with_is_closed_exhaustively() {
        for n in 1..=12 {
            for word in words_of_length(n) {
                let oracles = closed_characterization_oracles(&word).unwrap();
                let expected = [is_closed(&word); 10];
                assert_eq!(oracles, expected, "word {word}");
            }
        }
    }

    #[test]
    fn trapezoidal_examples() {
        assert!(is_trapezoidal(&w("aaababa")).unwrap());
        assert!(is_trapezoidal(&w("aaabab")).unwrap());
        assert!(is_trapezoidal(&w("a")).unwrap());
        assert!(is_trapezoidal(&w("aaaa")).unwrap());
        assert!(is_trapezoidal(&w("ab")).unwrap());
        assert!(!is_trapezoidal(&w("aabbaa")).unwrap());
        assert!(!is_trapezoidal(&w("aaababbaabbabaaa")).unwrap());
        assert!(is_trapezoidal(&Word::new()).is_err());
    }

    #[test]
    fn trapezoidal_characterizations_agree_exhaustively() {
        for n in 1..=12 {
            for word in words_of_length(n) {
                let chars = trapezoidal_characterizations(&word).unwrap();
                let expected = [is_trapezoidal(&word).unwrap(); 7];
                assert_eq!(chars, expected, "word {word}");
            }
        }
    }

    #[test]
    fn dalessandro_factorization_examples() {
        let split = dalessandro_factorization(&w("aaababa")).unwrap();
        assert_eq!((split.p, split.q), (w("aaa"), w("baba")));

        let split = dalessandro_factorization(&w("aaabab")).unwrap();
        assert_eq!((split.p, split.q), (w("aaa"), w("bab")));

        // Letter-exchanged variant: the b-heavy factor of the pair leads.
        let split = dalessandro_factorization(&w("bbbaba")).unwrap();
        assert_eq!((split.p, split.q), (w("bbb"), w("aba")));
    }

    #[test]
    fn dalessandro_factorization_preconditions() {
        assert!(matches!(
            dalessandro_factorization(&w("aaabaa")),
            Err(Error::Precondition { .. })
        ));
        assert!(matches!(
            dalessandro_factorization(&w("aabbaa")),
            Err(Error::Precondition { .. })
        ));
        assert!(dalessandro_factorization(&Word::new()).is_err());
    }

    #[test]
    fn richness_examples() {
        assert!(is_rich(&w("aabbaa")));
        assert!(is_rich(&w("aaababa")));
        assert!(is_rich(&Word::new()));
        assert!(!is_rich(&w("aaababbaabbabaaa")));
    }

    /// Complete-return characterization of richness, used as an oracle: every
    /// factor that is a complete return to a palindromic factor must itself
    /// be a palindrome.
    fn naive_is_rich(word: &Word) -> bool {
        let mut factors = BTreeSet::new();
        for i in 0..word.len() {
            for j in i + 1..=word.len() {
                factors.insert(word.factor(i..j));
            }
        }
        for u in &factors {
            for len in 0..u.len() {
                let v = u.factor(0..len);
                if !v.is_palindrome() || u.letters()[u.len() - len..] != *v.letters() {
                    continue;
                }
                if u.occurrences(&v).positions == vec![0, u.len() - len] && !u.is_palindrome() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn richness_matches_complete_return_oracle_exhaustively() {
        for n in 0..=12 {
            for word in words_of_length(n) {
                assert_eq!(is_rich(&word), naive_is_rich(&word), "{word}");
            }
        }
    }

    #[test]
    fn semicentral_examples() {
        for s in ["ab", "ba", "aaba", "abaa", "abaababa", "ababaaba", "bbbabbbb", "aaaabaaa"] {
            assert!(is_semicentral(&w(s)), "{s}");
        }
        for s in ["a", "aa", "abba", "abab", "aaaa", "aababaaba"] {
            assert!(!is_semicentral(&w(s)), "{s}");
        }
        assert!(!is_semicentral(&Word::new()));
    }

    #[test]
    fn semicentral_words_of_length_eight() {
        let found: Vec<String> = words_of_length(8)
            .filter(is_semicentral)
            .map(|x| x.to_string())
            .collect();
        assert_eq!(
            found,
            vec![
                "aaaabaaa", "aaabaaaa", "abaababa", "ababaaba", "bababbab", "babbabab",
                "bbbabbbb", "bbbbabbb",
            ]
        );
    }

    #[test]
    fn semicentral_decompose_examples() {
        let t = semicentral_decompose(&w("abaababa")).unwrap();
        assert_eq!((t.u, t.x, t.y), (w("aba"), Letter::A, Letter::B));

        let t = semicentral_decompose(&w("ababaaba")).unwrap();
        assert_eq!((t.u, t.x, t.y), (w("aba"), Letter::B, Letter::A));

        let t = semicentral_decompose(&w("bbbabbbb")).unwrap();
        assert_eq!((t.u, t.x, t.y), (w("bbb"), Letter::A, Letter::B));

        assert!(matches!(
            semicentral_decompose(&w("abba")),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn semicentral_structure_exhaustively() {
        // u·x·y·u with u central and x != y is an exact characterization,
        // and semicentral words are open, trapezoidal and of even length.
        for n in 1..=12 {
            for word in words_of_length(n) {
                let structural = n % 2 == 0 && {
                    let m = (n - 2) / 2;
                    let u = word.factor(0..m);
                    word[m] != word[m + 1]
                        && word.factor(m + 2..n) == u
                        && is_central(&u)
                };
                assert_eq!(is_semicentral(&word), structural, "{word}");
                if is_semicentral(&word) {
                    assert!(!is_closed(&word), "{word} should be open");
                    assert!(is_trapezoidal(&word).unwrap(), "{word}");
                }
            }
        }
    }

    #[test]
    fn semicentral_words_are_non_strictly_bispecial() {
        // Extending a semicentral word by one letter on either side keeps it
        // balanced, but some two-sided extension x·w·y with x != y does not.
        for n in 1..=10 {
            for word in words_of_length(n).filter(is_semicentral) {
                for x in Letter::ALPHABET {
                    let left: Word = std::iter::once(x).chain(word.iter().copied()).collect();
                    let right: Word = word.iter().copied().chain(std::iter::once(x)).collect();
                    assert!(is_balanced(&left), "{x}{word}");
                    assert!(is_balanced(&right), "{word}{x}");
                }
                let awb: Word = std::iter::once(Letter::A)
                    .chain(word.iter().copied())
                    .chain(std::iter::once(Letter::B))
                    .collect();
                let bwa: Word = std::iter::once(Letter::B)
                    .chain(word.iter().copied())
                    .chain(std::iter::once(Letter::A))
                    .collect();
                assert!(
                    !is_balanced(&awb) || !is_balanced(&bwa),
                    "both two-sided extensions of {word} stay balanced"
                );
            }
        }
    }

    #[test]
    fn classify_aaababa() {
        let r = classify(&w("aaababa")).unwrap();
        assert!(r.is_trapezoidal && !r.is_sturmian && r.is_rich);
        assert!(!r.is_palindrome && !r.is_semicentral);
        assert_eq!(r.openness, Openness::Open);
        assert_eq!(
            (r.parameters.h, r.parameters.k, r.parameters.l, r.parameters.r),
            (3, 4, 4, 3)
        );
        assert_eq!(r.closed_witness, None);
        let pq = r.pq_split.unwrap();
        assert_eq!((pq.p, pq.q), (w("aaa"), w("baba")));
        assert_eq!(r.semicentral_triple, None);
    }

    #[test]
    fn classify_closed_sturmian_words() {
        let r = classify(&w("aababaaba")).unwrap();
        assert!(r.is_trapezoidal && r.is_sturmian && r.is_rich);
        assert_eq!(r.openness, Openness::Closed);
        assert!(!r.is_palindrome);
        assert_eq!(r.closed_witness, Some(w("aaba")));
        assert_eq!(r.pq_split, None);

        let r = classify(&w("abaababaaba")).unwrap();
        assert!(r.is_trapezoidal && r.is_sturmian && r.is_palindrome);
        assert_eq!(r.openness, Openness::Closed);
        assert_eq!(r.closed_witness, Some(w("abaaba")));
    }

    #[test]
    fn classify_letter_powers() {
        let r = classify(&w("aaaa")).unwrap();
        assert!(r.is_trapezoidal && r.is_sturmian && r.is_rich && r.is_palindrome);
        assert_eq!(r.openness, Openness::Closed);
        assert!(!r.is_semicentral);
        assert_eq!(r.closed_witness, Some(w("aaa")));
    }

    #[test]
    fn classify_rejects_the_empty_word() {
        assert!(classify(&Word::new()).is_err());
    }

    #[test]
    fn report_serializes_to_a_stable_json_shape() {
        let value = serde_json::to_value(classify(&w("aaababa")).unwrap()).unwrap();
        assert_eq!(
            value,
            serde_json::json!({
                "word": "aaababa",
                "is_trapezoidal": true,
                "is_sturmian": false,
                "is_rich": true,
                "is_palindrome": false,
                "openness": "open",
                "is_semicentral": false,
                "parameters": {
                    "H": 3, "K": 4, "L": 4, "R": 3,
                    "h_w": "aa", "k_w": "aba", "l_w": "aba", "r_w": "aa"
                },
                "pq_split": { "p": "aaa", "q": "baba" }
            })
        );

        let value = serde_json::to_value(classify(&w("ab")).unwrap()).unwrap();
        assert_eq!(
            value,
            serde_json::json!({
                "word": "ab",
                "is_trapezoidal": true,
                "is_sturmian": true,
                "is_rich": true,
                "is_palindrome": false,
                "openness": "open",
                "is_semicentral": true,
                "parameters": {
                    "H": 1, "K": 1, "L": 1, "R": 1,
                    "h_w": "", "k_w": "", "l_w": "", "r_w": ""
                },
                "semicentral_triple": { "u": "", "x": "a", "y": "b" }
            })
        );
    }

    #[test]
    fn openness_and_parameter_equalities_exhaustively() {
        for n in 1..=12 {
            for word in words_of_length(n).filter(|x| is_trapezoidal(x).unwrap()) {
                let p = de_luca_parameters(&word).unwrap();
                let open = !is_closed(&word);
                // Open trapezoidal words are exactly those with h = r
                // (equivalently k = l).
                assert_eq!(open, p.r_w.as_ref() == Some(&p.h_w), "{word}");
                assert_eq!(open, p.l_w.as_ref() == Some(&p.k_w), "{word}");
                if open {
                    assert_eq!((p.h, p.k), (p.r, p.l), "{word}");
                } else {
                    assert_eq!(p.h, p.k, "{word}");
                    assert_eq!(p.l, p.r, "{word}");
                }
            }
        }
        // The closed-side equalities do not characterize closedness: abba is
        // closed and aaba open, both with all four parameters equal to 2.
        let closed = de_luca_parameters(&w("abba")).unwrap();
        let open = de_luca_parameters(&w("aaba")).unwrap();
        for p in [closed, open] {
            assert_eq!((p.h, p.k, p.l, p.r), (2, 2, 2, 2));
        }
        assert!(is_closed(&w("abba")));
        assert!(!is_closed(&w("aaba")));
    }

    #[test]
    fn sturmian_palindrome_checks_on_known_words() {
        let c = sturmian_palindrome_tests(&w("abaaba")).unwrap();
        assert!(c.is_palindrome && c.is_sturmian && c.is_closed_trapezoidal);
        assert!(c.h_palindromic_iff_sturmian_palindrome);
        assert!(c.palindrome_period_law);
        assert!(c.special_factors_central);

        // Non-Sturmian palindrome: balance fails and so does π = R + 1.
        let word = w("aaababbaabbabaaa");
        let c = sturmian_palindrome_tests(&word).unwrap();
        assert!(c.is_palindrome && !c.is_sturmian && !c.is_closed_trapezoidal);
        assert!(c.palindrome_period_law);
        assert!(is_closed(&word));

        // Closed Sturmian non-palindrome: h_w = aaba is not a palindrome.
        let c = sturmian_palindrome_tests(&w("aababaaba")).unwrap();
        assert!(!c.is_palindrome && c.is_closed_trapezoidal);
        assert!(c.h_palindromic_iff_sturmian_palindrome);
    }

    #[test]
    fn sturmian_palindrome_laws_hold_exhaustively() {
        for n in 1..=12 {
            for word in words_of_length(n) {
                let c = sturmian_palindrome_tests(&word).unwrap();
                assert!(c.h_palindromic_iff_sturmian_palindrome, "{word}");
                assert!(c.palindrome_period_law, "{word}");
                assert!(c.special_factors_central, "{word}");
            }
        }
    }

    #[test]
    fn classification_laws_hold_exhaustively() {
        for n in 1..=12 {
            for word in words_of_length(n) {
                let r = classify(&word).unwrap();
                // Sturmian ⊂ trapezoidal ⊂ rich.
                if r.is_sturmian {
                    assert!(r.is_trapezoidal, "{word}");
                }
                if r.is_trapezoidal {
                    assert!(r.is_rich, "{word}");
                }
                // Closed trapezoidal words are Sturmian; trapezoidal
                // palindromes are Sturmian palindromes and closed.
                if r.is_trapezoidal && r.openness == Openness::Closed {
                    assert!(r.is_sturmian, "{word}");
                }
                if r.is_trapezoidal && r.is_palindrome {
                    assert!(r.is_sturmian, "{word}");
                    assert_eq!(r.openness, Openness::Closed, "{word}");
                }
                // Rich palindromes are closed.
                if r.is_rich && r.is_palindrome {
                    assert_eq!(r.openness, Openness::Closed, "{word}");
                }
                // Semicentral words are open trapezoidal.
                if r.is_semicentral {
                    assert!(r.is_trapezoidal && r.openness == Openness::Open, "{word}");
                }
                // Optional fields appear exactly when they apply.
                assert_eq!(r.closed_witness.is_some(), r.openness == Openness::Closed);
                assert_eq!(r.pq_split.is_some(), r.is_trapezoidal && !r.is_sturmian);
                assert_eq!(r.semicentral_triple.is_some(), r.is_semicentral);
                if let Some(witness) = &r.closed_witness {
                    let positions = word.occurrences(witness).positions;
                    assert!(positions
                        .iter()
                        .all(|&i| i == 0 || i == word.len() - witness.len()));
                }
                if let Some(pq) = &r.pq_split {
                    let rebuilt: Word =
                        pq.p.iter().chain(pq.q.iter()).copied().collect();
                    assert_eq!(rebuilt, word);
                    assert!(is_balanced(&pq.p), "p of {word}");
                    assert!(is_balanced(&pq.q), "q of {word}");
                }
                // Openness is invariant under reversal.
                assert_eq!(is_closed(&word), is_closed(&word.reversal()), "{word}");
            }
        }
    }
}
