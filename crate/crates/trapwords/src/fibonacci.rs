//! Prefixes of the infinite Fibonacci word and their open/closed structure.
//!
//! The Fibonacci word `abaababaabaab…` is the fixed point of the
//! substitution `a → ab`, `b → a`. Its prefix of length `n` is closed
//! exactly when `n` lies outside every interval `[F(i+1) - 1, 2 F(i) - 2]`,
//! with `F(1) = F(2) = 1, F(3) = 2, …` the Fibonacci numbers; this makes
//! the openness markers alternate in runs whose lengths are the Fibonacci
//! numbers, each repeated twice: `1, 1, 1, 1, 2, 2, 3, 3, 5, 5, 8, 8, …`.
//!
//! Each run of closed prefixes ends at the central palindromic prefix
//! `s(i+2)` of length `F(i+2) - 2`, and each run of open prefixes ends at
//! the semicentral prefix `s(i)·x·y·s(i)` of length `2 F(i) - 2`.

use serde::Serialize;

use crate::error::Error;
use crate::sturmian::is_central;
use crate::trapezoidal::{is_closed, is_semicentral, Openness};
use crate::word::{Letter, Word};

/// Longest prefix length accepted by [`analyze_prefixes`].
pub const MAX_ANALYSIS_LEN: usize = 100_000;

/// Prefix lengths up to this bound are classified directly with
/// [`is_closed`] and cross-checked against the interval formula; beyond it,
/// the formula alone is used.
pub const VERIFIED_CAP: usize = 10_000;

/// The first `k` Fibonacci numbers `[1, 1, 2, 3, 5, …]`. Capped at
/// `k = 93`, the largest count that fits in `u64`.
pub fn fibonacci_numbers(k: usize) -> Result<Vec<u64>, Error> {
    if k == 0 {
        return Err(Error::InvalidArgument {
            op: "fibonacci_numbers",
            message: "at least one Fibonacci number must be requested".into(),
        });
    }
    if k > 93 {
        return Err(Error::TooLong {
            op: "fibonacci_numbers",
            length: k,
            limit: 93,
        });
    }
    let mut numbers = vec![1u64; k.min(2)];
    while numbers.len() < k {
        numbers.push(numbers[numbers.len() - 1] + numbers[numbers.len() - 2]);
    }
    Ok(numbers)
}

/// The prefix of the Fibonacci word of length `n`, by iterating the
/// substitution `a → ab`, `b → a` from `a`.
pub fn fibonacci_prefix(n: usize) -> Result<Word, Error> {
    if n > MAX_ANALYSIS_LEN {
        return Err(Error::TooLong {
            op: "fibonacci_prefix",
            length: n,
            limit: MAX_ANALYSIS_LEN,
        });
    }
    if n == 0 {
        return Ok(Word::new());
    }
    let mut letters = vec![Letter::A];
    while letters.len() < n {
        let expanded: Vec<Letter> = letters
            .iter()
            .flat_map(|&letter| match letter {
                Letter::A => [Some(Letter::A), Some(Letter::B)],
                Letter::B => [Some(Letter::A), None],
            })
            .flatten()
            .collect();
        letters = expanded;
    }
    letters.truncate(n);
    Ok(Word::from_letters(letters))
}

/// The letters `(x, y)` inserted between the palindromic prefixes at step
/// `i`: `(b, a)` for even `i`, `(a, b)` for odd `i`, matching the
/// recurrence `s(i+1) = s(i)·x·y·s(i-1) = s(i-1)·y·x·s(i)`.
pub fn step_letters(i: usize) -> (Letter, Letter) {
    if i.is_multiple_of(2) {
        (Letter::B, Letter::A)
    } else {
        (Letter::A, Letter::B)
    }
}

/// The palindromic prefixes `s(3), s(4), …, s(max_i)` of the Fibonacci
/// word; `s(i)` has length `F(i) - 2`, so the list starts `ε, a, aba,
/// abaaba, …`. Requires `3 <= max_i <= 25` (the longest prefix then stays
/// within [`MAX_ANALYSIS_LEN`]).
pub fn palindromic_prefixes(max_i: usize) -> Result<Vec<Word>, Error> {
    if max_i < 3 {
        return Err(Error::InvalidArgument {
            op: "palindromic_prefixes",
            message: "the palindromic prefixes start at index 3".into(),
        });
    }
    if max_i > 25 {
        return Err(Error::TooLong {
            op: "palindromic_prefixes",
            length: max_i,
            limit: 25,
        });
    }
    let fib = fibonacci_numbers(max_i)?;
    let longest = fibonacci_prefix(fib[max_i - 1] as usize - 2)?;
    Ok((3..=max_i)
        .map(|i| longest.factor(0..fib[i - 1] as usize - 2))
        .collect())
}

/// Is the Fibonacci prefix of length `n` open? True exactly when
/// `F(i+1) - 1 <= n <= 2 F(i) - 2` for some `i`.
pub fn open_interval_predicate(n: usize) -> bool {
    let (mut prev, mut curr) = (1u64, 1u64);
    loop {
        // Interval for index i with F(i) = curr, F(i+1) = prev + curr.
        let lo = prev + curr - 1;
        let hi = 2 * curr - 2;
        if lo > n as u64 {
            return false;
        }
        if n as u64 <= hi {
            return true;
        }
        (prev, curr) = (curr, prev + curr);
    }
}

/// The openness classification of every Fibonacci-word prefix up to a given
/// length.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FibonacciAnalysis {
    pub max_length: usize,
    /// `sequence[n - 1]` classifies the prefix of length `n`.
    pub sequence: Vec<Openness>,
    /// The same classification from the interval formula alone.
    pub predicted: Vec<Openness>,
    /// Prefix lengths up to this value were classified directly and
    /// compared against the formula.
    pub verified_up_to: usize,
    /// Lengths of the completed constancy runs of `sequence`; the final,
    /// possibly truncated run is dropped.
    pub run_lengths: Vec<usize>,
}

/// Classifies every prefix of length `1..=max_length` as open or closed.
/// Prefixes up to [`VERIFIED_CAP`] are classified directly and checked
/// against the interval formula — a disagreement would be a bug and is
/// reported as a `Verification` error.
pub fn analyze_prefixes(max_length: usize) -> Result<FibonacciAnalysis, Error> {
    if max_length == 0 {
        return Err(Error::InvalidArgument {
            op: "analyze_prefixes",
            message: "max_length must be at least 1".into(),
        });
    }
    if max_length > MAX_ANALYSIS_LEN {
        return Err(Error::TooLong {
            op: "analyze_prefixes",
            length: max_length,
            limit: MAX_ANALYSIS_LEN,
        });
    }
    let prefix = fibonacci_prefix(max_length)?;
    let predicted: Vec<Openness> = (1..=max_length)
        .map(|n| {
            if open_interval_predicate(n) {
                Openness::Open
            } else {
                Openness::Closed
            }
        })
        .collect();
    let verified_up_to = max_length.min(VERIFIED_CAP);
    for n in 1..=verified_up_to {
        let direct = if is_closed(&prefix.factor(0..n)) {
            Openness::Closed
        } else {
            Openness::Open
        };
        if direct != predicted[n - 1] {
            return Err(Error::Verification {
                op: "analyze_prefixes",
                message: format!(
                    "direct classification of the length-{n} prefix disagrees with the interval formula"
                ),
            });
        }
    }
    let run_lengths = completed_runs(&predicted);
    Ok(FibonacciAnalysis {
        max_length,
        sequence: predicted.clone(),
        predicted,
        verified_up_to,
        run_lengths,
    })
}

/// Lengths of the constancy runs of `sequence`, without the final run
/// (which may be cut short by the end of the sequence).
fn completed_runs(sequence: &[Openness]) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut current = 0usize;
    for (i, item) in sequence.iter().enumerate() {
        if i > 0 && *item != sequence[i - 1] {
            runs.push(current);
            current = 0;
        }
        current += 1;
    }
    runs
}

/// Renders an openness sequence as a compact marker string, `c` for closed
/// and `o` for open.
pub fn marker_string(sequence: &[Openness]) -> String {
    sequence
        .iter()
        .map(|s| match s {
            Openness::Closed => 'c',
            Openness::Open => 'o',
        })
        .collect()
}

/// The two distinguished prefixes around run boundary `i`: the last prefix
/// of the `i`-th run of open markers and the last prefix of the following
/// run of closed markers.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RunBoundary {
    pub index: usize,
    /// Last prefix of the closed run: `s(i+2)`, of length `F(i+2) - 2`,
    /// a central word.
    pub closed_run_end: Word,
    /// Last prefix of the open run: `s(i)·x·y·s(i)`, of length
    /// `2 F(i) - 2`, a semicentral word.
    pub open_run_end: Word,
}

/// Computes and verifies the words at run boundary `i`, for `4 <= i <= 23`:
/// the open run covering `[F(i+1) - 1, 2 F(i) - 2]` and the closed run
/// covering `[2 F(i) - 1, F(i+2) - 2]` that follows it.
pub fn run_boundary_words(i: usize) -> Result<RunBoundary, Error> {
    if i < 4 {
        return Err(Error::InvalidArgument {
            op: "run_boundary_words",
            message: "run boundaries are indexed from 4".into(),
        });
    }
    if i > 23 {
        return Err(Error::TooLong {
            op: "run_boundary_words",
            length: i,
            limit: 23,
        });
    }
    let fib = fibonacci_numbers(i + 2)?;
    let closed_len = fib[i + 1] as usize - 2;
    let open_len = 2 * fib[i - 1] as usize - 2;
    let prefix = fibonacci_prefix(closed_len)?;
    let closed_run_end = prefix.clone();
    let open_run_end = prefix.factor(0..open_len);

    let verify = |ok: bool, claim: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::Verification {
                op: "run_boundary_words",
                message: format!("{claim} fails at boundary {i}"),
            })
        }
    };
    verify(is_central(&closed_run_end), "the closed run ends in a central word")?;
    verify(is_semicentral(&open_run_end), "the open run ends in a semicentral word")?;
    // s(i)·x·y·s(i) with (x, y) the step letters of index i.
    let s_i = prefix.factor(0..fib[i - 1] as usize - 2);
    let (x, y) = step_letters(i);
    let rebuilt: Word = s_i
        .iter()
        .copied()
        .chain([x, y])
        .chain(s_i.iter().copied())
        .collect();
    verify(
        rebuilt == open_run_end,
        "the open run ends in s(i)·x·y·s(i)",
    )?;
    Ok(RunBoundary {
        index: i,
        closed_run_end,
        open_run_end,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sturmian::is_balanced;
    use crate::trapezoidal::classify;

    #[test]
    fn fibonacci_number_values() {
        assert_eq!(
            fibonacci_numbers(10).unwrap(),
            [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
        );
        assert_eq!(fibonacci_numbers(1).unwrap(), [1]);
        assert_eq!(*fibonacci_numbers(93).unwrap().last().unwrap(), 12200160415121876738);
        assert!(fibonacci_numbers(0).is_err());
        assert!(fibonacci_numbers(94).is_err());
    }

    #[test]
    fn prefix_values() {
        assert_eq!(fibonacci_prefix(0).unwrap(), Word::new());
        assert_eq!(fibonacci_prefix(1).unwrap().to_string(), "a");
        assert_eq!(fibonacci_prefix(2).unwrap().to_string(), "ab");
        assert_eq!(fibonacci_prefix(11).unwrap().to_string(), "abaababaaba");
        assert_eq!(
            fibonacci_prefix(20).unwrap().to_string(),
            "abaababaabaababaabab"
        );
        assert!(fibonacci_prefix(MAX_ANALYSIS_LEN + 1).is_err());
    }

    #[test]
    fn prefix_matches_the_golden_ratio_characterization() {
        // The n-th letter (1-based) is `a` exactly when
        // ⌊(n + 1)·φ⌋ - ⌊n·φ⌋ = 2, with φ the golden ratio.
        let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
        let prefix = fibonacci_prefix(500).unwrap();
        for n in 1..=500usize {
            let step = ((n + 1) as f64 * golden).floor() - (n as f64 * golden).floor();
            let expected = if step == 2.0 { Letter::A } else { Letter::B };
            assert_eq!(prefix[n - 1], expected, "position {n}");
        }
    }

    #[test]
    fn prefixes_are_balanced() {
        let prefix = fibonacci_prefix(200).unwrap();
        for n in [1, 2, 3, 5, 13, 21, 50, 100, 137, 200] {
            assert!(is_balanced(&prefix.factor(0..n)), "length {n}");
        }
    }

    #[test]
    fn palindromic_prefix_list() {
        let s = palindromic_prefixes(7).unwrap();
        let strings: Vec<String> = s.iter().map(|w| w.to_string()).collect();
        assert_eq!(strings, ["", "a", "aba", "abaaba", "abaababaaba"]);
        for word in &s {
            assert!(word.is_palindrome(), "{word}");
            assert!(is_central(word), "{word}");
        }
        assert!(palindromic_prefixes(2).is_err());
        assert!(palindromic_prefixes(31).is_err());
    }

    #[test]
    fn palindromic_prefix_recurrence() {
        let s = palindromic_prefixes(14).unwrap();
        // s[j] holds s(j + 3).
        let get = |i: usize| &s[i - 3];
        for i in 4..=13 {
            let (x, y) = step_letters(i);
            let forward: Word = get(i)
                .iter()
                .copied()
                .chain([x, y])
                .chain(get(i - 1).iter().copied())
                .collect();
            let backward: Word = get(i - 1)
                .iter()
                .copied()
                .chain([y, x])
                .chain(get(i).iter().copied())
                .collect();
            assert_eq!(&forward, get(i + 1), "forward recurrence at {i}");
            assert_eq!(&backward, get(i + 1), "backward recurrence at {i}");
        }
    }

    #[test]
    fn step_letter_parity() {
        assert_eq!(step_letters(4), (Letter::B, Letter::A));
        assert_eq!(step_letters(5), (Letter::A, Letter::B));
    }

    #[test]
    fn openness_markers_for_the_first_twenty_prefixes() {
        let analysis = analyze_prefixes(20).unwrap();
        assert_eq!(marker_string(&analysis.sequence), "cococcoocccoooccccco");
        assert_eq!(analysis.verified_up_to, 20);
        assert_eq!(analysis.run_lengths, [1, 1, 1, 1, 2, 2, 3, 3, 5]);
    }

    #[test]
    fn interval_predicate_matches_direct_classification() {
        let prefix = fibonacci_prefix(500).unwrap();
        for n in 1..=500 {
            assert_eq!(
                open_interval_predicate(n),
                !is_closed(&prefix.factor(0..n)),
                "length {n}"
            );
        }
    }

    #[test]
    fn run_lengths_are_doubled_fibonacci_numbers() {
        let analysis = analyze_prefixes(500).unwrap();
        let fib = fibonacci_numbers(20).unwrap();
        let expected: Vec<usize> = fib
            .iter()
            .flat_map(|&f| [f as usize, f as usize])
            .take(analysis.run_lengths.len())
            .collect();
        assert_eq!(analysis.run_lengths, expected);
    }

    #[test]
    fn analysis_validates_its_arguments() {
        assert!(analyze_prefixes(0).is_err());
        assert!(analyze_prefixes(MAX_ANALYSIS_LEN + 1).is_err());
        assert!(analyze_prefixes(MAX_ANALYSIS_LEN).is_ok());
    }

    #[test]
    fn run_boundaries_small_cases() {
        let boundary = run_boundary_words(4).unwrap();
        assert_eq!(boundary.open_run_end.to_string(), "abaa");
        assert_eq!(boundary.closed_run_end.to_string(), "abaaba");

        let boundary = run_boundary_words(5).unwrap();
        assert_eq!(boundary.open_run_end.to_string(), "abaababa");
        assert_eq!(boundary.closed_run_end.to_string(), "abaababaaba");
    }

    #[test]
    fn run_boundaries_verify_up_to_twelve() {
        for i in 4..=12 {
            let boundary = run_boundary_words(i).unwrap();
            let fib = fibonacci_numbers(i + 2).unwrap();
            assert_eq!(boundary.closed_run_end.len() as u64, fib[i + 1] - 2);
            assert_eq!(boundary.open_run_end.len() as u64, 2 * fib[i - 1] - 2);
            // The closed run end is a closed palindomic Sturmian prefix; the
            // open run end is open and semicentral; verified internally, but
            // assert the openness here too.
            let closed_report = classify(&boundary.closed_run_end).unwrap();
            assert!(closed_report.is_palindrome && closed_report.is_sturmian);
            assert_eq!(closed_report.openness, crate::trapezoidal::Openness::Closed);
            let open_report = classify(&boundary.open_run_end).unwrap();
            assert!(open_report.is_semicentral);
            assert_eq!(open_report.openness, crate::trapezoidal::Openness::Open);
        }
        assert!(run_boundary_words(3).is_err());
        assert!(run_boundary_words(24).is_err());
    }
}
