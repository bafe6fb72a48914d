//! A registry of word classes behind a common trait, so membership tests,
//! generation and counting can be driven by a class name chosen at runtime.

use crate::enumeration::{
    central_count, semicentral_count, sturmian_count, trapezoidal_total,
};
use crate::sturmian::{is_balanced, is_central};
use crate::trapezoidal::{is_closed, is_rich, is_semicentral, is_trapezoidal};
use crate::word::Word;

/// A class of binary words. `contains` is total: classes defined only for
/// non-empty words simply exclude `ε`.
pub trait WordClass: Sync {
    /// Stable identifier used for lookup (lowercase, hyphenated).
    fn name(&self) -> &'static str;
    /// One-line human description.
    fn description(&self) -> &'static str;
    /// Membership test.
    fn contains(&self, w: &Word) -> bool;
    /// Closed-form count of the members of length `n`, for the classes
    /// that have one.
    fn formula_count(&self, n: usize) -> Option<u64>;
}

pub struct Trapezoidal;
pub struct Sturmian;
pub struct Central;
pub struct Semicentral;
pub struct ClosedTrapezoidal;
pub struct OpenTrapezoidal;
pub struct Rich;

impl WordClass for Trapezoidal {
    fn name(&self) -> &'static str {
        "trapezoidal"
    }
    fn description(&self) -> &'static str {
        "non-empty words with at most n + 1 distinct factors of each length n"
    }
    fn contains(&self, w: &Word) -> bool {
        !w.is_empty() && is_trapezoidal(w).expect("word is non-empty")
    }
    fn formula_count(&self, n: usize) -> Option<u64> {
        // The closed form would count ε, which the class excludes.
        (n > 0).then(|| trapezoidal_total(n).ok()).flatten()
    }
}

impl WordClass for Sturmian {
    fn name(&self) -> &'static str {
        "sturmian"
    }
    fn description(&self) -> &'static str {
        "balanced words: the a-counts of same-length factors differ by at most 1"
    }
    fn contains(&self, w: &Word) -> bool {
        is_balanced(w)
    }
    fn formula_count(&self, n: usize) -> Option<u64> {
        sturmian_count(n).ok()
    }
}

impl WordClass for Central {
    fn name(&self) -> &'static str {
        "central"
    }
    fn description(&self) -> &'static str {
        "words with coprime periods p, q summing to their length plus 2"
    }
    fn contains(&self, w: &Word) -> bool {
        is_central(w)
    }
    fn formula_count(&self, n: usize) -> Option<u64> {
        central_count(n).ok()
    }
}

impl WordClass for Semicentral {
    fn name(&self) -> &'static str {
        "semicentral"
    }
    fn description(&self) -> &'static str {
        "words u·x·y·u with u central and x, y distinct letters"
    }
    fn contains(&self, w: &Word) -> bool {
        is_semicentral(w)
    }
    fn formula_count(&self, n: usize) -> Option<u64> {
        semicentral_count(n).ok()
    }
}

impl WordClass for ClosedTrapezoidal {
    fn name(&self) -> &'static str {
        "closed-trapezoidal"
    }
    fn description(&self) -> &'static str {
        "trapezoidal words with a border occurring only as a prefix and suffix"
    }
    fn contains(&self, w: &Word) -> bool {
        !w.is_empty() && is_trapezoidal(w).expect("word is non-empty") && is_closed(w)
    }
    fn formula_count(&self, _n: usize) -> Option<u64> {
        None
    }
}

impl WordClass for OpenTrapezoidal {
    fn name(&self) -> &'static str {
        "open-trapezoidal"
    }
    fn description(&self) -> &'static str {
        "trapezoidal words that are not closed"
    }
    fn contains(&self, w: &Word) -> bool {
        !w.is_empty() && is_trapezoidal(w).expect("word is non-empty") && !is_closed(w)
    }
    fn formula_count(&self, _n: usize) -> Option<u64> {
        None
    }
}

impl WordClass for Rich {
    fn name(&self) -> &'static str {
        "rich"
    }
    fn description(&self) -> &'static str {
        "words with the maximal number |w| + 1 of distinct palindromic factors"
    }
    fn contains(&self, w: &Word) -> bool {
        is_rich(w)
    }
    fn formula_count(&self, _n: usize) -> Option<u64> {
        None
    }
}

/// Every registered class, in the order used for listings.
pub static CLASSES: &[&dyn WordClass] = &[
    &Trapezoidal,
    &Sturmian,
    &Central,
    &Semicentral,
    &ClosedTrapezoidal,
    &OpenTrapezoidal,
    &Rich,
];

/// Finds a class by its registered name.
pub fn lookup(name: &str) -> Option<&'static dyn WordClass> {
    CLASSES.iter().copied().find(|class| class.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::words_of_length;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn lookup_finds_every_registered_class() {
        for class in CLASSES {
            let found = lookup(class.name()).expect("registered name");
            assert_eq!(found.name(), class.name());
            assert!(!class.description().is_empty());
        }
        assert!(lookup("palindromic").is_none());
        assert!(lookup("Trapezoidal").is_none());
    }

    #[test]
    fn registered_names_are_unique() {
        let mut names: Vec<&str> = CLASSES.iter().map(|c| c.name()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), CLASSES.len());
    }

    #[test]
    fn membership_spot_checks() {
        let cases = [
            ("trapezoidal", "aaababa", true),
            ("trapezoidal", "aabbaa", false),
            ("sturmian", "aababaaba", true),
            ("sturmian", "aaababa", false),
            ("central", "aabaa", true),
            ("central", "aba", true),
            ("central", "ab", false),
            ("semicentral", "abaababa", true),
            ("semicentral", "abba", false),
            ("closed-trapezoidal", "abaab", true),
            ("closed-trapezoidal", "aaba", false),
            ("open-trapezoidal", "aaba", true),
            ("open-trapezoidal", "abaab", false),
            ("rich", "aabbaa", true),
            ("rich", "aaababbaabbabaaa", false),
        ];
        for (name, word, expected) in cases {
            let class = lookup(name).unwrap();
            assert_eq!(class.contains(&w(word)), expected, "{name}({word})");
        }
    }

    #[test]
    fn empty_word_conventions() {
        let empty = Word::new();
        for (name, expected) in [
            ("trapezoidal", false),
            ("sturmian", true),
            ("central", true),
            ("semicentral", false),
            ("closed-trapezoidal", false),
            ("open-trapezoidal", false),
            ("rich", true),
        ] {
            assert_eq!(
                lookup(name).unwrap().contains(&empty),
                expected,
                "{name}(ε)"
            );
        }
    }

    #[test]
    fn formula_counts_match_membership() {
        for class in CLASSES {
            for n in 0..=10 {
                let Some(formula) = class.formula_count(n) else {
                    continue;
                };
                let brute = words_of_length(n).filter(|x| class.contains(x)).count() as u64;
                assert_eq!(formula, brute, "{} at length {n}", class.name());
            }
        }
    }

    #[test]
    fn classes_without_formulas_return_none() {
        for name in ["closed-trapezoidal", "open-trapezoidal", "rich"] {
            assert_eq!(lookup(name).unwrap().formula_count(8), None);
        }
    }
}
