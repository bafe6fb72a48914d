//! Combinatorics of binary words, centred on trapezoidal words — the words
//! with at most `n + 1` distinct factors of each length `n` — and the
//! classes surrounding them: balanced (finite Sturmian) words, rich words,
//! open and closed words, central and semicentral words, and the prefixes
//! of the Fibonacci word.
//!
//! The crate favours verification over trust: every closed-form count has a
//! brute-force twin, structural decompositions re-check the properties they
//! promise before returning, and the equivalent characterizations of each
//! class are implemented as independent oracles that the test suites play
//! against each other.
//!
//! # Example
//!
//! ```
//! use trapwords::{classify, Word};
//!
//! let word: Word = "aaababa".parse()?;
//! let report = classify(&word)?;
//! assert!(report.is_trapezoidal && !report.is_sturmian);
//!
//! // Non-Sturmian trapezoidal words split as p·q with |q| = K.
//! let pq = report.pq_split.unwrap();
//! assert_eq!((pq.p.to_string(), pq.q.to_string()), ("aaa".into(), "baba".into()));
//! # Ok::<(), trapwords::Error>(())
//! ```
//!
//! Counting and generation are driven by the class registry:
//!
//! ```
//! use trapwords::classes;
//! use trapwords::enumeration::{generate, trapezoidal_total};
//!
//! let semicentral = classes::lookup("semicentral").unwrap();
//! assert_eq!(generate(8, semicentral)?.len(), 8);
//! assert_eq!(trapezoidal_total(20)?, 1382);
//! # Ok::<(), trapwords::Error>(())
//! ```

pub mod classes;
pub mod enumeration;
pub mod error;
pub mod fibonacci;
pub mod special;
pub mod sturmian;
pub mod trapezoidal;
pub mod word;

pub use error::Error;
pub use special::{de_luca_parameters, DeLucaParameters};
pub use trapezoidal::{classify, Openness, TrapezoidalReport};
pub use word::{Letter, Word};
