//! Counting: closed-form enumeration of the word classes by length, an
//! exhaustive brute-force census that double-checks every formula, and
//! class-driven generation of word lists.
//!
//! With `φ` Euler's totient function, the closed forms are, for length `n`:
//!
//! * balanced (finite Sturmian) words: `1 + Σ_{i=1..n} (n - i + 1) φ(i)`;
//! * non-Sturmian trapezoidal words: `Σ_{i=0..⌊(n-4)/2⌋} 2 (n - 2i - 3) φ(i + 2)`;
//! * trapezoidal words: the sum of the previous two;
//! * central words: `φ(n + 2)`;
//! * semicentral words: `2 φ(n/2 + 1)` for even `n ≥ 2`, otherwise `0`.

use serde::Serialize;

use crate::classes::WordClass;
use crate::error::Error;
use crate::special::de_luca_parameters;
use crate::sturmian::{central_words, is_balanced, is_central};
use crate::word::{word_from_bits, words_of_length, Letter, Word};

/// Largest argument accepted by the closed-form counting functions; keeps
/// the totient summations comfortably fast and far from `u64` overflow.
const MAX_FORMULA_LEN: usize = 100_000;

/// Largest word length the exhaustive census will sweep (`2^n` words per
/// length).
pub const MAX_CENSUS_LEN: usize = 24;

/// Largest word length accepted by [`generate`] and
/// [`nonsturmian_trapezoidal_by_construction`].
pub const MAX_GENERATE_LEN: usize = 20;

/// Euler's totient `φ(n)`, by trial factorization. Errors on `n = 0`.
pub fn euler_phi(n: u64) -> Result<u64, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument {
            op: "euler_phi",
            message: "the totient is defined on positive integers".into(),
        });
    }
    let mut remaining = n;
    let mut phi = n;
    let mut d = 2;
    while d * d <= remaining {
        if remaining.is_multiple_of(d) {
            phi -= phi / d;
            while remaining.is_multiple_of(d) {
                remaining /= d;
            }
        }
        d += 1;
    }
    if remaining > 1 {
        phi -= phi / remaining;
    }
    Ok(phi)
}

fn check_formula_length(op: &'static str, n: usize) -> Result<(), Error> {
    if n > MAX_FORMULA_LEN {
        return Err(Error::TooLong {
            op,
            length: n,
            limit: MAX_FORMULA_LEN,
        });
    }
    Ok(())
}

/// How many balanced (finite Sturmian) words of length `n` there are:
/// `1 + Σ_{i=1..n} (n - i + 1) φ(i)`.
pub fn sturmian_count(n: usize) -> Result<u64, Error> {
    check_formula_length("sturmian_count", n)?;
    let mut total = 1;
    for i in 1..=n {
        total += (n - i + 1) as u64 * euler_phi(i as u64)?;
    }
    Ok(total)
}

/// How many trapezoidal words of length `n` are not balanced:
/// `Σ_{i=0..⌊(n-4)/2⌋} 2 (n - 2i - 3) φ(i + 2)`. The shortest examples
/// (`aabb`, `bbaa`) have length 4.
pub fn nonsturmian_trapezoidal_count(n: usize) -> Result<u64, Error> {
    check_formula_length("nonsturmian_trapezoidal_count", n)?;
    if n < 4 {
        return Ok(0);
    }
    let mut total = 0;
    for i in 0..=(n - 4) / 2 {
        total += 2 * (n - 2 * i - 3) as u64 * euler_phi(i as u64 + 2)?;
    }
    Ok(total)
}

/// How many trapezoidal words of length `n` there are.
pub fn trapezoidal_total(n: usize) -> Result<u64, Error> {
    Ok(sturmian_count(n)? + nonsturmian_trapezoidal_count(n)?)
}

/// How many central words of length `n` there are: `φ(n + 2)`.
pub fn central_count(n: usize) -> Result<u64, Error> {
    check_formula_length("central_count", n)?;
    euler_phi(n as u64 + 2)
}

/// How many semicentral words of length `n` there are: `2 φ(n/2 + 1)` for
/// even `n >= 2`, and `0` for odd `n` (and for `n = 0`).
pub fn semicentral_count(n: usize) -> Result<u64, Error> {
    check_formula_length("semicentral_count", n)?;
    if n == 0 || n % 2 == 1 {
        return Ok(0);
    }
    Ok(2 * euler_phi(n as u64 / 2 + 1)?)
}

/// Settings for the exhaustive census.
#[derive(Clone, Debug)]
pub struct CensusConfig {
    /// Sweep all `2^n` words for each `n` up to this length (inclusive);
    /// between 1 and [`MAX_CENSUS_LEN`].
    pub max_length: usize,
    /// Number of worker threads; `0` picks the machine's available
    /// parallelism. The result is independent of this setting.
    pub parallelism: usize,
    pub count_sturmian: bool,
    pub count_trapezoidal: bool,
    pub count_semicentral: bool,
    pub count_central: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            max_length: 16,
            parallelism: 0,
            count_sturmian: true,
            count_trapezoidal: true,
            count_semicentral: true,
            count_central: true,
        }
    }
}

/// One length's worth of counts. The plain columns come from the closed
/// forms; the `_brute` columns hold the corresponding exhaustive counts when
/// a census produced them.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LedgerRow {
    pub n: usize,
    pub sturmian: u64,
    pub nonsturmian_trapezoidal: u64,
    pub trapezoidal_total: u64,
    pub semicentral: u64,
    pub central: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sturmian_brute: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonsturmian_trapezoidal_brute: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trapezoidal_total_brute: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semicentral_brute: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub central_brute: Option<u64>,
}

impl LedgerRow {
    fn from_formulas(n: usize) -> Result<LedgerRow, Error> {
        Ok(LedgerRow {
            n,
            sturmian: sturmian_count(n)?,
            nonsturmian_trapezoidal: nonsturmian_trapezoidal_count(n)?,
            trapezoidal_total: trapezoidal_total(n)?,
            semicentral: semicentral_count(n)?,
            central: central_count(n)?,
            sturmian_brute: None,
            nonsturmian_trapezoidal_brute: None,
            trapezoidal_total_brute: None,
            semicentral_brute: None,
            central_brute: None,
        })
    }

    fn columns(&self) -> [(&'static str, u64, Option<u64>); 5] {
        [
            ("sturmian", self.sturmian, self.sturmian_brute),
            (
                "nonsturmian_trapezoidal",
                self.nonsturmian_trapezoidal,
                self.nonsturmian_trapezoidal_brute,
            ),
            (
                "trapezoidal_total",
                self.trapezoidal_total,
                self.trapezoidal_total_brute,
            ),
            ("semicentral", self.semicentral, self.semicentral_brute),
            ("central", self.central, self.central_brute),
        ]
    }
}

/// A table of counts by length.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CountLedger {
    pub rows: Vec<LedgerRow>,
}

impl CountLedger {
    /// Renders the table as tab-separated values with a header line. Brute
    /// columns appear after the formula columns, for whichever classes any
    /// row has them.
    pub fn to_tsv(&self) -> String {
        let brute_present: Vec<bool> = (0..5)
            .map(|c| self.rows.iter().any(|row| row.columns()[c].2.is_some()))
            .collect();
        let mut out = String::from("n");
        if let Some(first) = self.rows.first() {
            for (name, _, _) in first.columns() {
                out.push('\t');
                out.push_str(name);
            }
            for (c, (name, _, _)) in first.columns().iter().enumerate() {
                if brute_present[c] {
                    out.push('\t');
                    out.push_str(name);
                    out.push_str("_brute");
                }
            }
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.n.to_string());
            for (_, formula, _) in row.columns() {
                out.push('\t');
                out.push_str(&formula.to_string());
            }
            for (c, (_, _, brute)) in row.columns().iter().enumerate() {
                if brute_present[c] {
                    out.push('\t');
                    out.push_str(&brute.map_or_else(|| "-".into(), |v| v.to_string()));
                }
            }
            out.push('\n');
        }
        out
    }

    /// Checks every brute count against its closed form, reporting the first
    /// discrepancy as a `Verification` error.
    pub fn verify(&self) -> Result<(), Error> {
        for row in &self.rows {
            for (name, formula, brute) in row.columns() {
                if let Some(brute) = brute {
                    if brute != formula {
                        return Err(Error::Verification {
                            op: "census",
                            message: format!(
                                "{name} at length {}: formula gives {formula}, enumeration gives {brute}",
                                row.n
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Default)]
struct Tally {
    sturmian: u64,
    trapezoidal: u64,
    semicentral: u64,
    central: u64,
}

impl Tally {
    fn add(&mut self, other: Tally) {
        self.sturmian += other.sturmian;
        self.trapezoidal += other.trapezoidal;
        self.semicentral += other.semicentral;
        self.central += other.central;
    }
}

fn tally_range(n: usize, lo: u64, hi: u64, config: &CensusConfig) -> Tally {
    let mut tally = Tally::default();
    let need_parameters = config.count_trapezoidal || config.count_semicentral;
    let need_balance = config.count_sturmian || config.count_trapezoidal;
    for bits in lo..hi {
        let word = word_from_bits(bits, n);
        let balanced = need_balance && is_balanced(&word);
        if balanced {
            tally.sturmian += 1;
        }
        if need_parameters {
            let p = de_luca_parameters(&word).expect("word is non-empty");
            let trapezoidal = p.r + p.k == n;
            if trapezoidal {
                tally.trapezoidal += 1;
                let witnesses_coincide = match (&p.r_w, &p.l_w) {
                    (Some(r_w), Some(l_w)) => {
                        r_w == &p.h_w && l_w == &p.h_w && p.h_w == p.k_w
                    }
                    _ => false,
                };
                if witnesses_coincide {
                    tally.semicentral += 1;
                }
            }
        }
        if config.count_central && is_central(&word) {
            tally.central += 1;
        }
    }
    tally
}

/// Counts the classes of every word of each length `1..=max_length` by
/// exhaustive sweep and pairs the results with the closed forms. The sweep
/// is split across threads in contiguous chunks and merged by addition, so
/// the outcome does not depend on the parallelism.
pub fn census(config: &CensusConfig) -> Result<CountLedger, Error> {
    if config.max_length == 0 {
        return Err(Error::InvalidArgument {
            op: "census",
            message: "max_length must be at least 1".into(),
        });
    }
    if config.max_length > MAX_CENSUS_LEN {
        return Err(Error::TooLong {
            op: "census",
            length: config.max_length,
            limit: MAX_CENSUS_LEN,
        });
    }
    let threads = match config.parallelism {
        0 => std::thread::available_parallelism().map_or(1, |p| p.get()),
        t => t,
    };

    let mut rows = Vec::with_capacity(config.max_length);
    for n in 1..=config.max_length {
        let total: u64 = 1 << n;
        let workers = threads.min(total as usize).max(1) as u64;
        let chunk = total.div_ceil(workers);
        let mut merged = Tally::default();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|t| {
                    let lo = t * chunk;
                    let hi = total.min(lo + chunk);
                    scope.spawn(move || tally_range(n, lo, hi, config))
                })
                .collect();
            for handle in handles {
                merged.add(handle.join().expect("census worker panicked"));
            }
        });

        let mut row = LedgerRow::from_formulas(n)?;
        if config.count_sturmian {
            row.sturmian_brute = Some(merged.sturmian);
        }
        if config.count_trapezoidal {
            row.trapezoidal_total_brute = Some(merged.trapezoidal);
            if config.count_sturmian {
                row.nonsturmian_trapezoidal_brute = Some(merged.trapezoidal - merged.sturmian);
            }
        }
        if config.count_semicentral {
            row.semicentral_brute = Some(merged.semicentral);
        }
        if config.count_central {
            row.central_brute = Some(merged.central);
        }
        rows.push(row);
    }
    Ok(CountLedger { rows })
}

/// The closed-form table alone, for lengths `1..=max_length`, with no
/// brute-force columns.
pub fn formula_ledger(max_length: usize) -> Result<CountLedger, Error> {
    let rows = (1..=max_length)
        .map(LedgerRow::from_formulas)
        .collect::<Result<_, _>>()?;
    Ok(CountLedger { rows })
}

/// Lists every word of length `n` belonging to `class`, in lexicographic
/// order (`a < b`). Exhaustive over `2^n` words, so `n` is capped at
/// [`MAX_GENERATE_LEN`].
pub fn generate(n: usize, class: &dyn WordClass) -> Result<Vec<Word>, Error> {
    if n == 0 {
        return Err(Error::InvalidArgument {
            op: "generate",
            message: "length must be at least 1".into(),
        });
    }
    if n > MAX_GENERATE_LEN {
        return Err(Error::TooLong {
            op: "generate",
            length: n,
            limit: MAX_GENERATE_LEN,
        });
    }
    Ok(words_of_length(n).filter(|w| class.contains(w)).collect())
}

/// Builds every non-Sturmian trapezoidal word of length `n` constructively
/// instead of by filtering: for each central word `u`, each assignment of
/// distinct letters `x, y`, and each split point `j` with
/// `|u| + 2 <= j <= n - |u| - 2`, the word `p·q` where the reversal of `p`
/// is the length-`j` prefix of `(z_f)^∞` and `q` is the length-`(n-j)`
/// prefix of `(z_g)^∞`, with `z_f`, `z_g` the fractional roots of
/// `f = x·u·x` and `g = y·u·y`.
///
/// The number of `(u, x/y, j)` triples is exactly the closed-form count, and
/// the output — deduplicated defensively through a set — is checked against
/// it, so a collision between triples would surface as a `Verification`
/// error.
pub fn nonsturmian_trapezoidal_by_construction(n: usize) -> Result<Vec<Word>, Error> {
    if n > MAX_GENERATE_LEN {
        return Err(Error::TooLong {
            op: "nonsturmian_trapezoidal_by_construction",
            length: n,
            limit: MAX_GENERATE_LEN,
        });
    }
    let mut out = std::collections::BTreeSet::new();
    if n >= 4 {
        for i in 0..=(n - 4) / 2 {
            for u in central_words(i) {
                for (x, y) in [(Letter::A, Letter::B), (Letter::B, Letter::A)] {
                    let f: Word = std::iter::once(x)
                        .chain(u.iter().copied())
                        .chain(std::iter::once(x))
                        .collect();
                    let g: Word = std::iter::once(y)
                        .chain(u.iter().copied())
                        .chain(std::iter::once(y))
                        .collect();
                    let z_f = f.period_data()?.fractional_root;
                    let z_g = g.period_data()?.fractional_root;
                    for j in i + 2..=n - i - 2 {
                        let p = z_f.periodic_extension(j).reversal();
                        let q = z_g.periodic_extension(n - j);
                        out.insert(p.iter().chain(q.iter()).copied().collect::<Word>());
                    }
                }
            }
        }
    }
    let expected = nonsturmian_trapezoidal_count(n)?;
    if out.len() as u64 != expected {
        return Err(Error::Verification {
            op: "nonsturmian_trapezoidal_by_construction",
            message: format!(
                "length {n}: built {} distinct words, closed form expects {expected}",
                out.len()
            ),
        });
    }
    Ok(out.into_iter().collect())
}
