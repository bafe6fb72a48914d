//! `trapwords` — classify, decompose, count and generate trapezoidal words
//! over the alphabet `{a, b}`.
//!
//! Exit codes: `0` on success, `1` when a verification or formula/brute
//! comparison fails, `2` on usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use trapwords::classes::{self, WordClass};
use trapwords::enumeration::{
    census, formula_ledger, generate, CensusConfig, CountLedger, MAX_CENSUS_LEN,
};
use trapwords::fibonacci::{analyze_prefixes, marker_string};
use trapwords::{classify, Error, Openness, Word};

#[derive(Parser)]
#[command(
    name = "trapwords",
    version,
    about = "Classify, decompose, count and generate trapezoidal words over {a, b}"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a word: class memberships, parameters, decompositions.
    Analyze(WordInput),
    /// Print the factor complexity profile of a word.
    Complexity(WordInput),
    /// Count the words of a class at one length.
    Count {
        /// Class name; see `generate --help` for the list.
        class: String,
        /// Word length.
        n: usize,
        /// Compare the closed form against brute-force enumeration; exits
        /// with status 1 on a mismatch.
        #[arg(long, conflicts_with = "brute")]
        both: bool,
        /// Count by brute-force enumeration instead of the closed form.
        #[arg(long)]
        brute: bool,
    },
    /// Print the enumeration table, one row per length.
    Table {
        /// Largest length to tabulate.
        #[arg(long, default_value_t = 20)]
        max: usize,
        /// Add brute-force columns and verify them against the formulas;
        /// exits with status 1 on a mismatch.
        #[arg(long)]
        brute: bool,
        /// Largest length swept exhaustively when --brute is given.
        #[arg(long, default_value_t = 16)]
        census_max: usize,
        /// Census worker threads; 0 picks the available parallelism.
        /// Defaults to the TRAPWORDS_CENSUS_THREADS environment variable.
        #[arg(long, default_value_t = default_census_threads())]
        threads: usize,
    },
    /// Classify the Fibonacci-word prefixes as open (o) or closed (c).
    Fibonacci {
        /// Classify the prefixes of length 1 through MAX.
        #[arg(default_value_t = 100)]
        max: usize,
        /// Also report the lengths of the completed marker runs.
        #[arg(long)]
        runs: bool,
    },
    /// List every word of a class at one length, in lexicographic order.
    Generate {
        /// One of: trapezoidal, sturmian, central, semicentral,
        /// closed-trapezoidal, open-trapezoidal, rich.
        class: String,
        /// Word length.
        n: usize,
    },
}

#[derive(Args)]
struct WordInput {
    /// The word, over the letters a and b ("eps" for the empty word).
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    word: Option<String>,
    /// Read the word from a file (surrounding whitespace is ignored).
    #[arg(long)]
    file: Option<PathBuf>,
}

impl WordInput {
    fn resolve(&self) -> Result<Word> {
        let raw = match (&self.word, &self.file) {
            (Some(word), None) => word.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?,
            _ => unreachable!("clap enforces exactly one word source"),
        };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed == "eps" || trimmed == "ε" {
            return Ok(Word::new());
        }
        Ok(trimmed.parse::<Word>()?)
    }
}

fn default_census_threads() -> usize {
    std::env::var("TRAPWORDS_CENSUS_THREADS")
        .ok()
        .and_then(|value| value.parse().ok())
        .unwrap_or(0)
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes (`trapwords ... | head`),
    // like other line-oriented tools, instead of panicking on the failed
    // write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            if matches!(err.downcast_ref::<Error>(), Some(Error::Verification { .. })) {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Analyze(input) => analyze(&input.resolve()?, cli.format),
        Command::Complexity(input) => complexity(&input.resolve()?, cli.format),
        Command::Count {
            class,
            n,
            both,
            brute,
        } => count(class, *n, *both, *brute, cli.format),
        Command::Table {
            max,
            brute,
            census_max,
            threads,
        } => table(*max, *brute, *census_max, *threads, cli.format),
        Command::Fibonacci { max, runs } => fibonacci(*max, *runs, cli.format),
        Command::Generate { class, n } => generate_command(class, *n, cli.format),
    }
}

/// Renders a word, with `eps` standing in for the empty one.
fn show(word: &Word) -> String {
    if word.is_empty() {
        "eps".into()
    } else {
        word.to_string()
    }
}

fn lookup_class(name: &str) -> Result<&'static dyn WordClass> {
    classes::lookup(name).ok_or_else(|| {
        let names: Vec<&str> = classes::CLASSES.iter().map(|class| class.name()).collect();
        anyhow!("unknown class `{name}`; available classes: {}", names.join(", "))
    })
}

fn analyze(word: &Word, format: Format) -> Result<ExitCode> {
    let report = classify(word)?;
    let profile = word.factor_complexity();
    match format {
        Format::Json => {
            let value = json!({ "report": report, "complexity": profile });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Tsv => {
            for (key, value) in report_rows(&report, &profile) {
                println!("{key}\t{value}");
            }
        }
        Format::Plain => {
            let rows = report_rows(&report, &profile);
            let width = rows.iter().map(|(key, _)| key.len()).max().unwrap_or(0);
            for (key, value) in &rows {
                println!("{key:<width$}  {value}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report_rows(
    report: &trapwords::TrapezoidalReport,
    profile: &[usize],
) -> Vec<(&'static str, String)> {
    let yes_no = |flag: bool| if flag { "yes" } else { "no" }.to_string();
    let optional = |witness: &Option<Word>| witness.as_ref().map_or("-".into(), show);
    let parameters = &report.parameters;
    let mut rows = vec![
        ("word", show(&report.word)),
        ("length", report.word.len().to_string()),
        ("trapezoidal", yes_no(report.is_trapezoidal)),
        ("sturmian", yes_no(report.is_sturmian)),
        ("rich", yes_no(report.is_rich)),
        ("palindrome", yes_no(report.is_palindrome)),
        (
            "openness",
            match report.openness {
                Openness::Open => "open",
                Openness::Closed => "closed",
            }
            .to_string(),
        ),
        ("semicentral", yes_no(report.is_semicentral)),
        ("H", parameters.h.to_string()),
        ("K", parameters.k.to_string()),
        ("L", parameters.l.to_string()),
        ("R", parameters.r.to_string()),
        ("h_w", show(&parameters.h_w)),
        ("k_w", show(&parameters.k_w)),
        ("l_w", optional(&parameters.l_w)),
        ("r_w", optional(&parameters.r_w)),
    ];
    if let Some(witness) = &report.closed_witness {
        rows.push(("closed_witness", show(witness)));
    }
    if let Some(pq) = &report.pq_split {
        rows.push(("p", show(&pq.p)));
        rows.push(("q", show(&pq.q)));
    }
    if let Some(triple) = &report.semicentral_triple {
        rows.push(("u", show(&triple.u)));
        rows.push(("x", triple.x.to_string()));
        rows.push(("y", triple.y.to_string()));
    }
    let profile_text: Vec<String> = profile.iter().map(ToString::to_string).collect();
    rows.push(("complexity", profile_text.join(" ")));
    rows
}

fn complexity(word: &Word, format: Format) -> Result<ExitCode> {
    let profile = word.factor_complexity();
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "word": word.to_string(),
                    "complexity": profile,
                }))?
            );
        }
        Format::Tsv => {
            println!("n\tfactors");
            for (n, value) in profile.iter().enumerate() {
                println!("{n}\t{value}");
            }
        }
        Format::Plain => {
            let text: Vec<String> = profile.iter().map(ToString::to_string).collect();
            println!("{}", text.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn count(name: &str, n: usize, both: bool, brute: bool, format: Format) -> Result<ExitCode> {
    let class = lookup_class(name)?;
    let formula = class.formula_count(n);

    if both {
        let formula = formula.ok_or_else(|| {
            anyhow!(
                "class `{}` has no closed form to compare against; use --brute",
                class.name()
            )
        })?;
        let brute_value = generate(n, class)?.len() as u64;
        let verdict = if formula == brute_value {
            "MATCH"
        } else {
            "MISMATCH"
        };
        match format {
            Format::Json => println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "class": class.name(),
                    "n": n,
                    "formula": formula,
                    "brute": brute_value,
                    "verdict": verdict,
                }))?
            ),
            Format::Tsv => {
                println!("class\tn\tformula\tbrute\tverdict");
                println!("{}\t{n}\t{formula}\t{brute_value}\t{verdict}", class.name());
            }
            Format::Plain => {
                println!(
                    "{}({n}): formula={formula} brute={brute_value} {verdict}",
                    class.name()
                );
            }
        }
        return Ok(if formula == brute_value {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }

    let (value, source) = if brute {
        (generate(n, class)?.len() as u64, "brute")
    } else if let Some(formula) = formula {
        (formula, "formula")
    } else {
        eprintln!(
            "note: class `{}` has no closed form; counting by enumeration",
            class.name()
        );
        (generate(n, class)?.len() as u64, "brute")
    };
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "class": class.name(),
                "n": n,
                "count": value,
                "source": source,
            }))?
        ),
        Format::Tsv => {
            println!("class\tn\tcount\tsource");
            println!("{}\t{n}\t{value}\t{source}", class.name());
        }
        Format::Plain => println!("{value}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn table(
    max: usize,
    brute: bool,
    census_max: usize,
    threads: usize,
    format: Format,
) -> Result<ExitCode> {
    if max == 0 {
        bail!("--max must be at least 1");
    }
    if census_max == 0 || census_max > MAX_CENSUS_LEN {
        bail!("--census-max must be between 1 and {MAX_CENSUS_LEN}");
    }
    let ledger = if brute {
        let swept = census_max.min(max);
        let mut ledger = census(&CensusConfig {
            max_length: swept,
            parallelism: threads,
            ..CensusConfig::default()
        })?;
        if max > swept {
            ledger
                .rows
                .extend(formula_ledger(max)?.rows.into_iter().skip(swept));
        }
        ledger
    } else {
        formula_ledger(max)?
    };

    print_ledger(&ledger, format)?;
    if brute {
        if let Err(err) = ledger.verify() {
            eprintln!("MISMATCH: {err}");
            return Ok(ExitCode::from(1));
        }
        eprintln!(
            "verified: enumeration matches the closed forms up to length {}",
            census_max.min(max)
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn print_ledger(ledger: &CountLedger, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(ledger)?),
        Format::Tsv => print!("{}", ledger.to_tsv()),
        Format::Plain => {
            let tsv = ledger.to_tsv();
            let rows: Vec<Vec<&str>> = tsv.lines().map(|line| line.split('\t').collect()).collect();
            let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
            let mut widths = vec![0usize; columns];
            for row in &rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            for row in &rows {
                let cells: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(i, cell)| format!("{cell:>width$}", width = widths[i]))
                    .collect();
                println!("{}", cells.join("  "));
            }
        }
    }
    Ok(())
}

fn fibonacci(max: usize, runs: bool, format: Format) -> Result<ExitCode> {
    let analysis = analyze_prefixes(max)?;
    let markers = marker_string(&analysis.sequence);
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "max_length": analysis.max_length,
                    "verified_up_to": analysis.verified_up_to,
                    "markers": markers,
                    "run_lengths": analysis.run_lengths,
                }))?
            );
        }
        Format::Tsv => {
            if runs {
                println!("run\tlength");
                for (i, length) in analysis.run_lengths.iter().enumerate() {
                    println!("{}\t{length}", i + 1);
                }
            } else {
                println!("n\topenness");
                for (i, openness) in analysis.sequence.iter().enumerate() {
                    let text = match openness {
                        Openness::Open => "open",
                        Openness::Closed => "closed",
                    };
                    println!("{}\t{text}", i + 1);
                }
            }
        }
        Format::Plain => {
            println!("{markers}");
            if runs {
                let text: Vec<String> =
                    analysis.run_lengths.iter().map(ToString::to_string).collect();
                println!("runs: {}", text.join(" "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn generate_command(name: &str, n: usize, format: Format) -> Result<ExitCode> {
    let class = lookup_class(name)?;
    let words = generate(n, class)?;
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "class": class.name(),
                    "n": n,
                    "count": words.len(),
                    "words": words,
                }))?
            );
        }
        Format::Tsv => {
            println!("word");
            for word in &words {
                println!("{}", show(word));
            }
        }
        Format::Plain => {
            for word in &words {
                println!("{}", show(word));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
