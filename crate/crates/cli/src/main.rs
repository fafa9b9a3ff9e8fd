//! `gpsw`: generate, normalize and analyze generalized pseudostandard words.

use std::fmt::Display;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pseudostandard::{
    generate_chain_until, generate_word_prefix, normalize, periodicity_witness, search, verify_corollary,
    verify_lemma_recurrences, verify_proposition, DirectiveBiSequence, Letter, Morphism, VerificationOutcome,
};
use serde_json::json;

/// Longest prefix accepted without `--force`.
const MAX_CHARS: usize = 10_000_000;
/// Largest image length searched without `--force`.
const MAX_SEARCH_IMAGE_LEN: usize = 6;

#[derive(Parser)]
#[command(name = "gpsw", version, about = "Generalized pseudostandard words over {0,1}")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Allow prefix lengths above 10^7 and searches beyond image length 6.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Prefix of the word generated by a directive bi-sequence.
    Generate {
        #[arg(long)]
        delta: String,
        #[arg(long)]
        theta: String,
        #[arg(long)]
        chars: usize,
        /// Number of chain prefixes w_i to list (default: all no longer than --chars).
        #[arg(long)]
        steps: Option<usize>,
        /// Also list the chain w_1, w_2, ... with their antimorphism types.
        #[arg(long)]
        show_prefixes: bool,
    },
    /// Normalize a directive bi-sequence.
    Normalize {
        #[arg(long)]
        delta: String,
        #[arg(long)]
        theta: String,
    },
    /// Decide whether the generated word is periodic.
    Periodic {
        #[arg(long)]
        delta: String,
        #[arg(long)]
        theta: String,
    },
    /// Prefix of a morphism's fixed point.
    FixedPoint {
        #[arg(long)]
        morphism: String,
        #[arg(long, default_value = "0")]
        letter: String,
        #[arg(long)]
        chars: usize,
    },
    /// Check the φ_k recurrences, morphism identity or fixed point identity.
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        what: What,
        /// Largest prefix length covered.
        #[arg(long)]
        limit: usize,
    },
    /// Classify every morphism with images up to the given length.
    Search {
        #[arg(long, default_value_t = 4)]
        max_image_len: usize,
        #[arg(long, default_value_t = 4096)]
        depth: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Lemma,
    Proposition,
    Corollary,
}

/// Failure reported as a one-line diagnostic with exit status 2.
struct Invalid(String);

impl<E: Display> From<E> for Invalid {
    fn from(e: E) -> Self {
        Invalid(e.to_string())
    }
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, Invalid> {
    Err(Invalid(msg.into()))
}

fn check_chars(chars: usize, force: bool) -> Result<(), Invalid> {
    if chars > MAX_CHARS && !force {
        return invalid(format!("prefix length {chars} exceeds 10^7; pass --force to allow it"));
    }
    Ok(())
}

fn bi_sequence(delta: &str, theta: &str) -> Result<DirectiveBiSequence, Invalid> {
    let delta = delta.parse().map_err(|e| Invalid(format!("--delta {delta:?}: {e}")))?;
    let theta = theta.parse().map_err(|e| Invalid(format!("--theta {theta:?}: {e}")))?;
    Ok(DirectiveBiSequence::new(delta, theta))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Invalid> {
    let json = cli.json;
    match cli.command {
        Command::Generate {
            delta,
            theta,
            chars,
            steps,
            show_prefixes,
        } => {
            check_chars(chars, cli.force)?;
            let lambda = bi_sequence(&delta, &theta)?;
            let word = generate_word_prefix(&lambda, chars)?;
            let chain = if show_prefixes || steps.is_some() {
                let mut chain = generate_chain_until(&lambda, chars)?;
                if let Some(s) = steps {
                    if s > chain.depth() {
                        return invalid(format!(
                            "--steps {s} needs prefixes longer than --chars {chars} (only {} fit)",
                            chain.depth()
                        ));
                    }
                    chain.steps.truncate(s);
                }
                Some(chain)
            } else {
                None
            };
            if json {
                let prefixes = chain.as_ref().map(|c| {
                    (1..=c.depth())
                        .map(|i| {
                            let step = &c.steps[i - 1];
                            json!({
                                "i": i,
                                "len": step.len,
                                "delta": step.delta.to_string(),
                                "theta": step.theta.to_string(),
                                "word": pseudostandard::word::to_string(c.prefix(i)),
                            })
                        })
                        .collect::<Vec<_>>()
                });
                let mut value = json!({
                    "delta": lambda.delta.to_string(),
                    "theta": lambda.theta.to_string(),
                    "chars": chars,
                    "word": word.to_string(),
                });
                if let Some(p) = prefixes {
                    value["prefixes"] = p.into();
                }
                writeln!(out, "{value}")?;
            } else {
                writeln!(out, "{word}")?;
                if let Some(c) = &chain {
                    for i in 1..=c.depth() {
                        let word = pseudostandard::word::to_string(c.prefix(i));
                        writeln!(out, "w_{i}\t{}\t{word}", c.steps[i - 1].theta)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Normalize { delta, theta } => {
            let report = normalize(&bi_sequence(&delta, &theta)?)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&report)?)?;
            } else {
                writeln!(out, "input\t{}", report.input)?;
                writeln!(out, "output\t{}", report.output)?;
                let rules: Vec<&str> = report
                    .prefix_rules_applied
                    .iter()
                    .map(|r| match r {
                        pseudostandard::PrefixRule::AlternatingRR => "i",
                        pseudostandard::PrefixRule::RunThenE => "ii",
                        pseudostandard::PrefixRule::RunThenEE => "iii",
                    })
                    .collect();
                let rules = if rules.is_empty() { "none".to_string() } else { rules.join(",") };
                writeln!(out, "prefix rules\t{rules}")?;
                writeln!(out, "factor rule applications\t{}", report.factor_rule_applications)?;
            }
            Ok(0)
        }
        Command::Periodic { delta, theta } => {
            let witness = periodicity_witness(&bi_sequence(&delta, &theta)?);
            if json {
                writeln!(out, "{}", json!({ "periodic": witness.is_some(), "witness": witness }))?;
            } else {
                match witness {
                    Some(w) => writeln!(out, "periodic a={} theta={} n0={}", w.letter, w.theta, w.n0)?,
                    None => writeln!(out, "aperiodic")?,
                }
            }
            Ok(0)
        }
        Command::FixedPoint { morphism, letter, chars } => {
            check_chars(chars, cli.force)?;
            let phi: Morphism = morphism
                .parse()
                .map_err(|e| Invalid(format!("--morphism {morphism:?}: {e}")))?;
            let a = match letter.as_str() {
                "0" => Letter::Zero,
                "1" => Letter::One,
                _ => return invalid(format!("--letter {letter:?}: expected 0 or 1")),
            };
            let word = phi.fixed_point_prefix(a, chars)?;
            if json {
                writeln!(out, "{}", json!({ "morphism": phi.to_string(), "letter": a.to_string(), "word": word.to_string() }))?;
            } else {
                writeln!(out, "{word}")?;
            }
            Ok(0)
        }
        Command::Verify { k, what, limit } => {
            check_chars(limit, cli.force)?;
            if k == 0 {
                return invalid("--k must be a positive integer");
            }
            let outcome = match what {
                What::Lemma => {
                    let lambda = DirectiveBiSequence::phi_family(k, Letter::Zero);
                    let steps = generate_chain_until(&lambda, limit)?.depth();
                    let needed = 2 * (k + 1) + 1;
                    if steps < needed {
                        return invalid(format!(
                            "--limit {limit} covers {steps} chain prefixes; the lemma check for k = {k} needs {needed}"
                        ));
                    }
                    verify_lemma_recurrences(k, steps)?
                }
                What::Proposition => verify_proposition(k, limit)?,
                What::Corollary => verify_corollary(k, limit)?,
            };
            write_outcome(out, &outcome, json)?;
            Ok(if outcome.pass { 0 } else { 1 })
        }
        Command::Search {
            max_image_len,
            depth,
            jobs,
        } => {
            if max_image_len == 0 {
                return invalid("--max-image-len must be at least 1");
            }
            if max_image_len > MAX_SEARCH_IMAGE_LEN && !cli.force {
                return invalid(format!("--max-image-len {max_image_len} exceeds 6; pass --force to allow it"));
            }
            check_chars(depth, cli.force)?;
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let report = search(max_image_len, depth, jobs.max(1))?;
            report.write_json_lines(&mut *out)?;
            Ok(if report.has_counterexamples() { 1 } else { 0 })
        }
    }
}

fn write_outcome(out: &mut impl Write, o: &VerificationOutcome, json: bool) -> io::Result<()> {
    if json {
        return writeln!(out, "{}", serde_json::to_string(o).map_err(io::Error::other)?);
    }
    let claim = serde_json::to_value(o.claim).ok();
    let claim = claim.as_ref().and_then(|v| v.as_str()).unwrap_or("?");
    if o.pass {
        writeln!(out, "pass {claim} k={} checked={}", o.k, o.range_checked)
    } else {
        writeln!(
            out,
            "FAIL {claim} k={} checked={} first_failure={} {}",
            o.k,
            o.range_checked,
            o.first_failure.map_or("-".to_string(), |f| f.to_string()),
            o.detail.as_deref().unwrap_or("")
        )
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(Invalid(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            2
        }
    };
    if out.flush().is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
