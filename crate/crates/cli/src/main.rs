use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use semitight::config::{default_crosscheck_lambdas, default_jobs, default_verma_words, parse_kind};
use semitight::{execute, exit, Command, OutputFormat, RunConfig};
use semitight_core::formoracle::{DEFAULT_DEGREE_CAP, DEFAULT_WORD_CAP};
use semitight_core::rootdata::{CartanKind, ReducedWord, Weight};

#[derive(Parser)]
#[command(name = "semitight", version, about = "Tightness and semitightness of PBW monomials X_lambda")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Largest monomial degree the word oracle will attempt.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    max_degree: u64,
    /// Largest weight space (in words) enumerated by `verma`.
    #[arg(long, global = true, default_value_t = DEFAULT_WORD_CAP)]
    max_words: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Sub {
    /// Classify X_lambda: closed form for A5, word oracle otherwise.
    Analyze {
        #[arg(long = "type", default_value = "A5")]
        kind: String,
        /// Comma-separated nonnegative coordinates, e.g. 1,0,2,0,1.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Closed-form zero counts over a box of A5 weights.
    Sweep {
        /// Per-coordinate upper bounds, e.g. 2,2,2,2,2.
        #[arg(long = "box", conflicts_with = "max")]
        bounds: Option<String>,
        /// Same bound N on every coordinate.
        #[arg(long)]
        max: Option<i64>,
    },
    /// Compare the word oracle with the closed form on A5 weights.
    Crosscheck {
        /// Repeatable; defaults to zero and the fundamental weights.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Vec<String>,
    },
    /// Check that two reduced words give the same X_lambda.
    Verma {
        #[arg(long = "type", default_value = "A5")]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        word2: Option<String>,
    },
}

fn weight(s: &str) -> Result<Weight, String> {
    s.parse().map_err(|e| format!("bad lambda `{s}`: {e}"))
}

fn word(s: &str) -> Result<ReducedWord, String> {
    s.parse().map_err(|e| format!("bad word `{s}`: {e}"))
}

fn kind(s: &str) -> Result<CartanKind, String> {
    parse_kind(s).map_err(|e| e.to_string())
}

fn build(cli: Cli) -> Result<RunConfig, String> {
    let command = match cli.command {
        Sub::Analyze { kind: k, lambda } => Command::Analyze { kind: kind(&k)?, lambda: weight(&lambda)? },
        Sub::Sweep { bounds, max } => {
            let bounds = match (bounds, max) {
                (Some(b), None) => {
                    let w = weight(&b)?;
                    <[i64; 5]>::try_from(w.coords()).map_err(|_| format!("--box needs 5 bounds, got `{b}`"))?
                }
                (None, Some(n)) => [n; 5],
                _ => return Err("sweep needs --box a1,...,a5 or --max N".into()),
            };
            Command::Sweep { bounds }
        }
        Sub::Crosscheck { lambda } => {
            let lambdas = if lambda.is_empty() {
                default_crosscheck_lambdas()
            } else {
                lambda.iter().map(|s| weight(s)).collect::<Result<_, _>>()?
            };
            Command::Crosscheck { lambdas }
        }
        Sub::Verma { kind: k, lambda, word: w1, word2: w2 } => {
            let k = kind(&k)?;
            let (d1, d2) = default_verma_words(k);
            let word1 = w1.as_deref().map(word).transpose()?.unwrap_or(d1);
            let word2 = w2.as_deref().map(word).transpose()?.unwrap_or(d2);
            Command::Verma { kind: k, lambda: weight(&lambda)?, word1, word2 }
        }
    };
    let mut cfg = RunConfig::new(command);
    cfg.max_degree = cli.common.max_degree;
    cfg.max_words = cli.common.max_words;
    cfg.format = match cli.common.format {
        Format::Json => OutputFormat::Json,
        Format::Table => OutputFormat::Table,
    };
    cfg.jobs = cli.common.jobs.unwrap_or_else(default_jobs);
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            return ExitCode::from(code as u8);
        }
    };
    let cfg = match build(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit::USAGE as u8);
        }
    };
    let out = execute(&cfg);
    for d in &out.diagnostics {
        eprintln!("error: {d}");
    }
    let text = out.render(cfg.format);
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(exit::USAGE as u8);
    }
    ExitCode::from(out.status as u8)
}
