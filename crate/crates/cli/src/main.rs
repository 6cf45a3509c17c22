use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use cylcob::cyclic::{atl_to_cyla, lambda_to_cyl, sqrtlambda_to_cyl, Flavor};
use cylcob::json::InvariantJson;
use cylcob::linear::BarRep;
use cylcob::normal_form::normalize;
use cylcob::render::render_svg;
use cylcob::selftest::{run_one, SelftestConfig};
use cylcob::syntax::{parse_atl, parse_simplex, parse_word, print_word, ErrorKind, ParseError};
use cylcob::{eq_in, evaluate, CategoryTag, GeneratorWord};

/// Words, invariants, normal forms and linear images of striped-cylinder cobordisms.
#[derive(Debug, Parser)]
#[command(name = "cylcob", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the invariants and matching of a word as JSON.
    Invariants { word: String },
    /// Decide equality of two words in a category.
    Eq {
        #[arg(long, short, default_value = "cyl")]
        category: CategoryTag,
        w1: String,
        w2: String,
    },
    /// Print the canonical word, then the invariants as JSON.
    Normalize { word: String },
    /// Print the exact matrix of a word in the bar representation.
    Matrix {
        word: String,
        #[arg(long, short)]
        dim: usize,
        #[arg(long, short, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Draw the evaluated diagram as SVG.
    Render {
        word: String,
        /// Output file; standard output if omitted.
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Translate a cyclic or shaded annular word into a cylinder word.
    Translate { source: Source, word: String },
    /// Run the seeded property suites.
    Selftest {
        /// Largest arity for exhaustive relation instances.
        #[arg(long, default_value_t = 8)]
        max_arity: usize,
        /// Random words per sampled suite.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = SelftestConfig::default().seed)]
        seed: u64,
        /// Run only this criterion (1-8).
        #[arg(long)]
        only: Option<u8>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Source {
    Lambda,
    Sqrtlambda,
    Atl,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{}", .0.render(.1))]
    Parse(ParseError, String),
    #[error(transparent)]
    Core(#[from] cylcob::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(e, _) if e.kind == ErrorKind::Syntax => 2,
            _ => 1,
        }
    }
}

fn parse(src: &str) -> Result<GeneratorWord, CliError> {
    parse_word(src).map_err(|e| CliError::Parse(e, src.to_owned()))
}

fn json(inv: &InvariantJson) -> String {
    serde_json::to_string(inv).expect("invariants serialize")
}

fn run(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Invariants { word } => {
            let d = evaluate(&parse(&word)?)?;
            println!("{}", json(&InvariantJson::from(&d)));
        }
        Command::Eq { category, w1, w2 } => {
            let equal = eq_in(category, &parse(&w1)?, &parse(&w2)?)?;
            println!("{}", if equal { "equal" } else { "unequal" });
        }
        Command::Normalize { word } => {
            let w = parse(&word)?;
            let nf = normalize(&w)?;
            println!("{nf}");
            println!("{}", json(&InvariantJson::from(&evaluate(&nf.assemble())?)));
        }
        Command::Matrix { word, dim, format } => {
            let w = parse(&word)?;
            let m = BarRep::new(dim)?.word_matrix(&w)?;
            println!("# shape {}x{}", m.rows(), m.cols());
            match format {
                Format::Json => println!("{}", serde_json::to_string(&m.to_string_rows()).expect("strings serialize")),
                Format::Csv => print!("{}", m.to_csv()),
            }
        }
        Command::Render { word, o } => {
            let d = evaluate(&parse(&word)?)?;
            let svg = render_svg(&d, word.trim());
            match o {
                Some(path) => std::fs::write(&path, svg).map_err(|source| CliError::Io { path, source })?,
                None => print!("{svg}"),
            }
        }
        Command::Translate { source, word } => {
            let wrap = |e| CliError::Parse(e, word.clone());
            match source {
                Source::Lambda => {
                    let w = parse_simplex(&word, Flavor::Cyclic).map_err(wrap)?;
                    println!("{}", print_word(&lambda_to_cyl(&w)?));
                }
                Source::Sqrtlambda => {
                    let w = parse_simplex(&word, Flavor::SqrtCyclic).map_err(wrap)?;
                    println!("{}", print_word(&sqrtlambda_to_cyl(&w)?));
                }
                Source::Atl => {
                    let img = atl_to_cyla(&parse_atl(&word).map_err(wrap)?)?;
                    println!("{}", print_word(&img.word));
                    if img.mu > 0 {
                        println!("mu={}", img.mu);
                    }
                }
            }
        }
        Command::Selftest { max_arity, samples, seed, only } => {
            let cfg = SelftestConfig { seed, max_k: max_arity, words: samples, ..SelftestConfig::default() };
            let criteria: Vec<u8> = match only {
                Some(c) if (1..=8).contains(&c) => vec![c],
                Some(c) => return Err(CliError::Failed(format!("no criterion {c}; expected 1-8"))),
                None => (1..=8).collect(),
            };
            // Suites are independent and seeded separately, so they run in parallel.
            let reports: Vec<_> = thread::scope(|s| {
                let handles: Vec<_> = criteria
                    .iter()
                    .map(|&c| s.spawn(move || run_one(&cfg, c).expect("criterion in range")))
                    .collect();
                handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
            });
            let mut failed = 0;
            for r in &reports {
                println!("{r}");
                for f in r.failures.iter().skip(1).take(9) {
                    println!("    also failed: {f}");
                }
                failed += usize::from(!r.passed());
            }
            let checks: usize = reports.iter().map(|r| r.checks).sum();
            println!("{} of {} suites passed, {checks} checks", reports.len() - failed, reports.len());
            if failed > 0 {
                return Err(CliError::Failed(format!("{failed} suite(s) failed")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
