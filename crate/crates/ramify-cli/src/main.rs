//! ramify: classify prime-degree extensions of p-adic fields from the
//! command line.

mod doc;
mod expr;
mod table;
mod verify;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use doc::{classify_document, exit_code, ClassifyOptions};
use ramify::Error;

#[derive(Parser)]
#[command(
    name = "ramify",
    version,
    about = "Classify extensions of p-adic fields up to isomorphism",
    after_help = "Exit codes: 0 success, 2 rejected input, 3 unsupported, \
                  4 internal inconsistency, 5 oracle inconclusive."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one polynomial (--poly) or a batch file (--file)
    Classify {
        /// residue characteristic of the base field
        #[arg(long)]
        p: u64,
        /// degree of the unramified base field over Q_p
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// polynomial expression, e.g. "x^3 + 9*x + 3" or "3,9,0,1"
        #[arg(long, conflicts_with = "file")]
        poly: Option<String>,
        /// batch file: one expression per line, '#' comments and blank
        /// lines skipped
        #[arg(long)]
        file: Option<String>,
        /// emit JSON (NDJSON in batch mode)
        #[arg(long)]
        json: bool,
        /// include the branch-by-branch certificate
        #[arg(long)]
        certificate: bool,
        /// cross-check the verdict with the root-finding oracle
        #[arg(long)]
        oracle_check: bool,
        /// oracle working precision override (default: v_p(disc) + 2q + 4;
        /// env RAMIFY_PRECISION also applies)
        #[arg(long)]
        precision: Option<u32>,
    },
    /// Recompute and print the table of ramified cubic classes of Q_3
    Table {
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Generate a corpus, classify it, and oracle-check every element
    Verify {
        #[arg(long)]
        p: u64,
        /// polynomial degree (prime)
        #[arg(long, default_value_t = 3)]
        q: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// max |numerator| of generated coefficients
        #[arg(long)]
        height: Option<u64>,
        /// max power-of-p denominator exponent
        #[arg(long, default_value_t = 2)]
        den_exp: u32,
        #[arg(long)]
        json: bool,
    },
    /// Emit a deterministic corpus of certified irreducible polynomials
    GenCorpus {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        height: Option<u64>,
        #[arg(long, default_value_t = 2)]
        den_exp: u32,
        /// output path; stdout when omitted
        #[arg(long)]
        out: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Classify {
            p,
            m,
            poly,
            file,
            json,
            certificate,
            oracle_check,
            precision,
        } => {
            let precision = precision.or_else(|| {
                std::env::var("RAMIFY_PRECISION")
                    .ok()
                    .and_then(|s| s.parse().ok())
            });
            let opts = ClassifyOptions {
                certificate,
                oracle_check,
                precision,
            };
            match (poly, file) {
                (Some(text), None) => classify_single(&text, p, m, &opts, json),
                (None, Some(path)) => classify_batch(&path, p, m, &opts, json),
                _ => {
                    eprintln!("error: provide exactly one of --poly or --file");
                    2
                }
            }
        }
        Command::Table { p, json } => table::cmd_table(p, json),
        Command::Verify {
            p,
            q,
            count,
            seed,
            height,
            den_exp,
            json,
        } => verify::cmd_verify(p, q, count, seed, height, den_exp, json),
        Command::GenCorpus {
            p,
            degree,
            count,
            seed,
            height,
            den_exp,
            out,
        } => verify::cmd_gen_corpus(p, degree, count, seed, height, den_exp, out.as_deref()),
    };
    std::process::exit(code);
}

fn classify_single(text: &str, p: u64, m: usize, opts: &ClassifyOptions, json: bool) -> i32 {
    let parsed = match expr::parse_poly(text) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match classify_document(&parsed.source, &parsed.poly, p, m, opts) {
        Ok(doc) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&doc.json).unwrap());
            } else {
                print!("{}", doc.human);
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn classify_batch(path: &str, p: u64, m: usize, opts: &ClassifyOptions, json: bool) -> i32 {
    let content = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: cannot read {path}: {e}");
            return 1;
        }
    };
    let lines: Vec<&str> = content
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    // classification is pure, so batch lines fan out across threads;
    // the indexed collect keeps output order
    let results: Vec<(usize, std::result::Result<doc::ResultDocument, Error>)> = lines
        .par_iter()
        .enumerate()
        .map(|(i, line)| {
            let res = expr::parse_poly(line)
                .map_err(|e| Error::Rejected(format!("parse: {e}")))
                .and_then(|parsed| classify_document(line, &parsed.poly, p, m, opts));
            (i, res)
        })
        .collect();
    let mut worst = 0;
    let mut ordered = results;
    ordered.sort_by_key(|(i, _)| *i);
    for (i, res) in ordered {
        match res {
            Ok(d) => {
                if json {
                    println!("{}", serde_json::to_string(&d.json).unwrap());
                } else {
                    if i > 0 {
                        println!();
                    }
                    print!("{}", d.human);
                }
            }
            Err(e) => {
                let code = exit_code(&e);
                worst = worst.max(code);
                if json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "input": lines[i],
                            "error": e.to_string(),
                            "exit_class": code.to_string(),
                        })
                    );
                } else {
                    if i > 0 {
                        println!();
                    }
                    println!("input:      {}", lines[i]);
                    println!("error:      {e}");
                }
            }
        }
    }
    worst
}
