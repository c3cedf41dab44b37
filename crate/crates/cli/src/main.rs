//! `chowla`: certified minima of cosine sums and Newman polynomial moduli
//! from the command line. Every subcommand prints JSON (or CSV for the
//! searches) on stdout.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on invalid
//! input.

mod output;

use std::io::Write;
use std::process::ExitCode;

use chowla::certlab::{classify_lambda4, verify_lambda2, verify_lambda3};
use chowla::constructions::{chowla_construction, newman_product};
use chowla::mu5::{verify_mu5_bound, ProofStatus};
use chowla::search::{search_lambda, search_mu, SearchOptions, SearchResult};
use chowla::trigmin::{certified_min, certified_min_modulus, exact_min_chebyshev};
use chowla::{CosineTuple, Error, NewmanTuple, TrigPoly};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const CLI_TOL: f64 = 1e-6;

#[derive(Parser)]
#[command(name = "chowla", version, about)]
struct Cli {
    /// Worker threads, 0 for one per CPU.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Maximum number of tuples a search may enumerate.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Certified minimum of Σ cos(aⱼθ).
    Minimize {
        #[arg(long, value_delimiter = ',', required = true)]
        freqs: Vec<u64>,
        #[arg(long, default_value_t = CLI_TOL)]
        tol: f64,
        /// Use exact Chebyshev root isolation (frequencies ≤ 64).
        #[arg(long)]
        exact: bool,
    },
    /// Certified minimum modulus of Σ z^{aⱼ} on the unit circle.
    Minmod {
        #[arg(long, value_delimiter = ',', required = true)]
        exps: Vec<u64>,
        #[arg(long, default_value_t = CLI_TOL)]
        tol: f64,
    },
    /// Ranks canonical cosine tuples by certified minimum.
    SearchLambda {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        max_freq: u64,
        #[arg(long, default_value_t = 20)]
        top: usize,
        #[arg(long, default_value_t = CLI_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Ranks canonical Newman tuples by certified minimum modulus.
    SearchMu {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        max_exp: u64,
        #[arg(long, default_value_t = 20)]
        top: usize,
        #[arg(long, default_value_t = CLI_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Sidon-set cosine sum of length n and its certified minimum.
    Chowla {
        #[arg(short = 'n')]
        n: u64,
        #[arg(long, default_value_t = CLI_TOL)]
        tol: f64,
    },
    /// Product f(z^k)·g(z) of two Newman polynomials.
    Product {
        #[arg(long, value_delimiter = ',', required = true)]
        f: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        g: Vec<u64>,
        #[arg(long, default_value_t = CLI_TOL)]
        tol: f64,
    },
    /// Witness that cos aθ + cos bθ ≤ −9/8 somewhere.
    VerifyLambda2 {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Witness that cos aθ + cos bθ + cos cθ ≤ L(1,2,3) somewhere.
    VerifyLambda3 {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        c: u64,
    },
    /// Classifies (a,b,c,d) against the fourteen λ(4) conditions.
    ClassifyLambda4 {
        #[arg(long, value_delimiter = ',', required = true)]
        tuple: Vec<u64>,
    },
    /// Runs the μ(5) ≤ 1 + π/m case engine.
    Mu5Cases {
        #[arg(short = 'm')]
        m: u64,
        #[arg(long, default_value_t = CLI_TOL)]
        tol: f64,
    },
}

enum Output {
    Json(Value),
    Csv(String),
}

/// Outcome of a command that ran to completion.
struct Success {
    output: Output,
    verified: bool,
}

impl Success {
    fn json<T: serde::Serialize>(value: &T) -> Result<Self, Error> {
        let v = serde_json::to_value(value).map_err(|e| Error::Internal(e.to_string()))?;
        Ok(Self { output: Output::Json(v), verified: true })
    }
}

fn minimum_json(m: &chowla::CertifiedMinimum) -> Value {
    json!({ "lo": m.lo, "hi": m.hi, "witness": m.witness, "method": m.method })
}

fn search_output(results: &[SearchResult], format: Format) -> Result<Success, Error> {
    match format {
        Format::Json => Success::json(&results),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Internal(e.to_string());
            w.write_record(["rank", "tuple", "lo", "hi", "witness"]).map_err(io)?;
            for r in results {
                let tuple: Vec<String> = r.tuple.iter().map(u64::to_string).collect();
                w.write_record([
                    r.rank.to_string(),
                    tuple.join(" "),
                    output::round15(r.score.lo).to_string(),
                    output::round15(r.score.hi).to_string(),
                    output::round15(r.score.witness).to_string(),
                ])
                .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
            let text = String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))?;
            Ok(Success { output: Output::Csv(text), verified: true })
        }
    }
}

fn run(cli: &Cli) -> Result<Success, Error> {
    let search_opts = |tol: f64, top: usize| SearchOptions {
        tol,
        top,
        budget: cli.budget,
        threads: cli.threads,
        ..SearchOptions::default()
    };
    match &cli.command {
        Command::Minimize { freqs, tol, exact } => {
            let p = TrigPoly::from_cosine_tuple(&CosineTuple::new(freqs.clone())?);
            let m = if *exact { exact_min_chebyshev(&p)? } else { certified_min(&p, *tol)? };
            Ok(Success { output: Output::Json(minimum_json(&m)), verified: true })
        }
        Command::Minmod { exps, tol } => {
            let m = certified_min_modulus(&NewmanTuple::new(exps.clone())?, *tol)?;
            Ok(Success { output: Output::Json(minimum_json(&m)), verified: true })
        }
        Command::SearchLambda { n, max_freq, top, tol, format } => {
            search_output(&search_lambda(*n, *max_freq, &search_opts(*tol, *top))?, *format)
        }
        Command::SearchMu { n, max_exp, top, tol, format } => {
            search_output(&search_mu(*n, *max_exp, &search_opts(*tol, *top))?, *format)
        }
        Command::Chowla { n, tol } => {
            let c = chowla_construction(*n, *tol)?;
            let v = json!({
                "tuple": c.tuple,
                "lo": c.minimum.lo,
                "hi": c.minimum.hi,
                "bound": c.bound,
            });
            Ok(Success { output: Output::Json(v), verified: c.minimum.lo >= c.bound })
        }
        Command::Product { f, g, tol } => {
            let h = newman_product(&NewmanTuple::new(f.clone())?, &NewmanTuple::new(g.clone())?)?;
            let m = certified_min_modulus(&h, *tol)?;
            let v = json!({ "exps": h, "lo": m.lo, "hi": m.hi });
            Ok(Success { output: Output::Json(v), verified: true })
        }
        Command::VerifyLambda2 { a, b } => Success::json(&verify_lambda2(*a, *b)?),
        Command::VerifyLambda3 { a, b, c } => Success::json(&verify_lambda3(*a, *b, *c)?),
        Command::ClassifyLambda4 { tuple } => match tuple.as_slice() {
            &[a, b, c, d] => Success::json(&classify_lambda4(a, b, c, d)?),
            _ => Err(Error::InvalidInput(format!("expected four entries, got {}", tuple.len()))),
        },
        Command::Mu5Cases { m, tol } => {
            let proof = verify_mu5_bound(*m, *tol)?;
            let mut out = Success::json(&proof)?;
            out.verified = proof.status == ProofStatus::Proven;
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
        eprintln!("error: thread pool: {e}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(success) => {
            let text = match success.output {
                Output::Json(v) => {
                    let v = output::round_numbers(v);
                    serde_json::to_string_pretty(&v).expect("JSON values serialize") + "\n"
                }
                Output::Csv(s) => s,
            };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            if success.verified {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
