use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use hyperjac::brumer::{brumer_from_exprs, AnyCurve};
use hyperjac::cartier::classify;
use hyperjac::galois::{certify, DEFAULT_SEED};
use hyperjac::harness::{
    f9_search, load_fixtures, load_fixtures_from, mainthm_pipeline, reproduce_rows, scan, GridSpec, ScanJob,
    TableOptions,
};
use hyperjac::repmod;

#[derive(Parser)]
#[command(name = "hyperjac", version, about = "Genus-2 sextics, supersingularity and A5 checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Brumer-family sextics.
    Brumer {
        #[command(subcommand)]
        cmd: BrumerCmd,
    },
    /// Cartier-Manin classification of a sextic.
    Classify {
        #[arg(long)]
        p: u64,
        /// Sextic in x, e.g. "x^6 + 2x^5 + (T + 1)x^3 + 3x + 1", or a JSON curve.
        #[arg(long)]
        curve: String,
    },
    /// Sampled A5 certificate.
    Galois {
        /// 0 for Q.
        #[arg(long, default_value_t = 0)]
        p: u64,
        #[arg(long)]
        curve: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Fail instead of capping the sample count at the available places.
        #[arg(long)]
        strict: bool,
    },
    /// The mod-2 heart representation checks.
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
    /// Fixture tables.
    Table {
        #[command(subcommand)]
        cmd: TableCmd,
    },
    /// Scan a grid of Brumer parameters over F_p(T).
    Scan {
        #[arg(long)]
        p: u64,
        /// const, linear or deg:N
        #[arg(long, default_value = "linear")]
        grid: String,
        /// Random subset of this many triples.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Emit only supersingular curves.
        #[arg(long)]
        only_supersingular: bool,
        /// Emit only curves with an A5 certificate.
        #[arg(long)]
        require_a5: bool,
        /// Write JSON lines here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search the supersingular F_9(T) family for non-constant members.
    SearchF9 {
        #[arg(long, default_value_t = 1)]
        c_deg: usize,
        #[arg(long, default_value_t = 0)]
        b_deg: usize,
    },
    /// Certificate, classification and splitting checked together.
    Pipeline {
        #[arg(long, default_value_t = 0)]
        p: u64,
        #[arg(long)]
        curve: String,
        #[arg(long, default_value_t = 5)]
        d: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum BrumerCmd {
    Gen {
        /// 0 for Q.
        #[arg(long, default_value_t = 0)]
        p: u64,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        allow_singular: bool,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    Verify {
        #[arg(long, default_value_t = 200)]
        pairs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum TableCmd {
    Reproduce {
        #[arg(long)]
        id: u8,
        /// Alternative fixture file with the same columns.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        no_certify: bool,
    },
}

fn emit<W: Write, T: Serialize>(out: &mut W, v: &T) -> hyperjac::Result<()> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn parse_curve(s: &str, p: u64) -> hyperjac::Result<AnyCurve> {
    if s.trim_start().starts_with('{') || s.trim_start().starts_with('"') {
        let v: serde_json::Value = serde_json::from_str(s)?;
        AnyCurve::from_json(&v, p, 1, false)
    } else {
        AnyCurve::parse_inline(s, p, 1, false)
    }
}

fn run(cmd: Cmd) -> hyperjac::Result<bool> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cmd {
        Cmd::Brumer { cmd: BrumerCmd::Gen { p, b, c, d, allow_singular } } => {
            let curve = brumer_from_exprs(&b, &c, &d, p, allow_singular)?;
            emit(&mut out, &curve.to_json())?;
            Ok(curve.is_separable())
        }
        Cmd::Classify { p, curve } => {
            let rep = classify(&parse_curve(&curve, p)?, p)?;
            emit(&mut out, &rep)?;
            Ok(true)
        }
        Cmd::Galois { p, curve, samples, seed, strict } => {
            let cert = certify(&parse_curve(&curve, p)?, samples, seed, !strict)?;
            emit(&mut out, &cert)?;
            Ok(cert.is_certified())
        }
        Cmd::Rep { cmd: RepCmd::Verify { pairs, seed } } => {
            let rep = repmod::verify(pairs, seed)?;
            emit(&mut out, &rep)?;
            Ok(rep.passed)
        }
        Cmd::Table { cmd: TableCmd::Reproduce { id, fixtures, samples, seed, no_certify } } => {
            let rows = match fixtures {
                Some(path) => load_fixtures_from(&path)?,
                None => load_fixtures()?,
            };
            let opts = TableOptions { samples, seed, certify: !no_certify };
            let rep = reproduce_rows(&rows, id, &opts)?;
            for r in &rep.rows {
                emit(&mut out, r)?;
            }
            if let Some(g) = &rep.gcd {
                emit(&mut out, g)?;
            }
            emit(&mut out, &serde_json::json!({"table": id, "passed": rep.passed, "note": rep.note}))?;
            Ok(rep.passed)
        }
        Cmd::Scan { p, grid, sample, seed, only_supersingular, require_a5, out: path } => {
            let mut job = ScanJob::new(p, grid.parse::<GridSpec>()?);
            job.sample = sample;
            job.seed = seed;
            job.only_supersingular = only_supersingular;
            job.require_a5_certificate = require_a5;
            let (hits, summary) = scan(&job)?;
            let mut sink: Box<dyn Write> = match path {
                Some(path) => Box::new(BufWriter::new(File::create(path)?)),
                None => Box::new(BufWriter::new(io::stdout())),
            };
            for h in &hits {
                emit(&mut sink, h)?;
            }
            emit(&mut sink, &summary)?;
            sink.flush()?;
            Ok(summary.red_flags == 0 && summary.errors == 0)
        }
        Cmd::SearchF9 { c_deg, b_deg } => {
            let rep = f9_search(c_deg, b_deg)?;
            for h in &rep.hits {
                emit(&mut out, h)?;
            }
            emit(
                &mut out,
                &serde_json::json!({
                    "candidates": rep.candidates,
                    "inexact": rep.inexact,
                    "singular": rep.singular,
                    "constant": rep.constant,
                    "hits": rep.hits.len(),
                    "note": rep.note,
                }),
            )?;
            Ok(true)
        }
        Cmd::Pipeline { p, curve, d, seed } => {
            let rep = mainthm_pipeline(&parse_curve(&curve, p)?, d, seed)?;
            emit(&mut out, &rep)?;
            Ok(rep.consistent && !rep.red_flag)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
