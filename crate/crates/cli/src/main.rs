//! `wgt`: build, export and verify Gelfand–Tsetlin representations of finite
//! W-algebras from a weights file.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a requested
//! verification suite fails. Errors are reported on standard error as one
//! JSON object per line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::json;

use wgt_core::exactalg::parse_rational;
use wgt_core::io;
use wgt_core::patterns::weyl_dimension;
use wgt_core::repbuild::OpKey;
use wgt_core::verify::{run_suite, Suite, VerificationReport};
use wgt_core::{Execution, HighestWeightSpec, Pyramid, Representation};

#[derive(Parser, Debug)]
#[command(name = "wgt", version, about = "Exact Gelfand-Tsetlin representations of finite W-algebras")]
struct Cli {
    /// Weights file (JSON with "pyramid" and "lambda")
    #[arg(long, global = true)]
    weights: Option<PathBuf>,

    /// Comma-separated pyramid rows overriding the weights file
    #[arg(long, global = true)]
    pyramid: Option<String>,

    /// Worker threads for parallel construction and verification
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Run every computation on the calling thread
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the dimension and the per-column factors
    Dim,
    /// Export the basis patterns
    Patterns {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export operator polynomials, one JSON file per operator
    Matrices {
        /// Comma-separated subset of A,B,C,tau,tau_low,tau_high
        #[arg(long, default_value = "A,B,C,tau")]
        ops: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run verification suites
    Verify {
        /// Comma-separated suites, or "all"
        #[arg(long, default_value = "all")]
        suites: String,
        /// Truncation order for series-derived checks (default 2N+2)
        #[arg(long)]
        truncation: Option<usize>,
        /// Write the reports as a JSON array
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Export branching data for the pyramid without its bottom row
    Branch {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify the one-column case for a gl_n weight
    DemoGln {
        #[arg(long)]
        n: usize,
        /// Comma-separated weight a_1,...,a_n
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

enum Outcome {
    Success,
    VerificationFailed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            diagnostic("usage", &e.to_string());
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(2),
        Err(e) => {
            let kind = if e.downcast_ref::<wgt_core::Error>().is_some() { "input" } else { "io" };
            diagnostic(kind, &format!("{e:#}"));
            ExitCode::from(1)
        }
    }
}

fn diagnostic(kind: &str, message: &str) {
    eprintln!("{}", json!({ "error": kind, "message": message.trim_end() }));
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            bail!(wgt_core::Error::Input("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };

    if let Command::DemoGln { n, weight, report } = &cli.command {
        return demo_gln(*n, weight, report.as_deref(), exec);
    }
    let spec = load_spec(&cli)?;
    let rep = Representation::with_execution(spec, exec);

    match cli.command {
        Command::Dim => {
            println!("{}", rep.dim());
            for cw in rep.spec().column_weights() {
                println!("column {}: {}", cw.k, weyl_dimension(&cw.weights));
            }
            Ok(Outcome::Success)
        }
        Command::Patterns { out } => {
            emit(out.as_deref(), &io::patterns_json(&rep))?;
            Ok(Outcome::Success)
        }
        Command::Matrices { ops, out } => {
            let keys = select_ops(&rep, &ops)?;
            fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
            for key in keys {
                let poly = rep.operator(key)?;
                let path = out.join(io::matrix_file_name(key));
                fs::write(&path, io::matrix_json(key, &poly)).with_context(|| format!("writing {}", path.display()))?;
                println!("{}", path.display());
            }
            Ok(Outcome::Success)
        }
        Command::Verify { suites, truncation, report } => {
            let explicit = !suites.split(',').any(|s| s.trim() == "all");
            let mut selected = Suite::parse_list(&suites)?;
            if !explicit && !rep.pyramid().is_one_column() {
                selected.retain(|&s| s != Suite::Gln);
            }
            if truncation == Some(0) {
                bail!(wgt_core::Error::Input("--truncation must be at least 1".into()));
            }
            verify(&rep, &selected, truncation, report.as_deref())
        }
        Command::Branch { out } => {
            let data = rep.branching_data()?;
            emit(out.as_deref(), &io::branches_json(&rep, &data))?;
            Ok(Outcome::Success)
        }
        Command::DemoGln { .. } => unreachable!("handled above"),
    }
}

fn load_spec(cli: &Cli) -> anyhow::Result<HighestWeightSpec> {
    let Some(path) = &cli.weights else {
        bail!(wgt_core::Error::Input("--weights FILE is required".into()));
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let rows = cli.pyramid.as_deref().map(io::parse_rows).transpose()?;
    Ok(io::parse_weights(&text, rows.as_deref())?)
}

fn select_ops(rep: &Representation, ops: &str) -> anyhow::Result<Vec<OpKey>> {
    let n = rep.n();
    let mut keys = Vec::new();
    for name in ops.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match name {
            "A" => keys.extend((1..=n).map(OpKey::A)),
            "B" => keys.extend((1..n).map(OpKey::B)),
            "C" => keys.extend((1..n).map(OpKey::C)),
            "tau" => {
                keys.extend((1..n).map(OpKey::TauLow));
                keys.extend((1..n).map(OpKey::TauHigh));
            }
            "tau_low" => keys.extend((1..n).map(OpKey::TauLow)),
            "tau_high" => keys.extend((1..n).map(OpKey::TauHigh)),
            other => bail!(wgt_core::Error::Input(format!("unknown operator '{other}'"))),
        }
    }
    keys.sort();
    keys.dedup();
    Ok(keys)
}

fn verify(
    rep: &Representation,
    suites: &[Suite],
    truncation: Option<usize>,
    report: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let mut reports: Vec<VerificationReport> = Vec::new();
    for &suite in suites {
        let r = run_suite(rep, suite, truncation)?;
        let verdict = if r.passed() { "pass" } else { "FAIL" };
        println!("{suite}: {verdict} ({} checks, {} ms)", r.asserted_count(), r.elapsed_ms);
        for f in r.failures().take(3) {
            println!("  {}", serde_json::to_string(f)?);
        }
        reports.push(r);
    }
    if let Some(path) = report {
        fs::write(path, io::to_json(&reports)).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if reports.iter().all(VerificationReport::passed) { Outcome::Success } else { Outcome::VerificationFailed })
}

fn demo_gln(n: usize, weight: &str, report: Option<&Path>, exec: Execution) -> anyhow::Result<Outcome> {
    let values = weight.split(',').map(|s| parse_rational(s.trim())).collect::<Result<Vec<_>, _>>()?;
    if n == 0 || values.len() != n {
        bail!(wgt_core::Error::Input(format!("--weight needs {n} entries, got {}", values.len())));
    }
    let grid = values.into_iter().map(|a| vec![a]).collect();
    let spec = HighestWeightSpec::new(Pyramid::one_column(n), grid)?;
    let rep = Representation::with_execution(spec, exec);
    println!("dim {}", rep.dim());
    verify(&rep, &[Suite::Abc, Suite::Defining, Suite::Highest, Suite::Dimension, Suite::Gln], None, report)
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
