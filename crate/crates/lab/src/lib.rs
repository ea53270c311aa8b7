//! Command-line front end for the weighted Hardy-space laboratory.
//!
//! Every experiment in the core crate is reachable as a subcommand that
//! validates its parameters, dispatches, and emits a deterministic CSV or
//! JSON artifact. Exit codes: 0 pass, 1 check failure, 2 usage error.

mod args;
mod checks;
mod commands;
mod config;
mod fmt;
mod inputs;
mod output;

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Format};
use commands::Ctx;
use config::FileConfig;

#[derive(Debug)]
pub enum CliError {
    /// Bad parameters; exit code 2.
    Usage(String),
    /// The operation ran and failed, or could not run; exit code 1.
    Run(String),
}

fn parse_format(value: &str) -> Result<Format, CliError> {
    match value.to_ascii_lowercase().as_str() {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        other => Err(CliError::Usage(format!(
            "config key format: expected json or csv, got {other:?}"
        ))),
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    let cfg = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::empty(),
    };
    let out = cli.out.or_else(|| cfg.raw("out").map(PathBuf::from));
    let format = match cli.format {
        Some(f) => Some(f),
        None => cfg.raw("format").map(parse_format).transpose()?,
    };
    let ctx = Ctx { cfg, out, format };

    match cli.command {
        Command::Interval { alpha } => commands::interval(alpha, &ctx),
        Command::ApScan {
            alpha,
            p,
            resolution,
            ladder,
        } => commands::cmd_ap_scan(alpha, p, resolution, ladder, &ctx),
        Command::Project {
            alpha,
            n,
            degree,
            seed,
            points,
            mode,
        } => commands::project(alpha, n, degree, seed, points, mode, &ctx),
        Command::KernelCheck { alpha, pairs, seed } => {
            commands::kernel_check(alpha, pairs, seed, &ctx)
        }
        Command::Gram {
            alpha,
            dim,
            grid,
            closed_form,
        } => commands::gram(alpha, dim, grid, closed_form, &ctx),
        Command::NormScan {
            alpha,
            p,
            degree,
            seed,
        } => commands::norm_scan(alpha, p, degree, seed, &ctx),
        Command::Blowup {
            alpha,
            p,
            grids,
            budget,
            seed,
        } => commands::blowup(alpha, p, grids, budget, seed, &ctx),
        Command::DualityCheck {
            alpha,
            p,
            n,
            tests,
            seed,
        } => commands::duality_check(alpha, p, n, tests, seed, &ctx),
        Command::HoelderFuzz {
            alpha,
            p,
            pairs,
            n,
            seed,
        } => commands::hoelder_fuzz(alpha, p, pairs, n, seed, &ctx),
        Command::CheckAll {
            seed,
            only,
            corrupt_tolerances,
        } => checks::check_all(seed, only, corrupt_tolerances, &ctx),
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Run(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}
