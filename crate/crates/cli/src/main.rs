use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod output;
mod report;

use args::{Cli, Command};

/// Why a command failed; decides the exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad flag or flag combination (exit 2).
    Usage(String),
    /// Error surfaced by the library (exit 1, or 2 for configuration errors).
    Lib(sfc_core::Error),
}

pub fn lib_err(e: sfc_core::Error) -> Failure {
    Failure::Lib(e)
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Lib(sfc_core::Error::Config(_)) => 2,
            Failure::Lib(_) => 1,
        }
    }
}

fn init_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("SFC_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Failure::Usage(format!(
            "SFC_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Lib(sfc_core::Error::Internal(e.to_string())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    init_threads()?;
    match &cli.command {
        Command::Map(a) => commands::map(a),
        Command::Flatten(a) => commands::flatten_cmd(a),
        Command::Fold(a) => commands::fold_cmd(a),
        Command::PatchOrder(a) => commands::patch_order_cmd(a),
        Command::Degrid(a) => commands::degrid_cmd(a),
        Command::Preserve(a) => commands::preserve(a),
        Command::Dilation(a) => commands::dilation_cmd(a),
        Command::ScaleTrace(a) => commands::scale_trace_cmd(a),
        Command::Hierarchy(a) => commands::hierarchy_cmd(a),
        Command::Toyset(a) => commands::toyset(a),
        Command::Dtw(a) => commands::dtw_cmd(a),
        Command::DtwTable(a) => commands::dtw_table_cmd(a),
        Command::Report(a) => report::run(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let code = f.exit_code();
            match f {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Lib(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(code)
        }
    }
}
