//! Front end for `blowup-core`: subcommands that compute one invariant of an
//! ideal file, and verification suites for the worked examples.
//!
//! Every command produces a [`VerificationReport`]. The process exits with 0
//! when all claims pass, 1 when a claim fails or a computation errors, and 2
//! on usage or input errors.

pub mod args;
pub mod catalog;
pub mod commands;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;

use blowup_core::VerificationReport;
use clap::Parser;

pub use args::{Cli, Command, Example};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read input: {0}")]
    Input(String),
    #[error(transparent)]
    Compute(#[from] blowup_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Compute(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
            CliError::Compute(_) => "computation",
        }
    }
}

impl From<blowup_core::RingError> for CliError {
    fn from(e: blowup_core::RingError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// A finished command: its report, plus a primary text artifact (the ideal
/// file for `curve`) shown ahead of the report in text mode.
pub struct Output {
    pub report: VerificationReport,
    pub artifact: Option<String>,
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let mut out = commands::dispatch(cli)?;
    if cli.no_timings {
        out.report.clear_timings();
    }
    Ok(out)
}

/// Text or JSON rendering. In text mode an artifact comes first and the
/// report follows as `#` comments, so `curve` output is itself an ideal file.
pub fn render(out: &Output, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&out.report).expect("reports serialize");
        s.push('\n');
        return s;
    }
    let report = out.report.to_string();
    match &out.artifact {
        Some(text) => {
            let mut s = text.clone();
            for line in report.lines() {
                s.push_str("# ");
                s.push_str(line);
                s.push('\n');
            }
            s
        }
        None => report + "\n",
    }
}

fn render_error(e: &CliError, json: bool) -> String {
    if json {
        let v = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
        return serde_json::to_string_pretty(&v).expect("json") + "\n";
    }
    format!("error ({}): {e}\n", e.kind())
}

/// Parse `args`, run, print, and return the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", render(&out, cli.json));
            let _ = std::io::stdout().flush();
            if out.report.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if cli.json {
                print!("{}", render_error(&e, true));
            } else {
                eprint!("{}", render_error(&e, false));
            }
            e.exit_code()
        }
    }
}
