//! The `tess4` command line: argument parsing, dispatch, output rendering
//! and exit codes. [`run`] is the whole program minus process exit, so it
//! can be driven from tests.

pub mod args;
mod commands;
pub mod memory;
pub mod record;

use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::error::ErrorKind;
use clap::Parser;
use tess4_core::Error;

pub use args::{Cli, Format};
pub use record::{OutputRecord, SCHEMA_VERSION};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// Precondition violated or degenerate input.
    pub const DOMAIN: i32 = 2;
    /// A bounded search found nothing.
    pub const NOT_FOUND: i32 = 3;
    /// Internal identity failed, arithmetic overflow, or a panic.
    pub const INTERNAL: i32 = 4;
    /// `TESS4_MAX_MEM_MB` exceeded.
    pub const MEMORY: i32 = 5;
    pub const USAGE: i32 = 64;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, msg: impl Into<String>) -> Outcome {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code, stdout: String::new(), stderr }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Degenerate(_) => exit::DOMAIN,
        Error::NotFound(_) => exit::NOT_FOUND,
        Error::Internal(_) | Error::Overflow(_) => exit::INTERNAL,
    }
}

/// Runs with the memory cap taken from `TESS4_MAX_MEM_MB`.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match memory::cap_from_env() {
        Ok(cap) => run_with_cap(argv, cap),
        Err(msg) => Outcome::fail(exit::USAGE, format!("error: {msg}")),
    }
}

/// Runs `argv` (program name first). When `cap_mb` is set and the peak
/// resident set ends above it, the output is dropped and the exit code is 5.
pub fn run_with_cap<I, T>(argv: I, cap_mb: Option<u64>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: exit::OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome::fail(exit::USAGE, text),
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads as usize).build() {
        Ok(p) => p,
        Err(e) => return Outcome::fail(exit::INTERNAL, format!("error: thread pool: {e}")),
    };
    let result = catch_unwind(AssertUnwindSafe(|| pool.install(|| commands::execute(&cli.command))));
    let mut out = match result {
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| panic.downcast_ref::<&str>().copied())
                .unwrap_or("unknown panic");
            Outcome::fail(exit::INTERNAL, format!("internal error: {msg}"))
        }
        Ok(Err(e)) => Outcome::fail(exit_code(&e), format!("error: {e}")),
        Ok(Ok(report)) => {
            let stderr = if cli.format == Format::Json {
                String::new()
            } else {
                report.record.diagnostics.iter().map(|d| format!("note: {d}\n")).collect()
            };
            Outcome { code: exit::OK, stdout: report.render(cli.format), stderr }
        }
    };
    if let (Some(cap), Some(kb)) = (cap_mb, memory::peak_kb()) {
        if memory::exceeded(cap, kb) {
            out = Outcome::fail(
                exit::MEMORY,
                format!("error: peak resident memory {} MB exceeds {}={cap}", kb / 1024, memory::ENV_VAR),
            );
        }
    }
    out
}
