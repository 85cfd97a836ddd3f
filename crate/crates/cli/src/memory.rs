//! Soft memory cap from `TESS4_MAX_MEM_MB`, checked against the resident
//! set size reported by `/proc/self/status`.

use std::time::Duration;

pub const ENV_VAR: &str = "TESS4_MAX_MEM_MB";

/// Cap in megabytes, `Ok(None)` when unset.
pub fn cap_from_env() -> Result<Option<u64>, String> {
    match std::env::var(ENV_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(format!("{ENV_VAR}: {e}")),
        Ok(s) => match s.trim().parse::<u64>() {
            Ok(0) | Err(_) => Err(format!("{ENV_VAR} must be a positive integer, got {s:?}")),
            Ok(n) => Ok(Some(n)),
        },
    }
}

fn status_kb(field: &str) -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with(field))?;
    line[field.len()..].split_whitespace().next()?.parse().ok()
}

/// Current resident set size in kilobytes, when the platform reports it.
pub fn resident_kb() -> Option<u64> {
    status_kb("VmRSS:")
}

/// Peak resident set size in kilobytes.
pub fn peak_kb() -> Option<u64> {
    status_kb("VmHWM:")
}

pub fn exceeded(cap_mb: u64, kb: u64) -> bool {
    kb > cap_mb * 1024
}

/// Background poller that ends the process with `code` once the resident
/// set passes the cap.
pub fn spawn_watchdog(cap_mb: u64, code: i32) {
    std::thread::spawn(move || loop {
        if let Some(kb) = resident_kb() {
            if exceeded(cap_mb, kb) {
                eprintln!("error: resident memory {} MB exceeds {ENV_VAR}={cap_mb}", kb / 1024);
                std::process::exit(code);
            }
        }
        std::thread::sleep(Duration::from_millis(50));
    });
}
