use std::io::Write;

fn main() {
    if let Ok(Some(cap)) = tess4_cli::memory::cap_from_env() {
        tess4_cli::memory::spawn_watchdog(cap, tess4_cli::exit::MEMORY);
    }
    let out = tess4_cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
