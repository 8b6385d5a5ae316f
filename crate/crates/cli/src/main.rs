use std::io::Write;

fn main() {
    let out = cli::run(std::env::args_os(), std::env::var(cli::CATALOG_ENV).ok());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
