use std::io::Write;

fn main() {
    hopfyb::cli::configure_threads();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code =
        hopfyb::cli::run_command(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
