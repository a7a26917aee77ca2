use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let guard = std::env::var("EXTREMAL_GUARD").ok();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = extremal_cli::run(
        std::env::args_os(),
        guard.as_deref(),
        &mut io::stdin().lock(),
        &mut out,
        &mut io::stderr(),
    );
    if out.flush().is_err() {
        return ExitCode::from(5);
    }
    ExitCode::from(code)
}
