use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use altind_cli::{run, Cli, RunConfig, Streams, EXIT_INPUT};
use clap::Parser;

fn main() -> ExitCode {
    let config = RunConfig::from(Cli::parse());
    let mut stdin = io::stdin().lock();
    let mut out = BufWriter::new(io::stdout().lock());
    let mut err = io::stderr().lock();
    let mut streams = Streams { stdin: &mut stdin, out: &mut out, err: &mut err };
    let code = run(&config, &mut streams).and_then(|code| out.flush().map(|_| code));
    match code {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(err, "altind: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
