use std::path::Path;
use std::process::ExitCode;

use clap::Parser;

use bilat_lp::{run, CliConfig};

fn read(path: Option<&Path>) -> Result<Option<String>, String> {
    path.map(|p| std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))).transpose()
}

fn main() -> ExitCode {
    let cfg = match CliConfig::try_parse() {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let inputs = read(cfg.program.as_deref()).and_then(|p| Ok((p, read(cfg.at.as_deref())?)));
    let (program, interp) = match inputs {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let out = run(&cfg, program.as_deref(), interp.as_deref());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
