use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sustar::{compute, fixture, run, Backend, ConfigError, SuiteConfig};

#[derive(Parser)]
#[command(name = "sustar", version, about = "Ordered *-algebra toolkit and verification harness")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run seeded verification suites.
    Verify {
        /// Suite to run; repeat for several, or `all`.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, default_value = "matrix")]
        backend: Backend,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Override of the equality tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply one operation to a JSON element.
    Compute {
        /// sqrt, abs, pospart, vee, wedge, inverse, seminorm, metric, polycalc or downarrow.
        op: String,
        #[arg(long = "in")]
        input: PathBuf,
        /// Second operand, or the Hamiltonian for `downarrow`.
        #[arg(long)]
        rhs: Option<PathBuf>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a fixture with its headline check.
    Fixture {
        /// twisted-circle, upper-triangular or hamiltonian-demo.
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, format!("{text}\n")).map_err(|e| format!("{}: {e}", p.display())),
        None => match writeln!(std::io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(format!("stdout: {e}")),
            _ => Ok(()),
        },
    }
}

fn read(p: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Command::Verify {
            suites,
            backend,
            dim,
            trials,
            seed,
            tol,
            out,
        } => {
            let cfg = SuiteConfig {
                backend,
                dim,
                trials,
                seed,
                tol_eq: tol,
                suites,
            };
            let report = match run(&cfg) {
                Ok(r) => r,
                Err(e @ (ConfigError::UnknownSuite(_) | ConfigError::Invalid(_))) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            for line in report.summary_lines() {
                eprintln!("{line}");
            }
            let s = &report.summary;
            eprintln!("{} checks: {} passed, {} xfail, {} failed", s.checks, s.passed, s.xfail, s.failed);
            let text = serde_json::to_string_pretty(&report).expect("serializable");
            if let Err(e) = emit(&text, out.as_ref()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Command::Compute {
            op,
            input,
            rhs,
            tol,
            out,
        } => {
            let texts = read(&input).and_then(|i| Ok((i, rhs.as_ref().map(read).transpose()?)));
            let (input, rhs) = match texts {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            match compute(&op, &input, rhs.as_deref(), tol) {
                Ok(v) => match emit(&serde_json::to_string_pretty(&v).expect("serializable"), out.as_ref()) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => {
                        eprintln!("error: {e}");
                        ExitCode::from(1)
                    }
                },
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(e.exit_code() as u8)
                }
            }
        }
        Command::Fixture { name, out } => match fixture(&name) {
            Ok(v) => {
                if let Some(checks) = v["checks"].as_array() {
                    for c in checks {
                        eprintln!("{}", c.as_str().unwrap_or_default());
                    }
                }
                match emit(&serde_json::to_string_pretty(&v).expect("serializable"), out.as_ref()) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => {
                        eprintln!("error: {e}");
                        ExitCode::from(1)
                    }
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
    }
}
