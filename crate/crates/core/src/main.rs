use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use contextuality_lab::hv_models::{builtin_constraints, enumerate_scalar_assignments, ConstraintSet};
use contextuality_lab::identity_model::{find_identity_maps, SignedGenerator};
use contextuality_lab::verify::{self, Target, VerifyOptions, DEFAULT_SEED, SEED_ENV};
use contextuality_lab::{chsh, Mode};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "contextuality-lab", version, about = "Verify geometric-algebra hidden-variable models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its JSON report.
    Verify {
        /// pm, ghz, bell-ghz, operators, states, a3, algebra, multi-system, chsh or all
        target: Target,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "exact")]
        mode: Mode,
        /// Seed for the randomized checks; CONTEXTUALITY_LAB_SEED takes precedence.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Scan F(φ) over [start, end] and report its maximum.
    Chsh {
        #[arg(allow_negative_numbers = true)]
        start: f64,
        #[arg(allow_negative_numbers = true)]
        end: f64,
        steps: usize,
        /// Write phi,F,qm_lhs,classical_bound,qm_bound rows here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// List identity maps whose Bell-GHZ column is (x, x, x, −x).
    SearchIdentities {
        /// A signed in-plane generator such as e1, -e2 or g1.
        #[arg(allow_hyphen_values = true)]
        target: String,
    },
    /// Print a built-in constraint set as JSON.
    Constraints {
        /// pm, ghz or bell_ghz
        name: String,
    },
    /// Exhaustively search ±1 assignments for a constraint set in a JSON file.
    Enumerate { file: PathBuf },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn failed(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_FAILED)
}

fn emit(text: &str, out: Option<&PathBuf>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")),
        None => match writeln!(io::stdout().lock(), "{text}") {
            // A closed pipe (e.g. `| head`) is not an error.
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            other => other,
        },
    }
}

fn print(text: &str) -> ExitCode {
    match emit(text, None) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => failed(e),
    }
}

fn resolve_seed(flag: u64) -> Result<u64, String> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{SEED_ENV}='{v}' is not an unsigned integer")),
        Err(_) => Ok(flag),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { target, out, mode, seed } => {
            let seed = match resolve_seed(seed) {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            let report = verify::run(target, VerifyOptions { mode, seed });
            if let Err(e) = emit(&report.to_json(), out.as_ref()) {
                return failed(e);
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
        Command::Chsh { start, end, steps, csv } => {
            let scan = match chsh::scan_range(start, end, steps) {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            if let Some(path) = csv {
                let rows = match chsh::csv_rows(start, end, steps) {
                    Ok(r) => r,
                    Err(e) => return usage(e),
                };
                let written = fs::File::create(&path).and_then(|f| chsh::write_csv(&rows, io::BufWriter::new(f)));
                if let Err(e) = written {
                    return failed(format!("{}: {e}", path.display()));
                }
            }
            print(&scan.summary())
        }
        Command::SearchIdentities { target } => {
            let maps = match target.parse::<SignedGenerator>().and_then(find_identity_maps) {
                Ok(m) => m,
                Err(e) => return usage(e),
            };
            print(&serde_json::to_string_pretty(&maps).expect("maps serialize"))
        }
        Command::Constraints { name } => match builtin_constraints(&name) {
            Ok(cs) => print(&cs.to_json()),
            Err(e) => usage(e),
        },
        Command::Enumerate { file } => {
            let text = match fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return failed(format!("{}: {e}", file.display())),
            };
            let result = ConstraintSet::from_json(&text).and_then(|cs| enumerate_scalar_assignments(&cs));
            match result {
                Ok(search) => print(&serde_json::to_string_pretty(&search).expect("search serializes")),
                Err(e) => usage(e),
            }
        }
    }
}
