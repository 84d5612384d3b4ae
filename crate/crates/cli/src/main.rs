use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use galois_lcd::construct::{ConstructOptions, LcdMode, DEFAULT_MAX_K};
use galois_lcd::{codefile, Error, DEFAULT_CAP};
use galois_lcd_cli::Outcome;

#[derive(Parser)]
#[command(
    name = "galois-lcd",
    version,
    about = "Analyze linear codes over F_q + uF_q + vF_q + uvF_q"
)]
struct Cli {
    /// Print the machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters, LCD and hull data, self-duality and the MDS verdict.
    Analyze {
        file: PathBuf,
        /// Galois exponents to test; defaults to every l in 0..e.
        #[arg(long = "l", value_delimiter = ',')]
        ls: Vec<u32>,
        /// Largest number of codewords enumerated for a distance.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_enum: u64,
    },
    /// Scale the code into an equivalent Euclidean or l-Galois LCD code.
    ConstructLcd {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Galois exponent, required for --mode galois.
        #[arg(long)]
        l: Option<u32>,
        /// Pick scaling factors at random from this seed instead of smallest-first.
        #[arg(long)]
        seed: Option<u64>,
        /// Largest Gram matrix the minor search accepts.
        #[arg(long, default_value_t = DEFAULT_MAX_K)]
        max_k: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_enum: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the l-Galois dual.
    Dual {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the Gray image as a code over GF(q).
    Gray {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Minimum component and Lee distances by enumeration.
    Mindist {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_enum: u64,
    },
    /// Check every fast path against brute-force enumeration.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_enum: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Euclid,
    Galois,
}

enum Failure {
    Io(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn load(path: &Path) -> Result<galois_lcd::RCode, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(codefile::parse_code_file(&text)?)
}

fn run(cli: &Cli) -> Result<(Outcome, Option<&Path>), Failure> {
    Ok(match &cli.command {
        Command::Analyze { file, ls, max_enum } => (galois_lcd_cli::analyze(&load(file)?, ls, *max_enum)?, None),
        Command::ConstructLcd {
            file,
            mode,
            l,
            seed,
            max_k,
            max_enum,
            output,
        } => {
            let mode = match (mode, l) {
                (Mode::Euclid, _) => LcdMode::Euclidean,
                (Mode::Galois, Some(l)) => LcdMode::Galois(*l),
                (Mode::Galois, None) => return Err(Failure::Io("--mode galois needs --l".into())),
            };
            let opts = ConstructOptions {
                seed: *seed,
                max_k: *max_k,
            };
            (
                galois_lcd_cli::construct_lcd(&load(file)?, mode, &opts, *max_enum)?,
                output.as_deref(),
            )
        }
        Command::Dual { file, l, output } => (galois_lcd_cli::dual(&load(file)?, *l)?, output.as_deref()),
        Command::Gray { file, output } => (galois_lcd_cli::gray(&load(file)?)?, output.as_deref()),
        Command::Mindist { file, max_enum } => (galois_lcd_cli::mindist(&load(file)?, *max_enum)?, None),
        Command::Verify { file, max_enum } => (galois_lcd_cli::verify(&load(file)?, *max_enum)?, None),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, path)) => {
            if let (Some(path), Some(doc)) = (path, &out.document) {
                if let Err(e) = std::fs::write(path, doc) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            let mut text = String::new();
            if cli.json {
                text = codefile::render_json(&out.report);
                text.push('\n');
            } else {
                text.push_str(&out.text);
                match (path, &out.document) {
                    (Some(path), Some(_)) => text.push_str(&format!("wrote {}\n", path.display())),
                    (None, Some(doc)) => text.push_str(doc),
                    _ => {}
                }
            }
            // a closed pipe downstream is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(out.exit_code as u8)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
