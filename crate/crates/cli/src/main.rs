//! `sqc`: sweeps and solves for the deformed collective qubit-chain model.
//!
//! Exit codes: 0 success, 1 numerical failure or I/O error, 2 usage error,
//! 3 empty sector, 4 capacity exceeded.

mod commands;
mod parse;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sqc_core::algebra::{deformation_factor, ChainConfig};
use sqc_core::{Error, HalfInt};

use commands::{Report, SpectrumArgs, Table1Args};

#[derive(Parser, Debug)]
#[command(
    name = "sqc",
    version,
    about = "Deformed-algebra spectra of a qubit chain in a cavity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Deformation factor R(N, l) at one point.
    Deform {
        #[arg(long)]
        n: usize,
        /// Spacing, decimal or `p/q`.
        #[arg(long, value_parser = parse::rational)]
        l: f64,
    },
    /// R(N, l) on a uniform grid.
    DeformSweep {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse::rational)]
        l_start: f64,
        #[arg(long, value_parser = parse::rational)]
        l_end: f64,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
    },
    /// Casimir term h(m) = R (m^2 + m).
    Hcurve {
        /// R directly; otherwise computed from --n and --l.
        #[arg(long, value_parser = parse::rational, conflicts_with_all = ["n", "l"], required_unless_present_all = ["n", "l"])]
        deformation: Option<f64>,
        #[arg(long, requires = "l")]
        n: Option<usize>,
        #[arg(long, value_parser = parse::rational, requires = "n")]
        l: Option<f64>,
        #[arg(long, value_parser = parse::rational, default_value = "-3", allow_hyphen_values = true)]
        m_min: f64,
        #[arg(long, value_parser = parse::rational, default_value = "3", allow_hyphen_values = true)]
        m_max: f64,
        #[arg(long, default_value_t = 121)]
        steps: usize,
    },
    /// Dressed states of the collective ladder with r = N/2.
    Spectrum(ChainArgs),
    /// Collective-model levels against the exact sector spectrum.
    OracleCompare(ChainArgs),
    /// Four-qubit, one-excitation amplitudes c_0..c_3 by every route.
    Table1 {
        #[arg(long, value_parser = parse::rational, default_value = "2/3")]
        l: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        wq: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        w0: f64,
        #[arg(long, default_value_t = 1.0)]
        eta: f64,
    },
    /// Stationary points of R(N, l) and the crossover spacing.
    Crossover {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct ChainArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse::rational)]
    l: f64,
    /// Excitation number S_z + a^dagger a, integer or half-integer.
    #[arg(long, value_parser = parse::half_int, default_value = "1", allow_hyphen_values = true)]
    u: HalfInt,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    wq: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    w0: f64,
    #[arg(long, default_value_t = 0.1)]
    eta: f64,
}

impl ChainArgs {
    fn to_spectrum_args(&self) -> Result<SpectrumArgs, Error> {
        Ok(SpectrumArgs {
            config: ChainConfig::new(self.n, self.l, self.wq, self.w0, self.eta)?,
            u: self.u,
        })
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidParameter(_) | Error::NegativeRadicand { .. } => 2,
        Error::EmptySector(_) | Error::EmptySubspace { .. } => 3,
        Error::CapacityExceeded(_) => 4,
        _ => 1,
    }
}

fn run(command: &Command) -> Result<Report, Error> {
    match command {
        Command::Deform { n, l } => commands::deform(*n, *l),
        Command::DeformSweep {
            n,
            l_start,
            l_end,
            steps,
        } => commands::deform_sweep(*n, *l_start, *l_end, *steps),
        Command::Hcurve {
            deformation,
            n,
            l,
            m_min,
            m_max,
            steps,
        } => {
            let r = match (deformation, n, l) {
                (Some(r), _, _) => *r,
                (None, Some(n), Some(l)) => deformation_factor(*n, *l)?.value,
                _ => unreachable!("clap enforces --deformation or --n with --l"),
            };
            commands::hcurve(r, *m_min, *m_max, *steps)
        }
        Command::Spectrum(args) => commands::spectrum(&args.to_spectrum_args()?),
        Command::OracleCompare(args) => commands::oracle_compare(&args.to_spectrum_args()?),
        Command::Table1 { l, wq, w0, eta } => commands::table1(&Table1Args {
            spacing: *l,
            qubit_freq: *wq,
            photon_freq: *w0,
            coupling: *eta,
        }),
        Command::Crossover { n } => commands::crossover(*n),
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Csv => report.table.to_csv(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("JSON values serialize");
            s.push('\n');
            s
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = render(&report, cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            ExitCode::from(1)
        }
    }
}
