use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use photon_audit::dipole::Handedness;
use photon_audit::forces::Spin;
use photon_audit::nuclear::default_species;
use photon_audit::relativity::{published_inputs, PUBLISHED_LAMBDA};
use photon_audit::report::{
    default_force_sweep, flux_svg, force_table, parse_species, table1_records, table2_records, verify_all,
    write_records, ForceSweep, OutputFormat, Table1Record, Table2Record, DEFAULT_PHI0,
};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
/// Force sweep acceptance threshold on the closed-form vs quadrature residual.
const FORCE_RESIDUAL_LIMIT: f64 = 1e-6;

#[derive(Parser)]
#[command(
    name = "photon-audit",
    version,
    about = "Tables, figures and checks for the guided-wave photon model"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Nuclear threshold-field table.
    Table1 {
        /// Z,A pairs separated by ';', e.g. "26,56;12,24".
        #[arg(long)]
        species: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Photon sizing table.
    Table2 {
        /// Wavelength in metres.
        #[arg(long, default_value_t = PUBLISHED_LAMBDA)]
        lambda: f64,
        /// Single custom row: field exponent alpha (needs --b).
        #[arg(long, requires = "b")]
        alpha: Option<f64>,
        /// Single custom row: guide radius in metres (needs --alpha).
        #[arg(long, requires = "alpha")]
        b: Option<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Run every check; exit 1 if any fails.
    VerifyAll {
        /// Multiplies the internal oracle tolerances.
        #[arg(long, default_value_t = 1.0)]
        tol_scale: f64,
        /// Emit the full report as JSON.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transverse flux-line figure as SVG.
    #[command(allow_negative_numbers = true)]
    FluxSvg {
        /// Wall-crossing azimuths in radians, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        phi0: Option<Vec<f64>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form vs quadrature force sweep over (d, alpha).
    #[command(allow_negative_numbers = true)]
    Forces {
        /// Half-spacings in metres, comma separated; pass with no value for an empty sweep.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        d: Option<Vec<f64>>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        alpha: Option<Vec<f64>>,
        #[arg(long, value_enum, default_value_t = SpinArg::Antiparallel)]
        spin: SpinArg,
        /// Phase between the two photons, radians.
        #[arg(long, default_value_t = 0.0)]
        chi: f64,
        /// Quadrature relative tolerance.
        #[arg(long, default_value_t = 1e-10)]
        rel_tol: f64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SpinArg {
    Parallel,
    Antiparallel,
}

enum Failure {
    Usage(String),
    Verify(String),
}

impl From<photon_audit::Error> for Failure {
    fn from(e: photon_audit::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => {
            let f = File::create(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Box::new(BufWriter::new(f))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Table1 { species, output } => {
            let species = match species {
                Some(s) => parse_species(&s)?,
                None => default_species(),
            };
            let rows = table1_records(&species)?;
            let mut w = sink(&output.out)?;
            write_records(&mut w, &rows, output.format.into(), &Table1Record::HEADERS)?;
            w.flush()?;
        }
        Cmd::Table2 {
            lambda,
            alpha,
            b,
            output,
        } => {
            let inputs = match (b, alpha) {
                (Some(b), Some(alpha)) => vec![(b, alpha)],
                _ => published_inputs(),
            };
            let rows = table2_records(&inputs, lambda)?;
            let mut w = sink(&output.out)?;
            write_records(&mut w, &rows, output.format.into(), &Table2Record::HEADERS)?;
            w.flush()?;
        }
        Cmd::VerifyAll { tol_scale, json, out } => {
            let report = verify_all(tol_scale)?;
            let mut w = sink(&out)?;
            if json {
                serde_json::to_writer_pretty(&mut w, &report).map_err(|e| Failure::Usage(e.to_string()))?;
                writeln!(w)?;
            } else {
                for f in &report.findings {
                    let status = if f.passed { "ok  " } else { "FAIL" };
                    writeln!(
                        w,
                        "{status} {:<36} {:<15} residual {:.3e} (tol {:.1e})",
                        f.id,
                        f.verdict.as_str(),
                        f.residual,
                        f.tolerance
                    )?;
                }
                for id in &report.missing {
                    writeln!(w, "FAIL {id:<36} documented discrepancy not observed")?;
                }
                let n = report.findings.len();
                let d = report.discrepancies().count();
                writeln!(
                    w,
                    "{n} checks, {d} documented discrepancies, {}",
                    if report.passed { "all as expected" } else { "FAILED" }
                )?;
            }
            w.flush()?;
            if !report.passed {
                return Err(Failure::Verify("verification failed".into()));
            }
        }
        Cmd::FluxSvg { phi0, out } => {
            let phi0 = phi0.unwrap_or_else(|| DEFAULT_PHI0.to_vec());
            let fig = flux_svg(&phi0)?;
            let mut w = sink(&out)?;
            w.write_all(fig.svg.as_bytes())?;
            w.flush()?;
        }
        Cmd::Forces {
            d,
            alpha,
            spin,
            chi,
            rel_tol,
            output,
        } => {
            let spin = match spin {
                SpinArg::Parallel => Spin::Parallel,
                SpinArg::Antiparallel => Spin::Antiparallel,
            };
            let (base, default_ds, default_alphas) = default_force_sweep(spin)?;
            let base = base.with_chi(chi).with_branch(Handedness::Upper);
            let ds = d.unwrap_or(default_ds);
            let alphas = alpha.unwrap_or(default_alphas);
            let ForceSweep {
                rows,
                max_residual,
                d_slope,
            } = force_table(&base, &ds, &alphas, rel_tol)?;
            let mut w = sink(&output.out)?;
            write_records(&mut w, &rows, output.format.into(), &ForceSweep::HEADERS)?;
            w.flush()?;
            match d_slope {
                Some(s) => eprintln!(
                    "{} rows, max residual {max_residual:.3e}, d exponent {s:.6}",
                    rows.len()
                ),
                None => eprintln!("{} rows, max residual {max_residual:.3e}", rows.len()),
            }
            if max_residual > FORCE_RESIDUAL_LIMIT {
                return Err(Failure::Verify(format!(
                    "max residual {max_residual:.3e} exceeds {FORCE_RESIDUAL_LIMIT:e}"
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}
