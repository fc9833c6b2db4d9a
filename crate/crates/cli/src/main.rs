mod record;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use zernike_core::bases::{BasisId, Domain, MultipletLabel, System};
use zernike_core::interbasis::{assemble_matrix, Pair, Route};
use zernike_core::oracle::GridSample;
use zernike_core::verify::{run_suite, Suite};
use zernike_core::Complex64;

use record::records;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] zernike_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("serialization: {0}")]
    Serialize(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use zernike_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Core(E::Domain(_) | E::InadmissibleRoute { .. }) => 1,
            _ => 3,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "zernike",
    version,
    about = "Zernike system bases and interbasis coefficients"
)]
struct Cli {
    /// Worker threads for the parallel parts; defaults to all cores.
    #[arg(long, global = true, env = "ZERNIKE_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the coefficient matrix of one multiplet.
    Coeffs {
        #[arg(long, value_parser = parse_pair)]
        pair: Pair,
        #[arg(long)]
        n: u32,
        /// Defaults to 3f2 for I-II and I-III, cgsum for II-III.
        #[arg(long, value_parser = parse_route)]
        route: Option<Route>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Sample one basis function on a square grid over the disk.
    Grid {
        #[arg(long, value_parser = parse_system)]
        system: System,
        /// `n,m` for system I, `k1,k2` for systems II and III.
        #[arg(long)]
        label: String,
        #[arg(long, default_value_t = 256)]
        resolution: usize,
        #[arg(long, value_enum, default_value_t = Format::Ppm)]
        format: Format,
        /// Sample `Υ = ξ₃^{1/2} Ψ` instead of `Ψ`.
        #[arg(long)]
        hemisphere: bool,
        /// Write here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Run an invariant suite and report every check.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long)]
        tolerance: Option<f64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Ppm,
}

fn parse_pair(s: &str) -> Result<Pair, String> {
    s.parse().map_err(|e: zernike_core::Error| e.to_string())
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse().map_err(|e: zernike_core::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: zernike_core::Error| e.to_string())
}

fn parse_system(s: &str) -> Result<System, String> {
    match s {
        "I" => Ok(System::I),
        "II" => Ok(System::II),
        "III" => Ok(System::III),
        _ => Err(format!("unknown system {s:?}; expected I, II or III")),
    }
}

fn parse_label(system: System, s: &str) -> Result<MultipletLabel, CliError> {
    let bad = || CliError::Usage(format!("label {s:?} must be two comma-separated integers"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let (a, b) = (a.trim(), b.trim());
    let label = match system {
        System::I => {
            MultipletLabel::polar(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)?
        }
        System::II | System::III => {
            MultipletLabel::cartesian(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
        }
    };
    Ok(label)
}

fn coeffs(
    pair: Pair,
    n: u32,
    route: Option<Route>,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let route = route.unwrap_or_else(|| pair.default_route());
    if !pair.admits(route) {
        return Err(CliError::Usage(format!(
            "route {route} is not admissible for pair {pair}"
        )));
    }
    let matrix = assemble_matrix(n, pair, route)?;
    let rows = records(&matrix);
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &rows {
                w.serialize(r)
                    .map_err(|e| CliError::Serialize(e.to_string()))?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows)
                .map_err(|e| CliError::Serialize(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Ppm => {
            return Err(CliError::Usage(
                "coefficient tables are written as csv or json".into(),
            ))
        }
    }
    Ok(())
}

fn grid(
    system: System,
    label: &str,
    resolution: usize,
    format: Format,
    hemisphere: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let label = parse_label(system, label)?;
    let domain = if hemisphere {
        Domain::Hemisphere
    } else {
        Domain::Disk
    };
    let basis = BasisId::new(system, label, domain)?;
    let sample = GridSample::sample(&basis, resolution)?;
    // polar functions with m < 0 are shown through their imaginary part
    let part = match label {
        MultipletLabel::Polar { m, .. } if m < 0 => |v: Complex64| v.im,
        _ => |v: Complex64| v.re,
    };
    match format {
        Format::Ppm => out.write_all(&sample.to_ppm(part))?,
        Format::Csv => {
            for row in 0..resolution {
                let line: Vec<String> = (0..resolution)
                    .map(|col| {
                        sample
                            .get(row, col)
                            .map_or_else(String::new, |v| part(v).to_string())
                    })
                    .collect();
                writeln!(out, "{}", line.join(","))?;
            }
        }
        Format::Json => return Err(CliError::Usage("grids are written as csv or ppm".into())),
    }
    Ok(())
}

fn verify(
    suite: Suite,
    n_max: Option<u32>,
    tolerance: Option<f64>,
    out: &mut dyn Write,
) -> Result<bool, CliError> {
    let report = run_suite(
        suite,
        n_max.unwrap_or_else(|| suite.default_n_max()),
        tolerance,
    )?;
    writeln!(out, "{report}")?;
    Ok(report.passed())
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let stdout = io::stdout();
    let mut out: Box<dyn Write> = Box::new(BufWriter::new(stdout.lock()));
    let code = match cli.command {
        Command::Coeffs {
            pair,
            n,
            route,
            format,
        } => {
            coeffs(pair, n, route, format, &mut out)?;
            ExitCode::SUCCESS
        }
        Command::Grid {
            system,
            label,
            resolution,
            format,
            hemisphere,
            output,
        } => {
            if let Some(path) = output {
                out = Box::new(BufWriter::new(File::create(path)?));
            }
            grid(system, &label, resolution, format, hemisphere, &mut out)?;
            ExitCode::SUCCESS
        }
        Command::Verify {
            suite,
            n_max,
            tolerance,
        } => {
            if verify(suite, n_max, tolerance, &mut out)? {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
