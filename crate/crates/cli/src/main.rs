mod report;
mod svg;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use qchan_core::depolarizing_geometry::{
    canonical_sign_representative, epsilons_from_point, in_tetrahedron, GEOMETRY_TOL,
    SIMULABLE_FRACTION, SIMULABLE_VOLUME, TETRAHEDRON_VOLUME,
};
use qchan_core::{
    analytic_affine, analytic_volume, canonical_diagonal, cross_section, extract_affine,
    invert_to_angles, is_simulable, mc_volume_fraction, two_pauli_simulable, AffineMap,
    ChannelParams, DiagonalPoint,
};

use report::{
    Affine, AffineReport, ChannelArgs, CrossSectionReport, KappaVerdict, Render, SimulableReport,
    TwoPauliReport, VolumeReport,
};

const EXIT_NOT_SIMULABLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_OUTSIDE: u8 = 3;
const EXIT_IO: u8 = 4;

/// Quadrature nodes for the volume integral.
const QUADRATURE_POINTS: usize = 10_000;

/// Single-qubit channels from a one-qubit mixed environment.
#[derive(Parser, Debug)]
#[command(name = "qchan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Affine Bloch map of a channel, by tomography and in closed form.
    Affine {
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        gamma: f64,
        /// Polar angle of the environment's pure part.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        xi: f64,
        /// Azimuth of the environment's pure part.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        eta: f64,
        /// Weight of the pure part, in [0, 1].
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[command(flatten)]
        output: Output,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Whether the Pauli channel diag(x, y, z) is simulable. Exit 0 if so,
    /// 1 if not, 3 if the point is not a channel.
    Simulable {
        /// x y z
        #[arg(num_args = 3, value_names = ["X", "Y", "Z"], allow_negative_numbers = true,
              conflicts_with_all = ["x", "y", "z"])]
        coords: Option<Vec<f64>>,
        #[arg(long, allow_negative_numbers = true)]
        x: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        y: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        z: Option<f64>,
        #[command(flatten)]
        output: Output,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo and quadrature volume of the simulable region.
    Volume {
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        output: Output,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render the simulable part of the slice z = z0 as SVG.
    CrossSection {
        #[arg(long, allow_negative_numbers = true)]
        z0: f64,
        /// Cells per side.
        #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u32).range(1..=4096))]
        grid: u32,
        /// SVG destination.
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Scan the two-Pauli family diag(k, k, 2k - 1) over a grid of [0, 1].
    TwoPauli {
        #[arg(long, default_value_t = 11, value_parser = clap::value_parser!(u32).range(2..))]
        steps: u32,
        #[command(flatten)]
        output: Output,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<qchan_core::Error> for Failure {
    fn from(e: qchan_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(report: &impl Render, format: Format, out: Option<&Path>) -> Result<(), Failure> {
    let body = match format {
        Format::Text => report.text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
    };
    match out {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn to_affine(map: &AffineMap) -> Affine {
    Affine { m: map.m, c: map.c }
}

fn cmd_affine(args: ChannelArgs, format: Format, out: Option<&Path>) -> Result<u8, Failure> {
    let params = ChannelParams::new(
        args.alpha,
        args.beta,
        args.gamma,
        args.xi,
        args.eta,
        args.lambda,
    )?;
    let measured = extract_affine(&params)?;
    let analytic = analytic_affine(&params);
    let report = AffineReport {
        params: args,
        max_deviation: measured.max_abs_diff(&analytic),
        signed_diagonal: canonical_diagonal(&measured.m).d,
        zero_shift: qchan_core::channel_map::is_zero_shift(&params, 1e-12),
        tomography: to_affine(&measured),
        analytic: to_affine(&analytic),
    };
    emit(&report, format, out)?;
    Ok(0)
}

fn cmd_simulable(point: DiagonalPoint, format: Format, out: Option<&Path>) -> Result<u8, Failure> {
    let inside = in_tetrahedron(point, GEOMETRY_TOL);
    let simulable = is_simulable(point, GEOMETRY_TOL);
    let angles = if simulable {
        invert_to_angles(point)
    } else {
        None
    };
    let report = SimulableReport {
        point: point.to_array(),
        in_tetrahedron: inside,
        epsilons: epsilons_from_point(point),
        representative: canonical_sign_representative(point).map(DiagonalPoint::to_array),
        simulable,
        angles: angles.map(|s| [s.a, s.b, s.c]),
    };
    emit(&report, format, out)?;
    Ok(match (inside, simulable) {
        (false, _) => EXIT_OUTSIDE,
        (true, true) => 0,
        (true, false) => EXIT_NOT_SIMULABLE,
    })
}

fn cmd_volume(samples: u64, seed: u64, format: Format, out: Option<&Path>) -> Result<u8, Failure> {
    let est = mc_volume_fraction(samples, seed)?;
    let report = VolumeReport {
        samples,
        seed,
        in_tetrahedron: est.in_tetrahedron,
        simulable: est.simulable,
        fraction: est.fraction(),
        stderr: est.stderr(),
        acceptance: est.acceptance(),
        acceptance_stderr: est.acceptance_stderr(),
        quadrature_volume: analytic_volume(QUADRATURE_POINTS)?,
        reference_fraction: SIMULABLE_FRACTION,
        reference_volume: SIMULABLE_VOLUME,
        tetrahedron_volume: TETRAHEDRON_VOLUME,
    };
    emit(&report, format, out)?;
    Ok(0)
}

fn cmd_cross_section(z0: f64, grid: usize, svg_path: &Path, format: Format) -> Result<u8, Failure> {
    let cs = cross_section(z0, grid)?;
    std::fs::write(svg_path, svg::render(&cs))
        .map_err(|e| Failure::Io(format!("{}: {e}", svg_path.display())))?;
    let report = CrossSectionReport {
        z0,
        grid,
        shaded_cells: cs.shaded_cells(),
        area: cs.area,
        slice_area: cs.rect.area,
        fraction: cs.fraction,
        svg: svg_path.display().to_string(),
    };
    emit(&report, format, None)?;
    Ok(0)
}

fn cmd_two_pauli(steps: usize, format: Format, out: Option<&Path>) -> Result<u8, Failure> {
    let verdicts = (0..steps)
        .map(|k| {
            let kappa = k as f64 / (steps - 1) as f64;
            Ok(KappaVerdict {
                kappa,
                simulable: two_pauli_simulable(kappa)?,
            })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    emit(&TwoPauliReport::new(verdicts), format, out)?;
    Ok(0)
}

fn simulable_point(
    coords: Option<Vec<f64>>,
    x: Option<f64>,
    y: Option<f64>,
    z: Option<f64>,
) -> DiagonalPoint {
    if let Some(c) = coords {
        return DiagonalPoint::new(c[0], c[1], c[2]);
    }
    match (x, y, z) {
        (Some(x), Some(y), Some(z)) => DiagonalPoint::new(x, y, z),
        _ => {
            let mut cli = Cli::command();
            let sub = cli
                .find_subcommand_mut("simulable")
                .expect("subcommand exists");
            sub.error(
                ErrorKind::MissingRequiredArgument,
                "give X Y Z or all of --x, --y, --z",
            )
            .exit()
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Affine {
            alpha,
            beta,
            gamma,
            xi,
            eta,
            lambda,
            output,
            out,
        } => cmd_affine(
            ChannelArgs {
                alpha,
                beta,
                gamma,
                xi,
                eta,
                lambda,
            },
            output.format,
            out.as_deref(),
        ),
        Command::Simulable {
            coords,
            x,
            y,
            z,
            output,
            out,
        } => cmd_simulable(
            simulable_point(coords, x, y, z),
            output.format,
            out.as_deref(),
        ),
        Command::Volume {
            samples,
            seed,
            output,
            out,
        } => cmd_volume(samples, seed, output.format, out.as_deref()),
        Command::CrossSection {
            z0,
            grid,
            out,
            output,
        } => cmd_cross_section(z0, grid as usize, &out, output.format),
        Command::TwoPauli { steps, output, out } => {
            cmd_two_pauli(steps as usize, output.format, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}
