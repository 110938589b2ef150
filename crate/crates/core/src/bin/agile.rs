use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use agile_eye::analysis::commands::{self, CommandOutput, Context, OrientationInput, EXIT_PARSE};
use agile_eye::analysis::{ConfigOverrides, OutputFormat, ToolConfig};

#[derive(Parser)]
#[command(name = "agile", version, about = "Kinematics of the orthogonal 3-RRR spherical wrist")]
struct Cli {
    /// Max constraint residual for an assembled configuration.
    #[arg(long, global = true)]
    tol_residual: Option<f64>,
    /// |det A| at or below this counts as singular.
    #[arg(long, global = true)]
    tol_singular: Option<f64>,
    /// Threshold for exact-structure tests (condition pairs, q2 = 0).
    #[arg(long, global = true)]
    tol_structure: Option<f64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Read and write angles in degrees.
    #[arg(long, global = true)]
    degrees: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Orientation {
    /// ZYX Euler angles phi theta psi.
    #[arg(long, num_args = 3, value_names = ["PHI", "THETA", "PSI"])]
    euler: Option<Vec<f64>>,
    /// Rotation matrix entries, row-major.
    #[arg(long, num_args = 9, value_name = "R")]
    matrix: Option<Vec<f64>>,
}

impl Orientation {
    fn input(&self) -> OrientationInput {
        match (&self.euler, &self.matrix) {
            (Some(e), _) => OrientationInput::Euler([e[0], e[1], e[2]]),
            (_, Some(m)) => OrientationInput::Matrix(std::array::from_fn(|i| m[i])),
            _ => unreachable!("clap enforces one orientation"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Inverse kinematics: all joint solutions for an orientation.
    #[command(allow_negative_numbers = true)]
    Ik {
        #[command(flatten)]
        orientation: Orientation,
        /// Give arbitrary legs the angle 0 instead of dropping the solutions.
        #[arg(long)]
        fill_arbitrary: bool,
    },
    /// Direct kinematics: platform orientations for three joint angles.
    #[command(allow_negative_numbers = true)]
    Dk {
        #[arg(num_args = 3, value_names = ["THETA1", "THETA2", "THETA3"], required = true)]
        joints: Vec<f64>,
    },
    /// Velocity Jacobians A and B of a configuration.
    #[command(allow_negative_numbers = true)]
    Jacobian {
        #[arg(long, num_args = 3, required = true)]
        joints: Vec<f64>,
        #[command(flatten)]
        orientation: Orientation,
    },
    /// Singularity class of a configuration.
    #[command(allow_negative_numbers = true)]
    Classify {
        #[arg(long, num_args = 3, required = true)]
        joints: Vec<f64>,
        #[command(flatten)]
        orientation: Orientation,
    },
    /// Points of a self-motion family (1..6, SM1a..SM3b).
    #[command(name = "self-motion", allow_negative_numbers = true)]
    SelfMotion {
        family: String,
        /// Explicit curve parameters; repeatable.
        #[arg(long = "param")]
        params: Vec<f64>,
        /// Number of evenly spaced parameters when none are given.
        #[arg(long, default_value_t = 12)]
        samples: usize,
    },
    /// Follow one assembly mode along a joint path (CSV file, `-` for stdin).
    #[command(allow_negative_numbers = true)]
    Track {
        path: PathBuf,
        #[command(flatten)]
        start: Orientation,
    },
    /// Sweep the joint-space grid and label det(A) sign regions.
    Sweep {
        #[arg(long)]
        grid_n: Option<usize>,
        /// Print only the summary.
        #[arg(long)]
        summary_only: bool,
    },
}

fn read_path(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn run(cli: Cli) -> CommandOutput {
    let overrides = ConfigOverrides {
        residual_tol: cli.tol_residual,
        singular_tol: cli.tol_singular,
        structure_tol: cli.tol_structure,
        grid_n: match &cli.command {
            Command::Sweep { grid_n, .. } => *grid_n,
            _ => None,
        },
        output_format: cli.format.map(|f| match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        }),
    };
    let config = match ToolConfig::from_env().and_then(|c| c.with_overrides(&overrides)) {
        Ok(c) => c,
        Err(e) => return CommandOutput::failure(EXIT_PARSE, e),
    };
    let ctx = Context { config, degrees: cli.degrees };
    let triple = |v: &[f64]| [v[0], v[1], v[2]];
    match &cli.command {
        Command::Ik { orientation, fill_arbitrary } => {
            commands::cmd_ik(&ctx, &orientation.input(), *fill_arbitrary)
        }
        Command::Dk { joints } => commands::cmd_dk(&ctx, triple(joints)),
        Command::Jacobian { joints, orientation } => {
            commands::cmd_jacobian(&ctx, triple(joints), &orientation.input())
        }
        Command::Classify { joints, orientation } => {
            commands::cmd_classify(&ctx, triple(joints), &orientation.input())
        }
        Command::SelfMotion { family, params, samples } => {
            commands::cmd_self_motion(&ctx, family, params, *samples)
        }
        Command::Track { path, start } => match read_path(path) {
            Ok(text) => commands::cmd_track(&ctx, &text, &start.input()),
            Err(e) => CommandOutput::failure(EXIT_PARSE, format!("{}: {e}", path.display())),
        },
        Command::Sweep { summary_only, .. } => commands::cmd_sweep(&ctx, *summary_only),
    }
}

fn main() -> ExitCode {
    let out = run(Cli::parse());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
