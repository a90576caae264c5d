use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lissaknot::{ExactAngle, Tolerances};

mod commands;
mod render;

use commands::{Failure, Output};

#[derive(Parser)]
#[command(name = "lissaknot", version, about = "Lissajous knot diagrams, invariants and constructions")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ParamArgs {
    #[arg(long)]
    nx: u32,
    #[arg(long)]
    ny: u32,
    #[arg(long)]
    nz: u32,
    /// Phase such as `0`, `1/2`, `pi/5` or `(19-3*pi)/10`.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    phx: ExactAngle,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    phy: ExactAngle,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    phz: ExactAngle,
}

#[derive(Subcommand)]
enum Command {
    /// Crossings, Gauss code, Alexander polynomial, Arf invariant and symmetry
    /// of one Lissajous knot.
    Analyze(ParamArgs),
    /// Member `m` of the twist family `(2, 2m+1, 6m+7)`, with its checks.
    Twist {
        #[arg(long)]
        m: u32,
        /// Height frequency; the phase is `(nz - 3 pi)/(4m + 2)`.
        #[arg(long)]
        nz: Option<u32>,
    },
    /// Knot types over the safe intervals of the height phase for the
    /// family `(2, 2m+1, nz; 0, 1/2, phz)`.
    Family {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        nz: u32,
    },
    /// Lissajous projections for two-bridge and (3, q)-torus knots.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// SVG drawing or CSV samples of a Lissajous curve.
    Render(RenderArgs),
}

#[derive(Subcommand)]
enum Construct {
    /// From a 3-strand braid in sigma_1, sigma_2, e.g. `2,2,-1,2`.
    TwoBridge {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// The (3, q)-torus knot.
    Torus {
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
}

#[derive(Args)]
pub struct RenderArgs {
    #[arg(long, conflicts_with = "csv", required_unless_present = "csv")]
    svg: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    nx: u32,
    #[arg(long)]
    ny: u32,
    /// Height frequency; without it (or `--z2`) the projection is drawn
    /// without over/under information.
    #[arg(long)]
    nz: Option<u32>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    phx: ExactAngle,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    phy: ExactAngle,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    phz: ExactAngle,
    /// Height `cos(n3 t + phi3) + cos(n4 t + phi4)` given as `n3,phi3,n4,phi4`.
    #[arg(long, allow_hyphen_values = true)]
    z2: Option<String>,
    /// Draw only the half period `t in [0, pi]` and mark its double points.
    #[arg(long)]
    arc: bool,
}

fn tolerances() -> Result<Tolerances, Failure> {
    match std::env::var("LISSAKNOT_TOL") {
        Ok(v) => match v.trim().parse::<f64>() {
            Ok(m) if m > 0.0 && m.is_finite() => Ok(Tolerances::with_margin(m)),
            _ => Err(Failure::Invalid(format!("LISSAKNOT_TOL must be a positive number, got {v:?}"))),
        },
        Err(_) => Ok(Tolerances::default()),
    }
}

fn run(command: Command) -> Result<Output, Failure> {
    let tol = tolerances()?;
    match command {
        Command::Analyze(p) => {
            let params = lissaknot::curves::LissajousParams::new((p.nx, p.ny, p.nz), (p.phx, p.phy, p.phz));
            commands::analyze(&params, &tol)
        }
        Command::Twist { m, nz } => commands::twist(m, nz, &tol),
        Command::Family { m, nz } => commands::family(m, nz, &tol),
        Command::Construct { kind } => match kind {
            Construct::TwoBridge { word } => commands::two_bridge(&word),
            Construct::Torus { q } => commands::torus(q),
        },
        Command::Render(r) => render::render(&r, &tol),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("reports serialize") + "\n"
            } else {
                out.text
            };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(body.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::SUCCESS;
            }
            match out.failed {
                None => ExitCode::SUCCESS,
                Some(why) => {
                    eprintln!("verification failed: {why}");
                    ExitCode::from(1)
                }
            }
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
