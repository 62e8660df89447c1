use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use toric_deform::cli_reports::{
    cmd_deform, cmd_plot, cmd_rigidity, cmd_t1, cmd_validate, CmdResult, DeformMode, PlotMode,
    T1Query,
};
use toric_deform::lattice_fan::Weight;
use toric_deform::tangent::T1Method;

#[derive(Parser)]
#[command(name = "toric-deform", version, about = "Deformations of smooth complete toric varieties")]
struct Cli {
    /// Worker threads for searches (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Graph,
    Cech,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a fan file describes a smooth complete fan
    Validate { fan: PathBuf },
    /// Dimensions of T^1 in one degree or in total
    T1 {
        fan: PathBuf,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true, conflicts_with = "all", required_unless_present = "all")]
        degree: Option<Weight>,
        #[arg(long)]
        all: bool,
        /// Search radius for fans of dimension at least 3
        #[arg(long = "box")]
        radius: Option<i64>,
        /// Repeat the box search at twice the radius and report new degrees
        #[arg(long, requires = "all")]
        recheck: bool,
        #[arg(long, value_enum, default_value = "graph")]
        method: Method,
    },
    /// Rigidity verdict with evidence
    Rigidity {
        fan: PathBuf,
        #[arg(long = "box")]
        radius: Option<i64>,
    },
    /// Homogeneous deformations of a surface in degree -R
    Deform {
        fan: PathBuf,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        degree: Weight,
        #[command(flatten)]
        mode: DeformArgs,
        #[arg(long, default_value = "0", value_parser = parse_int, allow_hyphen_values = true, requires = "tuple")]
        lambda0: i64,
        #[arg(long)]
        fiber: bool,
    },
    /// Write an SVG figure
    Plot {
        fan: PathBuf,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true, conflicts_with = "slice")]
        degree: Option<Weight>,
        #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
        slice: Option<Weight>,
        #[arg(long, value_parser = parse_signs, allow_hyphen_values = true, requires = "slice")]
        tuple: Option<Signs>,
        #[arg(long, default_value = "0", value_parser = parse_int, allow_hyphen_values = true)]
        lambda0: i64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct DeformArgs {
    #[arg(long)]
    list: bool,
    #[arg(long)]
    basis: bool,
    #[arg(long, value_parser = parse_signs, allow_hyphen_values = true)]
    tuple: Option<Signs>,
}

#[derive(Clone)]
struct Signs(Vec<i8>);

fn ascii_minus(t: &str) -> String {
    t.trim().replace('\u{2212}', "-")
}

fn parse_int(s: &str) -> Result<i64, String> {
    ascii_minus(s).parse::<i64>().map_err(|e| format!("{s:?}: {e}"))
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    s.split(',')
        .map(parse_int)
        .collect::<Result<Vec<_>, _>>()
        .map(Weight)
}

fn parse_signs(s: &str) -> Result<Signs, String> {
    s.split(',')
        .map(|t| match ascii_minus(t).as_str() {
            "1" | "+1" => Ok(1),
            "-1" => Ok(-1),
            other => Err(format!("{other:?} is not 1 or -1")),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Signs)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Validate { fan } => cmd_validate(&fan),
        Command::T1 { fan, degree, all: _, radius, recheck, method } => {
            let method = match method {
                Method::Graph => T1Method::Graph,
                Method::Cech => T1Method::Cech,
            };
            let query = match degree {
                Some(u) => T1Query::Degree(u),
                None => T1Query::All { radius, recheck },
            };
            cmd_t1(&fan, &query, method)
        }
        Command::Rigidity { fan, radius } => cmd_rigidity(&fan, radius),
        Command::Deform { fan, degree, mode, lambda0, fiber } => {
            let mode = match (mode.list, mode.basis, mode.tuple) {
                (true, _, _) => DeformMode::List,
                (_, true, _) => DeformMode::Basis,
                (_, _, Some(Signs(a))) => DeformMode::Tuple { a, lambda0 },
                _ => unreachable!("clap enforces one mode"),
            };
            cmd_deform(&fan, &degree, &mode, fiber)
        }
        Command::Plot { fan, degree, slice, tuple, lambda0, out } => {
            let mode = match (degree, slice) {
                (Some(u), _) => PlotMode::Degree(u),
                (None, Some(r)) => PlotMode::Slice { r, tuple: tuple.map(|Signs(a)| (a, lambda0)) },
                (None, None) => PlotMode::Fan,
            };
            cmd_plot(&fan, &mode, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(cli) {
        Ok(report) => {
            print!("{}", report.to_json());
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(report) = &f.report {
                print!("{}", report.to_json());
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.exit_code as u8)
        }
    }
}
