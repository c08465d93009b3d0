use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use simple_wedge::constructions::ConstructionSpec;
use simple_wedge::io::{parse_points, write_points};
use simple_wedge::orbit::{maximal_orbit, BaseLine};
use simple_wedge::search::{conjecture_search, ConjectureTrialResult, SearchMode};
use simple_wedge::svg::render_svg;
use simple_wedge::wedge::{brute_force_wedges, orbit_wedges};
use simple_wedge::{analyze, Configuration, Error, Execution};

const EXIT_INTERNAL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

/// Simple lines, orbits and simple wedges of planar point sets.
#[derive(Parser, Debug)]
#[command(name = "swedge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spanned lines, simple lines, wedges and coverage of a point file.
    Analyze {
        file: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        /// Also write an SVG drawing to this path.
        #[arg(long, value_name = "OUT")]
        svg: Option<PathBuf>,
    },
    /// List simple wedges.
    Wedges {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
    /// Trace the maximal orbit from a start point over a simple base line.
    Orbit {
        file: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        start: usize,
    },
    /// Write one of the built-in constructions as a point file.
    Generate {
        #[command(subcommand)]
        which: Construction,
        /// Output path (stdout when absent).
        #[arg(short = 'o', long = "out", global = true)]
        out: Option<PathBuf>,
    },
    /// Look for odd-sized point sets without a simple wedge.
    Conjecture(ConjectureArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    /// Follow orbits over each simple line (3-bounded input only).
    Orbit,
    /// Check every pair of simple lines through every point.
    Brute,
}

#[derive(Subcommand, Debug)]
enum Construction {
    Six,
    Nine,
    ClosedOrbit {
        #[arg(long)]
        k: usize,
    },
    GExt {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Args, Debug)]
struct ConjectureArgs {
    /// Number of points (odd, at least 3).
    #[arg(long)]
    n: usize,
    #[arg(
        long,
        required_unless_present = "exhaustive",
        conflicts_with = "exhaustive"
    )]
    trials: Option<u64>,
    #[arg(
        long,
        required_unless_present = "exhaustive",
        conflicts_with = "exhaustive"
    )]
    seed: Option<u64>,
    /// Coordinates are drawn from [-range, range].
    #[arg(
        long,
        required_unless_present = "exhaustive",
        conflicts_with = "exhaustive"
    )]
    range: Option<u64>,
    /// Scan every n-subset of a grid x grid lattice instead of sampling.
    #[arg(long, requires = "grid")]
    exhaustive: bool,
    #[arg(long, requires = "exhaustive")]
    grid: Option<u64>,
    /// Directory for counterexample files.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    /// Run trials on one thread.
    #[arg(long)]
    sequential: bool,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn load(path: &Path) -> Result<Configuration, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(Configuration::new(parse_points(&text)?)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { file, json, svg } => {
            let config = load(&file)?;
            let report = analyze(&config);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if let Some(out) = svg {
                write_file(&out, &render_svg(&config, &report))?;
            }
        }
        Command::Wedges { file, method } => {
            let config = load(&file)?;
            match method {
                Method::Brute => {
                    for w in brute_force_wedges(&config) {
                        println!(
                            "apex {} arms {} {} lines {} {}",
                            w.apex, w.arm1, w.arm2, w.key1, w.key2
                        );
                    }
                }
                Method::Orbit => {
                    for (line, wedge) in orbit_wedges(&config, Execution::Parallel)? {
                        let (a, b) = line.endpoints;
                        match wedge {
                            Some(w) => println!(
                                "line {} a {a} b {b}: apex {} arms {} {}",
                                line.key, w.apex, w.arm1, w.arm2
                            ),
                            None => println!("line {} a {a} b {b}: no wedge", line.key),
                        }
                    }
                }
            }
        }
        Command::Orbit { file, a, b, start } => {
            let config = load(&file)?;
            let base = BaseLine::new(&config, a, b)?;
            print!("{}", maximal_orbit(&config, &base, start)?.trace(&config));
        }
        Command::Generate { which, out } => {
            let spec = match which {
                Construction::Six => ConstructionSpec::SixPoint,
                Construction::Nine => ConstructionSpec::NinePoint,
                Construction::ClosedOrbit { k } => ConstructionSpec::ClosedOrbit(k),
                Construction::GExt { m } => ConstructionSpec::GExtended(m),
            };
            let text = write_points(spec.build()?.points());
            match out {
                Some(path) => write_file(&path, &text)?,
                None => print!("{text}"),
            }
        }
        Command::Conjecture(args) => return conjecture(args),
    }
    Ok(0)
}

fn counterexample_path(dir: &Path, args: &ConjectureArgs, r: &ConjectureTrialResult) -> PathBuf {
    let name = match args.grid {
        Some(g) if args.exhaustive => {
            format!("counterexample-n{}-grid{g}-subset{}.txt", r.n, r.trial)
        }
        _ => format!(
            "counterexample-n{}-seed{}-trial{}.txt",
            r.n, r.seed, r.trial
        ),
    };
    dir.join(name)
}

fn conjecture(args: ConjectureArgs) -> Result<u8, Failure> {
    let mode = match (args.exhaustive, args.grid) {
        (true, Some(grid)) => SearchMode::Exhaustive { grid },
        _ => SearchMode::Random {
            trials: args.trials.unwrap_or(0),
            seed: args.seed.unwrap_or(0),
            range: args.range.unwrap_or(0),
        },
    };
    let exec = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let summary = conjecture_search(args.n, mode, exec)?;
    println!(
        "n {}: scanned {} configurations, {} collinear rejected, {} without a simple wedge",
        args.n,
        summary.scanned,
        summary.collinear_rejected,
        summary.failures.len()
    );
    if summary.failures.is_empty() {
        return Ok(0);
    }
    for r in &summary.failures {
        let path = counterexample_path(&args.out_dir, &args, r);
        write_file(&path, &write_points(&r.points))?;
        println!(
            "counterexample trial {} written to {}",
            r.trial,
            path.display()
        );
    }
    Ok(EXIT_COUNTEREXAMPLE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
