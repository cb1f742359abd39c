//! Command-line front end for the exact incidence kernel.
//!
//! Exit codes are uniform across subcommands: 0 success, 1 property or
//! certificate mismatch, 2 input error.

mod config_file;
mod render;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use triline::{find_ordinary_point, generate, Configuration};

#[derive(Parser)]
#[command(name = "triline", version, about = "Exact point-line incidence analysis in the projective plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full incidence report for a point file
    Analyze {
        input: PathBuf,
        /// Machine-readable output
        #[arg(long)]
        json: bool,
    },
    /// Constructive ordinary-point search with proof trace
    Witness {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit a generated configuration as a point file
    Generate {
        #[arg(long)]
        family: Family,
        /// Family size parameter (aikn1, aikn2)
        #[arg(long)]
        k: Option<u32>,
        /// Points per carrier line, e.g. 3,3,3 (random-concurrent)
        #[arg(long)]
        counts: Option<String>,
        /// Append the apex to the set (random-concurrent)
        #[arg(long)]
        include_apex: bool,
        /// Number of points (random-general)
        #[arg(long)]
        n: Option<usize>,
        /// Coordinate bound (random-general)
        #[arg(long, default_value_t = 50)]
        bound: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path (stdout if omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the incidence bound verdict of one or more files
    Verify {
        inputs: Vec<PathBuf>,
        /// Expected verdict: does some point reach the ceil(n/2) threshold?
        #[arg(long)]
        expect: Verdict,
    },
    /// Render the arrangement as SVG
    Render {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Aikn1,
    Aikn2,
    RandomConcurrent,
    RandomGeneral,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Verdict {
    Yes,
    No,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &PathBuf) -> Result<Configuration, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    config_file::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { input, json } => {
            let config = load(&input)?;
            let report = config.incidence_report().map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report::analyze_json(&report)).expect("valid json"));
            } else {
                print!("{}", report::analyze_text(&report));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness { input, json } => {
            let config = load(&input)?;
            let structure = config
                .detect_concurrent_structure()
                .map_err(|e| e.to_string())?
                .ok_or_else(|| "not covered by three concurrent lines".to_string())?;
            let result = match find_ordinary_point(&config, &structure) {
                Ok(r) => r,
                Err(triline::Error::CertificateMismatch(what)) => {
                    eprintln!("certificate mismatch: {what}");
                    return Ok(ExitCode::from(1));
                }
                Err(e) => return Err(e.to_string()),
            };
            // independent oracle cross-check; a disagreement is a bug sentinel
            let oracle = config.incidence_report().map_err(|e| e.to_string())?;
            if oracle.count_of(&result.point) != Some(result.count)
                || result.count < config.threshold()
            {
                eprintln!("certificate mismatch: witness count disagrees with the oracle");
                return Ok(ExitCode::from(1));
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&report::witness_json(&result, config.threshold())).expect("valid json"));
            } else {
                print!("{}", report::witness_text(&result, config.threshold()));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { family, k, counts, include_apex, n, bound, seed, output } => {
            let (config, header) = match family {
                Family::Aikn1 | Family::Aikn2 => {
                    let k = k.ok_or("--k is required for this family")?;
                    let name = if matches!(family, Family::Aikn1) { "aikn1" } else { "aikn2" };
                    let config = if matches!(family, Family::Aikn1) {
                        generate::aikn_fig1(k)
                    } else {
                        generate::aikn_fig2(k)
                    }
                    .map_err(|e| e.to_string())?;
                    (config, vec![format!("family: {name}"), format!("k: {k}")])
                }
                Family::RandomConcurrent => {
                    let raw = counts.ok_or("--counts is required for random-concurrent")?;
                    let parts: Vec<usize> = raw
                        .split(',')
                        .map(|s| s.trim().parse::<usize>().map_err(|_| format!("bad count: {s:?}")))
                        .collect::<Result<_, _>>()?;
                    let [a, b, c]: [usize; 3] = parts
                        .try_into()
                        .map_err(|_| "--counts needs exactly three values".to_string())?;
                    let config = generate::random_concurrent((a, b, c), include_apex, seed)
                        .map_err(|e| e.to_string())?;
                    (
                        config,
                        vec![
                            "family: random-concurrent".to_string(),
                            format!("counts: {a},{b},{c}"),
                            format!("include_apex: {include_apex}"),
                            format!("seed: {seed}"),
                        ],
                    )
                }
                Family::RandomGeneral => {
                    let n = n.ok_or("--n is required for random-general")?;
                    let config =
                        generate::random_general(n, bound, seed).map_err(|e| e.to_string())?;
                    (
                        config,
                        vec![
                            "family: random-general".to_string(),
                            format!("n: {n}"),
                            format!("bound: {bound}"),
                            format!("seed: {seed}"),
                        ],
                    )
                }
            };
            let text = config_file::serialize(&config, &header);
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { inputs, expect } => {
            if inputs.is_empty() {
                return Err("no input files".to_string());
            }
            let mut all_match = true;
            for path in &inputs {
                let config = load(path)?;
                let report = config.incidence_report().map_err(|e| e.to_string())?;
                let verdict = if report.dirac_holds() { Verdict::Yes } else { Verdict::No };
                let word = if report.dirac_holds() { "yes" } else { "no" };
                println!(
                    "{}: n={} t={} threshold={} verdict={word}",
                    path.display(),
                    report.n(),
                    report.t,
                    report.threshold
                );
                if verdict != expect {
                    all_match = false;
                }
            }
            Ok(if all_match { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Render { input, output } => {
            let config = load(&input)?;
            let svg = render::render(&config)?;
            fs::write(&output, svg).map_err(|e| format!("{}: {e}", output.display()))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
