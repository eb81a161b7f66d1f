//! Command-line surface: compute reports, render diagrams, verify the
//! built-in reference tables, scan parameter space.

use clap::{Args, Parser, Subcommand};
use knot11::diagram::{from_matchings, validate, OneOneDiagram, RasmussenParams};
use knot11::pipeline::{analyze, analyze_params, Analysis, PipelineError, DEFAULT_WINDOW};
use knot11::render::render_diagram;
use knot11::report::{report_document, scan_row};
use knot11::verify::{all_pass, run_checks};
use serde::Deserialize;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

const SCAN_P_CEILING: i64 = 64;

#[derive(Parser)]
#[command(name = "knot11", about = "Knot Floer invariants of (1,1)-knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full invariant pipeline and emit a report document.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        /// Universal-cover search window.
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: u32,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the diagram (and optionally one disk) as SVG.
    Render {
        #[command(flatten)]
        input: InputArgs,
        /// Shade the disk "FROM,TO" or "FROM,TO,INDEX".
        #[arg(long)]
        bigon: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check computed invariants of the twist family against the built-in
    /// reference tables.
    VerifyPaper {
        #[arg(long, default_value_t = 3)]
        max_n: u32,
    },
    /// Enumerate valid parameter tuples and report each one.
    Scan {
        #[arg(long)]
        p_max: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Twist-family index n for K(64n+31, 24n+12, 16n+6, 32n+18).
    #[arg(long)]
    family: Option<u32>,
    /// Four integers "p,q,r,s".
    #[arg(long)]
    params: Option<String>,
    /// JSON file with fields p, bottom, top, through.
    #[arg(long)]
    matchings: Option<PathBuf>,
}

#[derive(Deserialize)]
struct MatchingsFile {
    p: usize,
    bottom: Vec<(usize, usize)>,
    top: Vec<(usize, usize)>,
    through: Vec<(usize, usize)>,
}

fn parse_params(text: &str) -> Result<RasmussenParams, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("expected p,q,r,s; got {text:?}"));
    }
    let nums: Result<Vec<i64>, _> = parts.iter().map(|s| s.parse::<i64>()).collect();
    let nums = nums.map_err(|e| format!("bad integer in {text:?}: {e}"))?;
    Ok(RasmussenParams::new(nums[0], nums[1], nums[2], nums[3]))
}

fn load_input(input: &InputArgs, window: u32) -> Result<Analysis, CliError> {
    if let Some(n) = input.family {
        return Ok(knot11::pipeline::analyze_family(n, window)?);
    }
    if let Some(text) = &input.params {
        let params = parse_params(text).map_err(CliError::Usage)?;
        return Ok(analyze_params(params, window)?);
    }
    let path = input.matchings.as_ref().expect("clap enforces one input");
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file: MatchingsFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("bad matchings file: {e}")))?;
    let diagram: OneOneDiagram = from_matchings(file.bottom, file.top, file.through, None)
        .map_err(|e| CliError::Usage(format!("invalid matchings: {e}")))?;
    if diagram.p() != file.p {
        return Err(CliError::Usage(format!(
            "matchings describe {} slots but p = {}",
            diagram.p(),
            file.p
        )));
    }
    Ok(analyze(diagram, None, window, 0)?)
}

enum CliError {
    Usage(String),
    Pipeline(PipelineError),
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> CliError {
        CliError::Pipeline(e)
    }
}

impl CliError {
    fn report(self) -> ExitCode {
        match self {
            CliError::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            CliError::Pipeline(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code() as u8)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => e.report(),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Compute { input, window, out } => {
            let start = Instant::now();
            let analysis = load_input(&input, window)?;
            let doc = report_document(&analysis, start.elapsed().as_millis());
            let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
            write_out(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { input, bigon, out } => {
            let analysis = load_input(&input, DEFAULT_WINDOW)?;
            let chosen = match &bigon {
                None => None,
                Some(spec) => Some(pick_bigon(&analysis, spec)?),
            };
            let svg = render_diagram(&analysis, chosen);
            write_out(Some(&out), &svg)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { max_n } => {
            let checks = run_checks(max_n);
            let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for c in &checks {
                println!(
                    "{} {:width$}  {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail,
                );
            }
            let ok = all_pass(&checks);
            println!(
                "{} of {} checks passed",
                checks.iter().filter(|c| c.pass).count(),
                checks.len()
            );
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Scan { p_max, out } => {
            if p_max > SCAN_P_CEILING {
                return Err(CliError::Usage(format!(
                    "p-max {p_max} exceeds the ceiling {SCAN_P_CEILING}"
                )));
            }
            let mut lines = Vec::new();
            for p in 1..=p_max {
                for q in 0..((p + 1) / 2) {
                    for r in 0..p {
                        for u in 0..(p - 2 * q) {
                            let s = 2 * q - r + u;
                            if s < 0 {
                                continue;
                            }
                            let params = RasmussenParams::new(p, q, r, s);
                            let Ok(d) = knot11::diagram::decode(params) else { continue };
                            if !validate(&d).ok {
                                continue;
                            }
                            match analyze_params(params, DEFAULT_WINDOW) {
                                Ok(a) => lines.push(
                                    serde_json::to_string(&scan_row(&a)).expect("serializable"),
                                ),
                                Err(e) => {
                                    return Err(CliError::Pipeline(e));
                                }
                            }
                        }
                    }
                }
            }
            let text = lines.join("\n") + "\n";
            write_out(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn pick_bigon<'a>(
    analysis: &'a Analysis,
    spec: &str,
) -> Result<&'a knot11::floer::Bigon, CliError> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() < 2 || parts.len() > 3 {
        return Err(CliError::Usage(format!("expected FROM,TO[,INDEX]; got {spec:?}")));
    }
    let parse = |s: &str| s.parse::<usize>().map_err(|e| CliError::Usage(format!("{e}")));
    let (from, to) = (parse(parts[0])?, parse(parts[1])?);
    let index = if parts.len() == 3 { parse(parts[2])? } else { 0 };
    analysis
        .bigons
        .iter()
        .filter(|b| b.from == from && b.to == to)
        .nth(index)
        .ok_or_else(|| CliError::Usage(format!("no disk {from} -> {to} (index {index})")))
}

fn write_out(path: Option<&std::path::Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
