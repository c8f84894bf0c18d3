//! `r55`: build, verify and search two-colorings of complete graphs.
//!
//! Exit codes: 0 success, 1 a claim or check failed, 2 usage or parse error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use r55_core::certificate::{decode_certificate, encode_certificate, verify_certificate, Certificate};
use r55_core::proof::{lemma_suite, render_diagram, verify_standard_reduction, verify_symmetry, LemmaReport, Sampling};
use r55_core::search::{local_search, policy_by_name, SearchOptions, DEFAULT_TABU_TENURE};
use r55_core::{counter_by_name, Color, Coloring, ColoringSpec, Preset, Vertex};

#[derive(Parser)]
#[command(name = "r55", version, about = "Ramsey (5,5) lower-bound colorings: certificates, checks, search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a certificate for a preset, with recomputed K5 claims.
    Build {
        /// cyc43 | exoo42 | varianta | variantb
        preset: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute every claim of a certificate.
    Verify {
        file: PathBuf,
        /// Use the naive subset scanner instead of the mask engine.
        #[arg(long)]
        oracle: bool,
    },
    /// Count monochromatic k-cliques.
    Count {
        file: PathBuf,
        #[arg(long)]
        color: String,
        #[arg(long)]
        k: usize,
    },
    /// List monochromatic k-cliques, one per line.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        color: String,
        #[arg(long)]
        k: usize,
    },
    /// Run the structural checks and print a pass/fail table.
    Lemmas { file: PathBuf },
    /// Render a neighborhood diagram.
    Diagram {
        file: PathBuf,
        #[arg(long)]
        color: String,
        /// Comma-separated row vertices.
        #[arg(long, value_delimiter = ',')]
        vertices: Vec<Vertex>,
        /// Add a row marking columns shared by every listed row.
        #[arg(long)]
        overlap: bool,
    },
    /// Local search for colorings with few monochromatic K5s.
    Search {
        /// Preset name or certificate file.
        #[arg(long)]
        start: String,
        #[arg(long)]
        budget: usize,
        #[arg(long)]
        seed: u64,
        /// greedy | tabu | restart
        #[arg(long)]
        policy: String,
        #[arg(long)]
        red_to_blue_only: bool,
        #[arg(long, default_value_t = DEFAULT_TABU_TENURE)]
        tabu_tenure: usize,
        #[arg(long)]
        log: Option<PathBuf>,
        /// Write a certificate for the best coloring found.
        #[arg(long)]
        best_out: Option<PathBuf>,
    },
}

fn read_certificate(path: &Path) -> Result<Certificate> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    decode_certificate(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_coloring(path: &Path) -> Result<Coloring> {
    Ok(Coloring::build(&read_certificate(path)?.spec)?)
}

fn parse_color(s: &str) -> Result<Color> {
    Ok(s.parse::<Color>()?)
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn file_checks(coloring: &Coloring) -> Result<Vec<Option<LemmaReport>>> {
    let circulant = coloring.spec().is_pure_circulant() && coloring.order() % 2 == 1;
    if !circulant {
        return Ok(vec![None, None, None]);
    }
    let mut reports = vec![Some(verify_symmetry(coloring, Sampling::Exhaustive))];
    for color in Color::BOTH {
        reports.push(Some(verify_standard_reduction(coloring, color)?));
    }
    Ok(reports)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Build { preset, out } => {
            let preset: Preset = preset.parse()?;
            let cert = Certificate::with_computed_claims(preset.spec(), &[5], counter_by_name("mask")?)?;
            write_or_print(out.as_deref(), &encode_certificate(&cert))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { file, oracle } => {
            let cert = read_certificate(&file)?;
            let counter = counter_by_name(if oracle { "naive" } else { "mask" })?;
            let outcomes = verify_certificate(&cert, counter)?;
            for o in &outcomes {
                println!(
                    "{} mono-k{} {} claimed={} actual={}",
                    if o.holds() { "PASS" } else { "FAIL" },
                    o.claim.k,
                    o.claim.color,
                    o.claim.count,
                    o.actual
                );
            }
            Ok(status(outcomes.iter().all(|o| o.holds())))
        }
        Command::Count { file, color, k } => {
            let c = load_coloring(&file)?;
            println!("{}", r55_core::count_mono(&c, parse_color(&color)?, k)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { file, color, k } => {
            let c = load_coloring(&file)?;
            for q in r55_core::enumerate_mono(&c, parse_color(&color)?, k)? {
                println!("{q}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lemmas { file } => {
            let coloring = load_coloring(&file)?;
            let mut ok = true;
            for report in lemma_suite()? {
                ok &= report.passed();
                println!("{report}");
            }
            let names =
                ["file: edge-reflection-symmetry", "file: standard-reduction red", "file: standard-reduction blue"];
            for (name, report) in names.iter().zip(file_checks(&coloring)?) {
                match report {
                    Some(mut r) => {
                        r.name = format!("file: {}", r.name);
                        ok &= r.passed();
                        println!("{r}");
                    }
                    None => println!("SKIP {name} (not a pure circulant of odd order)"),
                }
            }
            Ok(status(ok))
        }
        Command::Diagram { file, color, vertices, overlap } => {
            let c = load_coloring(&file)?;
            if vertices.is_empty() {
                bail!("--vertices needs at least one vertex");
            }
            if let Some(&v) = vertices.iter().find(|&&v| v >= c.order()) {
                bail!("vertex {v} out of range for order {}", c.order());
            }
            print!("{}", render_diagram(&c, parse_color(&color)?, &vertices, overlap));
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { start, budget, seed, policy, red_to_blue_only, tabu_tenure, log, best_out } => {
            let spec: ColoringSpec = match start.parse::<Preset>() {
                Ok(p) => p.spec(),
                Err(_) => read_certificate(Path::new(&start))?.spec,
            };
            let policy = policy_by_name(&policy)?;
            let options = SearchOptions::new(budget, seed).red_to_blue_only(red_to_blue_only).tabu_tenure(tabu_tenure);
            let state = local_search(&spec, policy, &options)?;
            if let Some(path) = log {
                fs::write(&path, state.log()).with_context(|| format!("writing {}", path.display()))?;
            }
            if let Some(path) = best_out {
                let cert = Certificate::with_computed_claims(
                    state.best.coloring.spec().clone(),
                    &[5],
                    counter_by_name("mask")?,
                )?;
                fs::write(&path, encode_certificate(&cert)).with_context(|| format!("writing {}", path.display()))?;
            }
            println!("policy={}", policy.name());
            println!("evaluations={}", state.evaluations);
            println!("moves={}", state.moves().count());
            println!("final_red={} final_blue={} final_objective={}", state.red, state.blue, state.objective());
            println!(
                "best_red={} best_blue={} best_objective={}",
                state.best.red,
                state.best.blue,
                state.best.objective()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
