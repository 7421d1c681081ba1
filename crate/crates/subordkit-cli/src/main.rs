mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use subordkit::dsl::{self, Workspace};
use subordkit::harness::{registry, run_law_on_workspace, run_suite, GenConfig};

#[derive(Parser)]
#[command(name = "subordkit")]
#[command(about = "Finite-model workbench for subordination algebras and their completions")]
#[command(version)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Axiom and profile reports for the objects of a workspace
    Check {
        file: PathBuf,
        /// Check a single named object
        #[arg(long)]
        object: Option<String>,
    },
    /// The round-ideal frame of a named S5-subordination algebra
    RoundIdeals {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
    },
    /// The MacNeille completion of a named S5-subordination algebra
    Macneille {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
    },
    /// Booleanization of a named frame
    Booleanize {
        file: PathBuf,
        #[arg(long)]
        frame: String,
    },
    /// Classify a named morphism (sub, rel, map, or devmap)
    Classify {
        file: PathBuf,
        #[arg(long)]
        morphism: String,
    },
    /// Dual space, quotient, and dual-isomorphism report for an algebra
    Dual {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
    },
    /// Run one named law against the workspace
    Verify {
        file: Option<PathBuf>,
        #[arg(long)]
        law: Option<String>,
        /// List available law identifiers
        #[arg(long)]
        list: bool,
    },
    /// Run the full law suite on generated instances
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_atoms_exhaustive: usize,
        #[arg(long, default_value_t = 5)]
        max_atoms_sampled: usize,
        #[arg(long, default_value_t = 200)]
        samples_per_size: usize,
        /// Law-id prefixes to run (comma separated)
        #[arg(long)]
        laws: Option<String>,
    },
    /// Canonical serialization of a workspace
    Fmt { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &PathBuf) -> Result<Workspace, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    dsl::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Commands::Check { file, object } => {
            let ws = load(&file)?;
            output::check(&ws, object.as_deref(), cli.json)
        }
        Commands::RoundIdeals { file, algebra } => {
            let ws = load(&file)?;
            output::round_ideals(&ws, &algebra, cli.json)
        }
        Commands::Macneille { file, algebra } => {
            let ws = load(&file)?;
            output::macneille(&ws, &algebra, cli.json)
        }
        Commands::Booleanize { file, frame } => {
            let ws = load(&file)?;
            output::booleanize(&ws, &frame, cli.json)
        }
        Commands::Classify { file, morphism } => {
            let ws = load(&file)?;
            output::classify(&ws, &morphism, cli.json)
        }
        Commands::Dual { file, algebra } => {
            let ws = load(&file)?;
            output::dual(&ws, &algebra, cli.json)
        }
        Commands::Verify { file, law, list } => {
            if list {
                for l in registry() {
                    println!("{}\t{}", l.id, l.anchor);
                }
                return Ok(true);
            }
            let (file, law) = match (file, law) {
                (Some(f), Some(l)) => (f, l),
                _ => return Err("verify needs a file and --law ID (or --list)".into()),
            };
            let ws = load(&file)?;
            let report = run_law_on_workspace(&law, &ws)
                .ok_or_else(|| format!("unknown law '{law}'; see verify --list"))?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                let status = if report.passed { "PASS" } else { "FAIL" };
                println!(
                    "{status} {} instances={} failures={}",
                    report.law_id,
                    report.instances,
                    report.failures.len()
                );
                for f in &report.failures {
                    println!("  detail: {}", f.detail);
                    for line in f.workspace_dsl.lines() {
                        println!("  | {line}");
                    }
                }
            }
            Ok(report.passed)
        }
        Commands::Suite {
            seed,
            max_atoms_exhaustive,
            max_atoms_sampled,
            samples_per_size,
            laws,
        } => {
            let cfg = GenConfig {
                seed,
                max_atoms_exhaustive,
                max_atoms_sampled,
                samples_per_size,
                law_filter: laws
                    .map(|s| s.split(',').map(|p| p.trim().to_string()).collect())
                    .unwrap_or_default(),
            };
            let report = run_suite(&cfg);
            if cli.json {
                println!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            Ok(report.all_passed())
        }
        Commands::Fmt { file } => {
            let ws = load(&file)?;
            print!("{}", dsl::serialize(&ws));
            Ok(true)
        }
    }
}
