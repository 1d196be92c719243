use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use curvegroups::presentation::DEFAULT_COSET_LIMIT;
use curvegroups_cli::commands::{cmd_ade_info, cmd_artin_nf, cmd_plucker, cmd_robb, cmd_zvk};
use curvegroups_cli::golden::QuarticGolden;
use curvegroups_cli::quartic::{cmd_quartic, QuarticOptions};
use curvegroups_cli::verify::{cmd_verify_all, VerifyOptions};
use curvegroups_cli::{exit_code, CliError, Report, EXIT_INPUT};

const DEFAULT_DEPTH: usize = 10;

#[derive(Parser)]
#[command(
    name = "curvegroups",
    version,
    about = "Checked reports on plane curve complement groups"
)]
struct Cli {
    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Three-cuspidal quartic pipeline.
    Quartic {
        /// Only the action, matrix and word checks.
        #[arg(long)]
        skip_enumeration: bool,
        #[arg(long, default_value_t = DEFAULT_COSET_LIMIT)]
        coset_limit: usize,
        /// Word length for the free-pair search.
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        /// Replace the built-in reference data.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Presentations from a braid monodromy JSON file.
    Zvk {
        file: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        coset_limit: usize,
    },
    /// Finite-type Artin groups.
    Artin {
        #[command(subcommand)]
        command: ArtinCommand,
    },
    /// Plücker invariants of a curve with nodes and cusps.
    Plucker {
        #[arg(long)]
        degree: i64,
        #[arg(long, default_value_t = 0)]
        nodes: i64,
        #[arg(long, default_value_t = 0)]
        cusps: i64,
    },
    /// Simple plane curve singularities.
    Ade {
        #[command(subcommand)]
        command: AdeCommand,
    },
    /// Normal-form arithmetic of the central extensions P̃_{0,d}.
    Robb {
        #[arg(long, default_value_t = 4)]
        min_degree: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Every module's checks.
    VerifyAll {
        /// Restrict to one section.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = DEFAULT_COSET_LIMIT)]
        coset_limit: usize,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
}

#[derive(Subcommand)]
enum ArtinCommand {
    /// Garside normal form of a word.
    Nf {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand)]
enum AdeCommand {
    /// Milnor algebra, deformation and monodromy data.
    Info {
        #[arg(long = "type")]
        ty: String,
    },
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Quartic {
            skip_enumeration,
            coset_limit,
            depth,
            golden,
        } => {
            let (data, origin) = match &golden {
                Some(p) => (QuarticGolden::load(p)?, p.display().to_string()),
                None => (QuarticGolden::builtin(), "builtin".to_string()),
            };
            let opts = QuarticOptions {
                skip_enumeration,
                coset_limit,
                depth,
            };
            cmd_quartic(&data, &origin, &opts)
        }
        Command::Zvk { file, coset_limit } => {
            let text = std::fs::read_to_string(&file).map_err(|source| CliError::Io {
                path: file.display().to_string(),
                source,
            })?;
            cmd_zvk(&text, &file.display().to_string(), coset_limit)
        }
        Command::Artin {
            command: ArtinCommand::Nf { ty, word },
        } => cmd_artin_nf(&ty, &word),
        Command::Plucker {
            degree,
            nodes,
            cusps,
        } => cmd_plucker(degree, nodes, cusps),
        Command::Ade {
            command: AdeCommand::Info { ty },
        } => cmd_ade_info(&ty),
        Command::Robb {
            min_degree,
            max_degree,
        } => cmd_robb(min_degree, max_degree),
        Command::VerifyAll {
            only,
            coset_limit,
            depth,
        } => cmd_verify_all(&VerifyOptions {
            only,
            coset_limit,
            depth,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(exit_code(&report))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
