use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use dgs_cli::experiment::{self, ExperimentConfig};
use dgs_cli::input::{load_graph, load_matrix, FIXTURE_PREFIX};
use dgs_cli::report::{self, QReport};
use dgs_cli::exit;
use dgs_core::cospectral::{level, verify_membership, QCertificate};
use dgs_core::criteria::{
    analyze, compute_invariants, phi_p, theta_prime_classification, Mode, Status,
};
use dgs_core::fixtures;
use dgs_core::fpoly::factor_fp;
use num_traits::ToPrimitive;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "dgs", version, about = "Exact arithmetic criteria for graphs determined by their generalized spectrum")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    OldOnly,
    OldEcIc,
    MainOnly,
    Combined,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::OldOnly => Mode::OldOnly,
            ModeArg::OldEcIc => Mode::OldEcIc,
            ModeArg::MainOnly => Mode::MainOnly,
            ModeArg::Combined => Mode::Combined,
        }
    }
}

#[derive(clap::Args)]
struct GraphArgs {
    /// Graph file (graph6 or 0/1 adjacency matrix), `-` for stdin, or
    /// `fixture:NAME`.
    input: Option<String>,
    /// Accept graphs with more than 64 vertices.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run the DGS criteria on one graph.
    Analyze {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "combined")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Print det W, Delta, theta, the Smith form of W and Phi_p tables.
    Invariants {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Check a rational matrix Q for membership in Q(G).
    VerifyQ {
        #[command(flatten)]
        graph: GraphArgs,
        /// Q as whitespace-separated `a` or `a/b` entries, or `fixture:NAME`.
        #[arg(long)]
        q: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Count certified graphs among seeded G(n, 1/2) samples.
    Experiment {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Modes to count; defaults to all four.
        #[arg(long, value_enum, value_delimiter = ',')]
        modes: Vec<ModeArg>,
        /// Worker threads (default: $DGS_WORKERS or all cores).
        #[arg(long)]
        workers: Option<usize>,
        /// Include one record per graph (JSON only).
        #[arg(long)]
        verbose: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// List or print the bundled example fixtures.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    Cat { name: String },
}

fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn emit_json(v: &Value) -> Result<()> {
    emit(&serde_json::to_string_pretty(v)?)
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::DgsCertified => exit::CERTIFIED,
        Status::Inconclusive => exit::INCONCLUSIVE,
        Status::NotControllable | Status::ThetaEven => exit::NOT_APPLICABLE,
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze { graph, mode, format } => {
            let g = load_graph(graph.input.as_deref(), graph.allow_large)?;
            let v = analyze(&g, mode.into())?;
            match format {
                Format::Json => emit_json(&report::verdict_json(&g, &v))?,
                Format::Csv => emit(&format!(
                    "{}\n{}",
                    report::VERDICT_CSV_HEADER,
                    report::verdict_csv_row(&g, &v)
                ))?,
                Format::Human => emit(&report::verdict_human(&g, &v))?,
            }
            Ok(status_code(v.status))
        }
        Command::Invariants { graph, format } => {
            let g = load_graph(graph.input.as_deref(), graph.allow_large)?;
            let inv = compute_invariants(&g);
            let mut phis = Vec::new();
            if inv.controllable {
                for p in theta_prime_classification(&inv.theta)?.multiple {
                    if let Some(p) = p.to_u64().filter(|&p| p > 2) {
                        phis.push((p, factor_fp(&phi_p(&g, p)?)?));
                    }
                }
            }
            match format {
                Format::Json => emit_json(&report::invariants_json(&g, &inv, &phis))?,
                Format::Csv => emit(&format!(
                    "{}\n{}",
                    report::INVARIANTS_CSV_HEADER,
                    report::invariants_csv_row(&g, &inv)
                ))?,
                Format::Human => emit(&report::invariants_human(&g, &inv, &phis))?,
            }
            Ok(exit::CERTIFIED)
        }
        Command::VerifyQ { graph, q, format } => {
            let g = load_graph(graph.input.as_deref(), graph.allow_large)?;
            let q = load_matrix(&q)?;
            let membership = verify_membership(&q, &g)?;
            let lvl = level(&q);
            let constraints = if membership.member {
                QCertificate::verify(q.clone(), &g)?
                    .map(|c| c.level_constraints(&compute_invariants(&g)))
            } else {
                None
            };
            let r = QReport {
                graph: &g,
                membership: &membership,
                level: &lvl,
                constraints: constraints.as_ref(),
            };
            match format {
                Format::Json | Format::Csv => emit_json(&report::q_json(&r))?,
                Format::Human => emit(&report::q_human(&r))?,
            }
            Ok(if membership.member { exit::CERTIFIED } else { exit::NOT_A_MEMBER })
        }
        Command::Experiment { n, samples, seed, modes, workers, verbose, format } => {
            let mut config = ExperimentConfig::new(n, samples, seed);
            if !modes.is_empty() {
                config.modes = modes.into_iter().map(Mode::from).collect();
                config.modes.dedup();
            }
            if let Some(w) = workers {
                config.workers = w;
            }
            config.verbose = verbose;
            let r = experiment::run(&config)?;
            match format {
                Format::Json => emit_json(&r.to_json())?,
                Format::Csv => emit(&r.to_csv())?,
                Format::Human => emit(&r.to_human())?,
            }
            Ok(exit::CERTIFIED)
        }
        Command::Fixtures { action } => {
            match action {
                FixtureAction::List => {
                    let text: String = fixtures::ALL
                        .iter()
                        .map(|f| format!("{FIXTURE_PREFIX}{:<24} {}\n", f.name, f.description))
                        .collect();
                    emit(&text)?;
                }
                FixtureAction::Cat { name } => {
                    let f = fixtures::get(&name)
                        .with_context(|| format!("no bundled fixture named {name:?}"))?;
                    emit(f.contents)?;
                }
            }
            Ok(exit::CERTIFIED)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit::INPUT_ERROR)
        }
    }
}
