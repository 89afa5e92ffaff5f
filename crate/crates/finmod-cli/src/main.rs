//! `finmod` command line: analyze rings and modules from instance files,
//! run the structure-theorem suite over a generated corpus, and query the
//! symbolic catalog.
//!
//! Exit codes: 0 success, 2 parse error, 3 validation error, 4 enumeration
//! ceiling, 5 theorem failure.

use clap::{Parser, Subcommand, ValueEnum};
use finmod_cli::corpus::{generate_corpus, CorpusConfig};
use finmod_cli::instance;
use finmod_cli::report;
use finmod_cli::suite;
use finmod::catalog::{attested_facts, essential_extension_check, independence_table, SymbolicZModule};
use finmod::endo::analyze_symmetry;
use finmod::invariants::{classify, decompose};
use finmod::lattice::SubmoduleLattice;
use finmod::module::FiniteModule;
use finmod::{Error as EngineError, Limits};
use instance::InstanceDescriptor;
use report::{catalog_report, render_text, ring_report, DecomposeReport, Legend, ModuleReport};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "finmod", version, about = "Exact laboratory for finite rings and modules")]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Ring-level analysis.
    Ring {
        #[command(subcommand)]
        cmd: RingCmd,
    },
    /// Module-level analysis.
    Module {
        #[command(subcommand)]
        cmd: ModuleCmd,
    },
    /// Endomorphism-ring symmetry analysis.
    Symmetry {
        #[command(subcommand)]
        cmd: SymmetryCmd,
    },
    /// Corpus generation and the theorem suite.
    Suite {
        #[command(subcommand)]
        cmd: SuiteCmd,
    },
    /// The symbolic catalog of classical Z-modules.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum RingCmd {
    /// Full ring report for the instance file.
    Analyze { file: PathBuf },
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// Full invariant report for the instance file.
    Analyze { file: PathBuf },
    /// Semisimple-plus-small-socle decomposition with certificates.
    Decompose { file: PathBuf },
}

#[derive(Subcommand)]
enum SymmetryCmd {
    /// Compare the R-submodule and S-submodule views.
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum SuiteCmd {
    /// Generate the corpus and run every theorem check.
    Run {
        #[arg(long, default_value_t = 64)]
        max_ring_order: usize,
        #[arg(long, default_value_t = 256)]
        max_module_size: usize,
        /// Worker threads; defaults to the number of cores.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here in addition to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Recorded in the fingerprint; generation is enumeration, so the
        /// corpus does not depend on it.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the generated corpus as JSON descriptors without running it.
    Generate {
        #[arg(long, default_value_t = 64)]
        max_ring_order: usize,
        #[arg(long, default_value_t = 256)]
        max_module_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Verdicts for one entry: Z, Q, Prufer:p, FgAb:r,d1,d2,...
    Show { name: String },
    /// Entry name patterns and the attested facts.
    List,
    /// The fs-by-hollow-dimension independence table and the
    /// essential-extension boundary.
    Table,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error in {path}: {source}")]
    Parse {
        path: String,
        source: serde_json::Error,
    },
    #[error("instance file has no module descriptor")]
    MissingModule,
    #[error("unknown catalog entry: {0}")]
    Catalog(#[from] finmod::catalog::CatalogError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("theorem failures: {0}")]
    TheoremFailures(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::MissingModule => 2,
            CliError::Catalog(_) => 2,
            CliError::Engine(EngineError::Ring(_)) | CliError::Engine(EngineError::Module(_)) => {
                // module errors wrapping a ceiling stay ceilings
                if let CliError::Engine(EngineError::Module(
                    finmod::module::ModuleError::Ceiling(_) | finmod::module::ModuleError::TooLarge { .. },
                )) = self
                {
                    4
                } else {
                    3
                }
            }
            CliError::Engine(EngineError::Ceiling(_)) => 4,
            CliError::Engine(EngineError::Internal(_)) => 5,
            CliError::TheoremFailures(_) => 5,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Ring {
            cmd: RingCmd::Analyze { file },
        } => {
            let inst = load_instance(file)?;
            let ring = inst.ring.build()?;
            let rep = ring_report(&inst.label, &ring, &Limits::default())?;
            emit(cli.format, &rep);
            Ok(())
        }
        Command::Module { cmd } => {
            let (file, want_decompose) = match cmd {
                ModuleCmd::Analyze { file } => (file, false),
                ModuleCmd::Decompose { file } => (file, true),
            };
            let (inst, _, module) = load_module(file)?;
            let limits = Limits::default();
            let lattice = SubmoduleLattice::compute(&module, &limits)
                .map_err(|c| CliError::Engine(c.into()))?;
            if want_decompose {
                let rep = DecomposeReport {
                    label: inst.label.clone(),
                    decomposition: decompose(&lattice, &limits)?,
                    legend: Legend::of(&module),
                };
                emit(cli.format, &rep);
            } else {
                let rep = ModuleReport {
                    label: inst.label.clone(),
                    ring_order: module.ring().order(),
                    invariants: classify(&lattice, &limits)?,
                    legend: Legend::of(&module),
                };
                emit(cli.format, &rep);
            }
            Ok(())
        }
        Command::Symmetry {
            cmd: SymmetryCmd::Check { file },
        } => {
            let (inst, _, module) = load_module(file)?;
            let limits = Limits::default();
            let lattice = SubmoduleLattice::compute(&module, &limits)
                .map_err(|c| CliError::Engine(c.into()))?;
            let analysis = analyze_symmetry(&lattice, &limits)?;
            emit(cli.format, &report::symmetry_file(&inst.label, &analysis));
            Ok(())
        }
        Command::Suite { cmd } => match cmd {
            SuiteCmd::Run {
                max_ring_order,
                max_module_size,
                jobs,
                out,
                seed,
            } => {
                let config = CorpusConfig {
                    max_ring_order: *max_ring_order,
                    max_module_order: *max_module_size,
                    seed: *seed,
                };
                let corpus =
                    generate_corpus(&config).map_err(|c| CliError::Engine(c.into()))?;
                if corpus.is_empty() {
                    eprintln!("warning: empty corpus; the suite passes vacuously");
                }
                let report = suite::run_suite(&config, &corpus, *jobs);
                if let Some(path) = out {
                    let json = to_json(&report);
                    std::fs::write(path, json).map_err(|source| CliError::Io {
                        path: path.display().to_string(),
                        source,
                    })?;
                }
                emit(cli.format, &report);
                if report.all_green() {
                    Ok(())
                } else {
                    Err(CliError::TheoremFailures(report.summary.failed))
                }
            }
            SuiteCmd::Generate {
                max_ring_order,
                max_module_size,
                seed,
            } => {
                let config = CorpusConfig {
                    max_ring_order: *max_ring_order,
                    max_module_order: *max_module_size,
                    seed: *seed,
                };
                let corpus =
                    generate_corpus(&config).map_err(|c| CliError::Engine(c.into()))?;
                emit(cli.format, &corpus);
                Ok(())
            }
        },
        Command::Catalog { cmd } => match cmd {
            CatalogCmd::Show { name } => {
                let entry = SymbolicZModule::parse(name)?;
                emit(cli.format, &catalog_report(&entry));
                Ok(())
            }
            CatalogCmd::List => {
                #[derive(Serialize)]
                struct Listing {
                    entry_patterns: Vec<String>,
                    attested_facts: Vec<finmod::catalog::AttestedFact>,
                }
                emit(
                    cli.format,
                    &Listing {
                        entry_patterns: vec![
                            "Z".to_string(),
                            "Q".to_string(),
                            "Prufer:<p>".to_string(),
                            "FgAb:<rank>,<d1>,<d2>,...".to_string(),
                        ],
                        attested_facts: attested_facts(),
                    },
                );
                Ok(())
            }
            CatalogCmd::Table => {
                #[derive(Serialize)]
                struct TableReport {
                    independence_table: Vec<finmod::catalog::IndependenceCell>,
                    essential_extension: finmod::catalog::EssentialExtensionReport,
                }
                emit(
                    cli.format,
                    &TableReport {
                        independence_table: independence_table(),
                        essential_extension: essential_extension_check(),
                    },
                );
                Ok(())
            }
        },
    }
}

fn load_instance(path: &Path) -> Result<InstanceDescriptor, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    InstanceDescriptor::from_json(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

type LoadedModule = (
    InstanceDescriptor,
    Arc<finmod::FiniteRing>,
    Arc<FiniteModule>,
);

fn load_module(path: &Path) -> Result<LoadedModule, CliError> {
    let inst = load_instance(path)?;
    let ring = inst.ring.build()?;
    let module_desc = inst.module.as_ref().ok_or(CliError::MissingModule)?;
    let module = module_desc.build(&ring, &Limits::default())?;
    Ok((inst.clone(), ring, module))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

fn emit<T: Serialize>(format: Format, value: &T) {
    match format {
        Format::Json => print!("{}", to_json(value)),
        Format::Text => print!("{}", render_text(value)),
    }
}
