//! Command line front end for the spec-file harness.
//!
//! Exit codes: 0 when every check passed, 1 when at least one check
//! failed, 2 for parse, schema or reference errors, 3 when a resource
//! limit was hit.  When several apply, 2 wins over 3 wins over 1.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use catkit::harness::{
    digest, emit_report, emit_spec_file, generate_fixture, parse_spec_file, resolve,
    run_check_suite, Report, ReportFormat, SpecErrorCode, World, FIXTURE_NAMES,
};
use catkit::Limits;

#[derive(Parser)]
#[command(name = "catkit", version, about = "Finite category theory, checked by exhaustion")]
struct Cli {
    /// Refuse to build a category with more morphisms than this.
    #[arg(long, global = true, default_value_t = Limits::default().max_morphisms)]
    max_morphisms: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and cross-link a document, reporting any problems.
    Validate { file: PathBuf },
    /// Execute a document's tasks and print the report.
    Run {
        file: PathBuf,
        /// Run a single named task instead of the whole suite.
        #[arg(long)]
        task: Option<String>,
        #[arg(long, default_value = "json")]
        format: ReportFormat,
    },
    /// Write one of the built-in example documents.
    Fixture {
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-render a saved JSON report.
    Report {
        file: PathBuf,
        #[arg(long, default_value = "text")]
        format: ReportFormat,
    },
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits {
        max_morphisms: cli.max_morphisms,
    };
    let code = match cli.command {
        Command::Validate { file } => validate(&file, &limits),
        Command::Run { file, task, format } => run(&file, task.as_deref(), format, &limits),
        Command::Fixture { name, out } => fixture(&name, &out),
        Command::Report { file, format } => render_report(&file, format),
    };
    ExitCode::from(code)
}

fn read_input(path: &Path) -> Result<Vec<u8>, u8> {
    std::fs::read(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_BAD_INPUT
    })
}

fn report_spec_errors(errors: &[catkit::harness::SpecError]) -> u8 {
    for e in errors {
        eprintln!("error[{}] at {}: {}", e.code.as_str(), e.path, e.detail);
    }
    if errors.iter().all(|e| e.code == SpecErrorCode::ResourceLimit) {
        EXIT_RESOURCE
    } else {
        EXIT_BAD_INPUT
    }
}

fn load_world(path: &Path, limits: &Limits) -> Result<(World, Vec<u8>), u8> {
    let bytes = read_input(path)?;
    let doc = parse_spec_file(&bytes).map_err(|errors| report_spec_errors(&errors))?;
    let world = resolve(&doc, limits).map_err(|errors| report_spec_errors(&errors))?;
    Ok((world, bytes))
}

fn validate(path: &Path, limits: &Limits) -> u8 {
    match load_world(path, limits) {
        Ok((world, _)) => {
            println!(
                "ok: {} categories, {} functors, {} transformations, {} monads, {} adjunctions, {} cells, {} parametric, {} tasks",
                world.categories.len(),
                world.functors.len(),
                world.nats.len(),
                world.monads.len(),
                world.adjunctions.len(),
                world.adj_cells.len() + world.mnd_cells.len(),
                world.parametrics.len(),
                world.tasks.len(),
            );
            0
        }
        Err(code) => code,
    }
}

fn run(path: &Path, task: Option<&str>, format: ReportFormat, limits: &Limits) -> u8 {
    let (world, bytes) = match load_world(path, limits) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let report = match run_check_suite(&world, task, limits, digest(&bytes)) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_BAD_INPUT;
        }
    };
    print_bytes(&emit_report(&report, format));
    exit_for(&report)
}

fn exit_for(report: &Report) -> u8 {
    if report.hit_resource_limit() {
        EXIT_RESOURCE
    } else if !report.all_passed() {
        EXIT_CHECK_FAILED
    } else {
        0
    }
}

fn fixture(name: &str, out: &Path) -> u8 {
    let doc = match generate_fixture(name) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("available fixtures: {}", FIXTURE_NAMES.join(", "));
            return EXIT_BAD_INPUT;
        }
    };
    if let Err(e) = std::fs::write(out, emit_spec_file(&doc)) {
        eprintln!("error: cannot write {}: {e}", out.display());
        return EXIT_BAD_INPUT;
    }
    0
}

fn render_report(path: &Path, format: ReportFormat) -> u8 {
    let bytes = match read_input(path) {
        Ok(b) => b,
        Err(code) => return code,
    };
    let report: Report = match serde_json::from_slice(&bytes) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {} is not a report: {e}", path.display());
            return EXIT_BAD_INPUT;
        }
    };
    print_bytes(&emit_report(&report, format));
    exit_for(&report)
}

fn print_bytes(bytes: &[u8]) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(bytes);
    let _ = out.flush();
}
