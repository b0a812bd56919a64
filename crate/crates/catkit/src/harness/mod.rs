//! Specification files, fixtures, and the check runner.
//!
//! A document names finite presentations of categories, functors,
//! transformations, monads, adjunctions, one-cells and parametric
//! adjunctions, plus a list of tasks to run against them.  The flow is
//!
//! 1. [`parse_spec_file`] turns bytes into a [`SpecDoc`] or a list of
//!    located [`SpecError`]s,
//! 2. [`resolve`] cross-links the document into engine values (a
//!    [`World`]), rejecting dangling references and duplicates,
//! 3. [`run_check_suite`] executes the tasks in order and folds the
//!    outcomes into a [`Report`],
//! 4. [`emit_report`] renders the report as canonical JSON or text.
//!
//! Reports are deterministic: collections are sorted, violations are
//! sorted, and the only environmental input is the document itself, which
//! is tracked by digest.  [`generate_fixture`] produces the built-in
//! example documents used by the test suite and the command line.

mod fixtures;
mod report;
mod resolve;
mod schema;
mod tasks;

pub use fixtures::{generate_fixture, FIXTURE_NAMES};
pub use report::{digest, emit_report, Report, ReportFormat, Summary, TaskOutcome, TaskStatus};
pub use resolve::{resolve, World};
pub use schema::{
    emit_spec_file, parse_spec_file, SpecDoc, SpecError, SpecErrorCode, TaskDef, TASK_OPS,
};
pub use tasks::run_check_suite;
