//! Executes a resolved spec file's task list.
//!
//! Each task maps to exactly one engine entry point.  A failed law check is
//! an outcome, not a crash: the runner distinguishes `fail` (the engine ran
//! and the property does not hold, with witnesses) from `error` (the task
//! could not run — unmet hypothesis, resource refusal, structural problem).
//! The suite always continues to the next task.

use crate::check::Violation;
use crate::error::{Error, Limits};
use crate::hopf::{
    adjoint_object_adj, adjoint_object_mnd, antipode_mnd, compare_hopf_phi, fusion_hopf_equivalence,
    fusion_operator_mnd, hopf_operator_adj, hopf_operator_mnd, hopf_parametric_adjoint_object_mnd,
    lift_parametric_adjunction, HopfAnalysis,
};
use crate::structure::em_category;
use crate::twocat::{phi_one_cell, psi_one_cell};

use super::report::{Report, TaskOutcome, TaskStatus};
use super::resolve::World;
use super::schema::TaskDef;

/// Runs the world's tasks in order, or the single task named by
/// `selection`.  Fails only when the selection does not exist.
pub fn run_check_suite(
    world: &World,
    selection: Option<&str>,
    limits: &Limits,
    input_digest: String,
) -> Result<Report, String> {
    let chosen: Vec<&TaskDef> = match selection {
        Some(name) => {
            let task = world
                .tasks
                .iter()
                .find(|t| t.name == name)
                .ok_or_else(|| format!("no task named {name:?}"))?;
            vec![task]
        }
        None => world.tasks.iter().collect(),
    };
    let outcomes = chosen
        .into_iter()
        .map(|task| run_task(world, task, limits))
        .collect();
    Ok(Report::assemble(input_digest, outcomes))
}

fn arg<'a>(task: &'a TaskDef, role: &str) -> &'a str {
    task.args
        .get(role)
        .map(String::as_str)
        .expect("argument presence is checked at resolution")
}

/// Fold an engine error into the outcome: law failures carry their
/// witnesses as a `fail`, everything else is an `error`.
fn absorb(outcome: &mut TaskOutcome, err: Error) {
    match err {
        Error::Law(report) => {
            outcome.status = TaskStatus::Fail;
            outcome.violations = report.finish().violations;
        }
        Error::Resource { .. } => {
            outcome.status = TaskStatus::Error;
            outcome.resource_limit = true;
            outcome.error = Some(err.to_string());
        }
        other => {
            outcome.status = TaskStatus::Error;
            outcome.error = Some(other.to_string());
        }
    }
}

fn record_invertibility(outcome: &mut TaskOutcome, analysis: &HopfAnalysis) {
    outcome
        .details
        .insert("operator".into(), analysis.operator().name().to_string());
    outcome
        .details
        .insert("invertible".into(), analysis.is_invertible().to_string());
    if !analysis.is_invertible() {
        outcome.status = TaskStatus::Fail;
        let (obj, comp) = analysis.witness().cloned().unwrap_or_default();
        outcome.violations.push(Violation::new(
            "hopf-invertibility",
            vec![obj, comp],
            "operator component has no two-sided inverse",
        ));
    }
}

fn run_task(world: &World, task: &TaskDef, limits: &Limits) -> TaskOutcome {
    let mut outcome = TaskOutcome::new(&task.name, &task.op);
    let result = execute(world, task, limits, &mut outcome);
    if let Err(err) = result {
        absorb(&mut outcome, err);
    }
    outcome
}

fn execute(
    world: &World,
    task: &TaskDef,
    limits: &Limits,
    outcome: &mut TaskOutcome,
) -> crate::error::Result<()> {
    match task.op.as_str() {
        "validate-category" => {
            let cat = &world.categories[arg(task, "category")];
            outcome
                .details
                .insert("objects".into(), cat.object_count().to_string());
            outcome
                .details
                .insert("morphisms".into(), cat.morphism_count().to_string());
            let report = cat.validate();
            if !report.passed() {
                outcome.status = TaskStatus::Fail;
                outcome.violations = report.violations;
            }
        }
        "em" => {
            let monad = &world.monads[arg(task, "monad")];
            let bundle = em_category(monad, limits)?;
            outcome
                .details
                .insert("algebras".into(), bundle.algebras().len().to_string());
            outcome.details.insert(
                "morphisms".into(),
                bundle.category().morphism_count().to_string(),
            );
        }
        "phi" => {
            let cell = &world.adj_cells[arg(task, "cell")];
            let image = phi_one_cell(cell)?;
            outcome
                .details
                .insert("carrier".into(), image.carrier().name().to_string());
            outcome
                .details
                .insert("source".into(), image.source().name().to_string());
            outcome
                .details
                .insert("target".into(), image.target().name().to_string());
        }
        "psi" => {
            let cell = &world.mnd_cells[arg(task, "cell")];
            let src = em_category(cell.source(), limits)?;
            let tgt = em_category(cell.target(), limits)?;
            let lifted = psi_one_cell(cell, &src, &tgt)?;
            outcome
                .details
                .insert("bottom".into(), lifted.bottom().name().to_string());
            outcome
                .details
                .insert("source_algebras".into(), src.algebras().len().to_string());
            outcome
                .details
                .insert("target_algebras".into(), tgt.algebras().len().to_string());
        }
        "hopf-adj" => {
            let cell = &world.adj_cells[arg(task, "cell")];
            let argument = &world.adjunctions[arg(task, "argument")];
            let parameter = &world.adjunctions[arg(task, "parameter")];
            let (_, analysis) = hopf_operator_adj(cell, argument, parameter, limits)?;
            record_invertibility(outcome, &analysis);
        }
        "hopf-mnd" => {
            let cell = &world.mnd_cells[arg(task, "cell")];
            let argument = &world.monads[arg(task, "argument")];
            let resolution = &world.adjunctions[arg(task, "resolution")];
            let (_, analysis) = hopf_operator_mnd(cell, argument, resolution, limits)?;
            record_invertibility(outcome, &analysis);
        }
        "fusion" => {
            let cell = &world.mnd_cells[arg(task, "cell")];
            let argument = &world.monads[arg(task, "argument")];
            let parameter = &world.monads[arg(task, "parameter")];
            let (_, analysis) = fusion_operator_mnd(cell, argument, parameter, limits)?;
            record_invertibility(outcome, &analysis);
        }
        "adjoint-object" => {
            let cell_name = arg(task, "cell");
            if let Some(cell) = world.mnd_cells.get(cell_name) {
                let jk = &world.adjunctions[arg(task, "adjunction")];
                let obj = adjoint_object_mnd(cell, jk)?;
                outcome
                    .details
                    .insert("zeta".into(), obj.zeta().name().to_string());
                outcome
                    .details
                    .insert("unit".into(), obj.unit().name().to_string());
                outcome
                    .details
                    .insert("counit".into(), obj.counit().name().to_string());
            } else {
                let cell = &world.adj_cells[cell_name];
                let jk = &world.adjunctions[arg(task, "adjunction")];
                let vw = &world.adjunctions[arg(task, "conjugate")];
                let obj = adjoint_object_adj(cell, jk, vw)?;
                outcome
                    .details
                    .insert("gamma".into(), obj.gamma().name().to_string());
                outcome
                    .details
                    .insert("unit".into(), obj.unit().name().to_string());
                outcome
                    .details
                    .insert("counit".into(), obj.counit().name().to_string());
            }
        }
        "dinatural-extend" => {
            let cell = &world.mnd_cells[arg(task, "cell")];
            let argument = &world.monads[arg(task, "argument")];
            let jk = &world.parametrics[arg(task, "parametric")];
            let parameter = &world.monads[arg(task, "parameter")];
            let bundle = em_category(parameter, limits)?;
            let ext = hopf_parametric_adjoint_object_mnd(cell, argument, jk, &bundle, limits)?;
            outcome
                .details
                .insert("family".into(), ext.psi_family().name().to_string());
            outcome
                .details
                .insert("extended".into(), ext.extended().name().to_string());
            outcome
                .details
                .insert("per_parameter".into(), ext.per_param().len().to_string());
        }
        "antipode" => {
            let cell = &world.mnd_cells[arg(task, "cell")];
            let argument = &world.monads[arg(task, "argument")];
            let jk = &world.parametrics[arg(task, "parametric")];
            let parameter = &world.monads[arg(task, "parameter")];
            let bundle = em_category(parameter, limits)?;
            let ext = hopf_parametric_adjoint_object_mnd(cell, argument, jk, &bundle, limits)?;
            let antipode = antipode_mnd(&ext, jk, &bundle, limits)?;
            outcome
                .details
                .insert("sigma".into(), antipode.sigma().name().to_string());
            outcome
                .details
                .insert("iota".into(), antipode.iota().name().to_string());
        }
        "compare-phi" => {
            let cell = &world.adj_cells[arg(task, "cell")];
            let argument = &world.adjunctions[arg(task, "argument")];
            let parameter = &world.adjunctions[arg(task, "parameter")];
            let comparison = compare_hopf_phi(cell, argument, parameter, limits)?;
            outcome.details.insert(
                "square_invertible".into(),
                comparison.adj_analysis().is_invertible().to_string(),
            );
            outcome.details.insert(
                "image_invertible".into(),
                comparison.mnd_analysis().is_invertible().to_string(),
            );
            outcome
                .details
                .insert("reflects".into(), comparison.reflects().to_string());
            if !comparison.holds() {
                outcome.status = TaskStatus::Fail;
                outcome.violations = comparison.report().clone().finish().violations;
            }
        }
        "fusion-hopf" => {
            let cell = &world.adj_cells[arg(task, "cell")];
            let argument = &world.adjunctions[arg(task, "argument")];
            let parameter = &world.adjunctions[arg(task, "parameter")];
            let comparison = fusion_hopf_equivalence(cell, argument, parameter, limits)?;
            outcome.details.insert(
                "fusion_invertible".into(),
                comparison.fusion_analysis().is_invertible().to_string(),
            );
            outcome.details.insert(
                "hopf_invertible".into(),
                comparison.hopf_analysis().is_invertible().to_string(),
            );
            if !comparison.holds() {
                outcome.status = TaskStatus::Fail;
                outcome.violations = comparison.report().clone().finish().violations;
            }
        }
        "lift" => {
            let cell = &world.mnd_cells[arg(task, "cell")];
            let jk = &world.parametrics[arg(task, "parametric")];
            let s = em_category(&world.monads[arg(task, "source")], limits)?;
            let t = em_category(&world.monads[arg(task, "target")], limits)?;
            let e = em_category(&world.monads[arg(task, "parameter")], limits)?;
            let lifted = lift_parametric_adjunction(jk, cell, &s, &t, &e, limits)?;
            outcome
                .details
                .insert("forward".into(), lifted.lifted().forward().name().to_string());
            outcome
                .details
                .insert("backward".into(), lifted.lifted().backward().name().to_string());
            outcome.details.insert(
                "slices".into(),
                lifted.lifted().per_param().len().to_string(),
            );
            outcome.details.insert(
                "roundtrip".into(),
                (lifted.recovered() == cell).to_string(),
            );
        }
        other => {
            return Err(Error::internal(format!(
                "operation {other:?} escaped resolution"
            )));
        }
    }
    Ok(())
}
