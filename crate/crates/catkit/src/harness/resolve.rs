//! Turns a parsed document into engine values.
//!
//! Resolution is purely structural: names must refer to existing records
//! and each record must assemble (endpoints line up, tables are total).
//! Whether the assembled values satisfy their laws is left to the task
//! runner, so a spec file may deliberately carry a broken category or a
//! non-natural family for a validation task to flag.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::Limits;
use crate::fincat::{FinCat, FunctorMap, NatTransMap};
use crate::hopf::ParametricAdjunction;
use crate::structure::{Adjunction, Monad};
use crate::twocat::{AdjOneCell, MndOneCell};

use super::schema::{
    CellKind, SpecDoc, SpecError, SpecErrorCode, TaskDef, TASK_OPS,
};

/// Every value a spec file defines, ready for the task runner.
#[derive(Debug, Default)]
pub struct World {
    pub categories: BTreeMap<String, Arc<FinCat>>,
    pub functors: BTreeMap<String, FunctorMap>,
    pub nats: BTreeMap<String, NatTransMap>,
    pub monads: BTreeMap<String, Monad>,
    pub adjunctions: BTreeMap<String, Adjunction>,
    pub adj_cells: BTreeMap<String, AdjOneCell>,
    pub mnd_cells: BTreeMap<String, MndOneCell>,
    pub parametrics: BTreeMap<String, ParametricAdjunction>,
    pub tasks: Vec<TaskDef>,
}

struct Resolver {
    errors: Vec<SpecError>,
    /// Records that were declared but could not be built.  References to
    /// them are not dangling, so they produce no further errors.
    poisoned: std::collections::HashSet<(String, String)>,
}

impl Resolver {
    fn dangling(&mut self, path: String, what: &str, name: &str) {
        self.errors.push(SpecError::new(
            SpecErrorCode::DanglingReference,
            path,
            format!("unknown {what} {name:?}"),
        ));
    }

    fn broken(&mut self, path: String, detail: impl Into<String>) {
        self.errors.push(SpecError::new(
            SpecErrorCode::SchemaViolation,
            path,
            detail,
        ));
    }

    fn duplicate(&mut self, collection: &str, name: &str) {
        self.errors.push(SpecError::new(
            SpecErrorCode::DuplicateName,
            format!("{collection}/{name}"),
            format!("{name:?} is defined more than once"),
        ));
    }

    fn poison(&mut self, collection: &str, name: &str) {
        self.poisoned.insert((collection.to_string(), name.to_string()));
    }

    fn is_poisoned(&self, collection: &str, name: &str) -> bool {
        self.poisoned
            .contains(&(collection.to_string(), name.to_string()))
    }

    /// A reference that resolved to nothing: dangling unless its target
    /// was declared and failed, in which case the cause is already
    /// reported.
    fn missing(&mut self, path: String, collection: &str, what: &str, name: &str) {
        if !self.is_poisoned(collection, name) {
            self.dangling(path, what, name);
        }
    }

    /// A declared record whose constructor refused it.  Resource
    /// exhaustion keeps its own code so the caller can exit accordingly.
    fn failed(&mut self, collection: &str, name: &str, err: &crate::error::Error) {
        let code = if matches!(err, crate::error::Error::Resource { .. }) {
            SpecErrorCode::ResourceLimit
        } else {
            SpecErrorCode::SchemaViolation
        };
        self.errors.push(SpecError::new(
            code,
            format!("{collection}/{name}"),
            err.to_string(),
        ));
        self.poison(collection, name);
    }

    /// A declared record whose shape is wrong before construction starts.
    fn broken_item(&mut self, collection: &str, name: &str, detail: impl Into<String>) {
        self.errors.push(SpecError::new(
            SpecErrorCode::SchemaViolation,
            format!("{collection}/{name}"),
            detail,
        ));
        self.poison(collection, name);
    }
}

fn check_unique<'a, I: Iterator<Item = &'a str>>(r: &mut Resolver, collection: &str, names: I) {
    let mut seen = std::collections::HashSet::new();
    for name in names {
        if !seen.insert(name) {
            r.duplicate(collection, name);
        }
    }
}

/// Required argument roles per task operation, with the collection each
/// refers to.  The `adjoint-object` operation is handled separately since
/// its argument set depends on the cell kind.
fn task_arg_spec(op: &str) -> &'static [(&'static str, &'static str)] {
    match op {
        "validate-category" => &[("category", "categories")],
        "em" => &[("monad", "monads")],
        "phi" => &[("cell", "adj-cells")],
        "psi" => &[("cell", "mnd-cells")],
        "hopf-adj" | "compare-phi" | "fusion-hopf" => &[
            ("cell", "adj-cells"),
            ("argument", "adjunctions"),
            ("parameter", "adjunctions"),
        ],
        "hopf-mnd" => &[
            ("cell", "mnd-cells"),
            ("argument", "monads"),
            ("resolution", "adjunctions"),
        ],
        "fusion" => &[
            ("cell", "mnd-cells"),
            ("argument", "monads"),
            ("parameter", "monads"),
        ],
        "dinatural-extend" | "antipode" => &[
            ("cell", "mnd-cells"),
            ("argument", "monads"),
            ("parametric", "parametric_adjunctions"),
            ("parameter", "monads"),
        ],
        "lift" => &[
            ("cell", "mnd-cells"),
            ("parametric", "parametric_adjunctions"),
            ("source", "monads"),
            ("target", "monads"),
            ("parameter", "monads"),
        ],
        _ => &[],
    }
}

pub fn resolve(doc: &SpecDoc, limits: &Limits) -> Result<World, Vec<SpecError>> {
    let mut world = World::default();
    let mut r = Resolver {
        errors: Vec::new(),
        poisoned: std::collections::HashSet::new(),
    };

    check_unique(&mut r, "categories", doc.categories.iter().map(|c| c.name.as_str()));
    check_unique(&mut r, "functors", doc.functors.iter().map(|c| c.name.as_str()));
    check_unique(
        &mut r,
        "natural_transformations",
        doc.natural_transformations.iter().map(|c| c.name.as_str()),
    );
    check_unique(&mut r, "monads", doc.monads.iter().map(|c| c.name.as_str()));
    check_unique(&mut r, "adjunctions", doc.adjunctions.iter().map(|c| c.name.as_str()));
    check_unique(&mut r, "one_cells", doc.one_cells.iter().map(|c| c.name.as_str()));
    check_unique(
        &mut r,
        "parametric_adjunctions",
        doc.parametric_adjunctions.iter().map(|c| c.name.as_str()),
    );
    check_unique(&mut r, "tasks", doc.tasks.iter().map(|c| c.name.as_str()));

    for def in &doc.categories {
        let mut b = FinCat::builder(def.name.clone());
        for obj in &def.objects {
            b = b.object(obj.clone());
        }
        for m in &def.morphisms {
            b = b.morphism(m.id.clone(), m.dom.clone(), m.cod.clone());
        }
        for (obj, mor) in &def.identities {
            b = b.identity(obj.clone(), mor.clone());
        }
        for c in &def.composition {
            b = b.composite(c.g.clone(), c.f.clone(), c.eq.clone());
        }
        match b.build() {
            Ok(cat) => {
                world.categories.insert(def.name.clone(), Arc::new(cat));
            }
            Err(e) => r.failed("categories", &def.name, &e),
        }
    }

    for def in &doc.functors {
        let path = format!("functors/{}", def.name);
        let Some(dom) = world.categories.get(&def.dom) else {
            r.missing(path, "categories", "category", &def.dom);
            r.poison("functors", &def.name);
            continue;
        };
        let Some(cod) = world.categories.get(&def.cod) else {
            r.missing(path, "categories", "category", &def.cod);
            r.poison("functors", &def.name);
            continue;
        };
        let objs: HashMap<String, String> =
            def.obj_map.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        let mors: HashMap<String, String> =
            def.mor_map.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        match FunctorMap::new(def.name.clone(), dom.clone(), cod.clone(), &objs, &mors) {
            Ok(f) => {
                world.functors.insert(def.name.clone(), f);
            }
            Err(e) => r.failed("functors", &def.name, &e),
        }
    }

    for def in &doc.natural_transformations {
        let path = format!("natural_transformations/{}", def.name);
        let Some(source) = world.functors.get(&def.source) else {
            r.missing(path, "functors", "functor", &def.source);
            r.poison("natural_transformations", &def.name);
            continue;
        };
        let Some(target) = world.functors.get(&def.target) else {
            r.missing(path, "functors", "functor", &def.target);
            r.poison("natural_transformations", &def.name);
            continue;
        };
        let comps: HashMap<String, String> =
            def.components.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        match NatTransMap::new(def.name.clone(), source.clone(), target.clone(), &comps) {
            Ok(t) => {
                world.nats.insert(def.name.clone(), t);
            }
            Err(e) => r.failed("natural_transformations", &def.name, &e),
        }
    }

    for def in &doc.monads {
        let path = format!("monads/{}", def.name);
        if !world.categories.contains_key(&def.base) {
            r.missing(path, "categories", "category", &def.base);
            r.poison("monads", &def.name);
            continue;
        }
        let Some(endo) = world.functors.get(&def.endo) else {
            r.missing(path, "functors", "functor", &def.endo);
            r.poison("monads", &def.name);
            continue;
        };
        let Some(mult) = world.nats.get(&def.mult) else {
            r.missing(path, "natural_transformations", "natural transformation", &def.mult);
            r.poison("monads", &def.name);
            continue;
        };
        let Some(unit) = world.nats.get(&def.unit) else {
            r.missing(path, "natural_transformations", "natural transformation", &def.unit);
            r.poison("monads", &def.name);
            continue;
        };
        match Monad::new(def.name.clone(), endo.clone(), mult.clone(), unit.clone()) {
            Ok(m) => {
                world.monads.insert(def.name.clone(), m);
            }
            Err(e) => r.failed("monads", &def.name, &e),
        }
    }

    for def in &doc.adjunctions {
        let path = format!("adjunctions/{}", def.name);
        let Some(left) = world.functors.get(&def.left) else {
            r.missing(path, "functors", "functor", &def.left);
            r.poison("adjunctions", &def.name);
            continue;
        };
        let Some(right) = world.functors.get(&def.right) else {
            r.missing(path, "functors", "functor", &def.right);
            r.poison("adjunctions", &def.name);
            continue;
        };
        let Some(unit) = world.nats.get(&def.unit) else {
            r.missing(path, "natural_transformations", "natural transformation", &def.unit);
            r.poison("adjunctions", &def.name);
            continue;
        };
        let Some(counit) = world.nats.get(&def.counit) else {
            r.missing(path, "natural_transformations", "natural transformation", &def.counit);
            r.poison("adjunctions", &def.name);
            continue;
        };
        match Adjunction::new(
            def.name.clone(),
            left.clone(),
            right.clone(),
            unit.clone(),
            counit.clone(),
        ) {
            Ok(a) => {
                world.adjunctions.insert(def.name.clone(), a);
            }
            Err(e) => r.failed("adjunctions", &def.name, &e),
        }
    }

    for def in &doc.one_cells {
        let path = format!("one_cells/{}", def.name);
        match def.kind {
            CellKind::Adj => {
                let Some(source) = world.adjunctions.get(&def.source) else {
                    r.missing(path, "adjunctions", "adjunction", &def.source);
                    r.poison("one_cells", &def.name);
                    continue;
                };
                let Some(target) = world.adjunctions.get(&def.target) else {
                    r.missing(path, "adjunctions", "adjunction", &def.target);
                    r.poison("one_cells", &def.name);
                    continue;
                };
                let Some(top) = world.functors.get(&def.top) else {
                    r.missing(path, "functors", "functor", &def.top);
                    r.poison("one_cells", &def.name);
                    continue;
                };
                let Some(bottom_name) = def.bottom.as_ref() else {
                    r.broken_item("one_cells", &def.name, "adjunction squares need a bottom functor");
                    continue;
                };
                let Some(bottom) = world.functors.get(bottom_name) else {
                    r.missing(path, "functors", "functor", bottom_name);
                    r.poison("one_cells", &def.name);
                    continue;
                };
                let Some(lambda_name) = def.lambda.as_ref() else {
                    r.broken_item(
                        "one_cells",
                        &def.name,
                        "adjunction squares need a lambda transformation",
                    );
                    continue;
                };
                let Some(lambda) = world.nats.get(lambda_name) else {
                    r.missing(path, "natural_transformations", "natural transformation", lambda_name);
                    r.poison("one_cells", &def.name);
                    continue;
                };
                if def.psi.is_some() {
                    r.broken_item("one_cells", &def.name, "adjunction squares take lambda, not psi");
                    continue;
                }
                match AdjOneCell::new(
                    def.name.clone(),
                    source.clone(),
                    target.clone(),
                    top.clone(),
                    bottom.clone(),
                    lambda.clone(),
                ) {
                    Ok(c) => {
                        world.adj_cells.insert(def.name.clone(), c);
                    }
                    Err(e) => r.failed("one_cells", &def.name, &e),
                }
            }
            CellKind::Mnd => {
                let Some(source) = world.monads.get(&def.source) else {
                    r.missing(path, "monads", "monad", &def.source);
                    r.poison("one_cells", &def.name);
                    continue;
                };
                let Some(target) = world.monads.get(&def.target) else {
                    r.missing(path, "monads", "monad", &def.target);
                    r.poison("one_cells", &def.name);
                    continue;
                };
                let Some(carrier) = world.functors.get(&def.top) else {
                    r.missing(path, "functors", "functor", &def.top);
                    r.poison("one_cells", &def.name);
                    continue;
                };
                let Some(psi_name) = def.psi.as_ref() else {
                    r.broken_item("one_cells", &def.name, "monad cells need a psi transformation");
                    continue;
                };
                let Some(psi) = world.nats.get(psi_name) else {
                    r.missing(path, "natural_transformations", "natural transformation", psi_name);
                    r.poison("one_cells", &def.name);
                    continue;
                };
                if def.bottom.is_some() || def.lambda.is_some() {
                    r.broken_item("one_cells", &def.name, "monad cells take top and psi only");
                    continue;
                }
                match MndOneCell::new(
                    def.name.clone(),
                    source.clone(),
                    target.clone(),
                    carrier.clone(),
                    psi.clone(),
                ) {
                    Ok(c) => {
                        world.mnd_cells.insert(def.name.clone(), c);
                    }
                    Err(e) => r.failed("one_cells", &def.name, &e),
                }
            }
        }
    }

    for def in &doc.parametric_adjunctions {
        let path = format!("parametric_adjunctions/{}", def.name);
        let Some(base) = world.categories.get(&def.base) else {
            r.missing(path, "categories", "category", &def.base);
            r.poison("parametric_adjunctions", &def.name);
            continue;
        };
        let Some(param) = world.categories.get(&def.param) else {
            r.missing(path, "categories", "category", &def.param);
            r.poison("parametric_adjunctions", &def.name);
            continue;
        };
        let Some(forward) = world.functors.get(&def.forward) else {
            r.missing(path, "functors", "functor", &def.forward);
            r.poison("parametric_adjunctions", &def.name);
            continue;
        };
        let Some(backward) = world.functors.get(&def.backward) else {
            r.missing(path, "functors", "functor", &def.backward);
            r.poison("parametric_adjunctions", &def.name);
            continue;
        };
        let mut per_param: Vec<Option<Adjunction>> = vec![None; param.object_count()];
        let mut slot_trouble = false;
        for (ix, slot) in def.per_parameter.iter().enumerate() {
            let slot_path = format!("{path}/per_parameter/{ix}");
            let Some(obj) = param.object_ix(&slot.param) else {
                r.dangling(slot_path, "parameter object", &slot.param);
                slot_trouble = true;
                continue;
            };
            let Some(adj) = world.adjunctions.get(&slot.adjunction) else {
                r.missing(slot_path, "adjunctions", "adjunction", &slot.adjunction);
                slot_trouble = true;
                continue;
            };
            if per_param[obj].replace(adj.clone()).is_some() {
                r.broken(slot_path, format!("parameter {:?} listed twice", slot.param));
                slot_trouble = true;
            }
        }
        if per_param.iter().any(Option::is_none) {
            if !slot_trouble {
                r.broken(
                    path.clone(),
                    "per_parameter must cover every parameter object exactly once",
                );
            }
            r.poison("parametric_adjunctions", &def.name);
            continue;
        }
        if slot_trouble {
            r.poison("parametric_adjunctions", &def.name);
            continue;
        }
        match ParametricAdjunction::new(
            def.name.clone(),
            base,
            param,
            forward.clone(),
            backward.clone(),
            per_param.into_iter().map(Option::unwrap).collect(),
            limits,
        ) {
            Ok(p) => {
                world.parametrics.insert(def.name.clone(), p);
            }
            Err(e) => r.failed("parametric_adjunctions", &def.name, &e),
        }
    }

    for def in &doc.tasks {
        let path = format!("tasks/{}", def.name);
        if !TASK_OPS.contains(&def.op.as_str()) {
            r.broken(path.clone(), format!("unknown operation {:?}", def.op));
            continue;
        }
        if def.op == "adjoint-object" {
            if let Some(cell) = def.args.get("cell") {
                if r.is_poisoned("one_cells", cell) {
                    continue;
                }
            }
        }
        let expected: Vec<(&str, &str)> = if def.op == "adjoint-object" {
            match def.args.get("cell") {
                Some(cell) if world.adj_cells.contains_key(cell) => vec![
                    ("cell", "one_cells"),
                    ("adjunction", "adjunctions"),
                    ("conjugate", "adjunctions"),
                ],
                _ => vec![("cell", "mnd-cells"), ("adjunction", "adjunctions")],
            }
        } else {
            task_arg_spec(&def.op).to_vec()
        };
        for (role, collection) in &expected {
            let Some(value) = def.args.get(*role) else {
                r.broken(path.clone(), format!("missing argument {role:?}"));
                continue;
            };
            let found = match *collection {
                "categories" => world.categories.contains_key(value),
                "functors" => world.functors.contains_key(value),
                "monads" => world.monads.contains_key(value),
                "adjunctions" => world.adjunctions.contains_key(value),
                "adj-cells" => world.adj_cells.contains_key(value),
                "mnd-cells" => world.mnd_cells.contains_key(value),
                "one_cells" => {
                    world.adj_cells.contains_key(value) || world.mnd_cells.contains_key(value)
                }
                "parametric_adjunctions" => world.parametrics.contains_key(value),
                _ => false,
            };
            let poison_key = match *collection {
                "adj-cells" | "mnd-cells" => "one_cells",
                other => other,
            };
            if !found && !r.is_poisoned(poison_key, value) {
                r.dangling(format!("{path}/{role}"), collection, value);
            }
        }
        for role in def.args.keys() {
            if !expected.iter().any(|(k, _)| k == role) {
                r.broken(path.clone(), format!("unexpected argument {role:?}"));
            }
        }
    }
    world.tasks = doc.tasks.clone();

    if r.errors.is_empty() {
        Ok(world)
    } else {
        Err(r.errors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::schema::parse_spec_file;

    fn resolve_str(text: &str) -> Result<World, Vec<SpecError>> {
        let doc = parse_spec_file(text.as_bytes()).unwrap();
        resolve(&doc, &Limits::default())
    }

    #[test]
    fn dangling_references_name_their_path() {
        let errs = resolve_str(
            r#"{"functors": [{"name": "f", "dom": "missing", "cod": "missing",
                "obj_map": {}, "mor_map": {}}]}"#,
        )
        .unwrap_err();
        assert_eq!(errs[0].code, SpecErrorCode::DanglingReference);
        assert_eq!(errs[0].path, "functors/f");
        assert!(errs[0].detail.contains("missing"));
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let errs = resolve_str(
            r#"{"categories": [
                {"name": "C", "objects": [], "morphisms": [], "identities": {}, "composition": []},
                {"name": "C", "objects": [], "morphisms": [], "identities": {}, "composition": []}
            ]}"#,
        )
        .unwrap_err();
        assert!(errs.iter().any(|e| e.code == SpecErrorCode::DuplicateName));
    }

    #[test]
    fn unknown_morphism_in_composition_is_reported() {
        let errs = resolve_str(
            r#"{"categories": [{"name": "One", "objects": ["*"],
                "morphisms": [{"id": "id*", "dom": "*", "cod": "*"}],
                "identities": {"*": "id*"},
                "composition": [{"g": "id*", "f": "ghost", "eq": "id*"}]}]}"#,
        )
        .unwrap_err();
        assert_eq!(errs[0].code, SpecErrorCode::SchemaViolation);
        assert!(errs[0].detail.contains("ghost"));
    }

    #[test]
    fn resource_failures_are_classified_and_do_not_cascade() {
        let doc = crate::harness::generate_fixture("bool4-nucleus").unwrap();
        let errs = resolve(&doc, &Limits { max_morphisms: 10 }).unwrap_err();
        assert_eq!(errs.len(), 1, "{errs:?}");
        assert_eq!(errs[0].code, SpecErrorCode::ResourceLimit);
        assert_eq!(errs[0].path, "parametric_adjunctions/and-param");
    }

    #[test]
    fn tasks_check_their_arguments() {
        let errs = resolve_str(
            r#"{"tasks": [
                {"name": "a", "op": "validate-category", "args": {"category": "nowhere"}},
                {"name": "b", "op": "frobnicate"},
                {"name": "c", "op": "em", "args": {"monad": "m", "extra": "x"}}
            ]}"#,
        )
        .unwrap_err();
        assert!(errs.iter().any(
            |e| e.code == SpecErrorCode::DanglingReference && e.path == "tasks/a/category"
        ));
        assert!(errs.iter().any(|e| e.detail.contains("frobnicate")));
        assert!(errs.iter().any(|e| e.detail.contains("extra")));
    }
}
