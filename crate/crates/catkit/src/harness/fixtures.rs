//! Built-in fixture documents.
//!
//! Every fixture is assembled with the engine's own constructors and then
//! serialized, so a parsed fixture resolves to values pointwise equal to
//! the ones used here.  The poset fixtures follow one naming convention
//! throughout: the unique morphism from `x` to `y` is `"x<=y"`, with the
//! identity at `x` spelled `"x<=x"`.
//!
//! The flagship `bool4-nucleus` file is the four-element Boolean algebra
//! with the nucleus `j(x) = x ∨ a`, the meet/implication parametric
//! adjunction, and a task for every operation the runner knows; `meetcell`
//! is its non-Hopf counterpart at two elements.

use std::sync::Arc;

use crate::error::{Error, Limits, Result};
use crate::fincat::{
    compose_functors, op_category, product_category, product_functor, FinCat, FunctorMap,
    NatTransMap, ObjIx,
};

use super::schema::{
    AdjunctionDef, CategoryDef, CellKind, CompositeDef, FunctorDef, MonadDef, MorphismDef, NatDef,
    OneCellDef, ParametricDef, PerParameterDef, SpecDoc, TaskDef,
};

/// Names accepted by [`generate_fixture`].  `id-monad(...)` takes any of
/// the category-only names as its argument.
pub const FIXTURE_NAMES: &[&str] = &[
    "one",
    "two",
    "bool4",
    "z2",
    "closure1",
    "bool4-nucleus",
    "meetcell",
    "id-monad(two)",
];

pub fn generate_fixture(name: &str) -> Result<SpecDoc> {
    match name {
        "one" => Ok(category_only("One", &one_cat())),
        "two" => Ok(category_only("Two", &two_cat())),
        "bool4" => Ok(category_only("Bool4", &bool4_cat())),
        "z2" => Ok(z2()),
        "closure1" => Ok(closure1()),
        "bool4-nucleus" => bool4_nucleus(),
        "meetcell" => meetcell(),
        other => {
            if let Some(inner) = other
                .strip_prefix("id-monad(")
                .and_then(|rest| rest.strip_suffix(')'))
            {
                return id_monad(inner);
            }
            Err(Error::structural(format!(
                "unknown fixture {other:?}; expected one of {}",
                FIXTURE_NAMES.join(", ")
            )))
        }
    }
}

// ---------------------------------------------------------------------------
// Order-theoretic scaffolding.

fn poset(name: &str, ids: &[&str], leq: impl Fn(usize, usize) -> bool) -> Arc<FinCat> {
    let mut b = FinCat::builder(name);
    for id in ids {
        b = b.object(*id);
    }
    for (x, ix) in ids.iter().enumerate() {
        for (y, iy) in ids.iter().enumerate() {
            if leq(x, y) {
                b = b.morphism(format!("{ix}<={iy}"), *ix, *iy);
            }
        }
    }
    for id in ids {
        b = b.identity(*id, format!("{id}<={id}"));
    }
    for (x, ix) in ids.iter().enumerate() {
        for (y, iy) in ids.iter().enumerate() {
            if !leq(x, y) {
                continue;
            }
            for (z, iz) in ids.iter().enumerate() {
                if leq(y, z) {
                    b = b.composite(
                        format!("{iy}<={iz}"),
                        format!("{ix}<={iy}"),
                        format!("{ix}<={iz}"),
                    );
                }
            }
        }
    }
    b.build().map(Arc::new).expect("posets always assemble")
}

fn one_cat() -> Arc<FinCat> {
    poset("One", &["*"], |_, _| true)
}

fn two_cat() -> Arc<FinCat> {
    poset("Two", &["0", "1"], |x, y| x <= y)
}

/// Diamond lattice: bot below the incomparable pair a, b below top.
fn bool4_cat() -> Arc<FinCat> {
    poset("Bool4", &["bot", "a", "b", "top"], bool4_leq)
}

fn bool4_leq(x: usize, y: usize) -> bool {
    x == y || x == 0 || y == 3
}

fn bool4_meet(x: usize, y: usize) -> usize {
    if bool4_leq(x, y) {
        x
    } else if bool4_leq(y, x) {
        y
    } else {
        0
    }
}

fn bool4_join(x: usize, y: usize) -> usize {
    if bool4_leq(x, y) {
        y
    } else if bool4_leq(y, x) {
        x
    } else {
        3
    }
}

/// Relative pseudocomplement: the largest z with x ∧ z ≤ y.
fn bool4_imp(x: usize, y: usize) -> usize {
    (0..4)
        .filter(|&z| bool4_leq(bool4_meet(x, z), y))
        .fold(0, bool4_join)
}

/// Unique morphism of a thin category between the two objects.
fn hom_mor(cat: &FinCat, x: ObjIx, y: ObjIx) -> usize {
    *cat.hom(x, y)
        .first()
        .expect("fixture posets have the required comparabilities")
}

/// Functor between thin categories from its object action alone.
fn monotone(
    name: &str,
    dom: &Arc<FinCat>,
    cod: &Arc<FinCat>,
    f: impl Fn(ObjIx) -> ObjIx,
) -> FunctorMap {
    let obj_map: Vec<ObjIx> = dom.objects().map(&f).collect();
    let mor_map = dom
        .morphisms()
        .map(|m| hom_mor(cod, obj_map[dom.dom(m)], obj_map[dom.cod(m)]))
        .collect();
    FunctorMap::from_tables(name.into(), dom.clone(), cod.clone(), obj_map, mor_map)
}

/// The canonical family between two functors into a thin category.
fn thin_family(name: &str, source: &FunctorMap, target: &FunctorMap) -> NatTransMap {
    let cod = source.cod().clone();
    let components = source
        .dom()
        .objects()
        .map(|o| hom_mor(&cod, source.obj(o), target.obj(o)))
        .collect();
    NatTransMap::from_components(name, source.clone(), target.clone(), components)
        .expect("thin families are always structural")
}

fn identity_functor_named(name: &str, cat: &Arc<FinCat>) -> FunctorMap {
    crate::fincat::identity_functor(cat).rename(name.to_string())
}

// ---------------------------------------------------------------------------
// Serialization of engine values into document records.

fn def_category(name: &str, cat: &FinCat) -> CategoryDef {
    let mut composition = Vec::new();
    for f in cat.morphisms() {
        for g in cat.morphisms() {
            if let Some(eq) = cat.compose(g, f) {
                composition.push(CompositeDef {
                    g: cat.morphism_id(g).to_string(),
                    f: cat.morphism_id(f).to_string(),
                    eq: cat.morphism_id(eq).to_string(),
                });
            }
        }
    }
    CategoryDef {
        name: name.to_string(),
        objects: cat.objects().map(|o| cat.object_id(o).to_string()).collect(),
        morphisms: cat
            .morphisms()
            .map(|m| MorphismDef {
                id: cat.morphism_id(m).to_string(),
                dom: cat.object_id(cat.dom(m)).to_string(),
                cod: cat.object_id(cat.cod(m)).to_string(),
            })
            .collect(),
        identities: cat
            .objects()
            .map(|o| {
                (
                    cat.object_id(o).to_string(),
                    cat.morphism_id(cat.identity(o)).to_string(),
                )
            })
            .collect(),
        composition,
    }
}

fn def_functor(name: &str, dom_ref: &str, cod_ref: &str, f: &FunctorMap) -> FunctorDef {
    FunctorDef {
        name: name.to_string(),
        dom: dom_ref.to_string(),
        cod: cod_ref.to_string(),
        obj_map: f
            .dom()
            .objects()
            .map(|o| {
                (
                    f.dom().object_id(o).to_string(),
                    f.cod().object_id(f.obj(o)).to_string(),
                )
            })
            .collect(),
        mor_map: f
            .dom()
            .morphisms()
            .map(|m| {
                (
                    f.dom().morphism_id(m).to_string(),
                    f.cod().morphism_id(f.mor(m)).to_string(),
                )
            })
            .collect(),
    }
}

fn def_nat(name: &str, source_ref: &str, target_ref: &str, t: &NatTransMap) -> NatDef {
    NatDef {
        name: name.to_string(),
        source: source_ref.to_string(),
        target: target_ref.to_string(),
        components: t
            .dom()
            .objects()
            .map(|o| {
                (
                    t.dom().object_id(o).to_string(),
                    t.cod().morphism_id(t.component(o)).to_string(),
                )
            })
            .collect(),
    }
}

fn def_monad(name: &str, base: &str, endo: &str, mult: &str, unit: &str) -> MonadDef {
    MonadDef {
        name: name.into(),
        base: base.into(),
        endo: endo.into(),
        mult: mult.into(),
        unit: unit.into(),
    }
}

fn def_adjunction(name: &str, left: &str, right: &str, unit: &str, counit: &str) -> AdjunctionDef {
    AdjunctionDef {
        name: name.into(),
        left: left.into(),
        right: right.into(),
        unit: unit.into(),
        counit: counit.into(),
    }
}

fn mnd_cell(name: &str, source: &str, target: &str, carrier: &str, psi: &str) -> OneCellDef {
    OneCellDef {
        name: name.into(),
        kind: CellKind::Mnd,
        source: source.into(),
        target: target.into(),
        top: carrier.into(),
        bottom: None,
        lambda: None,
        psi: Some(psi.into()),
    }
}

fn adj_cell(
    name: &str,
    source: &str,
    target: &str,
    top: &str,
    bottom: &str,
    lambda: &str,
) -> OneCellDef {
    OneCellDef {
        name: name.into(),
        kind: CellKind::Adj,
        source: source.into(),
        target: target.into(),
        top: top.into(),
        bottom: Some(bottom.into()),
        lambda: Some(lambda.into()),
        psi: None,
    }
}

fn task(name: &str, op: &str, args: &[(&str, &str)]) -> TaskDef {
    TaskDef {
        name: name.into(),
        op: op.into(),
        args: args
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// The fixtures.

fn category_only(name: &str, cat: &FinCat) -> SpecDoc {
    SpecDoc {
        categories: vec![def_category(name, cat)],
        tasks: vec![task(
            "validate",
            "validate-category",
            &[("category", name)],
        )],
        ..SpecDoc::default()
    }
}

/// The two-element group as a one-object category.
fn z2_cat() -> Arc<FinCat> {
    FinCat::builder("Z2")
        .object("•")
        .morphism("e", "•", "•")
        .morphism("s", "•", "•")
        .identity("•", "e")
        .composite("e", "e", "e")
        .composite("e", "s", "s")
        .composite("s", "e", "s")
        .composite("s", "s", "e")
        .build()
        .map(Arc::new)
        .expect("the group table is a category")
}

fn z2() -> SpecDoc {
    category_only("Z2", &z2_cat())
}

/// The closure onto the top of the two-chain, as a monad.
fn closure1() -> SpecDoc {
    let two = two_cat();
    let id_two = identity_functor_named("1_Two", &two);
    let j = monotone("j", &two, &two, |_| 1);
    let jj = compose_functors(&j, &j).unwrap();
    let mult = thin_family("j-mult", &jj, &j);
    let unit = thin_family("j-unit", &id_two, &j);
    SpecDoc {
        categories: vec![def_category("Two", &two)],
        functors: vec![
            def_functor("1_Two", "Two", "Two", &id_two),
            def_functor("j", "Two", "Two", &j),
        ],
        natural_transformations: vec![
            def_nat("j-mult", "j", "j", &mult),
            def_nat("j-unit", "1_Two", "j", &unit),
        ],
        monads: vec![def_monad("Closure1", "Two", "j", "j-mult", "j-unit")],
        tasks: vec![
            task("validate", "validate-category", &[("category", "Two")]),
            task("algebras", "em", &[("monad", "Closure1")]),
        ],
        ..SpecDoc::default()
    }
}

/// Identity monad on one of the category-only fixtures.
fn id_monad(inner: &str) -> Result<SpecDoc> {
    let (cat, cat_name) = match inner {
        "one" => (one_cat(), "One"),
        "two" => (two_cat(), "Two"),
        "bool4" => (bool4_cat(), "Bool4"),
        "z2" => (z2_cat(), "Z2"),
        other => {
            return Err(Error::structural(format!(
                "id-monad takes one, two, bool4 or z2, not {other:?}"
            )))
        }
    };
    let id_name = format!("1_{cat_name}");
    let id_f = identity_functor_named(&id_name, &cat);
    let mult = crate::fincat::identity_nat(&id_f).rename("id-mult");
    let unit = crate::fincat::identity_nat(&id_f).rename("id-unit");
    let monad_name = format!("Id({cat_name})");
    Ok(SpecDoc {
        categories: vec![def_category(cat_name, &cat)],
        functors: vec![def_functor(&id_name, cat_name, cat_name, &id_f)],
        natural_transformations: vec![
            def_nat("id-mult", &id_name, &id_name, &mult),
            def_nat("id-unit", &id_name, &id_name, &unit),
        ],
        monads: vec![MonadDef {
            name: monad_name.clone(),
            base: cat_name.into(),
            endo: id_name.clone(),
            mult: "id-mult".into(),
            unit: "id-unit".into(),
        }],
        tasks: vec![
            task("validate", "validate-category", &[("category", cat_name)]),
            task("algebras", "em", &[("monad", monad_name.as_str())]),
        ],
        ..SpecDoc::default()
    })
}

/// Meet compared against the top closure: the comparison cell
/// `c ∧ p → j(c) ∧ j(p)` into the identity monad is lawful, but it is
/// strict at `(0, 1)`, so neither the Hopf nor the fusion operator has an
/// inverse.
fn meetcell() -> Result<SpecDoc> {
    let limits = Limits::default();
    let two = two_cat();
    let one = one_cat();
    let twoxtwo = Arc::new(product_category(&two, &two, &limits)?);

    let id_two = identity_functor_named("1_Two", &two);
    let id_prod = identity_functor_named("1_TwoxTwo", &twoxtwo);
    let j = monotone("j", &two, &two, |_| 1);
    let collapse = monotone("collapse", &two, &one, |_| 0);
    let pick1 = monotone("pick1", &one, &two, |_| 1);
    let meet = monotone("meet", &twoxtwo, &two, |o| (o / 2).min(o % 2));
    let jxj = product_functor(&j, &j, &twoxtwo, &twoxtwo)?.rename("jxj".to_string());
    let closed_meet = compose_functors(&meet, &jxj)?;

    let jj = compose_functors(&j, &j)?;
    let jxj_sq = compose_functors(&jxj, &jxj)?;
    let pc = compose_functors(&pick1, &collapse)?;
    let cp = compose_functors(&collapse, &pick1)?;
    let id_one = identity_functor_named("1_One", &one);

    let doc = SpecDoc {
        categories: vec![
            def_category("Two", &two),
            def_category("TwoxTwo", &twoxtwo),
            def_category("One", &one),
        ],
        functors: vec![
            def_functor("1_Two", "Two", "Two", &id_two),
            def_functor("1_TwoxTwo", "TwoxTwo", "TwoxTwo", &id_prod),
            def_functor("1_One", "One", "One", &id_one),
            def_functor("j", "Two", "Two", &j),
            def_functor("collapse", "Two", "One", &collapse),
            def_functor("pick1", "One", "Two", &pick1),
            def_functor("meet", "TwoxTwo", "Two", &meet),
            def_functor("jxj", "TwoxTwo", "TwoxTwo", &jxj),
            def_functor("closed-meet", "TwoxTwo", "Two", &closed_meet),
        ],
        natural_transformations: vec![
            def_nat("id-mult", "1_Two", "1_Two", &thin_family("m", &id_two, &id_two)),
            def_nat("id-unit", "1_Two", "1_Two", &thin_family("u", &id_two, &id_two)),
            def_nat("j-mult", "j", "j", &thin_family("m", &jj, &j)),
            def_nat("j-unit", "1_Two", "j", &thin_family("u", &id_two, &j)),
            def_nat("jxj-mult", "jxj", "jxj", &thin_family("m", &jxj_sq, &jxj)),
            def_nat(
                "jxj-unit",
                "1_TwoxTwo",
                "jxj",
                &thin_family("u", &id_prod, &jxj),
            ),
            def_nat("reflect-unit", "1_Two", "j", &thin_family("u", &id_two, &pc)),
            def_nat(
                "reflect-counit",
                "1_One",
                "1_One",
                &thin_family("c", &cp, &id_one),
            ),
            def_nat(
                "meet-psi",
                "meet",
                "closed-meet",
                &thin_family("p", &meet, &closed_meet),
            ),
        ],
        monads: vec![
            def_monad("Id(Two)", "Two", "1_Two", "id-mult", "id-unit"),
            def_monad("Closure1", "Two", "j", "j-mult", "j-unit"),
            def_monad("Closure1xClosure1", "TwoxTwo", "jxj", "jxj-mult", "jxj-unit"),
        ],
        adjunctions: vec![def_adjunction(
            "reflect",
            "collapse",
            "pick1",
            "reflect-unit",
            "reflect-counit",
        )],
        one_cells: vec![mnd_cell(
            "meet-cell",
            "Closure1xClosure1",
            "Id(Two)",
            "meet",
            "meet-psi",
        )],
        tasks: vec![
            task("validate", "validate-category", &[("category", "TwoxTwo")]),
            task(
                "meet-hopf",
                "hopf-mnd",
                &[
                    ("cell", "meet-cell"),
                    ("argument", "Closure1"),
                    ("resolution", "reflect"),
                ],
            ),
            task(
                "meet-fusion",
                "fusion",
                &[
                    ("cell", "meet-cell"),
                    ("argument", "Closure1"),
                    ("parameter", "Closure1"),
                ],
            ),
        ],
        ..SpecDoc::default()
    };
    Ok(doc)
}

/// The full pipeline on the diamond lattice with the nucleus j(x) = x ∨ a.
fn bool4_nucleus() -> Result<SpecDoc> {
    let limits = Limits::default();
    let b4 = bool4_cat();
    let b4xb4 = Arc::new(product_category(&b4, &b4, &limits)?);
    let op_b4 = Arc::new(op_category(&b4));
    let b4opxb4 = Arc::new(product_category(&op_b4, &b4, &limits)?);
    // Fixed points of the nucleus form the two-chain a < top.
    let b2 = poset("B2", &["a", "top"], |x, y| x <= y);
    let b2xb2 = Arc::new(product_category(&b2, &b2, &limits)?);

    let to_b2 = |x: usize| if x == 1 || x == 0 { 0 } else { 1 };
    let from_b2 = |x: usize| if x == 0 { 1 } else { 3 };

    let id_b4 = identity_functor_named("1_Bool4", &b4);
    let id_prod = identity_functor_named("1_B4xB4", &b4xb4);
    let id_b2 = identity_functor_named("1_B2", &b2);
    let nucleus = monotone("nucleus", &b4, &b4, |x| bool4_join(x, 1));
    let meet = monotone("meet", &b4xb4, &b4, |o| bool4_meet(o / 4, o % 4));
    let imp = monotone("imp", &b4opxb4, &b4, |o| bool4_imp(o / 4, o % 4));
    let jxj = product_functor(&nucleus, &nucleus, &b4xb4, &b4xb4)?.rename("jxj".to_string());
    let closed_meet = compose_functors(&nucleus, &meet)?;
    let collapse = monotone("collapse", &b4, &b2, |x| to_b2(bool4_join(x, 1)));
    let include = monotone("include", &b2, &b4, from_b2);
    let meet2 = monotone("meet2", &b2xb2, &b2, |o| (o / 2).min(o % 2));
    let collapse2 =
        product_functor(&collapse, &collapse, &b4xb4, &b2xb2)?.rename("collapse2".to_string());
    let include2 =
        product_functor(&include, &include, &b2xb2, &b4xb4)?.rename("include2".to_string());
    let collapse_meet = compose_functors(&collapse, &meet)?;

    let and_at = |m: usize, name: &str| monotone(name, &b4, &b4, |x| bool4_meet(x, m));
    let imp_at = |m: usize, name: &str| monotone(name, &b4, &b4, |y| bool4_imp(m, y));
    let ands = [
        and_at(0, "and-bot"),
        and_at(1, "and-a"),
        and_at(2, "and-b"),
        and_at(3, "and-top"),
    ];
    let imps = [
        imp_at(0, "imp-bot"),
        imp_at(1, "imp-a"),
        imp_at(2, "imp-b"),
        imp_at(3, "imp-top"),
    ];

    let jj = compose_functors(&nucleus, &nucleus)?;
    let jxj_sq = compose_functors(&jxj, &jxj)?;
    let inc_col = compose_functors(&include, &collapse)?;
    let col_inc = compose_functors(&collapse, &include)?;
    let inc2_col2 = compose_functors(&include2, &collapse2)?;
    let col2_inc2 = compose_functors(&collapse2, &include2)?;
    let id_b2xb2 = identity_functor_named("1_B2xB2", &b2xb2);
    let j_and_a = compose_functors(&nucleus, &ands[1])?;

    let mut functors = vec![
        def_functor("1_Bool4", "Bool4", "Bool4", &id_b4),
        def_functor("1_B4xB4", "B4xB4", "B4xB4", &id_prod),
        def_functor("1_B2", "B2", "B2", &id_b2),
        def_functor("1_B2xB2", "B2xB2", "B2xB2", &id_b2xb2),
        def_functor("nucleus", "Bool4", "Bool4", &nucleus),
        def_functor("meet", "B4xB4", "Bool4", &meet),
        def_functor("imp", "B4opxB4", "Bool4", &imp),
        def_functor("jxj", "B4xB4", "B4xB4", &jxj),
        def_functor("closed-meet", "B4xB4", "Bool4", &closed_meet),
        def_functor("collapse", "Bool4", "B2", &collapse),
        def_functor("include", "B2", "Bool4", &include),
        def_functor("meet2", "B2xB2", "B2", &meet2),
        def_functor("collapse2", "B4xB4", "B2xB2", &collapse2),
        def_functor("include2", "B2xB2", "B4xB4", &include2),
        def_functor("collapse-meet", "B4xB4", "B2", &collapse_meet),
        def_functor("j-and-a", "Bool4", "Bool4", &j_and_a),
    ];
    for (f, name) in ands.iter().zip(["and-bot", "and-a", "and-b", "and-top"]) {
        functors.push(def_functor(name, "Bool4", "Bool4", f));
    }
    for (f, name) in imps.iter().zip(["imp-bot", "imp-a", "imp-b", "imp-top"]) {
        functors.push(def_functor(name, "Bool4", "Bool4", f));
    }

    let mut nats = vec![
        def_nat("j-mult", "nucleus", "nucleus", &thin_family("m", &jj, &nucleus)),
        def_nat("j-unit", "1_Bool4", "nucleus", &thin_family("u", &id_b4, &nucleus)),
        def_nat("jxj-mult", "jxj", "jxj", &thin_family("m", &jxj_sq, &jxj)),
        def_nat("jxj-unit", "1_B4xB4", "jxj", &thin_family("u", &id_prod, &jxj)),
        def_nat(
            "reflect-unit",
            "1_Bool4",
            "nucleus",
            &thin_family("u", &id_b4, &inc_col),
        ),
        def_nat(
            "reflect-counit",
            "1_B2",
            "1_B2",
            &thin_family("c", &col_inc, &id_b2),
        ),
        def_nat(
            "reflect2-unit",
            "1_B4xB4",
            "jxj",
            &thin_family("u", &id_prod, &inc2_col2),
        ),
        def_nat(
            "reflect2-counit",
            "1_B2xB2",
            "1_B2xB2",
            &thin_family("c", &col2_inc2, &id_b2xb2),
        ),
        def_nat(
            "meet-lambda",
            "collapse-meet",
            "collapse-meet",
            &thin_family("l", &collapse_meet, &collapse_meet),
        ),
        def_nat(
            "nucleus-psi",
            "closed-meet",
            "closed-meet",
            &thin_family("p", &closed_meet, &closed_meet),
        ),
        def_nat(
            "and-a-psi",
            "j-and-a",
            "j-and-a",
            &thin_family("p", &j_and_a, &j_and_a),
        ),
        def_nat(
            "and-top-psi",
            "nucleus",
            "nucleus",
            &thin_family("p", &nucleus, &nucleus),
        ),
    ];
    let adj_names = ["and-bot-adj", "and-a-adj", "and-b-adj", "and-top-adj"];
    let mut adjunctions = vec![
        def_adjunction("reflect", "collapse", "include", "reflect-unit", "reflect-counit"),
        def_adjunction(
            "reflect2",
            "collapse2",
            "include2",
            "reflect2-unit",
            "reflect2-counit",
        ),
    ];
    let and_refs = ["and-bot", "and-a", "and-b", "and-top"];
    let imp_refs = ["imp-bot", "imp-a", "imp-b", "imp-top"];
    let suffixes = ["bot", "a", "b", "top"];
    for m in 0..4 {
        let round = compose_functors(&imps[m], &ands[m])?;
        let other = compose_functors(&ands[m], &imps[m])?;
        let round_name = format!("round-{}", suffixes[m]);
        let other_name = format!("other-{}", suffixes[m]);
        functors.push(def_functor(&round_name, "Bool4", "Bool4", &round));
        functors.push(def_functor(&other_name, "Bool4", "Bool4", &other));
        let unit_name = format!("{}-unit", and_refs[m]);
        let counit_name = format!("{}-counit", and_refs[m]);
        nats.push(def_nat(
            &unit_name,
            "1_Bool4",
            &round_name,
            &thin_family("u", &id_b4, &round),
        ));
        nats.push(def_nat(
            &counit_name,
            &other_name,
            "1_Bool4",
            &thin_family("c", &other, &id_b4),
        ));
        adjunctions.push(def_adjunction(
            adj_names[m],
            and_refs[m],
            imp_refs[m],
            &unit_name,
            &counit_name,
        ));
    }

    let doc = SpecDoc {
        categories: vec![
            def_category("Bool4", &b4),
            def_category("B4xB4", &b4xb4),
            def_category("B4opxB4", &b4opxb4),
            def_category("B2", &b2),
            def_category("B2xB2", &b2xb2),
        ],
        functors,
        natural_transformations: nats,
        monads: vec![
            def_monad("j-monad", "Bool4", "nucleus", "j-mult", "j-unit"),
            def_monad("jxj-monad", "B4xB4", "jxj", "jxj-mult", "jxj-unit"),
        ],
        adjunctions,
        one_cells: vec![
            adj_cell(
                "meet-square",
                "reflect2",
                "reflect",
                "meet",
                "meet2",
                "meet-lambda",
            ),
            mnd_cell("nucleus-cell", "jxj-monad", "j-monad", "meet", "nucleus-psi"),
            mnd_cell("and-at-a", "j-monad", "j-monad", "and-a", "and-a-psi"),
            mnd_cell("and-at-top", "j-monad", "j-monad", "and-top", "and-top-psi"),
        ],
        parametric_adjunctions: vec![ParametricDef {
            name: "and-param".into(),
            base: "Bool4".into(),
            param: "Bool4".into(),
            forward: "meet".into(),
            backward: "imp".into(),
            per_parameter: ["bot", "a", "b", "top"]
                .iter()
                .zip(adj_names)
                .map(|(p, adj)| PerParameterDef {
                    param: p.to_string(),
                    adjunction: adj.to_string(),
                })
                .collect(),
        }],
        tasks: vec![
            task("validate", "validate-category", &[("category", "Bool4")]),
            task("algebras", "em", &[("monad", "j-monad")]),
            task("flatten", "phi", &[("cell", "meet-square")]),
            task("lift-cell", "psi", &[("cell", "nucleus-cell")]),
            task(
                "hopf-square",
                "hopf-adj",
                &[
                    ("cell", "meet-square"),
                    ("argument", "reflect"),
                    ("parameter", "reflect"),
                ],
            ),
            task(
                "hopf-monad",
                "hopf-mnd",
                &[
                    ("cell", "nucleus-cell"),
                    ("argument", "j-monad"),
                    ("resolution", "reflect"),
                ],
            ),
            task(
                "fusion-monad",
                "fusion",
                &[
                    ("cell", "nucleus-cell"),
                    ("argument", "j-monad"),
                    ("parameter", "j-monad"),
                ],
            ),
            task(
                "adjoint-at-a",
                "adjoint-object",
                &[("cell", "and-at-a"), ("adjunction", "and-a-adj")],
            ),
            task(
                "adjoint-at-top",
                "adjoint-object",
                &[("cell", "and-at-top"), ("adjunction", "and-top-adj")],
            ),
            task(
                "extend",
                "dinatural-extend",
                &[
                    ("cell", "nucleus-cell"),
                    ("argument", "j-monad"),
                    ("parametric", "and-param"),
                    ("parameter", "j-monad"),
                ],
            ),
            task(
                "antipode",
                "antipode",
                &[
                    ("cell", "nucleus-cell"),
                    ("argument", "j-monad"),
                    ("parametric", "and-param"),
                    ("parameter", "j-monad"),
                ],
            ),
            task(
                "compare",
                "compare-phi",
                &[
                    ("cell", "meet-square"),
                    ("argument", "reflect"),
                    ("parameter", "reflect"),
                ],
            ),
            task(
                "fusion-hopf",
                "fusion-hopf",
                &[
                    ("cell", "meet-square"),
                    ("argument", "reflect"),
                    ("parameter", "reflect"),
                ],
            ),
            task(
                "lift",
                "lift",
                &[
                    ("cell", "nucleus-cell"),
                    ("parametric", "and-param"),
                    ("source", "j-monad"),
                    ("target", "j-monad"),
                    ("parameter", "j-monad"),
                ],
            ),
        ],
        ..SpecDoc::default()
    };
    Ok(doc)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::resolve::resolve;
    use crate::harness::schema::{emit_spec_file, parse_spec_file};

    #[test]
    fn every_fixture_parses_back_to_itself() {
        for name in FIXTURE_NAMES {
            let doc = generate_fixture(name).unwrap();
            let bytes = emit_spec_file(&doc);
            let back = parse_spec_file(&bytes).unwrap_or_else(|errs| {
                panic!("{name} does not reparse: {errs:?}");
            });
            assert_eq!(back, doc, "{name} changed across a round trip");
        }
    }

    #[test]
    fn every_fixture_resolves() {
        let limits = Limits::default();
        for name in FIXTURE_NAMES {
            let doc = generate_fixture(name).unwrap();
            if let Err(errs) = resolve(&doc, &limits) {
                panic!("{name} does not resolve: {errs:?}");
            }
        }
    }

    #[test]
    fn the_two_object_chain_has_three_morphisms() {
        let doc = generate_fixture("two").unwrap();
        assert_eq!(doc.categories[0].objects.len(), 2);
        assert_eq!(doc.categories[0].morphisms.len(), 3);
    }

    #[test]
    fn unknown_names_are_refused() {
        assert!(generate_fixture("frobnicate").is_err());
        assert!(generate_fixture("id-monad(frobnicate)").is_err());
        assert!(generate_fixture("id-monad(z2)").is_ok());
    }

    #[test]
    fn heyting_operations_satisfy_the_adjunction_inequality() {
        for x in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    assert_eq!(
                        bool4_leq(bool4_meet(x, z), y),
                        bool4_leq(z, bool4_imp(x, y)),
                        "x={x} y={y} z={z}"
                    );
                }
            }
        }
    }
}
