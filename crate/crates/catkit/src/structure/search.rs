use crate::fincat::{
    compose_functors, identity_functor, FunctorMap, MorIx, NatTransMap, ObjIx,
};

use super::adjunction::{validate_adjunction, Adjunction};

/// Exhaustive right-adjoint search: for each target object `d`, find a
/// couniversal pair `(c0, f0 : J c0 -> d)` such that every `f : J c -> d`
/// factors through `f0` by a unique morphism into `c0`.  Deterministic:
/// candidates are tried in index order and the first hit wins.
///
/// This is a free-standing utility.  The theorem pipelines never search;
/// their per-parameter adjoints always come from supplied data.
pub fn find_right_adjoint(j: &FunctorMap) -> Option<Adjunction> {
    let (c_cat, d_cat) = (j.dom(), j.cod());
    let mut right_obj: Vec<ObjIx> = Vec::with_capacity(d_cat.object_count());
    let mut counit: Vec<MorIx> = Vec::with_capacity(d_cat.object_count());
    for d in d_cat.objects() {
        let found = c_cat.objects().find_map(|c0| {
            d_cat
                .hom(j.obj(c0), d)
                .into_iter()
                .find(|&f0| couniversal(j, c0, f0, d))
                .map(|f0| (c0, f0))
        })?;
        right_obj.push(found.0);
        counit.push(found.1);
    }
    let right_mor = d_cat
        .morphisms()
        .map(|g| {
            let (d0, d1) = (d_cat.dom(g), d_cat.cod(g));
            let through = d_cat.compose(g, counit[d0])?;
            unique_factorisation(j, right_obj[d0], right_obj[d1], counit[d1], through)
        })
        .collect::<Option<Vec<_>>>()?;
    let right = FunctorMap::from_tables(
        format!("radj({})", j.name()),
        d_cat.clone(),
        c_cat.clone(),
        right_obj.clone(),
        right_mor,
    );
    let unit_components = c_cat
        .objects()
        .map(|c| {
            let jc = j.obj(c);
            unique_factorisation(j, c, right_obj[jc], counit[jc], d_cat.identity(jc))
        })
        .collect::<Option<Vec<_>>>()?;
    let unit = NatTransMap::from_components(
        format!("unit(radj {})", j.name()),
        identity_functor(c_cat),
        compose_functors(&right, j).ok()?,
        unit_components,
    )
    .ok()?;
    let counit_nat = NatTransMap::from_components(
        format!("counit(radj {})", j.name()),
        compose_functors(j, &right).ok()?,
        identity_functor(d_cat),
        counit,
    )
    .ok()?;
    let adj = Adjunction::new(
        format!("{}⊣radj", j.name()),
        j.clone(),
        right,
        unit,
        counit_nat,
    )
    .ok()?;
    validate_adjunction(&adj).passed().then_some(adj)
}

/// Every `f : J c -> d` factors through `f0 : J c0 -> d` by exactly one
/// morphism `c -> c0`.
fn couniversal(j: &FunctorMap, c0: ObjIx, f0: MorIx, d: ObjIx) -> bool {
    let (c_cat, d_cat) = (j.dom(), j.cod());
    c_cat.objects().all(|c| {
        d_cat.hom(j.obj(c), d).into_iter().all(|f| {
            let count = c_cat
                .hom(c, c0)
                .into_iter()
                .filter(|&m| d_cat.compose(f0, j.mor(m)) == Some(f))
                .count();
            count == 1
        })
    })
}

/// The unique `m : c -> c0` with `f0 ∘ J(m) = f`, if exactly one exists.
fn unique_factorisation(
    j: &FunctorMap,
    c: ObjIx,
    c0: ObjIx,
    f0: MorIx,
    f: MorIx,
) -> Option<MorIx> {
    let d_cat = j.cod();
    let mut candidates = j
        .dom()
        .hom(c, c0)
        .into_iter()
        .filter(|&m| d_cat.compose(f0, j.mor(m)) == Some(f));
    let first = candidates.next()?;
    candidates.next().is_none().then_some(first)
}
