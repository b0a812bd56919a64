//! Liftings of a parametric adjunction to categories of algebras.
//!
//! A distributor-equipped carrier over a product of monads, when its
//! operator inverts, induces a parametric adjunction between algebra
//! categories: the forward leg lifts through the operator square, the
//! backward leg lifts through the glued companion square, and each
//! parameter slice inherits its unit and counit from the classical
//! slice underneath.  Both lifted legs sit over the original ones
//! through the forgetful functors, and the whole assignment is a
//! bijection: reading the structure square of the lifting back off
//! through the induced-monad functor recovers the distributor that was
//! lifted.
//!
//! The algebra categories of a product with an identity monad are only
//! canonically isomorphic to, not identical with, the products of
//! algebra categories the lifted legs are defined on.  Those canonical
//! isomorphisms are materialized here as explicit merge functors, and
//! the auxiliary squares relating the lifted legs to the plain lifts
//! are checked through them rather than assumed.

use std::sync::Arc;

use crate::check::{CheckReport, Violation};
use crate::error::{Error, Limits, Result};
use crate::fincat::{
    compose_functors, constant_functor, identity_functor, op_category, op_functor, pair_ix,
    pairing, product_category, product_functor, validate_functor, FinCat, FunctorMap, NatTransMap,
};
use crate::structure::{
    em_category, identity_monad, product_adjunction, product_monad, validate_adjunction,
    Adjunction, EmBundle,
};
use crate::twocat::{phi_one_cell, psi_one_cell, AdjOneCell, MndOneCell};

use super::engine_bug;
use super::extension::{hopf_parametric_adjoint_object_mnd, HopfParametricAdjointObjectMnd};
use super::operator::hopf_operator_adj;
use super::parametric::{validate_parametric_adjunction, ParametricAdjunction};

/// A parametric adjunction between algebra categories together with the
/// evidence that produced it: the operator pipeline it was lifted from,
/// the structure square relating it to the classical legs, and the
/// distributor recovered from that square.
#[derive(Debug, Clone)]
pub struct LiftedParametric {
    extension: HopfParametricAdjointObjectMnd,
    lifted: ParametricAdjunction,
    structure_cell: AdjOneCell,
    recovered: MndOneCell,
    report: CheckReport,
}

impl LiftedParametric {
    /// The operator pipeline record the lifting was built from.
    pub fn extension(&self) -> &HopfParametricAdjointObjectMnd {
        &self.extension
    }

    /// The lifted parametric adjunction between algebra categories.
    pub fn lifted(&self) -> &ParametricAdjunction {
        &self.lifted
    }

    /// The square over the product of algebra resolutions whose top is
    /// the classical forward leg and whose bottom is the lifted one.
    pub fn structure_cell(&self) -> &AdjOneCell {
        &self.structure_cell
    }

    /// The distributor square read back off the lifting; equal to the
    /// input cell whenever the report passed.
    pub fn recovered(&self) -> &MndOneCell {
        &self.recovered
    }

    /// Everything that was checked while assembling the lifting.
    pub fn report(&self) -> &CheckReport {
        &self.report
    }
}

/// First entry at which two parallel functors disagree, if any.
fn functor_mismatch(a: &FunctorMap, b: &FunctorMap) -> Option<String> {
    if a.dom().object_count() != b.dom().object_count()
        || a.dom().morphism_count() != b.dom().morphism_count()
    {
        return Some(format!("{} and {} have different domains", a.name(), b.name()));
    }
    for o in a.dom().objects() {
        if a.obj(o) != b.obj(o) {
            return Some(format!(
                "object {}: {} vs {}",
                a.dom().object_id(o),
                a.cod().object_id(a.obj(o)),
                b.cod().object_id(b.obj(o))
            ));
        }
    }
    for m in a.dom().morphisms() {
        if a.mor(m) != b.mor(m) {
            return Some(format!(
                "morphism {}: {} vs {}",
                a.dom().morphism_id(m),
                a.cod().morphism_id(a.mor(m)),
                b.cod().morphism_id(b.mor(m))
            ));
        }
    }
    None
}

/// First component at which two parallel transformations disagree.
fn nat_mismatch(a: &NatTransMap, b: &NatTransMap) -> Option<String> {
    for o in a.dom().objects() {
        if a.component(o) != b.component(o) {
            return Some(format!(
                "component at {}: {} vs {}",
                a.dom().object_id(o),
                a.cod().morphism_id(a.component(o)),
                b.cod().morphism_id(b.component(o))
            ));
        }
    }
    None
}

/// The canonical functor `C^A×Q → (C×Q)^{A×1}` sending an algebra and a
/// plain object to the pair algebra with identity second structure.
fn merge_left_algebras(
    dom: &Arc<FinCat>,
    a: &EmBundle,
    plain: &Arc<FinCat>,
    product: &EmBundle,
) -> Result<FunctorMap> {
    let mut obj_map = Vec::with_capacity(dom.object_count());
    for o in dom.objects() {
        let (i, q) = (o / plain.object_count(), o % plain.object_count());
        let alg = a.algebra(i);
        let obj = pair_ix(alg.obj, q, plain.object_count());
        let structure = pair_ix(alg.structure, plain.identity(q), plain.morphism_count());
        let image = product.algebra_ix(obj, structure).ok_or_else(|| {
            Error::internal(format!(
                "merge: pair of {} and {} is not a product algebra",
                alg.id,
                plain.object_id(q)
            ))
        })?;
        obj_map.push(image);
    }
    let mut mor_map = Vec::with_capacity(dom.morphism_count());
    for m in dom.morphisms() {
        let (m1, m2) = (m / plain.morphism_count(), m % plain.morphism_count());
        let under = pair_ix(a.underlying(m1), m2, plain.morphism_count());
        let image = product
            .mor_with_underlying(obj_map[dom.dom(m)], obj_map[dom.cod(m)], under)
            .ok_or_else(|| {
                Error::internal(format!(
                    "merge: image of {} is not a product algebra morphism",
                    dom.morphism_id(m)
                ))
            })?;
        mor_map.push(image);
    }
    let merged = FunctorMap::from_tables(
        format!("merge({}×{})", a.category().name(), plain.name()),
        dom.clone(),
        product.category().clone(),
        obj_map,
        mor_map,
    );
    let report = validate_functor(&merged);
    if !report.passed() {
        return Err(Error::internal(format!(
            "merge functor breaks {}",
            report.first_line()
        )));
    }
    Ok(merged)
}

/// The mirror merge `Q×D^B → (Q×D)^{1×B}` with identity first structure.
fn merge_right_algebras(
    dom: &Arc<FinCat>,
    plain: &Arc<FinCat>,
    b: &EmBundle,
    product: &EmBundle,
) -> Result<FunctorMap> {
    let base = b.monad().base();
    let em = b.category();
    let mut obj_map = Vec::with_capacity(dom.object_count());
    for o in dom.objects() {
        let (q, i) = (o / em.object_count(), o % em.object_count());
        let alg = b.algebra(i);
        let obj = pair_ix(q, alg.obj, base.object_count());
        let structure = pair_ix(plain.identity(q), alg.structure, base.morphism_count());
        let image = product.algebra_ix(obj, structure).ok_or_else(|| {
            Error::internal(format!(
                "merge: pair of {} and {} is not a product algebra",
                plain.object_id(q),
                alg.id
            ))
        })?;
        obj_map.push(image);
    }
    let mut mor_map = Vec::with_capacity(dom.morphism_count());
    for m in dom.morphisms() {
        let (n, m2) = (m / em.morphism_count(), m % em.morphism_count());
        let under = pair_ix(n, b.underlying(m2), base.morphism_count());
        let image = product
            .mor_with_underlying(obj_map[dom.dom(m)], obj_map[dom.cod(m)], under)
            .ok_or_else(|| {
                Error::internal(format!(
                    "merge: image of {} is not a product algebra morphism",
                    dom.morphism_id(m)
                ))
            })?;
        mor_map.push(image);
    }
    let merged = FunctorMap::from_tables(
        format!("merge({}×{})", plain.name(), em.name()),
        dom.clone(),
        product.category().clone(),
        obj_map,
        mor_map,
    );
    let report = validate_functor(&merged);
    if !report.passed() {
        return Err(Error::internal(format!(
            "merge functor breaks {}",
            report.first_line()
        )));
    }
    Ok(merged)
}

/// The two-sided merge `C^A×D^B → (C×D)^{A×B}` pairing algebras and
/// structures componentwise.
fn merge_product_algebras(
    dom: &Arc<FinCat>,
    a: &EmBundle,
    b: &EmBundle,
    product: &EmBundle,
) -> Result<FunctorMap> {
    let b_base = b.monad().base();
    let b_em = b.category();
    let mut obj_map = Vec::with_capacity(dom.object_count());
    for o in dom.objects() {
        let (i, j) = (o / b_em.object_count(), o % b_em.object_count());
        let left = a.algebra(i);
        let right = b.algebra(j);
        let obj = pair_ix(left.obj, right.obj, b_base.object_count());
        let structure = pair_ix(left.structure, right.structure, b_base.morphism_count());
        let image = product.algebra_ix(obj, structure).ok_or_else(|| {
            Error::internal(format!(
                "merge: pair of {} and {} is not a product algebra",
                left.id, right.id
            ))
        })?;
        obj_map.push(image);
    }
    let mut mor_map = Vec::with_capacity(dom.morphism_count());
    for m in dom.morphisms() {
        let (m1, m2) = (m / b_em.morphism_count(), m % b_em.morphism_count());
        let under = pair_ix(a.underlying(m1), b.underlying(m2), b_base.morphism_count());
        let image = product
            .mor_with_underlying(obj_map[dom.dom(m)], obj_map[dom.cod(m)], under)
            .ok_or_else(|| {
                Error::internal(format!(
                    "merge: image of {} is not a product algebra morphism",
                    dom.morphism_id(m)
                ))
            })?;
        mor_map.push(image);
    }
    let merged = FunctorMap::from_tables(
        format!("merge({}×{})", a.category().name(), b_em.name()),
        dom.clone(),
        product.category().clone(),
        obj_map,
        mor_map,
    );
    let report = validate_functor(&merged);
    if !report.passed() {
        return Err(Error::internal(format!(
            "merge functor breaks {}",
            report.first_line()
        )));
    }
    Ok(merged)
}

/// Lift a square over a product monad to a square over the product of
/// the factor resolutions rather than the resolution of the product.
///
/// The plain lift lands on the algebra category of the product monad;
/// precomposing its bottom with the merge functor moves it onto the
/// product of algebra categories, where free algebras agree with pairs
/// of free algebras, so the distributor components carry over verbatim.
pub fn lift_cell_along_product(
    cell: &MndOneCell,
    a: &EmBundle,
    b: &EmBundle,
    tgt: &EmBundle,
    limits: &Limits,
) -> Result<AdjOneCell> {
    let expected = product_monad(a.monad(), b.monad(), limits)?;
    if cell.source() != &expected {
        return Err(Error::precondition(format!(
            "cell {}: source is not the product of {} and {}",
            cell.name(),
            a.monad().name(),
            b.monad().name()
        )));
    }
    if cell.target() != tgt.monad() {
        return Err(Error::precondition(format!(
            "cell {}: target resolution belongs to a different monad",
            cell.name()
        )));
    }
    let src = em_category(cell.source(), limits)?;
    let inner = psi_one_cell(cell, &src, tgt)?;
    let dom = Arc::new(product_category(a.category(), b.category(), limits)?);
    let merge = merge_product_algebras(&dom, a, b, &src)?;
    let bottom = compose_functors(inner.bottom(), &merge)?
        .rename(format!("lift({})", cell.carrier().name()));
    let source = product_adjunction(a.adjunction(), b.adjunction(), limits)?;
    let lambda = NatTransMap::from_components(
        format!("lift({})", cell.psi().name()),
        compose_functors(tgt.adjunction().left(), cell.carrier())?,
        compose_functors(&bottom, source.left())?,
        inner.lambda().components().to_vec(),
    )
    .map_err(|e| engine_bug("moving the lifted distributor onto the product resolution", e))?;
    AdjOneCell::new(
        format!("split({})", inner.name()),
        source,
        tgt.adjunction().clone(),
        cell.carrier().clone(),
        bottom,
        lambda,
    )
    .map_err(|e| engine_bug("lift of a valid square onto the product resolution", e))
}

/// The square carried by a lifting: top the classical forward leg, bottom
/// the lifted one, between the product of the argument and parameter
/// resolutions and the target resolution.  Its structure transformation
/// is the transpose of the forgetful identity: whisker the classical leg
/// with the units, then push down with the target counit.
fn structure_cell_of_lifting(
    jk: &ParametricAdjunction,
    forward: &FunctorMap,
    s: &EmBundle,
    t: &EmBundle,
    e: &EmBundle,
    limits: &Limits,
) -> Result<AdjOneCell> {
    let source = product_adjunction(s.adjunction(), e.adjunction(), limits)?;
    let p_cat = e.monad().base();
    let free_pairs = e.category().object_count();
    let base = source.base().clone();
    let mut components = Vec::with_capacity(base.object_count());
    for o in base.objects() {
        let (c, p) = (o / p_cat.object_count(), o % p_cat.object_count());
        let eta = pair_ix(
            s.adjunction().unit().component(c),
            e.adjunction().unit().component(p),
            p_cat.morphism_count(),
        );
        let free_leg = t.free().mor(jk.forward().mor(eta));
        let apex_obj = forward.obj(pair_ix(
            s.free().obj(c),
            e.free().obj(p),
            free_pairs,
        ));
        let counit = t.adjunction().counit().component(apex_obj);
        let comp = t.category().compose(counit, free_leg).ok_or_else(|| {
            Error::internal(format!(
                "structure square of {}: transpose leg at {} does not compose",
                forward.name(),
                base.object_id(o)
            ))
        })?;
        components.push(comp);
    }
    let lambda = NatTransMap::from_components(
        format!("str({})", forward.name()),
        compose_functors(t.free(), jk.forward())?,
        compose_functors(forward, source.left())?,
        components,
    )
    .map_err(|e| engine_bug("assembling the structure square of a lifting", e))?;
    AdjOneCell::new(
        format!("str({})", forward.name()),
        source,
        t.adjunction().clone(),
        jk.forward().clone(),
        forward.clone(),
        lambda,
    )
}

/// Read the distributor square back off a lifting.
///
/// The lifting only enters through its forward leg and the requirement
/// that both its legs sit over the classical ones; the result is the
/// induced-monad image of the structure square, a cell from the product
/// of the argument and parameter monads to the target monad.
pub fn hopf_data_from_lifting(
    jk: &ParametricAdjunction,
    lifted: &ParametricAdjunction,
    s: &EmBundle,
    t: &EmBundle,
    e: &EmBundle,
    limits: &Limits,
) -> Result<MndOneCell> {
    if jk.base() != s.monad().base()
        || jk.param() != e.monad().base()
        || jk.codomain() != t.monad().base()
    {
        return Err(Error::precondition(format!(
            "parametric adjunction {} does not run over the bases of the supplied monads",
            jk.name()
        )));
    }
    if lifted.base() != s.category()
        || lifted.param() != e.category()
        || lifted.codomain() != t.category()
    {
        return Err(Error::precondition(format!(
            "parametric adjunction {} does not run over the supplied algebra categories",
            lifted.name()
        )));
    }
    let under_fwd = compose_functors(t.forget(), lifted.forward())?;
    let over_fwd = compose_functors(
        jk.forward(),
        &product_functor(s.forget(), e.forget(), lifted.forward().dom(), jk.forward().dom())?,
    )?;
    if let Some(gap) = functor_mismatch(&under_fwd, &over_fwd) {
        return Err(Error::precondition(format!(
            "{} does not lift {}: {}",
            lifted.forward().name(),
            jk.forward().name(),
            gap
        )));
    }
    let op_p = Arc::new(op_category(jk.param()));
    let op_pe = Arc::new(op_category(e.category()));
    let under_bwd = compose_functors(s.forget(), lifted.backward())?;
    let over_bwd = compose_functors(
        jk.backward(),
        &product_functor(
            &op_functor(e.forget(), &op_pe, &op_p)?,
            t.forget(),
            lifted.backward().dom(),
            jk.backward().dom(),
        )?,
    )?;
    if let Some(gap) = functor_mismatch(&under_bwd, &over_bwd) {
        return Err(Error::precondition(format!(
            "{} does not lift {}: {}",
            lifted.backward().name(),
            jk.backward().name(),
            gap
        )));
    }
    let cell = structure_cell_of_lifting(jk, lifted.forward(), s, t, e, limits)?;
    phi_one_cell(&cell)
}

/// Lift a classical parametric adjunction along a distributor square
/// whose operator inverts.
///
/// The full pipeline runs first: operator, per-parameter companions,
/// glued family.  The forward leg is the plain lift of the operator
/// square moved through the merge functor, the backward leg the same
/// for the glued companion square, and each slice inherits its unit and
/// counit from the classical slice at the underlying parameter.  The
/// result is validated as a parametric adjunction, both legs are
/// checked to sit over the classical ones, the lifted legs are related
/// to the plain lifts through the canonical isomorphisms, and the
/// distributor read back off the lifting must be the input.
pub fn lift_parametric_adjunction(
    jk: &ParametricAdjunction,
    cell: &MndOneCell,
    s: &EmBundle,
    t: &EmBundle,
    e: &EmBundle,
    limits: &Limits,
) -> Result<LiftedParametric> {
    let expected = product_monad(s.monad(), e.monad(), limits)?;
    if cell.source() != &expected {
        return Err(Error::precondition(format!(
            "cell {}: source is not the product of {} and {}",
            cell.name(),
            s.monad().name(),
            e.monad().name()
        )));
    }
    if cell.target() != t.monad() {
        return Err(Error::precondition(format!(
            "cell {}: target is not {}",
            cell.name(),
            t.monad().name()
        )));
    }
    let extension = hopf_parametric_adjoint_object_mnd(cell, s.monad(), jk, e, limits)?;

    let cs = s.category();
    let pe = e.category();
    let dt = t.category();
    let op_pe = Arc::new(op_category(pe));

    let hopf_src = em_category(extension.hopf().source(), limits)?;
    let forward_lift = psi_one_cell(extension.hopf(), &hopf_src, t)?;
    let cs_x_pe = Arc::new(product_category(cs, pe, limits)?);
    let merge_fwd = merge_left_algebras(&cs_x_pe, s, pe, &hopf_src)?;
    let j_hat = compose_functors(forward_lift.bottom(), &merge_fwd)?
        .rename(format!("hat({})", jk.forward().name()));

    let ext_src = em_category(extension.extended().source(), limits)?;
    let backward_lift = psi_one_cell(extension.extended(), &ext_src, s)?;
    let oppe_x_dt = Arc::new(product_category(&op_pe, dt, limits)?);
    let merge_bwd = merge_right_algebras(&oppe_x_dt, &op_pe, t, &ext_src)?;
    let k_hat = compose_functors(backward_lift.bottom(), &merge_bwd)?
        .rename(format!("hat({})", jk.backward().name()));

    let mut report = CheckReport::new(format!("lifting of {}", jk.name()));

    let under_fwd = compose_functors(t.forget(), &j_hat)?;
    let over_fwd = compose_functors(
        jk.forward(),
        &product_functor(s.forget(), e.forget(), &cs_x_pe, jk.forward().dom())?,
    )?;
    if let Some(gap) = functor_mismatch(&under_fwd, &over_fwd) {
        report.push(Violation::new(
            "forgetful-square",
            vec![j_hat.name().to_string(), gap],
            "the lifted forward leg does not sit over the classical one",
        ));
    }
    let op_p = Arc::new(op_category(jk.param()));
    let under_bwd = compose_functors(s.forget(), &k_hat)?;
    let over_bwd = compose_functors(
        jk.backward(),
        &product_functor(
            &op_functor(e.forget(), &op_pe, &op_p)?,
            t.forget(),
            &oppe_x_dt,
            jk.backward().dom(),
        )?,
    )?;
    if let Some(gap) = functor_mismatch(&under_bwd, &over_bwd) {
        report.push(Violation::new(
            "forgetful-square",
            vec![k_hat.name().to_string(), gap],
            "the lifted backward leg does not sit over the classical one",
        ));
    }
    if !report.passed() {
        return Err(Error::Law(Box::new(report.finish())));
    }

    let mut slices = Vec::with_capacity(pe.object_count());
    for q in pe.objects() {
        let classical = extension.reindexed().adjunction_at(q);
        let include = pairing(&identity_functor(cs), &constant_functor(cs, pe, q), &cs_x_pe)?;
        let left = compose_functors(&j_hat, &include)?
            .rename(format!("{}(-,{})", j_hat.name(), pe.object_id(q)));
        let co_include = pairing(&constant_functor(dt, &op_pe, q), &identity_functor(dt), &oppe_x_dt)?;
        let right = compose_functors(&k_hat, &co_include)?
            .rename(format!("{}({},-)", k_hat.name(), pe.object_id(q)));

        let mut unit_comps = Vec::with_capacity(cs.object_count());
        for a in cs.objects() {
            let under = classical.unit().component(s.algebra(a).obj);
            match s.mor_with_underlying(a, right.obj(left.obj(a)), under) {
                Some(m) => unit_comps.push(m),
                None => {
                    report.push(Violation::new(
                        "slice-unit",
                        vec![pe.object_id(q).to_string(), cs.object_id(a).to_string()],
                        "the classical unit component is not an algebra morphism",
                    ));
                    return Err(Error::Law(Box::new(report.finish())));
                }
            }
        }
        let mut counit_comps = Vec::with_capacity(dt.object_count());
        for b in dt.objects() {
            let under = classical.counit().component(t.algebra(b).obj);
            match t.mor_with_underlying(left.obj(right.obj(b)), b, under) {
                Some(m) => counit_comps.push(m),
                None => {
                    report.push(Violation::new(
                        "slice-counit",
                        vec![pe.object_id(q).to_string(), dt.object_id(b).to_string()],
                        "the classical counit component is not an algebra morphism",
                    ));
                    return Err(Error::Law(Box::new(report.finish())));
                }
            }
        }
        let unit = NatTransMap::from_components(
            format!("unit@{}", pe.object_id(q)),
            identity_functor(cs),
            compose_functors(&right, &left)?,
            unit_comps,
        )
        .map_err(|err| engine_bug("assembling a lifted slice unit", err))?;
        let counit = NatTransMap::from_components(
            format!("counit@{}", pe.object_id(q)),
            compose_functors(&left, &right)?,
            identity_functor(dt),
            counit_comps,
        )
        .map_err(|err| engine_bug("assembling a lifted slice counit", err))?;
        let slice = Adjunction::new(
            format!("hat({})@{}", classical.name(), pe.object_id(q)),
            left,
            right,
            unit,
            counit,
        )
        .map_err(|err| engine_bug("assembling a lifted slice adjunction", err))?;
        report.merge(validate_adjunction(&slice));
        slices.push(slice);
    }

    let lifted = ParametricAdjunction::new(
        format!("hat({})", jk.name()),
        cs,
        pe,
        j_hat.clone(),
        k_hat.clone(),
        slices,
        limits,
    )
    .map_err(|err| engine_bug("assembling the lifted parametric adjunction", err))?;
    report.merge(validate_parametric_adjunction(&lifted));

    let id_pe = em_category(&identity_monad(pe), limits)?;
    let id_oppe = em_category(&identity_monad(&op_pe), limits)?;
    for (bundle, over) in [(&id_pe, pe), (&id_oppe, &op_pe)] {
        let down = compose_functors(bundle.forget(), bundle.free())?;
        let up = compose_functors(bundle.free(), bundle.forget())?;
        if let Some(gap) = functor_mismatch(&down, &identity_functor(over)) {
            report.push(Violation::new(
                "canonical-iso",
                vec![bundle.category().name().to_string(), gap],
                "free after forget is not the identity on the base",
            ));
        }
        if let Some(gap) = functor_mismatch(&up, &identity_functor(bundle.category())) {
            report.push(Violation::new(
                "canonical-iso",
                vec![bundle.category().name().to_string(), gap],
                "forget after free is not the identity on the algebras",
            ));
        }
    }
    let cs_x_idpe = Arc::new(product_category(cs, id_pe.category(), limits)?);
    let chi_fwd = merge_product_algebras(&cs_x_idpe, s, &id_pe, &hopf_src)?;
    let one_x_free = product_functor(
        &identity_functor(cs),
        id_pe.free(),
        &cs_x_pe,
        &cs_x_idpe,
    )?;
    let aux_fwd = compose_functors(&compose_functors(forward_lift.bottom(), &chi_fwd)?, &one_x_free)?;
    if let Some(gap) = functor_mismatch(&aux_fwd, &j_hat) {
        report.push(Violation::new(
            "auxiliary-square",
            vec![j_hat.name().to_string(), gap],
            "the plain lift through the canonical isomorphisms is not the lifted forward leg",
        ));
    }
    let idoppe_x_dt = Arc::new(product_category(id_oppe.category(), dt, limits)?);
    let chi_bwd = merge_product_algebras(&idoppe_x_dt, &id_oppe, t, &ext_src)?;
    let free_x_one = product_functor(
        id_oppe.free(),
        &identity_functor(dt),
        &oppe_x_dt,
        &idoppe_x_dt,
    )?;
    let aux_bwd = compose_functors(&compose_functors(backward_lift.bottom(), &chi_bwd)?, &free_x_one)?;
    if let Some(gap) = functor_mismatch(&aux_bwd, &k_hat) {
        report.push(Violation::new(
            "auxiliary-square",
            vec![k_hat.name().to_string(), gap],
            "the plain lift through the canonical isomorphisms is not the lifted backward leg",
        ));
    }
    if !report.passed() {
        return Err(Error::Law(Box::new(report.finish())));
    }

    let structure_cell = structure_cell_of_lifting(jk, &j_hat, s, t, e, limits)?;
    let (_, analysis) = hopf_operator_adj(&structure_cell, s.adjunction(), e.adjunction(), limits)?;
    if !analysis.is_invertible() {
        let (object, component) = analysis.witness().cloned().unwrap_or_default();
        report.push(Violation::new(
            "lifted-square-hopf",
            vec![object, component],
            "the operator of the structure square does not invert",
        ));
    }
    let recovered = phi_one_cell(&structure_cell)?;
    if &recovered != cell {
        let gap = functor_mismatch(recovered.carrier(), cell.carrier())
            .or_else(|| nat_mismatch(recovered.psi(), cell.psi()))
            .unwrap_or_else(|| "cells differ outside their tables".to_string());
        report.push(Violation::new(
            "bijection-roundtrip",
            vec![cell.name().to_string(), gap],
            "the distributor read back off the lifting differs from the input",
        ));
    }
    let report = report.finish();
    if !report.passed() {
        return Err(Error::Law(Box::new(report)));
    }
    Ok(LiftedParametric {
        extension,
        lifted,
        structure_cell,
        recovered,
        report,
    })
}
