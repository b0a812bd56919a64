//! Assembling per-parameter adjoint objects into parameter-indexed
//! transformations.
//!
//! After the Hopf operator has been cut down at each parameter and every
//! restriction has produced an adjoint object, the companion structure
//! maps form a family indexed by a parameter and an argument object.
//! This module glues those families into transformations on the product
//! of the opposite parameter category with the argument category, checks
//! the gluing is natural there (which is exactly dinaturality of the
//! family), and packages the result as a single square out of the
//! product with the identity structure on the opposite parameter
//! category.

use crate::error::{Error, Limits, Result};
use crate::fincat::{
    compose_functors, identity_functor, pair_ix, product_functor, validate_nat_trans, NatTransMap,
    ParamTrans,
};
use crate::structure::{
    identity_adjunction, identity_monad, product_adjunction, product_monad, Adjunction, EmBundle,
    Monad,
};
use crate::twocat::{AdjOneCell, MndOneCell};

use super::adjoint_object::{
    adjoint_object_adj, adjoint_object_mnd, restrict_at_parameter_adj, restrict_at_parameter_mnd,
    AdjointObjectAdj, AdjointObjectMnd,
};
use super::engine_bug;
use super::operator::{hopf_operator_adj, hopf_operator_mnd, HopfAnalysis};
use super::parametric::{reindex_parametric_adjunction, ParametricAdjunction};
use super::validate_parametric_adjunction;

/// Everything produced by running the full adjoint-object pipeline over
/// a Hopf square between adjunctions: the operator square, its
/// invertibility analysis, the adjoint object at every parameter, the
/// two glued families, and the single square they assemble into.
#[derive(Debug, Clone)]
pub struct HopfParametricAdjointObjectAdj {
    hopf: AdjOneCell,
    analysis: HopfAnalysis,
    per_param: Vec<AdjointObjectAdj>,
    lambda_family: ParamTrans,
    rho_family: ParamTrans,
    extended: AdjOneCell,
    reindexed: ParametricAdjunction,
    arg: Adjunction,
    par: Adjunction,
}

impl HopfParametricAdjointObjectAdj {
    /// The operator square out of the product with the identity
    /// adjunction on the parameter apex.
    pub fn hopf(&self) -> &AdjOneCell {
        &self.hopf
    }

    pub fn analysis(&self) -> &HopfAnalysis {
        &self.analysis
    }

    pub fn per_param(&self) -> &[AdjointObjectAdj] {
        &self.per_param
    }

    /// Companion structure maps glued over all parameters, indexed by a
    /// parameter and an object of the codomain.
    pub fn lambda_family(&self) -> &ParamTrans {
        &self.lambda_family
    }

    /// Inverse mates glued over all parameters, indexed by a parameter
    /// and an object of the apex.
    pub fn rho_family(&self) -> &ParamTrans {
        &self.rho_family
    }

    /// The glued companion square, from the product of the identity
    /// adjunction on the opposite parameter category with the original
    /// target, back to the original argument adjunction.
    pub fn extended(&self) -> &AdjOneCell {
        &self.extended
    }

    /// The parametric adjunction between the operator's top functor and
    /// the glued companion functor.
    pub fn reindexed(&self) -> &ParametricAdjunction {
        &self.reindexed
    }

    pub fn arg(&self) -> &Adjunction {
        &self.arg
    }

    pub fn par(&self) -> &Adjunction {
        &self.par
    }
}

/// The monad-side counterpart of [`HopfParametricAdjointObjectAdj`],
/// with a single glued family.
#[derive(Debug, Clone)]
pub struct HopfParametricAdjointObjectMnd {
    hopf: MndOneCell,
    analysis: HopfAnalysis,
    per_param: Vec<AdjointObjectMnd>,
    psi_family: ParamTrans,
    extended: MndOneCell,
    reindexed: ParametricAdjunction,
    arg: Monad,
}

impl HopfParametricAdjointObjectMnd {
    pub fn hopf(&self) -> &MndOneCell {
        &self.hopf
    }

    pub fn analysis(&self) -> &HopfAnalysis {
        &self.analysis
    }

    pub fn per_param(&self) -> &[AdjointObjectMnd] {
        &self.per_param
    }

    /// Companion distributors glued over all algebras.
    pub fn psi_family(&self) -> &ParamTrans {
        &self.psi_family
    }

    pub fn extended(&self) -> &MndOneCell {
        &self.extended
    }

    pub fn reindexed(&self) -> &ParametricAdjunction {
        &self.reindexed
    }

    pub fn arg(&self) -> &Monad {
        &self.arg
    }
}

/// Glues per-parameter companion squares between adjunctions into two
/// parameter-indexed transformations: the companion structure maps and
/// the inverse mates.
///
/// `reindexed` is the parametric adjunction between the operator's top
/// functor and the glued companion functor, `vw` the one for the bottom
/// leg, and `cells` holds one companion square per parameter, running
/// from `target` to `arg`.  Component endpoints are enforced when the
/// glued transformations are assembled, and their naturality on the
/// product (the dinaturality of the family) is checked exhaustively;
/// a failing square is reported with the offending product morphism as
/// witness.
pub fn dinatural_extension_adj(
    arg: &Adjunction,
    target: &Adjunction,
    reindexed: &ParametricAdjunction,
    vw: &ParametricAdjunction,
    cells: &[AdjOneCell],
    limits: &Limits,
) -> Result<(ParamTrans, ParamTrans)> {
    let q_cat = reindexed.param();
    if cells.len() != q_cat.object_count() {
        return Err(Error::precondition(format!(
            "{} companion squares for {} parameters",
            cells.len(),
            q_cat.object_count()
        )));
    }
    let op_q = reindexed.op_param();
    let k_glob = reindexed.backward();
    let w_glob = vw.backward();
    let d_cat = reindexed.codomain();
    let y_cat = vw.codomain();

    let lambda_source = compose_functors(arg.left(), k_glob)?;
    let one_lbar = product_functor(
        &identity_functor(op_q),
        target.left(),
        k_glob.dom(),
        w_glob.dom(),
    )?;
    let lambda_target = compose_functors(w_glob, &one_lbar)?;
    let lambda_components = k_glob
        .dom()
        .objects()
        .map(|o| {
            let q = o / d_cat.object_count();
            let d = o % d_cat.object_count();
            cells[q].lambda().component(d)
        })
        .collect();
    let lambda_inner = NatTransMap::from_components(
        format!("fam(ad({}))", reindexed.name()),
        lambda_source,
        lambda_target,
        lambda_components,
    )?;
    validate_nat_trans(&lambda_inner).into_result()?;
    let lambda_family = ParamTrans::new(
        lambda_inner.name().to_string(),
        q_cat.clone(),
        d_cat.clone(),
        lambda_inner,
        limits,
    )?;

    let rho_source = compose_functors(arg.right(), w_glob)?;
    let one_rbar = product_functor(
        &identity_functor(op_q),
        target.right(),
        w_glob.dom(),
        k_glob.dom(),
    )?;
    let rho_target = compose_functors(k_glob, &one_rbar)?;
    let rho_components = w_glob
        .dom()
        .objects()
        .map(|o| {
            let q = o / y_cat.object_count();
            let y = o % y_cat.object_count();
            cells[q].rho_inv().component(y)
        })
        .collect();
    let rho_inner = NatTransMap::from_components(
        format!("fam(mate⁻¹({}))", reindexed.name()),
        rho_source,
        rho_target,
        rho_components,
    )?;
    validate_nat_trans(&rho_inner).into_result()?;
    let rho_family = ParamTrans::new(
        rho_inner.name().to_string(),
        q_cat.clone(),
        y_cat.clone(),
        rho_inner,
        limits,
    )?;

    Ok((lambda_family, rho_family))
}

/// Glues per-parameter companion squares between monads into one
/// parameter-indexed family of distributors.  The monad-side counterpart
/// of [`dinatural_extension_adj`].
pub fn dinatural_extension_mnd(
    arg: &Monad,
    target: &Monad,
    reindexed: &ParametricAdjunction,
    cells: &[MndOneCell],
    limits: &Limits,
) -> Result<ParamTrans> {
    let q_cat = reindexed.param();
    if cells.len() != q_cat.object_count() {
        return Err(Error::precondition(format!(
            "{} companion squares for {} parameters",
            cells.len(),
            q_cat.object_count()
        )));
    }
    let op_q = reindexed.op_param();
    let k_glob = reindexed.backward();
    let d_cat = reindexed.codomain();

    let psi_source = compose_functors(arg.endo(), k_glob)?;
    let one_t = product_functor(
        &identity_functor(op_q),
        target.endo(),
        k_glob.dom(),
        k_glob.dom(),
    )?;
    let psi_target = compose_functors(k_glob, &one_t)?;
    let psi_components = k_glob
        .dom()
        .objects()
        .map(|o| {
            let q = o / d_cat.object_count();
            let d = o % d_cat.object_count();
            cells[q].psi().component(d)
        })
        .collect();
    let psi_inner = NatTransMap::from_components(
        format!("fam(ad({}))", reindexed.name()),
        psi_source,
        psi_target,
        psi_components,
    )?;
    validate_nat_trans(&psi_inner).into_result()?;
    ParamTrans::new(
        psi_inner.name().to_string(),
        q_cat.clone(),
        d_cat.clone(),
        psi_inner,
        limits,
    )
}

/// Runs the whole adjoint-object pipeline over a square between
/// adjunctions with a product source.
///
/// `cell` runs from the product of `arg` and `par` to some target
/// adjunction, `jk` is a classical parametric adjunction for its top
/// functor over the base of `par`, and `vw` one for its bottom functor
/// over the apex of `par`.  The pipeline
///
/// 1. validates both parametric adjunctions and forms the Hopf
///    operator, refusing with the failing component when the operator
///    is not invertible;
/// 2. reindexes `jk` along the right adjoint of `par`;
/// 3. restricts the operator square at every parameter and builds the
///    adjoint object there, taking the leg adjunctions from the two
///    supplied families rather than searching for adjoints;
/// 4. glues the companions into the two parameter-indexed families and
///    into a single square out of the product with the identity
///    adjunction on the opposite parameter category, checking that the
///    glued square's inverse mate is exactly the glued family of
///    pointwise inverse mates.
pub fn hopf_parametric_adjoint_object_adj(
    cell: &AdjOneCell,
    arg: &Adjunction,
    par: &Adjunction,
    jk: &ParametricAdjunction,
    vw: &ParametricAdjunction,
    limits: &Limits,
) -> Result<HopfParametricAdjointObjectAdj> {
    validate_parametric_adjunction(jk).into_result()?;
    validate_parametric_adjunction(vw).into_result()?;
    if jk.forward() != cell.top() {
        return Err(Error::precondition(format!(
            "parametric adjunction {} is not over the top functor {}",
            jk.name(),
            cell.top().name()
        )));
    }
    if vw.forward() != cell.bottom() {
        return Err(Error::precondition(format!(
            "parametric adjunction {} is not over the bottom functor {}",
            vw.name(),
            cell.bottom().name()
        )));
    }
    let (hopf, analysis) = hopf_operator_adj(cell, arg, par, limits)?;
    if !analysis.is_invertible() {
        let (object, component) = analysis.witness().cloned().unwrap_or_default();
        return Err(Error::precondition(format!(
            "operator {} is not invertible: component {} at {} has no inverse",
            hopf.lambda().name(),
            component,
            object
        )));
    }
    let reindexed = reindex_parametric_adjunction(jk, par.right(), limits)?;
    let q_cat = par.apex();
    let mut per_param = Vec::with_capacity(q_cat.object_count());
    for q in q_cat.objects() {
        let restricted = restrict_at_parameter_adj(&hopf, arg, q_cat, q, limits)?;
        per_param.push(adjoint_object_adj(
            &restricted,
            reindexed.adjunction_at(q),
            vw.adjunction_at(q),
        )?);
    }
    let companions: Vec<AdjOneCell> = per_param.iter().map(|o| o.cell().clone()).collect();
    let (lambda_family, rho_family) = dinatural_extension_adj(
        arg,
        cell.target(),
        &reindexed,
        vw,
        &companions,
        limits,
    )?;
    let source = product_adjunction(
        &identity_adjunction(reindexed.op_param()),
        cell.target(),
        limits,
    )?;
    let extended = AdjOneCell::new(
        format!("ext(ad({}))", hopf.name()),
        source,
        arg.clone(),
        reindexed.backward().clone(),
        vw.backward().clone(),
        lambda_family.inner().clone(),
    )
    .map_err(|e| engine_bug("assembling the glued companion square", e))?;
    if extended.rho_inv() != rho_family.inner() {
        return Err(Error::internal(format!(
            "inverse mate of {} disagrees with the glued pointwise inverse mates",
            extended.name()
        )));
    }
    Ok(HopfParametricAdjointObjectAdj {
        hopf,
        analysis,
        per_param,
        lambda_family,
        rho_family,
        extended,
        reindexed,
        arg: arg.clone(),
        par: par.clone(),
    })
}

/// The monad-side pipeline: the same steps as
/// [`hopf_parametric_adjoint_object_adj`] with the parameter monad
/// resolved through its category of algebras.
///
/// `cell` runs from the product of `arg` with the monad of `bundle`,
/// and `jk` is a classical parametric adjunction for its carrier.  The
/// operator is taken relative to the algebra adjunction of `bundle`,
/// and before anything else its components are checked against the
/// closed form at an algebra: structure map after distributor.  The
/// per-parameter steps then run over the algebra category, with the leg
/// adjunctions coming from `jk` reindexed along the forgetful functor.
pub fn hopf_parametric_adjoint_object_mnd(
    cell: &MndOneCell,
    arg: &Monad,
    jk: &ParametricAdjunction,
    bundle: &EmBundle,
    limits: &Limits,
) -> Result<HopfParametricAdjointObjectMnd> {
    validate_parametric_adjunction(jk).into_result()?;
    if jk.forward() != cell.carrier() {
        return Err(Error::precondition(format!(
            "parametric adjunction {} is not over the carrier {}",
            jk.name(),
            cell.carrier().name()
        )));
    }
    if jk.param() != bundle.monad().base() {
        return Err(Error::precondition(format!(
            "parametric adjunction {} is not indexed by the base of {}",
            jk.name(),
            bundle.monad().name()
        )));
    }
    let (hopf, analysis) = hopf_operator_mnd(cell, arg, bundle.adjunction(), limits)?;

    // At an algebra the operator's component must be the structure map
    // applied under the carrier, after the original distributor at the
    // underlying object.
    let em_cat = bundle.category();
    let c_cat = arg.base();
    let p_cat = bundle.monad().base();
    let d_cat = cell.carrier().cod();
    for (a_ix, algebra) in bundle.algebras().iter().enumerate() {
        for c in c_cat.objects() {
            let got = hopf
                .psi()
                .component(pair_ix(c, a_ix, em_cat.object_count()));
            let under = cell
                .psi()
                .component(pair_ix(c, algebra.obj, p_cat.object_count()));
            let structure_leg = cell.carrier().mor(pair_ix(
                c_cat.identity(arg.endo().obj(c)),
                algebra.structure,
                p_cat.morphism_count(),
            ));
            if d_cat.compose(structure_leg, under) != Some(got) {
                return Err(Error::internal(format!(
                    "operator component at ({}, {}) is not structure-after-distributor",
                    c_cat.object_id(c),
                    em_cat.object_id(a_ix)
                )));
            }
        }
    }

    if !analysis.is_invertible() {
        let (object, component) = analysis.witness().cloned().unwrap_or_default();
        return Err(Error::precondition(format!(
            "operator {} is not invertible: component {} at {} has no inverse",
            hopf.psi().name(),
            component,
            object
        )));
    }
    let reindexed = reindex_parametric_adjunction(jk, bundle.forget(), limits)?;
    let mut per_param = Vec::with_capacity(em_cat.object_count());
    for q in em_cat.objects() {
        let restricted = restrict_at_parameter_mnd(&hopf, arg, em_cat, q, limits)?;
        per_param.push(adjoint_object_mnd(&restricted, reindexed.adjunction_at(q))?);
    }
    let companions: Vec<MndOneCell> = per_param.iter().map(|o| o.cell().clone()).collect();
    let psi_family =
        dinatural_extension_mnd(arg, cell.target(), &reindexed, &companions, limits)?;
    let source = product_monad(
        &identity_monad(reindexed.op_param()),
        cell.target(),
        limits,
    )?;
    let extended = MndOneCell::new(
        format!("ext(ad({}))", hopf.name()),
        source,
        arg.clone(),
        reindexed.backward().clone(),
        psi_family.inner().clone(),
    )
    .map_err(|e| engine_bug("assembling the glued companion square", e))?;
    Ok(HopfParametricAdjointObjectMnd {
        hopf,
        analysis,
        per_param,
        psi_family,
        extended,
        reindexed,
        arg: arg.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{product_category, FinCat, FunctorMap};
    use crate::structure::em_category;
    use crate::twocat::{identity_adj_one_cell, identity_mnd_one_cell};
    use std::sync::Arc;

    fn chain2() -> Arc<FinCat> {
        FinCat::builder("Two")
            .object("0")
            .object("1")
            .morphism("id0", "0", "0")
            .morphism("id1", "1", "1")
            .morphism("0<=1", "0", "1")
            .identity("0", "id0")
            .identity("1", "id1")
            .composite("id0", "id0", "id0")
            .composite("id1", "id1", "id1")
            .composite("0<=1", "id0", "0<=1")
            .composite("id1", "0<=1", "0<=1")
            .build()
            .map(Arc::new)
            .unwrap()
    }

    fn one() -> Arc<FinCat> {
        FinCat::builder("One")
            .object("*")
            .morphism("id*", "*", "*")
            .identity("*", "id*")
            .composite("id*", "id*", "id*")
            .build()
            .map(Arc::new)
            .unwrap()
    }

    /// The trivial parametric adjunction over a one-object parameter:
    /// forward is the identity on `C×One`, backward projects away both
    /// unit factors, and the single slice is inclusion ⊣ projection.
    fn trivial_family(c: &Arc<FinCat>, p: &Arc<FinCat>, limits: &Limits) -> ParametricAdjunction {
        let prod = Arc::new(product_category(c, p, limits).unwrap());
        let ident = |n: usize| (0..n).collect::<Vec<_>>();
        let forward = FunctorMap::from_tables(
            "incl-family".into(),
            prod.clone(),
            prod.clone(),
            ident(prod.object_count()),
            ident(prod.morphism_count()),
        );
        let op_p = Arc::new(crate::fincat::op_category(p));
        let bwd_dom = Arc::new(product_category(&op_p, &prod, limits).unwrap());
        let backward = FunctorMap::from_tables(
            "proj-family".into(),
            bwd_dom,
            c.clone(),
            ident(prod.object_count()),
            ident(prod.morphism_count()),
        );
        let incl = FunctorMap::from_tables(
            "incl".into(),
            c.clone(),
            prod.clone(),
            ident(c.object_count()),
            ident(c.morphism_count()),
        );
        let proj = FunctorMap::from_tables(
            "proj".into(),
            prod.clone(),
            c.clone(),
            ident(prod.object_count()),
            ident(prod.morphism_count()),
        );
        let unit = NatTransMap::from_components(
            "unit",
            identity_functor(c),
            compose_functors(&proj, &incl).unwrap(),
            (0..c.object_count()).map(|o| c.identity(o)).collect(),
        )
        .unwrap();
        let counit = NatTransMap::from_components(
            "counit",
            compose_functors(&incl, &proj).unwrap(),
            identity_functor(&prod),
            (0..prod.object_count()).map(|o| prod.identity(o)).collect(),
        )
        .unwrap();
        let slice = Adjunction::new("incl⊣proj", incl, proj, unit, counit).unwrap();
        ParametricAdjunction::new("trivial", c, p, forward, backward, vec![slice], limits).unwrap()
    }

    /// With a one-object parameter and the identity square on the
    /// product adjunction, the whole pipeline degenerates: the operator
    /// is the identity, each companion structure map is an identity
    /// family, and the glued square's transformation is too.
    #[test]
    fn one_parameter_identity_pipeline() {
        let limits = Limits::default();
        let c = chain2();
        let p = one();
        let arg = identity_adjunction(&c);
        let par = identity_adjunction(&p);
        let both = product_adjunction(&arg, &par, &limits).unwrap();
        let cell = identity_adj_one_cell(&both).unwrap();
        let jk = trivial_family(&c, &p, &limits);
        let vw = trivial_family(&c, &p, &limits);
        let out = hopf_parametric_adjoint_object_adj(&cell, &arg, &par, &jk, &vw, &limits).unwrap();
        assert!(out.analysis().is_invertible());
        assert!(out.hopf().lambda().is_identity_family());
        assert_eq!(out.per_param().len(), 1);
        assert!(out.lambda_family().inner().is_identity_family());
        assert!(out.rho_family().inner().is_identity_family());
        assert!(out.extended().lambda().is_identity_family());
    }

    /// The same degeneracy on the monad side, resolved through the
    /// algebra category of the identity monad (a single free algebra).
    #[test]
    fn one_parameter_identity_pipeline_mnd() {
        let limits = Limits::default();
        let c = chain2();
        let p = one();
        let arg = identity_monad(&c);
        let par = identity_monad(&p);
        let both = product_monad(&arg, &par, &limits).unwrap();
        let cell = identity_mnd_one_cell(&both).unwrap();
        let jk = trivial_family(&c, &p, &limits);
        let bundle = em_category(&par, &limits).unwrap();
        assert_eq!(bundle.algebras().len(), 1);
        let out = hopf_parametric_adjoint_object_mnd(&cell, &arg, &jk, &bundle, &limits).unwrap();
        assert!(out.analysis().is_invertible());
        assert!(out.psi_family().inner().is_identity_family());
        assert!(out.extended().psi().is_identity_family());
    }
}
