use std::sync::Arc;

use crate::check::{CheckReport, Violation};
use crate::error::{Error, Limits, Result};
use crate::fincat::{
    compose_functors, constant_functor, identity_functor, op_category, op_functor, pair_ix,
    pairing, product_category, product_functor, FinCat, FunctorMap, ObjIx,
};
use crate::structure::{validate_adjunction, Adjunction};

/// A parameter-indexed family of adjunctions `F(−,P) ⊣ G(P,−)` together
/// with the two functors the family restricts from: `F : C×P → D` covariant
/// in the parameter and `G : P^op×D → C` contravariant in it.
///
/// The slice condition (each stored adjunction runs between the actual
/// restrictions of `F` and `G`) and the conjugate action of `G` on parameter
/// morphisms are equational laws checked by
/// [`validate_parametric_adjunction`], not by construction.
#[derive(Debug, Clone)]
pub struct ParametricAdjunction {
    name: String,
    base: Arc<FinCat>,
    param: Arc<FinCat>,
    op_param: Arc<FinCat>,
    codomain: Arc<FinCat>,
    forward: FunctorMap,
    backward: FunctorMap,
    per_param: Vec<Adjunction>,
}

impl PartialEq for ParametricAdjunction {
    fn eq(&self, other: &Self) -> bool {
        self.forward == other.forward
            && self.backward == other.backward
            && self.per_param == other.per_param
    }
}

impl Eq for ParametricAdjunction {}

impl ParametricAdjunction {
    pub fn new(
        name: impl Into<String>,
        base: &Arc<FinCat>,
        param: &Arc<FinCat>,
        forward: FunctorMap,
        backward: FunctorMap,
        per_param: Vec<Adjunction>,
        limits: &Limits,
    ) -> Result<ParametricAdjunction> {
        let name = name.into();
        let fwd_dom = product_category(base, param, limits)?;
        if **forward.dom() != fwd_dom {
            return Err(Error::structural(format!(
                "parametric adjunction {}: forward functor {} is not defined on {}",
                name,
                forward.name(),
                fwd_dom.name()
            )));
        }
        let codomain = forward.cod().clone();
        let op_param = Arc::new(op_category(param));
        let bwd_dom = product_category(&op_param, &codomain, limits)?;
        if **backward.dom() != bwd_dom {
            return Err(Error::structural(format!(
                "parametric adjunction {}: backward functor {} is not defined on {}",
                name,
                backward.name(),
                bwd_dom.name()
            )));
        }
        if backward.cod() != base {
            return Err(Error::structural(format!(
                "parametric adjunction {}: backward functor does not land in {}",
                name,
                base.name()
            )));
        }
        if per_param.len() != param.object_count() {
            return Err(Error::structural(format!(
                "parametric adjunction {}: {} slice adjunctions for {} parameters",
                name,
                per_param.len(),
                param.object_count()
            )));
        }
        Ok(ParametricAdjunction {
            name,
            base: base.clone(),
            param: param.clone(),
            op_param,
            codomain,
            forward,
            backward,
            per_param,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The common domain `C` of the left adjoints.
    pub fn base(&self) -> &Arc<FinCat> {
        &self.base
    }

    pub fn param(&self) -> &Arc<FinCat> {
        &self.param
    }

    pub(crate) fn op_param(&self) -> &Arc<FinCat> {
        &self.op_param
    }

    /// The common codomain `D` of the left adjoints.
    pub fn codomain(&self) -> &Arc<FinCat> {
        &self.codomain
    }

    /// `F : C×P → D`.
    pub fn forward(&self) -> &FunctorMap {
        &self.forward
    }

    /// `G : P^op×D → C`.
    pub fn backward(&self) -> &FunctorMap {
        &self.backward
    }

    pub fn per_param(&self) -> &[Adjunction] {
        &self.per_param
    }

    pub fn adjunction_at(&self, p: ObjIx) -> &Adjunction {
        &self.per_param[p]
    }
}

/// `f(−, at) : A → cod` for a functor defined on a product `A×B`.
pub(crate) fn fix_second(
    f: &FunctorMap,
    a: &Arc<FinCat>,
    b: &Arc<FinCat>,
    at: ObjIx,
) -> Result<FunctorMap> {
    let section = pairing(&identity_functor(a), &constant_functor(a, b, at), f.dom())?;
    compose_functors(f, &section)
}

/// `f(at, −) : B → cod` for a functor defined on a product `A×B`.
pub(crate) fn fix_first(
    f: &FunctorMap,
    a: &Arc<FinCat>,
    b: &Arc<FinCat>,
    at: ObjIx,
) -> Result<FunctorMap> {
    let section = pairing(&constant_functor(b, a, at), &identity_functor(b), f.dom())?;
    compose_functors(f, &section)
}

/// The classical adjunction data at one parameter: the slices
/// `(F(−,p), G(p,−))` of the two functors.
pub fn restrict_parameter(
    par: &ParametricAdjunction,
    p: ObjIx,
) -> Result<(FunctorMap, FunctorMap)> {
    if p >= par.param.object_count() {
        return Err(Error::precondition(format!(
            "parameter index {} is not an object of {}",
            p,
            par.param.name()
        )));
    }
    let left = fix_second(&par.forward, &par.base, &par.param, p)?.rename(format!(
        "{}(−,{})",
        par.forward.name(),
        par.param.object_id(p)
    ));
    let right = fix_first(&par.backward, &par.op_param, &par.codomain, p)?.rename(format!(
        "{}({},−)",
        par.backward.name(),
        par.param.object_id(p)
    ));
    Ok((left, right))
}

/// The parameter-direction slice `F(c, −) : P → D` at a fixed argument.
pub fn restrict_argument(par: &ParametricAdjunction, c: ObjIx) -> Result<FunctorMap> {
    if c >= par.base.object_count() {
        return Err(Error::precondition(format!(
            "argument index {} is not an object of {}",
            c,
            par.base.name()
        )));
    }
    let slice = fix_first(&par.forward, &par.base, &par.param, c)?;
    Ok(slice.rename(format!(
        "{}({},−)",
        par.forward.name(),
        par.base.object_id(c)
    )))
}

/// Laws of a parametric adjunction, checked exhaustively:
///
/// * every stored slice adjunction validates and its two functors are
///   exactly the restrictions of `F` and `G` at that parameter;
/// * for every parameter morphism `p : P → P′` and every object `d`, the
///   action `G(p^op, d)` equals the conjugate composite
///   `G_P ε^{P′} ∘ G_P F(−,p) G_{P′} ∘ η^{P} G_{P′}`.
pub fn validate_parametric_adjunction(par: &ParametricAdjunction) -> CheckReport {
    let mut report = CheckReport::new(format!("parametric adjunction {}", par.name));
    for p in par.param.objects() {
        let adj = &par.per_param[p];
        report.merge(validate_adjunction(adj));
        match restrict_parameter(par, p) {
            Ok((left, right)) => {
                if adj.left() != &left {
                    report.push(Violation::new(
                        "parameter-slice",
                        vec![par.param.object_id(p).to_string(), "left".to_string()],
                        format!(
                            "left adjoint at {} differs from the restriction of {}",
                            par.param.object_id(p),
                            par.forward.name()
                        ),
                    ));
                }
                if adj.right() != &right {
                    report.push(Violation::new(
                        "parameter-slice",
                        vec![par.param.object_id(p).to_string(), "right".to_string()],
                        format!(
                            "right adjoint at {} differs from the restriction of {}",
                            par.param.object_id(p),
                            par.backward.name()
                        ),
                    ));
                }
            }
            Err(err) => report.push(Violation::new(
                "parameter-slice",
                vec![par.param.object_id(p).to_string()],
                err.to_string(),
            )),
        }
    }
    let base = &par.base;
    let param = &par.param;
    let codomain = &par.codomain;
    for m in param.morphisms() {
        let src = param.dom(m);
        let dst = param.cod(m);
        let here = &par.per_param[src];
        let there = &par.per_param[dst];
        for d in codomain.objects() {
            let far = there.right().obj(d);
            let unit_leg = here.unit().component(far);
            let forward_leg = here.right().mor(
                par.forward
                    .mor(pair_ix(base.identity(far), m, param.morphism_count())),
            );
            let counit_leg = here.right().mor(there.counit().component(d));
            let conjugate = base.compose_chain(&[unit_leg, forward_leg, counit_leg]);
            let action = par
                .backward
                .mor(pair_ix(m, codomain.identity(d), codomain.morphism_count()));
            if conjugate != Some(action) {
                report.push(Violation::new(
                    "conjugate-action",
                    vec![
                        param.morphism_id(m).to_string(),
                        codomain.object_id(d).to_string(),
                    ],
                    format!(
                        "G({}^op,{}) is not the unit/counit conjugate of the slices",
                        param.morphism_id(m),
                        codomain.object_id(d)
                    ),
                ));
            }
        }
    }
    report.finish()
}

/// Pull a parametric adjunction back along a reindexing functor `r : Q → P`:
/// the forward functor becomes `F(1×r)`, the backward one `G(r^op×1)`, and
/// the slice at `q` is the original slice at `r(q)`.  The result is
/// revalidated in full.
pub fn reindex_parametric_adjunction(
    par: &ParametricAdjunction,
    r: &FunctorMap,
    limits: &Limits,
) -> Result<ParametricAdjunction> {
    if r.cod() != par.param() {
        return Err(Error::precondition(format!(
            "reindexing functor {} does not land in {}",
            r.name(),
            par.param().name()
        )));
    }
    let fresh = r.dom();
    let fwd_dom = Arc::new(product_category(&par.base, fresh, limits)?);
    let forward = compose_functors(
        &par.forward,
        &product_functor(
            &identity_functor(&par.base),
            r,
            &fwd_dom,
            par.forward.dom(),
        )?,
    )?
    .rename(format!("{}(1×{})", par.forward.name(), r.name()));
    let op_fresh = Arc::new(op_category(fresh));
    let op_r = op_functor(r, &op_fresh, &par.op_param)?;
    let bwd_dom = Arc::new(product_category(&op_fresh, &par.codomain, limits)?);
    let backward = compose_functors(
        &par.backward,
        &product_functor(
            &op_r,
            &identity_functor(&par.codomain),
            &bwd_dom,
            par.backward.dom(),
        )?,
    )?
    .rename(format!("{}({}^op×1)", par.backward.name(), r.name()));
    let per_param = fresh
        .objects()
        .map(|q| par.per_param[r.obj(q)].clone())
        .collect();
    let out = ParametricAdjunction::new(
        format!("{}[{}]", par.name, r.name()),
        &par.base,
        fresh,
        forward,
        backward,
        per_param,
        limits,
    )?;
    validate_parametric_adjunction(&out).into_result()?;
    Ok(out)
}

/// First projection `A×B → A` of a materialized product category.
#[cfg(test)]
fn first_projection(
    prod: &Arc<FinCat>,
    a: &Arc<FinCat>,
    b: &Arc<FinCat>,
) -> FunctorMap {
    let objs = prod
        .objects()
        .map(|o| o / b.object_count())
        .collect::<Vec<_>>();
    let mors = prod
        .morphisms()
        .map(|m| m / b.morphism_count())
        .collect::<Vec<_>>();
    FunctorMap::from_tables("fst".to_string(), prod.clone(), a.clone(), objs, mors)
}

/// Second projection `A×B → B`.
#[cfg(test)]
fn second_projection(
    prod: &Arc<FinCat>,
    _a: &Arc<FinCat>,
    b: &Arc<FinCat>,
) -> FunctorMap {
    let objs = prod
        .objects()
        .map(|o| o % b.object_count())
        .collect::<Vec<_>>();
    let mors = prod
        .morphisms()
        .map(|m| m % b.morphism_count())
        .collect::<Vec<_>>();
    FunctorMap::from_tables("snd".to_string(), prod.clone(), b.clone(), objs, mors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Limits;
    use crate::fincat::FinCat;
    use crate::structure::identity_adjunction;

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

    fn degenerate(c: &Arc<FinCat>, p: &Arc<FinCat>, limits: &Limits) -> ParametricAdjunction {
        let prod = Arc::new(product_category(c, p, limits).unwrap());
        let forward = first_projection(&prod, c, p);
        let op_p = Arc::new(op_category(p));
        let bwd_dom = Arc::new(product_category(&op_p, c, limits).unwrap());
        let backward = second_projection(&bwd_dom, &op_p, c);
        ParametricAdjunction::new(
            "degenerate",
            c,
            p,
            forward,
            backward,
            vec![identity_adjunction(c)],
            limits,
        )
        .unwrap()
    }

    /// With a one-object parameter the parametric structure degenerates to a
    /// single adjunction, and the conjugate condition to the triangle laws.
    #[test]
    fn single_parameter_identity_family_validates() {
        let limits = Limits::default();
        let c = chain2();
        let p = one();
        let par = degenerate(&c, &p, &limits);
        let report = validate_parametric_adjunction(&par);
        assert!(report.passed(), "{}", report.first_line());
        let (left, right) = restrict_parameter(&par, 0).unwrap();
        assert!(left.is_identity_on(&c));
        assert!(right.is_identity_on(&c));
        assert!(restrict_argument(&par, 1).unwrap().obj(0) == 1);
    }

    /// Renaming pieces must not trip the slice comparison: equality is on
    /// tables, not display names.
    #[test]
    fn renamed_slice_still_validates() {
        let limits = Limits::default();
        let c = chain2();
        let p = one();
        let good = degenerate(&c, &p, &limits);
        let relabeled = ParametricAdjunction::new(
            "skewed",
            &c,
            &p,
            good.forward().clone(),
            good.backward().clone(),
            vec![identity_adjunction(&c).rename("relabeled")],
            &limits,
        )
        .unwrap();
        assert!(validate_parametric_adjunction(&relabeled).passed());
    }

    /// Reindexing along the identity returns the same family.
    #[test]
    fn reindex_along_identity_is_identity() {
        let limits = Limits::default();
        let c = chain2();
        let p = one();
        let par = degenerate(&c, &p, &limits);
        let again = reindex_parametric_adjunction(&par, &identity_functor(&p), &limits).unwrap();
        assert_eq!(par, again);
    }
}
