use std::sync::Arc;

use crate::error::{Error, Limits, Result};
use crate::fincat::{
    compose_functors, identity_functor, identity_nat, is_invertible, product_category,
    product_functor, product_nat, vcompose, whisker_left, whisker_right, NatTransMap,
};
use crate::structure::{
    identity_adjunction, identity_monad, monad_from_adjunction, product_adjunction, product_monad,
    Adjunction, Monad,
};
use crate::twocat::{AdjOneCell, MndOneCell};

use super::engine_bug;

/// Invertibility verdict for an operator transformation, carrying the
/// transformation itself, its two-sided inverse when one exists, and the
/// first failing component otherwise.
#[derive(Debug, Clone)]
pub struct HopfAnalysis {
    operator: NatTransMap,
    invertible: bool,
    inverse: Option<NatTransMap>,
    witness: Option<(String, String)>,
}

impl HopfAnalysis {
    fn decide(operator: NatTransMap) -> Result<HopfAnalysis> {
        let verdict = is_invertible(&operator)?;
        Ok(HopfAnalysis {
            operator,
            invertible: verdict.invertible,
            inverse: verdict.inverse,
            witness: verdict.witness,
        })
    }

    pub fn operator(&self) -> &NatTransMap {
        &self.operator
    }

    pub fn is_invertible(&self) -> bool {
        self.invertible
    }

    pub fn inverse(&self) -> Option<&NatTransMap> {
        self.inverse.as_ref()
    }

    /// Object and component ids of the first non-invertible component.
    pub fn witness(&self) -> Option<&(String, String)> {
        self.witness.as_ref()
    }
}

/// Left Hopf operator on a square over a product of adjunctions.
///
/// For a cell `(J, V, λ) : (L⊣R)×(L̃⊣R̃) → L̄⊣R̄` the operator is
/// `H(λ) = V(L×ε̃) ∘ λ(C×R̃)`, and the returned square is
/// `(J(C×R̃), V, H(λ)) : (L⊣R)×1 → L̄⊣R̄` over the identity adjunction on
/// the parameter apex.  The right mate of the new square equals the right
/// mate of the input square, which the construction verifies.
pub fn hopf_operator_adj(
    cell: &AdjOneCell,
    arg: &Adjunction,
    par: &Adjunction,
    limits: &Limits,
) -> Result<(AdjOneCell, HopfAnalysis)> {
    let product = product_adjunction(arg, par, limits)?;
    if cell.source() != &product {
        return Err(Error::precondition(format!(
            "cell {}: source is not the product of {} and {}",
            cell.name(),
            arg.name(),
            par.name()
        )));
    }
    let base = arg.base();
    let new_base = Arc::new(product_category(base, par.apex(), limits)?);
    let section = product_functor(&identity_functor(base), par.right(), &new_base, cell.top().dom())?;
    let top = compose_functors(cell.top(), &section)?
        .rename(format!("{}(1×{})", cell.top().name(), par.right().name()));
    let lambda_leg = whisker_right(cell.lambda(), &section)?;
    let counit_leg = whisker_left(
        cell.bottom(),
        &product_nat(
            &identity_nat(arg.left()),
            par.counit(),
            &new_base,
            cell.bottom().dom(),
        )?,
    )?;
    let operator = vcompose(&counit_leg, &lambda_leg)?
        .rename(format!("H({})", cell.lambda().name()));
    let source = product_adjunction(arg, &identity_adjunction(par.apex()), limits)?;
    let out = AdjOneCell::new(
        format!("H({})", cell.name()),
        source,
        cell.target().clone(),
        top,
        cell.bottom().clone(),
        operator.clone(),
    )
    .map_err(|err| engine_bug("assembling the Hopf square", err))?;
    if out.rho() != cell.rho() {
        return Err(Error::internal(format!(
            "Hopf square of {}: right mate changed under the operator",
            cell.name()
        )));
    }
    let analysis = HopfAnalysis::decide(operator)?;
    Ok((out, analysis))
}

/// Left Hopf operator on a monad square, relative to a resolution of the
/// parameter monad.
///
/// For a cell `(J, ψ) : (C×P, S×E) → (D, T)` and an adjunction
/// `L̃⊣R̃ : P → Q` inducing `E`, the operator is
/// `H(ψ) = J(S×R̃ε̃) ∘ ψ(C×R̃)`, and the returned square is
/// `(J(C×R̃), H(ψ)) : (C×Q, S×1) → (D, T)`.  Taking the free–forgetful
/// resolution over the algebra category gives the canonical form, whose
/// component at an algebra `(M, k)` is `J(id_{SC}, k) ∘ ψ(C, M)`.
pub fn hopf_operator_mnd(
    cell: &MndOneCell,
    arg: &Monad,
    resolution: &Adjunction,
    limits: &Limits,
) -> Result<(MndOneCell, HopfAnalysis)> {
    let par = monad_from_adjunction(resolution)?;
    let product = product_monad(arg, &par, limits)?;
    if cell.source() != &product {
        return Err(Error::precondition(format!(
            "cell {}: source is not {} × the monad of {}",
            cell.name(),
            arg.name(),
            resolution.name()
        )));
    }
    let base = arg.base();
    let new_base = Arc::new(product_category(base, resolution.apex(), limits)?);
    let section = product_functor(
        &identity_functor(base),
        resolution.right(),
        &new_base,
        cell.carrier().dom(),
    )?;
    let top = compose_functors(cell.carrier(), &section)?.rename(format!(
        "{}(1×{})",
        cell.carrier().name(),
        resolution.right().name()
    ));
    let psi_leg = whisker_right(cell.psi(), &section)?;
    let counit_leg = whisker_left(
        cell.carrier(),
        &product_nat(
            &identity_nat(arg.endo()),
            &whisker_left(resolution.right(), resolution.counit())?,
            &new_base,
            cell.carrier().dom(),
        )?,
    )?;
    let operator = vcompose(&counit_leg, &psi_leg)?
        .rename(format!("H({})", cell.psi().name()));
    let source = product_monad(arg, &identity_monad(resolution.apex()), limits)?;
    let out = MndOneCell::new(
        format!("H({})", cell.name()),
        source,
        cell.target().clone(),
        top,
        operator.clone(),
    )
    .map_err(|err| engine_bug("assembling the Hopf monad square", err))?;
    let analysis = HopfAnalysis::decide(operator)?;
    Ok((out, analysis))
}

/// Left fusion operator on a monad square.
///
/// For a cell `(J, ψ) : (C×P, S×E) → (D, T)` the operator is
/// `F(ψ) = J(S×μ^E) ∘ ψ(C×E)`, a square `(J(C×E), F(ψ)) : (C×P, S×1) → (D, T)`.
/// No resolution of `E` is involved; restricting the relative Hopf operator
/// along the free side of one recovers exactly this composite.
pub fn fusion_operator_mnd(
    cell: &MndOneCell,
    arg: &Monad,
    par: &Monad,
    limits: &Limits,
) -> Result<(MndOneCell, HopfAnalysis)> {
    let product = product_monad(arg, par, limits)?;
    if cell.source() != &product {
        return Err(Error::precondition(format!(
            "cell {}: source is not the product of {} and {}",
            cell.name(),
            arg.name(),
            par.name()
        )));
    }
    let dom = cell.carrier().dom();
    let section = product_functor(&identity_functor(arg.base()), par.endo(), dom, dom)?;
    let top = compose_functors(cell.carrier(), &section)?.rename(format!(
        "{}(1×{})",
        cell.carrier().name(),
        par.endo().name()
    ));
    let psi_leg = whisker_right(cell.psi(), &section)?;
    let mult_leg = whisker_left(
        cell.carrier(),
        &product_nat(&identity_nat(arg.endo()), par.mult(), dom, dom)?,
    )?;
    let operator = vcompose(&mult_leg, &psi_leg)?
        .rename(format!("F({})", cell.psi().name()));
    let source = product_monad(arg, &identity_monad(par.base()), limits)?;
    let out = MndOneCell::new(
        format!("F({})", cell.name()),
        source,
        cell.target().clone(),
        top,
        operator.clone(),
    )
    .map_err(|err| engine_bug("assembling the fusion square", err))?;
    let analysis = HopfAnalysis::decide(operator)?;
    Ok((out, analysis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{FinCat, FunctorMap};
    use crate::hopf::lift_cell_along_product;
    use crate::structure::em_category;
    use crate::twocat::{identity_adj_one_cell, identity_mnd_one_cell};

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

    fn top_closure(c: &Arc<FinCat>) -> Monad {
        let endo = FunctorMap::from_tables(
            "j".into(),
            c.clone(),
            c.clone(),
            vec![1, 1],
            vec![1, 1, 1],
        );
        let mult = NatTransMap::from_components(
            "mult",
            compose_functors(&endo, &endo).unwrap(),
            endo.clone(),
            vec![1, 1],
        )
        .unwrap();
        let unit = NatTransMap::from_components(
            "unit",
            identity_functor(c),
            endo.clone(),
            vec![2, 1],
        )
        .unwrap();
        Monad::new("top", endo, mult, unit).unwrap()
    }

    fn projection(prod: &Arc<FinCat>, c: &Arc<FinCat>) -> FunctorMap {
        FunctorMap::from_tables(
            "proj".into(),
            prod.clone(),
            c.clone(),
            (0..prod.object_count()).collect(),
            (0..prod.morphism_count()).collect(),
        )
    }

    /// On an identity square over a product of identity adjunctions the
    /// operator is the identity family and its inverse is itself.
    #[test]
    fn identity_square_has_identity_operator() {
        let limits = Limits::default();
        let arg = identity_adjunction(&chain2());
        let par = identity_adjunction(&one());
        let source = product_adjunction(&arg, &par, &limits).unwrap();
        let cell = identity_adj_one_cell(&source).unwrap();
        let (out, analysis) = hopf_operator_adj(&cell, &arg, &par, &limits).unwrap();
        assert!(analysis.is_invertible());
        assert!(analysis.operator().is_identity_family());
        assert!(out.lambda().is_identity_family());
        assert_eq!(out.source(), &source);
    }

    /// The monad-side operators against an identity resolution leave an
    /// identity square untouched.
    #[test]
    fn identity_square_mnd_operators_are_identities() {
        let limits = Limits::default();
        let c = chain2();
        let p = one();
        let s = identity_monad(&c);
        let e = identity_monad(&p);
        let source = product_monad(&s, &e, &limits).unwrap();
        let cell = identity_mnd_one_cell(&source).unwrap();

        let (hopf, analysis) =
            hopf_operator_mnd(&cell, &s, &identity_adjunction(&p), &limits).unwrap();
        assert!(analysis.is_invertible());
        assert!(hopf.psi().is_identity_family());
        assert_eq!(hopf.carrier(), cell.carrier());

        let (fusion, analysis) = fusion_operator_mnd(&cell, &s, &e, &limits).unwrap();
        assert!(analysis.is_invertible());
        assert!(fusion.psi().is_identity_family());
        assert_eq!(fusion.carrier(), cell.carrier());
    }

    /// A distributor built from the unit of a closure monad: its only
    /// non-identity component points strictly up the chain, so neither
    /// operator inverts, and the verdict survives the lift onto the
    /// product of resolutions.
    #[test]
    fn closure_unit_square_is_not_hopf() {
        let limits = Limits::default();
        let c = chain2();
        let p = one();
        let closure = top_closure(&c);
        let e = identity_monad(&p);
        let source = product_monad(&closure, &e, &limits).unwrap();
        let target = identity_monad(&c);
        let prod = source.base();
        let carrier = projection(prod, &c);
        let psi = NatTransMap::from_components(
            "unit-family",
            compose_functors(target.endo(), &carrier).unwrap(),
            compose_functors(&carrier, source.endo()).unwrap(),
            vec![2, 1],
        )
        .unwrap();
        let cell =
            MndOneCell::new("unit-square", source.clone(), target.clone(), carrier, psi).unwrap();

        let (_, analysis) =
            hopf_operator_mnd(&cell, &closure, &identity_adjunction(&p), &limits).unwrap();
        assert!(!analysis.is_invertible());
        assert!(analysis.inverse().is_none());
        let (object, component) = analysis.witness().unwrap();
        assert_eq!(object, "(0,*)");
        assert_eq!(component, "0<=1");

        let (_, analysis) =
            fusion_operator_mnd(&cell, &closure, &identity_monad(&p), &limits).unwrap();
        assert!(!analysis.is_invertible());

        let s_bundle = em_category(&closure, &limits).unwrap();
        let e_bundle = em_category(&e, &limits).unwrap();
        let t_bundle = em_category(&target, &limits).unwrap();
        let split = lift_cell_along_product(&cell, &s_bundle, &e_bundle, &t_bundle, &limits).unwrap();
        let (_, analysis) =
            hopf_operator_adj(&split, s_bundle.adjunction(), e_bundle.adjunction(), &limits)
                .unwrap();
        assert!(!analysis.is_invertible());
    }
}
