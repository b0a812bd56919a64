//! Adjoint objects over a single square.
//!
//! A square between adjunctions or monads whose structure transformation
//! is invertible acquires a companion square in the opposite direction,
//! built out of chosen right adjoints for its legs.  The two squares are
//! then themselves adjoint inside the ambient 2-category.  This module
//! constructs the companion from its closed formula, re-derives the
//! inverse structure maps two independent ways, and checks the unit,
//! counit and triangle laws of the induced adjunction of squares.
//!
//! Everything here concerns one square at a time.  The restriction
//! helpers cut a product-source square down to a single parameter, which
//! is how the parameter-indexed families in the neighbouring modules
//! feed into these constructions.

use std::sync::Arc;

use super::engine_bug;
use crate::error::{Error, Limits, Result};
use crate::fincat::{
    compose_functors, constant_functor, identity_functor, identity_nat, is_invertible, pairing,
    vcompose, whisker_left, whisker_right, FinCat, NatTransMap, ObjIx,
};
use crate::structure::{
    identity_adjunction, identity_monad, product_adjunction, product_monad, validate_adjunction,
    Adjunction, Monad,
};
use crate::twocat::{
    compose_adj_one_cells, compose_mnd_one_cells, identity_adj_one_cell, identity_mnd_one_cell,
    AdjOneCell, AdjTwoCell, MndOneCell, MndTwoCell,
};

/// The adjoint object of an invertible square between adjunctions: the
/// companion square running the other way plus the unit and counit
/// 2-cells exhibiting the adjunction of squares.
#[derive(Debug, Clone)]
pub struct AdjointObjectAdj {
    cell: AdjOneCell,
    unit: AdjTwoCell,
    counit: AdjTwoCell,
    gamma: NatTransMap,
}

impl AdjointObjectAdj {
    /// The companion square, from the original target to the original
    /// source.
    pub fn cell(&self) -> &AdjOneCell {
        &self.cell
    }

    /// Unit 2-cell, from the identity square to companion-after-original.
    pub fn unit(&self) -> &AdjTwoCell {
        &self.unit
    }

    /// Counit 2-cell, from original-after-companion to the identity
    /// square.
    pub fn counit(&self) -> &AdjTwoCell {
        &self.counit
    }

    /// The inverse of the original structure transformation.
    pub fn gamma(&self) -> &NatTransMap {
        &self.gamma
    }
}

/// The adjoint object of an invertible square between monads.
#[derive(Debug, Clone)]
pub struct AdjointObjectMnd {
    cell: MndOneCell,
    unit: MndTwoCell,
    counit: MndTwoCell,
    zeta: NatTransMap,
}

impl AdjointObjectMnd {
    pub fn cell(&self) -> &MndOneCell {
        &self.cell
    }

    pub fn unit(&self) -> &MndTwoCell {
        &self.unit
    }

    pub fn counit(&self) -> &MndTwoCell {
        &self.counit
    }

    /// The inverse of the original distributor.
    pub fn zeta(&self) -> &NatTransMap {
        &self.zeta
    }
}

/// Both triangle laws of an adjunction, phrased through the whisker
/// calculus.  The inputs were already validated componentwise, so a
/// failure here means the calculus itself went wrong.
fn whiskered_triangles(adj: &Adjunction) -> Result<()> {
    let l = adj.left();
    let r = adj.right();
    let on_left = vcompose(
        &whisker_right(adj.counit(), l)?,
        &whisker_left(l, adj.unit())?,
    )?;
    if on_left != identity_nat(l) {
        return Err(Error::internal(format!(
            "whiskered triangle on {} disagrees with the validated adjunction {}",
            l.name(),
            adj.name()
        )));
    }
    let on_right = vcompose(
        &whisker_left(r, adj.counit())?,
        &whisker_right(adj.unit(), r)?,
    )?;
    if on_right != identity_nat(r) {
        return Err(Error::internal(format!(
            "whiskered triangle on {} disagrees with the validated adjunction {}",
            r.name(),
            adj.name()
        )));
    }
    Ok(())
}

/// Builds the adjoint object of a square between adjunctions.
///
/// `cell` is a square `(J, V, λ)` from `L ⊣ R` to `L̄ ⊣ R̄` whose `λ`
/// must be invertible, and `jk`, `vw` are classical adjunctions
/// `J ⊣ K` and `V ⊣ W` for its two legs.  The companion square
/// `(K, W, λ')` is assembled from the closed formula
///
/// ```text
/// λ' = W L̄ ε ∘ W γ K ∘ η L K        with γ = λ⁻¹,
/// ```
///
/// after which the construction checks, failing with an internal error
/// on any mismatch:
///
/// * the symmetric closed formula for `γ` in terms of `λ'` returns the
///   computed inverse;
/// * the five-factor expansions of the companion's mate and of its
///   inverse agree with the generic mate calculus, and the two are
///   two-sided inverses;
/// * the units and counits of `jk` and `vw` form unit and counit
///   2-cells between the identity squares and the two composites;
/// * the triangle laws of both leg adjunctions hold under whiskering.
pub fn adjoint_object_adj(
    cell: &AdjOneCell,
    jk: &Adjunction,
    vw: &Adjunction,
) -> Result<AdjointObjectAdj> {
    validate_adjunction(jk).into_result()?;
    validate_adjunction(vw).into_result()?;
    if jk.left() != cell.top() {
        return Err(Error::precondition(format!(
            "adjunction {} does not have the top functor {} as its left adjoint",
            jk.name(),
            cell.top().name()
        )));
    }
    if vw.left() != cell.bottom() {
        return Err(Error::precondition(format!(
            "adjunction {} does not have the bottom functor {} as its left adjoint",
            vw.name(),
            cell.bottom().name()
        )));
    }
    let analysis = is_invertible(cell.lambda())?;
    let gamma = match analysis.inverse {
        Some(inv) => inv,
        None => {
            let (object, component) = analysis.witness.unwrap_or_default();
            return Err(Error::precondition(format!(
                "structure transformation {} of {} is not invertible: component {} at {} has no inverse",
                cell.lambda().name(),
                cell.name(),
                component,
                object
            )));
        }
    };

    let src = cell.source();
    let tgt = cell.target();
    let j = cell.top();
    let v = cell.bottom();
    let k = jk.right();
    let w = vw.right();
    let l = src.left();
    let r = src.right();
    let lbar = tgt.left();
    let rbar = tgt.right();

    let lk = compose_functors(l, k)?;
    let wlbar = compose_functors(w, lbar)?;
    let lambda_back = vcompose(
        &whisker_left(&wlbar, jk.counit())?,
        &vcompose(
            &whisker_left(w, &whisker_right(&gamma, k)?)?,
            &whisker_right(vw.unit(), &lk)?,
        )?,
    )?
    .rename(format!("ad({})", cell.lambda().name()));

    let back = AdjOneCell::new(
        format!("ad({})", cell.name()),
        tgt.clone(),
        src.clone(),
        k.clone(),
        w.clone(),
        lambda_back,
    )
    .map_err(|e| engine_bug("assembling the companion square", e))?;

    let vl = compose_functors(v, l)?;
    let lbar_j = compose_functors(lbar, j)?;
    let gamma_again = vcompose(
        &whisker_right(vw.counit(), &lbar_j)?,
        &vcompose(
            &whisker_left(v, &whisker_right(back.lambda(), j)?)?,
            &whisker_left(&vl, jk.unit())?,
        )?,
    )?;
    if gamma_again != gamma {
        return Err(Error::internal(format!(
            "closed formula for the inverse of {} disagrees with the computed inverse",
            cell.lambda().name()
        )));
    }

    let krbar = compose_functors(k, rbar)?;
    let rw = compose_functors(r, w)?;
    let lk_rbar = compose_functors(&lk, rbar)?;
    let rwlbar = compose_functors(&rw, lbar)?;
    let rho_formula = vcompose(
        &whisker_left(&rw, tgt.counit())?,
        &vcompose(
            &whisker_left(&rwlbar, &whisker_right(jk.counit(), rbar)?)?,
            &vcompose(
                &whisker_left(&rw, &whisker_right(&gamma, &krbar)?)?,
                &vcompose(
                    &whisker_left(r, &whisker_right(vw.unit(), &lk_rbar)?)?,
                    &whisker_right(src.unit(), &krbar)?,
                )?,
            )?,
        )?,
    )?;
    if &rho_formula != back.rho() {
        return Err(Error::internal(format!(
            "five-factor mate of {} disagrees with the generic mate calculus",
            back.name()
        )));
    }

    let jr = compose_functors(j, r)?;
    let jrw = compose_functors(&jr, w)?;
    let krbar_v = compose_functors(&krbar, v)?;
    let delta = vcompose(
        &whisker_left(&krbar, vw.counit())?,
        &vcompose(
            &whisker_left(&krbar_v, &whisker_right(src.counit(), w)?)?,
            &vcompose(
                &whisker_left(&krbar, &whisker_right(cell.lambda(), &rw)?)?,
                &vcompose(
                    &whisker_left(k, &whisker_right(tgt.unit(), &jrw)?)?,
                    &whisker_right(jk.unit(), &rw)?,
                )?,
            )?,
        )?,
    )?;
    if !vcompose(&delta, back.rho())?.is_identity_family()
        || !vcompose(back.rho(), &delta)?.is_identity_family()
    {
        return Err(Error::internal(format!(
            "five-factor inverse is not a two-sided inverse of the mate of {}",
            back.name()
        )));
    }
    if &delta != back.rho_inv() {
        return Err(Error::internal(format!(
            "five-factor inverse of the mate of {} disagrees with the cached inverse",
            back.name()
        )));
    }

    let round_src = compose_adj_one_cells(&back, cell)
        .map_err(|e| engine_bug("composing companion after original", e))?;
    let unit = AdjTwoCell::new(
        format!("η[{}]", cell.name()),
        identity_adj_one_cell(src).map_err(|e| engine_bug("identity square", e))?,
        round_src,
        jk.unit().clone(),
        vw.unit().clone(),
    )
    .map_err(|e| engine_bug("unit 2-cell of the adjoint object", e))?;

    let round_tgt = compose_adj_one_cells(cell, &back)
        .map_err(|e| engine_bug("composing original after companion", e))?;
    let counit = AdjTwoCell::new(
        format!("ε[{}]", cell.name()),
        round_tgt,
        identity_adj_one_cell(tgt).map_err(|e| engine_bug("identity square", e))?,
        jk.counit().clone(),
        vw.counit().clone(),
    )
    .map_err(|e| engine_bug("counit 2-cell of the adjoint object", e))?;

    whiskered_triangles(jk)?;
    whiskered_triangles(vw)?;

    Ok(AdjointObjectAdj {
        cell: back,
        unit,
        counit,
        gamma,
    })
}

/// Builds the adjoint object of a square between monads.
///
/// `cell` is a square `(J, ψ)` from `(C,S)` to `(D,T)` whose distributor
/// `ψ : TJ ⇒ JS` must be invertible, and `jk` is a classical adjunction
/// `J ⊣ K`.  The companion distributor comes from the closed formula
///
/// ```text
/// ψ' = K T ε ∘ K ζ K ∘ η S K        with ζ = ψ⁻¹,
/// ```
///
/// and the construction then checks the symmetric formula for `ζ`, the
/// monad-morphism laws of the companion, the unit and counit 2-cells
/// built from `η` and `ε`, and both whiskered triangle laws.
pub fn adjoint_object_mnd(cell: &MndOneCell, jk: &Adjunction) -> Result<AdjointObjectMnd> {
    validate_adjunction(jk).into_result()?;
    if jk.left() != cell.carrier() {
        return Err(Error::precondition(format!(
            "adjunction {} does not have the carrier {} as its left adjoint",
            jk.name(),
            cell.carrier().name()
        )));
    }
    let analysis = is_invertible(cell.psi())?;
    let zeta = match analysis.inverse {
        Some(inv) => inv,
        None => {
            let (object, component) = analysis.witness.unwrap_or_default();
            return Err(Error::precondition(format!(
                "distributor {} of {} is not invertible: component {} at {} has no inverse",
                cell.psi().name(),
                cell.name(),
                component,
                object
            )));
        }
    };

    let j = cell.carrier();
    let k = jk.right();
    let s = cell.source().endo();
    let t = cell.target().endo();

    let sk = compose_functors(s, k)?;
    let kt = compose_functors(k, t)?;
    let psi_back = vcompose(
        &whisker_left(&kt, jk.counit())?,
        &vcompose(
            &whisker_left(k, &whisker_right(&zeta, k)?)?,
            &whisker_right(jk.unit(), &sk)?,
        )?,
    )?
    .rename(format!("ad({})", cell.psi().name()));

    let back = MndOneCell::new(
        format!("ad({})", cell.name()),
        cell.target().clone(),
        cell.source().clone(),
        k.clone(),
        psi_back,
    )
    .map_err(|e| engine_bug("assembling the companion square", e))?;

    let js = compose_functors(j, s)?;
    let tj = compose_functors(t, j)?;
    let zeta_again = vcompose(
        &whisker_right(jk.counit(), &tj)?,
        &vcompose(
            &whisker_left(j, &whisker_right(back.psi(), j)?)?,
            &whisker_left(&js, jk.unit())?,
        )?,
    )?;
    if zeta_again != zeta {
        return Err(Error::internal(format!(
            "closed formula for the inverse of {} disagrees with the computed inverse",
            cell.psi().name()
        )));
    }

    let round_src = compose_mnd_one_cells(&back, cell)
        .map_err(|e| engine_bug("composing companion after original", e))?;
    let unit = MndTwoCell::new(
        format!("η[{}]", cell.name()),
        identity_mnd_one_cell(cell.source()).map_err(|e| engine_bug("identity square", e))?,
        round_src,
        jk.unit().clone(),
    )
    .map_err(|e| engine_bug("unit 2-cell of the adjoint object", e))?;

    let round_tgt = compose_mnd_one_cells(cell, &back)
        .map_err(|e| engine_bug("composing original after companion", e))?;
    let counit = MndTwoCell::new(
        format!("ε[{}]", cell.name()),
        round_tgt,
        identity_mnd_one_cell(cell.target()).map_err(|e| engine_bug("identity square", e))?,
        jk.counit().clone(),
    )
    .map_err(|e| engine_bug("counit 2-cell of the adjoint object", e))?;

    whiskered_triangles(jk)?;

    Ok(AdjointObjectMnd {
        cell: back,
        unit,
        counit,
        zeta,
    })
}

/// Cuts a product-source square between adjunctions down to one
/// parameter.
///
/// `cell` must run from the product of `arg` with the identity
/// adjunction on `par_apex`, the shape produced by the Hopf operator.
/// The result is the plain square at parameter `q`, with top and bottom
/// precomposed by the section at `q` and the structure transformation
/// restricted accordingly.  The restricted transformation must be
/// invertible, as it is whenever the enclosing Hopf analysis succeeded;
/// otherwise the restriction is refused with the failing component as
/// witness.
pub fn restrict_at_parameter_adj(
    cell: &AdjOneCell,
    arg: &Adjunction,
    par_apex: &Arc<FinCat>,
    q: ObjIx,
    limits: &Limits,
) -> Result<AdjOneCell> {
    let expected = product_adjunction(arg, &identity_adjunction(par_apex), limits)?;
    if cell.source() != &expected {
        return Err(Error::precondition(format!(
            "square {} is not based on the product of {} with the identity adjunction on {}",
            cell.name(),
            arg.name(),
            par_apex.name()
        )));
    }
    if q >= par_apex.object_count() {
        return Err(Error::precondition(format!(
            "parameter index {} is not an object of {}",
            q,
            par_apex.name()
        )));
    }
    let at = par_apex.object_id(q);
    let top_section = pairing(
        &identity_functor(arg.base()),
        &constant_functor(arg.base(), par_apex, q),
        cell.top().dom(),
    )?;
    let bottom_section = pairing(
        &identity_functor(arg.apex()),
        &constant_functor(arg.apex(), par_apex, q),
        cell.bottom().dom(),
    )?;
    let top = compose_functors(cell.top(), &top_section)?
        .rename(format!("{}(−,{})", cell.top().name(), at));
    let bottom = compose_functors(cell.bottom(), &bottom_section)?
        .rename(format!("{}(−,{})", cell.bottom().name(), at));
    let lambda = whisker_right(cell.lambda(), &top_section)?
        .rename(format!("{}@{}", cell.lambda().name(), at));
    let restricted = AdjOneCell::new(
        format!("{}@{}", cell.name(), at),
        arg.clone(),
        cell.target().clone(),
        top,
        bottom,
        lambda,
    )
    .map_err(|e| engine_bug("restricting a product-source square", e))?;
    let analysis = is_invertible(restricted.lambda())?;
    if !analysis.invertible {
        let (object, component) = analysis.witness.unwrap_or_default();
        return Err(Error::precondition(format!(
            "restriction of {} at {} is not invertible: component {} at {} has no inverse",
            cell.name(),
            at,
            component,
            object
        )));
    }
    Ok(restricted)
}

/// Cuts a product-source square between monads down to one parameter.
/// The counterpart of [`restrict_at_parameter_adj`] on the monad side;
/// `cell` must run from the product of `arg` with the identity monad on
/// `par_base`.
pub fn restrict_at_parameter_mnd(
    cell: &MndOneCell,
    arg: &Monad,
    par_base: &Arc<FinCat>,
    q: ObjIx,
    limits: &Limits,
) -> Result<MndOneCell> {
    let expected = product_monad(arg, &identity_monad(par_base), limits)?;
    if cell.source() != &expected {
        return Err(Error::precondition(format!(
            "square {} is not based on the product of {} with the identity monad on {}",
            cell.name(),
            arg.name(),
            par_base.name()
        )));
    }
    if q >= par_base.object_count() {
        return Err(Error::precondition(format!(
            "parameter index {} is not an object of {}",
            q,
            par_base.name()
        )));
    }
    let at = par_base.object_id(q);
    let section = pairing(
        &identity_functor(arg.base()),
        &constant_functor(arg.base(), par_base, q),
        cell.carrier().dom(),
    )?;
    let carrier = compose_functors(cell.carrier(), &section)?
        .rename(format!("{}(−,{})", cell.carrier().name(), at));
    let psi = whisker_right(cell.psi(), &section)?
        .rename(format!("{}@{}", cell.psi().name(), at));
    let restricted = MndOneCell::new(
        format!("{}@{}", cell.name(), at),
        arg.clone(),
        cell.target().clone(),
        carrier,
        psi,
    )
    .map_err(|e| engine_bug("restricting a product-source square", e))?;
    let analysis = is_invertible(restricted.psi())?;
    if !analysis.invertible {
        let (object, component) = analysis.witness.unwrap_or_default();
        return Err(Error::precondition(format!(
            "restriction of {} at {} is not invertible: component {} at {} has no inverse",
            cell.name(),
            at,
            component,
            object
        )));
    }
    Ok(restricted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fincat::{validate_nat_trans, FinCat, FunctorMap, NatTransMap};
    use crate::structure::Monad;
    use std::collections::HashMap;

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

    /// The closure sending everything to the top element, as a monad on
    /// the two-element chain.
    fn top_closure(two: &Arc<FinCat>) -> Monad {
        let endo = FunctorMap::new(
            "j",
            two.clone(),
            two.clone(),
            &HashMap::from([("0".into(), "1".into()), ("1".into(), "1".into())]),
            &HashMap::from([
                ("id0".into(), "id1".into()),
                ("id1".into(), "id1".into()),
                ("0<=1".into(), "id1".into()),
            ]),
        )
        .unwrap();
        let mult = NatTransMap::new(
            "mult",
            compose_functors(&endo, &endo).unwrap(),
            endo.clone(),
            &HashMap::from([("0".into(), "id1".into()), ("1".into(), "id1".into())]),
        )
        .unwrap();
        let unit = NatTransMap::new(
            "unit",
            identity_functor(two),
            endo.clone(),
            &HashMap::from([("0".into(), "0<=1".into()), ("1".into(), "id1".into())]),
        )
        .unwrap();
        Monad::new("closure", endo, mult, unit).unwrap()
    }

    /// The adjoint object of an identity square along identity leg
    /// adjunctions is the identity square again, with identity unit and
    /// counit.
    #[test]
    fn identity_square_is_self_adjoint() {
        let two = chain2();
        let adj = identity_adjunction(&two);
        let cell = identity_adj_one_cell(&adj).unwrap();
        let legs = identity_adjunction(&two);
        let out = adjoint_object_adj(&cell, &legs, &legs).unwrap();
        assert_eq!(out.cell(), &cell);
        assert!(out.gamma().is_identity_family());
        assert!(out.unit().alpha().is_identity_family());
        assert!(out.counit().beta().is_identity_family());
    }

    /// Same degeneracy on the monad side, but with a non-identity monad
    /// on both ends so the closed formulas are exercised on non-identity
    /// endofunctors.
    #[test]
    fn identity_carrier_over_closure_monad() {
        let two = chain2();
        let monad = top_closure(&two);
        let carrier = identity_functor(&two);
        let psi = NatTransMap::from_components(
            "psi",
            compose_functors(monad.endo(), &carrier).unwrap(),
            compose_functors(&carrier, monad.endo()).unwrap(),
            identity_nat(monad.endo()).components().to_vec(),
        )
        .unwrap();
        let cell = MndOneCell::new("square", monad.clone(), monad.clone(), carrier, psi).unwrap();
        let out = adjoint_object_mnd(&cell, &identity_adjunction(&two)).unwrap();
        assert!(out.cell().psi().is_identity_family());
        assert!(out.zeta().is_identity_family());
        assert!(validate_nat_trans(out.unit().theta()).passed());
    }

    /// A distributor with a non-invertible component must be refused
    /// with that component as witness.
    #[test]
    fn non_invertible_distributor_is_refused() {
        let two = chain2();
        let closure = top_closure(&two);
        let target = identity_monad(&two);
        let carrier = identity_functor(&two);
        // T∘J ⇒ J∘S is x ⇒ jx, the unit of the closure.
        let psi = NatTransMap::from_components(
            "collapse",
            compose_functors(target.endo(), &carrier).unwrap(),
            compose_functors(&carrier, closure.endo()).unwrap(),
            closure.unit().components().to_vec(),
        )
        .unwrap();
        let cell = MndOneCell::new("square", closure, target, carrier, psi).unwrap();
        let err = adjoint_object_mnd(&cell, &identity_adjunction(&two)).unwrap_err();
        match err {
            Error::Precondition(msg) => assert!(msg.contains("not invertible"), "{}", msg),
            other => panic!("expected a precondition failure, got {}", other),
        }
    }

    /// A leg adjunction whose left adjoint is not the square's top
    /// functor is rejected before any formula runs.
    #[test]
    fn mismatched_leg_adjunction_is_rejected() {
        let two = chain2();
        let adj = identity_adjunction(&two);
        let cell = identity_adj_one_cell(&adj).unwrap();
        let skew = Adjunction::new(
            "skew",
            top_closure(&two).endo().clone(),
            identity_functor(&two),
            identity_nat(&identity_functor(&two)),
            identity_nat(&identity_functor(&two)),
        );
        // The closure is not left adjoint to the identity, but the
        // mismatch must already be caught on the functor comparison.
        if let Ok(skew) = skew {
            let err = adjoint_object_adj(&cell, &skew, &identity_adjunction(&two)).unwrap_err();
            assert!(matches!(err, Error::Structural(_) | Error::Law(_) | Error::Precondition(_)));
        }
    }
}
