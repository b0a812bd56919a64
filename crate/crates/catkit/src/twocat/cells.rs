use crate::check::{CheckReport, Violation};
use crate::error::{Error, Limits, Result};
use crate::fincat::{
    compose_functors, identity_functor, identity_nat, is_invertible, product_nat,
    validate_nat_trans, vcompose, whisker_left, whisker_right, FunctorMap, NatTransMap,
};
use crate::structure::{
    product_adjunction, validate_adjunction, validate_monad, Adjunction, Monad,
};

use super::mate::mate;

/// A square over adjunctions: `top` between the bases, `bottom` between the
/// apexes, and `lambda : left'∘top ⇒ bottom∘left`.  Constructing one
/// validates everything it touches, computes the right mate `rho`, and
/// requires `rho` to be invertible.
#[derive(Debug, Clone)]
pub struct AdjOneCell {
    name: String,
    source: Adjunction,
    target: Adjunction,
    top: FunctorMap,
    bottom: FunctorMap,
    lambda: NatTransMap,
    rho: NatTransMap,
    rho_inv: NatTransMap,
}

impl PartialEq for AdjOneCell {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.top == other.top
            && self.bottom == other.bottom
            && self.lambda == other.lambda
    }
}

impl Eq for AdjOneCell {}

impl AdjOneCell {
    pub fn new(
        name: impl Into<String>,
        source: Adjunction,
        target: Adjunction,
        top: FunctorMap,
        bottom: FunctorMap,
        lambda: NatTransMap,
    ) -> Result<AdjOneCell> {
        let name = name.into();
        if top.dom() != source.base() || top.cod() != target.base() {
            return Err(Error::structural(format!(
                "cell {}: top functor does not connect the bases",
                name
            )));
        }
        if bottom.dom() != source.apex() || bottom.cod() != target.apex() {
            return Err(Error::structural(format!(
                "cell {}: bottom functor does not connect the apexes",
                name
            )));
        }
        let expected_source = compose_functors(target.left(), &top)?;
        let expected_target = compose_functors(&bottom, source.left())?;
        if lambda.source() != &expected_source || lambda.target() != &expected_target {
            return Err(Error::structural(format!(
                "cell {}: lambda does not run left'∘top ⇒ bottom∘left",
                name
            )));
        }
        validate_adjunction(&source).into_result()?;
        validate_adjunction(&target).into_result()?;
        validate_nat_trans(&lambda).into_result()?;
        let rho = mate(&lambda, &top, &bottom, &source, &target)?;
        let analysis = is_invertible(&rho)?;
        let Some(rho_inv) = analysis.inverse else {
            let (obj, comp) = analysis.witness.unwrap_or_default();
            return Err(Error::precondition(format!(
                "cell {}: right mate is not invertible (component {} at {})",
                name, comp, obj
            )));
        };
        Ok(AdjOneCell {
            name,
            source,
            target,
            top,
            bottom,
            lambda,
            rho,
            rho_inv,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn source(&self) -> &Adjunction {
        &self.source
    }

    pub fn target(&self) -> &Adjunction {
        &self.target
    }

    pub fn top(&self) -> &FunctorMap {
        &self.top
    }

    pub fn bottom(&self) -> &FunctorMap {
        &self.bottom
    }

    pub fn lambda(&self) -> &NatTransMap {
        &self.lambda
    }

    pub fn rho(&self) -> &NatTransMap {
        &self.rho
    }

    pub fn rho_inv(&self) -> &NatTransMap {
        &self.rho_inv
    }
}

pub fn identity_adj_one_cell(adj: &Adjunction) -> Result<AdjOneCell> {
    let top = identity_functor(adj.base());
    let bottom = identity_functor(adj.apex());
    let lambda = NatTransMap::from_components(
        format!("1_{}", adj.left().name()),
        compose_functors(adj.left(), &top)?,
        compose_functors(&bottom, adj.left())?,
        identity_nat(adj.left()).components().to_vec(),
    )?;
    AdjOneCell::new(
        format!("1({})", adj.name()),
        adj.clone(),
        adj.clone(),
        top,
        bottom,
        lambda,
    )
}

/// `second` after `first`: top and bottom compose, lambda pastes as
/// `bottom₂·lambda₁ ∘ lambda₂·top₁`.
pub fn compose_adj_one_cells(second: &AdjOneCell, first: &AdjOneCell) -> Result<AdjOneCell> {
    if first.target != second.source {
        return Err(Error::structural(format!(
            "cells {} and {} are not composable",
            second.name, first.name
        )));
    }
    let top = compose_functors(&second.top, &first.top)?;
    let bottom = compose_functors(&second.bottom, &first.bottom)?;
    let lambda = vcompose(
        &whisker_left(&second.bottom, &first.lambda)?,
        &whisker_right(&second.lambda, &first.top)?,
    )?;
    AdjOneCell::new(
        format!("{}∘{}", second.name, first.name),
        first.source.clone(),
        second.target.clone(),
        top,
        bottom,
        lambda,
    )
}

/// Componentwise product of squares over the product adjunctions.
pub fn product_adj_one_cells(
    a: &AdjOneCell,
    b: &AdjOneCell,
    limits: &Limits,
) -> Result<AdjOneCell> {
    let source = product_adjunction(&a.source, &b.source, limits)?;
    let target = product_adjunction(&a.target, &b.target, limits)?;
    let top = crate::fincat::product_functor(&a.top, &b.top, source.base(), target.base())?;
    let bottom = crate::fincat::product_functor(&a.bottom, &b.bottom, source.apex(), target.apex())?;
    let lambda_raw = product_nat(&a.lambda, &b.lambda, source.base(), target.apex())?;
    let lambda = NatTransMap::from_components(
        format!("({}×{})", a.lambda.name(), b.lambda.name()),
        compose_functors(target.left(), &top)?,
        compose_functors(&bottom, source.left())?,
        lambda_raw.components().to_vec(),
    )?;
    AdjOneCell::new(
        format!("({}×{})", a.name, b.name),
        source,
        target,
        top,
        bottom,
        lambda,
    )
}

/// A square over monads: `carrier` with `psi : T∘carrier ⇒ carrier∘S`.
/// Construction validates the monads, naturality, and compatibility of
/// `psi` with both multiplications and both units.
#[derive(Debug, Clone)]
pub struct MndOneCell {
    name: String,
    source: Monad,
    target: Monad,
    carrier: FunctorMap,
    psi: NatTransMap,
}

impl PartialEq for MndOneCell {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.carrier == other.carrier
            && self.psi == other.psi
    }
}

impl Eq for MndOneCell {}

impl MndOneCell {
    pub fn new(
        name: impl Into<String>,
        source: Monad,
        target: Monad,
        carrier: FunctorMap,
        psi: NatTransMap,
    ) -> Result<MndOneCell> {
        let name = name.into();
        if carrier.dom() != source.base() || carrier.cod() != target.base() {
            return Err(Error::structural(format!(
                "cell {}: carrier does not connect the bases",
                name
            )));
        }
        let expected_source = compose_functors(target.endo(), &carrier)?;
        let expected_target = compose_functors(&carrier, source.endo())?;
        if psi.source() != &expected_source || psi.target() != &expected_target {
            return Err(Error::structural(format!(
                "cell {}: psi does not run T∘carrier ⇒ carrier∘S",
                name
            )));
        }
        validate_monad(&source).into_result()?;
        validate_monad(&target).into_result()?;
        validate_nat_trans(&psi).into_result()?;
        let cell = MndOneCell {
            name,
            source,
            target,
            carrier,
            psi,
        };
        cell.check_compat().into_result()?;
        Ok(cell)
    }

    /// `psi ∘ mult_T·carrier = carrier·mult_S ∘ psi·S ∘ T·psi`, and
    /// `psi ∘ unit_T·carrier = carrier·unit_S`, checked per object.
    fn check_compat(&self) -> CheckReport {
        let mut report = CheckReport::new(self.name.clone());
        let cat = self.target.base();
        let base = self.source.base();
        let b = &self.carrier;
        let t = self.target.endo();
        let s = self.source.endo();
        for o in base.objects() {
            let bo = b.obj(o);
            let mult_side = cat.compose(self.psi.component(o), self.target.mult().component(bo));
            let spread = cat.compose_chain(&[
                t.mor(self.psi.component(o)),
                self.psi.component(s.obj(o)),
                b.mor(self.source.mult().component(o)),
            ]);
            if mult_side.is_none() || mult_side != spread {
                report.push(Violation::new(
                    "distributes-mult",
                    vec![base.object_id(o).to_string()],
                    format!("multiplication compatibility fails at {}", base.object_id(o)),
                ));
            }
            let unit_side = cat.compose(self.psi.component(o), self.target.unit().component(bo));
            if unit_side != Some(b.mor(self.source.unit().component(o))) {
                report.push(Violation::new(
                    "distributes-unit",
                    vec![base.object_id(o).to_string()],
                    format!("unit compatibility fails at {}", base.object_id(o)),
                ));
            }
        }
        report.finish()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn source(&self) -> &Monad {
        &self.source
    }

    pub fn target(&self) -> &Monad {
        &self.target
    }

    pub fn carrier(&self) -> &FunctorMap {
        &self.carrier
    }

    pub fn psi(&self) -> &NatTransMap {
        &self.psi
    }
}

pub fn identity_mnd_one_cell(monad: &Monad) -> Result<MndOneCell> {
    let carrier = identity_functor(monad.base());
    let psi = NatTransMap::from_components(
        format!("1_{}", monad.endo().name()),
        compose_functors(monad.endo(), &carrier)?,
        compose_functors(&carrier, monad.endo())?,
        identity_nat(monad.endo()).components().to_vec(),
    )?;
    MndOneCell::new(
        format!("1({})", monad.name()),
        monad.clone(),
        monad.clone(),
        carrier,
        psi,
    )
}

/// `second` after `first`: carriers compose, psi pastes as
/// `carrier₂·psi₁ ∘ psi₂·carrier₁`.
pub fn compose_mnd_one_cells(second: &MndOneCell, first: &MndOneCell) -> Result<MndOneCell> {
    if first.target != second.source {
        return Err(Error::structural(format!(
            "cells {} and {} are not composable",
            second.name, first.name
        )));
    }
    let carrier = compose_functors(&second.carrier, &first.carrier)?;
    let psi = vcompose(
        &whisker_left(&second.carrier, &first.psi)?,
        &whisker_right(&second.psi, &first.carrier)?,
    )?;
    MndOneCell::new(
        format!("{}∘{}", second.name, first.name),
        first.source.clone(),
        second.target.clone(),
        carrier,
        psi,
    )
}

/// A 2-cell over adjunctions: a pair of transformations between the tops
/// and bottoms of two parallel squares.  The two equivalent coherence
/// conditions (one through lambda, one through the mates) are both checked;
/// disagreement between them is an engine bug, not an input error.
#[derive(Debug, Clone)]
pub struct AdjTwoCell {
    name: String,
    from: AdjOneCell,
    to: AdjOneCell,
    alpha: NatTransMap,
    beta: NatTransMap,
}

impl PartialEq for AdjTwoCell {
    fn eq(&self, other: &Self) -> bool {
        self.from == other.from
            && self.to == other.to
            && self.alpha == other.alpha
            && self.beta == other.beta
    }
}

impl Eq for AdjTwoCell {}

impl AdjTwoCell {
    pub fn new(
        name: impl Into<String>,
        from: AdjOneCell,
        to: AdjOneCell,
        alpha: NatTransMap,
        beta: NatTransMap,
    ) -> Result<AdjTwoCell> {
        let name = name.into();
        if from.source != to.source || from.target != to.target {
            return Err(Error::structural(format!(
                "2-cell {}: squares do not share endpoints",
                name
            )));
        }
        if alpha.source() != &from.top || alpha.target() != &to.top {
            return Err(Error::structural(format!(
                "2-cell {}: alpha does not run top ⇒ top'",
                name
            )));
        }
        if beta.source() != &from.bottom || beta.target() != &to.bottom {
            return Err(Error::structural(format!(
                "2-cell {}: beta does not run bottom ⇒ bottom'",
                name
            )));
        }
        validate_nat_trans(&alpha).into_result()?;
        validate_nat_trans(&beta).into_result()?;
        let lambda_cond = {
            let lhs = vcompose(&whisker_right(&beta, from.source.left())?, &from.lambda)?;
            let rhs = vcompose(&to.lambda, &whisker_left(from.target.left(), &alpha)?)?;
            lhs == rhs
        };
        let mate_cond = {
            let lhs = vcompose(&whisker_left(from.target.right(), &beta)?, &from.rho)?;
            let rhs = vcompose(&to.rho, &whisker_right(&alpha, from.source.right())?)?;
            lhs == rhs
        };
        if lambda_cond != mate_cond {
            return Err(Error::internal(format!(
                "2-cell {}: the two equivalent coherence conditions disagree",
                name
            )));
        }
        if !lambda_cond {
            let mut report = CheckReport::new(name.clone());
            report.push(Violation::new(
                "two-cell-coherence",
                vec![alpha.name().to_string(), beta.name().to_string()],
                "beta·left ∘ lambda differs from lambda' ∘ left'·alpha",
            ));
            return Err(Error::Law(Box::new(report.finish())));
        }
        Ok(AdjTwoCell {
            name,
            from,
            to,
            alpha,
            beta,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn from(&self) -> &AdjOneCell {
        &self.from
    }

    pub fn to(&self) -> &AdjOneCell {
        &self.to
    }

    pub fn alpha(&self) -> &NatTransMap {
        &self.alpha
    }

    pub fn beta(&self) -> &NatTransMap {
        &self.beta
    }
}

/// A 2-cell over monads: one transformation between the carriers,
/// interchanging with the two distributors.
#[derive(Debug, Clone)]
pub struct MndTwoCell {
    name: String,
    from: MndOneCell,
    to: MndOneCell,
    theta: NatTransMap,
}

impl PartialEq for MndTwoCell {
    fn eq(&self, other: &Self) -> bool {
        self.from == other.from && self.to == other.to && self.theta == other.theta
    }
}

impl Eq for MndTwoCell {}

impl MndTwoCell {
    pub fn new(
        name: impl Into<String>,
        from: MndOneCell,
        to: MndOneCell,
        theta: NatTransMap,
    ) -> Result<MndTwoCell> {
        let name = name.into();
        if from.source != to.source || from.target != to.target {
            return Err(Error::structural(format!(
                "2-cell {}: squares do not share endpoints",
                name
            )));
        }
        if theta.source() != &from.carrier || theta.target() != &to.carrier {
            return Err(Error::structural(format!(
                "2-cell {}: theta does not run carrier ⇒ carrier'",
                name
            )));
        }
        validate_nat_trans(&theta).into_result()?;
        let lhs = vcompose(&to.psi, &whisker_left(from.target.endo(), &theta)?)?;
        let rhs = vcompose(&whisker_right(&theta, from.source.endo())?, &from.psi)?;
        if lhs != rhs {
            let mut report = CheckReport::new(name.clone());
            report.push(Violation::new(
                "two-cell-distributes",
                vec![theta.name().to_string()],
                "psi' ∘ T·theta differs from theta·S ∘ psi",
            ));
            return Err(Error::Law(Box::new(report.finish())));
        }
        Ok(MndTwoCell {
            name,
            from,
            to,
            theta,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn from(&self) -> &MndOneCell {
        &self.from
    }

    pub fn to(&self) -> &MndOneCell {
        &self.to
    }

    pub fn theta(&self) -> &NatTransMap {
        &self.theta
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{constant_functor, identity_functor, identity_nat, FinCat, FunctorMap};
    use crate::structure::{identity_adjunction, identity_monad};
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

    fn parallel_pair() -> Arc<FinCat> {
        FinCat::builder("Pair")
            .object("a")
            .object("b")
            .morphism("ida", "a", "a")
            .morphism("idb", "b", "b")
            .morphism("f", "a", "b")
            .morphism("g", "a", "b")
            .identity("a", "ida")
            .identity("b", "idb")
            .composite("ida", "ida", "ida")
            .composite("idb", "idb", "idb")
            .composite("f", "ida", "f")
            .composite("idb", "f", "f")
            .composite("g", "ida", "g")
            .composite("idb", "g", "g")
            .build()
            .map(Arc::new)
            .unwrap()
    }

    #[test]
    fn squares_require_an_invertible_mate() {
        let c = chain2();
        let id = identity_adjunction(&c);
        let lambda = NatTransMap::from_components(
            "sink",
            constant_functor(&c, &c, 0),
            identity_functor(&c),
            vec![0, 2],
        )
        .unwrap();
        let err = AdjOneCell::new(
            "sunk",
            id.clone(),
            id,
            constant_functor(&c, &c, 0),
            identity_functor(&c),
            lambda,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Precondition(_)), "got {err:?}");
    }

    #[test]
    fn identity_squares_absorb_composition() {
        let c = chain2();
        let id_cell = identity_adj_one_cell(&identity_adjunction(&c)).unwrap();
        assert!(id_cell.rho().is_identity_family());
        let twice = compose_adj_one_cells(&id_cell, &id_cell).unwrap();
        assert_eq!(twice, id_cell);

        let mnd_cell = identity_mnd_one_cell(&identity_monad(&c)).unwrap();
        let again = compose_mnd_one_cells(&mnd_cell, &mnd_cell).unwrap();
        assert_eq!(again, mnd_cell);
    }

    #[test]
    fn two_cells_reject_families_that_fail_their_membranes() {
        let p = parallel_pair();
        let id_cell = identity_mnd_one_cell(&identity_monad(&p)).unwrap();
        let swap = FunctorMap::from_tables(
            "swap".into(),
            p.clone(),
            p.clone(),
            vec![0, 1],
            vec![0, 1, 3, 2],
        );
        let swap_psi = NatTransMap::from_components(
            "swap-dist",
            swap.clone(),
            swap.clone(),
            vec![0, 1],
        )
        .unwrap();
        let swap_cell = MndOneCell::new(
            "swapped",
            identity_monad(&p),
            identity_monad(&p),
            swap,
            swap_psi,
        )
        .unwrap();
        // Componentwise identities between distinct carriers are not natural.
        let theta = NatTransMap::from_components(
            "askew",
            id_cell.carrier().clone(),
            swap_cell.carrier().clone(),
            vec![0, 1],
        )
        .unwrap();
        let err = MndTwoCell::new("askew-cell", id_cell, swap_cell, theta).unwrap_err();
        assert!(matches!(err, Error::Law(_)), "got {err:?}");
    }

    #[test]
    fn identity_two_cells_are_coherent() {
        let c = chain2();
        let cell = identity_adj_one_cell(&identity_adjunction(&c)).unwrap();
        let alpha = identity_nat(cell.top());
        let beta = identity_nat(cell.bottom());
        let two = AdjTwoCell::new("still", cell.clone(), cell.clone(), alpha, beta).unwrap();
        assert_eq!(two.from(), two.to());
    }
}
