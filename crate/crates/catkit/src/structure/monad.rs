use std::sync::Arc;

use crate::check::{CheckReport, Violation};
use crate::error::{Error, Limits, Result};
use crate::fincat::{
    compose_functors, identity_functor, identity_nat, product_category, product_nat,
    validate_nat_trans, whisker_left, whisker_right, FinCat, FunctorMap, NatTransMap,
};

use super::adjunction::Adjunction;

/// A monad `(base, endo, mult, unit)` with `mult : endo∘endo ⇒ endo` and
/// `unit : 1 ⇒ endo`.
#[derive(Debug, Clone)]
pub struct Monad {
    name: String,
    base: Arc<FinCat>,
    endo: FunctorMap,
    mult: NatTransMap,
    unit: NatTransMap,
}

impl PartialEq for Monad {
    fn eq(&self, other: &Self) -> bool {
        self.endo == other.endo && self.mult == other.mult && self.unit == other.unit
    }
}

impl Eq for Monad {}

impl Monad {
    pub fn new(
        name: impl Into<String>,
        endo: FunctorMap,
        mult: NatTransMap,
        unit: NatTransMap,
    ) -> Result<Monad> {
        let name = name.into();
        if endo.dom() != endo.cod() {
            return Err(Error::structural(format!(
                "monad {}: carrier is not an endofunctor",
                name
            )));
        }
        let base = endo.dom().clone();
        let squared = compose_functors(&endo, &endo)?;
        if mult.source() != &squared || mult.target() != &endo {
            return Err(Error::structural(format!(
                "monad {}: mult does not run endo∘endo ⇒ endo",
                name
            )));
        }
        if !unit.source().is_identity_on(&base) || unit.target() != &endo {
            return Err(Error::structural(format!(
                "monad {}: unit does not run 1 ⇒ endo",
                name
            )));
        }
        Ok(Monad {
            name,
            base,
            endo,
            mult,
            unit,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn base(&self) -> &Arc<FinCat> {
        &self.base
    }

    pub fn endo(&self) -> &FunctorMap {
        &self.endo
    }

    pub fn mult(&self) -> &NatTransMap {
        &self.mult
    }

    pub fn unit(&self) -> &NatTransMap {
        &self.unit
    }
}

/// Naturality of mult and unit, associativity, and both unit laws.
pub fn validate_monad(monad: &Monad) -> CheckReport {
    let mut report = CheckReport::new(monad.name.clone());
    report.merge(validate_nat_trans(&monad.mult));
    report.merge(validate_nat_trans(&monad.unit));
    let cat = &monad.base;
    let s = &monad.endo;
    for o in cat.objects() {
        let mu = monad.mult.component(o);
        // mult ∘ endo(mult) = mult ∘ mult·endo
        let assoc_l = cat.compose(mu, s.mor(monad.mult.component(o)));
        let assoc_r = cat.compose(mu, monad.mult.component(s.obj(o)));
        if assoc_l.is_none() || assoc_l != assoc_r {
            report.push(Violation::new(
                "monad-associativity",
                vec![cat.object_id(o).to_string()],
                format!("associativity fails at {}", cat.object_id(o)),
            ));
        }
        if cat.compose(mu, s.mor(monad.unit.component(o))) != Some(cat.identity(s.obj(o))) {
            report.push(Violation::new(
                "monad-unit-right",
                vec![cat.object_id(o).to_string()],
                format!("mult ∘ endo(unit) at {} is not the identity", cat.object_id(o)),
            ));
        }
        if cat.compose(mu, monad.unit.component(s.obj(o))) != Some(cat.identity(s.obj(o))) {
            report.push(Violation::new(
                "monad-unit-left",
                vec![cat.object_id(o).to_string()],
                format!("mult ∘ unit·endo at {} is not the identity", cat.object_id(o)),
            ));
        }
    }
    report.finish()
}

pub fn identity_monad(cat: &Arc<FinCat>) -> Monad {
    let id = identity_functor(cat);
    Monad {
        name: format!("1_{}", cat.name()),
        base: cat.clone(),
        endo: id.clone(),
        mult: identity_nat(&id),
        unit: identity_nat(&id),
    }
}

/// The monad induced on the base of an adjunction: endofunctor
/// `right∘left`, mult `right·counit·left`, unit the adjunction unit.
pub fn monad_from_adjunction(adj: &Adjunction) -> Result<Monad> {
    let endo = compose_functors(adj.right(), adj.left())?;
    let mult = whisker_left(
        adj.right(),
        &whisker_right(adj.counit(), adj.left())?,
    )?;
    Monad::new(
        format!("mnd({})", adj.name()),
        endo.rename(format!("{}∘{}", adj.right().name(), adj.left().name())),
        mult,
        adj.unit().clone(),
    )
}

/// Componentwise product of monads on the product category.
pub fn product_monad(a: &Monad, b: &Monad, limits: &Limits) -> Result<Monad> {
    let base = Arc::new(product_category(&a.base, &b.base, limits)?);
    let endo = crate::fincat::product_functor(&a.endo, &b.endo, &base, &base)?;
    let mult = product_nat(&a.mult, &b.mult, &base, &base)?;
    let unit = product_nat(&a.unit, &b.unit, &base, &base)?;
    Monad::new(format!("({}×{})", a.name, b.name), endo, mult, unit)
}
