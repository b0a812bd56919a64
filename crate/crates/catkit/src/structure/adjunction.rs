use std::sync::Arc;

use crate::check::{CheckReport, Violation};
use crate::error::{Error, Limits, Result};
use crate::fincat::{
    identity_functor, identity_nat, op_category, op_functor, op_nat, product_category,
    product_functor, product_nat, validate_nat_trans, FinCat, FunctorMap, NatTransMap,
};

/// An adjunction `left ⊣ right` presented by unit and counit.
///
/// `left : C -> X`, `right : X -> C`, `unit : 1_C ⇒ right∘left`,
/// `counit : left∘right ⇒ 1_X`.  Shape errors are structural; the triangle
/// identities and the naturality of both transformations are laws reported
/// by [`validate_adjunction`].
#[derive(Debug, Clone)]
pub struct Adjunction {
    name: String,
    left: FunctorMap,
    right: FunctorMap,
    unit: NatTransMap,
    counit: NatTransMap,
}

impl PartialEq for Adjunction {
    fn eq(&self, other: &Self) -> bool {
        self.left == other.left
            && self.right == other.right
            && self.unit == other.unit
            && self.counit == other.counit
    }
}

impl Eq for Adjunction {}

impl Adjunction {
    pub fn new(
        name: impl Into<String>,
        left: FunctorMap,
        right: FunctorMap,
        unit: NatTransMap,
        counit: NatTransMap,
    ) -> Result<Adjunction> {
        let name = name.into();
        if left.dom() != right.cod() || left.cod() != right.dom() {
            return Err(Error::structural(format!(
                "adjunction {}: functors are not opposed",
                name
            )));
        }
        let rl = crate::fincat::compose_functors(&right, &left)?;
        let lr = crate::fincat::compose_functors(&left, &right)?;
        if !unit.source().is_identity_on(left.dom()) || unit.target() != &rl {
            return Err(Error::structural(format!(
                "adjunction {}: unit does not run 1 ⇒ right∘left",
                name
            )));
        }
        if counit.source() != &lr || !counit.target().is_identity_on(left.cod()) {
            return Err(Error::structural(format!(
                "adjunction {}: counit does not run left∘right ⇒ 1",
                name
            )));
        }
        Ok(Adjunction {
            name,
            left,
            right,
            unit,
            counit,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn left(&self) -> &FunctorMap {
        &self.left
    }

    pub fn right(&self) -> &FunctorMap {
        &self.right
    }

    pub fn unit(&self) -> &NatTransMap {
        &self.unit
    }

    pub fn counit(&self) -> &NatTransMap {
        &self.counit
    }

    /// Domain of the left adjoint.
    pub fn base(&self) -> &Arc<FinCat> {
        self.left.dom()
    }

    /// Codomain of the left adjoint.
    pub fn apex(&self) -> &Arc<FinCat> {
        self.left.cod()
    }
}

/// Naturality of unit and counit plus the two triangle identities,
/// `counit·left ∘ left·unit = 1_left` and `right·counit ∘ unit·right = 1_right`.
pub fn validate_adjunction(adj: &Adjunction) -> CheckReport {
    let mut report = CheckReport::new(adj.name.clone());
    report.merge(validate_nat_trans(&adj.unit));
    report.merge(validate_nat_trans(&adj.counit));
    let base = adj.base();
    let apex = adj.apex();
    for o in base.objects() {
        let lo = adj.left.obj(o);
        let first = adj.left.mor(adj.unit.component(o));
        let second = adj.counit.component(lo);
        if apex.compose(second, first) != Some(apex.identity(lo)) {
            report.push(Violation::new(
                "triangle-left",
                vec![base.object_id(o).to_string()],
                format!(
                    "counit∘left(unit) at {} is not the identity",
                    base.object_id(o)
                ),
            ));
        }
    }
    for x in apex.objects() {
        let rx = adj.right.obj(x);
        let first = adj.unit.component(rx);
        let second = adj.right.mor(adj.counit.component(x));
        if base.compose(second, first) != Some(base.identity(rx)) {
            report.push(Violation::new(
                "triangle-right",
                vec![apex.object_id(x).to_string()],
                format!(
                    "right(counit)∘unit at {} is not the identity",
                    apex.object_id(x)
                ),
            ));
        }
    }
    report.finish()
}

pub fn identity_adjunction(cat: &Arc<FinCat>) -> Adjunction {
    let id = identity_functor(cat);
    Adjunction {
        name: format!("1⊣1_{}", cat.name()),
        left: id.clone(),
        right: id.clone(),
        unit: identity_nat(&id),
        counit: identity_nat(&id),
    }
}

/// Componentwise product `left×left' ⊣ right×right'`.
pub fn product_adjunction(
    a: &Adjunction,
    b: &Adjunction,
    limits: &Limits,
) -> Result<Adjunction> {
    let base = Arc::new(product_category(a.base(), b.base(), limits)?);
    let apex = Arc::new(product_category(a.apex(), b.apex(), limits)?);
    let left = product_functor(&a.left, &b.left, &base, &apex)?;
    let right = product_functor(&a.right, &b.right, &apex, &base)?;
    let unit = product_nat(&a.unit, &b.unit, &base, &base)?
        .rename(format!("({}×{})", a.unit.name(), b.unit.name()));
    let counit = product_nat(&a.counit, &b.counit, &apex, &apex)?;
    // The product of identity functors carries identity tables, so the
    // shape checks in `new` accept the componentwise unit and counit.
    Adjunction::new(
        format!("({}×{})", a.name, b.name),
        left,
        right,
        unit,
        counit,
    )
}

/// The opposite adjunction `right^op ⊣ left^op`, with unit and counit
/// exchanged and reversed.
pub fn op_adjunction(adj: &Adjunction) -> Result<Adjunction> {
    let op_base = Arc::new(op_category(adj.base()));
    let op_apex = Arc::new(op_category(adj.apex()));
    let left = op_functor(&adj.right, &op_apex, &op_base)?;
    let right = op_functor(&adj.left, &op_base, &op_apex)?;
    let unit = op_nat(&adj.counit, &op_apex, &op_apex)?;
    let counit = op_nat(&adj.unit, &op_base, &op_base)?;
    Adjunction::new(format!("{}^op", adj.name), left, right, unit, counit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{identity_functor, FunctorMap, NatTransMap};
    use crate::Limits;

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

    /// One object carrying the group of order two.
    fn z2() -> Arc<FinCat> {
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
            .unwrap()
    }

    /// Collapse the order onto the terminal object, left adjoint to
    /// picking out the top element.
    fn reflection(c: &Arc<FinCat>, pt: &Arc<FinCat>) -> Adjunction {
        let left = FunctorMap::from_tables(
            "collapse".into(),
            c.clone(),
            pt.clone(),
            vec![0, 0],
            vec![0, 0, 0],
        );
        let right = FunctorMap::from_tables("pick1".into(), pt.clone(), c.clone(), vec![1], vec![1]);
        let unit = NatTransMap::from_components(
            "unit",
            identity_functor(c),
            crate::fincat::compose_functors(&right, &left).unwrap(),
            vec![2, 1],
        )
        .unwrap();
        let counit = NatTransMap::from_components(
            "counit",
            crate::fincat::compose_functors(&left, &right).unwrap(),
            identity_functor(pt),
            vec![0],
        )
        .unwrap();
        Adjunction::new("collapse⊣pick1", left, right, unit, counit).unwrap()
    }

    #[test]
    fn order_reflections_satisfy_the_triangles() {
        let adj = reflection(&chain2(), &one());
        assert!(validate_adjunction(&adj).passed());
        let opposite = op_adjunction(&adj).unwrap();
        assert!(validate_adjunction(&opposite).passed());
        // Opposing twice restores the original, left and right restored too.
        assert_eq!(op_adjunction(&opposite).unwrap(), adj);
    }

    #[test]
    fn twisted_units_break_the_triangles() {
        let c = z2();
        let id = identity_functor(&c);
        let twisted = NatTransMap::from_components("twist", id.clone(), id.clone(), vec![1]).unwrap();
        let straight = identity_nat(&id);
        let adj = Adjunction::new("twisted", id.clone(), id, twisted, straight).unwrap();
        let report = validate_adjunction(&adj);
        assert!(report.violations.iter().any(|v| v.law == "triangle-left"));
        assert!(report.violations.iter().any(|v| v.law == "triangle-right"));
    }

    #[test]
    fn identity_and_product_adjunctions_agree() {
        let c = chain2();
        let p = one();
        let id_c = identity_adjunction(&c);
        assert!(validate_adjunction(&id_c).passed());
        let prod = product_adjunction(&id_c, &identity_adjunction(&p), &Limits::default()).unwrap();
        assert!(validate_adjunction(&prod).passed());
        let both = Arc::new(
            crate::fincat::product_category(&c, &p, &Limits::default()).unwrap(),
        );
        assert_eq!(prod, identity_adjunction(&both));
    }
}
