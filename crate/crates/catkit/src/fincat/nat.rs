use std::collections::HashMap;
use std::sync::Arc;

use crate::check::{CheckReport, Violation};
use crate::error::{Error, Result};

use super::category::{FinCat, MorIx};
use super::functor::{same_cat, FunctorMap};
use super::pair_ix;

/// A transformation between parallel functors, one component per object of
/// the common domain.  Component endpoints are enforced structurally at
/// construction; naturality is a law checked by [`validate_nat_trans`].
#[derive(Debug, Clone)]
pub struct NatTransMap {
    name: String,
    source: FunctorMap,
    target: FunctorMap,
    components: Vec<MorIx>,
}

impl PartialEq for NatTransMap {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
            && self.source == other.source
            && self.target == other.target
    }
}

impl Eq for NatTransMap {}

impl NatTransMap {
    pub fn new(
        name: impl Into<String>,
        source: FunctorMap,
        target: FunctorMap,
        assignments: &HashMap<String, String>,
    ) -> Result<NatTransMap> {
        let name = name.into();
        let dom = source.dom().clone();
        let components = dom
            .objects()
            .map(|o| {
                let id = dom.object_id(o);
                let chosen = assignments.get(id).ok_or_else(|| {
                    Error::structural(format!(
                        "transformation {}: no component at object {:?}",
                        name, id
                    ))
                })?;
                source.cod().morphism_ix(chosen).ok_or_else(|| {
                    Error::structural(format!(
                        "transformation {}: component at {:?} is unknown morphism {:?}",
                        name, id, chosen
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_components(name, source, target, components)
    }

    /// Structural assembly from already-resolved component indices.
    pub fn from_components(
        name: impl Into<String>,
        source: FunctorMap,
        target: FunctorMap,
        components: Vec<MorIx>,
    ) -> Result<NatTransMap> {
        let name = name.into();
        if !same_cat(source.dom(), target.dom()) || !same_cat(source.cod(), target.cod()) {
            return Err(Error::structural(format!(
                "transformation {}: source and target functors are not parallel",
                name
            )));
        }
        if components.len() != source.dom().object_count() {
            return Err(Error::structural(format!(
                "transformation {}: {} components for {} objects",
                name,
                components.len(),
                source.dom().object_count()
            )));
        }
        let cod = source.cod();
        for (o, &c) in components.iter().enumerate() {
            if cod.dom(c) != source.obj(o) || cod.cod(c) != target.obj(o) {
                return Err(Error::structural(format!(
                    "transformation {}: component {} at {:?} does not run {:?} -> {:?}",
                    name,
                    cod.morphism_id(c),
                    source.dom().object_id(o),
                    cod.object_id(source.obj(o)),
                    cod.object_id(target.obj(o)),
                )));
            }
        }
        Ok(NatTransMap {
            name,
            source,
            target,
            components,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn source(&self) -> &FunctorMap {
        &self.source
    }

    pub fn target(&self) -> &FunctorMap {
        &self.target
    }

    /// Category the components live in.
    pub fn cod(&self) -> &Arc<FinCat> {
        self.source.cod()
    }

    /// Category indexing the components.
    pub fn dom(&self) -> &Arc<FinCat> {
        self.source.dom()
    }

    pub fn component(&self, o: usize) -> MorIx {
        self.components[o]
    }

    pub fn components(&self) -> &[MorIx] {
        &self.components
    }

    pub fn is_identity_family(&self) -> bool {
        self.components
            .iter()
            .enumerate()
            .all(|(o, &c)| self.cod().identity(self.source.obj(o)) == c)
    }
}

/// Naturality: `t_B ∘ S(f) = T(f) ∘ t_A` for every `f : A -> B`.
pub fn validate_nat_trans(t: &NatTransMap) -> CheckReport {
    let mut report = CheckReport::new(t.name().to_string());
    let dom = t.dom();
    let cod = t.cod();
    for f in dom.morphisms() {
        let (a, b) = (dom.dom(f), dom.cod(f));
        let lhs = cod.compose(t.component(b), t.source.mor(f));
        let rhs = cod.compose(t.target.mor(f), t.component(a));
        if lhs.is_none() || lhs != rhs {
            report.push(Violation::new(
                "naturality",
                vec![
                    dom.morphism_id(f).to_string(),
                    cod.morphism_id(t.component(a)).to_string(),
                    cod.morphism_id(t.component(b)).to_string(),
                ],
                format!(
                    "square at {} does not commute",
                    dom.morphism_id(f)
                ),
            ));
        }
    }
    report.finish()
}

pub(crate) fn assert_natural(t: NatTransMap) -> Result<NatTransMap> {
    let report = validate_nat_trans(&t);
    if report.passed() {
        Ok(t)
    } else {
        Err(Error::internal(format!(
            "derived transformation {} is not natural: {}",
            t.name(),
            report.first_line()
        )))
    }
}

pub fn identity_nat(f: &FunctorMap) -> NatTransMap {
    let components = (0..f.dom().object_count())
        .map(|o| f.cod().identity(f.obj(o)))
        .collect();
    NatTransMap {
        name: format!("1_{}", f.name()),
        source: f.clone(),
        target: f.clone(),
        components,
    }
}

/// `s` after `t` (vertical composition): `t : F ⇒ G`, `s : G ⇒ H`.
pub fn vcompose(s: &NatTransMap, t: &NatTransMap) -> Result<NatTransMap> {
    if t.target != s.source {
        return Err(Error::structural(format!(
            "vertical composition {}∘{}: middle functors differ",
            s.name, t.name
        )));
    }
    let cod = t.cod();
    let components = t
        .components
        .iter()
        .zip(&s.components)
        .enumerate()
        .map(|(o, (&a, &b))| {
            cod.compose(b, a).ok_or_else(|| {
                Error::structural(format!(
                    "vertical composition {}∘{}: components at {:?} do not compose",
                    s.name,
                    t.name,
                    t.dom().object_id(o)
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NatTransMap {
        name: format!("{}∘{}", s.name, t.name),
        source: t.source.clone(),
        target: s.target.clone(),
        components,
    })
}

/// `F t` : post-compose with `F`, components `F(t_A)`.
pub fn whisker_left(f: &FunctorMap, t: &NatTransMap) -> Result<NatTransMap> {
    if !same_cat(t.cod(), f.dom()) {
        return Err(Error::structural(format!(
            "whisker {}·{}: functor domain does not match",
            f.name(),
            t.name
        )));
    }
    Ok(NatTransMap {
        name: format!("{}{}", f.name(), t.name),
        source: super::compose_functors(f, &t.source)?,
        target: super::compose_functors(f, &t.target)?,
        components: t.components.iter().map(|&c| f.mor(c)).collect(),
    })
}

/// `t F` : pre-compose with `F`, components `t_{F(A)}`.
pub fn whisker_right(t: &NatTransMap, f: &FunctorMap) -> Result<NatTransMap> {
    if !same_cat(f.cod(), t.dom()) {
        return Err(Error::structural(format!(
            "whisker {}·{}: functor codomain does not match",
            t.name,
            f.name()
        )));
    }
    Ok(NatTransMap {
        name: format!("{}{}", t.name, f.name()),
        source: super::compose_functors(&t.source, f)?,
        target: super::compose_functors(&t.target, f)?,
        components: (0..f.dom().object_count())
            .map(|o| t.component(f.obj(o)))
            .collect(),
    })
}

/// `s×t` on product categories following the pair layout.
pub fn product_nat(
    s: &NatTransMap,
    t: &NatTransMap,
    dom: &Arc<FinCat>,
    cod: &Arc<FinCat>,
) -> Result<NatTransMap> {
    let source = super::product_functor(&s.source, &t.source, dom, cod)?;
    let target = super::product_functor(&s.target, &t.target, dom, cod)?;
    let components = (0..s.dom().object_count())
        .flat_map(|x| {
            (0..t.dom().object_count())
                .map(move |y| pair_ix(s.component(x), t.component(y), t.cod().morphism_count()))
        })
        .collect();
    NatTransMap::from_components(format!("({}×{})", s.name, t.name), source, target, components)
}

/// Same components indexed over the opposites; source and target swap.
pub fn op_nat(
    t: &NatTransMap,
    op_dom: &Arc<FinCat>,
    op_cod: &Arc<FinCat>,
) -> Result<NatTransMap> {
    let source = super::op_functor(&t.target, op_dom, op_cod)?;
    let target = super::op_functor(&t.source, op_dom, op_cod)?;
    NatTransMap::from_components(
        format!("{}^op", t.name),
        source,
        target,
        t.components.clone(),
    )
}

#[derive(Debug, Clone)]
pub struct InvertibilityAnalysis {
    pub invertible: bool,
    pub inverse: Option<NatTransMap>,
    /// Object and component identifiers of the first failure.
    pub witness: Option<(String, String)>,
}

/// Componentwise two-sided inverse search, in object order.  On success the
/// inverse family's naturality is re-validated rather than assumed.
pub fn is_invertible(t: &NatTransMap) -> Result<InvertibilityAnalysis> {
    let cod = t.cod();
    let mut inverse_components = Vec::with_capacity(t.components.len());
    for o in t.dom().objects() {
        match cod.inverse_of(t.component(o)) {
            Some(inv) => inverse_components.push(inv),
            None => {
                return Ok(InvertibilityAnalysis {
                    invertible: false,
                    inverse: None,
                    witness: Some((
                        t.dom().object_id(o).to_string(),
                        cod.morphism_id(t.component(o)).to_string(),
                    )),
                })
            }
        }
    }
    let inverse = assert_natural(NatTransMap {
        name: format!("{}⁻¹", t.name),
        source: t.target.clone(),
        target: t.source.clone(),
        components: inverse_components,
    })?;
    Ok(InvertibilityAnalysis {
        invertible: true,
        inverse: Some(inverse),
        witness: None,
    })
}
