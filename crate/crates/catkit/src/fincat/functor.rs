use std::collections::HashMap;
use std::sync::Arc;

use crate::check::{CheckReport, Violation};
use crate::error::{Error, Result};

use super::category::{FinCat, MorIx, ObjIx};
use super::pair_ix;

/// A functor as a total pair of index tables.
///
/// Equality ignores the display name: two functors are equal when their
/// categories and both tables agree entrywise.
#[derive(Debug, Clone)]
pub struct FunctorMap {
    name: String,
    dom: Arc<FinCat>,
    cod: Arc<FinCat>,
    obj_map: Vec<ObjIx>,
    mor_map: Vec<MorIx>,
}

impl PartialEq for FunctorMap {
    fn eq(&self, other: &Self) -> bool {
        self.obj_map == other.obj_map
            && self.mor_map == other.mor_map
            && same_cat(&self.dom, &other.dom)
            && same_cat(&self.cod, &other.cod)
    }
}

impl Eq for FunctorMap {}

pub(crate) fn same_cat(a: &Arc<FinCat>, b: &Arc<FinCat>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl FunctorMap {
    /// Resolve a functor given by identifier assignments.  Structural
    /// checks only; laws are [`validate_functor`]'s business.
    pub fn new(
        name: impl Into<String>,
        dom: Arc<FinCat>,
        cod: Arc<FinCat>,
        obj_assign: &HashMap<String, String>,
        mor_assign: &HashMap<String, String>,
    ) -> Result<FunctorMap> {
        let name = name.into();
        let mut obj_map = Vec::with_capacity(dom.object_count());
        for o in dom.objects() {
            let src = dom.object_id(o);
            let dst = obj_assign.get(src).ok_or_else(|| {
                Error::structural(format!("functor {}: object {:?} has no image", name, src))
            })?;
            obj_map.push(cod.object_ix(dst).ok_or_else(|| {
                Error::structural(format!(
                    "functor {}: object {:?} maps to unknown {:?}",
                    name, src, dst
                ))
            })?);
        }
        let mut mor_map = Vec::with_capacity(dom.morphism_count());
        for m in dom.morphisms() {
            let src = dom.morphism_id(m);
            let dst = mor_assign.get(src).ok_or_else(|| {
                Error::structural(format!("functor {}: morphism {:?} has no image", name, src))
            })?;
            mor_map.push(cod.morphism_ix(dst).ok_or_else(|| {
                Error::structural(format!(
                    "functor {}: morphism {:?} maps to unknown {:?}",
                    name, src, dst
                ))
            })?);
        }
        Ok(FunctorMap {
            name,
            dom,
            cod,
            obj_map,
            mor_map,
        })
    }

    pub(crate) fn from_tables(
        name: String,
        dom: Arc<FinCat>,
        cod: Arc<FinCat>,
        obj_map: Vec<ObjIx>,
        mor_map: Vec<MorIx>,
    ) -> FunctorMap {
        debug_assert_eq!(obj_map.len(), dom.object_count());
        debug_assert_eq!(mor_map.len(), dom.morphism_count());
        FunctorMap {
            name,
            dom,
            cod,
            obj_map,
            mor_map,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dom(&self) -> &Arc<FinCat> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FinCat> {
        &self.cod
    }

    pub fn obj(&self, o: ObjIx) -> ObjIx {
        self.obj_map[o]
    }

    pub fn mor(&self, m: MorIx) -> MorIx {
        self.mor_map[m]
    }

    pub fn obj_table(&self) -> &[ObjIx] {
        &self.obj_map
    }

    pub fn mor_table(&self) -> &[MorIx] {
        &self.mor_map
    }

    pub fn is_identity_on(&self, cat: &Arc<FinCat>) -> bool {
        same_cat(&self.dom, cat)
            && same_cat(&self.cod, cat)
            && self.obj_map.iter().enumerate().all(|(i, &v)| i == v)
            && self.mor_map.iter().enumerate().all(|(i, &v)| i == v)
    }
}

/// Functor laws: endpoint compatibility, identity preservation, and
/// preservation of every composite present in the domain's table.
pub fn validate_functor(f: &FunctorMap) -> CheckReport {
    let mut report = CheckReport::new(f.name.clone());
    let (dom, cod) = (f.dom(), f.cod());
    for m in dom.morphisms() {
        let img = f.mor(m);
        if cod.dom(img) != f.obj(dom.dom(m)) || cod.cod(img) != f.obj(dom.cod(m)) {
            report.push(Violation::new(
                "functor-endpoints",
                vec![
                    dom.morphism_id(m).to_string(),
                    cod.morphism_id(img).to_string(),
                ],
                format!(
                    "image of {} does not run {} -> {}",
                    dom.morphism_id(m),
                    cod.object_id(f.obj(dom.dom(m))),
                    cod.object_id(f.obj(dom.cod(m)))
                ),
            ));
        }
    }
    for o in dom.objects() {
        if f.mor(dom.identity(o)) != cod.identity(f.obj(o)) {
            report.push(Violation::new(
                "functor-identity",
                vec![
                    dom.object_id(o).to_string(),
                    cod.morphism_id(f.mor(dom.identity(o))).to_string(),
                ],
                format!("identity of {} is not sent to an identity", dom.object_id(o)),
            ));
        }
    }
    for g in dom.morphisms() {
        for h in dom.morphisms() {
            if dom.cod(h) != dom.dom(g) {
                continue;
            }
            let Some(gh) = dom.compose(g, h) else {
                continue;
            };
            match cod.compose(f.mor(g), f.mor(h)) {
                Some(img) if img == f.mor(gh) => {}
                _ => report.push(Violation::new(
                    "functor-composition",
                    vec![
                        dom.morphism_id(g).to_string(),
                        dom.morphism_id(h).to_string(),
                    ],
                    format!(
                        "F({}∘{}) differs from F({})∘F({})",
                        dom.morphism_id(g),
                        dom.morphism_id(h),
                        dom.morphism_id(g),
                        dom.morphism_id(h)
                    ),
                )),
            }
        }
    }
    report.finish()
}

fn assert_valid(f: FunctorMap) -> Result<FunctorMap> {
    let report = validate_functor(&f);
    if report.passed() {
        Ok(f)
    } else {
        Err(Error::internal(format!(
            "derived functor {} failed validation: {}",
            f.name,
            report.first_line()
        )))
    }
}

pub fn identity_functor(cat: &Arc<FinCat>) -> FunctorMap {
    FunctorMap::from_tables(
        format!("1_{}", cat.name()),
        cat.clone(),
        cat.clone(),
        (0..cat.object_count()).collect(),
        (0..cat.morphism_count()).collect(),
    )
}

/// `g ∘ f`, `f` applied first.  Requires `f.cod = g.dom` (structurally).
pub fn compose_functors(g: &FunctorMap, f: &FunctorMap) -> Result<FunctorMap> {
    if !same_cat(f.cod(), g.dom()) {
        return Err(Error::structural(format!(
            "cannot compose {} after {}: middle categories differ ({} vs {})",
            g.name,
            f.name,
            f.cod().name(),
            g.dom().name()
        )));
    }
    Ok(FunctorMap::from_tables(
        format!("{}∘{}", g.name, f.name),
        f.dom.clone(),
        g.cod.clone(),
        f.obj_map.iter().map(|&o| g.obj(o)).collect(),
        f.mor_map.iter().map(|&m| g.mor(m)).collect(),
    ))
}

pub fn constant_functor(dom: &Arc<FinCat>, cod: &Arc<FinCat>, at: ObjIx) -> FunctorMap {
    FunctorMap::from_tables(
        format!("const_{}", cod.object_id(at)),
        dom.clone(),
        cod.clone(),
        vec![at; dom.object_count()],
        vec![cod.identity(at); dom.morphism_count()],
    )
}

/// Same tables read against the opposite categories.
pub fn op_functor(f: &FunctorMap, op_dom: &Arc<FinCat>, op_cod: &Arc<FinCat>) -> Result<FunctorMap> {
    let expect_dom = super::op_category(f.dom());
    let expect_cod = super::op_category(f.cod());
    if **op_dom != expect_dom || **op_cod != expect_cod {
        return Err(Error::structural(format!(
            "op_functor {}: supplied categories are not the opposites of its endpoints",
            f.name
        )));
    }
    Ok(FunctorMap::from_tables(
        format!("{}^op", f.name),
        op_dom.clone(),
        op_cod.clone(),
        f.obj_map.clone(),
        f.mor_map.clone(),
    ))
}

/// `f×g` on the product categories, which must use the pair layout of
/// [`super::product_category`].
pub fn product_functor(
    f: &FunctorMap,
    g: &FunctorMap,
    dom: &Arc<FinCat>,
    cod: &Arc<FinCat>,
) -> Result<FunctorMap> {
    let obj_map: Vec<ObjIx> = (0..f.dom().object_count())
        .flat_map(|x| {
            (0..g.dom().object_count())
                .map(move |y| pair_ix(f.obj(x), g.obj(y), g.cod().object_count()))
        })
        .collect();
    let mor_map: Vec<MorIx> = (0..f.dom().morphism_count())
        .flat_map(|m| {
            (0..g.dom().morphism_count())
                .map(move |n| pair_ix(f.mor(m), g.mor(n), g.cod().morphism_count()))
        })
        .collect();
    if dom.object_count() != f.dom().object_count() * g.dom().object_count()
        || cod.object_count() != f.cod().object_count() * g.cod().object_count()
    {
        return Err(Error::structural(format!(
            "product functor {}×{}: categories do not match the factors",
            f.name, g.name
        )));
    }
    assert_valid(FunctorMap::from_tables(
        format!("({}×{})", f.name, g.name),
        dom.clone(),
        cod.clone(),
        obj_map,
        mor_map,
    ))
}

/// `⟨f,g⟩ : Z -> A×B` for parallel-domain `f : Z -> A`, `g : Z -> B`.
pub fn pairing(f: &FunctorMap, g: &FunctorMap, cod: &Arc<FinCat>) -> Result<FunctorMap> {
    if !same_cat(f.dom(), g.dom()) {
        return Err(Error::structural(format!(
            "pairing ⟨{},{}⟩: domains differ",
            f.name, g.name
        )));
    }
    let obj_map = (0..f.dom().object_count())
        .map(|z| pair_ix(f.obj(z), g.obj(z), g.cod().object_count()))
        .collect();
    let mor_map = (0..f.dom().morphism_count())
        .map(|m| pair_ix(f.mor(m), g.mor(m), g.cod().morphism_count()))
        .collect();
    assert_valid(FunctorMap::from_tables(
        format!("⟨{},{}⟩", f.name, g.name),
        f.dom.clone(),
        cod.clone(),
        obj_map,
        mor_map,
    ))
}
