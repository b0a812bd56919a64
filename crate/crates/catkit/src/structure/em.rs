use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Limits, Result};
use crate::fincat::{
    compose_functors, identity_functor, FinCat, FunctorMap, MorIx, NatTransMap, ObjIx,
};

use super::adjunction::{validate_adjunction, Adjunction};
use super::monad::{monad_from_adjunction, validate_monad, Monad};

/// An algebra `(M, k : S M -> M)` referenced by base-category indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub obj: ObjIx,
    pub structure: MorIx,
    pub id: String,
}

/// The Eilenberg–Moore resolution of a monad: the category of algebras,
/// free and forgetful functors, the adjunction between them, and the link
/// from every algebra morphism back to its underlying base morphism.
#[derive(Debug, Clone)]
pub struct EmBundle {
    monad: Monad,
    category: Arc<FinCat>,
    algebras: Vec<Algebra>,
    underlying: Vec<MorIx>,
    mor_endpoints: Vec<(usize, usize)>,
    algebra_lookup: HashMap<(ObjIx, MorIx), usize>,
    mor_lookup: HashMap<(usize, usize, MorIx), MorIx>,
    free: FunctorMap,
    forget: FunctorMap,
    adjunction: Adjunction,
}

impl EmBundle {
    pub fn monad(&self) -> &Monad {
        &self.monad
    }

    pub fn category(&self) -> &Arc<FinCat> {
        &self.category
    }

    pub fn algebras(&self) -> &[Algebra] {
        &self.algebras
    }

    pub fn algebra(&self, ix: usize) -> &Algebra {
        &self.algebras[ix]
    }

    pub fn algebra_ix(&self, obj: ObjIx, structure: MorIx) -> Option<usize> {
        self.algebra_lookup.get(&(obj, structure)).copied()
    }

    /// Base morphism underlying the `m`-th algebra morphism.
    pub fn underlying(&self, m: MorIx) -> MorIx {
        self.underlying[m]
    }

    /// Algebra morphism with the given endpoints and underlying morphism.
    pub fn mor_with_underlying(&self, dom: usize, cod: usize, base: MorIx) -> Option<MorIx> {
        self.mor_lookup.get(&(dom, cod, base)).copied()
    }

    pub fn free(&self) -> &FunctorMap {
        &self.free
    }

    pub fn forget(&self) -> &FunctorMap {
        &self.forget
    }

    pub fn adjunction(&self) -> &Adjunction {
        &self.adjunction
    }
}

fn algebra_id(base: &FinCat, obj: ObjIx, structure: MorIx) -> String {
    format!("({}|{})", base.object_id(obj), base.morphism_id(structure))
}

/// Enumerate all algebras and algebra morphisms of `monad` and assemble the
/// resolution.  The input monad is law-checked first; the resulting
/// adjunction is re-validated before being returned.
pub fn em_category(monad: &Monad, limits: &Limits) -> Result<EmBundle> {
    validate_monad(monad).into_result()?;
    let base = monad.base().clone();
    let s = monad.endo();
    let name = format!("{}^{}", base.name(), monad.name());

    let mut algebras = Vec::new();
    for m in base.objects() {
        for k in base.hom(s.obj(m), m) {
            let unit_law = base.compose(k, monad.unit().component(m)) == Some(base.identity(m));
            let assoc_law = base.compose(k, monad.mult().component(m))
                == base.compose(k, s.mor(k));
            if unit_law && assoc_law && base.compose(k, s.mor(k)).is_some() {
                algebras.push(Algebra {
                    obj: m,
                    structure: k,
                    id: algebra_id(&base, m, k),
                });
            }
        }
    }

    // Count morphisms before materialising anything so the size guard can
    // veto the construction.
    let mut raw_mors: Vec<(usize, usize, MorIx)> = Vec::new();
    for (ai, a) in algebras.iter().enumerate() {
        for (bi, b) in algebras.iter().enumerate() {
            for m in base.hom(a.obj, b.obj) {
                if base.compose(b.structure, s.mor(m)) == base.compose(m, a.structure) {
                    raw_mors.push((ai, bi, m));
                }
            }
        }
    }
    limits.check(&name, raw_mors.len())?;

    let mut builder = FinCat::builder(name.clone());
    for a in &algebras {
        builder = builder.object(a.id.clone());
    }
    let em_mor_id = |ai: usize, bi: usize, m: MorIx| {
        format!(
            "{}:{}->{}",
            base.morphism_id(m),
            algebras[ai].id,
            algebras[bi].id
        )
    };
    for &(ai, bi, m) in &raw_mors {
        builder = builder.morphism(
            em_mor_id(ai, bi, m),
            algebras[ai].id.clone(),
            algebras[bi].id.clone(),
        );
    }
    for (ai, a) in algebras.iter().enumerate() {
        builder = builder.identity(a.id.clone(), em_mor_id(ai, ai, base.identity(a.obj)));
    }
    let mor_positions: HashMap<(usize, usize, MorIx), usize> = raw_mors
        .iter()
        .enumerate()
        .map(|(ix, &key)| (key, ix))
        .collect();
    for &(ai, bi, m) in &raw_mors {
        for &(bj, ci, n) in &raw_mors {
            if bj != bi {
                continue;
            }
            let Some(nm) = base.compose(n, m) else {
                continue;
            };
            // The composite of algebra morphisms is again one; a missing
            // entry here would be an engine bug surfaced by validation.
            if mor_positions.contains_key(&(ai, ci, nm)) {
                builder = builder.composite(
                    em_mor_id(bj, ci, n),
                    em_mor_id(ai, bi, m),
                    em_mor_id(ai, ci, nm),
                );
            }
        }
    }
    let category = builder.build()?;
    let report = category.validate();
    if !report.passed() {
        return Err(Error::internal(format!(
            "algebra category {} failed validation: {}",
            name,
            report.first_line()
        )));
    }
    let category = Arc::new(category);

    let algebra_lookup: HashMap<(ObjIx, MorIx), usize> = algebras
        .iter()
        .enumerate()
        .map(|(ix, a)| ((a.obj, a.structure), ix))
        .collect();
    let underlying: Vec<MorIx> = raw_mors.iter().map(|&(_, _, m)| m).collect();
    let mor_endpoints: Vec<(usize, usize)> = raw_mors.iter().map(|&(a, b, _)| (a, b)).collect();
    let mor_lookup: HashMap<(usize, usize, MorIx), MorIx> = mor_positions.clone();

    let forget = FunctorMap::from_tables(
        format!("U^{}", monad.name()),
        category.clone(),
        base.clone(),
        algebras.iter().map(|a| a.obj).collect(),
        underlying.clone(),
    );
    let free_obj: Vec<ObjIx> = base
        .objects()
        .map(|m| {
            algebra_lookup
                .get(&(s.obj(m), monad.mult().component(m)))
                .copied()
                .ok_or_else(|| {
                    Error::internal(format!(
                        "free algebra on {} is missing",
                        base.object_id(m)
                    ))
                })
        })
        .collect::<Result<_>>()?;
    let free_mor: Vec<MorIx> = base
        .morphisms()
        .map(|m| {
            let (a, b) = (free_obj[base.dom(m)], free_obj[base.cod(m)]);
            mor_lookup.get(&(a, b, s.mor(m))).copied().ok_or_else(|| {
                Error::internal(format!(
                    "free image of {} is not an algebra morphism",
                    base.morphism_id(m)
                ))
            })
        })
        .collect::<Result<_>>()?;
    let free = FunctorMap::from_tables(
        format!("F^{}", monad.name()),
        base.clone(),
        category.clone(),
        free_obj,
        free_mor,
    );

    let unit = NatTransMap::from_components(
        format!("unit^{}", monad.name()),
        identity_functor(&base),
        compose_functors(&forget, &free)?,
        monad.unit().components().to_vec(),
    )?;
    let counit_components = algebras
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let fu = algebra_lookup[&(s.obj(a.obj), monad.mult().component(a.obj))];
            mor_lookup
                .get(&(fu, ai, a.structure))
                .copied()
                .ok_or_else(|| {
                    Error::internal(format!(
                        "structure map of {} is not an algebra morphism",
                        a.id
                    ))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let counit = NatTransMap::from_components(
        format!("counit^{}", monad.name()),
        compose_functors(&free, &forget)?,
        identity_functor(&category),
        counit_components,
    )?;
    let adjunction = Adjunction::new(
        format!("F^{m}⊣U^{m}", m = monad.name()),
        free.clone(),
        forget.clone(),
        unit,
        counit,
    )?;
    let adj_report = validate_adjunction(&adjunction);
    if !adj_report.passed() {
        return Err(Error::internal(format!(
            "algebra adjunction for {} failed validation: {}",
            monad.name(),
            adj_report.first_line()
        )));
    }

    Ok(EmBundle {
        monad: monad.clone(),
        category,
        algebras,
        underlying,
        mor_endpoints,
        algebra_lookup,
        mor_lookup,
        free,
        forget,
        adjunction,
    })
}

impl EmBundle {
    pub fn mor_endpoints(&self, m: MorIx) -> (usize, usize) {
        self.mor_endpoints[m]
    }
}

/// Comparison functor from the apex of `adj` into the algebra category of
/// its induced monad: `D ↦ (right D, right(counit_D))`.
pub fn comparison_functor(adj: &Adjunction, bundle: &EmBundle) -> Result<FunctorMap> {
    let induced = monad_from_adjunction(adj)?;
    if &induced != bundle.monad() {
        return Err(Error::precondition(format!(
            "comparison for {}: resolution is of a different monad",
            adj.name()
        )));
    }
    let apex = adj.apex();
    let obj_map = apex
        .objects()
        .map(|d| {
            let m = adj.right().obj(d);
            let k = adj.right().mor(adj.counit().component(d));
            bundle.algebra_ix(m, k).ok_or_else(|| {
                Error::internal(format!(
                    "comparison image of {} is not an algebra",
                    apex.object_id(d)
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mor_map = apex
        .morphisms()
        .map(|d| {
            let (a, b) = (obj_map[apex.dom(d)], obj_map[apex.cod(d)]);
            bundle
                .mor_with_underlying(a, b, adj.right().mor(d))
                .ok_or_else(|| {
                    Error::internal(format!(
                        "comparison image of {} is not an algebra morphism",
                        apex.morphism_id(d)
                    ))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let functor = FunctorMap::from_tables(
        format!("cmp({})", adj.name()),
        apex.clone(),
        bundle.category().clone(),
        obj_map,
        mor_map,
    );
    let report = crate::fincat::validate_functor(&functor);
    if !report.passed() {
        return Err(Error::internal(format!(
            "comparison functor for {} failed validation: {}",
            adj.name(),
            report.first_line()
        )));
    }
    Ok(functor)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionAnalysis {
    pub reflects: bool,
    /// Morphisms whose image is invertible while they are not, sorted.
    pub witnesses: Vec<String>,
}

/// Does `f` reflect isomorphisms?  Exhaustive over the domain.
pub fn reflects_isomorphisms(f: &FunctorMap) -> ReflectionAnalysis {
    let mut witnesses: Vec<String> = f
        .dom()
        .morphisms()
        .filter(|&m| f.cod().is_iso(f.mor(m)) && !f.dom().is_iso(m))
        .map(|m| f.dom().morphism_id(m).to_string())
        .collect();
    witnesses.sort();
    ReflectionAnalysis {
        reflects: witnesses.is_empty(),
        witnesses,
    }
}
