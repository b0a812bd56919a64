use std::collections::HashMap;
use std::sync::Arc;

use crate::check::{CheckReport, Violation};
use crate::error::{Error, Limits, Result};

pub type ObjIx = usize;
pub type MorIx = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
struct MorData {
    id: String,
    dom: ObjIx,
    cod: ObjIx,
}

/// A finite category, fully resolved: objects and morphisms are indexed in
/// input order, and the composition table is keyed `(g, f) -> g∘f`.
///
/// Display names are bookkeeping only; [`PartialEq`] compares the identifier
/// tables, not the name.
#[derive(Debug, Clone)]
pub struct FinCat {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<MorData>,
    identities: Vec<MorIx>,
    table: HashMap<(MorIx, MorIx), MorIx>,
    obj_lookup: HashMap<String, ObjIx>,
    mor_lookup: HashMap<String, MorIx>,
}

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.table == other.table
    }
}

impl Eq for FinCat {}

impl FinCat {
    pub fn builder(name: impl Into<String>) -> CatBuilder {
        CatBuilder {
            name: name.into(),
            objects: Vec::new(),
            morphisms: Vec::new(),
            identities: Vec::new(),
            composites: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObjIx> {
        0..self.objects.len()
    }

    pub fn morphisms(&self) -> std::ops::Range<MorIx> {
        0..self.morphisms.len()
    }

    pub fn object_id(&self, o: ObjIx) -> &str {
        &self.objects[o]
    }

    pub fn morphism_id(&self, m: MorIx) -> &str {
        &self.morphisms[m].id
    }

    pub fn object_ix(&self, id: &str) -> Option<ObjIx> {
        self.obj_lookup.get(id).copied()
    }

    pub fn morphism_ix(&self, id: &str) -> Option<MorIx> {
        self.mor_lookup.get(id).copied()
    }

    pub fn dom(&self, m: MorIx) -> ObjIx {
        self.morphisms[m].dom
    }

    pub fn cod(&self, m: MorIx) -> ObjIx {
        self.morphisms[m].cod
    }

    pub fn identity(&self, o: ObjIx) -> MorIx {
        self.identities[o]
    }

    pub fn is_identity(&self, m: MorIx) -> bool {
        self.identities[self.dom(m)] == m && self.dom(m) == self.cod(m)
    }

    /// `g` after `f`; `None` when the pair is not composable or the table
    /// has a gap (gaps are reported by [`FinCat::validate`]).
    pub fn compose(&self, g: MorIx, f: MorIx) -> Option<MorIx> {
        self.table.get(&(g, f)).copied()
    }

    /// Composite of a chain listed outermost-last: `[f, g, h]` is `h∘g∘f`.
    pub fn compose_chain(&self, chain: &[MorIx]) -> Option<MorIx> {
        let mut acc = *chain.first()?;
        for &next in &chain[1..] {
            acc = self.compose(next, acc)?;
        }
        Some(acc)
    }

    pub fn hom(&self, x: ObjIx, y: ObjIx) -> Vec<MorIx> {
        self.morphisms()
            .filter(|&m| self.dom(m) == x && self.cod(m) == y)
            .collect()
    }

    /// Two-sided inverse of `m`, if one exists in the table.
    pub fn inverse_of(&self, m: MorIx) -> Option<MorIx> {
        let (x, y) = (self.dom(m), self.cod(m));
        self.hom(y, x).into_iter().find(|&g| {
            self.compose(g, m) == Some(self.identity(x))
                && self.compose(m, g) == Some(self.identity(y))
        })
    }

    pub fn is_iso(&self, m: MorIx) -> bool {
        self.inverse_of(m).is_some()
    }

    /// Equational laws: identity endpoints, unit laws, totality and
    /// endpoint-correctness of the table, and associativity.
    pub fn validate(&self) -> CheckReport {
        let mut report = CheckReport::new(self.name.clone());
        for o in self.objects() {
            let e = self.identities[o];
            if self.dom(e) != o || self.cod(e) != o {
                report.push(Violation::new(
                    "identity-endpoints",
                    vec![self.objects[o].clone(), self.morphisms[e].id.clone()],
                    format!(
                        "identity of {} is {}: {} -> {}",
                        self.objects[o],
                        self.morphisms[e].id,
                        self.objects[self.dom(e)],
                        self.objects[self.cod(e)]
                    ),
                ));
            }
        }
        for (&(g, f), &gf) in &self.table {
            if self.cod(f) != self.dom(g) {
                report.push(Violation::new(
                    "compose-extraneous",
                    vec![self.morphisms[g].id.clone(), self.morphisms[f].id.clone()],
                    "table entry for a non-composable pair",
                ));
                continue;
            }
            if self.dom(gf) != self.dom(f) || self.cod(gf) != self.cod(g) {
                report.push(Violation::new(
                    "compose-endpoints",
                    vec![
                        self.morphisms[g].id.clone(),
                        self.morphisms[f].id.clone(),
                        self.morphisms[gf].id.clone(),
                    ],
                    "composite has wrong endpoints",
                ));
            }
        }
        for f in self.morphisms() {
            for g in self.morphisms() {
                if self.cod(f) != self.dom(g) {
                    continue;
                }
                let Some(gf) = self.compose(g, f) else {
                    report.push(Violation::new(
                        "compose-missing",
                        vec![self.morphisms[g].id.clone(), self.morphisms[f].id.clone()],
                        "no table entry for a composable pair",
                    ));
                    continue;
                };
                if self.is_identity(f) && gf != g {
                    report.push(Violation::new(
                        "identity-right",
                        vec![self.morphisms[g].id.clone(), self.morphisms[f].id.clone()],
                        format!(
                            "{} ∘ {} = {} but should be {}",
                            self.morphisms[g].id,
                            self.morphisms[f].id,
                            self.morphisms[gf].id,
                            self.morphisms[g].id
                        ),
                    ));
                }
                if self.is_identity(g) && gf != f {
                    report.push(Violation::new(
                        "identity-left",
                        vec![self.morphisms[g].id.clone(), self.morphisms[f].id.clone()],
                        format!(
                            "{} ∘ {} = {} but should be {}",
                            self.morphisms[g].id,
                            self.morphisms[f].id,
                            self.morphisms[gf].id,
                            self.morphisms[f].id
                        ),
                    ));
                }
            }
        }
        // Associativity over every composable triple, using whatever the
        // table says even if earlier checks flagged it.
        for f in self.morphisms() {
            for g in self.morphisms() {
                if self.cod(f) != self.dom(g) {
                    continue;
                }
                let Some(gf) = self.compose(g, f) else {
                    continue;
                };
                for h in self.morphisms() {
                    if self.cod(g) != self.dom(h) {
                        continue;
                    }
                    let lhs = self.compose(h, gf);
                    let rhs = self.compose(h, g).and_then(|hg| self.compose(hg, f));
                    if let (Some(l), Some(r)) = (lhs, rhs) {
                        if l != r {
                            report.push(Violation::new(
                                "associativity",
                                vec![
                                    self.morphisms[h].id.clone(),
                                    self.morphisms[g].id.clone(),
                                    self.morphisms[f].id.clone(),
                                ],
                                format!(
                                    "(h∘g)∘f = {} but h∘(g∘f) = {}",
                                    self.morphisms[r].id, self.morphisms[l].id
                                ),
                            ));
                        }
                    }
                }
            }
        }
        report.finish()
    }

    pub fn validated(self) -> Result<Arc<FinCat>> {
        self.validate().into_result()?;
        Ok(Arc::new(self))
    }
}

pub struct CatBuilder {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    identities: Vec<(String, String)>,
    composites: Vec<(String, String, String)>,
}

impl CatBuilder {
    pub fn object(mut self, id: impl Into<String>) -> Self {
        self.objects.push(id.into());
        self
    }

    pub fn morphism(
        mut self,
        id: impl Into<String>,
        dom: impl Into<String>,
        cod: impl Into<String>,
    ) -> Self {
        self.morphisms.push((id.into(), dom.into(), cod.into()));
        self
    }

    pub fn identity(mut self, obj: impl Into<String>, mor: impl Into<String>) -> Self {
        self.identities.push((obj.into(), mor.into()));
        self
    }

    /// Record `g ∘ f = eq`.
    pub fn composite(
        mut self,
        g: impl Into<String>,
        f: impl Into<String>,
        eq: impl Into<String>,
    ) -> Self {
        self.composites.push((g.into(), f.into(), eq.into()));
        self
    }

    /// Resolve identifiers.  Fails on structural problems only; law checks
    /// are up to [`FinCat::validate`].
    pub fn build(self) -> Result<FinCat> {
        let mut obj_lookup = HashMap::new();
        for (ix, id) in self.objects.iter().enumerate() {
            if obj_lookup.insert(id.clone(), ix).is_some() {
                return Err(Error::structural(format!(
                    "category {}: duplicate object id {:?}",
                    self.name, id
                )));
            }
        }
        let mut mor_lookup = HashMap::new();
        let mut morphisms = Vec::with_capacity(self.morphisms.len());
        for (ix, (id, dom, cod)) in self.morphisms.iter().enumerate() {
            if mor_lookup.insert(id.clone(), ix).is_some() {
                return Err(Error::structural(format!(
                    "category {}: duplicate morphism id {:?}",
                    self.name, id
                )));
            }
            let dom = *obj_lookup.get(dom).ok_or_else(|| {
                Error::structural(format!(
                    "category {}: morphism {:?} has unknown domain {:?}",
                    self.name, id, dom
                ))
            })?;
            let cod = *obj_lookup.get(cod).ok_or_else(|| {
                Error::structural(format!(
                    "category {}: morphism {:?} has unknown codomain {:?}",
                    self.name, id, cod
                ))
            })?;
            morphisms.push(MorData {
                id: id.clone(),
                dom,
                cod,
            });
        }
        let mut identities = vec![usize::MAX; self.objects.len()];
        for (obj, mor) in &self.identities {
            let o = *obj_lookup.get(obj).ok_or_else(|| {
                Error::structural(format!(
                    "category {}: identity assigned to unknown object {:?}",
                    self.name, obj
                ))
            })?;
            let m = *mor_lookup.get(mor).ok_or_else(|| {
                Error::structural(format!(
                    "category {}: identity of {:?} is unknown morphism {:?}",
                    self.name, obj, mor
                ))
            })?;
            if identities[o] != usize::MAX {
                return Err(Error::structural(format!(
                    "category {}: object {:?} has two identity assignments",
                    self.name, obj
                )));
            }
            identities[o] = m;
        }
        if let Some(o) = identities.iter().position(|&m| m == usize::MAX) {
            return Err(Error::structural(format!(
                "category {}: object {:?} has no identity assignment",
                self.name, self.objects[o]
            )));
        }
        let mut table = HashMap::new();
        for (g, f, eq) in &self.composites {
            let lookup = |id: &str| {
                mor_lookup.get(id).copied().ok_or_else(|| {
                    Error::structural(format!(
                        "category {}: composition entry references unknown morphism {:?}",
                        self.name, id
                    ))
                })
            };
            let key = (lookup(g)?, lookup(f)?);
            let val = lookup(eq)?;
            if let Some(prev) = table.insert(key, val) {
                if prev != val {
                    return Err(Error::structural(format!(
                        "category {}: conflicting composition entries for ({}, {})",
                        self.name, g, f
                    )));
                }
            }
        }
        Ok(FinCat {
            name: self.name,
            objects: self.objects,
            morphisms,
            identities,
            table,
            obj_lookup,
            mor_lookup,
        })
    }
}

/// Opposite category.  Identifiers and their order are untouched; the name
/// toggles a `^op` suffix so the construction is involutive bit for bit.
pub fn op_category(cat: &FinCat) -> FinCat {
    let name = match cat.name.strip_suffix("^op") {
        Some(base) => base.to_string(),
        None => format!("{}^op", cat.name),
    };
    FinCat {
        name,
        objects: cat.objects.clone(),
        morphisms: cat
            .morphisms
            .iter()
            .map(|m| MorData {
                id: m.id.clone(),
                dom: m.cod,
                cod: m.dom,
            })
            .collect(),
        identities: cat.identities.clone(),
        table: cat
            .table
            .iter()
            .map(|(&(g, f), &gf)| ((f, g), gf))
            .collect(),
        obj_lookup: cat.obj_lookup.clone(),
        mor_lookup: cat.mor_lookup.clone(),
    }
}

/// Product category with `"(left,right)"` identifiers, left factor outermost
/// in the index layout (see [`crate::fincat::pair_ix`]).
pub fn product_category(a: &FinCat, b: &FinCat, limits: &Limits) -> Result<FinCat> {
    let name = format!("({}×{})", a.name, b.name);
    limits.check(&name, a.morphism_count() * b.morphism_count())?;
    let mut objects = Vec::with_capacity(a.object_count() * b.object_count());
    for x in a.objects() {
        for y in b.objects() {
            objects.push(format!("({},{})", a.objects[x], b.objects[y]));
        }
    }
    let mut morphisms = Vec::with_capacity(a.morphism_count() * b.morphism_count());
    for f in a.morphisms() {
        for g in b.morphisms() {
            morphisms.push(MorData {
                id: format!("({},{})", a.morphisms[f].id, b.morphisms[g].id),
                dom: super::pair_ix(a.dom(f), b.dom(g), b.object_count()),
                cod: super::pair_ix(a.cod(f), b.cod(g), b.object_count()),
            });
        }
    }
    let identities = (0..objects.len())
        .map(|o| {
            let (x, y) = (o / b.object_count(), o % b.object_count());
            super::pair_ix(a.identity(x), b.identity(y), b.morphism_count())
        })
        .collect();
    let mut table = HashMap::new();
    for gf_a in a.table.iter() {
        for gf_b in b.table.iter() {
            let (&(ga, fa), &ca) = gf_a;
            let (&(gb, fb), &cb) = gf_b;
            table.insert(
                (
                    super::pair_ix(ga, gb, b.morphism_count()),
                    super::pair_ix(fa, fb, b.morphism_count()),
                ),
                super::pair_ix(ca, cb, b.morphism_count()),
            );
        }
    }
    let obj_lookup = objects
        .iter()
        .enumerate()
        .map(|(ix, id)| (id.clone(), ix))
        .collect();
    let mor_lookup = morphisms
        .iter()
        .enumerate()
        .map(|(ix, m)| (m.id.clone(), ix))
        .collect();
    Ok(FinCat {
        name,
        objects,
        morphisms,
        identities,
        table,
        obj_lookup,
        mor_lookup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Total order on `0..n` as a category, one morphism per comparable pair.
    fn chain(n: usize) -> Arc<FinCat> {
        let mut b = FinCat::builder(format!("Chain{n}"));
        for i in 0..n {
            b = b.object(i.to_string());
        }
        for i in 0..n {
            for j in i..n {
                b = b.morphism(format!("{i}<={j}"), i.to_string(), j.to_string());
            }
        }
        for i in 0..n {
            b = b.identity(i.to_string(), format!("{i}<={i}"));
        }
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    b = b.composite(format!("{j}<={k}"), format!("{i}<={j}"), format!("{i}<={k}"));
                }
            }
        }
        b.build().map(Arc::new).unwrap()
    }

    fn iso_pair() -> Arc<FinCat> {
        FinCat::builder("IsoPair")
            .object("a")
            .object("b")
            .morphism("ida", "a", "a")
            .morphism("idb", "b", "b")
            .morphism("u", "a", "b")
            .morphism("v", "b", "a")
            .identity("a", "ida")
            .identity("b", "idb")
            .composite("ida", "ida", "ida")
            .composite("idb", "idb", "idb")
            .composite("u", "ida", "u")
            .composite("idb", "u", "u")
            .composite("v", "idb", "v")
            .composite("ida", "v", "v")
            .composite("v", "u", "ida")
            .composite("u", "v", "idb")
            .build()
            .map(Arc::new)
            .unwrap()
    }

    #[test]
    fn composition_reads_right_to_left() {
        let c = chain(3);
        let f = c.morphism_ix("0<=1").unwrap();
        let g = c.morphism_ix("1<=2").unwrap();
        let fg = c.morphism_ix("0<=2").unwrap();
        assert_eq!(c.compose(g, f), Some(fg));
        assert_eq!(c.compose(f, g), None);
        // A chain lists the first-applied morphism first.
        assert_eq!(c.compose_chain(&[f, g]), Some(fg));
        assert_eq!(c.compose_chain(&[f]), Some(f));
        assert_eq!(c.compose_chain(&[]), None);
    }

    #[test]
    fn hom_sets_follow_the_order() {
        let c = chain(2);
        let le = c.morphism_ix("0<=1").unwrap();
        assert_eq!(c.hom(0, 1), vec![le]);
        assert!(c.hom(1, 0).is_empty());
        assert_eq!(c.hom(0, 0), vec![c.identity(0)]);
        assert!(c.validate().passed());
    }

    #[test]
    fn two_sided_inverses_are_found() {
        let c = iso_pair();
        let u = c.morphism_ix("u").unwrap();
        let v = c.morphism_ix("v").unwrap();
        assert_eq!(c.inverse_of(u), Some(v));
        assert!(c.is_iso(u));
        assert!(c.is_iso(c.identity(0)));
        let two = chain(2);
        assert!(!two.is_iso(two.morphism_ix("0<=1").unwrap()));
    }

    #[test]
    fn validation_pinpoints_broken_tables() {
        // Composite with the wrong endpoints.
        let skewed = FinCat::builder("Skewed")
            .object("0")
            .object("1")
            .morphism("id0", "0", "0")
            .morphism("id1", "1", "1")
            .morphism("0<=1", "0", "1")
            .identity("0", "id0")
            .identity("1", "id1")
            .composite("id0", "id0", "id0")
            .composite("id1", "id1", "id1")
            .composite("0<=1", "id0", "id0")
            .composite("id1", "0<=1", "0<=1")
            .build()
            .unwrap();
        let report = skewed.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| v.law == "compose-endpoints"));

        // Entry for a pair that is not composable.
        let padded = FinCat::builder("Padded")
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
            .composite("0<=1", "id1", "0<=1")
            .build()
            .unwrap();
        assert!(padded
            .validate()
            .violations
            .iter()
            .any(|v| v.law == "compose-extraneous"));

        // Hole in the table.
        let holey = FinCat::builder("Holey")
            .object("0")
            .object("1")
            .morphism("id0", "0", "0")
            .morphism("id1", "1", "1")
            .morphism("0<=1", "0", "1")
            .identity("0", "id0")
            .identity("1", "id1")
            .composite("id0", "id0", "id0")
            .composite("id1", "id1", "id1")
            .composite("id1", "0<=1", "0<=1")
            .build()
            .unwrap();
        assert!(holey
            .validate()
            .violations
            .iter()
            .any(|v| v.law == "compose-missing" && v.witness == vec!["0<=1", "id0"]));
    }

    #[test]
    fn builder_rejects_duplicate_identifiers() {
        let err = FinCat::builder("Dup")
            .object("x")
            .object("x")
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
    }

    #[test]
    fn products_pair_objects_and_morphisms() {
        let c = chain(2);
        let p = product_category(&c, &c, &Limits::default()).unwrap();
        assert_eq!(p.object_count(), 4);
        assert_eq!(p.morphism_count(), 9);
        assert_eq!(p.object_id(super::super::pair_ix(1, 0, 2)), "(1,0)");
        let le = c.morphism_ix("0<=1").unwrap();
        let lhs = super::super::pair_ix(le, c.identity(0), c.morphism_count());
        let rhs = super::super::pair_ix(c.identity(1), le, c.morphism_count());
        let both = super::super::pair_ix(le, le, c.morphism_count());
        assert_eq!(p.compose(rhs, lhs), Some(both));
        assert!(p.validate().passed());
    }

    #[test]
    fn limits_cap_product_size() {
        let c = chain(2);
        let tight = Limits { max_morphisms: 5 };
        match product_category(&c, &c, &tight) {
            Err(Error::Resource {
                requested, limit, ..
            }) => {
                assert_eq!(requested, 9);
                assert_eq!(limit, 5);
            }
            other => panic!("expected a resource error, got {other:?}"),
        }
    }

    proptest! {
        /// Composing a weakly increasing path one step at a time agrees with
        /// the single morphism between its endpoints.
        #[test]
        fn chain_paths_compose_to_their_endpoints(
            (n, path) in (2usize..=5)
                .prop_flat_map(|n| (Just(n), proptest::collection::vec(0..n, 1..=4)))
                .prop_map(|(n, mut v)| {
                    v.sort_unstable();
                    (n, v)
                })
        ) {
            let c = chain(n);
            let steps: Vec<MorIx> = path
                .windows(2)
                .map(|w| c.morphism_ix(&format!("{}<={}", w[0], w[1])).unwrap())
                .collect();
            let first = path.first().unwrap();
            let last = path.last().unwrap();
            let direct = c.morphism_ix(&format!("{first}<={last}")).unwrap();
            if steps.is_empty() {
                prop_assert_eq!(c.identity(*first), direct);
            } else {
                prop_assert_eq!(c.compose_chain(&steps), Some(direct));
            }
        }

        /// The opposite construction is an involution, names included.
        #[test]
        fn op_is_an_involution(n in 1usize..=4) {
            let c = chain(n);
            let op = op_category(&c);
            prop_assert_eq!(op.name(), format!("Chain{n}^op"));
            let le = c.morphism_ix("0<=0").unwrap();
            prop_assert_eq!(op.dom(le), c.cod(le));
            let back = op_category(&op);
            prop_assert_eq!(&back, &*c);
            prop_assert_eq!(back.name(), c.name());
            prop_assert!(op.validate().passed());
        }
    }
}
