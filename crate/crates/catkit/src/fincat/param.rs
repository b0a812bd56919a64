use std::sync::Arc;

use crate::check::{CheckReport, Violation};
use crate::error::{Error, Limits, Result};

use super::category::{op_category, product_category, FinCat, MorIx};
use super::functor::FunctorMap;
use super::nat::NatTransMap;
use super::pair_ix;

/// A family indexed contravariantly by a parameter category `Q` and
/// covariantly by an argument category `D`: one component per pair of
/// objects, between functors defined on `op(Q)×D`.
///
/// The family is stored as a transformation on the product, so it can be
/// whiskered and composed like any other; what makes it "parametric" is the
/// validation contract, see [`validate_param_trans`].
#[derive(Debug, Clone)]
pub struct ParamTrans {
    name: String,
    param: Arc<FinCat>,
    arg: Arc<FinCat>,
    inner: NatTransMap,
}

impl PartialEq for ParamTrans {
    fn eq(&self, other: &Self) -> bool {
        self.param == other.param && self.arg == other.arg && self.inner == other.inner
    }
}

impl Eq for ParamTrans {}

impl ParamTrans {
    /// Wrap a transformation whose indexing category is `op(param)×arg`.
    pub fn new(
        name: impl Into<String>,
        param: Arc<FinCat>,
        arg: Arc<FinCat>,
        inner: NatTransMap,
        limits: &Limits,
    ) -> Result<ParamTrans> {
        let name = name.into();
        let expected = product_category(&op_category(&param), &arg, limits)?;
        if **inner.dom() != expected {
            return Err(Error::structural(format!(
                "parametric family {}: components are indexed by {} instead of {}",
                name,
                inner.dom().name(),
                expected.name()
            )));
        }
        Ok(ParamTrans {
            name,
            param,
            arg,
            inner,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn param(&self) -> &Arc<FinCat> {
        &self.param
    }

    pub fn arg(&self) -> &Arc<FinCat> {
        &self.arg
    }

    pub fn inner(&self) -> &NatTransMap {
        &self.inner
    }

    pub fn into_inner(self) -> NatTransMap {
        self.inner
    }

    pub fn source(&self) -> &FunctorMap {
        self.inner.source()
    }

    pub fn target(&self) -> &FunctorMap {
        self.inner.target()
    }

    /// Component at the `q`-th parameter object and `d`-th argument object.
    pub fn component(&self, q: usize, d: usize) -> MorIx {
        self.inner.component(pair_ix(q, d, self.arg.object_count()))
    }

    fn pair_mor(&self, q_mor: MorIx, d_mor: MorIx) -> MorIx {
        pair_ix(q_mor, d_mor, self.arg.morphism_count())
    }
}

/// Parametric coherence: naturality in the argument for every fixed
/// parameter, plus the mixed square tying a parameter morphism `q : Q -> Q'`
/// to an argument morphism `d : D -> D'`:
///
/// ```text
/// T(Q,d) ∘ c(Q,D) ∘ S(q,D)  =  T(q,D') ∘ c(Q',D') ∘ S(Q',d)
/// ```
///
/// where `S`, `T` act on `op(Q)×D`, so `S(q,D)` means `S` applied to the
/// pair of `q` (reversed) with the identity at `D`.  Both checks run over
/// every pair of morphisms, not just generators.
pub fn validate_param_trans(pt: &ParamTrans) -> CheckReport {
    let mut report = CheckReport::new(pt.name.clone());
    let cat = pt.inner.cod();
    let src = pt.inner.source();
    let tgt = pt.inner.target();
    let q_cat = &pt.param;
    let d_cat = &pt.arg;
    let comp = |q: usize, d: usize| pt.component(q, d);

    // Naturality in the argument at each fixed parameter object.
    for q in q_cat.objects() {
        let q_id = q_cat.identity(q);
        for d_mor in d_cat.morphisms() {
            let m = pt.pair_mor(q_id, d_mor);
            let (d0, d1) = (d_cat.dom(d_mor), d_cat.cod(d_mor));
            let lhs = cat.compose(comp(q, d1), src.mor(m));
            let rhs = cat.compose(tgt.mor(m), comp(q, d0));
            if lhs.is_none() || lhs != rhs {
                report.push(Violation::new(
                    "parametric-argument-naturality",
                    vec![
                        q_cat.object_id(q).to_string(),
                        d_cat.morphism_id(d_mor).to_string(),
                    ],
                    format!(
                        "argument square at parameter {} and morphism {} does not commute",
                        q_cat.object_id(q),
                        d_cat.morphism_id(d_mor)
                    ),
                ));
            }
        }
    }

    // Mixed square for every parameter morphism against every argument morphism.
    for q_mor in q_cat.morphisms() {
        let (q0, q1) = (q_cat.dom(q_mor), q_cat.cod(q_mor)); // q : q0 -> q1 in Q
        for d_mor in d_cat.morphisms() {
            let (d0, d1) = (d_cat.dom(d_mor), d_cat.cod(d_mor));
            // Left route: contract the parameter first, then cross, then push the argument.
            let s_contract = src.mor(pt.pair_mor(q_mor, d_cat.identity(d0)));
            let t_push = tgt.mor(pt.pair_mor(q_cat.identity(q0), d_mor));
            let left = cat.compose_chain(&[s_contract, comp(q0, d0), t_push]);
            // Right route: push the argument first, then cross, then contract.
            let s_push = src.mor(pt.pair_mor(q_cat.identity(q1), d_mor));
            let t_contract = tgt.mor(pt.pair_mor(q_mor, d_cat.identity(d1)));
            let right = cat.compose_chain(&[s_push, comp(q1, d1), t_contract]);
            if left.is_none() || left != right {
                report.push(Violation::new(
                    "parametric-mixed-square",
                    vec![
                        q_cat.morphism_id(q_mor).to_string(),
                        d_cat.morphism_id(d_mor).to_string(),
                    ],
                    format!(
                        "mixed square at ({}, {}) does not commute",
                        q_cat.morphism_id(q_mor),
                        d_cat.morphism_id(d_mor)
                    ),
                ));
            }
        }
    }
    report.finish()
}
