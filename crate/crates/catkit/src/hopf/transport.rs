//! Transport of Hopf structure between the two square calculi.
//!
//! The passage from adjunction squares to monad squares interchanges
//! with the Hopf operator, restricts the Hopf operator to the fusion
//! operator along the free side of the parameter resolution, and admits
//! a closed-form inverse transfer along any adjunction.  Each of those
//! statements is an exhaustive finite check here, reported rather than
//! asserted: a failed comparison shows up as a violation in the result,
//! because on user-supplied data it may reveal a transcription problem
//! on either side rather than an engine defect.
//!
//! The module also decides the four-way equivalence behind adjoint
//! objects: invertibility of the distributing transformation, of its
//! lift over algebra categories, and existence of the adjoint object in
//! either calculus are decided by four independent procedures and
//! compared.  Existence is decided honestly: a classical right adjoint
//! is searched for, and every candidate distributor over it is tried.
//! Right adjoints are unique up to an isomorphism that conjugates any
//! adjoint-object datum onto the searched one, so exhausting candidates
//! over a single representative decides existence.

use crate::check::{CheckReport, Violation};
use crate::error::{Error, Limits, Result};
use crate::fincat::{
    compose_functors, identity_functor, is_invertible, product_functor, validate_nat_trans,
    vcompose, whisker_left, whisker_right, FunctorMap, MorIx, NatTransMap,
};
use crate::structure::{
    find_right_adjoint, identity_adjunction, monad_from_adjunction, product_adjunction,
    reflects_isomorphisms, Adjunction, EmBundle,
};
use crate::twocat::{
    compose_adj_one_cells, compose_mnd_one_cells, identity_adj_one_cell, identity_mnd_one_cell,
    phi_one_cell, psi_one_cell, AdjOneCell, AdjTwoCell, MndOneCell, MndTwoCell,
};

use super::engine_bug;
use super::operator::{fusion_operator_mnd, hopf_operator_adj, hopf_operator_mnd, HopfAnalysis};

/// Closed-form inverse of `α : A∘R̃ ⇒ B∘R̃` transferred along `L̃ ⊣ R̃`.
///
/// Whisker `α` with the left adjoint; if the restriction `αL̃` has a
/// componentwise inverse, then so does `α` itself, with
///
/// ```text
/// α⁻¹(Q) = A(R̃ε̃ Q) ∘ (αL̃)⁻¹(R̃Q) ∘ B(η̃ R̃Q),
/// ```
///
/// which the function assembles and verifies to be a two-sided inverse
/// (the identities must hold for any adjunction, so a failure is an
/// engine defect, not a property of the input).  Returns `None` when the
/// restriction is not invertible; `α` may or may not invert in that case
/// and no claim is made.
pub fn transfer_inverse_along_adjunction(
    alpha: &NatTransMap,
    a: &FunctorMap,
    b: &FunctorMap,
    w: &Adjunction,
) -> Result<Option<NatTransMap>> {
    let source = compose_functors(a, w.right())?;
    let target = compose_functors(b, w.right())?;
    if alpha.source() != &source || alpha.target() != &target {
        return Err(Error::structural(format!(
            "transformation {} does not run {}∘{} ⇒ {}∘{}",
            alpha.name(),
            a.name(),
            w.right().name(),
            b.name(),
            w.right().name()
        )));
    }
    let restricted = whisker_right(alpha, w.left())?;
    let analysis = is_invertible(&restricted)?;
    let inv = match analysis.inverse {
        Some(inv) => inv,
        None => return Ok(None),
    };
    let z_cat = a.cod();
    let mut components = Vec::with_capacity(w.apex().object_count());
    for q in w.apex().objects() {
        let rq = w.right().obj(q);
        let unit_leg = b.mor(w.unit().component(rq));
        let counit_leg = a.mor(w.right().mor(w.counit().component(q)));
        let comp = z_cat
            .compose_chain(&[unit_leg, inv.component(rq), counit_leg])
            .ok_or_else(|| {
                Error::internal(format!(
                    "transferred inverse of {} does not compose at {}",
                    alpha.name(),
                    w.apex().object_id(q)
                ))
            })?;
        components.push(comp);
    }
    let candidate = NatTransMap::from_components(
        format!("inv({})", alpha.name()),
        alpha.target().clone(),
        alpha.source().clone(),
        components,
    )
    .map_err(|e| engine_bug("assembling the transferred inverse", e))?;
    if !vcompose(&candidate, alpha)?.is_identity_family()
        || !vcompose(alpha, &candidate)?.is_identity_family()
    {
        return Err(Error::internal(format!(
            "transferred inverse of {} is not two-sided",
            alpha.name()
        )));
    }
    Ok(Some(candidate))
}

/// Outcome of comparing the Hopf operator with the induced-monad passage.
#[derive(Debug, Clone)]
pub struct HopfComparison {
    adj_square: AdjOneCell,
    adj: HopfAnalysis,
    mnd_square: MndOneCell,
    mnd: HopfAnalysis,
    transported: MndOneCell,
    reflects: bool,
    report: CheckReport,
}

impl HopfComparison {
    /// The Hopf square computed on the adjunction side.
    pub fn adj_square(&self) -> &AdjOneCell {
        &self.adj_square
    }

    pub fn adj_analysis(&self) -> &HopfAnalysis {
        &self.adj
    }

    /// The Hopf square computed on the monad side of the passage.
    pub fn mnd_square(&self) -> &MndOneCell {
        &self.mnd_square
    }

    pub fn mnd_analysis(&self) -> &HopfAnalysis {
        &self.mnd
    }

    /// The monad square induced by the adjunction-side Hopf square; the
    /// comparison equates it with [`Self::mnd_square`].
    pub fn transported(&self) -> &MndOneCell {
        &self.transported
    }

    /// Whether the right adjoint of the target reflects isomorphisms,
    /// which is the hypothesis for transferring non-invertibility back.
    pub fn reflects(&self) -> bool {
        self.reflects
    }

    pub fn report(&self) -> &CheckReport {
        &self.report
    }

    pub fn holds(&self) -> bool {
        self.report.passed()
    }
}

/// Runs the Hopf operator on both sides of the adjunction-to-monad
/// passage and compares the outcomes.
///
/// Checks recorded in the report, never raised as errors:
///
/// * `transport-equation`: the induced monad square of the Hopf square
///   equals the Hopf square of the induced monad square, identifier for
///   identifier;
/// * `invertibility-forward`: an invertible adjunction-side operator
///   forces an invertible monad-side operator;
/// * `invertibility-reflected`: when the target's right adjoint
///   reflects isomorphisms, invertibility transfers back;
/// * `inverse-relation`: when both operators invert, the monad-side
///   inverse equals the right-mate paste of the adjunction-side one.
pub fn compare_hopf_phi(
    cell: &AdjOneCell,
    arg: &Adjunction,
    par: &Adjunction,
    limits: &Limits,
) -> Result<HopfComparison> {
    let (adj_square, adj) = hopf_operator_adj(cell, arg, par, limits)?;
    let phi_cell = phi_one_cell(cell)
        .map_err(|e| engine_bug("inducing the monad square of the input", e))?;
    let arg_monad = monad_from_adjunction(arg)?;
    let (mnd_square, mnd) = hopf_operator_mnd(&phi_cell, &arg_monad, par, limits)?;
    let transported = phi_one_cell(&adj_square)
        .map_err(|e| engine_bug("inducing the monad square of the Hopf square", e))?;

    let mut report = CheckReport::new(format!("Hopf transport of {}", cell.name()));
    if transported != mnd_square {
        report.push(Violation::new(
            "transport-equation",
            vec![cell.name().to_string()],
            "monad square of the Hopf square differs from the Hopf square of the monad square",
        ));
    }
    let reflection = reflects_isomorphisms(cell.target().right());
    if adj.is_invertible() && !mnd.is_invertible() {
        let (obj, mor) = mnd.witness().cloned().unwrap_or_default();
        report.push(Violation::new(
            "invertibility-forward",
            vec![obj, mor],
            "adjunction-side operator inverts but the monad-side operator does not",
        ));
    }
    if reflection.reflects && mnd.is_invertible() && !adj.is_invertible() {
        let (obj, mor) = adj.witness().cloned().unwrap_or_default();
        report.push(Violation::new(
            "invertibility-reflected",
            vec![obj, mor],
            "monad-side operator inverts but the adjunction-side one does not, \
             despite the right adjoint reflecting isomorphisms",
        ));
    }
    if let (Some(n_adj), Some(n_mnd)) = (adj.inverse(), mnd.inverse()) {
        let relation = vcompose(
            &whisker_left(cell.target().right(), n_adj)?,
            &whisker_right(adj_square.rho(), adj_square.source().left())?,
        )?;
        if &relation != n_mnd {
            report.push(Violation::new(
                "inverse-relation",
                vec![cell.name().to_string()],
                "monad-side inverse differs from the mate paste of the adjunction-side inverse",
            ));
        }
    }
    Ok(HopfComparison {
        adj_square,
        adj,
        mnd_square,
        mnd,
        transported,
        reflects: reflection.reflects,
        report: report.finish(),
    })
}

/// Outcome of comparing the fusion operator with the Hopf operator.
#[derive(Debug, Clone)]
pub struct FusionComparison {
    fusion_square: MndOneCell,
    fusion: HopfAnalysis,
    hopf_square: MndOneCell,
    hopf: HopfAnalysis,
    adj: HopfAnalysis,
    lemma_inverse: Option<NatTransMap>,
    reflects: bool,
    report: CheckReport,
}

impl FusionComparison {
    pub fn fusion_square(&self) -> &MndOneCell {
        &self.fusion_square
    }

    pub fn fusion_analysis(&self) -> &HopfAnalysis {
        &self.fusion
    }

    pub fn hopf_square(&self) -> &MndOneCell {
        &self.hopf_square
    }

    pub fn hopf_analysis(&self) -> &HopfAnalysis {
        &self.hopf
    }

    /// Analysis of the Hopf operator on the adjunction side.
    pub fn adj_analysis(&self) -> &HopfAnalysis {
        &self.adj
    }

    /// The closed-form inverse of the monad-side Hopf operator obtained
    /// by transfer, when the fusion restriction inverts.
    pub fn lemma_inverse(&self) -> Option<&NatTransMap> {
        self.lemma_inverse.as_ref()
    }

    pub fn reflects(&self) -> bool {
        self.reflects
    }

    pub fn report(&self) -> &CheckReport {
        &self.report
    }

    pub fn holds(&self) -> bool {
        self.report.passed()
    }
}

/// Compares the fusion operator of the induced monad square with the
/// Hopf operators on both sides.
///
/// Checks recorded in the report:
///
/// * `fusion-restriction`: the fusion square is the Hopf square
///   whiskered with the free side of the parameter resolution, carrier
///   and transformation alike;
/// * `fusion-decision`: the transfer lemma inverts the Hopf operator
///   exactly when the fusion operator is invertible;
/// * `lemma-inverse`: the transferred closed-form inverse equals the
///   componentwise inverse of the Hopf operator;
/// * `hopf-fusion-agreement`: the two monad-side operators invert or
///   fail together;
/// * `adj-forward` / `adj-reflected`: the adjunction-side decision
///   agrees, unconditionally one way and under the
///   reflects-isomorphisms hypothesis the other.
pub fn fusion_hopf_equivalence(
    cell: &AdjOneCell,
    arg: &Adjunction,
    par: &Adjunction,
    limits: &Limits,
) -> Result<FusionComparison> {
    let (_, adj) = hopf_operator_adj(cell, arg, par, limits)?;
    let phi_cell = phi_one_cell(cell)
        .map_err(|e| engine_bug("inducing the monad square of the input", e))?;
    let arg_monad = monad_from_adjunction(arg)?;
    let par_monad = monad_from_adjunction(par)?;
    let (fusion_square, fusion) = fusion_operator_mnd(&phi_cell, &arg_monad, &par_monad, limits)?;
    let (hopf_square, hopf) = hopf_operator_mnd(&phi_cell, &arg_monad, par, limits)?;

    let mut report = CheckReport::new(format!("fusion against Hopf for {}", cell.name()));
    let section = product_functor(
        &identity_functor(arg.base()),
        par.left(),
        phi_cell.carrier().dom(),
        hopf_square.carrier().dom(),
    )?;
    let restricted_carrier = compose_functors(hopf_square.carrier(), &section)?;
    let restricted = whisker_right(hopf_square.psi(), &section)?;
    if &restricted_carrier != fusion_square.carrier() || &restricted != fusion_square.psi() {
        report.push(Violation::new(
            "fusion-restriction",
            vec![cell.name().to_string()],
            "fusion square differs from the Hopf square restricted along the free side",
        ));
    }

    let a_fun = compose_functors(phi_cell.target().endo(), phi_cell.carrier())?;
    let s_step = product_functor(
        arg_monad.endo(),
        &identity_functor(par.base()),
        phi_cell.carrier().dom(),
        phi_cell.carrier().dom(),
    )?;
    let b_fun = compose_functors(phi_cell.carrier(), &s_step)?;
    let w = product_adjunction(&identity_adjunction(arg.base()), par, limits)?;
    let lemma_inverse = transfer_inverse_along_adjunction(hopf_square.psi(), &a_fun, &b_fun, &w)?;

    if lemma_inverse.is_some() != fusion.is_invertible() {
        report.push(Violation::new(
            "fusion-decision",
            vec![cell.name().to_string()],
            "transfer lemma and fusion analysis disagree on invertibility",
        ));
    }
    if let (Some(closed), Some(brute)) = (&lemma_inverse, hopf.inverse()) {
        if closed != brute {
            report.push(Violation::new(
                "lemma-inverse",
                vec![cell.name().to_string()],
                "closed-form inverse differs from the componentwise inverse",
            ));
        }
    }
    if hopf.is_invertible() != fusion.is_invertible() {
        report.push(Violation::new(
            "hopf-fusion-agreement",
            vec![cell.name().to_string()],
            "Hopf and fusion operators disagree on invertibility",
        ));
    }
    let reflection = reflects_isomorphisms(cell.target().right());
    if adj.is_invertible() && !hopf.is_invertible() {
        report.push(Violation::new(
            "adj-forward",
            vec![cell.name().to_string()],
            "adjunction-side operator inverts but the monad-side operator does not",
        ));
    }
    if reflection.reflects && hopf.is_invertible() && !adj.is_invertible() {
        report.push(Violation::new(
            "adj-reflected",
            vec![cell.name().to_string()],
            "monad-side operator inverts but the adjunction-side one does not, \
             despite the right adjoint reflecting isomorphisms",
        ));
    }
    Ok(FusionComparison {
        fusion_square,
        fusion,
        hopf_square,
        hopf,
        adj,
        lemma_inverse,
        reflects: reflection.reflects,
        report: report.finish(),
    })
}

/// The four independently decided statements about a monad square and
/// its lift over algebra categories.
#[derive(Debug, Clone)]
pub struct AdjointObjectEquivalence {
    distributor_invertible: bool,
    mnd_adjoint: bool,
    lifted_invertible: bool,
    adj_adjoint: bool,
    report: CheckReport,
}

impl AdjointObjectEquivalence {
    /// Is the distributing transformation invertible?
    pub fn distributor_invertible(&self) -> bool {
        self.distributor_invertible
    }

    /// Does the square have an adjoint object among monad squares?
    pub fn mnd_adjoint(&self) -> bool {
        self.mnd_adjoint
    }

    /// Is the structure transformation of the lifted square invertible?
    pub fn lifted_invertible(&self) -> bool {
        self.lifted_invertible
    }

    /// Does the lifted square have an adjoint object among adjunction
    /// squares?
    pub fn adj_adjoint(&self) -> bool {
        self.adj_adjoint
    }

    /// The four decisions in the order distributor, monad-side adjoint,
    /// lifted distributor, adjunction-side adjoint.
    pub fn statements(&self) -> [bool; 4] {
        [
            self.distributor_invertible,
            self.mnd_adjoint,
            self.lifted_invertible,
            self.adj_adjoint,
        ]
    }

    pub fn agree(&self) -> bool {
        let [a, b, c, d] = self.statements();
        a == b && b == c && c == d
    }

    pub fn report(&self) -> &CheckReport {
        &self.report
    }

    pub fn holds(&self) -> bool {
        self.report.passed()
    }
}

/// Decides the four equivalent conditions independently and compares.
///
/// The two invertibility statements are componentwise checks on the
/// given square and on its lift through the algebra resolutions.  The
/// two existence statements search for a classical right adjoint of the
/// carrier (and, for the lift, of the lifted carrier too) and then try
/// every distributor candidate over it, validating the full adjoint
/// object: square laws, unit and counit 2-cells.  A disagreement is
/// recorded as a `four-way-agreement` violation in the report.
pub fn adjoint_object_equivalence(
    cell: &MndOneCell,
    src: &EmBundle,
    tgt: &EmBundle,
    limits: &Limits,
) -> Result<AdjointObjectEquivalence> {
    if src.monad() != cell.source() || tgt.monad() != cell.target() {
        return Err(Error::precondition(format!(
            "cell {}: resolutions do not belong to its source and target monads",
            cell.name()
        )));
    }
    let distributor_invertible = is_invertible(cell.psi())?.invertible;
    let lift = psi_one_cell(cell, src, tgt)?;
    let lifted_invertible = is_invertible(lift.lambda())?.invertible;
    let mnd_adjoint = mnd_adjoint_exists(cell, limits)?;
    let adj_adjoint = adj_adjoint_exists(&lift, limits)?;

    let mut report = CheckReport::new(format!("adjoint object equivalence for {}", cell.name()));
    let statements = [
        distributor_invertible,
        mnd_adjoint,
        lifted_invertible,
        adj_adjoint,
    ];
    if statements.iter().any(|&s| s != statements[0]) {
        report.push(Violation::new(
            "four-way-agreement",
            statements.iter().map(|s| s.to_string()).collect(),
            "the four equivalent statements were decided differently",
        ));
    }
    Ok(AdjointObjectEquivalence {
        distributor_invertible,
        mnd_adjoint,
        lifted_invertible,
        adj_adjoint,
        report: report.finish(),
    })
}

/// Is there an adjoint object over a searched right adjoint of the
/// carrier?  Exhaustive over distributor candidates.
fn mnd_adjoint_exists(cell: &MndOneCell, limits: &Limits) -> Result<bool> {
    let jk = match find_right_adjoint(cell.carrier()) {
        Some(jk) => jk,
        None => return Ok(false),
    };
    let k = jk.right();
    let s = cell.source().endo();
    let t = cell.target().endo();
    let c_cat = cell.carrier().dom();
    let d_cat = cell.carrier().cod();
    let homs: Vec<Vec<MorIx>> = d_cat
        .objects()
        .map(|d| c_cat.hom(s.obj(k.obj(d)), k.obj(t.obj(d))))
        .collect();
    let mut total: usize = 1;
    for h in &homs {
        if h.is_empty() {
            return Ok(false);
        }
        total = total.saturating_mul(h.len());
    }
    limits.check("distributor candidates", total)?;

    let source_fun = compose_functors(s, k)?;
    let target_fun = compose_functors(k, t)?;
    let id_src = identity_mnd_one_cell(cell.source())?;
    let id_tgt = identity_mnd_one_cell(cell.target())?;
    let mut idx = vec![0usize; homs.len()];
    'candidates: loop {
        let components: Vec<MorIx> = idx.iter().zip(&homs).map(|(&i, h)| h[i]).collect();
        let candidate = NatTransMap::from_components(
            "candidate",
            source_fun.clone(),
            target_fun.clone(),
            components,
        )
        .map_err(|e| engine_bug("assembling a distributor candidate", e))?;
        if validate_nat_trans(&candidate).passed()
            && mnd_candidate_is_adjoint(cell, &jk, candidate, &id_src, &id_tgt)?
        {
            return Ok(true);
        }
        for pos in (0..idx.len()).rev() {
            idx[pos] += 1;
            if idx[pos] < homs[pos].len() {
                continue 'candidates;
            }
            idx[pos] = 0;
        }
        return Ok(false);
    }
}

fn mnd_candidate_is_adjoint(
    cell: &MndOneCell,
    jk: &Adjunction,
    psi_back: NatTransMap,
    id_src: &MndOneCell,
    id_tgt: &MndOneCell,
) -> Result<bool> {
    let back = match MndOneCell::new(
        "candidate",
        cell.target().clone(),
        cell.source().clone(),
        jk.right().clone(),
        psi_back,
    ) {
        Ok(back) => back,
        Err(Error::Law(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    let round_src = compose_mnd_one_cells(&back, cell)?;
    let round_tgt = compose_mnd_one_cells(cell, &back)?;
    match MndTwoCell::new("candidate-unit", id_src.clone(), round_src, jk.unit().clone()) {
        Ok(_) => {}
        Err(Error::Law(_)) => return Ok(false),
        Err(e) => return Err(e),
    }
    match MndTwoCell::new(
        "candidate-counit",
        round_tgt,
        id_tgt.clone(),
        jk.counit().clone(),
    ) {
        Ok(_) => {}
        Err(Error::Law(_)) => return Ok(false),
        Err(e) => return Err(e),
    }
    Ok(true)
}

/// Adjunction-side analogue: both legs need searched right adjoints,
/// then every structure-transformation candidate over them is tried.
fn adj_adjoint_exists(lift: &AdjOneCell, limits: &Limits) -> Result<bool> {
    let jk = match find_right_adjoint(lift.top()) {
        Some(jk) => jk,
        None => return Ok(false),
    };
    let vw = match find_right_adjoint(lift.bottom()) {
        Some(vw) => vw,
        None => return Ok(false),
    };
    let k = jk.right();
    let w = vw.right();
    let l_src = lift.source().left();
    let l_tgt = lift.target().left();
    let x_cat = l_src.cod();
    let d_cat = lift.top().cod();
    let homs: Vec<Vec<MorIx>> = d_cat
        .objects()
        .map(|d| x_cat.hom(l_src.obj(k.obj(d)), w.obj(l_tgt.obj(d))))
        .collect();
    let mut total: usize = 1;
    for h in &homs {
        if h.is_empty() {
            return Ok(false);
        }
        total = total.saturating_mul(h.len());
    }
    limits.check("structure transformation candidates", total)?;

    let source_fun = compose_functors(l_src, k)?;
    let target_fun = compose_functors(w, l_tgt)?;
    let id_src = identity_adj_one_cell(lift.source())?;
    let id_tgt = identity_adj_one_cell(lift.target())?;
    let mut idx = vec![0usize; homs.len()];
    'candidates: loop {
        let components: Vec<MorIx> = idx.iter().zip(&homs).map(|(&i, h)| h[i]).collect();
        let candidate = NatTransMap::from_components(
            "candidate",
            source_fun.clone(),
            target_fun.clone(),
            components,
        )
        .map_err(|e| engine_bug("assembling a structure transformation candidate", e))?;
        if validate_nat_trans(&candidate).passed()
            && adj_candidate_is_adjoint(lift, &jk, &vw, candidate, &id_src, &id_tgt)?
        {
            return Ok(true);
        }
        for pos in (0..idx.len()).rev() {
            idx[pos] += 1;
            if idx[pos] < homs[pos].len() {
                continue 'candidates;
            }
            idx[pos] = 0;
        }
        return Ok(false);
    }
}

fn adj_candidate_is_adjoint(
    lift: &AdjOneCell,
    jk: &Adjunction,
    vw: &Adjunction,
    lambda_back: NatTransMap,
    id_src: &AdjOneCell,
    id_tgt: &AdjOneCell,
) -> Result<bool> {
    let back = match AdjOneCell::new(
        "candidate",
        lift.target().clone(),
        lift.source().clone(),
        jk.right().clone(),
        vw.right().clone(),
        lambda_back,
    ) {
        Ok(back) => back,
        Err(Error::Law(_)) | Err(Error::Precondition(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    let round_src = compose_adj_one_cells(&back, lift)?;
    let round_tgt = compose_adj_one_cells(lift, &back)?;
    match AdjTwoCell::new(
        "candidate-unit",
        id_src.clone(),
        round_src,
        jk.unit().clone(),
        vw.unit().clone(),
    ) {
        Ok(_) => {}
        Err(Error::Law(_)) => return Ok(false),
        Err(e) => return Err(e),
    }
    match AdjTwoCell::new(
        "candidate-counit",
        round_tgt,
        id_tgt.clone(),
        jk.counit().clone(),
        vw.counit().clone(),
    ) {
        Ok(_) => {}
        Err(Error::Law(_)) => return Ok(false),
        Err(e) => return Err(e),
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{FinCat, NatTransMap};
    use crate::structure::{em_category, identity_adjunction, identity_monad, Monad};
    use crate::twocat::identity_adj_one_cell;
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

    /// The closure monad on the 2-chain sending everything to the top.
    fn top_closure(c: &Arc<FinCat>) -> Monad {
        let endo = crate::fincat::FunctorMap::from_tables(
            "top".into(),
            c.clone(),
            c.clone(),
            vec![1, 1],
            vec![1, 1, 1],
        );
        let mult = NatTransMap::from_components(
            "mult",
            crate::fincat::compose_functors(&endo, &endo).unwrap(),
            endo.clone(),
            vec![1, 1],
        )
        .unwrap();
        let unit = NatTransMap::from_components(
            "unit",
            crate::fincat::identity_functor(c),
            endo.clone(),
            vec![2, 1],
        )
        .unwrap();
        Monad::new("closure", endo, mult, unit).unwrap()
    }

    #[test]
    fn transfer_along_identity_is_direct_inverse() {
        let c = chain2();
        let w = identity_adjunction(&c);
        let swap = NatTransMap::from_components(
            "id-family",
            crate::fincat::identity_functor(&c),
            crate::fincat::identity_functor(&c),
            vec![0, 1],
        )
        .unwrap();
        let a = crate::fincat::identity_functor(&c);
        let b = crate::fincat::identity_functor(&c);
        let inv = transfer_inverse_along_adjunction(&swap, &a, &b, &w)
            .unwrap()
            .expect("identity family inverts");
        assert!(inv.is_identity_family());
    }

    #[test]
    fn identity_cell_transport_holds() {
        let limits = Limits::default();
        let c = chain2();
        let p = one();
        let arg = identity_adjunction(&c);
        let par = identity_adjunction(&p);
        let both = crate::structure::product_adjunction(&arg, &par, &limits).unwrap();
        let cell = identity_adj_one_cell(&both).unwrap();
        let cmp = compare_hopf_phi(&cell, &arg, &par, &limits).unwrap();
        assert!(cmp.holds());
        assert!(cmp.adj_analysis().is_invertible());
        assert!(cmp.mnd_analysis().is_invertible());
        assert!(cmp.reflects());
        let fus = fusion_hopf_equivalence(&cell, &arg, &par, &limits).unwrap();
        assert!(fus.holds());
        assert!(fus.fusion_analysis().is_invertible());
        assert!(fus.lemma_inverse().is_some());
    }

    #[test]
    fn four_way_equivalence_all_true_on_identity_cell() {
        let limits = Limits::default();
        let c = chain2();
        let monad = identity_monad(&c);
        let bundle = em_category(&monad, &limits).unwrap();
        let cell = crate::twocat::identity_mnd_one_cell(&monad).unwrap();
        let eq = adjoint_object_equivalence(&cell, &bundle, &bundle, &limits).unwrap();
        assert_eq!(eq.statements(), [true; 4]);
        assert!(eq.agree());
        assert!(eq.holds());
    }

    #[test]
    fn four_way_equivalence_all_false_on_unit_cell() {
        let limits = Limits::default();
        let c = chain2();
        let closure = top_closure(&c);
        let target = identity_monad(&c);
        let psi = NatTransMap::from_components(
            "unit-distributor",
            crate::fincat::identity_functor(&c),
            closure.endo().clone(),
            vec![2, 1],
        )
        .unwrap();
        let cell = crate::twocat::MndOneCell::new(
            "unit-cell",
            closure.clone(),
            target.clone(),
            crate::fincat::identity_functor(&c),
            psi,
        )
        .unwrap();
        let src = em_category(&closure, &limits).unwrap();
        let tgt = em_category(&target, &limits).unwrap();
        let eq = adjoint_object_equivalence(&cell, &src, &tgt, &limits).unwrap();
        assert_eq!(eq.statements(), [false; 4]);
        assert!(eq.agree());
        assert!(eq.holds());
    }
}
