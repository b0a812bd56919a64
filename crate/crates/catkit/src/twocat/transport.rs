use crate::error::{Error, Result};
use crate::fincat::{
    compose_functors, identity_functor, validate_functor, vcompose, whisker_left, whisker_right,
    FunctorMap, NatTransMap,
};
use crate::structure::{comparison_functor, monad_from_adjunction, EmBundle};
use crate::structure::Adjunction;

use super::cells::{AdjOneCell, AdjTwoCell, MndOneCell, MndTwoCell};

fn engine_bug(context: &str, err: Error) -> Error {
    Error::internal(format!("{}: {}", context, err))
}

/// Push an adjunction square down to a monad square: the carrier is the top
/// functor and the distributor is `rho_inv·left ∘ right'·lambda`.  The input
/// cell is already validated, so a law failure downstream is an engine bug.
pub fn phi_one_cell(cell: &AdjOneCell) -> Result<MndOneCell> {
    let src_monad = monad_from_adjunction(cell.source())?;
    let tgt_monad = monad_from_adjunction(cell.target())?;
    let psi = vcompose(
        &whisker_right(cell.rho_inv(), cell.source().left())?,
        &whisker_left(cell.target().right(), cell.lambda())?,
    )?
    .rename(format!("dist({})", cell.name()));
    MndOneCell::new(
        format!("toMnd({})", cell.name()),
        src_monad,
        tgt_monad,
        cell.top().clone(),
        psi,
    )
    .map_err(|e| engine_bug("image of a valid adjunction square", e))
}

/// The top transformation of an adjunction 2-cell is already a monad 2-cell
/// between the pushed-down squares.
pub fn phi_two_cell(two: &AdjTwoCell) -> Result<MndTwoCell> {
    let from = phi_one_cell(two.from())?;
    let to = phi_one_cell(two.to())?;
    MndTwoCell::new(
        format!("toMnd({})", two.name()),
        from,
        to,
        two.alpha().clone(),
    )
    .map_err(|e| engine_bug("image of a valid adjunction 2-cell", e))
}

/// Lift a monad square to a square between the algebra resolutions.
///
/// The bottom functor sends an algebra `(M, k)` to `(B M, B k ∘ psi_M)` and
/// an algebra morphism to the algebra morphism over its pushed-forward
/// underlying morphism.  The lambda component at `c` is the algebra morphism
/// over `psi_c`, and applying the forgetful functor to lambda must give back
/// `psi` entry for entry.
pub fn psi_one_cell(cell: &MndOneCell, src: &EmBundle, tgt: &EmBundle) -> Result<AdjOneCell> {
    if src.monad() != cell.source() {
        return Err(Error::precondition(format!(
            "lifting {}: source resolution belongs to a different monad",
            cell.name()
        )));
    }
    if tgt.monad() != cell.target() {
        return Err(Error::precondition(format!(
            "lifting {}: target resolution belongs to a different monad",
            cell.name()
        )));
    }
    let b = cell.carrier();
    let psi = cell.psi();
    let d = cell.target().base();

    let mut obj_map = Vec::with_capacity(src.algebras().len());
    for alg in src.algebras() {
        let structure = d
            .compose(b.mor(alg.structure), psi.component(alg.obj))
            .ok_or_else(|| {
                Error::internal(format!(
                    "lifting {}: candidate structure map for {} does not compose",
                    cell.name(),
                    alg.id
                ))
            })?;
        let image = tgt.algebra_ix(b.obj(alg.obj), structure).ok_or_else(|| {
            Error::internal(format!(
                "lifting {}: image of algebra {} fails the algebra laws",
                cell.name(),
                alg.id
            ))
        })?;
        obj_map.push(image);
    }
    let mut mor_map = Vec::with_capacity(src.category().morphism_count());
    for m in src.category().morphisms() {
        let (a0, a1) = src.mor_endpoints(m);
        let under = b.mor(src.underlying(m));
        let image = tgt
            .mor_with_underlying(obj_map[a0], obj_map[a1], under)
            .ok_or_else(|| {
                Error::internal(format!(
                    "lifting {}: image of {} is not an algebra morphism",
                    cell.name(),
                    src.category().morphism_id(m)
                ))
            })?;
        mor_map.push(image);
    }
    let bottom = FunctorMap::from_tables(
        format!("lift({})", b.name()),
        src.category().clone(),
        tgt.category().clone(),
        obj_map,
        mor_map,
    );
    let report = validate_functor(&bottom);
    if !report.passed() {
        return Err(Error::internal(format!(
            "lifting {}: lifted functor breaks {}",
            cell.name(),
            report.first_line()
        )));
    }

    let base = cell.source().base();
    let mut components = Vec::with_capacity(base.object_count());
    for c in base.objects() {
        let dom_alg = tgt.free().obj(b.obj(c));
        let cod_alg = bottom.obj(src.free().obj(c));
        let comp = tgt
            .mor_with_underlying(dom_alg, cod_alg, psi.component(c))
            .ok_or_else(|| {
                Error::internal(format!(
                    "lifting {}: distributor component at {} is not an algebra morphism",
                    cell.name(),
                    base.object_id(c)
                ))
            })?;
        components.push(comp);
    }
    let lambda = NatTransMap::from_components(
        format!("lift({})", psi.name()),
        compose_functors(tgt.adjunction().left(), b)?,
        compose_functors(&bottom, src.adjunction().left())?,
        components,
    )
    .map_err(|e| engine_bug("assembling the lifted distributor", e))?;
    let projected = whisker_left(tgt.forget(), &lambda)?;
    if &projected != psi {
        return Err(Error::internal(format!(
            "lifting {}: forgetting the lifted distributor does not return the original",
            cell.name()
        )));
    }
    AdjOneCell::new(
        format!("toAdj({})", cell.name()),
        src.adjunction().clone(),
        tgt.adjunction().clone(),
        b.clone(),
        bottom,
        lambda,
    )
    .map_err(|e| engine_bug("lift of a valid monad square", e))
}

/// Lift a monad 2-cell: the top transformation is reused and the bottom one
/// acts on each algebra by the top's component on its carrier object.
pub fn psi_two_cell(two: &MndTwoCell, src: &EmBundle, tgt: &EmBundle) -> Result<AdjTwoCell> {
    let from = psi_one_cell(two.from(), src, tgt)?;
    let to = psi_one_cell(two.to(), src, tgt)?;
    let theta = two.theta();
    let mut components = Vec::with_capacity(src.algebras().len());
    for (ix, alg) in src.algebras().iter().enumerate() {
        let comp = tgt
            .mor_with_underlying(
                from.bottom().obj(ix),
                to.bottom().obj(ix),
                theta.component(alg.obj),
            )
            .ok_or_else(|| {
                Error::internal(format!(
                    "lifting {}: component at {} is not an algebra morphism",
                    two.name(),
                    alg.id
                ))
            })?;
        components.push(comp);
    }
    let beta = NatTransMap::from_components(
        format!("lift({})", theta.name()),
        from.bottom().clone(),
        to.bottom().clone(),
        components,
    )
    .map_err(|e| engine_bug("assembling the lifted 2-cell", e))?;
    AdjTwoCell::new(
        format!("toAdj({})", two.name()),
        from,
        to,
        theta.clone(),
        beta,
    )
    .map_err(|e| engine_bug("lift of a valid monad 2-cell", e))
}

/// The downward half of the adjunction-square / monad-square correspondence.
/// Requires both endpoint adjunctions to be the algebra resolutions handed
/// in, then reads the monad square off against the resolutions' own monads.
pub fn transpose_adj_to_mnd(
    cell: &AdjOneCell,
    src: &EmBundle,
    tgt: &EmBundle,
) -> Result<MndOneCell> {
    if cell.source() != src.adjunction() {
        return Err(Error::precondition(format!(
            "transposing {}: source is not the supplied algebra resolution",
            cell.name()
        )));
    }
    if cell.target() != tgt.adjunction() {
        return Err(Error::precondition(format!(
            "transposing {}: target is not the supplied algebra resolution",
            cell.name()
        )));
    }
    let image = phi_one_cell(cell)?;
    MndOneCell::new(
        image.name().to_string(),
        src.monad().clone(),
        tgt.monad().clone(),
        image.carrier().clone(),
        image.psi().clone(),
    )
    .map_err(|e| engine_bug("rebasing a transposed square", e))
}

/// The upward half of the correspondence; inverse to
/// [`transpose_adj_to_mnd`] entry for entry.
pub fn transpose_mnd_to_adj(
    cell: &MndOneCell,
    src: &EmBundle,
    tgt: &EmBundle,
) -> Result<AdjOneCell> {
    psi_one_cell(cell, src, tgt)
}

/// The comparison square from an adjunction into the algebra resolution of
/// its monad: identity on the base, comparison functor on the apex, and an
/// identity lambda, because the comparison functor sends each `left c` to
/// the free algebra on `c` on the nose.
pub fn unit_one_cell(adj: &Adjunction, bundle: &EmBundle) -> Result<AdjOneCell> {
    let induced = monad_from_adjunction(adj)?;
    if &induced != bundle.monad() {
        return Err(Error::precondition(format!(
            "comparison for {}: resolution belongs to a different monad",
            adj.name()
        )));
    }
    let top = identity_functor(adj.base());
    let bottom = comparison_functor(adj, bundle)?;
    let source_fun = compose_functors(bundle.adjunction().left(), &top)?;
    let target_fun = compose_functors(&bottom, adj.left())?;
    let components = adj
        .base()
        .objects()
        .map(|c| bundle.category().identity(bundle.free().obj(c)))
        .collect();
    let lambda = NatTransMap::from_components(
        format!("unitdist({})", adj.name()),
        source_fun,
        target_fun,
        components,
    )
    .map_err(|e| engine_bug("comparison square distributor", e))?;
    AdjOneCell::new(
        format!("unit({})", adj.name()),
        adj.clone(),
        bundle.adjunction().clone(),
        top,
        bottom,
        lambda,
    )
    .map_err(|e| engine_bug("comparison square", e))
}
