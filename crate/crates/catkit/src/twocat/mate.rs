use crate::error::{Error, Result};
use crate::fincat::{
    compose_functors, vcompose, whisker_left, whisker_right, FunctorMap, NatTransMap,
};
use crate::structure::Adjunction;

/// Right mate of `theta : left'∘f ⇒ g∘left` across `src = left⊣right` and
/// `tgt = left'⊣right'`:
///
/// ```text
/// f∘right ⇒ right'∘left'∘f∘right ⇒ right'∘g∘left∘right ⇒ right'∘g
/// ```
///
/// unit of the target first, then the conjugated `theta`, then the counit
/// of the source.
pub fn mate(
    theta: &NatTransMap,
    f: &FunctorMap,
    g: &FunctorMap,
    src: &Adjunction,
    tgt: &Adjunction,
) -> Result<NatTransMap> {
    let expected_source = compose_functors(tgt.left(), f)?;
    let expected_target = compose_functors(g, src.left())?;
    if theta.source() != &expected_source || theta.target() != &expected_target {
        return Err(Error::structural(format!(
            "mate of {}: transformation does not run {}∘{} ⇒ {}∘{}",
            theta.name(),
            tgt.left().name(),
            f.name(),
            g.name(),
            src.left().name()
        )));
    }
    let step1 = whisker_right(tgt.unit(), &compose_functors(f, src.right())?)?;
    let step2 = whisker_left(tgt.right(), &whisker_right(theta, src.right())?)?;
    let step3 = whisker_left(&compose_functors(tgt.right(), g)?, src.counit())?;
    vcompose(&step3, &vcompose(&step2, &step1)?)
        .map(|t| t.rename(format!("mate({})", theta.name())))
}

/// Inverse direction: from `xi : f∘right ⇒ right'∘g` back to
/// `left'∘f ⇒ g∘left`.  `mate_inv(mate(theta)) = theta` and vice versa.
pub fn mate_inv(
    xi: &NatTransMap,
    f: &FunctorMap,
    g: &FunctorMap,
    src: &Adjunction,
    tgt: &Adjunction,
) -> Result<NatTransMap> {
    let expected_source = compose_functors(f, src.right())?;
    let expected_target = compose_functors(tgt.right(), g)?;
    if xi.source() != &expected_source || xi.target() != &expected_target {
        return Err(Error::structural(format!(
            "unmate of {}: transformation does not run {}∘{} ⇒ {}∘{}",
            xi.name(),
            f.name(),
            src.right().name(),
            tgt.right().name(),
            g.name()
        )));
    }
    let step1 = whisker_left(&compose_functors(tgt.left(), f)?, src.unit())?;
    let step2 = whisker_left(tgt.left(), &whisker_right(xi, src.left())?)?;
    let step3 = whisker_right(tgt.counit(), &compose_functors(g, src.left())?)?;
    vcompose(&step3, &vcompose(&step2, &step1)?)
        .map(|t| t.rename(format!("unmate({})", xi.name())))
}
