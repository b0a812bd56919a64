//! Hopf data over the adjunction and monad 2-categories.
//!
//! Everything in this module grows out of one situation: a square whose
//! source is a product (an adjunction or monad with a chosen parameter
//! factor).  Collapsing the parameter leg with a counit or a
//! multiplication produces the Hopf and fusion operators; asking the
//! collapsed square to be invertible is the Hopf condition.  When it
//! holds, each parameter yields an adjoint object, the family of adjoint
//! objects assembles into a transformation dinatural in the parameter,
//! and the whole picture transports across the adjunction/monad divide
//! and down to antipodes and lifted parametric adjunctions.
//!
//! The submodules follow that progression:
//!
//! * [`parametric`]: parameter-indexed families of adjunctions and their
//!   laws;
//! * [`operator`]: the Hopf and fusion operators with their
//!   invertibility analysis;
//! * [`adjoint_object`]: adjoint objects over a single square, both
//!   flavours, with every unit, counit and triangle law checked;
//! * [`extension`]: the parameter-indexed assembly, dinaturality, and
//!   the induced parametric adjunctions;
//! * [`antipode`]: the antipode attached to a Hopf family and its two
//!   defining equations;
//! * [`transport`]: comparisons across the two 2-categories, the
//!   fusion/Hopf equivalence, and the four-way adjoint-object decision;
//! * [`lifting`]: parametric adjoint liftings to categories of algebras
//!   and the round trip back to Hopf data.

mod adjoint_object;
mod antipode;
mod extension;
mod lifting;
mod operator;
mod parametric;
mod transport;

pub use adjoint_object::{
    adjoint_object_adj, adjoint_object_mnd, restrict_at_parameter_adj, restrict_at_parameter_mnd,
    AdjointObjectAdj, AdjointObjectMnd,
};
pub use antipode::{antipode_adj, antipode_mnd, AntipodeAdj, AntipodeMnd};
pub use extension::{
    dinatural_extension_adj, dinatural_extension_mnd, hopf_parametric_adjoint_object_adj,
    hopf_parametric_adjoint_object_mnd, HopfParametricAdjointObjectAdj,
    HopfParametricAdjointObjectMnd,
};
pub use lifting::{
    hopf_data_from_lifting, lift_cell_along_product, lift_parametric_adjunction, LiftedParametric,
};
pub use operator::{fusion_operator_mnd, hopf_operator_adj, hopf_operator_mnd, HopfAnalysis};
pub use parametric::{
    reindex_parametric_adjunction, restrict_argument, restrict_parameter,
    validate_parametric_adjunction, ParametricAdjunction,
};
pub use transport::{
    adjoint_object_equivalence, compare_hopf_phi, fusion_hopf_equivalence,
    transfer_inverse_along_adjunction, AdjointObjectEquivalence, FusionComparison, HopfComparison,
};

use crate::error::Error;

/// A failure in a step that the surrounding theory guarantees cannot
/// fail when the inputs were validated.  Reaching it means the engine,
/// not the input, is wrong.
pub(crate) fn engine_bug(context: &str, err: Error) -> Error {
    Error::internal(format!("{}: {}", context, err))
}
