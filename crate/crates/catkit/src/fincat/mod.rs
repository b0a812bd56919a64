//! Finite categories as total composition tables.
//!
//! Everything downstream reduces to identifier-level equality of finite
//! tables, so this module fixes the conventions once:
//!
//! * **Composition orientation.** The table is keyed `(g, f)` and stores
//!   `g ∘ f`, read "g after f"; the entry exists exactly when
//!   `cod(f) = dom(g)`.  Every formula in the crate is transcribed to this
//!   orientation here and nowhere else.
//! * **Pair encoding.** Product categories name objects and morphisms
//!   `"(left,right)"`; the factor order is the argument order.
//! * **Opposites.** `op` keeps all identifiers and their order, swaps
//!   `dom`/`cod`, and transposes the table.  Names toggle a `^op` suffix so
//!   the operation is involutive on the nose.
//!
//! Structural problems (dangling identifiers, non-total data) are rejected
//! while building; equational laws are checked separately by [`FinCat::validate`]
//! so that deliberately broken tables can still be loaded and reported on.

mod category;
mod functor;
mod nat;
mod param;

pub use category::{op_category, product_category, CatBuilder, FinCat, MorIx, ObjIx};
pub use functor::{
    compose_functors, constant_functor, identity_functor, op_functor, pairing, product_functor,
    validate_functor, FunctorMap,
};
pub use nat::{
    identity_nat, is_invertible, op_nat, product_nat, validate_nat_trans, vcompose, whisker_left,
    whisker_right, InvertibilityAnalysis, NatTransMap,
};
pub use param::{validate_param_trans, ParamTrans};

/// Index layout of product categories: position of the pair of the `i`-th
/// and `j`-th entries when the right factor has `right_len` entries.
///
/// `op` preserves indices, so the same layout addresses `op(Q)×D` through
/// the indices of `Q` and `D`.
pub fn pair_ix(i: usize, j: usize, right_len: usize) -> usize {
    i * right_len + j
}
