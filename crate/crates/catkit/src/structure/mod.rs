//! Adjunctions, monads and their Eilenberg–Moore resolutions.
//!
//! Adjunctions are unit/counit quadruples checked against both triangle
//! identities; monads carry their multiplication and unit with the three
//! usual laws.  The Eilenberg–Moore construction enumerates algebras
//! exhaustively and keeps the link between an algebra morphism and its
//! underlying base morphism explicit, because every later lifting argument
//! works through that link.

mod adjunction;
mod em;
mod monad;
mod search;

pub use adjunction::{
    identity_adjunction, op_adjunction, product_adjunction, validate_adjunction, Adjunction,
};
pub use em::{comparison_functor, em_category, reflects_isomorphisms, Algebra, EmBundle};
pub use monad::{
    identity_monad, monad_from_adjunction, product_monad, validate_monad, Monad,
};
pub use search::find_right_adjoint;
