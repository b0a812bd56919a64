//! Squares over adjunctions and monads, and the transports between them.
//!
//! A 1-cell over adjunctions is a functor square `(top, bottom, lambda)`
//! whose structure transformation `lambda : left'∘top ⇒ bottom∘left` has an
//! invertible right mate; the mate is computed and cached at construction
//! and a non-invertible mate rejects the cell.  A 1-cell over monads is a
//! carrier with a distributing transformation `psi : T∘carrier ⇒ carrier∘S`
//! compatible with both multiplications and units.
//!
//! `phi_*` turns adjunction data into monad data; `psi_*` goes the other way
//! through algebra categories.  On algebra-resolution 0-cells the two are
//! mutually inverse identifier for identifier, which the transpose helpers
//! insist on.

mod cells;
mod mate;
mod transport;

pub use cells::{
    compose_adj_one_cells, compose_mnd_one_cells, identity_adj_one_cell, identity_mnd_one_cell,
    product_adj_one_cells, AdjOneCell, AdjTwoCell, MndOneCell, MndTwoCell,
};
pub use mate::{mate, mate_inv};
pub use transport::{
    phi_one_cell, phi_two_cell, psi_one_cell, psi_two_cell, transpose_adj_to_mnd,
    transpose_mnd_to_adj, unit_one_cell,
};
