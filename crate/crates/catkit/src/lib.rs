//! Finite category theory, checked by exhaustion.
//!
//! Everything in this crate is a total table over finitely many objects and
//! morphisms, so every law a construction is supposed to satisfy can be
//! checked outright instead of trusted.  The layers build on each other:
//!
//! * [`fincat`]: categories, functors, natural and parametric
//!   transformations as index tables.
//! * [`structure`]: adjunctions, monads, and algebra resolutions.
//! * [`twocat`]: squares over adjunctions and monads, mates, and the
//!   transport between the two kinds of square.
//! * [`hopf`]: parametric adjunctions, Hopf and fusion operators, adjoint
//!   objects, dinatural extensions, antipodes, and adjoint liftings.
//! * [`harness`]: JSON-driven task runner over all of the above.

pub mod check;
pub mod error;
pub mod fincat;
pub mod harness;
pub mod hopf;
pub mod structure;
pub mod twocat;

pub use check::{CheckReport, Violation};
pub use error::{Error, Limits, Result};
