//! Logic programming over bilattices: Kripke-Kleene, well-founded and stable
//! semantics with the closed world assumption read as support.

pub mod bilattice;
pub mod error;
pub mod gen;
pub mod interp;
pub mod operators;
pub mod program;
pub mod semantics;
pub mod support;

pub use error::{Error, Result};
