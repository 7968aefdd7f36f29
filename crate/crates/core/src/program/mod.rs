//! Logic programs over a bilattice: syntax, parsing, grounding into `P*`,
//! and the reduct/completion transforms.

mod ast;
mod ground;
mod parser;
mod transform;

pub use ast::{Atom, Formula, Pos, Program, Quantifier, Rule, Term};
pub use ground::{build_pstar, AtomId, GroundAtom, GroundFormula, GroundProgram, HerbrandBase};
pub use parser::{parse_program, ParseError};
pub use transform::{check_classical, general_reduct, gl_reduct, k_complete, TransformError};

use crate::bilattice::Bilattice;

/// Parses and grounds in one step.
pub fn parse_ground<V: Bilattice>(text: &str) -> Result<GroundProgram<V>, ParseError> {
    Ok(build_pstar(&parse_program::<V>(text)?))
}

#[cfg(test)]
mod tests;
