use crate::bilattice::{Bilattice, BinOp, FourValue};
use crate::interp::Interpretation;

use super::ground::{GroundFormula, GroundProgram};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TransformError {
    #[error("rule for `{atom}` is not in classical form: `{body}`")]
    NotClassical { atom: String, body: String },
}

/// `P[I]`: every body replaced by its value under `i`.
pub fn general_reduct<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>) -> GroundProgram<V> {
    g.map_bodies(|_, body| GroundFormula::Const(i.eval(body)))
}

/// The first rule of `g` that is not a disjunction of conjunctions of
/// literals and `f`/`t`, if any.
pub fn check_classical<V: Bilattice>(g: &GroundProgram<V>) -> Result<(), TransformError> {
    match g.bodies().iter().position(|b| !b.is_classical()) {
        None => Ok(()),
        Some(a) => Err(TransformError::NotClassical {
            atom: g.base().name(a).to_string(),
            body: g.body(a).with_base(g.base()).to_string(),
        }),
    }
}

/// `P^I`: each negative literal `¬A` fixed to the constant `¬I(A)`.
pub fn gl_reduct(
    g: &GroundProgram<FourValue>,
    i: &Interpretation<FourValue>,
) -> Result<GroundProgram<FourValue>, TransformError> {
    check_classical(g)?;
    fn fix(f: &GroundFormula<FourValue>, i: &Interpretation<FourValue>) -> GroundFormula<FourValue> {
        match f {
            GroundFormula::Neg(x) => match **x {
                GroundFormula::Atom(a) => GroundFormula::Const(i.get(a).neg()),
                _ => unreachable!("classical bodies negate atoms only"),
            },
            GroundFormula::Binary(op, l, r) => GroundFormula::binary(*op, fix(l, i), fix(r, i)),
            other => other.clone(),
        }
    }
    Ok(g.map_bodies(|_, body| fix(body, i)))
}

/// `P ⊕ I`: each body `φ` for `A` becomes `φ ⊕ I(A)`.
pub fn k_complete<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>) -> GroundProgram<V> {
    g.map_bodies(|a, body| GroundFormula::binary(BinOp::JoinK, body.clone(), GroundFormula::Const(i.get(a).clone())))
}
