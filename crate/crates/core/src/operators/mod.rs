//! Immediate-consequence operators and the fixpoint engine.

mod fixpoint;

use std::sync::Arc;

pub use fixpoint::{iterate, lfp_k, lfp_t, Direction, FixpointTrace, DEFAULT_FUSE};

use crate::bilattice::Bilattice;
use crate::error::{Error, Result};
use crate::interp::{InterpError, Interpretation};
use crate::program::{check_classical, general_reduct, GroundProgram};

/// `Φ_P(I)(A) = I(φ_A)`.
pub fn phi<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>) -> Interpretation<V> {
    let values = g.bodies().iter().map(|b| i.eval(b)).collect();
    Interpretation::new(Arc::clone(g.base()), values).expect("one body per atom")
}

/// `Γ_P(I)`: the `≼_t`-least model of the general reduct `P[I]`.
pub fn gamma<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>) -> Result<Interpretation<V>> {
    let reduct = general_reduct(g, i);
    let (least, _) = lfp_t(Interpretation::bottom_t(Arc::clone(g.base())), |x| Ok(phi(&reduct, x)))?;
    Ok(least)
}

/// `Ψ_P(I, J)(A) = (I △ J)(φ_A)`.
pub fn psi<V: Bilattice>(
    g: &GroundProgram<V>,
    pos: &Interpretation<V>,
    neg: &Interpretation<V>,
) -> Result<Interpretation<V>> {
    let values = g
        .bodies()
        .iter()
        .map(|b| pos.eval_pseudo(neg, b))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Interpretation::new(Arc::clone(g.base()), values)?)
}

/// Fails on the first body with `¬` over a compound formula.
pub fn check_literal_normal<V: Bilattice>(g: &GroundProgram<V>) -> Result<()> {
    match g.bodies().iter().position(|b| !b.is_literal_normal()) {
        None => Ok(()),
        Some(a) => Err(InterpError::NonLiteralNegation(g.body(a).with_base(g.base()).to_string()).into()),
    }
}

/// `Ψ′_P(I)`: the `≼_t`-least fixpoint of `x ↦ Ψ_P(x, I)`, from `I_⊥t`.
pub fn psi_prime<V: Bilattice>(
    g: &GroundProgram<V>,
    i: &Interpretation<V>,
) -> Result<(Interpretation<V>, FixpointTrace<V>)> {
    lfp_t(Interpretation::bottom_t(Arc::clone(g.base())), |x| psi(g, x, i))
}

/// `I(φ_A) ≼_t I(A)` for every atom.
pub fn is_model<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>) -> bool {
    g.bodies().iter().zip(i.values()).all(|(b, v)| i.eval(b).leq_t(v))
}

/// `I(φ_A) = I(A)` for every atom.
pub fn is_cl_model<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>) -> bool {
    g.bodies().iter().zip(i.values()).all(|(b, v)| i.eval(b) == *v)
}

/// Fails unless every value is `f`, `t` or `⊥`.
pub fn check_classical_interp<V: Bilattice>(i: &Interpretation<V>) -> Result<()> {
    match i.values().iter().position(|v| !(*v == V::ff() || *v == V::tt() || *v == V::bot())) {
        None => Ok(()),
        Some(a) => Err(Error::NotClassicalInterpretation {
            atom: i.base().name(a).to_string(),
            value: i.get(a).to_string(),
        }),
    }
}

/// Classical `T_P`: `t` for atoms with a body true under `i`, `⊥` otherwise.
pub fn t_p<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>) -> Result<Interpretation<V>> {
    check_classical(g)?;
    check_classical_interp(i)?;
    let values = g
        .bodies()
        .iter()
        .map(|b| if i.eval(b) == V::tt() { V::tt() } else { V::bot() })
        .collect();
    Ok(Interpretation::new(Arc::clone(g.base()), values)?)
}

#[cfg(test)]
mod tests;
