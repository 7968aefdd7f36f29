//! Support: the `≼_k`-greatest safe falsehood assumption, and the operators
//! built on it.

pub mod oracle;

use std::sync::Arc;

use crate::bilattice::{Bilattice, BinOp};
use crate::error::Result;
use crate::interp::Interpretation;
use crate::operators::{iterate, phi, check_classical_interp, t_p, Direction, FixpointTrace, DEFAULT_FUSE};
use crate::program::{check_classical, AtomId, GroundFormula, GroundProgram};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportResult<V> {
    pub support: Interpretation<V>,
    /// `h_0 = I_⊥t, h_1, …`
    pub trace: FixpointTrace<V>,
}

/// `J ≼_k I_⊥t` and `J ≼_k Φ_P(I ⊕ J)`.
pub fn is_safe<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>, j: &Interpretation<V>) -> Result<bool> {
    let falsity = Interpretation::bottom_t(Arc::clone(g.base()));
    let completed = i.pointwise(BinOp::JoinK, j)?;
    Ok(j.leq_k(&falsity)? && j.leq_k(&phi(g, &completed))?)
}

/// `Sp_P(I)`, by iterating `h ↦ I_⊥t ⊗ Φ_P(I ⊕ h)` down from `I_⊥t`.
pub fn support<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>) -> Result<SupportResult<V>> {
    let falsity = Interpretation::bottom_t(Arc::clone(g.base()));
    let start = falsity.clone();
    let (support, trace) = iterate(start, Direction::KnowledgeDecreasing, DEFAULT_FUSE, |h| {
        Ok(falsity.meet_k(&phi(g, &i.pointwise(BinOp::JoinK, h)?)))
    })?;
    Ok(SupportResult { support, trace })
}

/// `Π_P(I) = Φ_P(I ⊕ Sp_P(I))`.
pub fn pi<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>) -> Result<Interpretation<V>> {
    let sp = support(g, i)?.support;
    Ok(phi(g, &i.pointwise(BinOp::JoinK, &sp)?))
}

/// `Π̃_P(I) = Φ_P(I) ⊕ Sp_P(I)`.
pub fn pi_tilde<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>) -> Result<Interpretation<V>> {
    let sp = support(g, i)?.support;
    Ok(phi(g, i).pointwise(BinOp::JoinK, &sp)?)
}

/// `Φ′_P(I)`: iterate `J ↦ Φ_P(J) ⊕ J` from `J_0 = Sp_P(I)`.
pub fn phi_prime<V: Bilattice>(
    g: &GroundProgram<V>,
    i: &Interpretation<V>,
) -> Result<(Interpretation<V>, FixpointTrace<V>)> {
    let sp = support(g, i)?.support;
    phi_prime_from(g, sp)
}

/// The `Φ′` iteration from an already computed support.
pub fn phi_prime_from<V: Bilattice>(
    g: &GroundProgram<V>,
    sp: Interpretation<V>,
) -> Result<(Interpretation<V>, FixpointTrace<V>)> {
    iterate(sp, Direction::KnowledgeIncreasing, DEFAULT_FUSE, |j| Ok(phi(g, j).pointwise(BinOp::JoinK, j)?))
}

/// The greatest unfounded set of a classical program, read off the support.
pub fn greatest_unfounded_set<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>) -> Result<Vec<AtomId>> {
    check_classical(g)?;
    check_classical_interp(i)?;
    Ok(false_atoms(&support(g, i)?.support))
}

/// Atoms mapped to `f`.
pub fn false_atoms<V: Bilattice>(i: &Interpretation<V>) -> Vec<AtomId> {
    (0..i.len()).filter(|&a| *i.get(a) == V::ff()).collect()
}

/// `W_P(I) = T_P(I) ∪ ¬.U_P(I)`, as an interpretation.
pub fn w_p<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>) -> Result<Interpretation<V>> {
    let derived = t_p(g, i)?;
    let mut out = derived.clone();
    for a in greatest_unfounded_set(g, i)? {
        out.set(a, derived.get(a).join_k(&V::ff()));
    }
    Ok(out)
}

/// A classical body as its disjuncts, each a list of literals.
pub(crate) fn disjuncts<V: Bilattice>(f: &GroundFormula<V>) -> Vec<Vec<&GroundFormula<V>>> {
    fn conj<'a, V>(f: &'a GroundFormula<V>, out: &mut Vec<&'a GroundFormula<V>>) {
        match f {
            GroundFormula::Binary(BinOp::MeetT, l, r) => {
                conj(l, out);
                conj(r, out);
            }
            other => out.push(other),
        }
    }
    match f {
        GroundFormula::Binary(BinOp::JoinT, l, r) => {
            let mut out = disjuncts(l);
            out.extend(disjuncts(r));
            out
        }
        other => {
            let mut lits = Vec::new();
            conj(other, &mut lits);
            vec![lits]
        }
    }
}
