//! Brute-force references for support and unfounded sets, FOUR only.

use std::sync::Arc;

use crate::bilattice::{Bilattice, FourValue};
use crate::error::{Error, Result};
use crate::interp::Interpretation;
use crate::operators::check_classical_interp;
use crate::program::{check_classical, AtomId, GroundFormula, GroundProgram};

use super::{disjuncts, is_safe};

pub const SUPPORT_LIMIT: usize = 12;
pub const UNFOUNDED_LIMIT: usize = 10;

/// `⊕` of every safe `J` with values in `{⊥, f}`.
pub fn brute_force_support(
    g: &GroundProgram<FourValue>,
    i: &Interpretation<FourValue>,
    limit: usize,
) -> Result<Interpretation<FourValue>> {
    let n = g.len();
    if n > limit {
        return Err(Error::Limit { what: "support oracle", size: n, limit });
    }
    let mut acc = Interpretation::bottom_k(Arc::clone(g.base()));
    for mask in 0u64..(1u64 << n) {
        let values = (0..n)
            .map(|a| if mask >> a & 1 == 1 { FourValue::False } else { FourValue::Bottom })
            .collect();
        let j = Interpretation::new(Arc::clone(g.base()), values)?;
        if is_safe(g, i, &j)? {
            acc = acc.join_k(&j);
        }
    }
    Ok(acc)
}

/// `X` is unfounded w.r.t. `i` when every disjunct of every body of an atom
/// in `X` is false under `i` or has a positive atom in `X`.
pub fn is_unfounded(g: &GroundProgram<FourValue>, i: &Interpretation<FourValue>, set: &[bool]) -> bool {
    (0..g.len()).filter(|&a| set[a]).all(|a| {
        disjuncts(g.body(a)).iter().all(|lits| {
            let false_under_i = lits.iter().any(|l| i.eval(l) == FourValue::ff());
            let touches_set = lits.iter().any(|l| matches!(l, GroundFormula::Atom(b) if set[*b]));
            false_under_i || touches_set
        })
    })
}

/// The union of all unfounded sets, by subset enumeration.
pub fn greatest_unfounded_set_oracle(
    g: &GroundProgram<FourValue>,
    i: &Interpretation<FourValue>,
    limit: usize,
) -> Result<Vec<AtomId>> {
    check_classical(g)?;
    check_classical_interp(i)?;
    let n = g.len();
    if n > limit {
        return Err(Error::Limit { what: "unfounded-set oracle", size: n, limit });
    }
    let mut union = vec![false; n];
    for mask in 0u64..(1u64 << n) {
        let set: Vec<bool> = (0..n).map(|a| mask >> a & 1 == 1).collect();
        if is_unfounded(g, i, &set) {
            for (u, s) in union.iter_mut().zip(&set) {
                *u |= *s;
            }
        }
    }
    Ok((0..n).filter(|&a| union[a]).collect())
}
