use std::fmt;

use crate::bilattice::Bilattice;
use crate::error::{Error, Result};
use crate::interp::Interpretation;

/// Default iteration bound.
pub const DEFAULT_FUSE: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    TruthIncreasing,
    KnowledgeIncreasing,
    KnowledgeDecreasing,
}

impl Direction {
    fn holds<V: Bilattice>(self, prev: &Interpretation<V>, next: &Interpretation<V>) -> Result<bool> {
        Ok(match self {
            Direction::TruthIncreasing => prev.leq_t(next)?,
            Direction::KnowledgeIncreasing => prev.leq_k(next)?,
            Direction::KnowledgeDecreasing => next.leq_k(prev)?,
        })
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::TruthIncreasing => "<=t-increasing",
            Direction::KnowledgeIncreasing => "<=k-increasing",
            Direction::KnowledgeDecreasing => "<=k-decreasing",
        })
    }
}

/// The iterates of a fixpoint computation, starting point included. When
/// `converged`, the last two steps are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixpointTrace<V> {
    pub steps: Vec<Interpretation<V>>,
    pub converged: bool,
    pub direction: Direction,
}

impl<V: Bilattice> FixpointTrace<V> {
    pub fn last(&self) -> &Interpretation<V> {
        self.steps.last().expect("a trace has at least its start")
    }

    /// Text dump: one block per step, headed by its index.
    pub fn dump(&self, label: &str) -> String {
        let mut out = String::new();
        for (n, step) in self.steps.iter().enumerate() {
            out.push_str(&format!("# {label}_{n}\n{step}"));
        }
        out
    }
}

/// Iterates `f` from `start` until two consecutive steps are equal, checking
/// the declared direction at every step.
pub fn iterate<V, F>(
    start: Interpretation<V>,
    direction: Direction,
    fuse: usize,
    mut f: F,
) -> Result<(Interpretation<V>, FixpointTrace<V>)>
where
    V: Bilattice,
    F: FnMut(&Interpretation<V>) -> Result<Interpretation<V>>,
{
    let mut steps = vec![start];
    for step in 1..=fuse {
        let prev = steps.last().expect("non-empty");
        let next = f(prev)?;
        if !direction.holds(prev, &next)? {
            return Err(Error::Monotonicity { step, direction });
        }
        let done = next == *prev;
        steps.push(next);
        if done {
            let value = steps.last().expect("non-empty").clone();
            return Ok((value, FixpointTrace { steps, converged: true, direction }));
        }
    }
    Err(Error::Fuse { limit: fuse })
}

/// `≼_k`-least fixpoint of a `≼_k`-monotone `f` above `start`.
pub fn lfp_k<V, F>(start: Interpretation<V>, f: F) -> Result<(Interpretation<V>, FixpointTrace<V>)>
where
    V: Bilattice,
    F: FnMut(&Interpretation<V>) -> Result<Interpretation<V>>,
{
    iterate(start, Direction::KnowledgeIncreasing, DEFAULT_FUSE, f)
}

/// `≼_t`-least fixpoint of a `≼_t`-monotone `f` above `start`.
pub fn lfp_t<V, F>(start: Interpretation<V>, f: F) -> Result<(Interpretation<V>, FixpointTrace<V>)>
where
    V: Bilattice,
    F: FnMut(&Interpretation<V>) -> Result<Interpretation<V>>,
{
    iterate(start, Direction::TruthIncreasing, DEFAULT_FUSE, f)
}
