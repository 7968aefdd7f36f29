//! Interpretations: total maps from the Herbrand base into a bilattice.

use std::fmt;
use std::sync::Arc;

use crate::bilattice::{Bilattice, BinOp, ValueError};
use crate::program::{AtomId, GroundFormula, HerbrandBase};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InterpError {
    #[error("interpretations over different Herbrand bases ({left} vs {right} atoms)")]
    BaseMismatch { left: usize, right: usize },
    #[error("negation over a compound formula `{0}` is not allowed here")]
    NonLiteralNegation(String),
    #[error("line {line}: unknown atom `{atom}`")]
    UnknownAtom { line: usize, atom: String },
    #[error("line {line}: atom `{atom}` assigned twice")]
    Duplicate { line: usize, atom: String },
    #[error("line {line}: expected `atom = value`, found `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: {source}")]
    Value { line: usize, source: ValueError },
    #[error("expected {expected} values, got {found}")]
    Length { expected: usize, found: usize },
}

/// A total interpretation, stored densely in base order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interpretation<V> {
    base: Arc<HerbrandBase>,
    values: Vec<V>,
}

impl<V: Bilattice> Interpretation<V> {
    pub fn new(base: Arc<HerbrandBase>, values: Vec<V>) -> Result<Self, InterpError> {
        if values.len() != base.len() {
            return Err(InterpError::Length { expected: base.len(), found: values.len() });
        }
        Ok(Interpretation { base, values })
    }

    pub fn constant(base: Arc<HerbrandBase>, v: V) -> Self {
        let values = vec![v; base.len()];
        Interpretation { base, values }
    }

    /// `I_⊥t`, everything false.
    pub fn bottom_t(base: Arc<HerbrandBase>) -> Self {
        Self::constant(base, V::ff())
    }

    /// `I_⊤t`, everything true.
    pub fn top_t(base: Arc<HerbrandBase>) -> Self {
        Self::constant(base, V::tt())
    }

    /// `I_⊥k`, everything unknown.
    pub fn bottom_k(base: Arc<HerbrandBase>) -> Self {
        Self::constant(base, V::bot())
    }

    /// `I_⊤k`, everything inconsistent.
    pub fn top_k(base: Arc<HerbrandBase>) -> Self {
        Self::constant(base, V::top())
    }

    pub fn base(&self) -> &Arc<HerbrandBase> {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, atom: AtomId) -> &V {
        &self.values[atom]
    }

    pub fn set(&mut self, atom: AtomId, v: V) {
        self.values[atom] = v;
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn into_values(self) -> Vec<V> {
        self.values
    }

    /// `(name, value)` pairs in base order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &V)> {
        self.base.names().iter().map(String::as_str).zip(&self.values)
    }

    pub fn same_base(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.base, &other.base) || self.base == other.base
    }

    fn check_base(&self, other: &Self) -> Result<(), InterpError> {
        if self.same_base(other) {
            Ok(())
        } else {
            Err(InterpError::BaseMismatch { left: self.len(), right: other.len() })
        }
    }

    pub fn pointwise(&self, op: BinOp, other: &Self) -> Result<Self, InterpError> {
        self.check_base(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| op.apply(a, b)).collect();
        Ok(Interpretation { base: Arc::clone(&self.base), values })
    }

    pub fn neg(&self) -> Self {
        let values = self.values.iter().map(V::neg).collect();
        Interpretation { base: Arc::clone(&self.base), values }
    }

    pub fn leq_t(&self, other: &Self) -> Result<bool, InterpError> {
        self.check_base(other)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a.leq_t(b)))
    }

    pub fn leq_k(&self, other: &Self) -> Result<bool, InterpError> {
        self.check_base(other)?;
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a.leq_k(b)))
    }

    /// `self ⊕ other`. Panics on a base mismatch.
    pub fn join_k(&self, other: &Self) -> Self {
        self.pointwise(BinOp::JoinK, other).expect("same base")
    }

    /// `self ⊗ other`. Panics on a base mismatch.
    pub fn meet_k(&self, other: &Self) -> Self {
        self.pointwise(BinOp::MeetK, other).expect("same base")
    }

    /// `self ∧ other`. Panics on a base mismatch.
    pub fn meet_t(&self, other: &Self) -> Self {
        self.pointwise(BinOp::MeetT, other).expect("same base")
    }

    /// `self ∨ other`. Panics on a base mismatch.
    pub fn join_t(&self, other: &Self) -> Self {
        self.pointwise(BinOp::JoinT, other).expect("same base")
    }

    /// `I(φ)`. Panics if `φ` mentions an atom outside the base.
    pub fn eval(&self, f: &GroundFormula<V>) -> V {
        match f {
            GroundFormula::Atom(a) => self.values[*a].clone(),
            GroundFormula::Const(v) => v.clone(),
            GroundFormula::Neg(x) => self.eval(x).neg(),
            GroundFormula::Binary(op, l, r) => op.apply(&self.eval(l), &self.eval(r)),
        }
    }

    /// `(self △ neg)(φ)`: atoms are read from `self`, `¬A` from `¬neg(A)`.
    pub fn eval_pseudo(&self, neg: &Self, f: &GroundFormula<V>) -> Result<V, InterpError> {
        self.check_base(neg)?;
        self.pseudo(neg, f)
    }

    fn pseudo(&self, neg: &Self, f: &GroundFormula<V>) -> Result<V, InterpError> {
        Ok(match f {
            GroundFormula::Atom(a) => self.values[*a].clone(),
            GroundFormula::Const(v) => v.clone(),
            GroundFormula::Neg(x) => match &**x {
                GroundFormula::Atom(a) => neg.values[*a].neg(),
                GroundFormula::Const(v) => v.neg(),
                other => return Err(InterpError::NonLiteralNegation(other.with_base(&self.base).to_string())),
            },
            GroundFormula::Binary(op, l, r) => op.apply(&self.pseudo(neg, l)?, &self.pseudo(neg, r)?),
        })
    }

    /// Parses `atom = value` lines. Omitted atoms are `⊥`; `%` starts a comment.
    pub fn parse(base: Arc<HerbrandBase>, text: &str) -> Result<Self, InterpError> {
        let mut values = vec![None; base.len()];
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('%').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let malformed = || InterpError::Malformed { line, text: content.to_string() };
            let (atom, value) = content.split_once('=').ok_or_else(malformed)?;
            let atom = atom.trim();
            let id = base
                .lookup(atom)
                .ok_or_else(|| InterpError::UnknownAtom { line, atom: atom.to_string() })?;
            let v: V = value.trim().parse().map_err(|source| InterpError::Value { line, source })?;
            if values[id].replace(v).is_some() {
                return Err(InterpError::Duplicate { line, atom: atom.to_string() });
            }
        }
        let values = values.into_iter().map(|v| v.unwrap_or_else(V::bot)).collect();
        Ok(Interpretation { base, values })
    }

    /// Values as a tuple, e.g. `(f, bot, t)`.
    pub fn tuple(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

impl<V: Bilattice> fmt::Display for Interpretation<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, v) in self.entries() {
            writeln!(f, "{name} = {v}")?;
        }
        Ok(())
    }
}
