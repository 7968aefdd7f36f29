//! Reference oracles for the acceptance suite.
//!
//! Nothing here reuses evaluation code from `bilat-core`. FOUR values are
//! modelled as pairs of evidence bits, formulas are evaluated by a separate
//! interpreter, and supports, unfounded sets and stable models are found by
//! exhaustive search straight from their definitions.

use std::collections::HashMap;

use bilat_core::bilattice::{BinOp, FourValue};
use bilat_core::program::{GroundFormula, GroundProgram};

/// A FOUR value as evidence for and evidence against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Belnap {
    pub pro: bool,
    pub con: bool,
}

impl Belnap {
    pub const BOT: Belnap = Belnap { pro: false, con: false };
    pub const TRUE: Belnap = Belnap { pro: true, con: false };
    pub const FALSE: Belnap = Belnap { pro: false, con: true };
    pub const TOP: Belnap = Belnap { pro: true, con: true };
    pub const ALL: [Belnap; 4] = [Belnap::BOT, Belnap::FALSE, Belnap::TRUE, Belnap::TOP];

    pub fn from_four(v: FourValue) -> Self {
        match v {
            FourValue::Bottom => Belnap::BOT,
            FourValue::False => Belnap::FALSE,
            FourValue::True => Belnap::TRUE,
            FourValue::Top => Belnap::TOP,
        }
    }

    pub fn to_four(self) -> FourValue {
        match (self.pro, self.con) {
            (false, false) => FourValue::Bottom,
            (false, true) => FourValue::False,
            (true, false) => FourValue::True,
            (true, true) => FourValue::Top,
        }
    }

    pub fn and(self, o: Self) -> Self {
        Belnap { pro: self.pro && o.pro, con: self.con || o.con }
    }

    pub fn or(self, o: Self) -> Self {
        Belnap { pro: self.pro || o.pro, con: self.con && o.con }
    }

    pub fn consensus(self, o: Self) -> Self {
        Belnap { pro: self.pro && o.pro, con: self.con && o.con }
    }

    pub fn gullibility(self, o: Self) -> Self {
        Belnap { pro: self.pro || o.pro, con: self.con || o.con }
    }

    pub fn negate(self) -> Self {
        Belnap { pro: self.con, con: self.pro }
    }

    pub fn leq_t(self, o: Self) -> bool {
        (!self.pro || o.pro) && (!o.con || self.con)
    }

    pub fn leq_k(self, o: Self) -> bool {
        (!self.pro || o.pro) && (!self.con || o.con)
    }

    pub fn apply(op: BinOp, a: Self, b: Self) -> Self {
        match op {
            BinOp::MeetT => a.and(b),
            BinOp::JoinT => a.or(b),
            BinOp::MeetK => a.consensus(b),
            BinOp::JoinK => a.gullibility(b),
        }
    }
}

pub type Assignment = Vec<Belnap>;

pub fn to_assignment(values: &[FourValue]) -> Assignment {
    values.iter().map(|&v| Belnap::from_four(v)).collect()
}

pub fn to_values(a: &[Belnap]) -> Vec<FourValue> {
    a.iter().map(|b| b.to_four()).collect()
}

pub fn eval(f: &GroundFormula<FourValue>, i: &[Belnap]) -> Belnap {
    match f {
        GroundFormula::Atom(a) => i[*a],
        GroundFormula::Const(v) => Belnap::from_four(*v),
        GroundFormula::Neg(x) => eval(x, i).negate(),
        GroundFormula::Binary(op, l, r) => Belnap::apply(*op, eval(l, i), eval(r, i)),
    }
}

/// One step of the immediate consequence operator.
pub fn phi(g: &GroundProgram<FourValue>, i: &[Belnap]) -> Assignment {
    g.bodies().iter().map(|b| eval(b, i)).collect()
}

pub fn leq_k(a: &[Belnap], b: &[Belnap]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.leq_k(*y))
}

pub fn leq_t(a: &[Belnap], b: &[Belnap]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.leq_t(*y))
}

pub fn join_k(a: &[Belnap], b: &[Belnap]) -> Assignment {
    a.iter().zip(b).map(|(x, y)| x.gullibility(*y)).collect()
}

/// Every assignment of `n` atoms, lexicographic in `⊥ < f < t < ⊤` with the
/// first atom most significant.
pub fn assignments(n: usize) -> impl Iterator<Item = Assignment> {
    (0..4usize.pow(n as u32)).map(move |mut k| {
        let mut out = vec![Belnap::BOT; n];
        for slot in out.iter_mut().rev() {
            *slot = Belnap::ALL[k % 4];
            k /= 4;
        }
        out
    })
}

/// The unique `≼_k`-least element of `set`, if there is one.
pub fn k_least(set: &[Assignment]) -> Option<Assignment> {
    set.iter().find(|m| set.iter().all(|x| leq_k(m, x))).cloned()
}

/// Interpretations equal to the value of their own bodies.
pub fn cl_models(g: &GroundProgram<FourValue>) -> Vec<Assignment> {
    assignments(g.len()).filter(|i| phi(g, i) == *i).collect()
}

/// The `≼_k`-least cl-model.
pub fn kripke_kleene(g: &GroundProgram<FourValue>) -> Assignment {
    k_least(&cl_models(g)).expect("the cl-models form a complete lattice")
}

/// `J` is safe for `i` when it only asserts falsehood and every falsehood
/// it asserts survives one application of the bodies to `i ⊕ J`.
pub fn is_safe(g: &GroundProgram<FourValue>, i: &[Belnap], j: &[Belnap]) -> bool {
    let false_only = j.iter().all(|v| v.leq_k(Belnap::FALSE));
    false_only && leq_k(j, &phi(g, &join_k(i, j)))
}

/// The `⊕` of all safe interpretations with values in `{⊥, f}`.
pub fn support(g: &GroundProgram<FourValue>, i: &[Belnap]) -> Assignment {
    let n = g.len();
    let mut acc = vec![Belnap::BOT; n];
    for mask in 0u32..(1 << n) {
        let j: Assignment = (0..n).map(|a| if mask >> a & 1 == 1 { Belnap::FALSE } else { Belnap::BOT }).collect();
        if is_safe(g, i, &j) {
            acc = join_k(&acc, &j);
        }
    }
    acc
}

/// Cl-models of the program whose bodies are additionally `⊕`-joined with
/// `extra`.
pub fn completed_cl_models(g: &GroundProgram<FourValue>, extra: &[Belnap]) -> Vec<Assignment> {
    assignments(g.len())
        .filter(|j| g.bodies().iter().zip(extra).zip(j).all(|((b, e), v)| eval(b, j).gullibility(*e) == *v))
        .collect()
}

/// `i` is the `≼_k`-least cl-model of the program completed with its own
/// support.
pub fn is_stable(g: &GroundProgram<FourValue>, i: &[Belnap]) -> bool {
    let sp = support(g, i);
    k_least(&completed_cl_models(g, &sp)).as_deref() == Some(i)
}

/// [`is_stable`] with the least completed cl-model cached per support.
pub struct StableCache<'a> {
    g: &'a GroundProgram<FourValue>,
    least: HashMap<Assignment, Option<Assignment>>,
}

impl<'a> StableCache<'a> {
    pub fn new(g: &'a GroundProgram<FourValue>) -> Self {
        StableCache { g, least: HashMap::new() }
    }

    pub fn is_stable(&mut self, i: &[Belnap]) -> bool {
        let g = self.g;
        let sp = support(g, i);
        let least = self.least.entry(sp).or_insert_with_key(|sp| k_least(&completed_cl_models(g, sp)));
        least.as_deref() == Some(i)
    }
}

pub fn stable_models(g: &GroundProgram<FourValue>) -> Vec<Assignment> {
    let mut cache = StableCache::new(g);
    assignments(g.len()).filter(|i| cache.is_stable(i)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Literal {
    Pos(usize),
    Neg(usize),
    Const(Belnap),
}

/// A classical body as a disjunction of conjunctions of literals.
pub fn disjuncts(f: &GroundFormula<FourValue>) -> Option<Vec<Vec<Literal>>> {
    match f {
        GroundFormula::Binary(BinOp::JoinT, l, r) => {
            let mut out = disjuncts(l)?;
            out.extend(disjuncts(r)?);
            Some(out)
        }
        other => Some(vec![conjuncts(other)?]),
    }
}

fn conjuncts(f: &GroundFormula<FourValue>) -> Option<Vec<Literal>> {
    match f {
        GroundFormula::Binary(BinOp::MeetT, l, r) => {
            let mut out = conjuncts(l)?;
            out.extend(conjuncts(r)?);
            Some(out)
        }
        GroundFormula::Atom(a) => Some(vec![Literal::Pos(*a)]),
        GroundFormula::Neg(x) => match **x {
            GroundFormula::Atom(a) => Some(vec![Literal::Neg(a)]),
            _ => None,
        },
        GroundFormula::Const(v @ (FourValue::True | FourValue::False)) => Some(vec![Literal::Const(Belnap::from_four(*v))]),
        _ => None,
    }
}

fn literal_false(l: &Literal, i: &[Belnap]) -> bool {
    match l {
        Literal::Pos(a) => i[*a] == Belnap::FALSE,
        Literal::Neg(a) => i[*a] == Belnap::TRUE,
        Literal::Const(c) => *c == Belnap::FALSE,
    }
}

/// The union of all sets `X` such that every rule for an atom of `X` has a
/// literal false in `i` or a positive literal in `X`. `None` when a body is
/// not classical.
pub fn greatest_unfounded_set(g: &GroundProgram<FourValue>, i: &[Belnap]) -> Option<Vec<bool>> {
    let rules: Vec<Vec<Vec<Literal>>> = g.bodies().iter().map(disjuncts).collect::<Option<_>>()?;
    let n = g.len();
    let mut union = vec![false; n];
    for mask in 0u32..(1 << n) {
        let x: Vec<bool> = (0..n).map(|a| mask >> a & 1 == 1).collect();
        let unfounded = (0..n).filter(|&a| x[a]).all(|a| {
            rules[a]
                .iter()
                .all(|d| d.iter().any(|l| literal_false(l, i) || matches!(l, Literal::Pos(b) if x[*b])))
        });
        if unfounded {
            for (u, s) in union.iter_mut().zip(&x) {
                *u |= *s;
            }
        }
    }
    Some(union)
}

/// Values in `{f, t, ⊥}` only.
pub fn is_classical(i: &[Belnap]) -> bool {
    i.iter().all(|v| *v != Belnap::TOP)
}
