use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::bilattice::{Bilattice, BinOp};

use super::ast::{precedence, write_const, Atom, Formula, Program, Quantifier, Term};

pub type AtomId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundAtom {
    pub predicate: String,
    pub args: Vec<String>,
}

impl fmt::Display for GroundAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.args.is_empty() {
            f.write_str(&self.predicate)
        } else {
            write!(f, "{}({})", self.predicate, self.args.join(","))
        }
    }
}

/// The ordered Herbrand base. Atom ids index interpretations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HerbrandBase {
    atoms: Vec<GroundAtom>,
    names: Vec<String>,
    index: HashMap<String, AtomId>,
}

impl std::hash::Hash for HerbrandBase {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
    }
}

impl HerbrandBase {
    pub fn new(atoms: Vec<GroundAtom>) -> Self {
        let names: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
        let index = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        HerbrandBase { atoms, names, index }
    }

    /// A propositional base with the given atom names.
    pub fn propositional<S: AsRef<str>>(names: &[S]) -> Self {
        HerbrandBase::new(
            names
                .iter()
                .map(|n| GroundAtom { predicate: n.as_ref().to_string(), args: Vec::new() })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atom(&self, id: AtomId) -> &GroundAtom {
        &self.atoms[id]
    }

    pub fn name(&self, id: AtomId) -> &str {
        &self.names[id]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Looks an atom up by its printed form, e.g. `p(a,b)`.
    pub fn lookup(&self, name: &str) -> Option<AtomId> {
        let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
        self.index.get(&compact).copied()
    }
}

/// A variable-free body over atom ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroundFormula<V> {
    Atom(AtomId),
    Const(V),
    Neg(Box<GroundFormula<V>>),
    Binary(BinOp, Box<GroundFormula<V>>, Box<GroundFormula<V>>),
}

impl<V> GroundFormula<V> {
    pub fn neg(f: GroundFormula<V>) -> Self {
        GroundFormula::Neg(Box::new(f))
    }

    pub fn binary(op: BinOp, l: GroundFormula<V>, r: GroundFormula<V>) -> Self {
        GroundFormula::Binary(op, Box::new(l), Box::new(r))
    }

    pub fn atoms(&self, out: &mut Vec<AtomId>) {
        match self {
            GroundFormula::Atom(a) => out.push(*a),
            GroundFormula::Const(_) => {}
            GroundFormula::Neg(x) => x.atoms(out),
            GroundFormula::Binary(_, l, r) => {
                l.atoms(out);
                r.atoms(out);
            }
        }
    }

    /// Every `¬` applies directly to an atom or a constant.
    pub fn is_literal_normal(&self) -> bool {
        match self {
            GroundFormula::Atom(_) | GroundFormula::Const(_) => true,
            GroundFormula::Neg(x) => matches!(**x, GroundFormula::Atom(_) | GroundFormula::Const(_)),
            GroundFormula::Binary(_, l, r) => l.is_literal_normal() && r.is_literal_normal(),
        }
    }

    pub fn has_neg(&self) -> bool {
        match self {
            GroundFormula::Atom(_) | GroundFormula::Const(_) => false,
            GroundFormula::Neg(_) => true,
            GroundFormula::Binary(_, l, r) => l.has_neg() || r.has_neg(),
        }
    }

    pub fn with_base<'a>(&'a self, base: &'a HerbrandBase) -> impl fmt::Display + 'a
    where
        V: Bilattice,
    {
        Shown { f: self, base }
    }
}

impl<V: Bilattice> GroundFormula<V> {
    /// A disjunction of conjunctions of literals and the constants `f`, `t`.
    pub fn is_classical(&self) -> bool {
        fn literal<V: Bilattice>(f: &GroundFormula<V>) -> bool {
            match f {
                GroundFormula::Atom(_) => true,
                GroundFormula::Const(c) => *c == V::ff() || *c == V::tt(),
                GroundFormula::Neg(x) => matches!(**x, GroundFormula::Atom(_)),
                GroundFormula::Binary(..) => false,
            }
        }
        fn conj<V: Bilattice>(f: &GroundFormula<V>) -> bool {
            match f {
                GroundFormula::Binary(BinOp::MeetT, l, r) => conj(l) && conj(r),
                other => literal(other),
            }
        }
        match self {
            GroundFormula::Binary(BinOp::JoinT, l, r) => l.is_classical() && r.is_classical(),
            other => conj(other),
        }
    }

    fn prec(&self) -> u8 {
        match self {
            GroundFormula::Binary(op, ..) => precedence(*op),
            _ => 5,
        }
    }
}

struct Shown<'a, V> {
    f: &'a GroundFormula<V>,
    base: &'a HerbrandBase,
}

impl<V: Bilattice> Shown<'_, V> {
    fn operand(&self, f: &mut fmt::Formatter<'_>, g: &GroundFormula<V>, min: u8) -> fmt::Result {
        let inner = Shown { f: g, base: self.base };
        if g.prec() < min {
            write!(f, "({inner})")
        } else {
            write!(f, "{inner}")
        }
    }
}

impl<V: Bilattice> fmt::Display for Shown<'_, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.f {
            GroundFormula::Atom(a) => f.write_str(self.base.name(*a)),
            GroundFormula::Const(v) => write_const(f, v),
            GroundFormula::Neg(x) => {
                f.write_str("~")?;
                self.operand(f, x, 5)
            }
            GroundFormula::Binary(op, l, r) => {
                let p = precedence(*op);
                self.operand(f, l, p)?;
                write!(f, " {} ", op.symbol())?;
                self.operand(f, r, p + 1)
            }
        }
    }
}

/// `P*`: exactly one body per atom of the Herbrand base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundProgram<V> {
    base: Arc<HerbrandBase>,
    bodies: Vec<GroundFormula<V>>,
}

impl<V: Bilattice> GroundProgram<V> {
    /// Builds a ground program directly. Panics if the body count differs
    /// from the base or a body mentions an atom outside it.
    pub fn new(base: Arc<HerbrandBase>, bodies: Vec<GroundFormula<V>>) -> Self {
        assert_eq!(base.len(), bodies.len(), "one body per atom");
        let mut seen = Vec::new();
        for b in &bodies {
            b.atoms(&mut seen);
        }
        assert!(seen.iter().all(|&a| a < base.len()), "body atom outside the base");
        GroundProgram { base, bodies }
    }

    pub fn base(&self) -> &Arc<HerbrandBase> {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.bodies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bodies.is_empty()
    }

    pub fn body(&self, atom: AtomId) -> &GroundFormula<V> {
        &self.bodies[atom]
    }

    pub fn bodies(&self) -> &[GroundFormula<V>] {
        &self.bodies
    }

    /// Same base, new bodies.
    pub fn map_bodies(&self, mut f: impl FnMut(AtomId, &GroundFormula<V>) -> GroundFormula<V>) -> Self {
        let bodies = self.bodies.iter().enumerate().map(|(a, b)| f(a, b)).collect();
        GroundProgram { base: Arc::clone(&self.base), bodies }
    }

    pub fn is_literal_normal(&self) -> bool {
        self.bodies.iter().all(GroundFormula::is_literal_normal)
    }

    pub fn is_classical(&self) -> bool {
        self.bodies.iter().all(GroundFormula::is_classical)
    }
}

impl<V: Bilattice> fmt::Display for GroundProgram<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, body) in self.bodies.iter().enumerate() {
            writeln!(f, "{} <- {}.", self.base.name(a), body.with_base(&self.base))?;
        }
        Ok(())
    }
}

fn collect_constants<V>(f: &Formula<V>, out: &mut Vec<String>) {
    for a in f.atoms() {
        push_constants(a, out);
    }
}

fn push_constants(a: &Atom, out: &mut Vec<String>) {
    for t in &a.args {
        if let Term::Const(c) = t {
            if !out.contains(c) {
                out.push(c.clone());
            }
        }
    }
}

/// All tuples of length `k` over `universe`, first position most significant.
fn tuples(universe: &[String], k: usize) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                universe.iter().map(move |c| {
                    let mut t = prefix.clone();
                    t.push(c.clone());
                    t
                })
            })
            .collect();
    }
    out
}

struct Grounder<'a> {
    universe: &'a [String],
    base: &'a HerbrandBase,
}

impl Grounder<'_> {
    fn atom_id(&self, a: &Atom, env: &[(String, String)]) -> AtomId {
        let args = a
            .args
            .iter()
            .map(|t| match t {
                Term::Const(c) => c.clone(),
                Term::Var(v) => env
                    .iter()
                    .rev()
                    .find(|(name, _)| name == v)
                    .map(|(_, c)| c.clone())
                    .expect("variables are bound after parsing"),
            })
            .collect();
        let ga = GroundAtom { predicate: a.predicate.clone(), args };
        self.base.lookup(&ga.to_string()).expect("ground atom in base")
    }

    fn formula<V: Bilattice>(&self, f: &Formula<V>, env: &mut Vec<(String, String)>) -> GroundFormula<V> {
        match f {
            Formula::Atom(a) => GroundFormula::Atom(self.atom_id(a, env)),
            Formula::Const(v) => GroundFormula::Const(v.clone()),
            Formula::Neg(x) => GroundFormula::neg(self.formula(x, env)),
            Formula::Binary(op, l, r) => GroundFormula::binary(*op, self.formula(l, env), self.formula(r, env)),
            Formula::Quant(q, var, body) => {
                let (op, empty) = match q {
                    Quantifier::Exists => (BinOp::JoinT, V::ff()),
                    Quantifier::Forall => (BinOp::MeetT, V::tt()),
                };
                let mut acc: Option<GroundFormula<V>> = None;
                for c in self.universe {
                    env.push((var.clone(), c.clone()));
                    let inst = self.formula(body, env);
                    env.pop();
                    acc = Some(match acc {
                        None => inst,
                        Some(prev) => GroundFormula::binary(op, prev, inst),
                    });
                }
                acc.unwrap_or(GroundFormula::Const(empty))
            }
        }
    }
}

/// Grounds `program` into `P*`.
///
/// The universe is the set of constants of the program in order of first
/// appearance. The base lists predicates that head some rule first (in order
/// of first appearance), then body-only predicates, each with its tuples in
/// lexicographic universe order. Same-head bodies are joined with `∨` in
/// source order; atoms heading no rule get the body `f`.
pub fn build_pstar<V: Bilattice>(program: &Program<V>) -> GroundProgram<V> {
    let mut universe = Vec::new();
    for r in &program.rules {
        push_constants(&r.head, &mut universe);
        collect_constants(&r.body, &mut universe);
    }

    let mut preds: Vec<(String, usize)> = Vec::new();
    let mut add_pred = |a: &Atom| {
        if !preds.iter().any(|(p, _)| *p == a.predicate) {
            preds.push((a.predicate.clone(), a.args.len()));
        }
    };
    for r in &program.rules {
        add_pred(&r.head);
    }
    for r in &program.rules {
        for a in r.body.atoms() {
            add_pred(a);
        }
    }

    let atoms = preds
        .iter()
        .flat_map(|(p, k)| {
            tuples(&universe, *k)
                .into_iter()
                .map(move |args| GroundAtom { predicate: p.clone(), args })
        })
        .collect();
    let base = HerbrandBase::new(atoms);
    let grounder = Grounder { universe: &universe, base: &base };

    let mut bodies: Vec<Option<GroundFormula<V>>> = vec![None; base.len()];
    for r in &program.rules {
        let mut vars: Vec<String> = Vec::new();
        for v in r.head.vars() {
            if !vars.iter().any(|x| x == v) {
                vars.push(v.to_string());
            }
        }
        for assignment in tuples(&universe, vars.len()) {
            let mut env: Vec<(String, String)> = vars.iter().cloned().zip(assignment).collect();
            let head = grounder.atom_id(&r.head, &env);
            let body = grounder.formula(&r.body, &mut env);
            bodies[head] = Some(match bodies[head].take() {
                None => body,
                Some(prev) => GroundFormula::binary(BinOp::JoinT, prev, body),
            });
        }
    }
    let bodies = bodies.into_iter().map(|b| b.unwrap_or(GroundFormula::Const(V::ff()))).collect();
    GroundProgram::new(Arc::new(base), bodies)
}
