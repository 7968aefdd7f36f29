use std::collections::BTreeSet;
use std::fmt;

use crate::bilattice::{Bilattice, BinOp};

/// Line/column of a syntax element, both 1-based.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(String),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) | Term::Const(v) => f.write_str(v),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Atom {
    pub predicate: String,
    pub args: Vec<Term>,
    pub pos: Pos,
}

impl Atom {
    pub fn new(predicate: impl Into<String>, args: Vec<Term>) -> Self {
        Atom { predicate: predicate.into(), args, pos: Pos::default() }
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.args.iter().filter_map(|t| match t {
            Term::Var(v) => Some(v.as_str()),
            Term::Const(_) => None,
        })
    }
}

// Positions are bookkeeping, not identity.
impl PartialEq for Atom {
    fn eq(&self, other: &Self) -> bool {
        self.predicate == other.predicate && self.args == other.args
    }
}

impl Eq for Atom {}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (i, a) in self.args.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quantifier {
    Exists,
    Forall,
}

/// A rule body before grounding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula<V> {
    Atom(Atom),
    Const(V),
    Neg(Box<Formula<V>>),
    Binary(BinOp, Box<Formula<V>>, Box<Formula<V>>),
    Quant(Quantifier, String, Box<Formula<V>>),
}

impl<V> Formula<V> {
    pub fn atom(a: Atom) -> Self {
        Formula::Atom(a)
    }

    pub fn neg(f: Formula<V>) -> Self {
        Formula::Neg(Box::new(f))
    }

    pub fn binary(op: BinOp, l: Formula<V>, r: Formula<V>) -> Self {
        Formula::Binary(op, Box::new(l), Box::new(r))
    }

    /// Variables occurring free.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(a) => {
                for v in a.vars() {
                    if !bound.iter().any(|b| b == v) {
                        out.insert(v.to_string());
                    }
                }
            }
            Formula::Const(_) => {}
            Formula::Neg(f) => f.collect_free(bound, out),
            Formula::Binary(_, l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            Formula::Quant(_, v, f) => {
                bound.push(v.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        self.visit_atoms(&mut |a| out.push(a));
        out
    }

    fn visit_atoms<'a>(&'a self, f: &mut impl FnMut(&'a Atom)) {
        match self {
            Formula::Atom(a) => f(a),
            Formula::Const(_) => {}
            Formula::Neg(x) | Formula::Quant(_, _, x) => x.visit_atoms(f),
            Formula::Binary(_, l, r) => {
                l.visit_atoms(f);
                r.visit_atoms(f);
            }
        }
    }
}

/// Binding strength, loosest first: quantifier, `+`, `*`, `|`, `&`, `~`.
pub(crate) fn precedence(op: BinOp) -> u8 {
    match op {
        BinOp::JoinK => 1,
        BinOp::MeetK => 2,
        BinOp::JoinT => 3,
        BinOp::MeetT => 4,
    }
}

/// Writes a bilattice constant in the program syntax.
pub(crate) fn write_const<V: Bilattice>(f: &mut fmt::Formatter<'_>, v: &V) -> fmt::Result {
    if *v == V::ff() {
        f.write_str("#f")
    } else if *v == V::tt() {
        f.write_str("#t")
    } else if *v == V::bot() {
        f.write_str("#bot")
    } else if *v == V::top() {
        f.write_str("#top")
    } else {
        write!(f, "{v}")
    }
}

impl<V: Bilattice> Formula<V> {
    fn prec(&self) -> u8 {
        match self {
            Formula::Quant(..) => 0,
            Formula::Binary(op, ..) => precedence(*op),
            _ => 5,
        }
    }

    fn write_operand(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl<V: Bilattice> fmt::Display for Formula<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Const(v) => write_const(f, v),
            Formula::Neg(x) => {
                f.write_str("~")?;
                x.write_operand(f, 5)
            }
            Formula::Binary(op, l, r) => {
                let p = precedence(*op);
                l.write_operand(f, p)?;
                write!(f, " {} ", op.symbol())?;
                r.write_operand(f, p + 1)
            }
            Formula::Quant(q, v, x) => {
                let kw = match q {
                    Quantifier::Exists => "exists",
                    Quantifier::Forall => "forall",
                };
                write!(f, "{kw} {v}: {x}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule<V> {
    pub head: Atom,
    pub body: Formula<V>,
}

impl<V: Bilattice> fmt::Display for Rule<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <- {}.", self.head, self.body)
    }
}

/// A parsed program: rules in source order, over the bilattice `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program<V> {
    pub rules: Vec<Rule<V>>,
}

impl<V> Program<V> {
    pub fn new(rules: Vec<Rule<V>>) -> Self {
        Program { rules }
    }
}

impl<V: Bilattice> fmt::Display for Program<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}
