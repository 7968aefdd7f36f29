//! Seeded random programs and interpretations for property testing, with a
//! shrinker for failing programs.

use std::sync::Arc;

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bilattice::{Bilattice, BinOp, FourValue, IntervalValue};
use crate::interp::Interpretation;
use crate::program::{Atom, Formula, HerbrandBase, Program, Rule};

/// Values that can be drawn at random.
pub trait Sample: Bilattice {
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Sample for FourValue {
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        *FourValue::ALL.choose(rng).expect("non-empty")
    }
}

impl Sample for IntervalValue {
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut endpoint = || {
            let q: i64 = rng.gen_range(1..=10);
            let p: i64 = rng.gen_range(0..=q);
            BigRational::new(p.into(), q.into())
        };
        let lo = endpoint();
        let hi = endpoint();
        IntervalValue::new(lo, hi).expect("within [0,1]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub max_atoms: usize,
    pub max_depth: usize,
    /// Bodies restricted to disjunctions of conjunctions of literals.
    pub classical: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig { max_atoms: 4, max_depth: 3, classical: false }
    }
}

const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "g", "h", "k"];

/// A random propositional program. Negation only ever applies to atoms.
pub fn random_program<V: Sample, R: Rng + ?Sized>(rng: &mut R, cfg: &GenConfig) -> Program<V> {
    let n = rng.gen_range(1..=cfg.max_atoms.clamp(1, NAMES.len()));
    let names = &NAMES[..n];
    let body = |rng: &mut R| {
        if cfg.classical {
            classical_body(rng, names)
        } else {
            general_body(rng, names, cfg.max_depth)
        }
    };
    let mut rules = Vec::new();
    for name in names {
        for _ in 0..rng.gen_range(0..=2) {
            rules.push(Rule { head: Atom::new(*name, vec![]), body: body(rng) });
        }
    }
    if rules.is_empty() {
        rules.push(Rule { head: Atom::new(names[0], vec![]), body: body(rng) });
    }
    rules.shuffle(rng);
    Program::new(rules)
}

/// `count` programs drawn from one seed, every second one classical.
pub fn corpus<V: Sample>(seed: u64, count: usize) -> Vec<(Program<V>, GenConfig)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let cfg = GenConfig { classical: k % 2 == 1, ..GenConfig::default() };
            (random_program(&mut rng, &cfg), cfg)
        })
        .collect()
}

fn literal<V: Sample, R: Rng + ?Sized>(rng: &mut R, names: &[&str]) -> Formula<V> {
    let a = Formula::Atom(Atom::new(*names.choose(rng).expect("non-empty"), vec![]));
    if rng.gen_bool(0.4) {
        Formula::neg(a)
    } else {
        a
    }
}

fn general_body<V: Sample, R: Rng + ?Sized>(rng: &mut R, names: &[&str], depth: usize) -> Formula<V> {
    if depth == 0 || rng.gen_bool(0.3) {
        return if rng.gen_bool(0.15) { Formula::Const(V::sample(rng)) } else { literal(rng, names) };
    }
    let op = *BinOp::ALL.choose(rng).expect("non-empty");
    Formula::binary(op, general_body(rng, names, depth - 1), general_body(rng, names, depth - 1))
}

fn classical_body<V: Sample, R: Rng + ?Sized>(rng: &mut R, names: &[&str]) -> Formula<V> {
    let conj = |rng: &mut R| {
        let len = rng.gen_range(1..=2);
        let mut f = classical_literal(rng, names);
        for _ in 1..len {
            f = Formula::binary(BinOp::MeetT, f, classical_literal(rng, names));
        }
        f
    };
    let mut body = conj(rng);
    if rng.gen_bool(0.35) {
        body = Formula::binary(BinOp::JoinT, body, conj(rng));
    }
    body
}

fn classical_literal<V: Sample, R: Rng + ?Sized>(rng: &mut R, names: &[&str]) -> Formula<V> {
    match rng.gen_range(0..12) {
        0 => Formula::Const(V::tt()),
        1 => Formula::Const(V::ff()),
        _ => literal(rng, names),
    }
}

pub fn random_interpretation<V: Sample, R: Rng + ?Sized>(rng: &mut R, base: &Arc<HerbrandBase>) -> Interpretation<V> {
    let values = (0..base.len()).map(|_| V::sample(rng)).collect();
    Interpretation::new(Arc::clone(base), values).expect("sized to the base")
}

/// `(i, j)` with `i ≼_k j`, as `(j ⊗ r, j)`.
pub fn random_k_pair<V: Sample, R: Rng + ?Sized>(
    rng: &mut R,
    base: &Arc<HerbrandBase>,
) -> (Interpretation<V>, Interpretation<V>) {
    let j = random_interpretation(rng, base);
    let r = random_interpretation(rng, base);
    (j.meet_k(&r), j)
}

/// `(i, j)` with `i ≼_t j`, as `(j ∧ r, j)`.
pub fn random_t_pair<V: Sample, R: Rng + ?Sized>(
    rng: &mut R,
    base: &Arc<HerbrandBase>,
) -> (Interpretation<V>, Interpretation<V>) {
    let j = random_interpretation(rng, base);
    let r = random_interpretation(rng, base);
    (j.meet_t(&r), j)
}

fn prunings<V: Clone>(f: &Formula<V>) -> Vec<Formula<V>> {
    match f {
        Formula::Binary(op, l, r) => {
            let mut out = vec![(**l).clone(), (**r).clone()];
            out.extend(prunings(l).into_iter().map(|l2| Formula::Binary(*op, Box::new(l2), r.clone())));
            out.extend(prunings(r).into_iter().map(|r2| Formula::Binary(*op, l.clone(), Box::new(r2))));
            out
        }
        Formula::Neg(x) => prunings(x).into_iter().map(Formula::neg).collect(),
        Formula::Quant(q, v, x) => {
            prunings(x).into_iter().map(|x2| Formula::Quant(q.clone(), v.clone(), Box::new(x2))).collect()
        }
        _ => Vec::new(),
    }
}

/// Shrinks a program on which `fails` holds: first by deleting rules, then
/// by replacing body subformulas with one of their operands, until no single
/// step keeps it failing.
pub fn shrink<V: Clone>(program: &Program<V>, fails: impl Fn(&Program<V>) -> bool) -> Program<V> {
    let mut current = program.clone();
    'deletion: loop {
        for k in 0..current.rules.len() {
            let mut candidate = current.clone();
            candidate.rules.remove(k);
            if !candidate.rules.is_empty() && fails(&candidate) {
                current = candidate;
                continue 'deletion;
            }
        }
        break;
    }
    'pruning: loop {
        for k in 0..current.rules.len() {
            for body in prunings(&current.rules[k].body) {
                let mut candidate = current.clone();
                candidate.rules[k].body = body;
                if fails(&candidate) {
                    current = candidate;
                    continue 'pruning;
                }
            }
        }
        break;
    }
    current
}
