//! Algebraic laws every [`Bilattice`] must satisfy, as checkable predicates.
//!
//! Each function takes concrete arguments and returns the names of the laws
//! that fail for them, so property tests can run exhaustively (FOUR) or on
//! samples (intervals) and report the exact counterexample.

use super::{Bilattice, BinOp};

/// Negation is an involution, reverses `≼_t` and preserves `≼_k`.
pub fn negation<V: Bilattice>(x: &V, y: &V) -> Vec<&'static str> {
    let mut bad = Vec::new();
    if x.neg().neg() != *x {
        bad.push("involution");
    }
    if x.leq_t(y) && !y.neg().leq_t(&x.neg()) {
        bad.push("negation reverses <=t");
    }
    if x.leq_k(y) && !x.neg().leq_k(&y.neg()) {
        bad.push("negation preserves <=k");
    }
    bad
}

/// Commutativity, associativity, idempotence and order/operation agreement
/// for all four operations.
pub fn lattice<V: Bilattice>(x: &V, y: &V, z: &V) -> Vec<&'static str> {
    let mut bad = Vec::new();
    for op in BinOp::ALL {
        if op.apply(x, y) != op.apply(y, x) {
            bad.push("commutativity");
        }
        if op.apply(&op.apply(x, y), z) != op.apply(x, &op.apply(y, z)) {
            bad.push("associativity");
        }
        if op.apply(x, x) != *x {
            bad.push("idempotence");
        }
    }
    if x.leq_t(y) != (x.meet_t(y) == *x) {
        bad.push("<=t agrees with meet_t");
    }
    if x.leq_k(y) != (x.join_k(y) == *y) {
        bad.push("<=k agrees with join_k");
    }
    if !V::ff().leq_t(x) || !x.leq_t(&V::tt()) {
        bad.push("f and t bound <=t");
    }
    if !V::bot().leq_k(x) || !x.leq_k(&V::top()) {
        bad.push("bot and top bound <=k");
    }
    bad
}

/// Every operation is monotone in both arguments under both orders, given
/// `x ≼ y` in the order being tested.
pub fn interlacing<V: Bilattice>(x: &V, y: &V, z: &V) -> Vec<&'static str> {
    let mut bad = Vec::new();
    for op in BinOp::ALL {
        if x.leq_t(y) && !(op.apply(x, z).leq_t(&op.apply(y, z)) && op.apply(z, x).leq_t(&op.apply(z, y))) {
            bad.push("interlacing <=t");
        }
        if x.leq_k(y) && !(op.apply(x, z).leq_k(&op.apply(y, z)) && op.apply(z, x).leq_k(&op.apply(z, y))) {
            bad.push("interlacing <=k");
        }
    }
    bad
}

/// `x op1 (y op2 z) = (x op1 y) op2 (x op1 z)` for every pair of distinct
/// operations.
pub fn distributivity<V: Bilattice>(x: &V, y: &V, z: &V) -> Vec<&'static str> {
    let mut bad = Vec::new();
    for outer in BinOp::ALL {
        for inner in BinOp::ALL {
            if outer == inner {
                continue;
            }
            let lhs = outer.apply(x, &inner.apply(y, z));
            let rhs = inner.apply(&outer.apply(x, y), &outer.apply(x, z));
            if lhs != rhs {
                bad.push("distributivity");
            }
        }
    }
    bad
}

/// The order lemmas relating `≼_t`, `≼_k`, `⊗`, `⊕` and `f`.
pub fn order_lemmas<V: Bilattice>(x: &V, y: &V, z: &V) -> Vec<&'static str> {
    let f = V::ff();
    let mut bad = Vec::new();
    // chains under one order bound the middle element under the other
    if x.leq_t(y) && y.leq_t(z) && !(x.meet_k(z).leq_k(y) && y.leq_k(&x.join_k(z))) {
        bad.push("y1.1");
    }
    if x.leq_k(y) && y.leq_k(z) && !(x.meet_t(z).leq_t(y) && y.leq_t(&x.join_t(z))) {
        bad.push("y1.2");
    }
    if x.leq_t(y) {
        let m = x.meet_k(y);
        let j = x.join_k(y);
        if !(x.leq_t(&m) && m.leq_t(y) && x.leq_t(&j) && j.leq_t(y)) {
            bad.push("p1");
        }
        if !f.meet_k(x).leq_t(y) {
            bad.push("p9.1");
        }
    }
    if x.leq_k(y) && !f.meet_k(y).leq_t(x) {
        bad.push("p9.2");
    }
    if x.join_k(z).leq_t(y) && !z.leq_k(&y.join_k(&f)) {
        bad.push("sms2");
    }
    if f.meet_k(y).leq_k(x) && x.leq_k(&f.join_k(y)) && !x.leq_t(y) {
        bad.push("sms3");
    }
    if x.leq_k(y) && x.leq_t(y) && x.meet_k(&f) != y.meet_k(&f) {
        bad.push("sms4");
    }
    bad
}

/// All of the above for one triple.
pub fn all<V: Bilattice>(x: &V, y: &V, z: &V) -> Vec<&'static str> {
    let mut bad = negation(x, y);
    bad.extend(lattice(x, y, z));
    bad.extend(interlacing(x, y, z));
    bad.extend(distributivity(x, y, z));
    bad.extend(order_lemmas(x, y, z));
    bad
}
