use std::sync::Arc;

use super::*;
use crate::bilattice::{BinOp, FourValue, IntervalValue, ValueError};
use crate::interp::Interpretation;

use FourValue::{Bottom, False, True};

const RUNNING: &str = "p <- p.\nq <- ~r.\nr <- ~q & ~p.\n";

fn four(text: &str) -> GroundProgram<FourValue> {
    parse_ground(text).unwrap()
}

fn atom(name: &str) -> Formula<FourValue> {
    Formula::Atom(Atom::new(name, vec![]))
}

fn interp(g: &GroundProgram<FourValue>, values: &[FourValue]) -> Interpretation<FourValue> {
    Interpretation::new(Arc::clone(g.base()), values.to_vec()).unwrap()
}

#[test]
fn parses_negated_atom() {
    let p = parse_program::<FourValue>("q <- ~r.").unwrap();
    assert_eq!(p.rules.len(), 1);
    assert_eq!(p.rules[0].head, Atom::new("q", vec![]));
    assert_eq!(p.rules[0].body, Formula::neg(atom("r")));
}

#[test]
fn parses_interval_body() {
    let p = parse_program::<IntervalValue>("b <- (~c & a) | [0.3,0.5].").unwrap();
    let ia = |n: &str| Formula::<IntervalValue>::Atom(Atom::new(n, vec![]));
    let expected = Formula::binary(
        BinOp::JoinT,
        Formula::binary(BinOp::MeetT, Formula::neg(ia("c")), ia("a")),
        Formula::Const(IntervalValue::parse_pair("0.3", "0.5").unwrap()),
    );
    assert_eq!(p.rules[0].body, expected);
    let q = parse_program::<IntervalValue>("b <- [.5, 1/3].").unwrap();
    assert_eq!(q.rules[0].body, Formula::Const(IntervalValue::parse_pair("0.5", "1/3").unwrap()));
}

#[test]
fn precedence_and_printing() {
    let p = parse_program::<FourValue>("a <- b + c * d | e & ~f.").unwrap();
    let expected = Formula::binary(
        BinOp::JoinK,
        atom("b"),
        Formula::binary(
            BinOp::MeetK,
            atom("c"),
            Formula::binary(BinOp::JoinT, atom("d"), Formula::binary(BinOp::MeetT, atom("e"), Formula::neg(atom("f")))),
        ),
    );
    assert_eq!(p.rules[0].body, expected);
    assert_eq!(p.to_string(), "a <- b + c * d | e & ~f.\n");

    let q = parse_program::<FourValue>("a <- ((b + c) & d) | ~(e * #top).").unwrap();
    assert_eq!(q.to_string(), "a <- (b + c) & d | ~(e * #top).\n");
    assert_eq!(parse_program::<FourValue>(&q.to_string()).unwrap(), q);

    let r = parse_program::<FourValue>("a <- b & (c & d).").unwrap();
    assert_eq!(parse_program::<FourValue>(&r.to_string()).unwrap(), r);
}

#[test]
fn rejects_unbound_variable() {
    let err = parse_program::<FourValue>("p(X) <- q(X,Y).").unwrap_err();
    assert!(matches!(&err, ParseError::UnboundVariable { var, .. } if var == "Y"), "{err}");
    assert_eq!(err.pos(), Pos { line: 1, col: 9 });
    assert!(parse_program::<FourValue>("p(X) <- exists Y: q(X,Y).").is_ok());
}

#[test]
fn rejects_bad_input() {
    let err = parse_program::<FourValue>("p(f(a)).").unwrap_err();
    assert!(matches!(err, ParseError::FunctionSymbol { .. }), "{err}");

    let err = parse_program::<FourValue>("a <- [0.3,0.5].").unwrap_err();
    assert!(matches!(err, ParseError::Value { source: ValueError::WrongKind { .. }, .. }), "{err}");

    let err = parse_program::<IntervalValue>("a <- [0.3,1.5].").unwrap_err();
    assert!(matches!(err, ParseError::Value { source: ValueError::OutOfRange(_), .. }), "{err}");

    let err = parse_program::<FourValue>("p(a).\nq <- p.").unwrap_err();
    assert!(matches!(err, ParseError::ArityMismatch { expected: 1, found: 0, .. }), "{err}");

    let err = parse_program::<FourValue>("a <- b\n  & .").unwrap_err();
    assert_eq!(err.pos(), Pos { line: 2, col: 5 });

    assert!(parse_program::<FourValue>("a <- #maybe.").is_err());
    assert!(parse_program::<FourValue>("a <- b").is_err());
    assert!(parse_program::<FourValue>("A <- b.").is_err());
}

#[test]
fn facts_and_comments() {
    let p = parse_program::<FourValue>("% header\na. % trailing\nb <- a.\n").unwrap();
    assert_eq!(p.rules[0].body, Formula::Const(True));
    assert_eq!(p.rules.len(), 2);
    assert!(parse_program::<FourValue>("").unwrap().rules.is_empty());
}

#[test]
fn pstar_merges_same_head() {
    let g = four("a <- ~a.\na <- #f.");
    assert_eq!(g.to_string(), "a <- ~a | #f.\n");
    let g = four("a <- b.\nb.\na <- c & b.\na <- #top.");
    assert_eq!(g.body(0).with_base(g.base()).to_string(), "b | c & b | #top");
}

#[test]
fn pstar_running_example_unchanged() {
    let g = four(RUNNING);
    assert_eq!(g.base().names(), ["p", "q", "r"]);
    assert_eq!(g.to_string(), RUNNING);
}

#[test]
fn pstar_adds_false_rules() {
    let g = four("q <- p.");
    assert_eq!(g.base().names(), ["q", "p"]);
    assert_eq!(g.body(1), &GroundFormula::Const(False));
}

#[test]
fn grounds_over_constants() {
    let g = four("p(X) <- q(X) & ~r(X).\nq(a).\nq(b).\nr(b).");
    assert_eq!(g.base().names(), ["p(a)", "p(b)", "q(a)", "q(b)", "r(a)", "r(b)"]);
    assert_eq!(g.body(0).with_base(g.base()).to_string(), "q(a) & ~r(a)");
    assert_eq!(g.body(4), &GroundFormula::Const(False));
    assert_eq!(g.base().lookup("p( b )"), Some(1));

    let g = four("e(a,b).\nreach(X,Y) <- e(X,Y).");
    assert_eq!(g.len(), 8);
    assert_eq!(g.base().name(1), "e(a,b)");
    assert_eq!(g.body(1), &GroundFormula::Const(True));
    assert_eq!(g.body(0), &GroundFormula::Const(False));
}

#[test]
fn quantifiers_expand() {
    let g = four("s <- exists X: q(X).\nt <- forall X: q(X) | r.\nq(a).\nq(b).");
    assert_eq!(g.body(0).with_base(g.base()).to_string(), "q(a) | q(b)");
    assert_eq!(g.body(1).with_base(g.base()).to_string(), "(q(a) | r) & (q(b) | r)");

    // no constants at all
    let g = four("s <- exists X: #t.\nt <- forall X: #f.");
    assert_eq!(g.body(0), &GroundFormula::Const(False));
    assert_eq!(g.body(1), &GroundFormula::Const(True));
}

#[test]
fn pstar_is_deterministic() {
    let text = "p(X) <- q(X) | p(X).\nq(c).\np(a) <- #t.\nq(a) <- p(c).";
    let a = four(text);
    let b = four(text);
    assert_eq!(a, b);
    assert_eq!(a.to_string(), b.to_string());
    for body in a.bodies() {
        let mut atoms = Vec::new();
        body.atoms(&mut atoms);
        assert!(atoms.iter().all(|&x| x < a.len()));
    }
}

#[test]
fn general_reduct_examples() {
    let g = four("a <- ~a | #f.");
    let r = general_reduct(&g, &interp(&g, &[Bottom]));
    assert_eq!(r.body(0), &GroundFormula::Const(Bottom));
    assert_eq!(general_reduct(&r, &interp(&g, &[True])), r);

    let g = four(RUNNING);
    let r = general_reduct(&g, &interp(&g, &[False, Bottom, Bottom]));
    assert_eq!(r.to_string(), "p <- #f.\nq <- #bot.\nr <- #bot.\n");
}

#[test]
fn gl_reduct_examples() {
    let g = four(RUNNING);
    let r = gl_reduct(&g, &interp(&g, &[False, True, False])).unwrap();
    assert_eq!(r.to_string(), "p <- p.\nq <- #t.\nr <- #f & #t.\n");
    assert!(r.bodies().iter().all(|b| !b.has_neg()));

    let pos = four("a <- b & c | #t.\nb.");
    assert_eq!(gl_reduct(&pos, &Interpretation::bottom_k(Arc::clone(pos.base()))).unwrap(), pos);

    let bad = four("a <- b * c.");
    assert!(gl_reduct(&bad, &Interpretation::bottom_k(Arc::clone(bad.base()))).is_err());
    let bad = four("a <- ~(b & c).");
    assert!(gl_reduct(&bad, &Interpretation::bottom_k(Arc::clone(bad.base()))).is_err());
    let bad = four("a <- #bot.");
    assert!(check_classical(&bad).is_err());
}

#[test]
fn k_completion_examples() {
    let g = four("a <- a * ~a.");
    let c = k_complete(&g, &Interpretation::bottom_t(Arc::clone(g.base())));
    assert_eq!(c.to_string(), "a <- a * ~a + #f.\n");

    let g = four(RUNNING);
    let c = k_complete(&g, &interp(&g, &[False, Bottom, Bottom]));
    assert_eq!(c.to_string(), "p <- p + #f.\nq <- ~r + #bot.\nr <- ~q & ~p + #bot.\n");

    // completing with all-unknown changes no value
    let c = k_complete(&g, &Interpretation::bottom_k(Arc::clone(g.base())));
    for values in [[False, True, Bottom], [True, True, True], [Bottom, False, FourValue::Top]] {
        let i = interp(&g, &values);
        for a in 0..3 {
            assert_eq!(i.eval(c.body(a)), i.eval(g.body(a)));
        }
    }
}

#[test]
fn classical_and_literal_normal_forms() {
    assert!(four(RUNNING).is_classical());
    assert!(four(RUNNING).is_literal_normal());
    assert!(four("a <- ~#t | b.").is_literal_normal());
    assert!(!four("a <- ~(b | c).").is_literal_normal());
    assert!(!four("a <- (b | c) & d.").is_classical());
}
