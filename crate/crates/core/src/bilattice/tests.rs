use super::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use FourValue::{Bottom, False, Top, True};

fn iv(lo: &str, hi: &str) -> IntervalValue {
    IntervalValue::parse_pair(lo, hi).unwrap()
}

fn embed(v: FourValue) -> IntervalValue {
    match v {
        False => iv("0", "0"),
        True => iv("1", "1"),
        Bottom => iv("0", "1"),
        Top => iv("1", "0"),
    }
}

fn random_interval(rng: &mut ChaCha8Rng) -> IntervalValue {
    let endpoint = |rng: &mut ChaCha8Rng| {
        let q: i64 = rng.gen_range(1..=12);
        let p: i64 = rng.gen_range(0..=q);
        Rational::new(p.into(), q.into())
    };
    let lo = endpoint(rng);
    let hi = endpoint(rng);
    IntervalValue::new(lo, hi).unwrap()
}

#[test]
fn four_operation_examples() {
    assert_eq!(True.meet_k(&False), Bottom);
    assert_eq!(True.join_k(&False), Top);
    assert_eq!(Top.neg(), Top);
    assert_eq!(Bottom.neg(), Bottom);
    assert_eq!(False.neg(), True);
    assert!(False.leq_t(&Bottom) && False.leq_t(&Top));
    assert!(!Bottom.leq_t(&Top) && !Top.leq_t(&Bottom));
    assert!(!False.leq_k(&True) && !True.leq_k(&False));
    assert_eq!(Bottom.join_t(&Top), True);
    assert_eq!(Bottom.meet_t(&Top), False);
}

#[test]
fn interval_operation_examples() {
    assert_eq!(iv("0.3", "0.5").join_k(&iv("0.2", "0.4")), iv("0.3", "0.4"));
    assert_eq!(iv("0", "1").meet_t(&iv("0.7", "0.7")), iv("0", "0.7"));
    assert_eq!(iv("0.3", "0.5").neg(), iv("0.5", "0.7"));
    assert_eq!(iv("0.2", "0.9").neg().neg(), iv("0.2", "0.9"));
    assert!(iv("0", "1").leq_k(&iv("0.7", "0.7")));
    assert!(!iv("0.3", "0.5").leq_t(&iv("0.2", "0.9")));
}

/// Least upper bound by brute force: the upper bounds of `set`, then the one
/// below all others.
fn lub_by_enumeration(set: &[FourValue], leq: fn(&FourValue, &FourValue) -> bool) -> FourValue {
    let uppers: Vec<_> = FourValue::ALL
        .into_iter()
        .filter(|u| set.iter().all(|s| leq(s, u)))
        .collect();
    *uppers
        .iter()
        .find(|u| uppers.iter().all(|w| leq(u, w)))
        .unwrap()
}

#[test]
fn big_operations() {
    let set = [False, Bottom, Top];
    assert_eq!(lub_by_enumeration(&set, FourValue::leq_t), True);
    assert_eq!(FourValue::big_lub_t(&set), True);

    // every subset of FOUR, against the enumeration oracle
    for mask in 0..16u32 {
        let subset: Vec<_> = FourValue::ALL
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, v)| v)
            .collect();
        assert_eq!(FourValue::big_lub_t(&subset), lub_by_enumeration(&subset, FourValue::leq_t));
        assert_eq!(FourValue::big_lub_k(&subset), lub_by_enumeration(&subset, FourValue::leq_k));
        let geq_t = |a: &FourValue, b: &FourValue| b.leq_t(a);
        let geq_k = |a: &FourValue, b: &FourValue| b.leq_k(a);
        assert_eq!(FourValue::big_glb_t(&subset), lub_by_enumeration(&subset, geq_t));
        assert_eq!(FourValue::big_glb_k(&subset), lub_by_enumeration(&subset, geq_k));
    }

    let pair = [iv("0.2", "0.4"), iv("0.3", "0.1")];
    assert_eq!(IntervalValue::big_lub_t(&pair), iv("0.3", "0.4"));
    assert_eq!(IntervalValue::big_glb_k(&[]), IntervalValue::top());
    assert_eq!(FourValue::big_glb_k(&[]), Top);
    assert_eq!(FourValue::big_lub_t(&[]), False);
}

#[test]
fn four_laws_exhaustive() {
    for x in FourValue::ALL {
        for y in FourValue::ALL {
            for z in FourValue::ALL {
                let bad = laws::all(&x, &y, &z);
                assert!(bad.is_empty(), "{x} {y} {z}: {bad:?}");
            }
        }
    }
}

#[test]
fn interval_laws_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let x = random_interval(&mut rng);
        let y = random_interval(&mut rng);
        let z = random_interval(&mut rng);
        let bad = laws::all(&x, &y, &z);
        assert!(bad.is_empty(), "{x} {y} {z}: {bad:?}");
        // chained triples so the lemma antecedents actually fire
        let (y_t, z_t) = (x.join_t(&y), x.join_t(&y).join_t(&z));
        let (y_k, z_k) = (x.join_k(&y), x.join_k(&y).join_k(&z));
        assert!(laws::order_lemmas(&x, &y_t, &z_t).is_empty());
        assert!(laws::order_lemmas(&x, &y_k, &z_k).is_empty());
    }
}

#[test]
fn four_embeds_into_intervals() {
    for x in FourValue::ALL {
        assert_eq!(embed(x.neg()), embed(x).neg());
        for y in FourValue::ALL {
            for op in BinOp::ALL {
                assert_eq!(embed(op.apply(&x, &y)), op.apply(&embed(x), &embed(y)), "{x} {op:?} {y}");
            }
            assert_eq!(x.leq_t(&y), embed(x).leq_t(&embed(y)));
            assert_eq!(x.leq_k(&y), embed(x).leq_k(&embed(y)));
        }
    }
    assert_eq!(embed(FourValue::ff()), IntervalValue::ff());
    assert_eq!(embed(FourValue::bot()), IntervalValue::bot());
}

#[test]
fn rational_text_forms() {
    assert_eq!(parse_rational("0.3").unwrap(), Rational::new(3.into(), 10.into()));
    assert_eq!(parse_rational(".5").unwrap(), Rational::new(1.into(), 2.into()));
    assert_eq!(parse_rational("2/6").unwrap(), Rational::new(1.into(), 3.into()));
    assert!(parse_rational("0.3.1").is_err());
    assert!(parse_rational("").is_err());
    assert!(parse_rational("1/0").is_err());

    let show = |s: &str| format_rational(&parse_rational(s).unwrap());
    assert_eq!(show("0"), "0");
    assert_eq!(show("1"), "1");
    assert_eq!(show("0.30"), "0.3");
    assert_eq!(show("1/8"), "0.125");
    assert_eq!(show("1/20"), "0.05");
    assert_eq!(show("1/3"), "1/3");
    assert_eq!(show("4/6"), "2/3");
}

#[test]
fn value_text_forms() {
    assert_eq!(iv("0.3", "0.5").to_string(), "[0.3,0.5]");
    assert_eq!("[0.3, 0.5]".parse::<IntervalValue>().unwrap(), iv("0.3", "0.5"));
    assert_eq!("#bot".parse::<IntervalValue>().unwrap(), IntervalValue::bot());
    assert!("[1.5,0]".parse::<IntervalValue>().is_err());
    assert_eq!("top".parse::<FourValue>().unwrap(), Top);
    assert!(matches!("[0,1]".parse::<FourValue>(), Err(ValueError::WrongKind { .. })));
    for v in FourValue::ALL {
        assert_eq!(v.to_string().parse::<FourValue>().unwrap(), v);
    }
}

#[test]
fn inconsistent_intervals_are_values() {
    let v = iv("0.7", "0.2");
    assert!(v.leq_k(&IntervalValue::top()));
    assert!(iv("0.3", "0.5").leq_k(&v.join_k(&iv("0.3", "0.5"))));
    assert_eq!(iv("0.3", "0.5").join_k(&iv("0.6", "0.8")), iv("0.6", "0.5"));
}
