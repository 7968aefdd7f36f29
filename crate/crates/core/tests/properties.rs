use std::sync::Arc;

use num_rational::BigRational;
use proptest::prelude::*;

use bilat_core::bilattice::{format_rational, laws, parse_rational, Bilattice, IntervalValue};
use bilat_core::interp::Interpretation;
use bilat_core::program::HerbrandBase;

fn rational() -> impl Strategy<Value = BigRational> {
    (1i64..=60).prop_flat_map(|q| (0..=q).prop_map(move |p| BigRational::new(p.into(), q.into())))
}

fn interval() -> impl Strategy<Value = IntervalValue> {
    (rational(), rational()).prop_map(|(lo, hi)| IntervalValue::new(lo, hi).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn interval_laws(x in interval(), y in interval(), z in interval()) {
        prop_assert_eq!(laws::all(&x, &y, &z), Vec::<&str>::new());
    }

    #[test]
    fn interval_laws_on_chains(x in interval(), y in interval(), z in interval()) {
        let (a, c) = (x.meet_t(&y), y.join_t(&z));
        prop_assert_eq!(laws::all(&a, &y, &c), Vec::<&str>::new());
        let (a, c) = (x.meet_k(&y), y.join_k(&z));
        prop_assert_eq!(laws::all(&a, &y, &c), Vec::<&str>::new());
    }

    #[test]
    fn rationals_print_and_parse_back(x in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn values_print_and_parse_back(x in interval()) {
        prop_assert_eq!(x.to_string().parse::<IntervalValue>().unwrap(), x);
    }

    #[test]
    fn interpretations_print_and_parse_back(vals in proptest::collection::vec(interval(), 1..5)) {
        let names: Vec<String> = (0..vals.len()).map(|k| format!("p{k}")).collect();
        let base = Arc::new(HerbrandBase::propositional(&names));
        let i = Interpretation::new(Arc::clone(&base), vals).unwrap();
        prop_assert_eq!(Interpretation::parse(base, &i.to_string()).unwrap(), i);
    }
}
