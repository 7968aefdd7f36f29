use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::bilattice::IntervalValue;
use crate::gen::{random_interpretation, random_program, GenConfig};
use crate::program::{build_pstar, parse_ground};

use FourValue::{Bottom, False, Top, True};

const RUNNING: &str = include_str!("../../fixtures/running.blp");
const EXMY: &str = include_str!("../../fixtures/exmy.blp");
const RUNEX6: &str = include_str!("../../fixtures/runex6.blp");

fn iv(lo: &str, hi: &str) -> IntervalValue {
    IntervalValue::parse_pair(lo, hi).unwrap()
}

fn ivs(g: &GroundProgram<IntervalValue>, pairs: &[(&str, &str)]) -> Interpretation<IntervalValue> {
    Interpretation::new(Arc::clone(g.base()), pairs.iter().map(|(l, h)| iv(l, h)).collect()).unwrap()
}

fn fours(g: &GroundProgram<FourValue>, values: &[FourValue]) -> Interpretation<FourValue> {
    Interpretation::new(Arc::clone(g.base()), values.to_vec()).unwrap()
}

#[test]
fn kripke_kleene_examples() {
    let g = parse_ground::<FourValue>(RUNNING).unwrap();
    assert_eq!(kripke_kleene(&g).unwrap().0.values(), [Bottom; 3]);

    let e = parse_ground::<IntervalValue>(EXMY).unwrap();
    assert_eq!(kripke_kleene(&e).unwrap().0, ivs(&e, &[("0", "1"), ("0", "1"), ("0.7", "1"), ("0.7", "0.7")]));

    let r = parse_ground::<IntervalValue>(RUNEX6).unwrap();
    let (kk, trace) = kripke_kleene(&r).unwrap();
    assert_eq!(kk, ivs(&r, &[("0.3", "1"), ("0.3", "0.8"), ("0.2", "0.7")]));
    assert_eq!(trace.steps.len(), 4);
}

#[test]
fn well_founded_routes() {
    let g = parse_ground::<FourValue>(RUNNING).unwrap();
    for route in WfRoute::ALL {
        assert_eq!(well_founded(&g, route).unwrap().0.values(), [False, Bottom, Bottom], "{route}");
    }
    let r = parse_ground::<IntervalValue>(RUNEX6).unwrap();
    let wf = ivs(&r, &[("0.3", "0.5"), ("0.3", "0.5"), ("0.5", "0.7")]);
    for route in WfRoute::ALL {
        assert_eq!(well_founded(&r, route).unwrap().0, wf, "{route}");
    }
    assert_eq!(well_founded_checked(&r).unwrap(), wf);

    let (_, outer, stages) = well_founded_traced(&r, WfRoute::PsiPrime).unwrap();
    assert_eq!(outer.steps.len(), 4);
    assert_eq!(stages.len(), 3);
    assert_eq!(stages[1].output, wf);
    let (_, outer, stages) = well_founded_traced(&r, WfRoute::PhiPrime).unwrap();
    assert_eq!(outer.steps.len(), 3);
    assert_eq!(stages[0].output, wf);
    assert!(stages.iter().all(|s| s.second.is_some()));

    let bad = parse_ground::<FourValue>("a <- ~(a & a).").unwrap();
    assert!(well_founded(&bad, WfRoute::PsiPrime).is_err());
    assert!(well_founded(&bad, WfRoute::Pi).is_ok());
    assert!(well_founded_checked(&bad).is_ok());
}

#[test]
fn stable_models_of_running_example() {
    let g = parse_ground::<FourValue>(RUNNING).unwrap();
    let expected = vec![
        fours(&g, &[False, Bottom, Bottom]),
        fours(&g, &[False, False, True]),
        fours(&g, &[False, True, False]),
        fours(&g, &[False, Top, Top]),
    ];
    assert_eq!(enumerate_stable(&g, CLASSIFY_LIMIT).unwrap(), expected);
    for m in StableMethod::ALL {
        let found: Vec<_> = all_interpretations(g.base()).filter(|i| is_stable(&g, i, m).unwrap()).collect();
        assert_eq!(found, expected, "{m}");
    }
    let i8 = fours(&g, &[Top, True, False]);
    assert!(!is_stable(&g, &i8, StableMethod::PsiPrimeFixpoint).unwrap());
}

#[test]
fn stable_models_of_small_programs() {
    let g = parse_ground::<FourValue>("p <- p.").unwrap();
    assert_eq!(enumerate_stable(&g, 8).unwrap(), [fours(&g, &[False])]);

    // pinned from the engine: both the unknown and the inconsistent value are stable
    let g = parse_ground::<FourValue>("p <- ~p.").unwrap();
    assert_eq!(enumerate_stable(&g, 8).unwrap(), [fours(&g, &[Bottom]), fours(&g, &[Top])]);

    let pos = parse_ground::<FourValue>("a <- b & c.\nb.\nc <- b | a.\nd <- d.").unwrap();
    let kk = kripke_kleene(&pos).unwrap().0;
    let stable = enumerate_stable(&pos, 8).unwrap();
    assert_eq!(stable.len(), 1);
    assert_eq!(stable[0].values(), [True, True, True, False]);
    assert!(kk.leq_k(&stable[0]).unwrap());

    let wide = parse_ground::<FourValue>("a.\nb.\nc.").unwrap();
    assert!(matches!(enumerate_stable(&wide, 2), Err(Error::Limit { .. })));
}

#[test]
fn interval_stability_by_fixpoints() {
    let r = parse_ground::<IntervalValue>(RUNEX6).unwrap();
    let wf = ivs(&r, &[("0.3", "0.5"), ("0.3", "0.5"), ("0.5", "0.7")]);
    let kk = ivs(&r, &[("0.3", "1"), ("0.3", "0.8"), ("0.2", "0.7")]);
    for m in [StableMethod::PsiPrimeFixpoint, StableMethod::PhiPrimeFixpoint, StableMethod::KkOfKCompletion] {
        assert!(is_stable(&r, &wf, m).unwrap());
        assert!(!is_stable(&r, &kk, m).unwrap());
    }
    assert!(matches!(is_stable(&r, &wf, StableMethod::GlReductClassical), Err(Error::FourOnly(_))));
    assert!(!StableMethod::MinKCompletionModels.applies_to(&r));
}

#[test]
fn classification_of_running_example() {
    let g = parse_ground::<FourValue>(RUNNING).unwrap();
    let c = classify(&g, false, CLASSIFY_LIMIT).unwrap();
    let values: Vec<_> = c.rows.iter().map(|r| r.interpretation.values().to_vec()).collect();
    assert_eq!(
        values,
        [
            [Bottom, Bottom, Bottom],
            [Bottom, True, False],
            [False, Bottom, Bottom],
            [False, False, True],
            [False, True, False],
            [False, Top, Top],
            [True, True, False],
            [Top, True, False],
            [Top, Top, Top],
        ]
    );
    let pick = |f: fn(&Flags) -> bool| -> Vec<usize> {
        c.rows.iter().enumerate().filter(|(_, r)| f(&r.flags)).map(|(k, _)| k + 1).collect()
    };
    assert_eq!(pick(|f| f.kk), [1]);
    assert_eq!(pick(|f| f.wf), [3]);
    assert_eq!(pick(|f| f.stable), [3, 4, 5, 6]);
    assert_eq!(pick(|f| f.deductively_closed), [3, 4, 5, 6]);
    assert_eq!(pick(|f| f.supported), [3, 4, 5, 6, 8, 9]);
    assert_eq!(pick(|f| f.model), (1..=9).collect::<Vec<_>>());
    assert!(c.rows.iter().all(|r| r.flags.violations().is_empty()));
    assert_eq!(c.rows[5].unfounded.as_deref(), Some(&[0, 1, 2][..]));
    assert_eq!(c.stable.len(), 4);

    let all = classify(&g, true, CLASSIFY_LIMIT).unwrap();
    assert_eq!(all.rows.len(), 64);
    assert_eq!(all.rows.iter().filter(|r| r.flags.cl_model).count(), 9);
    assert!(all.rows.iter().all(|r| r.flags.violations().is_empty()));
}

#[test]
fn classification_of_tiny_programs() {
    let g = parse_ground::<FourValue>("a <- #t.").unwrap();
    let c = classify(&g, false, 8).unwrap();
    assert_eq!(c.rows.len(), 1);
    let f = c.rows[0].flags;
    assert!(f.kk && f.wf && f.stable && f.cl_model);

    let g = parse_ground::<FourValue>("a <- ~a.\na <- #f.").unwrap();
    let c = classify(&g, false, 8).unwrap();
    let vals: Vec<_> = c.rows.iter().map(|r| r.interpretation.values()[0]).collect();
    assert_eq!(vals, [Bottom, Top]);
    assert!(c.rows[0].flags.kk);
    assert_eq!(c.kk.values(), [False.meet_k(&True)]);
}

#[test]
fn cross_check_running_and_random() {
    let g = parse_ground::<FourValue>(RUNNING).unwrap();
    let report = cross_check(&g).unwrap();
    assert_eq!(report.interpretations, 64);
    assert_eq!(report.stable.len(), 4);
    assert_eq!(report.methods.len(), 5);
    assert_eq!(report.unfounded_checks, 27);

    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for k in 0..30 {
        let cfg = GenConfig { classical: k % 3 == 0, ..GenConfig::default() };
        let g = build_pstar(&random_program::<FourValue, _>(&mut rng, &cfg));
        let report = cross_check(&g).unwrap_or_else(|e| panic!("{g}\n{e}"));
        assert!(!report.stable.is_empty());
    }
}

#[test]
fn min_k_model_matches_kripke_kleene() {
    let mut rng = ChaCha8Rng::seed_from_u64(52);
    for _ in 0..30 {
        let g = build_pstar(&random_program::<FourValue, _>(&mut rng, &GenConfig::default()));
        let kk = kripke_kleene(&g).unwrap().0;
        assert_eq!(min_k_cl_model(&g).unwrap(), Some(kk));
        let i = random_interpretation::<FourValue, _>(&mut rng, g.base());
        let _ = is_stable(&g, &i, StableMethod::MinKCompletionModels).unwrap();
    }
}

#[test]
fn names_round_trip() {
    for r in WfRoute::ALL {
        assert_eq!(r.to_string().parse::<WfRoute>().unwrap(), r);
    }
    for m in StableMethod::ALL {
        assert_eq!(m.to_string().parse::<StableMethod>().unwrap(), m);
    }
    assert_eq!("psi_prime".parse::<WfRoute>().unwrap(), WfRoute::PsiPrime);
    assert!("nope".parse::<StableMethod>().is_err());
}
