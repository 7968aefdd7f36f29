use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::bilattice::{FourValue, IntervalValue};
use crate::gen::{random_interpretation, random_k_pair, random_program, random_t_pair, GenConfig};
use crate::program::{build_pstar, k_complete, parse_ground};

use FourValue::{Bottom, False, Top, True};

const RUNEX6: &str = include_str!("../../fixtures/runex6.blp");
const RUNNING: &str = include_str!("../../fixtures/running.blp");

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
fn phi_on_worked_interval_example() {
    let g = parse_ground::<IntervalValue>(RUNEX6).unwrap();
    let k0 = Interpretation::bottom_k(Arc::clone(g.base()));
    let k1 = phi(&g, &k0);
    assert_eq!(k1, ivs(&g, &[("0", "1"), ("0.3", "1"), ("0.2", "1")]));
    let k2 = phi(&g, &k1);
    assert_eq!(k2, ivs(&g, &[("0.3", "1"), ("0.3", "0.8"), ("0.2", "0.7")]));
    assert_eq!(phi(&g, &k2), k2);
}

#[test]
fn phi_fixes_unknown_on_running_example() {
    let g = parse_ground::<FourValue>(RUNNING).unwrap();
    let i1 = Interpretation::bottom_k(Arc::clone(g.base()));
    assert_eq!(phi(&g, &i1), i1);
    assert!(is_cl_model(&g, &i1));
}

#[test]
fn gamma_matches_phi() {
    let g = parse_ground::<FourValue>(RUNNING).unwrap();
    let i3 = fours(&g, &[False, Bottom, Bottom]);
    assert_eq!(gamma(&g, &i3).unwrap(), i3);

    let reduced = parse_ground::<FourValue>("a <- #top.\nb <- #f.").unwrap();
    let any = fours(&reduced, &[True, Bottom]);
    assert_eq!(gamma(&reduced, &any).unwrap().values(), [Top, False]);

    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let g = build_pstar(&random_program::<IntervalValue, _>(&mut rng, &GenConfig::default()));
        let i = random_interpretation(&mut rng, g.base());
        assert_eq!(gamma(&g, &i).unwrap(), phi(&g, &i));
    }
}

#[test]
fn psi_examples() {
    let g = parse_ground::<IntervalValue>(RUNEX6).unwrap();
    let w0 = Interpretation::bottom_k(Arc::clone(g.base()));
    let v0 = Interpretation::bottom_t(Arc::clone(g.base()));
    let v1 = psi(&g, &v0, &w0).unwrap();
    // ⟨0,1⟩ ∨ ⟨0.2,0.4⟩ = ⟨0.2,1⟩ for C; the printed table shows ⟨0,1⟩ in this cell
    assert_eq!(v1, ivs(&g, &[("0", "0"), ("0.3", "0.5"), ("0.2", "1")]));

    let r = parse_ground::<FourValue>(RUNNING).unwrap();
    let i5 = fours(&r, &[False, True, False]);
    let step1 = psi(&r, &Interpretation::bottom_t(Arc::clone(r.base())), &i5).unwrap();
    assert_eq!(step1, i5);
    assert_eq!(psi(&r, &step1, &i5).unwrap(), i5);

    for v in [[Bottom, Top, True], [False, False, Top]] {
        let i = fours(&r, &v);
        assert_eq!(psi(&r, &i, &i).unwrap(), phi(&r, &i));
    }

    let bad = parse_ground::<FourValue>("a <- ~(a | a).").unwrap();
    let i = Interpretation::bottom_k(Arc::clone(bad.base()));
    assert!(matches!(psi(&bad, &i, &i), Err(Error::Interp(_))));
}

#[test]
fn psi_prime_examples() {
    let g = parse_ground::<IntervalValue>(RUNEX6).unwrap();
    let w0 = Interpretation::bottom_k(Arc::clone(g.base()));
    let (w1, trace) = psi_prime(&g, &w0).unwrap();
    let expected_v = [
        ivs(&g, &[("0", "0"), ("0", "0"), ("0", "0")]),
        ivs(&g, &[("0", "0"), ("0.3", "0.5"), ("0.2", "1")]),
        ivs(&g, &[("0.3", "0.5"), ("0.3", "0.5"), ("0.2", "1")]),
        ivs(&g, &[("0.3", "0.5"), ("0.3", "0.5"), ("0.2", "1")]),
    ];
    assert_eq!(trace.steps, expected_v);
    assert_eq!(trace.direction, Direction::TruthIncreasing);
    assert!(trace.converged);
    assert_eq!(w1, expected_v[3]);

    let wf = ivs(&g, &[("0.3", "0.5"), ("0.3", "0.5"), ("0.5", "0.7")]);
    assert_eq!(psi_prime(&g, &wf).unwrap().0, wf);

    let r = parse_ground::<FourValue>(RUNNING).unwrap();
    let i8 = fours(&r, &[Top, True, False]);
    assert_eq!(psi_prime(&r, &i8).unwrap().0, fours(&r, &[False, True, False]));
}

#[test]
fn lfp_k_examples() {
    let g = parse_ground::<IntervalValue>(RUNEX6).unwrap();
    let (kk, trace) = lfp_k(Interpretation::bottom_k(Arc::clone(g.base())), |i| Ok(phi(&g, i))).unwrap();
    assert_eq!(trace.steps.len(), 4);
    assert_eq!(trace.steps[2], trace.steps[3]);
    assert_eq!(kk, ivs(&g, &[("0.3", "1"), ("0.3", "0.8"), ("0.2", "0.7")]));

    let i = ivs(&g, &[("0.1", "0.2"), ("0", "1"), ("1", "0")]);
    let (same, trace) = lfp_k(i.clone(), |x| Ok(x.clone())).unwrap();
    assert_eq!(same, i);
    assert_eq!(trace.steps.len(), 2);

    let r = parse_ground::<FourValue>(RUNNING).unwrap();
    let (kk, _) = lfp_k(Interpretation::bottom_k(Arc::clone(r.base())), |i| Ok(phi(&r, i))).unwrap();
    assert_eq!(kk.values(), [Bottom, Bottom, Bottom]);
}

#[test]
fn engine_guards() {
    let g = parse_ground::<FourValue>("a <- ~a.").unwrap();
    let base = Arc::clone(g.base());
    let err = lfp_k(Interpretation::<FourValue>::top_k(Arc::clone(&base)), |i| {
        Ok(i.meet_k(&Interpretation::bottom_k(Arc::clone(&base))))
    })
    .unwrap_err();
    assert!(matches!(err, Error::Monotonicity { step: 1, .. }));
    assert_eq!(err.exit_code(), 3);

    let err = iterate(Interpretation::<FourValue>::bottom_t(Arc::clone(&base)), Direction::TruthIncreasing, 1, |_| {
        Ok(Interpretation::top_t(Arc::clone(&base)))
    })
    .unwrap_err();
    assert_eq!(err, Error::Fuse { limit: 1 });
    assert_eq!(err.exit_code(), 2);

    let (_, trace) = iterate(Interpretation::<FourValue>::bottom_t(Arc::clone(&base)), Direction::TruthIncreasing, 2, |_| {
        Ok(Interpretation::top_t(Arc::clone(&base)))
    })
    .unwrap();
    assert_eq!(trace.steps.len(), 3);
    assert_eq!(trace.dump("x"), "# x_0\na = f\n# x_1\na = t\n# x_2\na = t\n");
}

#[test]
fn models_and_cl_models() {
    let g = parse_ground::<FourValue>("a <- ~a | #f.").unwrap();
    let cl: Vec<FourValue> = FourValue::ALL.into_iter().filter(|&v| is_cl_model(&g, &fours(&g, &[v]))).collect();
    assert_eq!(cl, [Bottom, Top]);
    for v in FourValue::ALL {
        let i = fours(&g, &[v]);
        assert!(!is_cl_model(&g, &i) || is_model(&g, &i));
    }
}

#[test]
fn classical_immediate_consequence() {
    let g = parse_ground::<FourValue>(RUNNING).unwrap();
    let i5 = fours(&g, &[False, True, False]);
    assert_eq!(t_p(&g, &i5).unwrap().values(), [Bottom, True, Bottom]);
    assert_eq!(t_p(&g, &Interpretation::bottom_k(Arc::clone(g.base()))).unwrap().values(), [Bottom; 3]);
    let facts = parse_ground::<FourValue>("a.\nb <- a.").unwrap();
    assert_eq!(t_p(&facts, &Interpretation::bottom_k(Arc::clone(facts.base()))).unwrap().values(), [True, Bottom]);
    assert!(t_p(&g, &fours(&g, &[Top, True, False])).is_err());
    let general = parse_ground::<FourValue>("a <- a * a.").unwrap();
    assert!(t_p(&general, &Interpretation::bottom_k(Arc::clone(general.base()))).is_err());
}

fn check_monotonicity<V: crate::gen::Sample>(seed: u64, programs: usize, pairs: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..programs {
        let g = build_pstar(&random_program::<V, _>(&mut rng, &GenConfig::default()));
        for _ in 0..pairs {
            let (i, j) = random_k_pair::<V, _>(&mut rng, g.base());
            let z = random_interpretation::<V, _>(&mut rng, g.base());
            assert!(phi(&g, &i).leq_k(&phi(&g, &j)).unwrap());
            assert!(psi(&g, &i, &z).unwrap().leq_k(&psi(&g, &j, &z).unwrap()).unwrap());
            assert!(psi(&g, &z, &i).unwrap().leq_k(&psi(&g, &z, &j).unwrap()).unwrap());
            assert!(psi_prime(&g, &i).unwrap().0.leq_k(&psi_prime(&g, &j).unwrap().0).unwrap());

            let (a, b) = random_t_pair::<V, _>(&mut rng, g.base());
            assert!(psi(&g, &a, &z).unwrap().leq_t(&psi(&g, &b, &z).unwrap()).unwrap());
            assert!(psi(&g, &z, &b).unwrap().leq_t(&psi(&g, &z, &a).unwrap()).unwrap());
            assert!(psi_prime(&g, &b).unwrap().0.leq_t(&psi_prime(&g, &a).unwrap().0).unwrap());

            // the completion transform matches its semantic contract
            assert_eq!(phi(&k_complete(&g, &i), &z), phi(&g, &z).join_k(&i));
        }
    }
}

#[test]
fn operator_monotonicity_four() {
    check_monotonicity::<FourValue>(31, 60, 10);
}

#[test]
fn operator_monotonicity_interval() {
    check_monotonicity::<IntervalValue>(32, 40, 10);
}
