use std::collections::HashMap;

use crate::bilattice::FourValue;
use crate::error::{Error, Result};
use crate::interp::Interpretation;
use crate::operators::check_classical_interp;
use crate::program::{k_complete, GroundProgram};
use crate::support::oracle::{brute_force_support, greatest_unfounded_set_oracle, SUPPORT_LIMIT, UNFOUNDED_LIMIT};
use crate::support::{false_atoms, support};

use super::{
    all_interpretations, check_limit, is_stable, kripke_kleene, min_k_cl_model, well_founded_checked, StableMethod,
    CLASSIFY_LIMIT,
};

/// Memoised `min_≼k` of the cl-models of `P ⊕ Sp`, keyed by the support.
pub struct StableOracle<'a> {
    g: &'a GroundProgram<FourValue>,
    cache: HashMap<Vec<FourValue>, Option<Interpretation<FourValue>>>,
}

impl<'a> StableOracle<'a> {
    pub fn new(g: &'a GroundProgram<FourValue>) -> Self {
        StableOracle { g, cache: HashMap::new() }
    }

    /// `i` is the `≼_k`-least cl-model of `P ⊕ Sp_P(i)`.
    pub fn is_stable(&mut self, i: &Interpretation<FourValue>, sp: &Interpretation<FourValue>) -> Result<bool> {
        let key = sp.values().to_vec();
        if !self.cache.contains_key(&key) {
            let least = min_k_cl_model(&k_complete(self.g, sp))?;
            self.cache.insert(key.clone(), least);
        }
        Ok(self.cache[&key].as_ref() == Some(i))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub interpretations: usize,
    pub methods: Vec<StableMethod>,
    pub stable: Vec<Interpretation<FourValue>>,
    pub wf: Interpretation<FourValue>,
    pub unfounded_checks: usize,
}

/// Checks, for every interpretation of `g`, that all applicable stability
/// characterizations agree, that the support matches the brute-force
/// oracle and, for classical programs, the unfounded-set oracle. Then checks
/// the well-founded model is the `≼_k`-least stable model above `KK` and
/// that stable models are pairwise `≼_t`-incomparable.
pub fn cross_check(g: &GroundProgram<FourValue>) -> Result<CrossCheckReport> {
    check_limit(g.base(), CLASSIFY_LIMIT, "cross-check")?;
    let methods: Vec<StableMethod> = StableMethod::ALL.into_iter().filter(|m| m.applies_to(g)).collect();
    let mut oracle = StableOracle::new(g);
    let mut stable = Vec::new();
    let mut interpretations = 0;
    let mut unfounded_checks = 0;
    let show = |i: &Interpretation<FourValue>| i.tuple();

    for i in all_interpretations(g.base()) {
        interpretations += 1;
        let sp = support(g, &i)?.support;
        if g.len() <= SUPPORT_LIMIT {
            let brute = brute_force_support(g, &i, SUPPORT_LIMIT)?;
            if brute != sp {
                return Err(Error::Divergence(format!(
                    "support at {} is {} but the oracle gives {}",
                    show(&i),
                    show(&sp),
                    show(&brute)
                )));
            }
        }
        if g.is_classical() && g.len() <= UNFOUNDED_LIMIT && check_classical_interp(&i).is_ok() {
            unfounded_checks += 1;
            let expected = greatest_unfounded_set_oracle(g, &i, UNFOUNDED_LIMIT)?;
            if false_atoms(&sp) != expected {
                return Err(Error::Divergence(format!(
                    "support at {} is {} but the greatest unfounded set is {:?}",
                    show(&i),
                    show(&sp),
                    expected.iter().map(|&a| g.base().name(a)).collect::<Vec<_>>()
                )));
            }
        }

        let mut verdicts = Vec::with_capacity(methods.len());
        for &m in &methods {
            let v = match m {
                StableMethod::MinKCompletionModels => oracle.is_stable(&i, &sp)?,
                other => is_stable(g, &i, other)?,
            };
            verdicts.push(v);
        }
        if verdicts.iter().any(|v| *v != verdicts[0]) {
            let detail: Vec<String> = methods.iter().zip(&verdicts).map(|(m, v)| format!("{m}={v}")).collect();
            return Err(Error::Divergence(format!("stability of {}: {}", show(&i), detail.join(", "))));
        }
        if verdicts[0] {
            stable.push(i);
        }
    }

    let kk = kripke_kleene(g)?.0;
    let wf = well_founded_checked(g)?;
    if !kk.leq_k(&wf)? {
        return Err(Error::Divergence(format!("KK {} is not below WF {}", show(&kk), show(&wf))));
    }
    if !stable.contains(&wf) {
        return Err(Error::Divergence(format!("WF {} is not stable", show(&wf))));
    }
    for s in &stable {
        if !wf.leq_k(s)? {
            return Err(Error::Divergence(format!("WF {} is not below stable {}", show(&wf), show(s))));
        }
        for s2 in &stable {
            if s != s2 && s.leq_t(s2)? {
                return Err(Error::Divergence(format!("stable {} is below stable {}", show(s), show(s2))));
            }
        }
    }
    Ok(CrossCheckReport { interpretations, methods, stable, wf, unfounded_checks })
}
