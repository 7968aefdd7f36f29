//! Kripke-Kleene, well-founded and stable semantics, plus brute-force
//! classification of every interpretation of a small FOUR program.

mod classify;
mod crosscheck;

use std::any::Any;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub use classify::{all_interpretations, classify, Classification, Flags, ModelClassification, CLASSIFY_LIMIT};
pub use crosscheck::{cross_check, CrossCheckReport, StableOracle};

use crate::bilattice::{Bilattice, FourValue};
use crate::error::{Error, Result};
use crate::interp::Interpretation;
use crate::operators::{check_literal_normal, is_cl_model, lfp_k, lfp_t, phi, psi_prime, FixpointTrace};
use crate::program::{gl_reduct, k_complete, GroundProgram, HerbrandBase};
use crate::support::{phi_prime, phi_prime_from, pi, pi_tilde, support};

/// `KK(P)`: the `≼_k`-least fixpoint of `Φ_P`.
pub fn kripke_kleene<V: Bilattice>(g: &GroundProgram<V>) -> Result<(Interpretation<V>, FixpointTrace<V>)> {
    lfp_k(Interpretation::bottom_k(Arc::clone(g.base())), |i| Ok(phi(g, i)))
}

/// Operators whose `≼_k`-least fixpoint is the well-founded model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WfRoute {
    PsiPrime,
    Pi,
    PiTilde,
    PhiPrime,
}

impl WfRoute {
    pub const ALL: [WfRoute; 4] = [WfRoute::PsiPrime, WfRoute::Pi, WfRoute::PiTilde, WfRoute::PhiPrime];

    /// `Ψ′` needs negation applied to atoms only.
    pub fn applies_to<V: Bilattice>(self, g: &GroundProgram<V>) -> bool {
        self != WfRoute::PsiPrime || g.is_literal_normal()
    }

    fn step<V: Bilattice>(self, g: &GroundProgram<V>, i: &Interpretation<V>) -> Result<Interpretation<V>> {
        match self {
            WfRoute::PsiPrime => Ok(psi_prime(g, i)?.0),
            WfRoute::Pi => pi(g, i),
            WfRoute::PiTilde => pi_tilde(g, i),
            WfRoute::PhiPrime => Ok(phi_prime(g, i)?.0),
        }
    }
}

impl fmt::Display for WfRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WfRoute::PsiPrime => "psi-prime",
            WfRoute::Pi => "pi",
            WfRoute::PiTilde => "pi-tilde",
            WfRoute::PhiPrime => "phi-prime",
        })
    }
}

impl FromStr for WfRoute {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        WfRoute::ALL
            .into_iter()
            .find(|r| r.to_string() == s.replace('_', "-"))
            .ok_or_else(|| format!("unknown route `{s}` (expected psi-prime, pi, pi-tilde or phi-prime)"))
    }
}

/// `WF(P)` as the `≼_k`-least fixpoint of the route's operator.
pub fn well_founded<V: Bilattice>(
    g: &GroundProgram<V>,
    route: WfRoute,
) -> Result<(Interpretation<V>, FixpointTrace<V>)> {
    if route == WfRoute::PsiPrime {
        check_literal_normal(g)?;
    }
    lfp_k(Interpretation::bottom_k(Arc::clone(g.base())), |i| route.step(g, i))
}

/// One outer stage of a traced well-founded computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WfStage<V> {
    pub input: Interpretation<V>,
    /// The `Ψ′` v-sequence, or the support h-sequence for `Φ′`.
    pub inner: Option<FixpointTrace<V>>,
    /// The `Φ′` J-sequence; absent for `Ψ′`.
    pub second: Option<FixpointTrace<V>>,
    pub output: Interpretation<V>,
}

/// The well-founded model with the inner iterations of every outer stage.
/// Only the `Ψ′` and `Φ′` routes have inner iterations.
pub fn well_founded_traced<V: Bilattice>(
    g: &GroundProgram<V>,
    route: WfRoute,
) -> Result<(Interpretation<V>, FixpointTrace<V>, Vec<WfStage<V>>)> {
    if route == WfRoute::PsiPrime {
        check_literal_normal(g)?;
    }
    let mut stages = Vec::new();
    let (wf, outer) = lfp_k(Interpretation::bottom_k(Arc::clone(g.base())), |i| {
        let stage = match route {
            WfRoute::PsiPrime => {
                let (out, inner) = psi_prime(g, i)?;
                WfStage { input: i.clone(), inner: Some(inner), second: None, output: out }
            }
            WfRoute::PhiPrime => {
                let sp = support(g, i)?;
                let (out, js) = phi_prime_from(g, sp.support)?;
                WfStage { input: i.clone(), inner: Some(sp.trace), second: Some(js), output: out }
            }
            other => {
                let out = other.step(g, i)?;
                WfStage { input: i.clone(), inner: None, second: None, output: out }
            }
        };
        let out = stage.output.clone();
        stages.push(stage);
        Ok(out)
    })?;
    Ok((wf, outer, stages))
}

/// Runs every applicable route and fails on the first disagreement.
pub fn well_founded_checked<V: Bilattice>(g: &GroundProgram<V>) -> Result<Interpretation<V>> {
    let mut first: Option<(WfRoute, Interpretation<V>)> = None;
    for route in WfRoute::ALL.into_iter().filter(|r| r.applies_to(g)) {
        let (wf, _) = well_founded(g, route)?;
        match &first {
            None => first = Some((route, wf)),
            Some((r0, w0)) if *w0 != wf => {
                return Err(Error::Divergence(format!(
                    "well-founded model via {r0} is {} but via {route} is {}",
                    w0.tuple(),
                    wf.tuple()
                )))
            }
            Some(_) => {}
        }
    }
    Ok(first.expect("phi-prime always applies").1)
}

/// Characterizations of stability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StableMethod {
    /// `I = Ψ′_P(I)`
    PsiPrimeFixpoint,
    /// `I = Φ′_P(I)`
    PhiPrimeFixpoint,
    /// `I = KK(P ⊕ Sp_P(I))`
    KkOfKCompletion,
    /// `I` is the `≼_k`-least cl-model of `P ⊕ Sp_P(I)`, found by enumeration (FOUR only).
    MinKCompletionModels,
    /// `I` is the `≼_t`-least model of the reduct `P^I` (FOUR, classical programs).
    GlReductClassical,
}

impl StableMethod {
    pub const ALL: [StableMethod; 5] = [
        StableMethod::PsiPrimeFixpoint,
        StableMethod::PhiPrimeFixpoint,
        StableMethod::KkOfKCompletion,
        StableMethod::MinKCompletionModels,
        StableMethod::GlReductClassical,
    ];

    pub fn applies_to<V: Bilattice>(self, g: &GroundProgram<V>) -> bool {
        match self {
            StableMethod::PsiPrimeFixpoint => g.is_literal_normal(),
            StableMethod::PhiPrimeFixpoint | StableMethod::KkOfKCompletion => true,
            StableMethod::MinKCompletionModels => as_four(g).is_some(),
            StableMethod::GlReductClassical => as_four(g).is_some() && g.is_classical(),
        }
    }
}

impl fmt::Display for StableMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StableMethod::PsiPrimeFixpoint => "psi-prime",
            StableMethod::PhiPrimeFixpoint => "phi-prime",
            StableMethod::KkOfKCompletion => "kk-completion",
            StableMethod::MinKCompletionModels => "min-k-models",
            StableMethod::GlReductClassical => "gl-reduct",
        })
    }
}

impl FromStr for StableMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        StableMethod::ALL
            .into_iter()
            .find(|m| m.to_string() == s.replace('_', "-"))
            .ok_or_else(|| {
                format!("unknown method `{s}` (expected psi-prime, phi-prime, kk-completion, min-k-models or gl-reduct)")
            })
    }
}

pub(crate) fn as_four<V: Bilattice>(g: &GroundProgram<V>) -> Option<&GroundProgram<FourValue>> {
    (g as &dyn Any).downcast_ref()
}

fn as_four_interp<V: Bilattice>(i: &Interpretation<V>) -> Option<&Interpretation<FourValue>> {
    (i as &dyn Any).downcast_ref()
}

/// Whether `i` is a stable model of `g` under `method`.
pub fn is_stable<V: Bilattice>(g: &GroundProgram<V>, i: &Interpretation<V>, method: StableMethod) -> Result<bool> {
    match method {
        StableMethod::PsiPrimeFixpoint => Ok(psi_prime(g, i)?.0 == *i),
        StableMethod::PhiPrimeFixpoint => Ok(phi_prime(g, i)?.0 == *i),
        StableMethod::KkOfKCompletion => {
            let sp = support(g, i)?.support;
            Ok(kripke_kleene(&k_complete(g, &sp))?.0 == *i)
        }
        StableMethod::MinKCompletionModels => {
            let (g4, i4) = four_pair(g, i, "the min-k-models method")?;
            let sp = support(g4, i4)?.support;
            Ok(min_k_cl_model(&k_complete(g4, &sp))?.as_ref() == Some(i4))
        }
        StableMethod::GlReductClassical => {
            let (g4, i4) = four_pair(g, i, "the gl-reduct method")?;
            Ok(gl_least_model(g4, i4)? == *i4)
        }
    }
}

fn four_pair<'a, V: Bilattice>(
    g: &'a GroundProgram<V>,
    i: &'a Interpretation<V>,
    what: &'static str,
) -> Result<(&'a GroundProgram<FourValue>, &'a Interpretation<FourValue>)> {
    match (as_four(g), as_four_interp(i)) {
        (Some(g4), Some(i4)) => Ok((g4, i4)),
        _ => Err(Error::FourOnly(what)),
    }
}

/// The `≼_t`-least model of `P^I`.
pub fn gl_least_model(g: &GroundProgram<FourValue>, i: &Interpretation<FourValue>) -> Result<Interpretation<FourValue>> {
    let reduct = gl_reduct(g, i)?;
    Ok(lfp_t(Interpretation::bottom_t(Arc::clone(g.base())), |x| Ok(phi(&reduct, x)))?.0)
}

/// The `≼_k`-least cl-model of `g` by enumerating all of `FOUR^n`, if one
/// exists.
pub fn min_k_cl_model(g: &GroundProgram<FourValue>) -> Result<Option<Interpretation<FourValue>>> {
    check_limit(g.base(), CLASSIFY_LIMIT, "cl-model enumeration")?;
    let models: Vec<_> = all_interpretations(g.base()).filter(|j| is_cl_model(g, j)).collect();
    for m in &models {
        if models.iter().all(|x| m.leq_k(x).expect("same base")) {
            return Ok(Some(m.clone()));
        }
    }
    Ok(None)
}

pub(crate) fn check_limit(base: &HerbrandBase, limit: usize, what: &'static str) -> Result<()> {
    if base.len() > limit {
        Err(Error::Limit { what, size: base.len(), limit })
    } else {
        Ok(())
    }
}

/// Every stable model of a FOUR program, in enumeration order.
pub fn enumerate_stable(g: &GroundProgram<FourValue>, limit: usize) -> Result<Vec<Interpretation<FourValue>>> {
    enumerate_stable_with(g, limit, StableMethod::PhiPrimeFixpoint)
}

/// As [`enumerate_stable`], deciding stability with `method`.
pub fn enumerate_stable_with(
    g: &GroundProgram<FourValue>,
    limit: usize,
    method: StableMethod,
) -> Result<Vec<Interpretation<FourValue>>> {
    check_limit(g.base(), limit, "stable-model enumeration")?;
    let mut out = Vec::new();
    for i in all_interpretations(g.base()) {
        if is_stable(g, &i, method)? {
            out.push(i);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
