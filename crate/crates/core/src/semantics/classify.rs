use std::sync::Arc;

use rayon::prelude::*;

use crate::bilattice::FourValue;
use crate::error::Result;
use crate::interp::Interpretation;
use crate::operators::{is_cl_model, is_model, phi, psi_prime};
use crate::program::{AtomId, GroundProgram, HerbrandBase};
use crate::support::{false_atoms, support};

use super::{check_limit, is_stable, kripke_kleene, well_founded_checked, StableMethod};

pub const CLASSIFY_LIMIT: usize = 8;

fn interpretation_at(base: &Arc<HerbrandBase>, mut index: usize) -> Interpretation<FourValue> {
    let n = base.len();
    let mut values = vec![FourValue::Bottom; n];
    for slot in values.iter_mut().rev() {
        *slot = FourValue::ALL[index % 4];
        index /= 4;
    }
    Interpretation::new(Arc::clone(base), values).expect("sized to the base")
}

/// Every interpretation over `base`, ordered lexicographically with
/// `⊥ < f < t < ⊤` and the first atom most significant.
pub fn all_interpretations(base: &Arc<HerbrandBase>) -> impl Iterator<Item = Interpretation<FourValue>> + '_ {
    let total = 4usize.pow(base.len() as u32);
    (0..total).map(move |k| interpretation_at(base, k))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Flags {
    pub model: bool,
    pub cl_model: bool,
    pub supported: bool,
    pub deductively_closed: bool,
    pub stable: bool,
    pub kk: bool,
    pub wf: bool,
}

impl Flags {
    pub const NAMES: [&'static str; 7] =
        ["model", "cl_model", "supported", "deductively_closed", "stable", "kk", "wf"];

    pub fn values(&self) -> [bool; 7] {
        [self.model, self.cl_model, self.supported, self.deductively_closed, self.stable, self.kk, self.wf]
    }

    /// Broken links of the implication chain between the flags.
    pub fn violations(&self) -> Vec<&'static str> {
        let chain = [
            (self.kk, self.cl_model, "kk => cl_model"),
            (self.wf, self.stable, "wf => stable"),
            (self.stable, self.deductively_closed, "stable => deductively_closed"),
            (self.deductively_closed, self.supported, "deductively_closed => supported"),
            (self.supported, self.cl_model, "supported => cl_model"),
            (self.cl_model, self.model, "cl_model => model"),
        ];
        chain.into_iter().filter(|(a, b, _)| *a && !*b).map(|(_, _, name)| name).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelClassification {
    pub interpretation: Interpretation<FourValue>,
    pub flags: Flags,
    pub support: Interpretation<FourValue>,
    /// Atoms the support makes false; only for classical programs.
    pub unfounded: Option<Vec<AtomId>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub rows: Vec<ModelClassification>,
    pub kk: Interpretation<FourValue>,
    pub wf: Interpretation<FourValue>,
    pub stable: Vec<Interpretation<FourValue>>,
}

fn classify_one(
    g: &GroundProgram<FourValue>,
    i: Interpretation<FourValue>,
    kk: &Interpretation<FourValue>,
    wf: &Interpretation<FourValue>,
    all: bool,
) -> Result<Option<ModelClassification>> {
    let cl_model = is_cl_model(g, &i);
    if !all && !cl_model {
        return Ok(None);
    }
    let sp = support(g, &i)?.support;
    let supported = phi(g, &i).join_k(&sp) == i;
    let deductively_closed = is_stable(g, &i, StableMethod::KkOfKCompletion)?;
    let stable = if g.is_literal_normal() {
        psi_prime(g, &i)?.0 == i
    } else {
        is_stable(g, &i, StableMethod::PhiPrimeFixpoint)?
    };
    let flags = Flags {
        model: is_model(g, &i),
        cl_model,
        supported,
        deductively_closed,
        stable,
        kk: i == *kk,
        wf: i == *wf,
    };
    let unfounded = g.is_classical().then(|| false_atoms(&sp));
    Ok(Some(ModelClassification { interpretation: i, flags, support: sp, unfounded }))
}

/// Classifies the cl-models of `g` (every interpretation with `all`).
pub fn classify(g: &GroundProgram<FourValue>, all: bool, limit: usize) -> Result<Classification> {
    check_limit(g.base(), limit, "classification")?;
    let kk = kripke_kleene(g)?.0;
    let wf = well_founded_checked(g)?;
    let total = 4usize.pow(g.len() as u32);
    let rows: Vec<Option<ModelClassification>> = (0..total)
        .into_par_iter()
        .map(|k| classify_one(g, interpretation_at(g.base(), k), &kk, &wf, all))
        .collect::<Result<_>>()?;
    let rows: Vec<ModelClassification> = rows.into_iter().flatten().collect();
    let stable = rows.iter().filter(|r| r.flags.stable).map(|r| r.interpretation.clone()).collect();
    Ok(Classification { rows, kk, wf, stable })
}
