//! Command-line frontend: parses a program (and optionally an interpretation),
//! runs one semantics or operator and renders the result as an aligned text
//! table or as JSON.

mod render;

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use bilat_core::bilattice::{Bilattice, FourValue, IntervalValue, ValueError};
use bilat_core::gen::{corpus, shrink};
use bilat_core::interp::{InterpError, Interpretation};
use bilat_core::operators::{is_cl_model, is_model, phi, psi_prime};
use bilat_core::program::{build_pstar, parse_ground, GroundProgram, ParseError};
use bilat_core::semantics::{
    classify, cross_check, enumerate_stable_with, is_stable, kripke_kleene, well_founded_checked,
    well_founded_traced, StableMethod, WfRoute, CLASSIFY_LIMIT,
};
use bilat_core::support::oracle::{brute_force_support, greatest_unfounded_set_oracle, SUPPORT_LIMIT, UNFOUNDED_LIMIT};
use bilat_core::support::{false_atoms, phi_prime_from, support};
use bilat_core::Error;

use render::{atom_names, atom_set, interp_json, program_hash, trace_json, values_json, yes, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Kripke-Kleene model.
    Kk,
    /// Well-founded model.
    Wf,
    /// Stable models, or whether `--at` is one.
    Stable,
    /// Flags, support and unfounded set of every cl-model.
    Classify,
    /// Support of the `--at` interpretation.
    Support,
    /// Body values and model checks at `--at`.
    Eval,
    /// Iteration sequence of one operator.
    Trace,
    /// Cross-check every characterization against the brute-force oracles.
    Check,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Kk => "kk",
            Command::Wf => "wf",
            Command::Stable => "stable",
            Command::Classify => "classify",
            Command::Support => "support",
            Command::Eval => "eval",
            Command::Trace => "trace",
            Command::Check => "check",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Four,
    Interval,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TraceOp {
    /// `Φ` from the all-unknown interpretation.
    Phi,
    /// The v-sequence of `Ψ′` at `--at`.
    PsiPrime,
    /// The h-sequence of the support at `--at`.
    Support,
    /// The h- and J-sequences of `Φ′` at `--at`.
    PhiPrime,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "bilat-lp", version, about = "Kripke-Kleene, well-founded and stable models of logic programs over bilattices")]
pub struct CliConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Program file. `check` without one runs a seeded random corpus.
    pub program: Option<PathBuf>,
    /// Truth values; inferred from the program's constants when omitted.
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    /// Well-founded route. Without one every applicable route runs and must agree.
    #[arg(long)]
    pub route: Option<WfRoute>,
    /// Stable-model characterization [default: phi-prime].
    #[arg(long)]
    pub method: Option<StableMethod>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Include iteration sequences.
    #[arg(long)]
    pub trace: bool,
    /// Classify every interpretation, not only the cl-models.
    #[arg(long)]
    pub all: bool,
    /// Largest Herbrand base enumerated by brute force.
    #[arg(long, default_value_t = CLASSIFY_LIMIT)]
    pub limit: usize,
    /// Compare against the brute-force oracles as well.
    #[arg(long)]
    pub oracle: bool,
    /// Seed of the random corpus for `check`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Size of the random corpus for `check`.
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    /// Interpretation file.
    #[arg(long)]
    pub at: Option<PathBuf>,
    /// Operator iterated by `trace`.
    #[arg(long, value_enum, default_value_t = TraceOp::Phi)]
    pub op: TraceOp,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => e.exit_code(),
            CliError::Usage(_) => 1,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Core(e.into())
    }
}

impl From<InterpError> for CliError {
    fn from(e: InterpError) -> Self {
        CliError::Core(e.into())
    }
}

type R<T = String> = Result<T, CliError>;

/// What a run writes and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command on already-read inputs.
pub fn run(cfg: &CliConfig, program: Option<&str>, interp: Option<&str>) -> Outcome {
    match execute(cfg, program, interp) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn execute(cfg: &CliConfig, program: Option<&str>, interp: Option<&str>) -> R {
    if cfg.at.is_some() && interp.is_none() {
        return Err(CliError::Usage("--at was given but no interpretation text was read".into()));
    }
    let Some(text) = program else {
        return match cfg.command {
            Command::Check => check_corpus(cfg),
            _ => Err(CliError::Usage("a program file is required".into())),
        };
    };
    match load(text, cfg.kind)? {
        Loaded::Four(g) => {
            let s = Session { cfg, text, g, interp };
            match cfg.command {
                Command::Classify => s.classify(),
                Command::Check => s.check(),
                Command::Stable if interp.is_none() => s.enumerate(),
                _ => s.generic(),
            }
        }
        Loaded::Interval(g) => Session { cfg, text, g, interp }.generic(),
    }
}

enum Loaded {
    Four(GroundProgram<FourValue>),
    Interval(GroundProgram<IntervalValue>),
}

fn load(text: &str, kind: Option<Kind>) -> R<Loaded> {
    match kind {
        Some(Kind::Four) => Ok(Loaded::Four(parse_ground(text)?)),
        Some(Kind::Interval) => Ok(Loaded::Interval(parse_ground(text)?)),
        None => match parse_ground::<FourValue>(text) {
            Ok(g) => Ok(Loaded::Four(g)),
            Err(ParseError::Value { source: ValueError::WrongKind { .. }, .. }) => {
                Ok(Loaded::Interval(parse_ground(text)?))
            }
            Err(e) => Err(e.into()),
        },
    }
}

fn kind_name<V: Bilattice>() -> &'static str {
    if std::any::TypeId::of::<V>() == std::any::TypeId::of::<FourValue>() {
        "four"
    } else {
        "interval"
    }
}

fn divergence(msg: String) -> CliError {
    CliError::Core(Error::Divergence(msg))
}

struct Session<'a, V> {
    cfg: &'a CliConfig,
    text: &'a str,
    g: GroundProgram<V>,
    interp: Option<&'a str>,
}

impl<V: Bilattice> Session<'_, V> {
    fn at(&self) -> R<Option<Interpretation<V>>> {
        match self.interp {
            Some(text) => Ok(Some(Interpretation::parse(Arc::clone(self.g.base()), text)?)),
            None => Ok(None),
        }
    }

    fn require_at(&self) -> R<Interpretation<V>> {
        let name = self.cfg.command.name();
        self.at()?.ok_or_else(|| CliError::Usage(format!("{name} needs an interpretation (--at FILE)")))
    }

    fn at_or_bottom(&self) -> R<Interpretation<V>> {
        Ok(self.at()?.unwrap_or_else(|| Interpretation::bottom_k(Arc::clone(self.g.base()))))
    }

    fn table(&self) -> Table {
        Table::for_atoms(self.g.base())
    }

    fn envelope(&self) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("program_hash".into(), json!(program_hash(self.text)));
        m.insert("kind".into(), json!(kind_name::<V>()));
        m.insert("atoms".into(), json!(self.g.base().names()));
        m
    }

    fn emit(&self, table: Table, lines: Vec<String>, doc: Map<String, Value>) -> String {
        match self.cfg.format {
            Format::Table => {
                let mut out = table.render();
                for l in lines {
                    out.push_str(&l);
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let mut out = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable");
                out.push('\n');
                out
            }
        }
    }

    fn generic(&self) -> R {
        match self.cfg.command {
            Command::Kk => self.kk(),
            Command::Wf => self.wf(),
            Command::Stable => self.stable_at(),
            Command::Support => self.support(),
            Command::Eval => self.eval(),
            Command::Trace => self.trace(),
            Command::Classify | Command::Check => Err(Error::FourOnly(self.cfg.command.name()).into()),
        }
    }

    fn kk(&self) -> R {
        let (kk, trace) = kripke_kleene(&self.g)?;
        let mut t = self.table();
        let mut doc = self.envelope();
        if self.cfg.trace {
            t.trace("", "K", &trace);
            doc.insert("trace".into(), trace_json(&trace));
        }
        t.interp("KK", &kk);
        doc.insert("kk".into(), interp_json(&kk));
        Ok(self.emit(t, vec![], doc))
    }

    fn wf(&self) -> R {
        let route = self
            .cfg
            .route
            .unwrap_or(if self.g.is_literal_normal() { WfRoute::PsiPrime } else { WfRoute::PhiPrime });
        let (wf, _, stages) = well_founded_traced(&self.g, route)?;
        let checked = self.cfg.route.is_none() || self.cfg.oracle;
        if checked && well_founded_checked(&self.g)? != wf {
            return Err(divergence(format!("route {route} disagrees with the other routes")));
        }
        let (outer, inner, second) = match route {
            WfRoute::PsiPrime => ("W", Some("v"), None),
            WfRoute::PhiPrime => ("I", Some("h"), Some("J")),
            WfRoute::Pi | WfRoute::PiTilde => ("I", None, None),
        };
        let mut t = self.table();
        let mut doc = self.envelope();
        doc.insert("route".into(), json!(route.to_string()));
        if self.cfg.trace {
            let mut stages_json = Vec::new();
            for (j, stage) in stages.iter().enumerate() {
                t.interp(format!("{outer}_{j}"), &stage.input);
                let mut s = Map::new();
                s.insert(outer.into(), interp_json(&stage.input));
                for (letter, tr) in [(inner, &stage.inner), (second, &stage.second)] {
                    if let (Some(letter), Some(tr)) = (letter, tr) {
                        t.trace("  ", letter, tr);
                        s.insert(letter.into(), trace_json(tr));
                    }
                }
                s.insert("output".into(), interp_json(&stage.output));
                stages_json.push(Value::Object(s));
            }
            doc.insert("trace".into(), Value::Array(stages_json));
        }
        t.interp("WF", &wf);
        doc.insert("wf".into(), interp_json(&wf));
        let mut lines = Vec::new();
        if checked {
            let routes: Vec<String> =
                WfRoute::ALL.into_iter().filter(|r| r.applies_to(&self.g)).map(|r| r.to_string()).collect();
            lines.push(format!("routes agree: {}", routes.join(", ")));
            doc.insert("routes".into(), json!(routes));
        }
        Ok(self.emit(t, lines, doc))
    }

    fn stable_at(&self) -> R {
        let i = self.require_at()?;
        let methods: Vec<StableMethod> = if self.cfg.oracle {
            StableMethod::ALL.into_iter().filter(|m| m.applies_to(&self.g)).collect()
        } else {
            vec![self.cfg.method.unwrap_or(StableMethod::PhiPrimeFixpoint)]
        };
        let mut verdicts = Map::new();
        let mut lines = Vec::new();
        for m in &methods {
            let v = is_stable(&self.g, &i, *m)?;
            lines.push(format!("stable ({m}): {}", yes(v)));
            verdicts.insert(m.to_string(), json!(v));
        }
        if verdicts.values().any(|v| *v != verdicts[&methods[0].to_string()]) {
            return Err(divergence(format!("stability of {}: {}", i.tuple(), lines.join(", "))));
        }
        let mut t = self.table();
        t.interp("I", &i);
        let mut doc = self.envelope();
        doc.insert("interpretation".into(), interp_json(&i));
        doc.insert("verdicts".into(), Value::Object(verdicts));
        Ok(self.emit(t, lines, doc))
    }

    fn support(&self) -> R {
        let i = self.require_at()?;
        let res = support(&self.g, &i)?;
        let sp = &res.support;
        let joined = i.join_k(sp);
        let mut t = self.table();
        let mut doc = self.envelope();
        let mut lines = Vec::new();
        t.interp("I", &i);
        doc.insert("interpretation".into(), interp_json(&i));
        if self.cfg.trace {
            t.trace("  ", "h", &res.trace);
            doc.insert("trace".into(), trace_json(&res.trace));
        }
        t.interp("Sp", sp);
        t.interp("I+Sp", &joined);
        doc.insert("support".into(), interp_json(sp));
        doc.insert("join".into(), interp_json(&joined));
        if self.g.is_classical() {
            let u = false_atoms(sp);
            lines.push(format!("unfounded: {}", atom_set(self.g.base(), &u)));
            doc.insert("unfounded".into(), json!(atom_names(self.g.base(), &u)));
        }
        if self.cfg.oracle {
            lines.extend(self.support_oracle(&i, sp)?);
        }
        Ok(self.emit(t, lines, doc))
    }

    fn support_oracle(&self, i: &Interpretation<V>, sp: &Interpretation<V>) -> R<Vec<String>> {
        let g4 = four(&self.g).ok_or(Error::FourOnly("the support oracle"))?;
        let i4 = four_interp(i).expect("same kind as the program");
        let sp4 = four_interp(sp).expect("same kind as the program");
        let brute = brute_force_support(g4, i4, SUPPORT_LIMIT)?;
        if brute != *sp4 {
            return Err(divergence(format!("support {} but the oracle gives {}", sp4.tuple(), brute.tuple())));
        }
        let mut lines = vec!["support oracle: agrees".to_string()];
        if g4.is_classical() && i4.values().iter().all(|v| v.is_classical()) {
            let u = greatest_unfounded_set_oracle(g4, i4, UNFOUNDED_LIMIT)?;
            if u != false_atoms(sp4) {
                return Err(divergence(format!("greatest unfounded set is {}", atom_set(g4.base(), &u))));
            }
            lines.push("unfounded-set oracle: agrees".into());
        }
        Ok(lines)
    }

    fn eval(&self) -> R {
        let i = self.require_at()?;
        let out = phi(&self.g, &i);
        let (model, cl) = (is_model(&self.g, &i), is_cl_model(&self.g, &i));
        let mut t = self.table();
        t.interp("I", &i);
        t.interp("Phi(I)", &out);
        let mut doc = self.envelope();
        doc.insert("interpretation".into(), interp_json(&i));
        doc.insert("phi".into(), interp_json(&out));
        doc.insert("model".into(), json!(model));
        doc.insert("cl_model".into(), json!(cl));
        Ok(self.emit(t, vec![format!("model: {}", yes(model)), format!("cl-model: {}", yes(cl))], doc))
    }

    fn trace(&self) -> R {
        let mut t = self.table();
        let mut doc = self.envelope();
        doc.insert("op".into(), json!(format!("{:?}", self.cfg.op).to_lowercase()));
        match self.cfg.op {
            TraceOp::Phi => {
                if self.interp.is_some() {
                    return Err(CliError::Usage("the phi trace always starts from the all-unknown interpretation".into()));
                }
                let (_, tr) = kripke_kleene(&self.g)?;
                t.trace("", "K", &tr);
                doc.insert("K".into(), trace_json(&tr));
            }
            TraceOp::PsiPrime => {
                let i = self.at_or_bottom()?;
                let (_, tr) = psi_prime(&self.g, &i)?;
                t.interp("I", &i);
                t.trace("  ", "v", &tr);
                doc.insert("interpretation".into(), interp_json(&i));
                doc.insert("v".into(), trace_json(&tr));
            }
            TraceOp::Support => {
                let i = self.at_or_bottom()?;
                let res = support(&self.g, &i)?;
                t.interp("I", &i);
                t.trace("  ", "h", &res.trace);
                doc.insert("interpretation".into(), interp_json(&i));
                doc.insert("h".into(), trace_json(&res.trace));
            }
            TraceOp::PhiPrime => {
                let i = self.at_or_bottom()?;
                let res = support(&self.g, &i)?;
                let (_, js) = phi_prime_from(&self.g, res.support)?;
                t.interp("I", &i);
                t.trace("  ", "h", &res.trace);
                t.trace("  ", "J", &js);
                doc.insert("interpretation".into(), interp_json(&i));
                doc.insert("h".into(), trace_json(&res.trace));
                doc.insert("J".into(), trace_json(&js));
            }
        }
        Ok(self.emit(t, vec![], doc))
    }
}

fn four<V: Bilattice>(g: &GroundProgram<V>) -> Option<&GroundProgram<FourValue>> {
    (g as &dyn std::any::Any).downcast_ref()
}

fn four_interp<V: Bilattice>(i: &Interpretation<V>) -> Option<&Interpretation<FourValue>> {
    (i as &dyn std::any::Any).downcast_ref()
}

impl Session<'_, FourValue> {
    fn enumerate(&self) -> R {
        let method = self.cfg.method.unwrap_or(StableMethod::PhiPrimeFixpoint);
        let stable = enumerate_stable_with(&self.g, self.cfg.limit, method)?;
        if self.cfg.oracle {
            let report = cross_check(&self.g)?;
            if report.stable != stable {
                return Err(divergence(format!("{method} finds {} stable models, the oracle {}", stable.len(), report.stable.len())));
            }
        }
        let mut t = self.table();
        for (k, s) in stable.iter().enumerate() {
            t.interp(format!("S_{}", k + 1), s);
        }
        let mut doc = self.envelope();
        doc.insert("method".into(), json!(method.to_string()));
        doc.insert("stable".into(), Value::Array(stable.iter().map(values_json).collect()));
        Ok(self.emit(t, vec![format!("stable models: {}", stable.len())], doc))
    }

    fn classify(&self) -> R {
        let c = classify(&self.g, self.cfg.all, self.cfg.limit)?;
        if self.cfg.oracle {
            let report = cross_check(&self.g)?;
            if report.stable != c.stable || report.wf != c.wf {
                return Err(divergence("classification disagrees with the cross-check".into()));
            }
        }
        let base = self.g.base();
        let classical = self.g.is_classical();
        let mut header = vec![String::new()];
        header.extend(base.names().iter().cloned());
        header.extend(["model", "cl", "sup", "closed", "stable", "kk", "wf"].map(String::from));
        header.extend(base.names().iter().map(|n| format!("Sp({n})")));
        if classical {
            header.push("unfounded".into());
        }
        let mut t = Table::new(header);
        let label = |k: usize| format!("I_{}", k + 1);
        let mut rows_json = Vec::new();
        for (k, row) in c.rows.iter().enumerate() {
            let mut cells = vec![label(k)];
            cells.extend(row.interpretation.values().iter().map(|v| v.to_string()));
            cells.extend(row.flags.values().iter().map(|&b| if b { "x" } else { "." }.to_string()));
            cells.extend(row.support.values().iter().map(|v| v.to_string()));
            if let Some(u) = &row.unfounded {
                cells.push(atom_set(base, u));
            }
            t.row(cells);

            let flags: Map<String, Value> =
                bilat_core::semantics::Flags::NAMES.iter().zip(row.flags.values()).map(|(n, v)| (n.to_string(), json!(v))).collect();
            rows_json.push(json!({
                "values": interp_json(&row.interpretation),
                "flags": flags,
                "support": interp_json(&row.support),
                "unfounded": row.unfounded.as_ref().map(|u| atom_names(base, u)),
            }));
        }
        let find = |i: &Interpretation<FourValue>| {
            c.rows.iter().position(|r| r.interpretation == *i).map(label).unwrap_or_else(|| i.tuple())
        };
        let stable: Vec<String> = c.stable.iter().map(find).collect();
        let lines = vec![
            format!("KK = {}", find(&c.kk)),
            format!("WF = {}", find(&c.wf)),
            format!("stable = {}", if stable.is_empty() { "none".to_string() } else { stable.join(", ") }),
        ];
        let mut doc = self.envelope();
        doc.insert("classifications".into(), Value::Array(rows_json));
        doc.insert("kk".into(), interp_json(&c.kk));
        doc.insert("wf".into(), interp_json(&c.wf));
        doc.insert("stable".into(), Value::Array(c.stable.iter().map(values_json).collect()));
        Ok(self.emit(t, lines, doc))
    }

    fn check(&self) -> R {
        let r = cross_check(&self.g)?;
        let mut t = self.table();
        for (k, s) in r.stable.iter().enumerate() {
            t.interp(format!("S_{}", k + 1), s);
        }
        t.interp("WF", &r.wf);
        let methods: Vec<String> = r.methods.iter().map(|m| m.to_string()).collect();
        let lines = vec![
            format!("interpretations: {}", r.interpretations),
            format!("methods: {}", methods.join(", ")),
            format!("unfounded-set checks: {}", r.unfounded_checks),
            "ok".to_string(),
        ];
        let mut doc = self.envelope();
        doc.insert("interpretations".into(), json!(r.interpretations));
        doc.insert("methods".into(), json!(methods));
        doc.insert("unfounded_checks".into(), json!(r.unfounded_checks));
        doc.insert("stable".into(), Value::Array(r.stable.iter().map(values_json).collect()));
        doc.insert("wf".into(), interp_json(&r.wf));
        Ok(self.emit(t, lines, doc))
    }
}

fn check_corpus(cfg: &CliConfig) -> R {
    let programs = corpus::<FourValue>(cfg.seed, cfg.count);
    let (mut interpretations, mut stable, mut classical) = (0, 0, 0);
    let diverges = |p: &_| matches!(cross_check(&build_pstar(p)), Err(Error::Divergence(_)));
    for (k, (p, gen)) in programs.iter().enumerate() {
        match cross_check(&build_pstar(p)) {
            Ok(r) => {
                interpretations += r.interpretations;
                stable += r.stable.len();
                classical += usize::from(gen.classical);
            }
            Err(Error::Divergence(_)) => {
                let small = shrink(p, diverges);
                let why = match cross_check(&build_pstar(&small)) {
                    Err(Error::Divergence(m)) => m,
                    _ => String::new(),
                };
                let text = small.to_string().trim_end().replace('\n', " ");
                return Err(divergence(format!("program {k} of seed {} shrinks to `{text}`: {why}", cfg.seed)));
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(match cfg.format {
        Format::Table => format!(
            "programs: {} ({classical} classical)\ninterpretations: {interpretations}\nstable models: {stable}\nok\n",
            programs.len()
        ),
        Format::Json => {
            let doc = json!({
                "seed": cfg.seed,
                "programs": programs.len(),
                "classical": classical,
                "interpretations": interpretations,
                "stable_models": stable,
                "ok": true,
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
    })
}
