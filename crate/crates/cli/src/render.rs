use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use bilat_core::bilattice::Bilattice;
use bilat_core::interp::Interpretation;
use bilat_core::operators::FixpointTrace;
use bilat_core::program::{AtomId, HerbrandBase};

/// Left-aligned text table; columns are separated by two spaces.
pub(crate) struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub(crate) fn new(header: Vec<String>) -> Self {
        Table { header, rows: Vec::new() }
    }

    /// A table whose columns are the atoms of `base`.
    pub(crate) fn for_atoms(base: &HerbrandBase) -> Self {
        let mut header = vec![String::new()];
        header.extend(base.names().iter().cloned());
        Table::new(header)
    }

    pub(crate) fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub(crate) fn interp<V: Bilattice>(&mut self, label: impl Into<String>, i: &Interpretation<V>) {
        let mut cells = vec![label.into()];
        cells.extend(i.values().iter().map(|v| v.to_string()));
        self.rows.push(cells);
    }

    pub(crate) fn trace<V: Bilattice>(&mut self, indent: &str, letter: &str, trace: &FixpointTrace<V>) {
        for (n, step) in trace.steps.iter().enumerate() {
            self.interp(format!("{indent}{letter}_{n}"), step);
        }
    }

    pub(crate) fn render(&self) -> String {
        let cols = self.rows.iter().map(Vec::len).chain([self.header.len()]).max().unwrap_or(0);
        let mut widths = vec![0; cols];
        for row in self.rows.iter().chain([&self.header]) {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in [&self.header].into_iter().chain(&self.rows) {
            let mut line = String::new();
            for (k, cell) in row.iter().enumerate() {
                if k > 0 {
                    line.push_str("  ");
                }
                line.push_str(cell);
                line.extend(std::iter::repeat_n(' ', widths[k] - cell.chars().count()));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

pub(crate) fn program_hash(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

pub(crate) fn interp_json<V: Bilattice>(i: &Interpretation<V>) -> Value {
    let map: Map<String, Value> = i.entries().map(|(name, v)| (name.to_string(), json!(v.to_string()))).collect();
    Value::Object(map)
}

pub(crate) fn values_json<V: Bilattice>(i: &Interpretation<V>) -> Value {
    Value::Array(i.values().iter().map(|v| json!(v.to_string())).collect())
}

pub(crate) fn trace_json<V: Bilattice>(trace: &FixpointTrace<V>) -> Value {
    Value::Array(trace.steps.iter().map(interp_json).collect())
}

pub(crate) fn atom_names(base: &HerbrandBase, atoms: &[AtomId]) -> Vec<String> {
    atoms.iter().map(|&a| base.name(a).to_string()).collect()
}

pub(crate) fn atom_set(base: &HerbrandBase, atoms: &[AtomId]) -> String {
    format!("{{{}}}", atom_names(base, atoms).join(", "))
}

pub(crate) fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
