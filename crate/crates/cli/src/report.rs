//! JSON report types and text rendering.
//!
//! Every `--json` document carries `command` (the arguments after the binary
//! name), `tool_version` and `wall_time_s`; `wall_time_s` is the only field
//! that changes between identical runs.

use serde::Serialize;

use mems_core::figures::format_significant;
use mems_core::mems::{ComparisonVerdict, SubsetEntropy};
use mems_core::search::SaturationReport;

pub fn fmt(x: f64) -> String {
    format_significant(x, 12)
}

#[derive(Debug, Serialize)]
pub struct Meta {
    pub command: Vec<String>,
    pub tool_version: &'static str,
    pub wall_time_s: f64,
}

/// `compute` and `ensemble`.
#[derive(Debug, Serialize)]
pub struct RunReport {
    #[serde(flatten)]
    pub meta: Meta,
    pub label: Option<String>,
    pub dims: Vec<usize>,
    pub mems: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_subset: Option<Vec<SubsetEntropy>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entropy_product: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl RunReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(label) = &self.label {
            out.push_str(&format!("state: {label}\n"));
        }
        out.push_str(&format!("dims: {:?}\n", self.dims));
        for (k, v) in self.mems.iter().enumerate() {
            out.push_str(&format!("S_{} = {}\n", k + 1, fmt(*v)));
        }
        if let Some(se) = self.entropy_product {
            out.push_str(&format!("S_E = {}\n", fmt(se)));
        }
        if let Some(table) = &self.per_subset {
            out.push_str("subset entropies (bits):\n");
            for e in table {
                out.push_str(&format!("  {} {}\n", e.subset, fmt(e.bits)));
            }
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct Side {
    pub label: Option<String>,
    pub dims: Vec<usize>,
    pub mems: Vec<f64>,
}

#[derive(Debug, Serialize)]
pub struct CompareReport {
    #[serde(flatten)]
    pub meta: Meta,
    pub tol: f64,
    pub a: Side,
    pub b: Side,
    pub a_to_b: ComparisonVerdict,
    pub b_to_a: ComparisonVerdict,
}

fn verdict_line(from: &Side, to: &Side, v: &ComparisonVerdict) -> String {
    let name = |s: &Side| s.label.clone().unwrap_or_else(|| "state".into());
    match v.witness {
        Some(i) => format!(
            "{} -> {}: FORBIDDEN (S_{i} {} < {})\n",
            name(from),
            name(to),
            fmt(from.mems[i - 1]),
            fmt(to.mems[i - 1])
        ),
        None => format!("{} -> {}: not forbidden\n", name(from), name(to)),
    }
}

impl CompareReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for side in [&self.a, &self.b] {
            let values: Vec<String> = side.mems.iter().map(|v| fmt(*v)).collect();
            out.push_str(&format!(
                "{}: [{}]\n",
                side.label.as_deref().unwrap_or("state"),
                values.join(", ")
            ));
        }
        out.push_str(&verdict_line(&self.a, &self.b, &self.a_to_b));
        out.push_str(&verdict_line(&self.b, &self.a, &self.b_to_a));
        out
    }
}

#[derive(Debug, Serialize)]
pub struct SearchReport {
    #[serde(flatten)]
    pub meta: Meta,
    pub seed: u64,
    pub dims: Vec<usize>,
    pub component: usize,
    pub restarts: usize,
    pub max_iters: usize,
    pub step_init: f64,
    pub step_min: f64,
    pub best_value: f64,
    pub restart_index: usize,
    pub restart_values: Vec<f64>,
    pub best_mems: Vec<f64>,
}

impl SearchReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "best S_{} = {}\nwinning restart: {} of {}\nseed: {}\n",
            self.component,
            fmt(self.best_value),
            self.restart_index,
            self.restarts,
            self.seed
        );
        let all: Vec<String> = self.restart_values.iter().map(|v| fmt(*v)).collect();
        out.push_str(&format!("restart values: [{}]\n", all.join(", ")));
        let mems: Vec<String> = self.best_mems.iter().map(|v| fmt(*v)).collect();
        out.push_str(&format!("best state MEMS: [{}]\n", mems.join(", ")));
        out
    }
}

#[derive(Debug, Serialize)]
pub struct SaturateReport {
    #[serde(flatten)]
    pub meta: Meta,
    pub seed: u64,
    #[serde(flatten)]
    pub report: SaturationReport,
}

impl SaturateReport {
    pub fn render_text(&self) -> String {
        let r = &self.report;
        let mut out = format!(
            "dims: {:?}\nS_{} ceiling: {}\nsearch best: {}\n",
            r.dims,
            r.component,
            fmt(r.ceiling),
            fmt(r.search_best)
        );
        if let Some(reference) = &r.reference {
            out.push_str(&format!("best named state: {} = {}\n", reference.label, fmt(reference.value)));
        }
        out.push_str(&format!("observed: {}\ngap: {}\n", fmt(r.observed), fmt(r.gap)));
        out
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}
