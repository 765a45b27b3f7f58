//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export returns a JSON string; errors become JS exceptions carrying
//! the message. The `*_json` functions hold the logic and run natively too.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use mems_core::figures::{self, Family};
use mems_core::mems::{mems_vector_detailed, transform_forbidden, workload_warning, ComparisonVerdict, SubsetEntropy};
use mems_core::{library, mems_vector, PureState};

/// Sites beyond this are refused; the page runs on one thread.
pub const MAX_SITES: usize = 12;

pub const STATES: [&str; 6] = ["ghz", "w", "cluster", "bell-product", "phi4", "m4"];

fn named_state(name: &str, n: usize) -> Result<PureState, String> {
    if n > MAX_SITES {
        return Err(format!("the demo is limited to {MAX_SITES} sites"));
    }
    let fixed = |s: PureState| if n == 4 { Ok(s) } else { Err(format!("{name} has exactly 4 qubits")) };
    let state = match name {
        "ghz" => library::ghz(n),
        "w" => library::w(n),
        "cluster" => library::linear_cluster(n),
        "bell-product" if n.is_multiple_of(2) => library::bell_product(n / 2),
        "bell-product" => return Err("bell-product needs an even number of qubits".into()),
        "phi4" => return fixed(library::phi4_literal()),
        "m4" => return fixed(library::m4()),
        other => return Err(format!("unknown state `{other}`; try one of {}", STATES.join(", "))),
    };
    state.map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct MemsReport {
    label: String,
    values: Vec<f64>,
    subsets: Vec<SubsetEntropy>,
}

pub fn mems_json(name: &str, n: usize) -> Result<String, String> {
    let state = named_state(name, n)?;
    let v = mems_vector_detailed(&state).map_err(|e| e.to_string())?;
    let report = MemsReport {
        label: state.label().unwrap_or(name).to_owned(),
        values: v.values,
        subsets: v.per_subset.unwrap_or_default(),
    };
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

pub fn sweep_json(family: &str, n_min: usize, n_max: usize, component: usize) -> Result<String, String> {
    let family: Family = family.parse().map_err(|e: mems_core::MemsError| e.to_string())?;
    if n_min < 2 || n_min > n_max {
        return Err(format!("bad range {n_min}..{n_max}"));
    }
    if n_max > MAX_SITES {
        return Err(format!("the demo is limited to {MAX_SITES} sites"));
    }
    if let Some(w) = workload_warning(n_max, MAX_SITES) {
        return Err(w);
    }
    let sizes: Vec<usize> = (n_min..=n_max).collect();
    let rows = figures::sweep(family, &sizes, &[component]).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&rows).expect("rows serialize"))
}

#[derive(Serialize)]
struct Direction {
    from: String,
    to: String,
    #[serde(flatten)]
    verdict: ComparisonVerdict,
}

#[derive(Serialize)]
struct CompareReport {
    a: Vec<f64>,
    b: Vec<f64>,
    directions: [Direction; 2],
}

pub fn compare_json(a: &str, b: &str, n: usize, tol: f64) -> Result<String, String> {
    let (sa, sb) = (named_state(a, n)?, named_state(b, n)?);
    let err = |e: mems_core::MemsError| e.to_string();
    let (va, vb) = (mems_vector(&sa).map_err(err)?, mems_vector(&sb).map_err(err)?);
    let (la, lb) = (sa.label().unwrap_or(a).to_owned(), sb.label().unwrap_or(b).to_owned());
    let report = CompareReport {
        directions: [
            Direction {
                from: la.clone(),
                to: lb.clone(),
                verdict: transform_forbidden(&va, &vb, tol).map_err(err)?,
            },
            Direction {
                from: lb,
                to: la,
                verdict: transform_forbidden(&vb, &va, tol).map_err(err)?,
            },
        ],
        a: va.values,
        b: vb.values,
    };
    Ok(serde_json::to_string(&report).expect("report serializes"))
}

/// MEMS vector and per-subset entropies of a named state.
#[wasm_bindgen]
pub fn mems(name: &str, n: usize) -> Result<String, JsError> {
    mems_json(name, n).map_err(|e| JsError::new(&e))
}

/// `S_i` across a family for `n` in `n_min..=n_max`, with closed forms.
#[wasm_bindgen]
pub fn sweep(family: &str, n_min: usize, n_max: usize, component: usize) -> Result<String, JsError> {
    sweep_json(family, n_min, n_max, component).map_err(|e| JsError::new(&e))
}

/// No-go verdicts in both directions between two named `n`-site states.
#[wasm_bindgen]
pub fn compare(a: &str, b: &str, n: usize, tol: f64) -> Result<String, JsError> {
    compare_json(a, b, n, tol).map_err(|e| JsError::new(&e))
}
