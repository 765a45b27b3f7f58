//! Derivative-free search for states that locally maximize one MEMS
//! component.
//!
//! Each restart starts from a seeded random state and hill-climbs: perturb
//! every amplitude by a complex Gaussian of the current step size,
//! renormalize, keep the move if the component improves. After
//! [`REJECTION_WINDOW`] consecutive rejections the step is halved. A restart
//! ends when the step drops below `step_min` or after `max_iters` proposals.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::entropy::entropy_ceiling;
use crate::error::{MemsError, Result};
use crate::library;
use crate::mems::s_component;
use crate::state::PureState;
use crate::subsets::subsets_of_size;

pub const ACCEPT_THRESHOLD: f64 = 1e-12;
pub const REJECTION_WINDOW: usize = 50;
pub const STEP_SHRINK: f64 = 0.5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n_sites: usize,
    pub dims: Vec<usize>,
    /// 1-based component `i` of `S_i`.
    pub component: usize,
    pub restarts: usize,
    pub max_iters: usize,
    pub step_init: f64,
    pub step_min: f64,
    pub seed: u64,
}

impl SearchConfig {
    pub fn qubits(n_sites: usize, component: usize, seed: u64) -> Self {
        Self::new(vec![2; n_sites], component, seed)
    }

    pub fn new(dims: Vec<usize>, component: usize, seed: u64) -> Self {
        SearchConfig {
            n_sites: dims.len(),
            dims,
            component,
            restarts: 20,
            max_iters: 20_000,
            step_init: 0.2,
            step_min: 1e-6,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(MemsError::ConfigInvalid(m));
        if self.dims.len() != self.n_sites {
            return fail(format!("{} dims given for {} sites", self.dims.len(), self.n_sites));
        }
        if self.n_sites < 2 || self.dims.iter().any(|&d| d < 2) {
            return fail(format!("need at least 2 sites of dimension >= 2, got {:?}", self.dims));
        }
        if self.component == 0 || self.component > self.n_sites / 2 {
            return fail(format!(
                "component {} outside 1..={}",
                self.component,
                self.n_sites / 2
            ));
        }
        if self.restarts == 0 {
            return fail("restarts must be >= 1".into());
        }
        if !(self.step_min > 0.0 && self.step_min < self.step_init && self.step_init.is_finite()) {
            return fail(format!(
                "need 0 < step_min ({}) < step_init ({})",
                self.step_min, self.step_init
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub iteration: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RestartOutcome {
    pub state: PureState,
    pub value: f64,
    /// Initial value and every accepted improvement.
    pub trace: Vec<TracePoint>,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub best_state: PureState,
    pub best_value: f64,
    /// Trace of the winning restart.
    pub trace: Vec<TracePoint>,
    pub restart_index: usize,
    /// Final value reached by each restart, in restart order.
    pub restart_values: Vec<f64>,
}

fn perturb(amps: &[Complex64], step: f64, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    amps.iter()
        .map(|a| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            a + Complex64::new(re, im) * step
        })
        .collect()
}

/// One hill-climbing run. `restart` selects an independent ChaCha stream.
pub fn climb(cfg: &SearchConfig, restart: usize) -> Result<RestartOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(restart as u64);
    let mut state = library::haar_random_with(&cfg.dims, &mut rng)?;
    let mut value = s_component(&state, cfg.component)?;
    let mut trace = vec![TracePoint { iteration: 0, value }];
    let mut step = cfg.step_init;
    let mut rejections = 0;
    let mut iterations = 0;

    while iterations < cfg.max_iters && step >= cfg.step_min {
        iterations += 1;
        let candidate = PureState::new(cfg.dims.clone(), perturb(state.amps(), step, &mut rng))?;
        let v = s_component(&candidate, cfg.component)?;
        if v > value + ACCEPT_THRESHOLD {
            state = candidate;
            value = v;
            rejections = 0;
            trace.push(TracePoint { iteration: iterations, value });
        } else {
            rejections += 1;
            if rejections >= REJECTION_WINDOW {
                step *= STEP_SHRINK;
                rejections = 0;
            }
        }
    }
    Ok(RestartOutcome {
        state: state.with_label(format!("search(S_{}, seed={}, restart={restart})", cfg.component, cfg.seed)),
        value,
        trace,
        iterations,
    })
}

/// Best state over all restarts; ties go to the lowest restart index.
pub fn maximize_component(cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let outcomes: Vec<RestartOutcome> = {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            (0..cfg.restarts)
                .into_par_iter()
                .map(|r| climb(cfg, r))
                .collect::<Result<_>>()?
        }
        #[cfg(not(feature = "parallel"))]
        {
            (0..cfg.restarts).map(|r| climb(cfg, r)).collect::<Result<_>>()?
        }
    };
    let restart_values: Vec<f64> = outcomes.iter().map(|o| o.value).collect();
    let mut best = 0;
    for (r, v) in restart_values.iter().enumerate() {
        if *v > restart_values[best] {
            best = r;
        }
    }
    let winner = outcomes.into_iter().nth(best).expect("restarts >= 1");
    Ok(SearchResult {
        best_state: winner.state,
        best_value: winner.value,
        trace: winner.trace,
        restart_index: best,
        restart_values,
    })
}

/// Upper bound on `S_i` from the Schmidt rank: the geometric mean over all
/// `i`-subsets of `log2 min(d_A, d_{A^c})`. Equals `i` for qubits.
pub fn component_ceiling(dims: &[usize], i: usize) -> Result<f64> {
    let n = dims.len();
    if i == 0 || i > n / 2 {
        return Err(MemsError::SizeOutOfRange(format!("component {i} for {n} sites")));
    }
    let subsets: Vec<_> = subsets_of_size(n, i)?.collect();
    let mean_log = subsets
        .iter()
        .map(|s| entropy_ceiling(dims, s).log2())
        .sum::<f64>()
        / subsets.len() as f64;
    Ok(mean_log.exp2())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReferenceValue {
    pub label: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub dims: Vec<usize>,
    pub component: usize,
    pub ceiling: f64,
    pub search_best: f64,
    /// Best named construction with these dims, when one exists.
    pub reference: Option<ReferenceValue>,
    /// `max(search_best, reference)`.
    pub observed: f64,
    pub gap: f64,
}

fn reference_states(dims: &[usize]) -> Vec<PureState> {
    let n = dims.len();
    let mut out = Vec::new();
    if dims.iter().all(|&d| d == 2) {
        out.extend(library::ghz(n));
        out.extend(library::w(n));
        out.extend(library::linear_cluster(n));
        if n == 4 {
            out.push(library::m4());
        }
    }
    if dims == [4, 4, 4, 4] {
        out.push(library::four_ququart_ame());
    }
    out
}

/// Budget of the bundled search run: shorter for large Hilbert spaces.
pub fn saturation_search_config(dims: &[usize], i: usize, seed: u64) -> SearchConfig {
    let total: usize = dims.iter().product();
    let mut cfg = SearchConfig::new(dims.to_vec(), i, seed);
    if total > 64 {
        cfg.restarts = 2;
        cfg.max_iters = 3_000;
    } else {
        cfg.restarts = 8;
        cfg.max_iters = 10_000;
    }
    cfg
}

/// Ceiling for `S_i` against the best value seen from a bundled search and
/// from known constructions.
pub fn saturation_report(dims: &[usize], i: usize, seed: u64) -> Result<SaturationReport> {
    let ceiling = component_ceiling(dims, i)?;
    let search = maximize_component(&saturation_search_config(dims, i, seed))?;
    let mut reference: Option<ReferenceValue> = None;
    for state in reference_states(dims) {
        let value = s_component(&state, i)?;
        if reference.as_ref().is_none_or(|r| value > r.value) {
            reference = Some(ReferenceValue {
                label: state.label().unwrap_or("reference").to_owned(),
                value,
            });
        }
    }
    let observed = reference
        .as_ref()
        .map_or(search.best_value, |r| r.value.max(search.best_value));
    Ok(SaturationReport {
        dims: dims.to_vec(),
        component: i,
        ceiling,
        search_best: search.best_value,
        reference,
        observed,
        gap: ceiling - observed,
    })
}
