//! The multiple-entropy-measure vector `[S_1, ..., S_m]`, `m = floor(N/2)`.
//!
//! `S_i` is the geometric mean of the entropies of all `C(N, i)` marginals on
//! `i` sites. Components above `N/2` are not reported since a pure state's
//! `i`-site and `(N-i)`-site marginals share their spectra.

use serde::{Deserialize, Serialize};

use crate::entropy::{subset_entropy_sparse, SparseAmplitudes};
use crate::error::{MemsError, Result};
use crate::state::{Ensemble, PureState};
use crate::subsets::{binomial, subsets_of_size, SiteSubset};

/// Subset entropies below this many bits count as exact zeros.
pub const ZERO_THRESHOLD: f64 = 1e-12;

/// Default band for the transformation comparator.
pub const DEFAULT_COMPARE_TOLERANCE: f64 = 1e-9;

/// Site count above which a full MEMS evaluation is flagged as expensive.
pub const DEFAULT_SITE_CAP: usize = 16;
/// Marginal count `C(N, floor(N/2))` above which evaluation is flagged.
pub const SUBSET_WARN_LIMIT: u64 = 100_000;

/// Describes why evaluating all components for `n_sites` sites is costly,
/// or `None` when it is within the default limits.
pub fn workload_warning(n_sites: usize, site_cap: usize) -> Option<String> {
    let widest = binomial(n_sites, n_sites / 2);
    if n_sites > site_cap {
        Some(format!(
            "{n_sites} sites exceeds the cap of {site_cap}; S_{} alone needs {widest} marginals",
            n_sites / 2
        ))
    } else if widest > SUBSET_WARN_LIMIT {
        Some(format!("S_{} needs {widest} marginals", n_sites / 2))
    } else {
        None
    }
}

/// One marginal's entropy, kept for reporting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubsetEntropy {
    pub subset: SiteSubset,
    pub bits: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MemsVector {
    pub n_sites: usize,
    pub dims: Vec<usize>,
    /// `values[i - 1] = S_i`, in bits.
    pub values: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub per_subset: Option<Vec<SubsetEntropy>>,
}

impl MemsVector {
    /// `S_i` for 1-based `i`.
    pub fn component(&self, i: usize) -> Option<f64> {
        i.checked_sub(1).and_then(|k| self.values.get(k).copied())
    }

    /// Entries of the per-subset table with `|A| = size`.
    pub fn subsets_of_size(&self, size: usize) -> impl Iterator<Item = &SubsetEntropy> {
        self.per_subset
            .iter()
            .flatten()
            .filter(move |e| e.subset.len() == size)
    }
}

/// Entropies in subset order, whatever the worker count.
fn ordered_entropies(state: &PureState, subsets: Vec<SiteSubset>) -> Result<Vec<f64>> {
    let amps = SparseAmplitudes::new(state);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        subsets
            .par_iter()
            .map(|s| subset_entropy_sparse(&amps, s))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        subsets.iter().map(|s| subset_entropy_sparse(&amps, s)).collect()
    }
}

/// Geometric mean in the log2 domain; exactly zero when any factor is below
/// [`ZERO_THRESHOLD`].
pub fn geometric_mean_bits(entropies: &[f64]) -> f64 {
    if entropies.is_empty() || entropies.iter().any(|&e| e < ZERO_THRESHOLD) {
        return 0.0;
    }
    let mean_log = entropies.iter().map(|e| e.log2()).sum::<f64>() / entropies.len() as f64;
    mean_log.exp2()
}

fn check_component(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n / 2 {
        return Err(MemsError::SizeOutOfRange(format!(
            "component S_{i} requires 1 <= i <= {} for {n} sites",
            n / 2
        )));
    }
    Ok(())
}

fn component_with_detail(state: &PureState, i: usize) -> Result<(f64, Vec<SubsetEntropy>)> {
    check_component(state.n_sites(), i)?;
    let subsets: Vec<SiteSubset> = subsets_of_size(state.n_sites(), i)?.collect();
    let entropies = ordered_entropies(state, subsets.clone())?;
    let value = geometric_mean_bits(&entropies);
    let detail = subsets
        .into_iter()
        .zip(entropies)
        .map(|(subset, bits)| SubsetEntropy { subset, bits })
        .collect();
    Ok((value, detail))
}

/// `S_i`: geometric mean of all `i`-site marginal entropies.
pub fn s_component(state: &PureState, i: usize) -> Result<f64> {
    check_component(state.n_sites(), i)?;
    let subsets: Vec<SiteSubset> = subsets_of_size(state.n_sites(), i)?.collect();
    Ok(geometric_mean_bits(&ordered_entropies(state, subsets)?))
}

fn require_multipartite(state: &PureState) -> Result<()> {
    if state.n_sites() < 2 {
        return Err(MemsError::SizeOutOfRange(format!(
            "MEMS needs at least 2 sites, got {}",
            state.n_sites()
        )));
    }
    Ok(())
}

pub fn mems_vector(state: &PureState) -> Result<MemsVector> {
    require_multipartite(state)?;
    let values = (1..=state.n_sites() / 2)
        .map(|i| s_component(state, i))
        .collect::<Result<_>>()?;
    Ok(MemsVector {
        n_sites: state.n_sites(),
        dims: state.dims().to_vec(),
        values,
        per_subset: None,
    })
}

/// Like [`mems_vector`], also retaining every subset entropy that entered a
/// component (`C(N, floor(N/2))` entries for the last one).
pub fn mems_vector_detailed(state: &PureState) -> Result<MemsVector> {
    require_multipartite(state)?;
    let mut values = Vec::new();
    let mut table = Vec::new();
    for i in 1..=state.n_sites() / 2 {
        let (v, detail) = component_with_detail(state, i)?;
        values.push(v);
        table.extend(detail);
    }
    Ok(MemsVector {
        n_sites: state.n_sites(),
        dims: state.dims().to_vec(),
        values,
        per_subset: Some(table),
    })
}

/// `S_E`: the product of all single-site entropies.
pub fn entropy_product(state: &PureState) -> Result<f64> {
    require_multipartite(state)?;
    let singles: Vec<SiteSubset> = subsets_of_size(state.n_sites(), 1)?.collect();
    Ok(ordered_entropies(state, singles)?.into_iter().product())
}

/// Closed-form `S_i` of the `n`-qubit W state:
/// `-((n-i)/n) log2((n-i)/n) - (i/n) log2(i/n)`.
pub fn w_state_closed_form(n: usize, i: usize) -> Result<f64> {
    check_component(n, i)?;
    let p = i as f64 / n as f64;
    let q = (n - i) as f64 / n as f64;
    Ok(-q * q.log2() - p * p.log2())
}

/// Closed-form `S_2` of the `n`-qubit cluster state: `2^{(C(n,2) - 2) / C(n,2)}`.
pub fn cluster_s2_closed_form(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(MemsError::SizeOutOfRange(format!(
            "cluster S_2 closed form needs n >= 4, got {n}"
        )));
    }
    let pairs = binomial(n, 2) as f64;
    Ok(((pairs - 2.0) / pairs).exp2())
}

/// Result of testing whether `source -> target` is ruled out by LOCC
/// monotonicity of every component.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComparisonVerdict {
    pub forbidden: bool,
    /// 1-based component index of the first `S_i < S_i' - tol`.
    pub witness: Option<usize>,
}

/// Necessary condition only: `forbidden == false` does not imply the
/// transformation exists.
pub fn transform_forbidden(source: &MemsVector, target: &MemsVector, tol: f64) -> Result<ComparisonVerdict> {
    if source.n_sites != target.n_sites
        || source.dims != target.dims
        || source.values.len() != target.values.len()
    {
        return Err(MemsError::ShapeMismatch(format!(
            "cannot compare dims {:?} with {:?}",
            source.dims, target.dims
        )));
    }
    let witness = source
        .values
        .iter()
        .zip(&target.values)
        .position(|(s, t)| *s < *t - tol)
        .map(|k| k + 1);
    Ok(ComparisonVerdict {
        forbidden: witness.is_some(),
        witness,
    })
}

/// Weight-averaged MEMS of a proper mixed state.
pub fn ensemble_mems(ensemble: &Ensemble) -> Result<MemsVector> {
    let dims = ensemble.dims().to_vec();
    let mut values = vec![0.0; dims.len() / 2];
    for (weight, state) in ensemble.members() {
        let v = mems_vector(state)?;
        for (acc, s) in values.iter_mut().zip(&v.values) {
            *acc += weight * s;
        }
    }
    Ok(MemsVector {
        n_sites: dims.len(),
        dims,
        values,
        per_subset: None,
    })
}
