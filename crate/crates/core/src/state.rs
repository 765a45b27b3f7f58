//! Pure states over a tensor product of finite-dimensional sites.
//!
//! Basis states are addressed by a mixed-radix index in which **site 0 is the
//! least significant digit**: for dims `[d0, d1, ...]` the digit tuple
//! `(x0, x1, ...)` maps to `x0 + d0 * (x1 + d1 * (x2 + ...))`. For qubits this
//! means the ket `|x0 x1 ... x_{N-1}>` written with site 0 leftmost has flat
//! index `sum_k x_k 2^k`.

use num_complex::Complex64;

use crate::error::{MemsError, Result};

/// Norm below which a vector is treated as zero.
pub const ZERO_NORM: f64 = 1e-12;

/// Amplitude vectors whose norm is within this distance of 1 are stored as
/// given; anything further is rescaled.
const RENORM_SLACK: f64 = 1e-12;

/// Maps a digit tuple to its flat index (site 0 least significant).
pub fn mixed_radix_index(dims: &[usize], digits: &[usize]) -> Result<usize> {
    if dims.len() != digits.len() {
        return Err(MemsError::ShapeMismatch(format!(
            "{} digits for {} sites",
            digits.len(),
            dims.len()
        )));
    }
    let mut index = 0;
    for (site, (&d, &x)) in dims.iter().zip(digits).enumerate().rev() {
        if x >= d {
            return Err(MemsError::DigitOutOfRange { site, digit: x, dim: d });
        }
        index = index * d + x;
    }
    Ok(index)
}

/// Inverse of [`mixed_radix_index`].
pub fn mixed_radix_digits(dims: &[usize], index: usize) -> Result<Vec<usize>> {
    let total: usize = dims.iter().product();
    if index >= total {
        return Err(MemsError::DigitOutOfRange {
            site: dims.len(),
            digit: index,
            dim: total,
        });
    }
    let mut rest = index;
    Ok(dims
        .iter()
        .map(|&d| {
            let x = rest % d;
            rest /= d;
            x
        })
        .collect())
}

fn validate_dims(dims: &[usize]) -> Result<usize> {
    if dims.is_empty() || dims.iter().any(|&d| d < 2) {
        return Err(MemsError::InvalidDims(dims.to_vec()));
    }
    dims.iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .ok_or_else(|| MemsError::SizeOutOfRange(format!("Hilbert space of {dims:?} overflows")))
}

/// A normalized pure state `|psi>`. Equality compares dims, amplitudes and
/// label.
#[derive(Debug, Clone)]
pub struct PureState {
    dims: Vec<usize>,
    amps: Vec<Complex64>,
    label: Option<String>,
    renormalized: bool,
}

impl PureState {
    /// Builds a state from raw amplitudes, rescaling to unit norm when needed.
    pub fn new(dims: Vec<usize>, amps: Vec<Complex64>) -> Result<Self> {
        let expected = validate_dims(&dims)?;
        if amps.len() != expected {
            return Err(MemsError::DimensionMismatch {
                dims,
                expected,
                got: amps.len(),
            });
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() || norm < ZERO_NORM {
            return Err(MemsError::ZeroNorm(norm));
        }
        let renormalized = (norm - 1.0).abs() > RENORM_SLACK;
        let amps = if renormalized {
            amps.into_iter().map(|a| a / norm).collect()
        } else {
            amps
        };
        Ok(PureState {
            dims,
            amps,
            label: None,
            renormalized,
        })
    }

    /// Convenience constructor for real amplitudes.
    pub fn from_real(dims: Vec<usize>, amps: &[f64]) -> Result<Self> {
        Self::new(dims, amps.iter().map(|&a| Complex64::new(a, 0.0)).collect())
    }

    /// The basis state with the given digits.
    pub fn basis(dims: Vec<usize>, digits: &[usize]) -> Result<Self> {
        let total = validate_dims(&dims)?;
        let index = mixed_radix_index(&dims, digits)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); total];
        amps[index] = Complex64::new(1.0, 0.0);
        Self::new(dims, amps)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn n_sites(&self) -> usize {
        self.dims.len()
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Whether construction had to rescale the input amplitudes.
    pub fn was_renormalized(&self) -> bool {
        self.renormalized
    }

    pub fn is_qubit_system(&self) -> bool {
        self.dims.iter().all(|&d| d == 2)
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &PureState) -> Result<Complex64> {
        if self.dims != other.dims {
            return Err(MemsError::ShapeMismatch(format!(
                "dims {:?} vs {:?}",
                self.dims, other.dims
            )));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Stride of `site` in the flat index.
    pub fn stride(&self, site: usize) -> usize {
        self.dims[..site].iter().product()
    }

    /// `self ⊗ other`, with `other`'s sites appended after this state's.
    pub fn tensor(&self, other: &PureState) -> Result<PureState> {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let low = self.amps.len();
        let mut amps = vec![Complex64::new(0.0, 0.0); low * other.amps.len()];
        for (j, b) in other.amps.iter().enumerate() {
            for (i, a) in self.amps.iter().enumerate() {
                amps[i + low * j] = a * b;
            }
        }
        PureState::new(dims, amps)
    }

    /// Applies a `d x d` matrix (row-major) to a single site. The result is
    /// renormalized, so non-unitary inputs act as unnormalized local maps.
    pub fn apply_local(&self, site: usize, matrix: &[Complex64]) -> Result<PureState> {
        if site >= self.n_sites() {
            return Err(MemsError::SubsetInvalid {
                indices: vec![site],
                n_sites: self.n_sites(),
            });
        }
        let d = self.dims[site];
        if matrix.len() != d * d {
            return Err(MemsError::ShapeMismatch(format!(
                "local operator has {} entries, site {site} needs {}",
                matrix.len(),
                d * d
            )));
        }
        let stride = self.stride(site);
        let block = stride * d;
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for base in (0..self.amps.len()).step_by(block) {
            for low in 0..stride {
                let at = |x: usize| base + low + x * stride;
                for row in 0..d {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for col in 0..d {
                        acc += matrix[row * d + col] * self.amps[at(col)];
                    }
                    out[at(row)] = acc;
                }
            }
        }
        let mut next = PureState::new(self.dims.clone(), out)?;
        next.label = self.label.clone();
        Ok(next)
    }

    /// Relabels sites: site `k` of the result is site `order[k]` of `self`.
    pub fn permute_sites(&self, order: &[usize]) -> Result<PureState> {
        let n = self.n_sites();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&s| s >= n || std::mem::replace(&mut seen[s], true)) {
            return Err(MemsError::ShapeMismatch(format!(
                "{order:?} is not a permutation of {n} sites"
            )));
        }
        let new_dims: Vec<usize> = order.iter().map(|&s| self.dims[s]).collect();
        let mut amps = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for (index, a) in self.amps.iter().enumerate() {
            let digits = mixed_radix_digits(&self.dims, index)?;
            let new_digits: Vec<usize> = order.iter().map(|&s| digits[s]).collect();
            amps[mixed_radix_index(&new_dims, &new_digits)?] = *a;
        }
        PureState::new(new_dims, amps)
    }
}

impl PartialEq for PureState {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.amps == other.amps && self.label == other.label
    }
}

/// A proper mixed state: a classical mixture of pure states sharing dims.
#[derive(Debug, Clone)]
pub struct Ensemble {
    members: Vec<(f64, PureState)>,
}

impl Ensemble {
    pub const WEIGHT_TOLERANCE: f64 = 1e-9;

    pub fn new(members: Vec<(f64, PureState)>) -> Result<Self> {
        let Some((_, first)) = members.first() else {
            return Err(MemsError::WeightInvalid("ensemble has no members".into()));
        };
        let dims = first.dims().to_vec();
        if let Some((_, s)) = members.iter().find(|(_, s)| s.dims() != dims.as_slice()) {
            return Err(MemsError::ShapeMismatch(format!(
                "ensemble member dims {:?} differ from {dims:?}",
                s.dims()
            )));
        }
        if let Some((w, _)) = members.iter().find(|(w, _)| !w.is_finite() || *w < 0.0) {
            return Err(MemsError::WeightInvalid(format!("negative or non-finite weight {w}")));
        }
        let total: f64 = members.iter().map(|(w, _)| w).sum();
        if (total - 1.0).abs() > Self::WEIGHT_TOLERANCE {
            return Err(MemsError::WeightInvalid(format!("weights sum to {total}, not 1")));
        }
        Ok(Ensemble { members })
    }

    pub fn members(&self) -> &[(f64, PureState)] {
        &self.members
    }

    pub fn dims(&self) -> &[usize] {
        self.members[0].1.dims()
    }
}
