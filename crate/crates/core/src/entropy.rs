//! Reduced density matrices of pure states and their von Neumann entropies.
//!
//! All entropies are in bits, for qudit sites as well.

use num_complex::Complex64;

use crate::eigen::{hermitian_eigenvalues, ComplexMatrix};
use crate::error::{MemsError, Result};
use crate::state::PureState;
use crate::subsets::SiteSubset;

/// Eigenvalues in `[-PSD_TOLERANCE, 0)` are treated as rounding noise.
pub const PSD_TOLERANCE: f64 = 1e-9;
/// Allowed deviation of the spectrum sum from 1.
pub const TRACE_TOLERANCE: f64 = 1e-7;

/// The reduced state `rho_A = Tr_{A^c} |psi><psi|` of a site subset.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Wraps a matrix without checking the density-matrix invariants; those
    /// are checked when the entropy is taken.
    pub fn from_matrix(matrix: ComplexMatrix) -> Self {
        DensityMatrix { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.matrix)
    }
}

fn check_subset(state: &PureState, subset: &SiteSubset) -> Result<()> {
    let n = state.n_sites();
    match subset.indices().last() {
        Some(&last) if last < n => Ok(()),
        _ => Err(MemsError::SubsetInvalid {
            indices: subset.indices().to_vec(),
            n_sites: n,
        }),
    }
}

/// Reshapes the amplitudes into a `d_A x d_{A^c}` matrix whose rows are
/// indexed by the subset digits and columns by the complement digits, both
/// little-endian in site order. Returned row-major with the column count.
pub fn bipartite_matrix(state: &PureState, subset: &SiteSubset) -> Result<(Vec<Complex64>, usize, usize)> {
    check_subset(state, subset)?;
    let dims = state.dims();
    let mut row_stride = vec![0usize; dims.len()];
    let mut col_stride = vec![0usize; dims.len()];
    let (mut rows, mut cols) = (1usize, 1usize);
    for (site, &d) in dims.iter().enumerate() {
        if subset.contains(site) {
            row_stride[site] = rows;
            rows *= d;
        } else {
            col_stride[site] = cols;
            cols *= d;
        }
    }
    let mut m = vec![Complex64::new(0.0, 0.0); rows * cols];
    for (index, &a) in state.amps().iter().enumerate() {
        let mut rest = index;
        let (mut r, mut c) = (0, 0);
        for (site, &d) in dims.iter().enumerate() {
            let x = rest % d;
            rest /= d;
            r += x * row_stride[site];
            c += x * col_stride[site];
        }
        m[r * cols + c] = a;
    }
    Ok((m, rows, cols))
}

/// `rho_A` computed as the Gram matrix `M M^†` of the bipartite reshaping.
pub fn reduced_density_matrix(state: &PureState, subset: &SiteSubset) -> Result<DensityMatrix> {
    let (m, rows, cols) = bipartite_matrix(state, subset)?;
    let mut rho = ComplexMatrix::zeros(rows);
    for i in 0..rows {
        let ri = &m[i * cols..(i + 1) * cols];
        for j in i..rows {
            let rj = &m[j * cols..(j + 1) * cols];
            let v: Complex64 = ri.iter().zip(rj).map(|(a, b)| a * b.conj()).sum();
            rho[(i, j)] = v;
            rho[(j, i)] = v.conj();
        }
    }
    Ok(DensityMatrix::from_matrix(rho))
}

/// Shannon entropy in bits of a spectrum, after the PSD and trace checks.
/// The spectrum is divided by its sum first, absorbing rounding in the norm.
pub fn spectrum_entropy(eigenvalues: &[f64]) -> Result<f64> {
    if let Some(&bad) = eigenvalues.iter().find(|&&l| l < -PSD_TOLERANCE || l.is_nan()) {
        return Err(MemsError::NotPsd(bad));
    }
    let total: f64 = eigenvalues.iter().sum();
    if (total - 1.0).abs() > TRACE_TOLERANCE {
        return Err(MemsError::NotNormalized(total));
    }
    let h: f64 = eigenvalues
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| {
            let p = l / total;
            -p * p.log2()
        })
        .sum();
    Ok(h.max(0.0))
}

/// `-Tr rho log2 rho`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    spectrum_entropy(&rho.eigenvalues()?)
}

/// The non-zero amplitudes of a state with their flat indices.
#[derive(Debug, Clone)]
pub struct SparseAmplitudes<'a> {
    state: &'a PureState,
    entries: Vec<(usize, Complex64)>,
}

impl<'a> SparseAmplitudes<'a> {
    pub fn new(state: &'a PureState) -> Self {
        let entries = state
            .amps()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.re != 0.0 || a.im != 0.0)
            .map(|(k, a)| (k, *a))
            .collect();
        SparseAmplitudes { state, entries }
    }

    pub fn state(&self) -> &'a PureState {
        self.state
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Assigns compact slots to the distinct keys it sees, in first-seen order.
enum SlotMap {
    Dense(Vec<usize>),
    Sparse(std::collections::HashMap<usize, usize>),
}

impl SlotMap {
    fn new(range: usize, expected: usize) -> Self {
        if range <= 4 * expected.max(16) {
            SlotMap::Dense(vec![usize::MAX; range])
        } else {
            SlotMap::Sparse(Default::default())
        }
    }

    fn slot(&mut self, key: usize, next: &mut usize) -> usize {
        let entry = match self {
            SlotMap::Dense(v) => &mut v[key],
            SlotMap::Sparse(m) => m.entry(key).or_insert(usize::MAX),
        };
        if *entry == usize::MAX {
            *entry = *next;
            *next += 1;
        }
        *entry
    }
}

/// Non-zero spectrum of the marginal on `subset`.
///
/// All-zero rows and columns of the bipartite matrix `M` are dropped before
/// forming a Gram matrix, and the eigenproblem is solved on whichever side
/// of the cut is smaller (`M M^†` and `M^† M` share their non-zero
/// spectrum).
pub fn marginal_spectrum(amps: &SparseAmplitudes<'_>, subset: &SiteSubset) -> Result<Vec<f64>> {
    let state = amps.state;
    check_subset(state, subset)?;
    let dims = state.dims();
    let mut row_stride = vec![0usize; dims.len()];
    let mut col_stride = vec![0usize; dims.len()];
    let (mut rows, mut cols) = (1usize, 1usize);
    for (site, &d) in dims.iter().enumerate() {
        if subset.contains(site) {
            row_stride[site] = rows;
            rows *= d;
        } else {
            col_stride[site] = cols;
            cols *= d;
        }
    }

    let mut row_slots = SlotMap::new(rows, amps.len());
    let mut col_slots = SlotMap::new(cols, amps.len());
    let (mut n_rows, mut n_cols) = (0usize, 0usize);
    let mut entries = Vec::with_capacity(amps.len());
    for &(index, a) in &amps.entries {
        let mut rest = index;
        let (mut r, mut c) = (0, 0);
        for (site, &d) in dims.iter().enumerate() {
            let x = rest % d;
            rest /= d;
            r += x * row_stride[site];
            c += x * col_stride[site];
        }
        let r = row_slots.slot(r, &mut n_rows);
        let c = col_slots.slot(c, &mut n_cols);
        entries.push((r, c, a));
    }

    // compact M, transposed if needed so the Gram side is the smaller one
    let flip = n_rows > n_cols;
    let (side, other) = if flip { (n_cols, n_rows) } else { (n_rows, n_cols) };
    let mut m = vec![Complex64::new(0.0, 0.0); side * other];
    for (r, c, a) in entries {
        if flip {
            m[c * other + r] = a.conj();
        } else {
            m[r * other + c] = a;
        }
    }
    let mut gram = ComplexMatrix::zeros(side);
    for i in 0..side {
        let ri = &m[i * other..(i + 1) * other];
        for j in i..side {
            let rj = &m[j * other..(j + 1) * other];
            let v: Complex64 = ri.iter().zip(rj).map(|(a, b)| a * b.conj()).sum();
            gram[(i, j)] = v;
            gram[(j, i)] = v.conj();
        }
    }
    hermitian_eigenvalues(&gram)
}

/// Entropy of a marginal from a precomputed sparse view of the state.
pub fn subset_entropy_sparse(amps: &SparseAmplitudes<'_>, subset: &SiteSubset) -> Result<f64> {
    if subset.len() == amps.state.n_sites() {
        check_subset(amps.state, subset)?;
        return Ok(0.0);
    }
    spectrum_entropy(&marginal_spectrum(amps, subset)?)
}

/// Entropy in bits of the marginal on `subset`.
pub fn subset_entropy(state: &PureState, subset: &SiteSubset) -> Result<f64> {
    subset_entropy_sparse(&SparseAmplitudes::new(state), subset)
}

/// Entropy from the full `d_A x d_A` reduced density matrix of `subset`,
/// with no compression and no switch to the complement.
pub fn subset_entropy_direct(state: &PureState, subset: &SiteSubset) -> Result<f64> {
    von_neumann_entropy(&reduced_density_matrix(state, subset)?)
}

/// `log2 min(d_A, d_{A^c})`: the largest entropy a marginal of `subset` can carry.
pub fn entropy_ceiling(dims: &[usize], subset: &SiteSubset) -> f64 {
    let d_a: usize = subset.indices().iter().map(|&s| dims[s]).product();
    let d_total: usize = dims.iter().product();
    (d_a.min(d_total / d_a) as f64).log2()
}

#[cfg(test)]
mod tests {
    use super::*;

    const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn subset(ix: &[usize], n: usize) -> SiteSubset {
        SiteSubset::new(ix.to_vec(), n).unwrap()
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let bell = PureState::from_real(vec![2, 2], &[H, 0.0, 0.0, H]).unwrap();
        let rho = reduced_density_matrix(&bell, &subset(&[0], 2)).unwrap();
        assert!(rho.matrix().max_abs_diff(&ComplexMatrix::diagonal(&[0.5, 0.5])) < 1e-15);
        assert!((von_neumann_entropy(&rho).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn product_marginal_is_pure() {
        let s = PureState::basis(vec![2, 2], &[0, 0]).unwrap();
        let rho = reduced_density_matrix(&s, &subset(&[0], 2)).unwrap();
        assert!(rho.matrix().max_abs_diff(&ComplexMatrix::diagonal(&[1.0, 0.0])) < 1e-15);
        assert_eq!(von_neumann_entropy(&rho).unwrap(), 0.0);
    }

    #[test]
    fn diagonal_entropies() {
        let e = |v: &[f64]| von_neumann_entropy(&DensityMatrix::from_matrix(ComplexMatrix::diagonal(v))).unwrap();
        assert!((e(&[0.5, 0.5]) - 1.0).abs() < 1e-15);
        assert_eq!(e(&[1.0, 0.0]), 0.0);
        // -(3/4)log2(3/4) - (1/4)log2(1/4) = 2 - (3/4)log2 3
        let expected = 2.0 - 0.75 * 3f64.log2();
        assert!((e(&[0.75, 0.25]) - expected).abs() < 1e-15);
        assert!((expected - 0.811_278_124_459_132_9).abs() < 1e-15);
    }

    #[test]
    fn clamp_and_errors() {
        let dm = |v: &[f64]| DensityMatrix::from_matrix(ComplexMatrix::diagonal(v));
        assert_eq!(von_neumann_entropy(&dm(&[1.0 + 5e-10, -5e-10])).unwrap(), 0.0);
        assert!(matches!(von_neumann_entropy(&dm(&[1.1, -0.1])), Err(MemsError::NotPsd(_))));
        assert!(matches!(von_neumann_entropy(&dm(&[0.5, 0.4])), Err(MemsError::NotNormalized(_))));
    }

    #[test]
    fn subset_beyond_state_is_rejected() {
        let s = PureState::basis(vec![2, 2], &[0, 0]).unwrap();
        let bad = SiteSubset::new(vec![3], 4).unwrap();
        assert!(matches!(subset_entropy(&s, &bad), Err(MemsError::SubsetInvalid { .. })));
    }

    #[test]
    fn bipartite_rows_follow_subset_digits() {
        // |x0 x1 x2> = |1 0 1>, flat index 5; subset {0,2} row = 1 + 2*1 = 3, col 0
        let s = PureState::basis(vec![2, 2, 2], &[1, 0, 1]).unwrap();
        let (m, rows, cols) = bipartite_matrix(&s, &subset(&[0, 2], 3)).unwrap();
        assert_eq!((rows, cols), (4, 2));
        assert_eq!(m[3 * cols].re, 1.0);
    }

    #[test]
    fn ceiling_uses_smaller_side() {
        assert_eq!(entropy_ceiling(&[2, 4], &subset(&[1], 2)), 1.0);
        assert_eq!(entropy_ceiling(&[4, 4, 4, 4], &subset(&[0, 3], 4)), 4.0);
        assert_eq!(entropy_ceiling(&[2; 6], &subset(&[0, 1, 2, 3], 6)), 2.0);
    }
}
