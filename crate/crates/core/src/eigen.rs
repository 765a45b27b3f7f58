//! Dense square complex matrices and a cyclic Jacobi eigensolver for the
//! Hermitian case.

use num_complex::Complex64;

use crate::error::{MemsError, Result};

/// Entrywise tolerance for accepting a matrix as Hermitian.
pub const HERMITIAN_TOLERANCE: f64 = 1e-9;

const MAX_SWEEPS: usize = 64;

/// Row-major square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_row_major(n: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(MemsError::ShapeMismatch(format!(
                "{} entries for a {n}x{n} matrix",
                data.len()
            )));
        }
        Ok(ComplexMatrix { n, data })
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let n = rows.len();
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| Complex64::new(v, 0.0)))
            .collect();
        Self::from_row_major(n, data)
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    /// Largest `|a_ij - conj(a_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in i..self.n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

fn off_diagonal_norm_sqr(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Cyclic Jacobi: each rotation first removes the phase of `a_pq` with a
/// diagonal unitary, then zeroes the now-real pair with a plane rotation.
/// Sweeps run until the off-diagonal mass is negligible against the
/// Frobenius norm.
pub fn hermitian_eigenvalues(matrix: &ComplexMatrix) -> Result<Vec<f64>> {
    let deviation = matrix.hermitian_deviation();
    if deviation.is_nan() || deviation > HERMITIAN_TOLERANCE {
        return Err(MemsError::NotHermitian(deviation));
    }
    let n = matrix.dim();
    let mut a = matrix.clone();
    // symmetrize so the diagonal is real and the halves agree exactly
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
        for j in i + 1..n {
            let avg = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = avg;
            a[(j, i)] = avg.conj();
        }
    }
    let frob: f64 = a.as_slice().iter().map(|z| z.norm_sqr()).sum();
    let stop = (f64::EPSILON * f64::EPSILON) * frob.max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm_sqr(&a) <= stop {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Applies `A <- U^† A U` for the Jacobi unitary that annihilates `a_pq`.
fn rotate(a: &mut ComplexMatrix, p: usize, q: usize) {
    let g = a[(p, q)];
    let r = g.norm();
    if r == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    if r < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    let phase = g / r; // e^{i phi}
    let theta = (aqq - app) / (2.0 * r);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // U restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = -phase.conj() * s;
    let u_qq = phase.conj() * c;

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * u_pp + akq * u_qp;
        a[(k, q)] = akp * u_pq + akq * u_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
        a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}
