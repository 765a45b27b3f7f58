//! Independent reference computations used by the integration tests.
#![allow(dead_code)]

use mems_core::Complex64;

fn digits(dims: &[usize], mut index: usize) -> Vec<usize> {
    dims.iter()
        .map(|&d| {
            let x = index % d;
            index /= d;
            x
        })
        .collect()
}

/// Partial trace of the full `|psi><psi|`, keeping `keep` (sorted), by
/// summing matrix elements whose traced-out digits agree.
pub fn brute_force_partial_trace(dims: &[usize], amps: &[Complex64], keep: &[usize]) -> (usize, Vec<Complex64>) {
    let total = amps.len();
    let d_keep: usize = keep.iter().map(|&s| dims[s]).product();
    let mut rho = vec![Complex64::new(0.0, 0.0); d_keep * d_keep];
    let kept_index = |dg: &[usize]| {
        let mut idx = 0;
        for &s in keep.iter().rev() {
            idx = idx * dims[s] + dg[s];
        }
        idx
    };
    for i in 0..total {
        let di = digits(dims, i);
        for j in 0..total {
            let dj = digits(dims, j);
            let traced_agree = (0..dims.len())
                .filter(|s| !keep.contains(s))
                .all(|s| di[s] == dj[s]);
            if traced_agree {
                let (r, c) = (kept_index(&di), kept_index(&dj));
                rho[r * d_keep + c] += amps[i] * amps[j].conj();
            }
        }
    }
    (d_keep, rho)
}

/// Singular values of a `rows x cols` complex matrix (row-major) by
/// one-sided Jacobi on the columns, descending.
pub fn one_sided_jacobi_singular_values(m: &[Complex64], rows: usize, cols: usize) -> Vec<f64> {
    let mut a: Vec<Vec<Complex64>> = (0..cols)
        .map(|j| (0..rows).map(|i| m[i * cols + j]).collect())
        .collect();
    for _ in 0..100 {
        let mut rotated = false;
        for i in 0..cols {
            for j in i + 1..cols {
                let alpha: f64 = a[i].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = a[j].iter().map(|z| z.norm_sqr()).sum();
                let gamma: Complex64 = a[i].iter().zip(&a[j]).map(|(x, y)| x.conj() * y).sum();
                let g = gamma.norm();
                if g <= 1e-15 * (alpha * beta).sqrt() || g == 0.0 {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (lo, hi) = a.split_at_mut(j);
                for (x, y) in lo[i].iter_mut().zip(hi[0].iter_mut()) {
                    let xi = *x;
                    let xj = *y * phase.conj();
                    *x = xi * c - xj * s;
                    *y = xi * s + xj * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = a
        .iter()
        .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    sv
}

/// `-sum p log2 p` of a probability list.
pub fn shannon_bits(p: &[f64]) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.log2()).sum()
}
