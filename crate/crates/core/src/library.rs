//! Named states and random state/unitary generators.
//!
//! Kets written as `|x0 x1 ... >` list site 0 first, so `|0011>` sets sites 2
//! and 3 and has flat index `4 + 8 = 12`.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{MemsError, Result};
use crate::state::{mixed_radix_index, PureState};

const C0: Complex64 = Complex64::new(0.0, 0.0);

fn at_least(name: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(MemsError::SizeOutOfRange(format!("{name} needs n >= {min}, got {n}")));
    }
    Ok(())
}

fn qubit_index(bits: &[u8]) -> usize {
    bits.iter().enumerate().map(|(k, &b)| (b as usize) << k).sum()
}

/// `(|0...0> + |1...1>)/sqrt(2)` on `n` qubits.
pub fn ghz(n: usize) -> Result<PureState> {
    at_least("ghz", n, 2)?;
    if n >= usize::BITS as usize - 1 {
        return Err(MemsError::SizeOutOfRange(format!("ghz({n}) is too large")));
    }
    let mut amps = vec![C0; 1 << n];
    let h = std::f64::consts::FRAC_1_SQRT_2;
    amps[0] = Complex64::new(h, 0.0);
    amps[(1 << n) - 1] = Complex64::new(h, 0.0);
    Ok(PureState::new(vec![2; n], amps)?.with_label(format!("ghz({n})")))
}

/// Uniform superposition of the `n` single-excitation basis states.
pub fn w(n: usize) -> Result<PureState> {
    at_least("w", n, 2)?;
    let mut amps = vec![C0; 1 << n];
    let a = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
    for k in 0..n {
        amps[1 << k] = a;
    }
    Ok(PureState::new(vec![2; n], amps)?.with_label(format!("w({n})")))
}

/// `prod_k CZ(k, k+1) |+>^n`.
pub fn linear_cluster(n: usize) -> Result<PureState> {
    at_least("cluster", n, 2)?;
    let scale = (0.5f64).powf(n as f64 / 2.0);
    let amps = (0..1usize << n)
        .map(|x| {
            // parity of adjacent 11 pairs
            let sign = (x & (x >> 1)).count_ones() % 2;
            Complex64::new(if sign == 0 { scale } else { -scale }, 0.0)
        })
        .collect();
    Ok(PureState::new(vec![2; n], amps)?.with_label(format!("cluster({n})")))
}

/// `(|0000> + |0011> + |1100> - |1111>)/2`, qubits A, B, C, D on sites 0..3.
pub fn phi4_literal() -> PureState {
    let mut amps = vec![C0; 16];
    for (bits, sign) in [([0, 0, 0, 0], 0.5), ([0, 0, 1, 1], 0.5), ([1, 1, 0, 0], 0.5), ([1, 1, 1, 1], -0.5)] {
        amps[qubit_index(&bits)] = Complex64::new(sign, 0.0);
    }
    PureState::new(vec![2; 4], amps)
        .expect("static state")
        .with_label("phi4")
}

/// Bell pairs on sites `(0,1), (2,3), ...`.
pub fn bell_product(pairs: usize) -> Result<PureState> {
    at_least("bell-product", pairs, 1)?;
    let bell = ghz(2)?;
    let mut state = bell.clone();
    for _ in 1..pairs {
        state = state.tensor(&bell)?;
    }
    Ok(state.with_label(format!("bell-product({pairs})")))
}

/// The four-qubit state M4
/// `(|0011> + |1100> + w(|1010> + |0101>) + w^2(|1001> + |0110>))/sqrt(6)`,
/// `w = exp(2 pi i / 3)`.
pub fn m4() -> PureState {
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let one = Complex64::new(1.0, 0.0);
    let terms: [([u8; 4], Complex64); 6] = [
        ([0, 0, 1, 1], one),
        ([1, 1, 0, 0], one),
        ([1, 0, 1, 0], omega),
        ([0, 1, 0, 1], omega),
        ([1, 0, 0, 1], omega * omega),
        ([0, 1, 1, 0], omega * omega),
    ];
    let mut amps = vec![C0; 16];
    let norm = 1.0 / 6f64.sqrt();
    for (bits, c) in terms {
        amps[qubit_index(&bits)] = c * norm;
    }
    PureState::new(vec![2; 4], amps)
        .expect("static state")
        .with_label("m4")
}

/// Multiplication in GF(4) = GF(2)[x]/(x^2 + x + 1), elements as 2-bit ints.
fn gf4_mul(a: usize, b: usize) -> usize {
    let mut r = 0;
    for k in 0..2 {
        if b >> k & 1 == 1 {
            r ^= a << k;
        }
    }
    if r & 0b100 != 0 {
        r ^= 0b111;
    }
    r
}

/// Four ququarts with every two-site marginal maximally mixed:
/// `(1/4) sum_{a,b} |a, b, a+b, a+x b>` over GF(4).
pub fn four_ququart_ame() -> PureState {
    let dims = vec![4; 4];
    let mut amps = vec![C0; 256];
    for a in 0..4 {
        for b in 0..4 {
            let digits = [a, b, a ^ b, a ^ gf4_mul(2, b)];
            let index = mixed_radix_index(&dims, &digits).expect("digits < 4");
            amps[index] = Complex64::new(0.25, 0.0);
        }
    }
    PureState::new(dims, amps)
        .expect("static state")
        .with_label("ame(4,4)")
}

/// `|0...0>`.
pub fn product_state(dims: &[usize]) -> Result<PureState> {
    let zeros = vec![0; dims.len()];
    Ok(PureState::basis(dims.to_vec(), &zeros)?.with_label("product"))
}

fn complex_gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im)
}

/// Unitarily invariant random state from i.i.d. complex Gaussian amplitudes.
pub fn haar_random_with(dims: &[usize], rng: &mut ChaCha8Rng) -> Result<PureState> {
    let total: usize = dims.iter().product();
    let amps = (0..total).map(|_| complex_gaussian(rng)).collect();
    PureState::new(dims.to_vec(), amps)
}

pub fn haar_random(dims: &[usize], seed: u64) -> Result<PureState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(haar_random_with(dims, &mut rng)?.with_label(format!("haar(seed={seed})")))
}

/// Haar-distributed `d x d` unitary (row-major): Gram–Schmidt on the columns
/// of a complex Gaussian matrix.
pub fn haar_unitary(d: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let mut cols: Vec<Vec<Complex64>> = (0..d)
        .map(|_| (0..d).map(|_| complex_gaussian(rng)).collect())
        .collect();
    for j in 0..d {
        for k in 0..j {
            let proj: Complex64 = cols[k].iter().zip(&cols[j]).map(|(a, b)| a.conj() * b).sum();
            let (done, rest) = cols.split_at_mut(j);
            for (x, q) in rest[0].iter_mut().zip(&done[k]) {
                *x -= proj * q;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for x in cols[j].iter_mut() {
            *x /= norm;
        }
    }
    let mut u = vec![C0; d * d];
    for (j, col) in cols.iter().enumerate() {
        for (i, &z) in col.iter().enumerate() {
            u[i * d + j] = z;
        }
    }
    u
}

/// Applies an independent Haar unitary to every site.
pub fn random_local_unitaries(state: &PureState, rng: &mut ChaCha8Rng) -> Result<PureState> {
    let mut out = state.clone();
    for site in 0..state.n_sites() {
        let u = haar_unitary(state.dims()[site], rng);
        out = out.apply_local(site, &u)?;
    }
    Ok(out)
}

/// A random fully-product state: an independent random vector on each site.
pub fn random_product(dims: &[usize], rng: &mut ChaCha8Rng) -> Result<PureState> {
    let mut factors = dims.iter().map(|&d| haar_random_with(&[d], rng));
    let mut state = factors
        .next()
        .ok_or_else(|| MemsError::InvalidDims(dims.to_vec()))??;
    for f in factors {
        state = state.tensor(&f?)?;
    }
    Ok(state.with_label("random-product"))
}
