mod common;

use common::{brute_force_partial_trace, one_sided_jacobi_singular_values};
use mems_core::eigen::{hermitian_eigenvalues, ComplexMatrix};
use mems_core::entropy::{bipartite_matrix, entropy_ceiling, subset_entropy_direct};
use mems_core::library::{self, haar_unitary, random_local_unitaries};
use mems_core::subsets::subsets_of_size;
use mems_core::{reduced_density_matrix, subset_entropy, Complex64, SiteSubset};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all_subsets(n: usize) -> impl Iterator<Item = SiteSubset> {
    (1..=n).flat_map(move |k| subsets_of_size(n, k).unwrap())
}

#[test]
fn ghz3_pair_marginal_matches_brute_force() {
    let ghz = library::ghz(3).unwrap();
    let subset = SiteSubset::new(vec![0, 1], 3).unwrap();
    let rho = reduced_density_matrix(&ghz, &subset).unwrap();
    let (d, oracle) = brute_force_partial_trace(ghz.dims(), ghz.amps(), &[0, 1]);
    assert_eq!(d, 4);
    let expected = ComplexMatrix::diagonal(&[0.5, 0.0, 0.0, 0.5]);
    assert!(ComplexMatrix::from_row_major(4, oracle).unwrap().max_abs_diff(&expected) < 1e-15);
    assert!(rho.matrix().max_abs_diff(&expected) < 1e-15);
}

#[test]
fn gram_reduction_matches_brute_force_on_mixed_dims() {
    for (seed, dims) in [(1u64, vec![3, 2, 2]), (2, vec![2, 3, 4]), (3, vec![5, 2]), (4, vec![2, 2, 3, 2])] {
        let s = library::haar_random(&dims, seed).unwrap();
        for subset in all_subsets(dims.len()) {
            let rho = reduced_density_matrix(&s, &subset).unwrap();
            let (d, oracle) = brute_force_partial_trace(&dims, s.amps(), subset.indices());
            let oracle = ComplexMatrix::from_row_major(d, oracle).unwrap();
            assert!(rho.matrix().max_abs_diff(&oracle) < 1e-12, "{dims:?} {subset}");
        }
    }
}

/// Random Hermitian `U diag(l) U^†` with a known spectrum.
fn hermitian_with_spectrum(spectrum: &[f64], rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let n = spectrum.len();
    let u = haar_unitary(n, rng);
    let mut data = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            data[i * n + j] = (0..n).map(|k| u[i * n + k] * spectrum[k] * u[j * n + k].conj()).sum();
        }
    }
    ComplexMatrix::from_row_major(n, data).unwrap()
}

#[test]
fn jacobi_meets_accuracy_contract() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in [2usize, 3, 7, 16, 33, 64] {
        // clustered and degenerate values, both signs
        let mut spectrum: Vec<f64> = (0..n).map(|k| ((k * 7919) % 13) as f64 / 13.0 - 0.3).collect();
        spectrum[0] = spectrum[n - 1];
        let m = hermitian_with_spectrum(&spectrum, &mut rng);
        let got = hermitian_eigenvalues(&m).unwrap();
        spectrum.sort_by(f64::total_cmp);
        let worst = got.iter().zip(&spectrum).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        assert!(worst <= 1e-10 * n as f64, "n={n} err={worst:e}");
    }
}

#[test]
fn gram_spectrum_matches_svd_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for (rows, cols) in [(2, 2), (4, 4), (4, 16), (8, 8), (16, 4), (9, 27)] {
        let dims = vec![rows, cols];
        let s = library::haar_random_with(&dims, &mut rng).unwrap();
        let subset = SiteSubset::new(vec![0], 2).unwrap();
        let (m, r, c) = bipartite_matrix(&s, &subset).unwrap();
        assert_eq!((r, c), (rows, cols));
        let rho = reduced_density_matrix(&s, &subset).unwrap();
        let mut eig = rho.eigenvalues().unwrap();
        eig.sort_by(|a, b| b.total_cmp(a));
        let sv = one_sided_jacobi_singular_values(&m, rows, cols);
        for (k, e) in eig.iter().enumerate() {
            let sq = sv.get(k).map_or(0.0, |x| x * x);
            assert!((e - sq).abs() < 1e-9, "{rows}x{cols} k={k}");
        }
    }
}

#[test]
fn named_subset_entropies() {
    let ghz4 = library::ghz(4).unwrap();
    for subset in subsets_of_size(4, 2).unwrap() {
        assert!((subset_entropy(&ghz4, &subset).unwrap() - 1.0).abs() < 1e-12);
    }
    let phi4 = library::phi4_literal();
    let e = |ix: Vec<usize>| subset_entropy(&phi4, &SiteSubset::new(ix, 4).unwrap()).unwrap();
    assert!((e(vec![0, 1]) - 1.0).abs() < 1e-12);
    assert!((e(vec![0, 2]) - 2.0).abs() < 1e-12);
}

#[test]
fn ghz_proper_subsets_all_one_bit() {
    for n in 2..=7 {
        let s = library::ghz(n).unwrap();
        for k in 1..n {
            for subset in subsets_of_size(n, k).unwrap() {
                assert!((subset_entropy(&s, &subset).unwrap() - 1.0).abs() < 1e-12);
            }
        }
    }
}

fn dims_strategy() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(prop_oneof![Just(2usize), Just(2), Just(3)], 2..=6)
        .prop_filter("keep the Hilbert space small", |d| d.iter().product::<usize>() <= 128)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gram_equals_brute_force(dims in dims_strategy(), seed in any::<u64>()) {
        let s = library::haar_random(&dims, seed).unwrap();
        for subset in all_subsets(dims.len()) {
            let rho = reduced_density_matrix(&s, &subset).unwrap();
            let (d, oracle) = brute_force_partial_trace(&dims, s.amps(), subset.indices());
            let oracle = ComplexMatrix::from_row_major(d, oracle).unwrap();
            prop_assert!(rho.matrix().max_abs_diff(&oracle) < 1e-9);
            prop_assert!((rho.trace() - 1.0).abs() < 1e-9);
            prop_assert!(rho.matrix().hermitian_deviation() < 1e-9);
        }
    }

    #[test]
    fn schmidt_symmetry_both_sides(n in 2usize..=8, seed in any::<u64>()) {
        let s = library::haar_random(&vec![2; n], seed).unwrap();
        for k in 1..n {
            for subset in subsets_of_size(n, k).unwrap() {
                let rest = subset.complement(n).unwrap();
                let a = subset_entropy_direct(&s, &subset).unwrap();
                let b = subset_entropy_direct(&s, &rest).unwrap();
                prop_assert!((a - b).abs() < 1e-9, "{} vs {}: {} {}", subset, rest, a, b);
                prop_assert!((subset_entropy(&s, &subset).unwrap() - a).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn entropy_within_schmidt_bound(dims in dims_strategy(), seed in any::<u64>()) {
        let s = library::haar_random(&dims, seed).unwrap();
        for subset in all_subsets(dims.len()) {
            let e = subset_entropy(&s, &subset).unwrap();
            prop_assert!(e >= 0.0);
            prop_assert!(e <= entropy_ceiling(&dims, &subset) + 1e-9);
        }
    }

    #[test]
    fn local_unitaries_preserve_entropies(dims in dims_strategy(), seed in any::<u64>()) {
        let s = library::haar_random(&dims, seed).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let t = random_local_unitaries(&s, &mut rng).unwrap();
        for subset in all_subsets(dims.len()) {
            let a = subset_entropy(&s, &subset).unwrap();
            let b = subset_entropy(&t, &subset).unwrap();
            prop_assert!((a - b).abs() <= 1e-8);
        }
    }
}
