mod common;

use common::shannon_bits;
use mems_core::library::{self, random_local_unitaries, random_product};
use mems_core::mems::workload_warning;
use mems_core::subsets::subsets_of_size;
use mems_core::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn assert_values(v: &MemsVector, expected: &[f64], tol: f64) {
    assert_eq!(v.values.len(), expected.len(), "{v:?}");
    for (got, want) in v.values.iter().zip(expected) {
        assert!((got - want).abs() <= tol, "{:?} vs {expected:?}", v.values);
    }
}

#[test]
fn s_component_examples() {
    let ghz6 = library::ghz(6).unwrap();
    for i in 1..=3 {
        assert!((s_component(&ghz6, i).unwrap() - 1.0).abs() < 1e-12);
    }
    assert_eq!(s_component(&library::bell_product(2).unwrap(), 2).unwrap(), 0.0);
    let c4 = s_component(&library::linear_cluster(4).unwrap(), 2).unwrap();
    assert!((c4 - 2f64.powf(2.0 / 3.0)).abs() < 1e-12);
    assert!(matches!(s_component(&ghz6, 4), Err(MemsError::SizeOutOfRange(_))));
    assert!(matches!(s_component(&ghz6, 0), Err(MemsError::SizeOutOfRange(_))));
}

#[test]
fn mems_vector_examples() {
    assert_values(&mems_vector(&library::ghz(4).unwrap()).unwrap(), &[1.0, 1.0], 1e-12);
    let zero = mems_vector(&library::product_state(&[2; 4]).unwrap()).unwrap();
    assert_eq!(zero.values, vec![0.0, 0.0]);
    // W4: binary entropies at 1/4 and 1/2
    let h = |p: f64| shannon_bits(&[p, 1.0 - p]);
    assert_values(&mems_vector(&library::w(4).unwrap()).unwrap(), &[h(0.25), h(0.5)], 1e-12);
    assert!((h(0.25) - 0.811_278).abs() < 1e-6);
    let single = PureState::basis(vec![2], &[0]).unwrap();
    assert!(mems_vector(&single).is_err());
}

#[test]
fn detailed_vector_keeps_every_subset() {
    let v = mems_vector_detailed(&library::linear_cluster(6).unwrap()).unwrap();
    let table = v.per_subset.as_ref().unwrap();
    assert_eq!(table.len(), 6 + 15 + 20);
    assert_eq!(v.subsets_of_size(3).count(), 20);
    assert_eq!(v.values, mems_vector(&library::linear_cluster(6).unwrap()).unwrap().values);
}

#[test]
fn entropy_product_examples() {
    assert!((entropy_product(&library::ghz(3).unwrap()).unwrap() - 1.0).abs() < 1e-12);
    assert_eq!(entropy_product(&library::product_state(&[2; 3]).unwrap()).unwrap(), 0.0);
    // single-site marginal of W3 is diag(2/3, 1/3)
    let s1 = shannon_bits(&[2.0 / 3.0, 1.0 / 3.0]);
    let expected = s1.powi(3);
    assert!((entropy_product(&library::w(3).unwrap()).unwrap() - expected).abs() < 1e-12);
    assert!((expected - 0.7743).abs() < 1e-4);
    // two EPR pairs look as entangled as GHZ to the single-site product
    assert!((entropy_product(&library::bell_product(2).unwrap()).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn closed_form_matches_w_states() {
    for n in 3..=12 {
        let v = mems_vector(&library::w(n).unwrap()).unwrap();
        for i in 1..=n / 2 {
            let cf = w_state_closed_form(n, i).unwrap();
            assert!((v.values[i - 1] - cf).abs() < 1e-9, "n={n} i={i}");
        }
    }
    let w20 = library::w(20).unwrap();
    assert!((s_component(&w20, 10).unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn ensemble_examples() {
    let ghz4 = library::ghz(4).unwrap();
    let zero = library::product_state(&[2; 4]).unwrap();
    let w4 = library::w(4).unwrap();
    let single = Ensemble::new(vec![(1.0, ghz4.clone())]).unwrap();
    assert_values(&ensemble_mems(&single).unwrap(), &[1.0, 1.0], 1e-12);
    let half = Ensemble::new(vec![(0.5, ghz4), (0.5, zero)]).unwrap();
    assert_values(&ensemble_mems(&half).unwrap(), &[0.5, 0.5], 1e-12);
    let dup = Ensemble::new(vec![(0.5, w4.clone()), (0.5, w4.clone())]).unwrap();
    assert_values(&ensemble_mems(&dup).unwrap(), &mems_vector(&w4).unwrap().values, 1e-12);
}

#[test]
fn comparator_on_named_states() {
    let v = |s: PureState| mems_vector(&s).unwrap();
    let (w3, ghz3) = (v(library::w(3).unwrap()), v(library::ghz(3).unwrap()));
    let verdict = transform_forbidden(&w3, &ghz3, 1e-9).unwrap();
    assert_eq!(verdict, ComparisonVerdict { forbidden: true, witness: Some(1) });
    assert!(!transform_forbidden(&ghz3, &w3, 1e-9).unwrap().forbidden);
    assert!(!transform_forbidden(&w3, &w3, 1e-9).unwrap().forbidden);
    let c4 = v(library::linear_cluster(4).unwrap());
    assert!(!transform_forbidden(&c4, &v(library::ghz(4).unwrap()), 1e-9).unwrap().forbidden);
    assert!(!transform_forbidden(&c4, &v(library::w(4).unwrap()), 1e-9).unwrap().forbidden);
    assert!(matches!(
        transform_forbidden(&w3, &c4, 1e-9),
        Err(MemsError::ShapeMismatch(_))
    ));
}

#[test]
fn zero_semantics_single_pure_marginal() {
    // Bell pair on (0,1) with an entangled GHZ on (2,3,4): only the subsets
    // {0,1} and its complement are pure, which must annihilate S_2.
    let s = library::ghz(2).unwrap().tensor(&library::ghz(3).unwrap()).unwrap();
    let zeros: Vec<_> = subsets_of_size(5, 2)
        .unwrap()
        .filter(|a| subset_entropy(&s, a).unwrap() < 1e-12)
        .collect();
    assert_eq!(zeros.len(), 1);
    assert_eq!(s_component(&s, 2).unwrap(), 0.0);
    assert!(s_component(&s, 1).unwrap() > 0.99);
}

#[test]
fn workload_warnings() {
    assert!(workload_warning(12, 16).is_none());
    assert!(workload_warning(17, 16).is_some());
    assert!(workload_warning(21, 30).is_some()); // C(21,10) = 352716
    assert!(workload_warning(18, 30).is_none());
}

fn qubit_state() -> impl Strategy<Value = (usize, u64)> {
    (2usize..=7, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn positive_and_bounded((n, seed) in qubit_state()) {
        let v = mems_vector(&library::haar_random(&vec![2; n], seed).unwrap()).unwrap();
        prop_assert_eq!(v.values.len(), n / 2);
        for (k, s) in v.values.iter().enumerate() {
            prop_assert!(*s >= 0.0);
            prop_assert!(*s <= (k + 1) as f64 + 1e-9);
        }
    }

    #[test]
    fn product_states_vanish(dims in prop::collection::vec(2usize..=3, 2..=6), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_product(&dims, &mut rng).unwrap();
        prop_assert!(mems_vector(&s).unwrap().values.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn lu_invariance((n, seed) in qubit_state()) {
        let s = library::haar_random(&vec![2; n], seed).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(!seed);
        let t = random_local_unitaries(&s, &mut rng).unwrap();
        let (a, b) = (mems_vector(&s).unwrap(), mems_vector(&t).unwrap());
        for (x, y) in a.values.iter().zip(&b.values) {
            prop_assert!((x - y).abs() <= 1e-8);
        }
    }

    #[test]
    fn permutation_invariance(dims in prop::collection::vec(2usize..=3, 2..=6), seed in any::<u64>()) {
        let s = library::haar_random(&dims, seed).unwrap();
        let mut order: Vec<usize> = (0..dims.len()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed.rotate_left(7)));
        let t = s.permute_sites(&order).unwrap();
        let (a, b) = (mems_vector(&s).unwrap(), mems_vector(&t).unwrap());
        for (x, y) in a.values.iter().zip(&b.values) {
            prop_assert!((x - y).abs() <= 1e-9);
        }
    }

    #[test]
    fn bipartite_reduces_to_entanglement_entropy(d0 in 2usize..=5, d1 in 2usize..=5, seed in any::<u64>()) {
        let s = library::haar_random(&[d0, d1], seed).unwrap();
        let s1 = s_component(&s, 1).unwrap();
        let e0 = subset_entropy(&s, &SiteSubset::new(vec![0], 2).unwrap()).unwrap();
        prop_assert!((s1 - e0).abs() < 1e-9);
    }

    #[test]
    fn entropy_product_is_s1_power((n, seed) in qubit_state()) {
        let s = library::haar_random(&vec![2; n], seed).unwrap();
        let s1 = s_component(&s, 1).unwrap();
        let se = entropy_product(&s).unwrap();
        prop_assume!(s1 > 0.0);
        prop_assert!((se - s1.powi(n as i32)).abs() <= 1e-8 * se.abs().max(1e-300));
    }
}
