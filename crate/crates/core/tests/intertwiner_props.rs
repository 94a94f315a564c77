mod common;

use common::*;
use phmetric::numerics::{intertwining_residual, ComplexMatrix, Tolerances};
use phmetric::{find_invertible, intertwiner_space, sylvester_operator};
use proptest::prelude::*;

/// `H = η⁻¹ h` computed through the library's solver.
fn generated(seed: u64, n: usize) -> (ComplexMatrix, ComplexMatrix) {
    let mut g = rng(seed);
    let eta = random_hermitian_invertible(&mut g, n, true);
    let h = random_hermitian(&mut g, n);
    let big_h = phmetric::numerics::solve(&eta, &h, &Tolerances::default()).unwrap();
    (big_h, eta)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_is_closed_under_adjoint(seed in any::<u64>(), n in 2usize..7) {
        let (h, _) = generated(seed, n);
        let space = intertwiner_space(&h, &Tolerances::default()).unwrap();
        prop_assert!(space.complex_dim() >= 1);
        for e in space.basis() {
            prop_assert!(space.projection_residual(&e.adjoint()) <= 1e-10);
        }
    }

    #[test]
    fn generating_metric_lies_in_space(seed in any::<u64>(), n in 2usize..9) {
        let (h, eta) = generated(seed, n);
        let space = intertwiner_space(&h, &Tolerances::default()).unwrap();
        prop_assert!(space.projection_residual(&eta) <= 1e-9);
        prop_assert!(space.hermitian_projection_residual(&eta) <= 1e-9);
    }

    #[test]
    fn basis_elements_intertwine(seed in any::<u64>(), n in 2usize..7) {
        let (h, _) = generated(seed, n);
        let space = intertwiner_space(&h, &Tolerances::default()).unwrap();
        for e in space.basis().iter().chain(space.hermitian_basis()) {
            prop_assert!(intertwining_residual(&h, e) <= 1e-9);
        }
        for e in space.hermitian_basis() {
            prop_assert!(e.hermitian_residual() <= 1e-12);
        }
    }

    #[test]
    fn find_invertible_is_deterministic(seed in any::<u64>(), draw_seed in any::<u64>(), n in 2usize..6) {
        let (h, _) = generated(seed, n);
        let space = intertwiner_space(&h, &Tolerances::default()).unwrap();
        let first = find_invertible(&space, 8, draw_seed).unwrap();
        let second = find_invertible(&space, 8, draw_seed).unwrap();
        prop_assert!(first.is_some());
        prop_assert_eq!(first, second);
    }
}

#[test]
fn kernel_dimension_matches_dense_oracle() {
    // Kernel dimension of the Sylvester operator by nalgebra's SVD.
    let tol = Tolerances::default();
    for seed in 0..20u64 {
        let (h, _) = generated(seed, 3);
        let l = sylvester_operator(&h).unwrap();
        let s = oracle_singular_values(&l);
        let oracle_dim = s.iter().filter(|&&x| x <= tol.rank_rel * s[0]).count();
        let space = intertwiner_space(&h, &tol).unwrap();
        assert_eq!(space.complex_dim(), oracle_dim, "seed {seed}");
        assert_eq!(space.hermitian_real_dim(), oracle_dim, "seed {seed}");
    }
}

#[test]
fn identity_admits_random_invertible() {
    let h = ComplexMatrix::identity(2);
    let space = intertwiner_space(&h, &Tolerances::default()).unwrap();
    assert_eq!(space.complex_dim(), 4);
    assert!(find_invertible(&space, 4, 7).unwrap().is_some());
}
