mod common;

use common::*;
use phmetric::numerics::{
    eigenvalues, invertibility_margin, nullspace_basis, operator_norm, spectral_radius,
    ComplexMatrix, Tolerances, C64,
};
use proptest::prelude::*;

fn shifted(m: &ComplexMatrix, lambda: C64) -> ComplexMatrix {
    let mut s = m.clone();
    for i in 0..m.nrows() {
        s[(i, i)] -= lambda;
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn adjoint_is_involution_and_reverses_products(seed in any::<u64>(), n in 1usize..7) {
        let mut g = rng(seed);
        let a = random_matrix(&mut g, n);
        let b = random_matrix(&mut g, n);
        prop_assert_eq!(a.adjoint().adjoint(), a.clone());
        let lhs = (&a * &b).adjoint();
        let rhs = &b.adjoint() * &a.adjoint();
        prop_assert!(lhs.approx_eq(&rhs, 1e-12));
    }

    #[test]
    fn eigenvalue_residuals_are_small(seed in any::<u64>(), n in 1usize..9) {
        let tol = Tolerances::default();
        let m = random_matrix(&mut rng(seed), n);
        let norm = oracle_norm2(&m);
        for lambda in eigenvalues(&m, &tol).unwrap() {
            let sigma = oracle_sigma_min(&shifted(&m, lambda));
            prop_assert!(sigma <= tol.eig_residual * norm, "σ_min = {sigma:e}");
        }
    }

    #[test]
    fn eigenvalues_match_schur_oracle(seed in any::<u64>(), n in 1usize..9) {
        let m = random_matrix(&mut rng(seed), n);
        let ours = eigenvalues(&m, &Tolerances::default()).unwrap();
        let theirs = oracle_eigenvalues(&m);
        prop_assert!(multiset_distance(&ours, &theirs) < 1e-9);
    }

    #[test]
    fn gelfand_powers_bound_spectral_radius(seed in any::<u64>(), n in 2usize..7) {
        let m = random_matrix(&mut rng(seed), n);
        let radius = spectral_radius(&m, &Tolerances::default()).unwrap();
        let mut prev_gap = f64::INFINITY;
        for k in [1u32, 2, 4, 8, 16] {
            let est = operator_norm(&mat_pow(&m, k)).unwrap().powf(1.0 / k as f64);
            prop_assert!(est >= radius * (1.0 - 1e-9));
            // Along powers of two the estimate is non-increasing.
            let gap = est - radius;
            prop_assert!(gap <= prev_gap + 1e-9 * radius);
            prev_gap = gap;
        }
    }

    #[test]
    fn nullspace_vectors_are_orthonormal_kernel_vectors(seed in any::<u64>(), n in 2usize..7, rank in 0usize..6) {
        let tol = Tolerances::default();
        let mut g = rng(seed);
        let rank = rank.min(n - 1);
        // Product of n×rank and rank×n factors has rank `rank`.
        let left = ComplexMatrix::from_fn(n, rank.max(1), |_, _| gauss(&mut g));
        let right = ComplexMatrix::from_fn(rank.max(1), n, |_, _| gauss(&mut g));
        let m = if rank == 0 { ComplexMatrix::zeros(n, n) } else { &left * &right };
        let ker = nullspace_basis(&m, &tol).unwrap();
        prop_assert_eq!(ker.len(), n - rank);
        let norm = m.frobenius_norm();
        for (i, v) in ker.iter().enumerate() {
            let mv: f64 = m.mul_vec(v).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            prop_assert!(mv <= tol.rank_rel * norm.max(1.0));
            for (j, w) in ker.iter().enumerate() {
                let ip: C64 = v.iter().zip(w).map(|(a, b)| a.conj() * b).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((ip - C64::new(want, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn margin_matches_svd_oracle(seed in any::<u64>(), n in 1usize..9) {
        let m = random_matrix(&mut rng(seed), n);
        let ours = invertibility_margin(&m).unwrap();
        let theirs = oracle_sigma_min(&m);
        prop_assert!((ours - theirs).abs() <= 1e-12 * oracle_norm2(&m));
    }
}

#[test]
fn two_dim_metric_margin_against_gram_oracle() {
    // Brute force: σ² are the eigenvalues of M†M, solved in closed form.
    let m = phmetric::builtin::two_dim_eta_w();
    let gram = &m.adjoint() * &m;
    let tr = gram.trace().re;
    let det = (gram[(0, 0)] * gram[(1, 1)] - gram[(0, 1)] * gram[(1, 0)]).re;
    let low = tr / 2.0 - (tr * tr / 4.0 - det).sqrt();
    let margin = invertibility_margin(&m).unwrap();
    assert!(margin > 0.0);
    assert!((margin - low.sqrt()).abs() < 1e-14);
}

#[test]
fn defective_matrix_eigenvalues_still_have_small_residual() {
    let tol = Tolerances::default();
    // 4×4 Jordan block conjugated by a random similarity.
    let mut g = rng(11);
    let j = ComplexMatrix::from_fn(4, 4, |i, k| {
        if i == k { C64::new(2.0, 0.0) } else if k == i + 1 { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }
    });
    let s = random_unitary(&mut g, 4);
    let m = &(&s * &j) * &s.adjoint();
    let norm = oracle_norm2(&m);
    for lambda in eigenvalues(&m, &tol).unwrap() {
        assert!(oracle_sigma_min(&shifted(&m, lambda)) <= tol.eig_residual * norm);
    }
}
