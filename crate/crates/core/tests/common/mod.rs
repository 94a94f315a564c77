#![allow(dead_code)]

use nalgebra::DMatrix;
use phmetric::numerics::{ComplexMatrix, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gauss(rng: &mut ChaCha8Rng) -> C64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    C64::new(re, im)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| gauss(rng))
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    random_matrix(rng, n).hermitian_part()
}

/// Random unitary from modified Gram–Schmidt on a Gaussian matrix.
pub fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let g = random_matrix(rng, n);
    let mut cols: Vec<Vec<C64>> = Vec::new();
    for j in 0..n {
        let mut v = g.column(j);
        for u in &cols {
            let p: C64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, y) in v.iter_mut().zip(u) {
                *x -= p * y;
            }
        }
        let nrm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= nrm);
        cols.push(v);
    }
    ComplexMatrix::from_fn(n, n, |i, j| cols[j][i])
}

/// Hermitian invertible `U D U†` with eigenvalue magnitudes in [0.5, 2] and
/// random signs (at least one of each sign when `indefinite` and n ≥ 2).
pub fn random_hermitian_invertible(rng: &mut ChaCha8Rng, n: usize, indefinite: bool) -> ComplexMatrix {
    let u = random_unitary(rng, n);
    let d: Vec<C64> = (0..n)
        .map(|i| {
            let mag = rng.random_range(0.5..2.0);
            let sign = if indefinite {
                if i == 0 {
                    1.0
                } else if i == 1 {
                    -1.0
                } else if rng.random_bool(0.5) {
                    1.0
                } else {
                    -1.0
                }
            } else {
                1.0
            };
            C64::new(sign * mag, 0.0)
        })
        .collect();
    &(&u * &ComplexMatrix::from_diagonal(&d)) * &u.adjoint()
}

pub fn to_na(m: &ComplexMatrix) -> DMatrix<C64> {
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

/// Singular values from nalgebra's SVD, descending.
pub fn oracle_singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let mut s: Vec<f64> = to_na(m).svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

pub fn oracle_sigma_min(m: &ComplexMatrix) -> f64 {
    *oracle_singular_values(m).last().unwrap()
}

pub fn oracle_norm2(m: &ComplexMatrix) -> f64 {
    oracle_singular_values(m)[0]
}

/// Eigenvalues from nalgebra's complex Schur form.
pub fn oracle_eigenvalues(m: &ComplexMatrix) -> Vec<C64> {
    let (_, t) = to_na(m).schur().unpack();
    (0..m.nrows()).map(|i| t[(i, i)]).collect()
}

/// Greedy multiset distance between two spectra.
pub fn multiset_distance(a: &[C64], b: &[C64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for x in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, y)| (j, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .unwrap();
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}

pub fn mat_pow(m: &ComplexMatrix, k: u32) -> ComplexMatrix {
    let mut out = ComplexMatrix::identity(m.nrows());
    for _ in 0..k {
        out = &out * m;
    }
    out
}
