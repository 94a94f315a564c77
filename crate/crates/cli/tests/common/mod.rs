#![allow(dead_code)]

use std::path::Path;
use std::process::Command;

use nalgebra::DMatrix;
use phmetric::{ComplexMatrix, C64};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};

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

/// Indefinite Hermitian `U D U†` with |dᵢ| ∈ [0.5, 2], both signs present.
pub fn random_indefinite_metric(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let u = to_na(&random_matrix(rng, n)).qr().q();
    let mags = Uniform::new(0.5, 2.0).unwrap();
    let d = DMatrix::from_diagonal(&nalgebra::DVector::from_fn(n, |i, _| {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        C64::new(sign * mags.sample(rng), 0.0)
    }));
    from_na(&(&u * d * u.adjoint()))
}

pub fn to_na(m: &ComplexMatrix) -> DMatrix<C64> {
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

pub fn from_na(m: &DMatrix<C64>) -> ComplexMatrix {
    ComplexMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
}

/// `η⁻¹ h` through nalgebra's LU.
pub fn oracle_solve(eta: &ComplexMatrix, h: &ComplexMatrix) -> ComplexMatrix {
    from_na(&to_na(eta).lu().solve(&to_na(h)).expect("invertible"))
}

pub fn oracle_singular_values(m: &ComplexMatrix) -> Vec<f64> {
    let mut s: Vec<f64> = to_na(m).svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

pub fn oracle_norm2(m: &ComplexMatrix) -> f64 {
    oracle_singular_values(m)[0]
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

pub fn write_matrix(dir: &Path, name: &str, m: &ComplexMatrix) -> std::path::PathBuf {
    let path = dir.join(name);
    phmetric::io::save_matrix(m, &path).unwrap();
    path
}

/// Runs the built binary, returning (exit code, stdout).
pub fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_phmetric"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}
