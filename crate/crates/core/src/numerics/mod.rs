//! Dense complex linear-algebra kernels.

mod eigen;
mod lu;
mod matrix;
mod svd;
mod tolerances;

pub use eigen::{eigenvalues, hermitian_eigenvalues, QR_ITERATIONS_PER_DIM};
pub use lu::{inverse, solve};
pub use matrix::{c, commutator_residual, intertwining_residual, r, ComplexMatrix, C64, I, ONE, ZERO};
pub use svd::{
    invertibility_margin, is_invertible, nullspace_basis, operator_norm, relative_margin,
    right_svd, singular_values, RightSvd,
};
pub use tolerances::Tolerances;

use crate::error::Result;

pub(crate) use eigen::jacobi_hermitian;

/// `max |λ|` over the spectrum.
pub fn spectral_radius(m: &ComplexMatrix, tol: &Tolerances) -> Result<f64> {
    Ok(eigenvalues(m, tol)?.iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Positive definiteness of a Hermitian matrix: the smallest eigenvalue must
/// exceed `pd_min_eig · ‖M‖₂`.
pub fn is_positive_definite(m: &ComplexMatrix, tol: &Tolerances) -> Result<bool> {
    let eig = hermitian_eigenvalues(m, tol)?;
    let lo = eig.first().copied().unwrap_or(0.0);
    let norm = eig.iter().map(|x| x.abs()).fold(0.0, f64::max);
    Ok(norm > 0.0 && lo > tol.pd_min_eig * norm)
}

/// Normalized smallest eigenvalue `λ_min / ‖M‖₂` of a Hermitian matrix, in
/// `[-1, 1]`; zero for the zero matrix.
pub fn normalized_min_eigenvalue(m: &ComplexMatrix, tol: &Tolerances) -> Result<f64> {
    let eig = hermitian_eigenvalues(m, tol)?;
    Ok(normalized_min(&eig))
}

pub(crate) fn normalized_min(eig: &[f64]) -> f64 {
    let norm = eig.iter().map(|x| x.abs()).fold(0.0, f64::max);
    if norm == 0.0 {
        0.0
    } else {
        eig[0] / norm
    }
}
