//! The linear space of intertwiners `{X : XH = H†X}`.
//!
//! Its invertible elements are exactly the operators realizing `H† = X H X⁻¹`.
//! The space is closed under `†`, so its Hermitian elements form a real
//! subspace whose real dimension equals the complex dimension of the whole.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    is_invertible, nullspace_basis, ComplexMatrix, Tolerances, C64, I,
};

/// Default number of random draws in [`find_invertible`].
pub const DEFAULT_TRIALS: usize = 32;

/// Post-orthogonalization norm below which a Hermitian candidate is
/// considered dependent on the ones already accepted.
const HERMITIAN_DEPENDENCE: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct IntertwinerSpace {
    h: ComplexMatrix,
    basis: Vec<ComplexMatrix>,
    hermitian_basis: Vec<ComplexMatrix>,
    tol: Tolerances,
}

/// Dimension summary carried by reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntertwinerDims {
    pub complex: usize,
    pub hermitian_real: usize,
}

/// `L = (Hᵀ ⊗ I) − (I ⊗ H†)`, so that `L·vec(X) = vec(XH − H†X)` with
/// column-major `vec`.
pub fn sylvester_operator(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = h.square_dim()?;
    let id = ComplexMatrix::identity(n);
    Ok(&h.transpose().kron(&id) - &id.kron(&h.adjoint()))
}

pub fn intertwiner_space(h: &ComplexMatrix, tol: &Tolerances) -> Result<IntertwinerSpace> {
    let n = h.square_dim()?;
    h.ensure_finite()?;
    tol.validate()?;
    let kernel = nullspace_basis(&sylvester_operator(h)?, tol)?;
    let basis = kernel
        .iter()
        .map(|v| ComplexMatrix::from_col_major(n, v))
        .collect::<Result<Vec<_>>>()?;
    let hermitian_basis = hermitian_slice(&basis);
    Ok(IntertwinerSpace {
        h: h.clone(),
        basis,
        hermitian_basis,
        tol: *tol,
    })
}

/// Real-orthonormal basis (under `Re tr(X†Y)`) of the Hermitian elements,
/// generated from `(E+E†)/2` and `i(E−E†)/2`.
fn hermitian_slice(basis: &[ComplexMatrix]) -> Vec<ComplexMatrix> {
    let target = basis.len();
    let half = C64::new(0.5, 0.0);
    let mut out: Vec<ComplexMatrix> = Vec::with_capacity(target);
    for e in basis {
        let adj = e.adjoint();
        let sym = (e + &adj).scale(half);
        let skew = (e - &adj).scale(I * half);
        for cand in [sym, skew] {
            if out.len() == target {
                return out;
            }
            let mut v = cand;
            for _ in 0..2 {
                for u in &out {
                    let proj = u.inner(&v).re;
                    v = v.axpy(C64::new(-proj, 0.0), u);
                }
            }
            let norm = v.frobenius_norm();
            if norm > HERMITIAN_DEPENDENCE {
                // Clear rounding-level anti-Hermitian drift.
                out.push(v.hermitian_part().scale(C64::new(1.0 / norm, 0.0)));
            }
        }
    }
    out
}

impl IntertwinerSpace {
    pub fn h(&self) -> &ComplexMatrix {
        &self.h
    }

    /// Complex-linear basis, orthonormal under the Frobenius inner product.
    pub fn basis(&self) -> &[ComplexMatrix] {
        &self.basis
    }

    /// Real-linear basis of Hermitian elements.
    pub fn hermitian_basis(&self) -> &[ComplexMatrix] {
        &self.hermitian_basis
    }

    pub fn complex_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn hermitian_real_dim(&self) -> usize {
        self.hermitian_basis.len()
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    pub fn dims(&self) -> IntertwinerDims {
        IntertwinerDims {
            complex: self.complex_dim(),
            hermitian_real: self.hermitian_real_dim(),
        }
    }

    /// `Σ cᵢ Eᵢ` over the complex basis.
    pub fn combine(&self, coeffs: &[C64]) -> ComplexMatrix {
        assert_eq!(coeffs.len(), self.basis.len());
        let n = self.h.nrows();
        coeffs
            .iter()
            .zip(&self.basis)
            .fold(ComplexMatrix::zeros(n, n), |acc, (&c, e)| acc.axpy(c, e))
    }

    /// `Σ cᵢ Eᵢ` over the Hermitian basis with real coefficients.
    pub fn combine_hermitian(&self, coeffs: &[f64]) -> ComplexMatrix {
        assert_eq!(coeffs.len(), self.hermitian_basis.len());
        let n = self.h.nrows();
        coeffs
            .iter()
            .zip(&self.hermitian_basis)
            .fold(ComplexMatrix::zeros(n, n), |acc, (&c, e)| {
                acc.axpy(C64::new(c, 0.0), e)
            })
    }

    /// `‖M − P(M)‖_F / ‖M‖_F` with `P` the orthogonal projection onto the
    /// complex span.
    pub fn projection_residual(&self, m: &ComplexMatrix) -> f64 {
        let proj = self
            .basis
            .iter()
            .fold(ComplexMatrix::zeros(m.nrows(), m.ncols()), |acc, e| {
                acc.axpy(e.inner(m), e)
            });
        relative(&(m - &proj), m)
    }

    /// Same as [`projection_residual`](Self::projection_residual) for the
    /// real span of the Hermitian basis.
    pub fn hermitian_projection_residual(&self, m: &ComplexMatrix) -> f64 {
        let proj = self
            .hermitian_basis
            .iter()
            .fold(ComplexMatrix::zeros(m.nrows(), m.ncols()), |acc, e| {
                acc.axpy(C64::new(e.inner(m).re, 0.0), e)
            });
        relative(&(m - &proj), m)
    }
}

fn relative(diff: &ComplexMatrix, reference: &ComplexMatrix) -> f64 {
    let norm = reference.frobenius_norm();
    if norm == 0.0 {
        diff.frobenius_norm()
    } else {
        diff.frobenius_norm() / norm
    }
}

/// Draws complex-Gaussian combinations of the basis and returns the first
/// invertible one (unit Frobenius norm), in draw order.
///
/// The determinant is a polynomial on the space, so when an invertible
/// element exists a random draw is invertible almost surely; `None` after
/// `trials` draws is strong but probabilistic evidence that none exists.
pub fn find_invertible(
    space: &IntertwinerSpace,
    trials: usize,
    seed: u64,
) -> Result<Option<ComplexMatrix>> {
    if space.complex_dim() == 0 {
        return Err(Error::EmptySpace);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let coeffs: Vec<C64> = (0..space.complex_dim())
            .map(|_| {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                C64::new(re, im)
            })
            .collect();
        let x = space.combine(&coeffs);
        let norm = x.frobenius_norm();
        if norm == 0.0 {
            continue;
        }
        let x = x.scale(C64::new(1.0 / norm, 0.0));
        if is_invertible(&x, &space.tol)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}
