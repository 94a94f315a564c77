//! One-sided (Hestenes) Jacobi SVD and the rank-revealing helpers built on it.

use super::matrix::{ComplexMatrix, C64, ZERO};
use super::tolerances::Tolerances;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 80;

/// Singular values (descending) with the matching right singular vectors.
#[derive(Debug, Clone)]
pub struct RightSvd {
    pub singular_values: Vec<f64>,
    /// Column `k` pairs with `singular_values[k]`.
    pub v: Vec<Vec<C64>>,
}

impl RightSvd {
    pub fn sigma_max(&self) -> f64 {
        self.singular_values.first().copied().unwrap_or(0.0)
    }

    pub fn sigma_min(&self) -> f64 {
        self.singular_values.last().copied().unwrap_or(0.0)
    }
}

/// Jacobi SVD of an arbitrary `m × n` matrix. Wide inputs are padded with
/// zero rows, which leaves the right singular structure unchanged.
pub fn right_svd(m: &ComplexMatrix) -> Result<RightSvd> {
    m.ensure_finite()?;
    let n = m.ncols();
    let rows = m.nrows().max(n);
    let mut cols: Vec<Vec<C64>> = (0..n)
        .map(|j| {
            let mut col = m.column(j);
            col.resize(rows, ZERO);
            col
        })
        .collect();
    let mut v: Vec<Vec<C64>> = (0..n)
        .map(|j| {
            let mut e = vec![ZERO; n];
            e[j] = C64::new(1.0, 0.0);
            e
        })
        .collect();

    // Columns below `tiny` are numerically zero; rotating them against large
    // columns only shuffles rounding noise and can stall convergence.
    let eps = f64::EPSILON;
    let threshold = eps * rows as f64;
    let tiny = (eps * m.frobenius_norm()).powi(2);
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                if alpha <= tiny || beta <= tiny {
                    continue;
                }
                let gamma: C64 = cols[p].iter().zip(&cols[q]).map(|(a, b)| a.conj() * b).sum();
                let g = gamma.norm();
                if g <= threshold * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = (gamma / g).conj();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta == 0.0 {
                    1.0
                } else {
                    zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = cs * t;
                rotate(&mut cols, p, q, phase, cs, sn);
                rotate(&mut v, p, q, phase, cs, sn);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            routine: "Jacobi SVD",
            budget: MAX_SWEEPS,
        });
    }

    let mut order: Vec<(f64, usize)> = cols
        .iter()
        .enumerate()
        .map(|(j, col)| (col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt(), j))
        .collect();
    order.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    Ok(RightSvd {
        singular_values: order.iter().map(|&(s, _)| s).collect(),
        v: order.iter().map(|&(_, j)| v[j].clone()).collect(),
    })
}

/// Column pair update `(x_p, x_q) ← (c x_p − s φ x_q, s x_p + c φ x_q)`.
fn rotate(cols: &mut [Vec<C64>], p: usize, q: usize, phase: C64, cs: f64, sn: f64) {
    let (left, right) = cols.split_at_mut(q);
    let xp = &mut left[p];
    let xq = &mut right[0];
    for (a, b) in xp.iter_mut().zip(xq.iter_mut()) {
        let bq = *b * phase;
        let ap = *a;
        *a = ap * cs - bq * sn;
        *b = ap * sn + bq * cs;
    }
}

pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(right_svd(m)?.singular_values)
}

/// Operator 2-norm.
pub fn operator_norm(m: &ComplexMatrix) -> Result<f64> {
    Ok(right_svd(m)?.sigma_max())
}

/// Smallest singular value of a square matrix.
pub fn invertibility_margin(m: &ComplexMatrix) -> Result<f64> {
    m.square_dim()?;
    Ok(right_svd(m)?.sigma_min())
}

/// `σ_min / σ_max`, zero for the zero matrix.
pub fn relative_margin(m: &ComplexMatrix) -> Result<f64> {
    m.square_dim()?;
    let svd = right_svd(m)?;
    let top = svd.sigma_max();
    Ok(if top == 0.0 { 0.0 } else { svd.sigma_min() / top })
}

/// Invertible iff `σ_min > rank_rel · σ_max`.
pub fn is_invertible(m: &ComplexMatrix, tol: &Tolerances) -> Result<bool> {
    Ok(relative_margin(m)? > tol.rank_rel)
}

/// Orthonormal basis of the numerical kernel: right singular vectors whose
/// singular value is at most `rank_rel · σ_max`.
pub fn nullspace_basis(m: &ComplexMatrix, tol: &Tolerances) -> Result<Vec<Vec<C64>>> {
    let svd = right_svd(m)?;
    let cutoff = tol.rank_rel * svd.sigma_max();
    let mut basis: Vec<Vec<C64>> = svd
        .singular_values
        .iter()
        .zip(svd.v)
        .filter(|(s, _)| **s <= cutoff)
        .map(|(_, v)| v)
        .collect();
    orthonormalize(&mut basis);
    Ok(basis)
}

/// Two-pass modified Gram–Schmidt in place; the vectors are assumed independent.
fn orthonormalize(vs: &mut [Vec<C64>]) {
    for k in 0..vs.len() {
        let (done, rest) = vs.split_at_mut(k);
        let v = &mut rest[0];
        for _ in 0..2 {
            for u in done.iter() {
                let proj: C64 = u.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
                for (x, y) in v.iter_mut().zip(u) {
                    *x -= proj * y;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}
