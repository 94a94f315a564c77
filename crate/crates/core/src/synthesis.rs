//! Hermitian pseudo-metrics from a non-Hermitian intertwiner.
//!
//! For an invertible intertwiner `η_w` the rotated combination
//! `η(ϑ) = i(e^{iϑ}η_w − e^{−iϑ}η_w†)` is Hermitian and still intertwines `H`.
//! It factors as `η(ϑ) = −i e^{−iϑ} η_w (A − e^{2iϑ} I)` with
//! `A = η_w⁻¹η_w†`, so it is invertible exactly when `e^{2iϑ}` avoids the
//! spectrum of `A`. A finite spectrum never covers the unit circle, so some
//! angle always works.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    eigenvalues, intertwining_residual, is_invertible, relative_margin, right_svd, solve,
    ComplexMatrix, Tolerances, C64, I,
};

/// Default number of uniformly spaced angles in `[0, π)` scanned by [`hermitize`].
pub const DEFAULT_GRID: usize = 360;

/// `||λ| − 1|` below which an eigenvalue of `A` is treated as unit-modulus.
pub const UNIT_CIRCLE_SLACK: f64 = 1e-8;

const GOLDEN_ITERATIONS: usize = 80;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    #[serde(with = "complex_list")]
    pub eigenvalues: Vec<C64>,
    /// Spectral radius `max |λ|`.
    pub r: f64,
    /// `min |λ|`.
    pub inner_radius: f64,
    pub annulus_ok: bool,
    /// Hausdorff distance between the spectrum and its image under `λ ↦ 1/λ̄`.
    pub inversion_symmetry_residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaSample {
    pub theta: f64,
    pub sigma_min: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HermitizationResult {
    /// Selected angle in `[0, π)`.
    pub theta_star: f64,
    pub eta_star: ComplexMatrix,
    /// `σ_min(η⋆) / σ_max(η⋆)`.
    pub margin: f64,
    pub a_matrix: ComplexMatrix,
    pub a_spectrum: SpectrumReport,
    /// Angles in `[0, 2π)` where `η(ϑ)` is singular.
    pub bad_thetas: Vec<f64>,
    /// `‖η⋆H − H†η⋆‖_F / (‖H‖_F ‖η⋆‖_F)`.
    pub intertwining_residual: f64,
    /// `σ_min(A − e^{2iϑ}I)` over the selection grid.
    pub sweep: Vec<ThetaSample>,
}

/// `A = η_w⁻¹ η_w†`.
pub fn a_operator(eta_w: &ComplexMatrix, tol: &Tolerances) -> Result<ComplexMatrix> {
    eta_w.square_dim()?;
    solve(eta_w, &eta_w.adjoint(), tol)
}

pub fn spectrum_report(a: &ComplexMatrix, tol: &Tolerances) -> Result<SpectrumReport> {
    a.square_dim()?;
    let eig = eigenvalues(a, tol)?;
    let r = eig.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let inner_radius = eig.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
    if inner_radius == 0.0 {
        return Err(Error::SingularInput { margin: 0.0 });
    }
    let slack = tol.eig_residual * r.max(1.0);
    let annulus_ok = eig
        .iter()
        .all(|z| z.norm() >= 1.0 / r - slack && z.norm() <= r + slack);
    let mirrored: Vec<C64> = eig.iter().map(|z| z.conj().inv()).collect();
    Ok(SpectrumReport {
        inversion_symmetry_residual: hausdorff(&eig, &mirrored),
        eigenvalues: eig,
        r,
        inner_radius,
        annulus_ok,
    })
}

fn hausdorff(a: &[C64], b: &[C64]) -> f64 {
    let directed = |x: &[C64], y: &[C64]| {
        x.iter()
            .map(|p| y.iter().map(|q| (p - q).norm()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

/// `η(ϑ) = i(e^{iϑ}η_w − e^{−iϑ}η_w†)`, exactly Hermitian in floating point.
pub fn eta_of_theta(eta_w: &ComplexMatrix, theta: f64) -> ComplexMatrix {
    let n = eta_w.nrows();
    let z = I * C64::from_polar(1.0, theta);
    let zc = z.conj();
    ComplexMatrix::from_fn(n, n, |j, k| z * eta_w[(j, k)] + zc * eta_w[(k, j)].conj())
}

/// Angles `ϑ ∈ [0, 2π)` with `e^{2iϑ}` on an eigenvalue of `A`, sorted.
pub fn bad_thetas(a: &ComplexMatrix, tol: &Tolerances) -> Result<Vec<f64>> {
    let two_pi = 2.0 * PI;
    let mut out = Vec::new();
    for z in eigenvalues(a, tol)? {
        if (z.norm() - 1.0).abs() > UNIT_CIRCLE_SLACK {
            continue;
        }
        let half = z.arg().rem_euclid(two_pi) / 2.0;
        for theta in [half, half + PI] {
            let theta = if two_pi - theta <= UNIT_CIRCLE_SLACK { 0.0 } else { theta };
            out.push(theta);
        }
    }
    out.sort_by(f64::total_cmp);
    out.dedup_by(|a, b| (*a - *b).abs() <= UNIT_CIRCLE_SLACK);
    Ok(out)
}

fn shifted_sigma_min(a: &ComplexMatrix, theta: f64) -> Result<f64> {
    let n = a.nrows();
    let shift = C64::from_polar(1.0, 2.0 * theta);
    let mut m = a.clone();
    for i in 0..n {
        m[(i, i)] -= shift;
    }
    Ok(right_svd(&m)?.sigma_min())
}

/// Turns an invertible intertwiner into a Hermitian invertible one.
///
/// The angle maximizes `σ_min(A − e^{2iϑ}I)` over `grid` points of `[0, π)`
/// (first maximum wins), then one golden-section pass refines it within the
/// neighbouring grid cells.
pub fn hermitize(
    h: &ComplexMatrix,
    eta_w: &ComplexMatrix,
    tol: &Tolerances,
    grid: usize,
) -> Result<HermitizationResult> {
    let n = h.square_dim()?;
    if eta_w.square_dim()? != n {
        return Err(Error::DimensionMismatch(format!(
            "H is {n}x{n} but eta_w is {}x{}",
            eta_w.nrows(),
            eta_w.ncols()
        )));
    }
    h.ensure_finite()?;
    eta_w.ensure_finite()?;
    let margin_w = relative_margin(eta_w)?;
    if margin_w <= tol.rank_rel {
        return Err(Error::SingularInput { margin: margin_w });
    }
    let residual = intertwining_residual(h, eta_w);
    if residual > tol.eig_residual {
        return Err(Error::NotIntertwiner { residual });
    }

    let a = a_operator(eta_w, tol)?;
    let a_spectrum = spectrum_report(&a, tol)?;
    let bad = bad_thetas(&a, tol)?;

    let grid = grid.max(1);
    let step = PI / grid as f64;
    let sweep = (0..grid)
        .map(|k| {
            let theta = k as f64 * step;
            Ok(ThetaSample {
                theta,
                sigma_min: shifted_sigma_min(&a, theta)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let best = sweep
        .iter()
        .fold(sweep[0], |acc, s| if s.sigma_min > acc.sigma_min { *s } else { acc });

    let refined = golden_max(&a, best.theta - step, best.theta + step)?;
    let theta_star = if refined.sigma_min > best.sigma_min {
        refined.theta.rem_euclid(PI)
    } else {
        best.theta
    };

    let eta_star = eta_of_theta(eta_w, theta_star);
    let margin = relative_margin(&eta_star)?;
    if !is_invertible(&eta_star, tol)? {
        return Err(Error::UnitCircleCovered);
    }
    Ok(HermitizationResult {
        theta_star,
        intertwining_residual: intertwining_residual(h, &eta_star),
        eta_star,
        margin,
        a_matrix: a,
        a_spectrum,
        bad_thetas: bad,
        sweep,
    })
}

fn golden_max(a: &ComplexMatrix, mut lo: f64, mut hi: f64) -> Result<ThetaSample> {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let mut f1 = shifted_sigma_min(a, x1)?;
    let mut f2 = shifted_sigma_min(a, x2)?;
    for _ in 0..GOLDEN_ITERATIONS {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = shifted_sigma_min(a, x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = shifted_sigma_min(a, x2)?;
        }
    }
    Ok(if f1 >= f2 {
        ThetaSample { theta: x1, sigma_min: f1 }
    } else {
        ThetaSample { theta: x2, sigma_min: f2 }
    })
}

pub(crate) mod complex_list {
    use super::C64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[C64], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<C64>, D::Error> {
        let raw = Vec::<[f64; 2]>::deserialize(d)?;
        Ok(raw.into_iter().map(|[re, im]| C64::new(re, im)).collect())
    }
}
