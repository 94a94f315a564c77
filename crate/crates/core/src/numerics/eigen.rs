//! Eigenvalue solvers.
//!
//! General complex matrices go through diagonal balancing, Householder
//! reduction to upper Hessenberg form and a single-shift complex QR iteration
//! with Wilkinson shifts (exceptional shifts every ten stagnant steps).
//! Hermitian matrices use cyclic Jacobi rotations, which keep the smallest
//! eigenvalue accurate to working precision relative to the matrix norm.

use super::matrix::{ComplexMatrix, C64, ZERO};
use super::tolerances::Tolerances;
use crate::error::{Error, Result};

const RADIX: f64 = 2.0;

/// Iteration budget per unit of dimension for the QR sweep.
pub const QR_ITERATIONS_PER_DIM: usize = 100;

const JACOBI_MAX_SWEEPS: usize = 64;

#[inline]
fn cabs1(z: C64) -> f64 {
    z.re.abs() + z.im.abs()
}

/// All `n` eigenvalues of a square matrix, with multiplicity, in the order
/// they deflate.
pub fn eigenvalues(m: &ComplexMatrix, _tol: &Tolerances) -> Result<Vec<C64>> {
    let n = m.square_dim()?;
    m.ensure_finite()?;
    let mut h = m.clone();
    balance(&mut h);
    reduce_to_hessenberg(&mut h);
    hessenberg_qr(&mut h, QR_ITERATIONS_PER_DIM * n.max(1))
}

/// Parlett–Reinsch diagonal similarity scaling by powers of two.
fn balance(a: &mut ComplexMatrix) {
    let n = a.nrows();
    let sqrdx = RADIX * RADIX;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += cabs1(a[(j, i)]);
                    r += cabs1(a[(i, j)]);
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= sqrdx;
            }
            g = r * RADIX;
            while c > g {
                f /= RADIX;
                c /= sqrdx;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                let ginv = 1.0 / f;
                for j in 0..n {
                    a[(i, j)] *= ginv;
                    a[(j, i)] *= f;
                }
            }
        }
    }
}

/// In-place unitary similarity to upper Hessenberg form.
fn reduce_to_hessenberg(a: &mut ComplexMatrix) {
    let n = a.nrows();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        let mut v: Vec<C64> = (k + 1..n).map(|i| a[(i, k)]).collect();
        let tail: f64 = v[1..].iter().map(|z| z.norm_sqr()).sum();
        if tail == 0.0 {
            continue;
        }
        let alpha = (v[0].norm_sqr() + tail).sqrt();
        let phase = if v[0] == ZERO { C64::new(1.0, 0.0) } else { v[0] / v[0].norm() };
        v[0] += phase * alpha;
        let vv: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        let beta = 2.0 / vv;

        // left: rows k+1.., columns k..
        for j in k..n {
            let s: C64 = v.iter().enumerate().map(|(t, vi)| vi.conj() * a[(k + 1 + t, j)]).sum();
            let s = s * beta;
            for (t, vi) in v.iter().enumerate() {
                a[(k + 1 + t, j)] -= s * vi;
            }
        }
        // right: all rows, columns k+1..
        for i in 0..n {
            let s: C64 = v.iter().enumerate().map(|(t, vj)| a[(i, k + 1 + t)] * vj).sum();
            let s = s * beta;
            for (t, vj) in v.iter().enumerate() {
                a[(i, k + 1 + t)] -= s * vj.conj();
            }
        }
        for i in k + 2..n {
            a[(i, k)] = ZERO;
        }
    }
}

/// Unitary rotation `G = [[c, s], [-s̄, c]]` with `G [x; y] = [r; 0]`.
#[derive(Debug, Clone, Copy)]
struct Givens {
    c: f64,
    s: C64,
}

impl Givens {
    fn zeroing(x: C64, y: C64) -> Self {
        if y == ZERO {
            return Self { c: 1.0, s: ZERO };
        }
        if x == ZERO {
            return Self {
                c: 0.0,
                s: y.conj() / y.norm(),
            };
        }
        let ax = x.norm();
        let norm = ax.hypot(y.norm());
        let alpha = x / ax;
        Self {
            c: ax / norm,
            s: alpha * y.conj() / norm,
        }
    }

    /// Rows `p`, `p+1` ← G · rows, over columns `cols`.
    fn apply_left(&self, h: &mut ComplexMatrix, p: usize, cols: std::ops::RangeInclusive<usize>) {
        for j in cols {
            let a = h[(p, j)];
            let b = h[(p + 1, j)];
            h[(p, j)] = a * self.c + self.s * b;
            h[(p + 1, j)] = -self.s.conj() * a + b * self.c;
        }
    }

    /// Columns `p`, `p+1` ← columns · G†, over rows `rows`.
    fn apply_right(&self, h: &mut ComplexMatrix, p: usize, rows: std::ops::RangeInclusive<usize>) {
        for i in rows {
            let a = h[(i, p)];
            let b = h[(i, p + 1)];
            h[(i, p)] = a * self.c + self.s.conj() * b;
            h[(i, p + 1)] = -self.s * a + b * self.c;
        }
    }
}

fn wilkinson_shift(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mean = (a + d) * 0.5;
    let mu1 = mean + disc;
    let mu2 = mean - disc;
    if (mu1 - d).norm() <= (mu2 - d).norm() {
        mu1
    } else {
        mu2
    }
}

fn hessenberg_qr(h: &mut ComplexMatrix, budget: usize) -> Result<Vec<C64>> {
    let n = h.nrows();
    let mut eig = vec![ZERO; n];
    if n == 0 {
        return Ok(eig);
    }
    let eps = f64::EPSILON;
    let small = f64::MIN_POSITIVE / eps;
    let mut hi = n - 1;
    let mut stagnant = 0usize;
    let mut spent = 0usize;

    loop {
        if hi == 0 {
            eig[0] = h[(0, 0)];
            break;
        }
        // Locate the top of the active unreduced block.
        let mut lo = 0;
        for k in (1..=hi).rev() {
            let sub = cabs1(h[(k, k - 1)]);
            let mut diag = cabs1(h[(k - 1, k - 1)]) + cabs1(h[(k, k)]);
            if diag == 0.0 {
                diag = (lo..=hi).map(|i| cabs1(h[(i, i)])).sum::<f64>();
            }
            if sub <= small || sub <= eps * diag {
                h[(k, k - 1)] = ZERO;
                lo = k;
                break;
            }
        }
        if lo == hi {
            eig[hi] = h[(hi, hi)];
            hi -= 1;
            stagnant = 0;
            continue;
        }
        if spent >= budget {
            return Err(Error::NonConvergence {
                routine: "hessenberg QR",
                budget,
            });
        }
        spent += 1;
        stagnant += 1;

        let shift = if stagnant.is_multiple_of(10) {
            // Exceptional shift breaks cycles such as orthogonal permutations.
            let (diag, sub) = if stagnant.is_multiple_of(20) {
                (h[(lo, lo)], h[(lo + 1, lo)])
            } else {
                (h[(hi, hi)], h[(hi, hi - 1)])
            };
            diag + C64::new(0.75 * sub.re.abs() + 0.25 * sub.norm(), 0.0)
        } else {
            wilkinson_shift(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };

        // Implicit single-shift sweep over rows/columns lo..=hi.
        let mut g = Givens::zeroing(h[(lo, lo)] - shift, h[(lo + 1, lo)]);
        g.apply_left(h, lo, lo..=hi);
        g.apply_right(h, lo, lo..=(lo + 2).min(hi));
        for k in lo + 1..hi {
            g = Givens::zeroing(h[(k, k - 1)], h[(k + 1, k - 1)]);
            g.apply_left(h, k, k - 1..=hi);
            h[(k + 1, k - 1)] = ZERO;
            g.apply_right(h, k, lo..=(k + 2).min(hi));
        }
    }
    Ok(eig)
}

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// The input must be Hermitian within `tol.herm_rel`; the Hermitian part is
/// diagonalized.
pub fn hermitian_eigenvalues(m: &ComplexMatrix, tol: &Tolerances) -> Result<Vec<f64>> {
    m.square_dim()?;
    m.ensure_finite()?;
    let residual = m.hermitian_residual();
    if residual > tol.herm_rel {
        return Err(Error::NotHermitian { residual });
    }
    jacobi_hermitian(&m.hermitian_part())
}

/// Cyclic Jacobi diagonalization of an exactly Hermitian matrix.
pub(crate) fn jacobi_hermitian(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let n = m.nrows();
    let mut a = m.clone();
    let total = a.frobenius_norm();
    if total == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let threshold = f64::EPSILON * total;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= threshold {
            let mut eig: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
            eig.sort_by(f64::total_cmp);
            return Ok(eig);
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= f64::MIN_POSITIVE {
                    continue;
                }
                // Phase the (p, q) entry real, then rotate in the real plane.
                let phase = apq / mag;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let cs = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * cs;
                // A ← Rᵀ D† A D R with D = diag(1, .., phase̅ at q, .., 1).
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)] * phase.conj();
                    a[(k, p)] = akp * cs - akq * sn;
                    a[(k, q)] = akp * sn + akq * cs;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)] * phase;
                    a[(p, k)] = apk * cs - aqk * sn;
                    a[(q, k)] = apk * sn + aqk * cs;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
            }
        }
    }
    Err(Error::NonConvergence {
        routine: "Hermitian Jacobi",
        budget: JACOBI_MAX_SWEEPS,
    })
}
