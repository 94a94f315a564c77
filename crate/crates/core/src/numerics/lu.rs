use super::matrix::{ComplexMatrix, C64, ZERO};
use super::svd::relative_margin;
use super::tolerances::Tolerances;
use crate::error::{Error, Result};

/// Solves `A X = B` by LU with partial pivoting.
///
/// `A` is first screened with the relative singular-value margin so that a
/// numerically singular system is reported as `SingularInput` instead of
/// returning garbage.
pub fn solve(a: &ComplexMatrix, b: &ComplexMatrix, tol: &Tolerances) -> Result<ComplexMatrix> {
    let n = a.square_dim()?;
    if b.nrows() != n {
        return Err(Error::DimensionMismatch(format!(
            "left side is {n}x{n}, right side has {} rows",
            b.nrows()
        )));
    }
    let margin = relative_margin(a)?;
    if margin <= tol.rank_rel {
        return Err(Error::SingularInput { margin });
    }

    let mut lu = a.clone();
    let mut x = b.clone();
    let m = b.ncols();
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&i, &j| lu[(i, k)].norm().total_cmp(&lu[(j, k)].norm()))
            .expect("non-empty pivot range");
        if lu[(pivot, k)] == ZERO {
            return Err(Error::SingularInput { margin: 0.0 });
        }
        if pivot != k {
            for j in 0..n {
                let t = lu[(k, j)];
                lu[(k, j)] = lu[(pivot, j)];
                lu[(pivot, j)] = t;
            }
            for j in 0..m {
                let t = x[(k, j)];
                x[(k, j)] = x[(pivot, j)];
                x[(pivot, j)] = t;
            }
        }
        let d = lu[(k, k)];
        for i in k + 1..n {
            let f = lu[(i, k)] / d;
            if f == ZERO {
                continue;
            }
            lu[(i, k)] = f;
            for j in k + 1..n {
                let t = lu[(k, j)];
                lu[(i, j)] -= f * t;
            }
            for j in 0..m {
                let t = x[(k, j)];
                x[(i, j)] -= f * t;
            }
        }
    }
    for j in 0..m {
        for i in (0..n).rev() {
            let mut s: C64 = x[(i, j)];
            for k in i + 1..n {
                s -= lu[(i, k)] * x[(k, j)];
            }
            x[(i, j)] = s / lu[(i, i)];
        }
    }
    Ok(x)
}

pub fn inverse(a: &ComplexMatrix, tol: &Tolerances) -> Result<ComplexMatrix> {
    let n = a.square_dim()?;
    solve(a, &ComplexMatrix::identity(n), tol)
}
