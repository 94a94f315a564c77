//! Linear symmetries of `H` built from pairs of invertible intertwiners.
//!
//! If `η₁` and `η₂` both intertwine `H` and are invertible then `η₁⁻¹η₂`
//! commutes with `H`. With a fixed invertible reference, left-multiplying
//! the whole intertwiner space by its inverse yields the commutant of `H`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intertwiner::IntertwinerSpace;
use crate::numerics::{
    commutator_residual, intertwining_residual, relative_margin, solve, ComplexMatrix,
    Tolerances, C64,
};

/// Relative residual after projecting out earlier generators below which a
/// candidate is dropped as linearly dependent.
const DEPENDENCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetrySource {
    /// `η_w⁻¹ η_w†`.
    AOperator,
    /// `η₁⁻¹ η₂` for two explicitly supplied intertwiners.
    Pair,
    /// `reference⁻¹ E_k` for basis element `k` of the intertwiner space.
    ReferenceTimesBasis(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetryGenerator {
    pub matrix: ComplexMatrix,
    pub source: SymmetrySource,
    /// `‖GH − HG‖_F / (‖G‖_F ‖H‖_F)`.
    pub commutator_residual: f64,
}

fn check_invertible_intertwiner(
    h: &ComplexMatrix,
    eta: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<()> {
    if eta.nrows() != h.nrows() || !eta.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "H is {0}x{0} but intertwiner is {1}x{2}",
            h.nrows(),
            eta.nrows(),
            eta.ncols()
        )));
    }
    let margin = relative_margin(eta)?;
    if margin <= tol.rank_rel {
        return Err(Error::SingularInput { margin });
    }
    let residual = intertwining_residual(h, eta);
    if residual > tol.eig_residual {
        return Err(Error::NotIntertwiner { residual });
    }
    Ok(())
}

/// `η₁⁻¹ η₂` with its measured commutator residual.
pub fn symmetry_from_pair(
    eta1: &ComplexMatrix,
    eta2: &ComplexMatrix,
    h: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<SymmetryGenerator> {
    h.square_dim()?;
    check_invertible_intertwiner(h, eta1, tol)?;
    check_invertible_intertwiner(h, eta2, tol)?;
    let g = solve(eta1, eta2, tol)?;
    Ok(SymmetryGenerator {
        commutator_residual: commutator_residual(&g, h),
        matrix: g,
        source: SymmetrySource::Pair,
    })
}

/// Basis of the commutant of `H` modulo the identity: `reference⁻¹ E` for
/// each basis element `E`, keeping those independent of `I` and of the
/// generators already kept.
pub fn symmetry_basis(
    space: &IntertwinerSpace,
    h: &ComplexMatrix,
    reference: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<Vec<SymmetryGenerator>> {
    let n = h.square_dim()?;
    check_invertible_intertwiner(h, reference, tol)?;
    let wanted = space.complex_dim().saturating_sub(1);

    // Orthonormal frame of span{I, kept generators} for dependence tests.
    let mut frame = vec![ComplexMatrix::identity(n).scale(C64::new(1.0 / (n as f64).sqrt(), 0.0))];
    let mut out = Vec::with_capacity(wanted);
    for (k, e) in space.basis().iter().enumerate() {
        if out.len() == wanted {
            break;
        }
        let g = solve(reference, e, tol)?;
        let norm = g.frobenius_norm();
        let mut v = g.clone();
        for _ in 0..2 {
            for u in &frame {
                v = v.axpy(-u.inner(&v), u);
            }
        }
        let rest = v.frobenius_norm();
        if rest <= DEPENDENCE * norm {
            continue;
        }
        frame.push(v.scale(C64::new(1.0 / rest, 0.0)));
        out.push(SymmetryGenerator {
            commutator_residual: commutator_residual(&g, h),
            matrix: g,
            source: SymmetrySource::ReferenceTimesBasis(k),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intertwiner::intertwiner_space;
    use crate::numerics::{c, r, right_svd, I, ONE, ZERO};
    use crate::synthesis::a_operator;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn eta_w() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[[r(1.0), r(1.0)], [r(-1.0), I]]).unwrap()
    }

    fn two_dim_h(a: f64, b: f64) -> ComplexMatrix {
        ComplexMatrix::from_rows(&[[r(a), ZERO], [c(0.0, b), r(a + b)]]).unwrap()
    }

    fn rank(ms: &[ComplexMatrix]) -> usize {
        let n2 = ms[0].nrows() * ms[0].ncols();
        let stacked = ComplexMatrix::from_fn(n2, ms.len(), |i, j| ms[j].vec_col_major()[i]);
        let svd = right_svd(&stacked).unwrap();
        let top = svd.sigma_max();
        svd.singular_values.iter().filter(|&&s| s > 1e-9 * top).count()
    }

    #[test]
    fn equal_pair_gives_identity() {
        let h = two_dim_h(1.0, 2.0);
        let g = symmetry_from_pair(&eta_w(), &eta_w(), &h, &tol()).unwrap();
        assert!(g.matrix.approx_eq(&ComplexMatrix::identity(2), 1e-15));
        assert!(g.commutator_residual < 1e-15);
    }

    #[test]
    fn pair_with_adjoint_is_a_operator() {
        let h = two_dim_h(1.0, 2.0);
        let g = symmetry_from_pair(&eta_w(), &eta_w().adjoint(), &h, &tol()).unwrap();
        assert_eq!(g.matrix, a_operator(&eta_w(), &tol()).unwrap());
        let expected = ComplexMatrix::from_rows(&[[I, ZERO], [c(1.0, -1.0), r(-1.0)]]).unwrap();
        assert!(g.matrix.approx_eq(&expected, 1e-15));
        for (a, b) in [(0.3, -1.2), (2.0, 5.0), (-1.0, 0.5)] {
            let h = two_dim_h(a, b);
            assert!(g.matrix.commutator(&h).max_abs() < 1e-14);
        }
    }

    #[test]
    fn pair_errors() {
        let h = two_dim_h(1.0, 2.0);
        let singular = ComplexMatrix::from_rows(&[[r(2.0), ZERO], [ZERO, ZERO]]).unwrap();
        assert!(matches!(
            symmetry_from_pair(&singular, &eta_w(), &h, &tol()),
            Err(Error::SingularInput { .. })
        ));
        assert!(matches!(
            symmetry_from_pair(&eta_w(), &ComplexMatrix::identity(2), &h, &tol()),
            Err(Error::NotIntertwiner { .. })
        ));
    }

    #[test]
    fn two_dim_has_one_nontrivial_generator() {
        let h = two_dim_h(1.0, 2.0);
        let space = intertwiner_space(&h, &tol()).unwrap();
        let gens = symmetry_basis(&space, &h, &eta_w(), &tol()).unwrap();
        assert_eq!(gens.len(), 1);
        let m2 = ComplexMatrix::from_rows(&[[ONE, ZERO], [-I, ZERO]]).unwrap();
        let id = ComplexMatrix::identity(2);
        assert_eq!(rank(&[id.clone(), gens[0].matrix.clone()]), 2);
        assert_eq!(rank(&[id, gens[0].matrix.clone(), m2]), 2);
        assert!(gens[0].commutator_residual < 1e-12);
    }

    #[test]
    fn identity_commutant_is_full_algebra() {
        let h = ComplexMatrix::identity(2);
        let space = intertwiner_space(&h, &tol()).unwrap();
        let gens = symmetry_basis(&space, &h, &ComplexMatrix::identity(2), &tol()).unwrap();
        assert_eq!(gens.len(), 3);
        let mut all = vec![ComplexMatrix::identity(2)];
        all.extend(gens.into_iter().map(|g| g.matrix));
        assert_eq!(rank(&all), 4);
    }

    #[test]
    fn distinct_diagonal_commutant_is_diagonal() {
        let h = ComplexMatrix::from_diagonal(&[r(1.0), r(2.0)]);
        let space = intertwiner_space(&h, &tol()).unwrap();
        let gens = symmetry_basis(&space, &h, &ComplexMatrix::identity(2), &tol()).unwrap();
        assert_eq!(gens.len(), 1);
        for g in &gens {
            assert!(g.matrix[(0, 1)].norm() < 1e-14 && g.matrix[(1, 0)].norm() < 1e-14);
        }
    }
}
