//! Built-in worked examples.
//!
//! `TwoDim` is the 2×2 family `H = aI + bM₁` with the non-Hermitian
//! intertwiner `[[1, 1], [-1, i]]`. `Znojil` is the three-component block
//! operator whose intertwiner cyclically shifts the components through a
//! parity involution `P`. `P` is modelled as a finite Hermitian involution:
//! the 1×1 identity, or the antidiagonal permutation of size `parity_dim`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{c, r, ComplexMatrix, C64, I, ONE, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExampleName {
    Znojil,
    TwoDim,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExampleSpec {
    pub name: ExampleName,
    pub a: f64,
    pub b: f64,
    pub parity_dim: usize,
}

impl ExampleSpec {
    pub fn new(name: ExampleName) -> Self {
        Self {
            name,
            a: 1.0,
            b: 2.0,
            parity_dim: 1,
        }
    }
}

/// `M₁ = [[0, 0], [i, 1]]`.
pub fn m1() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ZERO, ZERO], [I, ONE]]).expect("static shape")
}

/// `M₂ = [[1, 0], [-i, 0]]`.
pub fn m2() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ONE, ZERO], [-I, ZERO]]).expect("static shape")
}

/// `[[1, 1], [-1, i]]`.
pub fn two_dim_eta_w() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[r(1.0), r(1.0)], [r(-1.0), I]]).expect("static shape")
}

/// `aI + bM₁ = [[a, 0], [ib, a + b]]`.
pub fn two_dim_hamiltonian(a: f64, b: f64) -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[r(a), ZERO], [c(0.0, b), r(a + b)]]).expect("static shape")
}

/// Closed form `2 cos ϑ [[-tan ϑ, i], [-i, -1]]` of the rotated metric for
/// the two-dimensional example, written without the tangent so it is defined
/// for every angle.
pub fn two_dim_eta_closed_form(theta: f64) -> ComplexMatrix {
    let (s, cs) = theta.sin_cos();
    ComplexMatrix::from_rows(&[[r(-2.0 * s), c(0.0, 2.0 * cs)], [c(0.0, -2.0 * cs), r(-2.0 * cs)]])
        .expect("static shape")
}

/// `r(I − t₂M₁ − t₁M₂)` with `r = cos ϑ₁ / (cos ϑ₂ − sin ϑ₂)` and `tᵢ = tan ϑᵢ`.
pub fn two_dim_symmetry_family(theta1: f64, theta2: f64) -> ComplexMatrix {
    let scale = theta1.cos() / (theta2.cos() - theta2.sin());
    let (t1, t2) = (theta1.tan(), theta2.tan());
    ComplexMatrix::identity(2)
        .axpy(r(-t2), &m1())
        .axpy(r(-t1), &m2())
        .scale(r(scale))
}

/// Parity stand-in of size `k`: antidiagonal permutation (identity for `k = 1`).
pub fn parity(k: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(k, k, |i, j| if i + j + 1 == k { ONE } else { ZERO })
}

/// Cyclic shift `e₁ → e₂ → e₃ → e₁`.
pub fn cyclic_shift() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ZERO, ZERO, ONE], [ONE, ZERO, ZERO], [ZERO, ONE, ZERO]])
        .expect("static shape")
}

/// Returns `(H, η_w)` for the requested example.
///
/// For `Znojil`, `η_w = C ⊗ P` with `C` the cyclic shift, and
/// `H = S ⊗ (P D)` where `S = aI + b(C + C²)` is a Hermitian circulant and
/// `D = diag(1, …, parity_dim)`. Since `S` commutes with `C` and `P D` is
/// `P`-pseudo-Hermitian, `η_w H = H† η_w`.
pub fn make_example(spec: &ExampleSpec) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if !(spec.a.is_finite() && spec.b.is_finite()) {
        return Err(Error::NonFinite);
    }
    match spec.name {
        ExampleName::TwoDim => Ok((two_dim_hamiltonian(spec.a, spec.b), two_dim_eta_w())),
        ExampleName::Znojil => {
            let k = spec.parity_dim;
            if k == 0 {
                return Err(Error::DimensionMismatch("parity_dim must be at least 1".into()));
            }
            let p = parity(k);
            let cyc = cyclic_shift();
            let cyc2 = &cyc * &cyc;
            let s = ComplexMatrix::identity(3)
                .scale(r(spec.a))
                .axpy(r(spec.b), &(&cyc + &cyc2));
            let d: Vec<C64> = (1..=k).map(|i| r(i as f64)).collect();
            let block = &p * &ComplexMatrix::from_diagonal(&d);
            Ok((s.kron(&block), cyc.kron(&p)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::intertwining_residual;

    #[test]
    fn two_dim_default() {
        let (h, eta) = make_example(&ExampleSpec::new(ExampleName::TwoDim)).unwrap();
        let want_h = ComplexMatrix::from_rows(&[[r(1.0), ZERO], [c(0.0, 2.0), r(3.0)]]).unwrap();
        assert_eq!(h, want_h);
        assert_eq!(eta, two_dim_eta_w());
        assert_eq!(h, ComplexMatrix::identity(2).axpy(r(2.0), &m1()));
    }

    #[test]
    fn m1_plus_m2_is_identity() {
        assert_eq!(&m1() + &m2(), ComplexMatrix::identity(2));
    }

    #[test]
    fn generated_pairs_intertwine() {
        for name in [ExampleName::TwoDim, ExampleName::Znojil] {
            for k in 1..=4 {
                for (a, b) in [(1.0, 2.0), (-0.5, 3.0), (0.0, 0.0)] {
                    let spec = ExampleSpec { name, a, b, parity_dim: k };
                    let (h, eta) = make_example(&spec).unwrap();
                    let abs = (&(&eta * &h) - &(&h.adjoint() * &eta)).max_abs();
                    assert!(abs <= 1e-12, "{spec:?}: {abs}");
                    assert!(intertwining_residual(&h, &eta) <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn parity_is_hermitian_involution() {
        for k in 1..6 {
            let p = parity(k);
            assert_eq!(p, p.adjoint());
            assert_eq!(&p * &p, ComplexMatrix::identity(k));
        }
    }

    #[test]
    fn znojil_intertwiner_is_block_shift() {
        let spec = ExampleSpec {
            parity_dim: 2,
            ..ExampleSpec::new(ExampleName::Znojil)
        };
        let (h, eta) = make_example(&spec).unwrap();
        assert_eq!(h.nrows(), 6);
        // block (0, 2) holds P
        assert_eq!(eta[(0, 5)], ONE);
        assert_eq!(eta[(1, 4)], ONE);
        assert_eq!(eta[(0, 0)], ZERO);
        assert!(make_example(&ExampleSpec { parity_dim: 0, ..spec }).is_err());
    }
}
