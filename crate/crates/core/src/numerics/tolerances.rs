use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numerical thresholds used across the crate.
///
/// `rank_rel` is the relative singular-value cutoff deciding rank and
/// invertibility, `herm_rel` bounds the relative anti-Hermitian part accepted
/// as Hermitian, `eig_residual` bounds residuals of eigenvalues and
/// intertwining identities, and `pd_min_eig` is the relative floor a smallest
/// eigenvalue must clear for positive definiteness.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub rank_rel: f64,
    pub herm_rel: f64,
    pub eig_residual: f64,
    pub pd_min_eig: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rank_rel: 1e-10,
            herm_rel: 1e-10,
            eig_residual: 1e-9,
            pd_min_eig: 1e-8,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("rank_rel", self.rank_rel),
            ("herm_rel", self.herm_rel),
            ("eig_residual", self.eig_residual),
            ("pd_min_eig", self.pd_min_eig),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidTolerance { name, value });
            }
        }
        Ok(())
    }
}
