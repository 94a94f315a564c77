//! Pseudo-Hermiticity analysis for finite-dimensional complex operators.
//!
//! Given a square complex matrix `H`, the crate computes the linear space of
//! intertwiners `X` with `XH = H†X`, extracts an invertible element, rotates
//! it into a Hermitian invertible pseudo-metric, searches the Hermitian slice
//! for a positive-definite metric and reports the symmetries commuting with
//! `H`.

pub mod builtin;
pub mod classify;
pub mod error;
pub mod intertwiner;
pub mod io;
pub mod numerics;
pub mod report;
pub mod symmetry;
pub mod synthesis;

pub use classify::{classify, pd_search, AnalysisOptions, AnalysisReport, PdSearchOutcome, Verdict};
pub use error::{Error, Result};
pub use intertwiner::{find_invertible, intertwiner_space, sylvester_operator, IntertwinerSpace};
pub use numerics::{ComplexMatrix, Tolerances, C64};
pub use symmetry::{symmetry_basis, symmetry_from_pair, SymmetryGenerator, SymmetrySource};
pub use synthesis::{
    a_operator, bad_thetas, eta_of_theta, hermitize, spectrum_report, HermitizationResult,
    SpectrumReport,
};
