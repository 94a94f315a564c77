//! Stable JSON report emitted by the command-line front end.
//!
//! Top-level keys: `verdict`, `spectrum`, `intertwiner_dims`, `theta_star`,
//! `margin`, `bad_thetas`, `positive_definite`, `symmetries`, `seed`,
//! `tolerances`. Complex numbers are `[re, im]` pairs.

use serde::{Deserialize, Serialize};

use crate::classify::{AnalysisOptions, AnalysisReport, PositiveDefiniteEvidence, Verdict};
use crate::numerics::{Tolerances, C64};
use crate::symmetry::SymmetryGenerator;
use crate::synthesis::complex_list;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub verdict: Verdict,
    pub spectrum: SpectrumSection,
    pub intertwiner_dims: IntertwinerSection,
    pub theta_star: Option<f64>,
    pub margin: Option<f64>,
    pub bad_thetas: Vec<f64>,
    pub positive_definite: PositiveDefiniteEvidence,
    pub symmetries: Vec<SymmetryGenerator>,
    pub seed: u64,
    pub tolerances: Tolerances,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSection {
    #[serde(with = "complex_list")]
    pub eigenvalues: Vec<C64>,
    pub conjugation_symmetry_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntertwinerSection {
    pub complex: usize,
    pub hermitian_real: usize,
    pub invertible_found: bool,
    /// Absence of an invertible intertwiner rests on random sampling.
    pub probabilistic_none: bool,
}

impl Report {
    pub fn new(analysis: &AnalysisReport, opts: &AnalysisOptions) -> Self {
        let herm = analysis.hermitization.as_ref();
        Self {
            verdict: analysis.verdict,
            spectrum: SpectrumSection {
                eigenvalues: analysis.h_spectrum.clone(),
                conjugation_symmetry_residual: analysis.conjugation_symmetry_residual,
            },
            intertwiner_dims: IntertwinerSection {
                complex: analysis.intertwiner.complex,
                hermitian_real: analysis.intertwiner.hermitian_real,
                invertible_found: analysis.eta_w.is_some(),
                probabilistic_none: analysis.probabilistic_none,
            },
            theta_star: herm.map(|h| h.theta_star),
            margin: herm.map(|h| h.margin),
            bad_thetas: herm.map(|h| h.bad_thetas.clone()).unwrap_or_default(),
            positive_definite: analysis.positive_definite.clone(),
            symmetries: analysis.symmetries.clone(),
            seed: opts.seed,
            tolerances: opts.tol,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("verdict: {}\n", self.verdict.as_str()));
        out.push_str("spectrum:\n");
        for z in &self.spectrum.eigenvalues {
            out.push_str(&format!("  {:+.12e} {:+.12e}i\n", z.re, z.im));
        }
        out.push_str(&format!(
            "conjugation symmetry residual: {:.3e}\n",
            self.spectrum.conjugation_symmetry_residual
        ));
        out.push_str(&format!(
            "intertwiner space: complex dim {}, hermitian real dim {}\n",
            self.intertwiner_dims.complex, self.intertwiner_dims.hermitian_real
        ));
        if self.intertwiner_dims.probabilistic_none {
            out.push_str("no invertible intertwiner found (probabilistic)\n");
        }
        if let (Some(theta), Some(margin)) = (self.theta_star, self.margin) {
            out.push_str(&format!("theta*: {theta:.12}  margin: {margin:.3e}\n"));
            let bad: Vec<String> = self.bad_thetas.iter().map(|t| format!("{t:.12}")).collect();
            out.push_str(&format!("singular angles: [{}]\n", bad.join(", ")));
        }
        out.push_str(&format!(
            "positive-definite metric: {:?}",
            self.positive_definite.status
        ));
        if let Some(obj) = self.positive_definite.objective {
            out.push_str(&format!(" (objective {obj:.3e})"));
        }
        out.push('\n');
        out.push_str(&format!("symmetry generators: {}\n", self.symmetries.len()));
        out
    }
}
