//! End-to-end verdict for an operator `H`.
//!
//! The pipeline computes the intertwiner space, draws an invertible element,
//! hermitizes it, searches the Hermitian slice for a positive-definite metric
//! and finally reports the commutant. In finite dimension a weakly
//! pseudo-Hermitian operator is always pseudo-Hermitian, so there is no
//! separate verdict for the weak notion: the Hermitian metric returned by
//! [`hermitize`] is the proof.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intertwiner::{
    find_invertible, intertwiner_space, IntertwinerDims, IntertwinerSpace, DEFAULT_TRIALS,
};
use crate::numerics::{
    eigenvalues, intertwining_residual, is_positive_definite, jacobi_hermitian, normalized_min,
    operator_norm, ComplexMatrix, Tolerances, C64,
};
use crate::symmetry::{symmetry_basis, SymmetryGenerator};
use crate::synthesis::{complex_list, hermitize, HermitizationResult, DEFAULT_GRID};

pub const DEFAULT_RESTARTS: usize = 16;

const ASCENT_ITERATIONS: usize = 200;
const FD_STEP: f64 = 1e-7;
const MIN_STEP: f64 = 1e-10;

/// Relative imaginary part of an eigenvalue of `H` beyond which no
/// positive-definite metric can exist.
const NON_REAL_SPECTRUM: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    NotPseudoHermitian,
    PseudoHermitian,
    QuasiHermitian,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::NotPseudoHermitian => "NOT_PSEUDO_HERMITIAN",
            Verdict::PseudoHermitian => "PSEUDO_HERMITIAN",
            Verdict::QuasiHermitian => "QUASI_HERMITIAN",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalysisOptions {
    pub tol: Tolerances,
    pub seed: u64,
    /// Random draws for an invertible intertwiner.
    pub trials: usize,
    /// Random restarts of the positive-definite search.
    pub restarts: usize,
    /// Angle grid size for hermitization.
    pub grid: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            tol: Tolerances::default(),
            seed: 0,
            trials: DEFAULT_TRIALS,
            restarts: DEFAULT_RESTARTS,
            grid: DEFAULT_GRID,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PdStatus {
    /// A verified positive-definite intertwiner was found.
    Certified,
    /// Search exhausted its restarts; absence is probabilistic.
    NotFound,
    /// `H` has non-real eigenvalues, which rules out any positive-definite metric.
    ExcludedByNonRealSpectrum,
    /// A candidate was found but failed independent re-verification.
    WitnessRejected,
    /// `H` is not pseudo-Hermitian, so no search was run.
    NotAttempted,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PositiveDefiniteEvidence {
    pub status: PdStatus,
    /// Best `λ_min / ‖η‖₂` reached by the search.
    pub objective: Option<f64>,
    pub metric: Option<ComplexMatrix>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub verdict: Verdict,
    #[serde(with = "complex_list")]
    pub h_spectrum: Vec<C64>,
    /// Largest distance in a greedy matching of `σ(H)` with its conjugate.
    pub conjugation_symmetry_residual: f64,
    pub intertwiner: IntertwinerDims,
    pub eta_w: Option<ComplexMatrix>,
    pub hermitization: Option<HermitizationResult>,
    pub positive_definite: PositiveDefiniteEvidence,
    pub symmetries: Vec<SymmetryGenerator>,
    /// No invertible intertwiner turned up among the random draws.
    pub probabilistic_none: bool,
}

impl AnalysisReport {
    pub fn positive_metric(&self) -> Option<&ComplexMatrix> {
        self.positive_definite.metric.as_ref()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PdSearchOutcome {
    /// Unit-Frobenius positive-definite element, when found.
    pub witness: Option<ComplexMatrix>,
    pub best_objective: f64,
}

pub fn classify(h: &ComplexMatrix, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    h.square_dim()?;
    h.ensure_finite()?;
    opts.tol.validate()?;
    let tol = &opts.tol;

    let mut h_spectrum = eigenvalues(h, tol)?;
    h_spectrum.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let conjugation_symmetry_residual = conjugation_residual(&h_spectrum);
    let space = intertwiner_space(h, tol)?;

    let mut report = AnalysisReport {
        verdict: Verdict::NotPseudoHermitian,
        h_spectrum,
        conjugation_symmetry_residual,
        intertwiner: space.dims(),
        eta_w: None,
        hermitization: None,
        positive_definite: PositiveDefiniteEvidence {
            status: PdStatus::NotAttempted,
            objective: None,
            metric: None,
        },
        symmetries: Vec::new(),
        probabilistic_none: false,
    };
    if space.complex_dim() == 0 {
        return Ok(report);
    }
    let Some(eta_w) = find_invertible(&space, opts.trials, opts.seed)? else {
        report.probabilistic_none = true;
        return Ok(report);
    };

    let herm = hermitize(h, &eta_w, tol, opts.grid)?;
    report.verdict = Verdict::PseudoHermitian;
    report.symmetries = symmetry_basis(&space, h, &herm.eta_star, tol)?;
    report.eta_w = Some(eta_w);

    let h_norm = operator_norm(h)?;
    let max_imag = report.h_spectrum.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if max_imag > NON_REAL_SPECTRUM * h_norm {
        report.positive_definite.status = PdStatus::ExcludedByNonRealSpectrum;
    } else {
        let outcome = pd_search(&space, tol, opts.restarts, opts.seed)?;
        report.positive_definite.objective = Some(outcome.best_objective);
        report.positive_definite.status = match outcome.witness {
            None => PdStatus::NotFound,
            Some(metric) => {
                if verify_positive_metric(h, &metric, max_imag, h_norm, tol)? {
                    report.verdict = Verdict::QuasiHermitian;
                    report.positive_definite.metric = Some(metric);
                    PdStatus::Certified
                } else {
                    PdStatus::WitnessRejected
                }
            }
        };
    }
    report.hermitization = Some(herm);
    Ok(report)
}

/// Independent re-check of a positive-definite metric candidate: Hermitian,
/// positive definite, intertwining, and `H` with real spectrum.
fn verify_positive_metric(
    h: &ComplexMatrix,
    metric: &ComplexMatrix,
    max_imag: f64,
    h_norm: f64,
    tol: &Tolerances,
) -> Result<bool> {
    Ok(metric.hermitian_residual() <= tol.herm_rel
        && is_positive_definite(metric, tol)?
        && intertwining_residual(h, metric) <= tol.eig_residual
        && max_imag <= 10.0 * tol.eig_residual * h_norm.max(f64::MIN_POSITIVE))
}

/// Greedy matching of each eigenvalue with the nearest unused conjugate;
/// returns the largest matched distance.
fn conjugation_residual(spectrum: &[C64]) -> f64 {
    let mut used = vec![false; spectrum.len()];
    let mut worst: f64 = 0.0;
    // Largest imaginary parts first.
    let mut order: Vec<usize> = (0..spectrum.len()).collect();
    order.sort_by(|&a, &b| spectrum[b].im.abs().total_cmp(&spectrum[a].im.abs()).then(a.cmp(&b)));
    for &i in &order {
        let target = spectrum[i].conj();
        let best = (0..spectrum.len())
            .filter(|&j| !used[j])
            .min_by(|&a, &b| {
                (spectrum[a] - target)
                    .norm()
                    .total_cmp(&(spectrum[b] - target).norm())
            });
        if let Some(j) = best {
            used[j] = true;
            worst = worst.max((spectrum[j] - target).norm());
        }
    }
    worst
}

/// Maximizes `λ_min(Σ cᵢEᵢ) / ‖Σ cᵢEᵢ‖₂` over unit real coefficient vectors
/// on the Hermitian slice, by random restarts and projected finite-difference
/// ascent with step halving. The search stops at the first restart whose
/// converged objective clears `pd_min_eig`.
pub fn pd_search(
    space: &IntertwinerSpace,
    tol: &Tolerances,
    restarts: usize,
    seed: u64,
) -> Result<PdSearchOutcome> {
    let m = space.hermitian_real_dim();
    if m == 0 {
        return Err(Error::EmptySpace);
    }
    let objective = |c: &[f64]| -> Result<f64> {
        let eig = jacobi_hermitian(&space.combine_hermitian(c))?;
        Ok(normalized_min(&eig))
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x005e_ed0f_9d5e_a7c4);
    let mut best: Option<(Vec<f64>, f64)> = None;
    for _ in 0..restarts.max(1) {
        let mut c: Vec<f64> = (0..m).map(|_| StandardNormal.sample(&mut rng)).collect();
        normalize(&mut c);
        let mut f = objective(&c)?;
        let flipped: Vec<f64> = c.iter().map(|x| -x).collect();
        let f_flipped = objective(&flipped)?;
        if f_flipped > f {
            c = flipped;
            f = f_flipped;
        }
        if m > 1 {
            (c, f) = ascend(c, f, &objective)?;
        }
        if best.as_ref().is_none_or(|(_, b)| f > *b) {
            best = Some((c, f));
        }
        if f > tol.pd_min_eig {
            break;
        }
    }
    let (c, f) = best.expect("at least one restart");
    let witness = (f > tol.pd_min_eig).then(|| {
        let w = space.combine_hermitian(&c);
        let norm = w.frobenius_norm();
        w.scale(C64::new(1.0 / norm, 0.0))
    });
    Ok(PdSearchOutcome {
        witness,
        best_objective: f,
    })
}

fn ascend(
    mut c: Vec<f64>,
    mut f: f64,
    objective: &impl Fn(&[f64]) -> Result<f64>,
) -> Result<(Vec<f64>, f64)> {
    let m = c.len();
    let mut step = 0.5;
    for _ in 0..ASCENT_ITERATIONS {
        let mut grad = Vec::with_capacity(m);
        for i in 0..m {
            let mut probe = c.clone();
            probe[i] += FD_STEP;
            normalize(&mut probe);
            grad.push((objective(&probe)? - f) / FD_STEP);
        }
        let radial: f64 = grad.iter().zip(&c).map(|(g, x)| g * x).sum();
        for (g, x) in grad.iter_mut().zip(&c) {
            *g -= radial * x;
        }
        let gnorm = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
        if gnorm < 1e-12 {
            break;
        }
        // Halve until the step improves; the objective kinks where
        // eigenvalues cross, so the accepted step can be tiny.
        let mut improved = false;
        while step >= MIN_STEP {
            let mut trial: Vec<f64> = c.iter().zip(&grad).map(|(x, g)| x + step * g / gnorm).collect();
            normalize(&mut trial);
            let ft = objective(&trial)?;
            if ft > f {
                c = trial;
                f = ft;
                improved = true;
                step = (step * 1.5).min(1.0);
                break;
            }
            step *= 0.5;
        }
        if !improved {
            break;
        }
    }
    Ok((c, f))
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
}
