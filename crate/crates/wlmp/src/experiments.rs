//! Monte-Carlo harness: end-to-end matching trials over SNR grids,
//! accuracy scoring, confidence intervals, and the named presets that
//! reproduce the published accuracy-vs-SNR experiments.
//!
//! ```
//! use wlmp::channel::PropagationModel;
//! use wlmp::experiments::{
//!     log_grid, run_sweep, AlignmentMode, EigenvectorChoice, SweepConfig,
//! };
//! use wlmp::geometry::{generate_layout, pairwise_distances, GroundTruth, LayoutKind, LayoutParams};
//!
//! let layout = generate_layout(LayoutKind::Factory, &LayoutParams::default(), 0)?;
//! let model = PropagationModel::calibrated(&pairwise_distances(&layout))?;
//! let result = run_sweep(&SweepConfig {
//!     truth: GroundTruth::random(layout.len(), 11),
//!     layout,
//!     model,
//!     eigenvectors: EigenvectorChoice::Fixed(vec![1, 2]),
//!     alignment: AlignmentMode::OrientationSearch,
//!     snr_grid: log_grid(5.0, 50.0, 4),
//!     realizations: 10,
//!     master_seed: 42,
//! })?;
//! assert_eq!(result.points.len(), 4);
//! // accuracy is essentially perfect at the high-SNR end
//! assert!(result.points.last().unwrap().mean_accuracy > 0.99);
//! # Ok::<(), wlmp::Error>(())
//! ```

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::{noisy_distance_matrix, NoiseSpec, PropagationModel};
use crate::embedding::{
    embed, embed_first_k, select_eigenvectors, Embedding, Selection, DEFAULT_RESOLUTION,
};
use crate::error::{Error, Result};
use crate::geometry::{
    generate_layout, pairwise_distances, GroundTruth, LayoutKind, LayoutParams, PositionSet,
};
use crate::matching::{
    match_with_anchor, match_with_anchored_search, match_with_orientation_search, Assignment,
};

/// Normal quantile for a two-sided 99% confidence interval.
pub const Z_99: f64 = 2.576;

/// How the eigenvector set for matching is chosen.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum EigenvectorChoice {
    /// Run resolution-driven selection on the blueprint embedding.
    Auto { resolution: f64, kmax: usize },
    /// Use exactly these 1-based non-trivial eigenvector indices.
    Fixed(Vec<usize>),
}

impl EigenvectorChoice {
    pub fn auto() -> Self {
        Self::Auto {
            resolution: DEFAULT_RESOLUTION,
            kmax: 8,
        }
    }
}

/// How the per-axis sign ambiguity is resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlignmentMode {
    /// Try all `2^k` sign vectors and keep the cheapest matching.
    OrientationSearch,
    /// One node with known position, given explicitly.
    Anchor { node: usize, position: usize },
    /// One known node, picked automatically: the position whose embedded
    /// coordinates are largest in every column (relative to the column
    /// maxima), so its signs are the most noise-robust.
    AutoAnchor,
}

/// Everything one matching trial needs.
#[derive(Debug, Clone)]
pub struct TrialConfig {
    pub layout: PositionSet,
    pub truth: GroundTruth,
    pub model: PropagationModel,
    pub eigenvectors: EigenvectorChoice,
    pub alignment: AlignmentMode,
    pub snr: f64,
    pub seed: u64,
}

/// Result of a single trial.
#[derive(Debug, Clone)]
pub struct TrialOutcome {
    pub assignment: Assignment,
    pub accuracy: f64,
    pub selected_indices: Vec<usize>,
}

/// Fraction of nodes assigned to their true positions.
pub fn accuracy(a: &Assignment, truth: &GroundTruth) -> Result<f64> {
    if a.pairs.len() != truth.len() {
        return Err(Error::SizeMismatch(format!(
            "assignment has {} nodes, ground truth {}",
            a.pairs.len(),
            truth.len()
        )));
    }
    let correct = a
        .pairs
        .iter()
        .enumerate()
        .filter(|&(i, &p)| p == truth.position_of(i))
        .count();
    Ok(correct as f64 / truth.len() as f64)
}

/// Blueprint-side state shared by every realization of a sweep: exact
/// distances, embedding, eigenvector selection, and the anchor choice.
pub struct PreparedPipeline {
    layout_len: usize,
    truth: GroundTruth,
    node_truth_distances: crate::embedding::MeasurementMatrix,
    model: PropagationModel,
    position_embedding: Embedding,
    pub selection: Selection,
    alignment: AlignmentMode,
    /// Resolved anchor (node, position) when anchor alignment is active.
    anchor: Option<(usize, usize)>,
}

impl PreparedPipeline {
    pub fn new(
        layout: &PositionSet,
        truth: &GroundTruth,
        model: PropagationModel,
        eigenvectors: &EigenvectorChoice,
        alignment: AlignmentMode,
    ) -> Result<Self> {
        if layout.len() != truth.len() {
            return Err(Error::SizeMismatch(format!(
                "layout has {} positions, ground truth {} nodes",
                layout.len(),
                truth.len()
            )));
        }
        let dpos = pairwise_distances(layout);
        let selection = match eigenvectors {
            EigenvectorChoice::Fixed(indices) => Selection {
                indices: indices.clone(),
                unresolved: Vec::new(),
            },
            EigenvectorChoice::Auto { resolution, kmax } => {
                let kmax = (*kmax).min(layout.len() - 1);
                let candidates = embed_first_k(&dpos, kmax)?;
                select_eigenvectors(&candidates, layout.dim(), *resolution)
            }
        };
        let position_embedding = embed(&dpos, &selection.indices)?;
        let anchor = match alignment {
            AlignmentMode::OrientationSearch => None,
            AlignmentMode::Anchor { node, position } => Some((node, position)),
            AlignmentMode::AutoAnchor => {
                let position = most_robust_anchor(&position_embedding);
                let node = truth
                    .permutation()
                    .iter()
                    .position(|&p| p == position)
                    .expect("bijection");
                Some((node, position))
            }
        };
        let node_truth_distances = dpos.permuted(truth.permutation());
        Ok(Self {
            layout_len: layout.len(),
            truth: truth.clone(),
            node_truth_distances,
            model,
            position_embedding,
            selection,
            alignment,
            anchor,
        })
    }

    pub fn position_embedding(&self) -> &Embedding {
        &self.position_embedding
    }

    /// One noise realization end to end.
    pub fn run(&self, snr: f64, seed: u64) -> Result<TrialOutcome> {
        let ns = NoiseSpec::new(snr, seed)?;
        let noisy = noisy_distance_matrix(&self.node_truth_distances, &self.model, &ns)?;
        let node_embedding = embed(&noisy, &self.selection.indices)?;
        let assignment = match (self.alignment, self.anchor) {
            (AlignmentMode::OrientationSearch, _) => {
                match_with_orientation_search(&node_embedding, &self.position_embedding)?
            }
            (_, Some((node, position))) => {
                // Per-column sign comparison when the anchor is decisive
                // in every column; otherwise fall back to the exhaustive
                // search with the anchor picking among tied patterns.
                match match_with_anchor(&node_embedding, &self.position_embedding, node, position) {
                    Err(Error::AmbiguousAnchor { .. }) => match_with_anchored_search(
                        &node_embedding,
                        &self.position_embedding,
                        node,
                        position,
                    )?,
                    other => other?,
                }
            }
            _ => unreachable!("anchor resolved at preparation time"),
        };
        let accuracy = accuracy(&assignment, &self.truth)?;
        Ok(TrialOutcome {
            assignment,
            accuracy,
            selected_indices: self.selection.indices.clone(),
        })
    }

    pub fn len(&self) -> usize {
        self.layout_len
    }

    pub fn is_empty(&self) -> bool {
        self.layout_len == 0
    }
}

/// The position whose embedded coordinates are largest in every column,
/// measured relative to each column's maximum magnitude.
fn most_robust_anchor(p: &Embedding) -> usize {
    let m = p.rows();
    let k = p.k();
    let col_max: Vec<f64> = (0..k).map(|c| p.coords.column(c).abs().max()).collect();
    let mut best = 0;
    let mut best_score = f64::NEG_INFINITY;
    for i in 0..m {
        let score = (0..k)
            .map(|c| p.coords[(i, c)].abs() / col_max[c])
            .fold(f64::INFINITY, f64::min);
        if score > best_score {
            best_score = score;
            best = i;
        }
    }
    best
}

/// Executes geometry -> channel -> embedding -> matching -> accuracy.
pub fn run_trial(cfg: &TrialConfig) -> Result<TrialOutcome> {
    let prep = PreparedPipeline::new(
        &cfg.layout,
        &cfg.truth,
        cfg.model,
        &cfg.eigenvectors,
        cfg.alignment,
    )?;
    prep.run(cfg.snr, cfg.seed)
}

/// One accuracy sample of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialSample {
    pub seed: u64,
    pub accuracy: f64,
    pub total_cost: f64,
    pub ambiguous: bool,
}

/// Aggregated samples at one SNR grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub snr: f64,
    pub samples: Vec<TrialSample>,
    pub mean_accuracy: f64,
    /// Half-width of the 99% normal-approximation confidence interval,
    /// clipped so the interval stays inside [0, 1].
    pub ci_half_width: f64,
}

/// Accuracy curve over an SNR grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub points: Vec<SweepPoint>,
    pub realizations: usize,
}

/// Sweep parameters: a trial template plus the grid.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub layout: PositionSet,
    pub truth: GroundTruth,
    pub model: PropagationModel,
    pub eigenvectors: EigenvectorChoice,
    pub alignment: AlignmentMode,
    pub snr_grid: Vec<f64>,
    pub realizations: usize,
    pub master_seed: u64,
}

/// Logarithmic default grid: 20 points from 10^0 to 10^2, bracketing
/// where the accuracy transition typically sits.
pub fn default_snr_grid() -> Vec<f64> {
    log_grid(1.0, 100.0, 20)
}

pub fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let (llo, lhi) = (lo.log10(), hi.log10());
    (0..points)
        .map(|i| {
            let t = if points == 1 {
                0.0
            } else {
                i as f64 / (points - 1) as f64
            };
            10f64.powf(llo + (lhi - llo) * t)
        })
        .collect()
}

/// Trial seed derived from (master seed, SNR index, realization index)
/// with a SplitMix64 chain, so adding grid points never perturbs
/// existing trials and execution order is irrelevant.
pub fn derive_seed(master: u64, snr_index: u64, realization: u64) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
    mix(mix(mix(master) ^ snr_index) ^ realization)
}

/// Runs `realizations` independent trials per grid point, in parallel,
/// and aggregates mean accuracy with a 99% confidence half-width.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepResult> {
    if cfg.realizations < 2 {
        return Err(Error::InvalidArgument(
            "a sweep needs at least 2 realizations for a confidence interval".into(),
        ));
    }
    let prep = PreparedPipeline::new(
        &cfg.layout,
        &cfg.truth,
        cfg.model,
        &cfg.eigenvectors,
        cfg.alignment,
    )?;
    let jobs: Vec<(usize, u64)> = cfg
        .snr_grid
        .iter()
        .enumerate()
        .flat_map(|(si, _)| (0..cfg.realizations as u64).map(move |r| (si, r)))
        .collect();
    let samples: Vec<(usize, TrialSample)> = jobs
        .par_iter()
        .map(|&(si, r)| {
            let seed = derive_seed(cfg.master_seed, si as u64, r);
            let outcome = prep.run(cfg.snr_grid[si], seed)?;
            Ok((
                si,
                TrialSample {
                    seed,
                    accuracy: outcome.accuracy,
                    total_cost: outcome.assignment.total_cost,
                    ambiguous: outcome.assignment.ambiguous,
                },
            ))
        })
        .collect::<Result<_>>()?;

    let mut points: Vec<SweepPoint> = cfg
        .snr_grid
        .iter()
        .map(|&snr| SweepPoint {
            snr,
            samples: Vec::with_capacity(cfg.realizations),
            mean_accuracy: 0.0,
            ci_half_width: 0.0,
        })
        .collect();
    // Aggregation is order-independent: samples land at their grid slot
    // and are sorted by realization seed derivation order.
    let mut buckets: Vec<Vec<TrialSample>> = vec![Vec::new(); cfg.snr_grid.len()];
    for (si, s) in samples {
        buckets[si].push(s);
    }
    for (si, mut bucket) in buckets.into_iter().enumerate() {
        bucket.sort_by_key(|s| s.seed);
        let (mean, hw) = mean_and_ci(&bucket.iter().map(|s| s.accuracy).collect::<Vec<_>>());
        points[si].samples = bucket;
        points[si].mean_accuracy = mean;
        points[si].ci_half_width = hw;
    }
    Ok(SweepResult {
        points,
        realizations: cfg.realizations,
    })
}

fn mean_and_ci(samples: &[f64]) -> (f64, f64) {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    let hw = Z_99 * var.sqrt() / n.sqrt();
    // clip so mean +/- hw stays within [0, 1]
    let hw = hw.min(mean).min(1.0 - mean).max(0.0);
    (mean, hw)
}

/// Canonical sweep CSV: `snr,mean_accuracy,ci_half_width,realizations`.
pub fn sweep_csv(result: &SweepResult) -> String {
    let mut out = String::from("snr,mean_accuracy,ci_half_width,realizations\n");
    for p in &result.points {
        out.push_str(&format!(
            "{},{},{},{}\n",
            p.snr, p.mean_accuracy, p.ci_half_width, result.realizations
        ));
    }
    out
}

/// Optional per-trial detail CSV:
/// `snr,seed,accuracy,total_cost,ambiguous`.
pub fn sweep_detail_csv(result: &SweepResult) -> String {
    let mut out = String::from("snr,seed,accuracy,total_cost,ambiguous\n");
    for p in &result.points {
        for s in &p.samples {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                p.snr, s.seed, s.accuracy, s.total_cost, s.ambiguous
            ));
        }
    }
    out
}

/// Spearman rank correlation with average ranks for ties.
pub fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let rx = average_ranks(xs);
    let ry = average_ranks(ys);
    let n = rx.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut vx = 0.0;
    let mut vy = 0.0;
    for i in 0..rx.len() {
        let dx = rx[i] - mx;
        let dy = ry[i] - my;
        cov += dx * dy;
        vx += dx * dx;
        vy += dy * dy;
    }
    if vx == 0.0 || vy == 0.0 {
        return 0.0;
    }
    cov / (vx * vy).sqrt()
}

fn average_ranks(xs: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]));
    let mut ranks = vec![0.0; xs.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && xs[order[j + 1]] == xs[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = avg;
        }
        i = j + 1;
    }
    ranks
}

// --- figure presets ---------------------------------------------------------

/// One curve of a preset figure.
#[derive(Debug, Clone)]
pub struct CurveSpec {
    pub label: String,
    pub kind: LayoutKind,
    pub params: LayoutParams,
    pub eigenvectors: EigenvectorChoice,
    pub alignment: AlignmentMode,
}

/// A named experiment preset: one or more curves over a common grid.
#[derive(Debug, Clone)]
pub struct Preset {
    pub name: String,
    pub description: String,
    pub curves: Vec<CurveSpec>,
    pub snr_grid: Vec<f64>,
    pub realizations: usize,
}

fn curve(
    label: &str,
    kind: LayoutKind,
    shift: f64,
    eigenvectors: EigenvectorChoice,
    alignment: AlignmentMode,
) -> CurveSpec {
    CurveSpec {
        label: label.to_string(),
        kind,
        params: LayoutParams { count: None, shift },
        eigenvectors,
        alignment,
    }
}

/// The five preset experiments. Symmetric lattice curves use anchor
/// alignment (one known node) because their orientations genuinely tie;
/// the factory curve uses the plain orientation search.
pub fn figure_recipes() -> Vec<Preset> {
    let fixed = |v: &[usize]| EigenvectorChoice::Fixed(v.to_vec());
    vec![
        Preset {
            name: "fig1".into(),
            description: "58-position factory floor, auto eigenvectors, orientation search".into(),
            curves: vec![curve(
                "factory",
                LayoutKind::Factory,
                0.0,
                EigenvectorChoice::auto(),
                AlignmentMode::OrientationSearch,
            )],
            snr_grid: default_snr_grid(),
            realizations: 100,
        },
        Preset {
            name: "fig2".into(),
            description: "Artificial 2D scenarios: grid, random, uniform and random biaxial".into(),
            curves: vec![
                curve("grid2d", LayoutKind::Grid2d, 0.0, fixed(&[1, 2]), AlignmentMode::AutoAnchor),
                curve(
                    "random2d",
                    LayoutKind::Random2d,
                    0.0,
                    fixed(&[1, 2]),
                    AlignmentMode::AutoAnchor,
                ),
                curve(
                    "biaxial_uniform",
                    LayoutKind::BiaxialUniform,
                    0.0,
                    fixed(&[1, 2]),
                    AlignmentMode::AutoAnchor,
                ),
                curve(
                    "biaxial_random",
                    LayoutKind::BiaxialRandom,
                    0.0,
                    fixed(&[1, 2]),
                    AlignmentMode::AutoAnchor,
                ),
            ],
            snr_grid: default_snr_grid(),
            realizations: 100,
        },
        Preset {
            name: "fig3".into(),
            description: "Unshifted 40-position strip: harmonic eigenvectors hide the short axis"
                .into(),
            curves: vec![
                curve("ev123", LayoutKind::Strip, 0.0, fixed(&[1, 2, 3]), AlignmentMode::AutoAnchor),
                curve("ev14", LayoutKind::Strip, 0.0, fixed(&[1, 4]), AlignmentMode::AutoAnchor),
                curve(
                    "ev1234",
                    LayoutKind::Strip,
                    0.0,
                    fixed(&[1, 2, 3, 4]),
                    AlignmentMode::AutoAnchor,
                ),
            ],
            snr_grid: default_snr_grid(),
            realizations: 100,
        },
        Preset {
            name: "fig4".into(),
            description: "Strip with a shifted row (0.01 and 0.5 lattice units)".into(),
            curves: vec![
                curve("shift0.01_ev1", LayoutKind::Strip, 0.01, fixed(&[1]), AlignmentMode::AutoAnchor),
                curve("shift0.01_ev14", LayoutKind::Strip, 0.01, fixed(&[1, 4]), AlignmentMode::AutoAnchor),
                curve("shift0.5_ev1", LayoutKind::Strip, 0.5, fixed(&[1]), AlignmentMode::AutoAnchor),
                curve("shift0.5_ev14", LayoutKind::Strip, 0.5, fixed(&[1, 4]), AlignmentMode::AutoAnchor),
            ],
            snr_grid: default_snr_grid(),
            realizations: 100,
        },
        Preset {
            name: "fig5".into(),
            description: "120 positions in 3D: grid and random, first three eigenvectors".into(),
            curves: vec![
                curve("grid3d", LayoutKind::Grid3d, 0.0, fixed(&[1, 2, 3]), AlignmentMode::AutoAnchor),
                curve("random3d", LayoutKind::Random3d, 0.0, fixed(&[1, 2, 3]), AlignmentMode::AutoAnchor),
            ],
            snr_grid: default_snr_grid(),
            realizations: 100,
        },
    ]
}

pub fn preset(name: &str) -> Result<Preset> {
    figure_recipes()
        .into_iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))
}

/// Expands a preset into concrete per-curve sweep configurations. The
/// propagation model is calibrated per layout (mean RSSI centered on 0
/// dBm) and the ground truth is a seed-derived random permutation.
pub fn build_sweep_configs(preset: &Preset, master_seed: u64) -> Result<Vec<(String, SweepConfig)>> {
    let mut out = Vec::new();
    for (ci, c) in preset.curves.iter().enumerate() {
        let layout_seed = derive_seed(master_seed, 1_000 + ci as u64, 0);
        let layout = generate_layout(c.kind, &c.params, layout_seed)?;
        let truth = GroundTruth::random(layout.len(), derive_seed(master_seed, 2_000 + ci as u64, 0));
        let model = PropagationModel::calibrated(&pairwise_distances(&layout))?;
        out.push((
            c.label.clone(),
            SweepConfig {
                layout,
                truth,
                model,
                eigenvectors: c.eigenvectors.clone(),
                alignment: c.alignment,
                snr_grid: preset.snr_grid.clone(),
                realizations: preset.realizations,
                master_seed: derive_seed(master_seed, 3_000 + ci as u64, 0),
            },
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn dummy_assignment(pairs: Vec<usize>) -> Assignment {
        let n = pairs.len();
        Assignment {
            pairs,
            pair_costs: vec![0.0; n],
            total_cost: 0.0,
            orientation: vec![1, 1],
            ambiguous: false,
            tied_orientations: Vec::new(),
        }
    }

    #[test]
    fn accuracy_perfect_and_partial() {
        let truth = GroundTruth::identity(4);
        assert_eq!(
            accuracy(&dummy_assignment(vec![0, 1, 2, 3]), &truth).unwrap(),
            1.0
        );
        // nodes 0 and 1 swapped: 2 of 4 correct
        assert_eq!(
            accuracy(&dummy_assignment(vec![1, 0, 2, 3]), &truth).unwrap(),
            0.5
        );
        assert!(accuracy(&dummy_assignment(vec![0, 1, 2]), &truth).is_err());
    }

    #[test]
    fn random_permutation_accuracy_approaches_one_over_m() {
        // expected number of fixed points of a uniform permutation is 1
        let m = 50;
        let truth = GroundTruth::identity(m);
        let trials = 4000;
        let mut sum = 0.0;
        for seed in 0..trials {
            let perm = GroundTruth::random(m, seed as u64);
            sum += accuracy(&dummy_assignment(perm.permutation().to_vec()), &truth).unwrap();
        }
        let mean = sum / trials as f64;
        assert_relative_eq!(mean, 1.0 / m as f64, max_relative = 0.15);
    }

    #[test]
    fn noiseless_trial_is_perfect_and_deterministic() {
        let layout = generate_layout(LayoutKind::Grid2d, &LayoutParams::default(), 0).unwrap();
        let truth = GroundTruth::random(layout.len(), 5);
        let model = PropagationModel::calibrated(&pairwise_distances(&layout)).unwrap();
        let cfg = TrialConfig {
            layout,
            truth,
            model,
            eigenvectors: EigenvectorChoice::auto(),
            alignment: AlignmentMode::AutoAnchor,
            snr: 1e6,
            seed: 9,
        };
        let a = run_trial(&cfg).unwrap();
        assert_eq!(a.accuracy, 1.0);
        let b = run_trial(&cfg).unwrap();
        assert_eq!(a.assignment, b.assignment);
    }

    #[test]
    fn ci_is_zero_for_identical_outcomes() {
        let layout = generate_layout(LayoutKind::Grid2d, &LayoutParams::default(), 0).unwrap();
        let truth = GroundTruth::random(layout.len(), 5);
        let model = PropagationModel::calibrated(&pairwise_distances(&layout)).unwrap();
        let cfg = SweepConfig {
            layout,
            truth,
            model,
            eigenvectors: EigenvectorChoice::Fixed(vec![1, 2]),
            alignment: AlignmentMode::AutoAnchor,
            snr_grid: vec![1e6],
            realizations: 2,
            master_seed: 0,
        };
        let r = run_sweep(&cfg).unwrap();
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.points[0].mean_accuracy, 1.0);
        assert_eq!(r.points[0].ci_half_width, 0.0);
    }

    #[test]
    fn seed_derivation_is_stable_under_grid_growth() {
        for si in 0..5u64 {
            for r in 0..5u64 {
                assert_eq!(derive_seed(7, si, r), derive_seed(7, si, r));
            }
        }
        // distinct inputs give distinct streams
        let mut seen = std::collections::HashSet::new();
        for si in 0..50u64 {
            for r in 0..50u64 {
                assert!(seen.insert(derive_seed(7, si, r)));
            }
        }
    }

    #[test]
    fn sweep_is_deterministic_and_order_independent() {
        let layout = generate_layout(
            LayoutKind::Random2d,
            &LayoutParams { count: Some(30), shift: 0.0 },
            3,
        )
        .unwrap();
        let truth = GroundTruth::random(30, 1);
        let model = PropagationModel::calibrated(&pairwise_distances(&layout)).unwrap();
        let cfg = SweepConfig {
            layout,
            truth,
            model,
            eigenvectors: EigenvectorChoice::Fixed(vec![1, 2]),
            alignment: AlignmentMode::AutoAnchor,
            snr_grid: vec![2.0, 10.0],
            realizations: 8,
            master_seed: 11,
        };
        let a = run_sweep(&cfg).unwrap();
        // different worker count, same result
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| run_sweep(&cfg)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn presets_have_published_sizes() {
        let figs = figure_recipes();
        assert_eq!(figs.len(), 5);
        for p in &figs {
            assert_eq!(p.realizations, 100);
            for (_, cfg) in build_sweep_configs(p, 0).unwrap() {
                let m = cfg.layout.len();
                match p.name.as_str() {
                    "fig1" => assert_eq!(m, 58),
                    "fig2" => assert!(m == 80 || m == 81),
                    "fig3" | "fig4" => assert_eq!(m, 40),
                    "fig5" => assert_eq!(m, 120),
                    other => panic!("unexpected preset {other}"),
                }
            }
        }
        assert_eq!(preset("fig3").unwrap().curves.len(), 3);
        assert!(preset("fig9").is_err());
    }

    #[test]
    fn spearman_handles_ties_and_monotonicity() {
        let xs = [1.0, 2.0, 3.0, 4.0, 5.0];
        assert_relative_eq!(spearman(&xs, &[1.0, 2.0, 3.0, 4.0, 5.0]), 1.0);
        assert_relative_eq!(spearman(&xs, &[5.0, 4.0, 3.0, 2.0, 1.0]), -1.0);
        let with_ties = spearman(&xs, &[1.0, 1.0, 2.0, 2.0, 3.0]);
        assert!(with_ties > 0.9);
    }

    #[test]
    fn csv_shapes() {
        let r = SweepResult {
            points: vec![SweepPoint {
                snr: 5.0,
                samples: vec![TrialSample {
                    seed: 1,
                    accuracy: 0.5,
                    total_cost: 0.1,
                    ambiguous: false,
                }],
                mean_accuracy: 0.5,
                ci_half_width: 0.0,
            }],
            realizations: 1,
        };
        assert_eq!(
            sweep_csv(&r),
            "snr,mean_accuracy,ci_half_width,realizations\n5,0.5,0,1\n"
        );
        assert!(sweep_detail_csv(&r).contains("5,1,0.5,0.1,false"));
    }
}
