//! Log-distance path-loss channel: distance <-> RSSI conversion and
//! Gaussian measurement noise at a prescribed SNR.
//!
//! Noise is always applied in the RSSI (dB) domain, never on distances,
//! so distance errors come out multiplicative (log-normal). The noise
//! standard deviation is `mean(|RSSI|) / SNR` with the mean taken over
//! the off-diagonal pairs. Since RSSI in dBm is a signed quantity whose
//! magnitude depends on the reference power, this convention is what
//! calibrates every SNR axis; see [`PropagationModel::calibrated`] for
//! the variant that centers RSSI values on 0 dBm so that SNR measures
//! noise against the spread of the signal rather than its offset.
//!
//! ```
//! use wlmp::channel::PropagationModel;
//!
//! let model = PropagationModel::new(-40.0, 1.0, 2.0)?;
//! // a decade of distance costs 10 n = 20 dB
//! assert_eq!(model.rssi_from_distance(10.0)?, -60.0);
//! assert!((model.distance_from_rssi(-60.0) - 10.0).abs() < 1e-12);
//! # Ok::<(), wlmp::Error>(())
//! ```
//!
//! Noisy simulated measurements are deterministic given a seed:
//!
//! ```
//! use wlmp::channel::{noisy_distance_matrix, NoiseSpec, PropagationModel};
//! use wlmp::geometry::{generate_layout, pairwise_distances, LayoutKind, LayoutParams};
//!
//! let layout = generate_layout(LayoutKind::Grid2d, &LayoutParams::default(), 0)?;
//! let truth = pairwise_distances(&layout);
//! let model = PropagationModel::calibrated(&truth)?;
//! let noisy = noisy_distance_matrix(&truth, &model, &NoiseSpec::new(20.0, 7)?)?;
//! assert_eq!(noisy.len(), truth.len());
//! // same seed, same matrix
//! let again = noisy_distance_matrix(&truth, &model, &NoiseSpec::new(20.0, 7)?)?;
//! assert_eq!(noisy.entry(0, 1), again.entry(0, 1));
//! # Ok::<(), wlmp::Error>(())
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::embedding::MeasurementMatrix;
use crate::error::{Error, Result};

/// Log-distance path-loss model:
/// `RSSI(d) = ref_power - 10 * exponent * log10(d / ref_distance)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PropagationModel {
    /// RSSI at the reference distance, dBm.
    pub ref_power_dbm: f64,
    /// Reference distance, meters.
    pub ref_distance_m: f64,
    /// Path-loss exponent (2.0 = free space).
    pub path_loss_exponent: f64,
}

impl Default for PropagationModel {
    fn default() -> Self {
        Self {
            ref_power_dbm: -40.0,
            ref_distance_m: 1.0,
            path_loss_exponent: 2.0,
        }
    }
}

impl PropagationModel {
    pub fn new(ref_power_dbm: f64, ref_distance_m: f64, path_loss_exponent: f64) -> Result<Self> {
        if ref_distance_m <= 0.0 || ref_distance_m.is_nan() {
            return Err(Error::InvalidArgument(format!(
                "reference distance must be positive, got {ref_distance_m}"
            )));
        }
        if path_loss_exponent <= 0.0 || path_loss_exponent.is_nan() {
            return Err(Error::InvalidArgument(format!(
                "path-loss exponent must be positive, got {path_loss_exponent}"
            )));
        }
        Ok(Self {
            ref_power_dbm,
            ref_distance_m,
            path_loss_exponent,
        })
    }

    /// Default model with `ref_power` re-centered so that the mean RSSI
    /// over the off-diagonal entries of `truth` is 0 dBm. With this
    /// model `mean(|RSSI|)` equals the mean absolute deviation of the
    /// path loss, which is invariant under uniform rescaling of the
    /// layout, so the SNR axis becomes a pure property of the geometry.
    pub fn calibrated(truth: &MeasurementMatrix) -> Result<Self> {
        let base = Self::default();
        let m = truth.len();
        let mut sum = 0.0;
        let mut count = 0usize;
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    let d = truth.entry(i, j);
                    if d <= 0.0 {
                        return Err(Error::CoincidentNodes { a: i, b: j });
                    }
                    sum += base.rssi_from_distance(d)?;
                    count += 1;
                }
            }
        }
        let mean = sum / count as f64;
        Ok(Self {
            ref_power_dbm: base.ref_power_dbm - mean,
            ..base
        })
    }

    pub fn rssi_from_distance(&self, d: f64) -> Result<f64> {
        if d <= 0.0 || d.is_nan() {
            return Err(Error::InvalidArgument(format!(
                "distance must be positive, got {d}"
            )));
        }
        Ok(self.ref_power_dbm
            - 10.0 * self.path_loss_exponent * (d / self.ref_distance_m).log10())
    }

    /// Exact inverse of [`Self::rssi_from_distance`]; always yields a
    /// positive distance, absorbing noise-driven RSSI overshoot.
    pub fn distance_from_rssi(&self, rssi: f64) -> f64 {
        self.ref_distance_m
            * 10f64.powf((self.ref_power_dbm - rssi) / (10.0 * self.path_loss_exponent))
    }
}

/// How a pairwise measurement is sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum PairSampling {
    /// One Gaussian draw per unordered pair; both directions share it.
    #[default]
    SingleDraw,
    /// Two independent directional draws, averaged.
    AveragedDirectional,
}

/// Noise injection parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    /// Signal mean over noise standard deviation, in the RSSI domain.
    pub snr: f64,
    pub seed: u64,
    pub sampling: PairSampling,
}

impl NoiseSpec {
    pub fn new(snr: f64, seed: u64) -> Result<Self> {
        if snr <= 0.0 || snr.is_nan() {
            return Err(Error::InvalidArgument(format!(
                "SNR must be positive, got {snr}"
            )));
        }
        Ok(Self {
            snr,
            seed,
            sampling: PairSampling::SingleDraw,
        })
    }
}

/// Converts true distances to RSSI, injects Gaussian noise with
/// `sigma = mean(|RSSI|) / snr`, and converts back. The output stays
/// symmetric with zero diagonal and is deterministic per seed.
pub fn noisy_distance_matrix(
    truth: &MeasurementMatrix,
    model: &PropagationModel,
    ns: &NoiseSpec,
) -> Result<MeasurementMatrix> {
    let m = truth.len();
    let mut rssi = nalgebra::DMatrix::zeros(m, m);
    let mut abs_sum = 0.0;
    for i in 0..m {
        for j in (i + 1)..m {
            let d = truth.entry(i, j);
            if d <= 0.0 {
                return Err(Error::CoincidentNodes { a: i, b: j });
            }
            let r = model.rssi_from_distance(d)?;
            rssi[(i, j)] = r;
            abs_sum += r.abs();
        }
    }
    let pair_count = m * (m - 1) / 2;
    let sigma = abs_sum / pair_count as f64 / ns.snr;

    let mut rng = ChaCha8Rng::seed_from_u64(ns.seed);
    let normal = Normal::new(0.0, sigma).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let mut out = nalgebra::DMatrix::zeros(m, m);
    for i in 0..m {
        for j in (i + 1)..m {
            let noise = match ns.sampling {
                PairSampling::SingleDraw => normal.sample(&mut rng),
                PairSampling::AveragedDirectional => {
                    0.5 * (normal.sample(&mut rng) + normal.sample(&mut rng))
                }
            };
            let d = model.distance_from_rssi(rssi[(i, j)] + noise);
            out[(i, j)] = d;
            out[(j, i)] = d;
        }
    }
    Ok(MeasurementMatrix::new_unchecked(out))
}

/// The noise standard deviation that [`noisy_distance_matrix`] would use,
/// exposed for diagnostics.
pub fn noise_sigma(truth: &MeasurementMatrix, model: &PropagationModel, snr: f64) -> Result<f64> {
    let m = truth.len();
    let mut abs_sum = 0.0;
    for i in 0..m {
        for j in (i + 1)..m {
            abs_sum += model.rssi_from_distance(truth.entry(i, j))?.abs();
        }
    }
    Ok(abs_sum / (m * (m - 1) / 2) as f64 / snr)
}

/// One measured RSSI value between two labeled nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct RssiRecord {
    pub node_a: String,
    pub node_b: String,
    pub rssi_dbm: f64,
}

/// Parses a measurement CSV (`node_a,node_b,rssi_dbm`).
pub fn parse_rssi_csv(text: &str) -> Result<Vec<RssiRecord>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if idx == 0 {
            if line != "node_a,node_b,rssi_dbm" {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected header `node_a,node_b,rssi_dbm`, got {line:?}"),
                });
            }
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 3 fields, got {}", fields.len()),
            });
        }
        let rssi_dbm: f64 = fields[2].parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("invalid RSSI {:?}", fields[2]),
        })?;
        out.push(RssiRecord {
            node_a: fields[0].to_string(),
            node_b: fields[1].to_string(),
            rssi_dbm,
        });
    }
    Ok(out)
}

/// Assembles a dense distance matrix from real measurements. `labels`
/// fixes the node index order. Either direction of a pair may appear;
/// when both do, the two RSSI values are averaged. Any missing pair is
/// an error: the pipeline needs a dense matrix.
pub fn distance_matrix_from_rssi(
    records: &[RssiRecord],
    labels: &[String],
    model: &PropagationModel,
) -> Result<MeasurementMatrix> {
    let m = labels.len();
    let index: std::collections::HashMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut sums = vec![vec![(0.0f64, 0usize); m]; m];
    for rec in records {
        let a = *index
            .get(rec.node_a.as_str())
            .ok_or_else(|| Error::UnknownLabel(rec.node_a.clone()))?;
        let b = *index
            .get(rec.node_b.as_str())
            .ok_or_else(|| Error::UnknownLabel(rec.node_b.clone()))?;
        if a == b {
            continue;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        sums[lo][hi].0 += rec.rssi_dbm;
        sums[lo][hi].1 += 1;
    }
    let mut entries = nalgebra::DMatrix::zeros(m, m);
    for i in 0..m {
        for j in (i + 1)..m {
            let (sum, count) = sums[i][j];
            if count == 0 {
                return Err(Error::MissingPair {
                    a: labels[i].clone(),
                    b: labels[j].clone(),
                });
            }
            let d = model.distance_from_rssi(sum / count as f64);
            entries[(i, j)] = d;
            entries[(j, i)] = d;
        }
    }
    Ok(MeasurementMatrix::new_unchecked(entries))
}

/// Noiseless synthetic measurement CSV for a set of node distances.
pub fn rssi_csv_from_distances(
    truth: &MeasurementMatrix,
    labels: &[String],
    model: &PropagationModel,
) -> Result<String> {
    let m = truth.len();
    let mut out = String::from("node_a,node_b,rssi_dbm\n");
    for i in 0..m {
        for j in (i + 1)..m {
            let r = model.rssi_from_distance(truth.entry(i, j))?;
            out.push_str(&format!("{},{},{r}\n", labels[i], labels[j]));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{self, generate_layout, LayoutKind, LayoutParams};
    use approx::assert_relative_eq;

    fn truth_matrix(count: usize, seed: u64) -> MeasurementMatrix {
        let ps = generate_layout(
            LayoutKind::Random2d,
            &LayoutParams { count: Some(count), shift: 0.0 },
            seed,
        )
        .unwrap();
        geometry::pairwise_distances(&ps)
    }

    #[test]
    fn rssi_at_reference_distance_is_reference_power() {
        let m = PropagationModel::default();
        assert_eq!(m.rssi_from_distance(1.0).unwrap(), -40.0);
    }

    #[test]
    fn rssi_decade_drop() {
        let m = PropagationModel::default();
        assert_relative_eq!(m.rssi_from_distance(10.0).unwrap(), -60.0, max_relative = 1e-14);
    }

    #[test]
    fn rssi_is_strictly_decreasing() {
        let m = PropagationModel::default();
        let mut prev = f64::INFINITY;
        for d in [0.01, 0.1, 0.5, 1.0, 3.0, 10.0, 100.0] {
            let r = m.rssi_from_distance(d).unwrap();
            assert!(r < prev);
            prev = r;
        }
        assert!(m.rssi_from_distance(0.0).is_err());
        assert!(m.rssi_from_distance(-1.0).is_err());
    }

    #[test]
    fn rssi_roundtrip_is_exact() {
        let m = PropagationModel::new(-30.0, 2.0, 2.7).unwrap();
        for d in [0.03, 0.8, 1.0, 5.0, 123.0] {
            let back = m.distance_from_rssi(m.rssi_from_distance(d).unwrap());
            assert_relative_eq!(back, d, max_relative = 1e-12);
        }
        assert_relative_eq!(m.distance_from_rssi(-30.0), 2.0, max_relative = 1e-14);
    }

    #[test]
    fn inverse_decade() {
        let m = PropagationModel::default();
        assert_relative_eq!(m.distance_from_rssi(-60.0), 10.0, max_relative = 1e-12);
    }

    #[test]
    fn calibrated_model_centers_rssi() {
        let truth = truth_matrix(20, 4);
        let m = PropagationModel::calibrated(&truth).unwrap();
        let mut sum = 0.0;
        let mut count = 0;
        for i in 0..20 {
            for j in 0..20 {
                if i != j {
                    sum += m.rssi_from_distance(truth.entry(i, j)).unwrap();
                    count += 1;
                }
            }
        }
        assert_relative_eq!(sum / count as f64, 0.0, epsilon = 1e-9);
    }

    #[test]
    fn huge_snr_recovers_truth() {
        let truth = truth_matrix(15, 8);
        let model = PropagationModel::default();
        let ns = NoiseSpec::new(1e12, 1).unwrap();
        let noisy = noisy_distance_matrix(&truth, &model, &ns).unwrap();
        for i in 0..15 {
            for j in 0..15 {
                assert!((noisy.entry(i, j) - truth.entry(i, j)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn fixed_seed_is_deterministic() {
        let truth = truth_matrix(15, 8);
        let model = PropagationModel::default();
        let ns = NoiseSpec::new(5.0, 33).unwrap();
        let a = noisy_distance_matrix(&truth, &model, &ns).unwrap();
        let b = noisy_distance_matrix(&truth, &model, &ns).unwrap();
        assert_eq!(a, b);
        let c = noisy_distance_matrix(&truth, &model, &NoiseSpec::new(5.0, 34).unwrap()).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn output_stays_symmetric_zero_diagonal_positive() {
        let truth = truth_matrix(20, 2);
        let model = PropagationModel::default();
        let mut ns = NoiseSpec::new(2.0, 7).unwrap();
        ns.sampling = PairSampling::AveragedDirectional;
        let noisy = noisy_distance_matrix(&truth, &model, &ns).unwrap();
        for i in 0..20 {
            assert_eq!(noisy.entry(i, i), 0.0);
            for j in 0..20 {
                assert_eq!(noisy.entry(i, j), noisy.entry(j, i));
                if i != j {
                    assert!(noisy.entry(i, j) > 0.0);
                }
            }
        }
    }

    #[test]
    fn coincident_nodes_are_rejected() {
        let entries = nalgebra::DMatrix::from_row_slice(3, 3, &[
            0.0, 0.0, 1.0, //
            0.0, 0.0, 1.0, //
            1.0, 1.0, 0.0,
        ]);
        let truth = MeasurementMatrix::new(entries).unwrap();
        let model = PropagationModel::default();
        let ns = NoiseSpec::new(5.0, 0).unwrap();
        assert!(matches!(
            noisy_distance_matrix(&truth, &model, &ns),
            Err(Error::CoincidentNodes { .. })
        ));
    }

    #[test]
    fn empirical_noise_std_matches_sigma() {
        // ~125k pairs across many seeds; the empirical std of the RSSI
        // perturbation must sit within 2% of the configured sigma.
        let truth = truth_matrix(50, 3);
        let model = PropagationModel::default();
        let snr = 5.0;
        let sigma = noise_sigma(&truth, &model, snr).unwrap();
        let mut sq_sum = 0.0;
        let mut count = 0usize;
        for seed in 0..102 {
            let ns = NoiseSpec::new(snr, seed).unwrap();
            let noisy = noisy_distance_matrix(&truth, &model, &ns).unwrap();
            for i in 0..50 {
                for j in (i + 1)..50 {
                    let clean = model.rssi_from_distance(truth.entry(i, j)).unwrap();
                    let pert = model.rssi_from_distance(noisy.entry(i, j)).unwrap() - clean;
                    sq_sum += pert * pert;
                    count += 1;
                }
            }
        }
        let empirical = (sq_sum / count as f64).sqrt();
        assert_relative_eq!(empirical, sigma, max_relative = 0.02);
    }

    #[test]
    fn distance_errors_are_log_normal_not_additive() {
        // skewness of log-ratios must vanish
        let truth = truth_matrix(40, 9);
        let model = PropagationModel::default();
        let mut ratios = Vec::new();
        for seed in 0..50 {
            let ns = NoiseSpec::new(3.0, seed).unwrap();
            let noisy = noisy_distance_matrix(&truth, &model, &ns).unwrap();
            for i in 0..40 {
                for j in (i + 1)..40 {
                    ratios.push((noisy.entry(i, j) / truth.entry(i, j)).ln());
                }
            }
        }
        let n = ratios.len() as f64;
        let mean = ratios.iter().sum::<f64>() / n;
        let var = ratios.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / n;
        let skew = ratios.iter().map(|r| (r - mean).powi(3)).sum::<f64>() / n / var.powf(1.5);
        assert!(skew.abs() < 0.05, "skewness {skew}");
    }

    #[test]
    fn rssi_csv_roundtrip() {
        let ps = generate_layout(
            LayoutKind::Random2d,
            &LayoutParams { count: Some(8), shift: 0.0 },
            5,
        )
        .unwrap();
        let truth = geometry::pairwise_distances(&ps);
        let model = PropagationModel::default();
        let csv = rssi_csv_from_distances(&truth, ps.labels(), &model).unwrap();
        let records = parse_rssi_csv(&csv).unwrap();
        let back = distance_matrix_from_rssi(&records, ps.labels(), &model).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                assert_relative_eq!(back.entry(i, j), truth.entry(i, j), max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn missing_pair_and_unknown_label_are_distinct_errors() {
        let labels: Vec<String> = ["a", "b", "c"].map(String::from).to_vec();
        let model = PropagationModel::default();
        let records = vec![RssiRecord {
            node_a: "a".into(),
            node_b: "b".into(),
            rssi_dbm: -50.0,
        }];
        assert!(matches!(
            distance_matrix_from_rssi(&records, &labels, &model),
            Err(Error::MissingPair { .. })
        ));
        let records = vec![RssiRecord {
            node_a: "a".into(),
            node_b: "zzz".into(),
            rssi_dbm: -50.0,
        }];
        assert!(matches!(
            distance_matrix_from_rssi(&records, &labels, &model),
            Err(Error::UnknownLabel(_))
        ));
    }
}
