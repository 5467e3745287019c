//! Diffusion-map coordinates from a pairwise distance matrix.
//!
//! The pipeline is: Gaussian kernel similarity with the self-tuned
//! bandwidth `sigma^2 = mean of squared distances`, then the random-walk
//! normalized Laplacian, then an eigendecomposition whose non-trivial
//! eigenvectors become the embedding coordinates.
//!
//! The eigensolve runs on the symmetric conjugate
//! `I - G^{-1/2} C G^{-1/2}` (G = diagonal degree matrix) and the
//! eigenvectors are de-conjugated back to the random-walk convention, so
//! eigenvalues are real and non-negative by construction. Dense
//! decomposition over all M eigenpairs is intended for M <= 2000; larger
//! problems would want a partial (k smallest) solver.
//!
//! ```
//! use wlmp::embedding::{decompose, embed};
//! use wlmp::geometry::{generate_layout, pairwise_distances, LayoutKind, LayoutParams};
//!
//! let layout = generate_layout(LayoutKind::Grid2d, &LayoutParams::default(), 0)?;
//! let d = pairwise_distances(&layout);
//!
//! let spectrum = decompose(&d)?;
//! assert_eq!(spectrum.near_zero_count(), 1);   // connected graph
//! assert!(spectrum.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
//!
//! // eigenvectors 1 and 2 recover the two spatial axes of the grid
//! let coords = embed(&d, &[1, 2])?;
//! assert_eq!((coords.rows(), coords.k()), (layout.len(), 2));
//! # Ok::<(), wlmp::Error>(())
//! ```

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Symmetric M x M matrix of pairwise distances with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementMatrix {
    entries: DMatrix<f64>,
}

impl MeasurementMatrix {
    pub fn new(entries: DMatrix<f64>) -> Result<Self> {
        if entries.nrows() != entries.ncols() {
            return Err(Error::ShapeMismatch(format!(
                "distance matrix must be square, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        let m = entries.nrows();
        for i in 0..m {
            if entries[(i, i)] != 0.0 {
                return Err(Error::DegenerateInput(format!(
                    "nonzero diagonal entry at ({i}, {i})"
                )));
            }
            for j in 0..m {
                let v = entries[(i, j)];
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::DegenerateInput(format!(
                        "entry ({i}, {j}) = {v} is not a valid distance"
                    )));
                }
                if v != entries[(j, i)] {
                    return Err(Error::DegenerateInput(format!(
                        "asymmetry at ({i}, {j}): {v} vs {}",
                        entries[(j, i)]
                    )));
                }
            }
        }
        Ok(Self { entries })
    }

    /// Skips validation; for matrices constructed symmetric by design.
    pub fn new_unchecked(entries: DMatrix<f64>) -> Self {
        debug_assert_eq!(entries.nrows(), entries.ncols());
        Self { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            entries: &self.entries * factor,
        }
    }

    /// Relabels rows and columns: entry (i, j) of the result is the
    /// distance between old indices `perm[i]` and `perm[j]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let m = self.len();
        assert_eq!(perm.len(), m);
        let mut out = DMatrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                out[(i, j)] = self.entries[(perm[i], perm[j])];
            }
        }
        Self { entries: out }
    }
}

/// Dimensionless kernel similarities in [0, 1] with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityMatrix {
    entries: DMatrix<f64>,
}

impl SimilarityMatrix {
    pub fn len(&self) -> usize {
        self.entries.nrows()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.entries
    }
}

/// Full spectrum of the random-walk Laplacian, eigenvalues ascending.
/// Eigenvectors are unit-norm right eigenvectors with a deterministic
/// sign (the largest-magnitude entry is positive).
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    /// Column k is the eigenvector of `eigenvalues[k]`.
    pub eigenvectors: DMatrix<f64>,
    /// True when the second-smallest eigenvalue is also near zero,
    /// i.e. the similarity graph is close to disconnected.
    pub near_disconnected: bool,
}

impl SpectralDecomposition {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Count of eigenvalues below `1e-9 * max |lambda|`.
    pub fn near_zero_count(&self) -> usize {
        let max = self
            .eigenvalues
            .iter()
            .fold(0.0f64, |acc, &v| acc.max(v.abs()));
        let tol = 1e-9 * max;
        self.eigenvalues.iter().filter(|&&v| v < tol).count()
    }
}

/// M x k diffusion coordinates: one row per node/position, one column
/// per selected non-trivial eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    /// Rows are nodes or positions, columns the selected eigenvectors.
    pub coords: DMatrix<f64>,
    /// 1-based indices into the non-trivial eigenvectors, ascending
    /// eigenvalue order (1 = smallest non-zero eigenvalue).
    pub selected_indices: Vec<usize>,
}

impl Embedding {
    pub fn rows(&self) -> usize {
        self.coords.nrows()
    }

    pub fn k(&self) -> usize {
        self.coords.ncols()
    }

    /// Embedded point of row `i`.
    pub fn row(&self, i: usize) -> Vec<f64> {
        self.coords.row(i).iter().copied().collect()
    }

    /// Euclidean distance between rows `i` and `j`.
    pub fn row_distance(&self, i: usize, j: usize) -> f64 {
        let mut acc = 0.0;
        for c in 0..self.k() {
            let d = self.coords[(i, c)] - self.coords[(j, c)];
            acc += d * d;
        }
        acc.sqrt()
    }
}

/// Self-tuned kernel bandwidth: the mean of all M^2 squared distances,
/// diagonal zeros included.
pub fn kernel_bandwidth(d: &MeasurementMatrix) -> Result<f64> {
    let m = d.len() as f64;
    let sum: f64 = d.matrix().iter().map(|v| v * v).sum();
    let sigma2 = sum / (m * m);
    if sigma2 <= 0.0 {
        return Err(Error::DegenerateInput(
            "all distances are zero; kernel bandwidth is undefined".into(),
        ));
    }
    Ok(sigma2)
}

/// Gaussian kernel similarities `exp(-d^2 / sigma2)` off-diagonal, zero
/// on the diagonal.
pub fn similarity(d: &MeasurementMatrix, sigma2: f64) -> Result<SimilarityMatrix> {
    if sigma2 <= 0.0 || sigma2.is_nan() {
        return Err(Error::DegenerateInput(format!(
            "kernel bandwidth must be positive, got {sigma2}"
        )));
    }
    let m = d.len();
    let mut entries = DMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            if i != j {
                let dist = d.entry(i, j);
                entries[(i, j)] = (-(dist * dist) / sigma2).exp();
            }
        }
    }
    Ok(SimilarityMatrix { entries })
}

/// Eigendecomposition of the random-walk normalized Laplacian of the
/// similarity graph.
pub fn normalized_laplacian(c: &SimilarityMatrix) -> Result<SpectralDecomposition> {
    let m = c.len();
    let mut degrees = vec![0.0f64; m];
    for (j, deg) in degrees.iter_mut().enumerate() {
        *deg = c.matrix().column(j).sum();
        if *deg <= 0.0 || deg.is_nan() {
            return Err(Error::Disconnected { node: j });
        }
    }
    let inv_sqrt: Vec<f64> = degrees.iter().map(|g| 1.0 / g.sqrt()).collect();

    // Symmetric conjugate I - G^{-1/2} C G^{-1/2}.
    let mut sym = DMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            let v = -c.entry(i, j) * inv_sqrt[i] * inv_sqrt[j];
            sym[(i, j)] = if i == j { 1.0 + v } else { v };
        }
    }
    // exact symmetry despite rounding
    for i in 0..m {
        for j in (i + 1)..m {
            let v = 0.5 * (sym[(i, j)] + sym[(j, i)]);
            sym[(i, j)] = v;
            sym[(j, i)] = v;
        }
    }

    let eig = sym.symmetric_eigen();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let mut eigenvalues = Vec::with_capacity(m);
    let mut eigenvectors = DMatrix::zeros(m, m);
    for (out_col, &src_col) in order.iter().enumerate() {
        eigenvalues.push(eig.eigenvalues[src_col]);
        // De-conjugate to the random-walk (right eigenvector) convention.
        let mut v = DVector::from_iterator(
            m,
            (0..m).map(|i| eig.eigenvectors[(i, src_col)] * inv_sqrt[i]),
        );
        v /= v.norm();
        canonicalize_sign(&mut v);
        eigenvectors.set_column(out_col, &v);
    }

    let max_abs = eigenvalues.iter().fold(0.0f64, |a, &v| a.max(v.abs()));
    let near_disconnected = m > 1 && eigenvalues[1] < 1e-9 * max_abs;
    if near_disconnected {
        log::warn!(
            "second-smallest Laplacian eigenvalue {} is near zero; the similarity graph is almost disconnected",
            eigenvalues[1]
        );
    }

    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
        near_disconnected,
    })
}

fn canonicalize_sign(v: &mut DVector<f64>) {
    let mut best = 0;
    for i in 1..v.len() {
        if v[i].abs() > v[best].abs() {
            best = i;
        }
    }
    if v[best] < 0.0 {
        let neg = -&*v;
        *v = neg;
    }
}

/// Diffusion coordinates for the 1-based non-trivial eigenvector indices
/// in `selected`. The zero-eigenvalue eigenvector is never included.
pub fn embed(d: &MeasurementMatrix, selected: &[usize]) -> Result<Embedding> {
    let decomp = decompose(d)?;
    embed_from_decomposition(&decomp, selected)
}

/// Full spectral decomposition of a distance matrix (kernel + Laplacian
/// in one step).
pub fn decompose(d: &MeasurementMatrix) -> Result<SpectralDecomposition> {
    let sigma2 = kernel_bandwidth(d)?;
    let c = similarity(d, sigma2)?;
    normalized_laplacian(&c)
}

/// Selects columns out of an existing decomposition, skipping the
/// trivial eigenvector at position 0.
pub fn embed_from_decomposition(
    decomp: &SpectralDecomposition,
    selected: &[usize],
) -> Result<Embedding> {
    let m = decomp.len();
    if selected.is_empty() {
        return Err(Error::InvalidArgument(
            "at least one eigenvector must be selected".into(),
        ));
    }
    let mut coords = DMatrix::zeros(m, selected.len());
    for (col, &idx) in selected.iter().enumerate() {
        if idx == 0 || idx > m - 1 {
            return Err(Error::EigenvectorOutOfRange { index: idx, max: m - 1 });
        }
        coords.set_column(col, &decomp.eigenvectors.column(idx));
    }
    Ok(Embedding {
        coords,
        selected_indices: selected.to_vec(),
    })
}

/// Embedding over the first `kmax` non-trivial eigenvectors, the
/// candidate pool for [`select_eigenvectors`].
pub fn embed_first_k(d: &MeasurementMatrix, kmax: usize) -> Result<Embedding> {
    let selected: Vec<usize> = (1..=kmax).collect();
    embed(d, &selected)
}

/// Outcome of eigenvector selection on a blueprint embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    pub indices: Vec<usize>,
    /// Position index pairs that the selected set cannot separate.
    /// Empty means every position is resolved.
    pub unresolved: Vec<(usize, usize)>,
}

impl Selection {
    pub fn is_resolved(&self) -> bool {
        self.unresolved.is_empty()
    }
}

/// Default relative resolution threshold for [`select_eigenvectors`].
pub const DEFAULT_RESOLUTION: f64 = 0.1;

/// Picks the eigenvector set to match with: starts from `{1..=d}` and
/// appends subsequent eigenvectors until every pair of positions is
/// separated by more than `resolution` times the median nearest-neighbor
/// distance in embedded space, or the candidate pool is exhausted. When
/// unresolved pairs remain at `kmax` the best set is returned together
/// with the colliding pairs.
///
/// The nearest-neighbor scale is taken over the full candidate pool, not
/// the trial subset: in degenerate layouts (paired rows, duplicated
/// positions) the subset scale itself collapses to zero and every
/// collision would pass as "resolved".
///
/// In a two-row strip, eigenvectors 1 to 3 are harmonics of the long
/// axis and leave the rows on top of each other; the selection keeps
/// going until it picks up the short-axis mode at index 4:
///
/// ```
/// use wlmp::embedding::{embed, embed_first_k, select_eigenvectors, DEFAULT_RESOLUTION};
/// use wlmp::geometry::{generate_layout, pairwise_distances, LayoutKind, LayoutParams};
///
/// let strip = generate_layout(LayoutKind::Strip, &LayoutParams::default(), 0)?;
/// let d = pairwise_distances(&strip);
///
/// // rows collapse onto each other without eigenvector 4 ...
/// let flat = embed(&d, &[1, 2, 3])?;
/// assert!(flat.row_distance(0, 20) < 1e-6);
///
/// // ... and the automatic selection notices
/// let candidates = embed_first_k(&d, 8)?;
/// let selection = select_eigenvectors(&candidates, strip.dim(), DEFAULT_RESOLUTION);
/// assert!(selection.indices.contains(&4));
/// assert!(selection.is_resolved());
/// # Ok::<(), wlmp::Error>(())
/// ```
pub fn select_eigenvectors(
    candidates: &Embedding,
    spatial_dim: usize,
    resolution: f64,
) -> Selection {
    let kmax = candidates.k();
    let threshold = resolution * median_nearest_neighbor(candidates, kmax);
    let d = spatial_dim.min(kmax);
    let mut count = d.max(1);
    loop {
        let unresolved = unresolved_pairs(candidates, count, threshold);
        if unresolved.is_empty() || count == kmax {
            return Selection {
                indices: candidates.selected_indices[..count].to_vec(),
                unresolved,
            };
        }
        count += 1;
    }
}

fn subspace_distance(candidates: &Embedding, cols: usize, i: usize, j: usize) -> f64 {
    let mut acc = 0.0;
    for c in 0..cols {
        let d = candidates.coords[(i, c)] - candidates.coords[(j, c)];
        acc += d * d;
    }
    acc.sqrt()
}

fn median_nearest_neighbor(candidates: &Embedding, cols: usize) -> f64 {
    let m = candidates.rows();
    let mut nearest = vec![f64::INFINITY; m];
    for i in 0..m {
        for j in (i + 1)..m {
            let d = subspace_distance(candidates, cols, i, j);
            nearest[i] = nearest[i].min(d);
            nearest[j] = nearest[j].min(d);
        }
    }
    nearest.sort_by(f64::total_cmp);
    if m.is_multiple_of(2) {
        0.5 * (nearest[m / 2 - 1] + nearest[m / 2])
    } else {
        nearest[m / 2]
    }
}

fn unresolved_pairs(candidates: &Embedding, cols: usize, threshold: f64) -> Vec<(usize, usize)> {
    let m = candidates.rows();
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            if subspace_distance(candidates, cols, i, j) <= threshold {
                out.push((i, j));
            }
        }
    }
    out
}

/// Debug CSV dump: one column per eigenvector, first row holds the
/// eigenvalues.
pub fn eigen_dump_csv(decomp: &SpectralDecomposition) -> String {
    let m = decomp.len();
    let mut out = String::new();
    let header: Vec<String> = (0..m).map(|i| format!("ev{i}")).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    let vals: Vec<String> = decomp.eigenvalues.iter().map(|v| format!("{v}")).collect();
    out.push_str(&vals.join(","));
    out.push('\n');
    for row in 0..m {
        let cells: Vec<String> = (0..m)
            .map(|col| format!("{}", decomp.eigenvectors[(row, col)]))
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{self, generate_layout, LayoutKind, LayoutParams};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn mm(rows: &[&[f64]]) -> MeasurementMatrix {
        let m = rows.len();
        let entries = DMatrix::from_fn(m, m, |i, j| rows[i][j]);
        MeasurementMatrix::new(entries).unwrap()
    }

    fn layout_matrix(kind: LayoutKind, count: Option<usize>, shift: f64) -> MeasurementMatrix {
        let ps = generate_layout(kind, &LayoutParams { count, shift }, 42).unwrap();
        geometry::pairwise_distances(&ps)
    }

    #[test]
    fn bandwidth_two_nodes() {
        let d = mm(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert_eq!(kernel_bandwidth(&d).unwrap(), 0.5);
    }

    #[test]
    fn bandwidth_rejects_all_zero() {
        let d = mm(&[&[0.0, 0.0], &[0.0, 0.0]]);
        assert!(kernel_bandwidth(&d).is_err());
    }

    #[test]
    fn bandwidth_is_homogeneous_of_degree_two() {
        let d = layout_matrix(LayoutKind::Random2d, Some(12), 0.0);
        let s1 = kernel_bandwidth(&d).unwrap();
        let s2 = kernel_bandwidth(&d.scaled(3.0)).unwrap();
        assert_relative_eq!(s2, 9.0 * s1, max_relative = 1e-12);
    }

    #[test]
    fn similarity_of_two_nodes_is_exp_minus_two() {
        // With the self-tuned bandwidth sigma2 = d^2/2 the off-diagonal
        // similarity is exp(-2) regardless of d.
        let d = mm(&[&[0.0, 7.3], &[7.3, 0.0]]);
        let sigma2 = kernel_bandwidth(&d).unwrap();
        let c = similarity(&d, sigma2).unwrap();
        assert_relative_eq!(c.entry(0, 1), (-2.0f64).exp(), max_relative = 1e-14);
        assert_eq!(c.entry(0, 0), 0.0);
        assert_eq!(c.entry(1, 1), 0.0);
    }

    #[test]
    fn zero_distance_gives_unit_similarity() {
        let d = mm(&[
            &[0.0, 0.0, 1.0],
            &[0.0, 0.0, 1.0],
            &[1.0, 1.0, 0.0],
        ]);
        let c = similarity(&d, kernel_bandwidth(&d).unwrap()).unwrap();
        assert_eq!(c.entry(0, 1), 1.0);
    }

    #[test]
    fn similarity_is_strictly_monotone_in_distance() {
        let d = layout_matrix(LayoutKind::Random2d, Some(10), 0.0);
        let c = similarity(&d, kernel_bandwidth(&d).unwrap()).unwrap();
        for i in 0..10 {
            for j in 0..10 {
                for k in 0..10 {
                    for l in 0..10 {
                        if i != j && k != l && d.entry(i, j) < d.entry(k, l) {
                            assert!(c.entry(i, j) > c.entry(k, l));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn complete_triangle_spectrum() {
        let d = mm(&[
            &[0.0, 1.0, 1.0],
            &[1.0, 0.0, 1.0],
            &[1.0, 1.0, 0.0],
        ]);
        let c = similarity(&d, kernel_bandwidth(&d).unwrap()).unwrap();
        let dec = normalized_laplacian(&c).unwrap();
        // Equal weights: random-walk Laplacian eigenvalues are {0, 3/2, 3/2}.
        assert_relative_eq!(dec.eigenvalues[0], 0.0, epsilon = 1e-12);
        assert_relative_eq!(dec.eigenvalues[1], 1.5, max_relative = 1e-10);
        assert_relative_eq!(dec.eigenvalues[2], 1.5, max_relative = 1e-10);
    }

    #[test]
    fn trivial_eigenvector_is_constant() {
        let d = layout_matrix(LayoutKind::Random2d, Some(15), 0.0);
        let dec = decompose(&d).unwrap();
        let v0 = dec.eigenvectors.column(0);
        let mean = v0.sum() / 15.0;
        for i in 0..15 {
            assert_relative_eq!(v0[i], mean, max_relative = 1e-8);
        }
    }

    #[test]
    fn exactly_one_zero_eigenvalue_on_connected_graphs() {
        for kind in [LayoutKind::Factory, LayoutKind::Grid2d, LayoutKind::Strip] {
            let d = layout_matrix(kind, None, 0.0);
            let dec = decompose(&d).unwrap();
            assert_eq!(dec.near_zero_count(), 1, "{kind}");
            assert!(!dec.near_disconnected, "{kind}");
        }
    }

    #[test]
    fn eigenpair_residuals_are_small() {
        let d = layout_matrix(LayoutKind::Factory, None, 0.0);
        let sigma2 = kernel_bandwidth(&d).unwrap();
        let c = similarity(&d, sigma2).unwrap();
        let dec = normalized_laplacian(&c).unwrap();
        assert!(max_residual(&c, &dec) <= 1e-8);
    }

    /// ||L v - lambda v|| for the worst eigenpair, with L the random-walk
    /// Laplacian built directly from the similarity matrix.
    pub(crate) fn max_residual(c: &SimilarityMatrix, dec: &SpectralDecomposition) -> f64 {
        let m = c.len();
        let mut l = DMatrix::zeros(m, m);
        for i in 0..m {
            let deg: f64 = c.matrix().row(i).sum();
            for j in 0..m {
                l[(i, j)] = if i == j { 1.0 } else { -c.entry(i, j) / deg };
            }
        }
        let mut worst = 0.0f64;
        for k in 0..m {
            let v = dec.eigenvectors.column(k);
            let r = &l * v - dec.eigenvalues[k] * v;
            worst = worst.max(r.norm());
        }
        worst
    }

    #[test]
    fn embed_two_columns_on_2d_layout() {
        let d = layout_matrix(LayoutKind::Grid2d, None, 0.0);
        let e = embed(&d, &[1, 2]).unwrap();
        assert_eq!(e.rows(), 80);
        assert_eq!(e.k(), 2);
        for col in 0..2 {
            assert_relative_eq!(e.coords.column(col).norm(), 1.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn embed_is_deterministic() {
        let d = layout_matrix(LayoutKind::Random2d, Some(25), 0.0);
        let a = embed(&d, &[1, 2]).unwrap();
        let b = embed(&d, &[1, 2]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn embed_rejects_out_of_range_index() {
        let d = layout_matrix(LayoutKind::Random2d, Some(10), 0.0);
        assert!(matches!(
            embed(&d, &[10]),
            Err(Error::EigenvectorOutOfRange { .. })
        ));
        assert!(embed(&d, &[0]).is_err());
    }

    #[test]
    fn scale_invariance() {
        let d = layout_matrix(LayoutKind::Grid2d, None, 0.0);
        let a = embed(&d, &[1, 2]).unwrap();
        for factor in [2.0, 3.5] {
            let b = embed(&d.scaled(factor), &[1, 2]).unwrap();
            let diff = (&a.coords - &b.coords).abs().max();
            assert!(diff < 1e-10, "factor {factor}: diff {diff}");
        }
    }

    #[test]
    fn relabeling_equivariance() {
        let d = layout_matrix(LayoutKind::Random2d, Some(20), 0.0);
        let perm: Vec<usize> = {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut p: Vec<usize> = (0..20).collect();
            p.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(3));
            p
        };
        let a = embed(&d, &[1, 2]).unwrap();
        let b = embed(&d.permuted(&perm), &[1, 2]).unwrap();
        for col in 0..2 {
            // rows permuted, columns equal up to one global sign
            let mut dot = 0.0;
            for (i, &pi) in perm.iter().enumerate() {
                dot += b.coords[(i, col)] * a.coords[(pi, col)];
            }
            assert_relative_eq!(dot.abs(), 1.0, max_relative = 1e-9);
        }
    }

    #[test]
    fn noisy_free_embeddings_agree_up_to_sign() {
        // Same layout through two routes: direct blueprint distances vs a
        // permuted copy acting as "nodes" measured without noise.
        let d = layout_matrix(LayoutKind::Factory, None, 0.0);
        let p = embed(&d, &[1, 2]).unwrap();
        let n = embed(&d, &[1, 2]).unwrap();
        for col in 0..2 {
            let dot: f64 = (0..58)
                .map(|i| p.coords[(i, col)] * n.coords[(i, col)])
                .sum();
            assert_relative_eq!(dot.abs(), 1.0, max_relative = 1e-10);
        }
    }

    #[test]
    fn selection_on_well_proportioned_grid_is_first_two() {
        let d = layout_matrix(LayoutKind::Grid2d, None, 0.0);
        let cand = embed_first_k(&d, 6).unwrap();
        let sel = select_eigenvectors(&cand, 2, DEFAULT_RESOLUTION);
        assert_eq!(sel.indices, vec![1, 2]);
        assert!(sel.is_resolved());
    }

    #[test]
    fn selection_on_unshifted_strip_includes_fourth() {
        let d = layout_matrix(LayoutKind::Strip, None, 0.0);
        let cand = embed_first_k(&d, 6).unwrap();
        let sel = select_eigenvectors(&cand, 2, DEFAULT_RESOLUTION);
        assert!(sel.indices.contains(&4), "selected {:?}", sel.indices);
        assert!(sel.is_resolved(), "unresolved {:?}", sel.unresolved);
    }

    #[test]
    fn selection_on_3d_grid_is_first_three() {
        let d = layout_matrix(LayoutKind::Grid3d, None, 0.0);
        let cand = embed_first_k(&d, 6).unwrap();
        let sel = select_eigenvectors(&cand, 3, DEFAULT_RESOLUTION);
        assert_eq!(sel.indices, vec![1, 2, 3]);
        assert!(sel.is_resolved());
    }

    #[test]
    fn strip_harmonics_hide_the_short_axis() {
        // Row-paired points get nearly identical values from eigenvector 1
        // while eigenvector 4 separates them.
        let d = layout_matrix(LayoutKind::Strip, None, 0.0);
        let e = embed(&d, &[1, 2, 3, 4]).unwrap();
        for i in 0..20 {
            let gap1 = (e.coords[(i, 0)] - e.coords[(i + 20, 0)]).abs();
            let gap4 = (e.coords[(i, 3)] - e.coords[(i + 20, 3)]).abs();
            assert!(gap1 < 1e-6, "eigenvector 1 gap {gap1} at column {i}");
            assert!(gap4 > 1e-3, "eigenvector 4 gap {gap4} at column {i}");
        }
    }

    #[test]
    fn duplicate_positions_surface_as_unresolved() {
        let d = mm(&[
            &[0.0, 0.0, 1.0, 1.5],
            &[0.0, 0.0, 1.0, 1.5],
            &[1.0, 1.0, 0.0, 1.0],
            &[1.5, 1.5, 1.0, 0.0],
        ]);
        // kmax below M-1: the pool stops short of the high-frequency
        // antisymmetric mode that formally splits exact duplicates.
        let cand = embed_first_k(&d, 2).unwrap();
        let sel = select_eigenvectors(&cand, 2, DEFAULT_RESOLUTION);
        assert!(sel.unresolved.contains(&(0, 1)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn eigenvalues_nonnegative_and_residuals_small(seed in 0u64..500) {
            let ps = generate_layout(
                LayoutKind::Random2d,
                &LayoutParams { count: Some(24), shift: 0.0 },
                seed,
            ).unwrap();
            let d = crate::geometry::pairwise_distances(&ps);
            let sigma2 = kernel_bandwidth(&d).unwrap();
            let c = similarity(&d, sigma2).unwrap();
            let dec = normalized_laplacian(&c).unwrap();
            for &l in &dec.eigenvalues {
                prop_assert!(l >= -1e-9);
            }
            prop_assert_eq!(dec.near_zero_count(), 1);
            prop_assert!(max_residual(&c, &dec) <= 1e-8);
        }
    }
}
