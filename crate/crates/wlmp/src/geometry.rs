//! Blueprints, ground truth, and the layout generators used by the
//! simulation harness.
//!
//! All generated layouts live in the unit square / unit cube; physical
//! scale only enters through the channel model's distance units. The
//! factory floor is the one exception: it ships as a fixed data file in
//! meters.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::embedding::MeasurementMatrix;
use crate::error::{Error, Result};

/// The blueprint: `M` labeled candidate positions in 2D or 3D space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PositionSet {
    labels: Vec<String>,
    coords: Vec<Vec<f64>>,
}

impl PositionSet {
    pub fn new(labels: Vec<String>, coords: Vec<Vec<f64>>) -> Result<Self> {
        if labels.len() != coords.len() {
            return Err(Error::InvalidLayout(format!(
                "{} labels but {} coordinate rows",
                labels.len(),
                coords.len()
            )));
        }
        if coords.len() < 2 {
            return Err(Error::InvalidLayout("need at least 2 positions".into()));
        }
        let dim = coords[0].len();
        if dim != 2 && dim != 3 {
            return Err(Error::InvalidLayout(format!(
                "positions must be 2D or 3D, got {dim}D"
            )));
        }
        for (i, c) in coords.iter().enumerate() {
            if c.len() != dim {
                return Err(Error::InvalidLayout(format!(
                    "position {i} has {} coordinates, expected {dim}",
                    c.len()
                )));
            }
            if c.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidLayout(format!(
                    "position {i} has a non-finite coordinate"
                )));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidLayout(format!("duplicate label {l:?}")));
            }
        }
        Ok(Self { labels, coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.coords[0].len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn coords(&self) -> &[Vec<f64>] {
        &self.coords
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i]
    }

    /// Same layout with every coordinate multiplied by `factor`, e.g. to
    /// express a unit-square layout in meters.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            labels: self.labels.clone(),
            coords: self
                .coords
                .iter()
                .map(|p| p.iter().map(|v| v * factor).collect())
                .collect(),
        }
    }
}

/// For each node index `i`, the true position index `pi(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundTruth {
    permutation: Vec<usize>,
}

impl GroundTruth {
    pub fn new(permutation: Vec<usize>) -> Result<Self> {
        let m = permutation.len();
        let mut seen = vec![false; m];
        for &p in &permutation {
            if p >= m || seen[p] {
                return Err(Error::InvalidLayout(
                    "ground truth is not a bijection".into(),
                ));
            }
            seen[p] = true;
        }
        Ok(Self { permutation })
    }

    pub fn identity(m: usize) -> Self {
        Self {
            permutation: (0..m).collect(),
        }
    }

    pub fn random(m: usize, seed: u64) -> Self {
        let mut perm: Vec<usize> = (0..m).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        perm.shuffle(&mut rng);
        Self { permutation: perm }
    }

    pub fn len(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutation.is_empty()
    }

    /// True position index of node `i`.
    pub fn position_of(&self, node: usize) -> usize {
        self.permutation[node]
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }
}

/// Exact Euclidean distances between all pairs of blueprint positions.
pub fn pairwise_distances(ps: &PositionSet) -> MeasurementMatrix {
    let m = ps.len();
    let mut entries = nalgebra::DMatrix::zeros(m, m);
    for i in 0..m {
        for j in (i + 1)..m {
            let d = euclidean(ps.point(i), ps.point(j));
            entries[(i, j)] = d;
            entries[(j, i)] = d;
        }
    }
    MeasurementMatrix::new_unchecked(entries)
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// The layout families used in the experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LayoutKind {
    Factory,
    Grid2d,
    Random2d,
    BiaxialUniform,
    BiaxialRandom,
    Strip,
    Grid3d,
    Random3d,
}

impl LayoutKind {
    pub const ALL: [LayoutKind; 8] = [
        LayoutKind::Factory,
        LayoutKind::Grid2d,
        LayoutKind::Random2d,
        LayoutKind::BiaxialUniform,
        LayoutKind::BiaxialRandom,
        LayoutKind::Strip,
        LayoutKind::Grid3d,
        LayoutKind::Random3d,
    ];

    /// Position count used in the published experiments.
    pub fn default_count(self) -> usize {
        match self {
            LayoutKind::Factory => 58,
            LayoutKind::Grid2d | LayoutKind::Random2d => 80,
            LayoutKind::BiaxialUniform | LayoutKind::BiaxialRandom => 81,
            LayoutKind::Strip => 40,
            LayoutKind::Grid3d | LayoutKind::Random3d => 120,
        }
    }

    pub fn spatial_dim(self) -> usize {
        match self {
            LayoutKind::Grid3d | LayoutKind::Random3d => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for LayoutKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LayoutKind::Factory => "factory",
            LayoutKind::Grid2d => "grid2d",
            LayoutKind::Random2d => "random2d",
            LayoutKind::BiaxialUniform => "biaxial_uniform",
            LayoutKind::BiaxialRandom => "biaxial_random",
            LayoutKind::Strip => "strip",
            LayoutKind::Grid3d => "grid3d",
            LayoutKind::Random3d => "random3d",
        };
        f.write_str(s)
    }
}

impl FromStr for LayoutKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "factory" => Ok(LayoutKind::Factory),
            "grid2d" => Ok(LayoutKind::Grid2d),
            "random2d" => Ok(LayoutKind::Random2d),
            "biaxial_uniform" => Ok(LayoutKind::BiaxialUniform),
            "biaxial_random" => Ok(LayoutKind::BiaxialRandom),
            "strip" => Ok(LayoutKind::Strip),
            "grid3d" => Ok(LayoutKind::Grid3d),
            "random3d" => Ok(LayoutKind::Random3d),
            other => Err(Error::InvalidArgument(format!("unknown layout kind {other:?}"))),
        }
    }
}

/// Parameters for [`generate_layout`]. `count: None` requests the
/// default count of the kind. `shift` is the strip row offset in lattice
/// units (spacing between adjacent columns = 1 lattice unit) and is
/// ignored by every other kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LayoutParams {
    pub count: Option<usize>,
    pub shift: f64,
}

impl Default for LayoutParams {
    fn default() -> Self {
        Self {
            count: None,
            shift: 0.0,
        }
    }
}

/// Deterministically generates a layout; `seed` only matters for the
/// random kinds.
pub fn generate_layout(kind: LayoutKind, params: &LayoutParams, seed: u64) -> Result<PositionSet> {
    let count = params.count.unwrap_or_else(|| kind.default_count());
    match kind {
        LayoutKind::Factory => factory_layout(count),
        LayoutKind::Grid2d => grid2d(count),
        LayoutKind::Random2d => random_box(count, 2, seed),
        LayoutKind::BiaxialUniform => biaxial_uniform(count),
        LayoutKind::BiaxialRandom => biaxial_random(count, seed),
        LayoutKind::Strip => strip(count, params.shift),
        LayoutKind::Grid3d => grid3d(count),
        LayoutKind::Random3d => random_box(count, 3, seed),
    }
}

fn gen_labels(count: usize) -> Vec<String> {
    let width = count.to_string().len();
    (0..count).map(|i| format!("p{i:0width$}")).collect()
}

/// The canonical 58-position factory floor (meters). The coordinates are
/// a plausible approximation of a clustered machine-bank floor plan with
/// aisles, not a reproduction of any published blueprint.
fn factory_layout(count: usize) -> Result<PositionSet> {
    if count != 58 {
        return Err(Error::InvalidLayout(format!(
            "the factory layout is a fixed 58-position floor plan; got count {count}"
        )));
    }
    load_layout_csv_str(include_str!("../assets/factory_58.csv"))
}

/// Factorization r*c = n with r <= c and r as large as possible.
fn most_square_pair(n: usize) -> (usize, usize) {
    let mut best = (1, n);
    let mut r = 1;
    while r * r <= n {
        if n.is_multiple_of(r) {
            best = (r, n / r);
        }
        r += 1;
    }
    best
}

fn most_cubic_triple(n: usize) -> (usize, usize, usize) {
    // Smallest factor first; maximize the minimum dimension, then squareness
    // of the remaining pair.
    let mut best = (1, 1, n);
    let mut a = 1;
    while a * a * a <= n {
        if n.is_multiple_of(a) {
            let (b, c) = most_square_pair(n / a);
            if a >= best.0 {
                best = (a, b, c);
            }
        }
        a += 1;
    }
    best
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

fn grid2d(count: usize) -> Result<PositionSet> {
    let (r, c) = most_square_pair(count);
    if r < 2 {
        return Err(Error::InvalidLayout(format!(
            "count {count} does not factor into a 2D grid"
        )));
    }
    let xs = linspace(0.0, 1.0, c);
    let ys = linspace(0.0, 1.0, r);
    let coords = ys
        .iter()
        .flat_map(|&y| xs.iter().map(move |&x| vec![x, y]))
        .collect();
    PositionSet::new(gen_labels(count), coords)
}

fn grid3d(count: usize) -> Result<PositionSet> {
    let (a, b, c) = most_cubic_triple(count);
    if a < 2 {
        return Err(Error::InvalidLayout(format!(
            "count {count} does not factor into a 3D grid"
        )));
    }
    let xs = linspace(0.0, 1.0, c);
    let ys = linspace(0.0, 1.0, b);
    let zs = linspace(0.0, 1.0, a);
    let coords = zs
        .iter()
        .flat_map(|&z| {
            let xs = &xs;
            ys.iter()
                .flat_map(move |&y| xs.iter().map(move |&x| vec![x, y, z]))
        })
        .collect();
    PositionSet::new(gen_labels(count), coords)
}

fn random_box(count: usize, dim: usize, seed: u64) -> Result<PositionSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords = (0..count)
        .map(|_| (0..dim).map(|_| rng.random::<f64>()).collect())
        .collect();
    PositionSet::new(gen_labels(count), coords)
}

/// `(count+1)/2` points equidistant along the x axis (origin included)
/// plus the matching non-origin points along the y axis: 81 = 41 + 40.
fn biaxial_uniform(count: usize) -> Result<PositionSet> {
    if count < 5 || count.is_multiple_of(2) {
        return Err(Error::InvalidLayout(format!(
            "biaxial_uniform needs an odd count >= 5 (got {count})"
        )));
    }
    // Positive half-axes only, with the y arm at half-spacing offsets.
    // Arms centered on the origin would make the set mirror-symmetric
    // per arm, and equal tick positions on both arms would make it
    // symmetric under the diagonal arm swap; either symmetry leaves the
    // matching fundamentally ambiguous (the swap even forces a
    // degenerate eigenvalue pair).
    let nx = count.div_ceil(2);
    let h = 0.5 / (nx - 1) as f64;
    let mut coords: Vec<Vec<f64>> = linspace(0.0, 0.5, nx)
        .into_iter()
        .map(|x| vec![x, 0.0])
        .collect();
    coords.extend((0..nx - 1).map(|j| vec![0.0, (j as f64 + 0.5) * h]));
    PositionSet::new(gen_labels(count), coords)
}

fn biaxial_random(count: usize, seed: u64) -> Result<PositionSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords = (0..count)
        .map(|_| {
            let t = 0.5 * rng.random::<f64>();
            if rng.random::<bool>() {
                vec![t, 0.0]
            } else {
                vec![0.0, t]
            }
        })
        .collect();
    PositionSet::new(gen_labels(count), coords)
}

/// Two rows of `count/2` columns. The lattice spacing is 1 unit, the
/// second row is offset along the strip by `shift` lattice units, and
/// the whole strip is rescaled so the long axis spans [0, 1].
fn strip(count: usize, shift: f64) -> Result<PositionSet> {
    if count < 4 || !count.is_multiple_of(2) {
        return Err(Error::InvalidLayout(format!(
            "strip needs an even count >= 4 (got {count})"
        )));
    }
    let cols = count / 2;
    let scale = 1.0 / (cols - 1) as f64;
    let mut coords = Vec::with_capacity(count);
    for i in 0..cols {
        coords.push(vec![i as f64 * scale, 0.0]);
    }
    for i in 0..cols {
        coords.push(vec![(i as f64 + shift) * scale, scale]);
    }
    PositionSet::new(gen_labels(count), coords)
}

/// The layout instances exercised by the test suite: every kind at its
/// published count, with strip included at all three row shifts.
pub fn builtin_layouts() -> Vec<(String, PositionSet)> {
    const SEED: u64 = 42;
    let mut out = Vec::new();
    for kind in LayoutKind::ALL {
        if kind == LayoutKind::Strip {
            for shift in [0.0, 0.01, 0.5] {
                let params = LayoutParams {
                    count: None,
                    shift,
                };
                let ps = generate_layout(kind, &params, SEED).expect("builtin layout");
                out.push((format!("strip_shift_{shift}"), ps));
            }
        } else {
            let ps = generate_layout(kind, &LayoutParams::default(), SEED).expect("builtin layout");
            out.push((kind.to_string(), ps));
        }
    }
    out
}

// --- file formats -----------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct JsonPosition {
    label: String,
    coords: Vec<f64>,
}

/// Loads a layout, dispatching on the `.json` extension; everything else
/// is treated as CSV (`label,x,y[,z]`).
pub fn load_layout(path: &Path) -> Result<PositionSet> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        load_layout_json_str(&text)
    } else {
        load_layout_csv_str(&text)
    }
}

pub fn save_layout(ps: &PositionSet, path: &Path) -> Result<()> {
    let text = if path.extension().is_some_and(|e| e == "json") {
        layout_to_json(ps)?
    } else {
        layout_to_csv(ps)
    };
    std::fs::write(path, text)?;
    Ok(())
}

pub fn layout_to_csv(ps: &PositionSet) -> String {
    let header = if ps.dim() == 2 {
        "label,x,y\n"
    } else {
        "label,x,y,z\n"
    };
    let mut out = String::from(header);
    for (label, coords) in ps.labels().iter().zip(ps.coords()) {
        out.push_str(label);
        for v in coords {
            out.push(',');
            out.push_str(&format!("{v}"));
        }
        out.push('\n');
    }
    out
}

pub fn layout_to_json(ps: &PositionSet) -> Result<String> {
    let rows: Vec<JsonPosition> = ps
        .labels()
        .iter()
        .zip(ps.coords())
        .map(|(l, c)| JsonPosition {
            label: l.clone(),
            coords: c.clone(),
        })
        .collect();
    Ok(serde_json::to_string_pretty(&rows)?)
}

pub fn load_layout_json_str(text: &str) -> Result<PositionSet> {
    let rows: Vec<JsonPosition> = serde_json::from_str(text)?;
    let (labels, coords) = rows.into_iter().map(|r| (r.label, r.coords)).unzip();
    PositionSet::new(labels, coords)
}

pub fn load_layout_csv_str(text: &str) -> Result<PositionSet> {
    let mut labels = Vec::new();
    let mut coords: Vec<Vec<f64>> = Vec::new();
    let mut dim: Option<usize> = None;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if idx == 0 {
            if !(line == "label,x,y" || line == "label,x,y,z") {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected header `label,x,y[,z]`, got {line:?}"),
                });
            }
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 && fields.len() != 4 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 3 or 4 fields, got {}", fields.len()),
            });
        }
        let row_dim = fields.len() - 1;
        match dim {
            None => dim = Some(row_dim),
            Some(d) if d != row_dim => {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("mixed dimensionality: {row_dim}D row in a {d}D file"),
                });
            }
            _ => {}
        }
        let label = fields[0].to_string();
        if labels.contains(&label) {
            return Err(Error::Parse {
                line: lineno,
                message: format!("duplicate label {label:?}"),
            });
        }
        let mut point = Vec::with_capacity(row_dim);
        for f in &fields[1..] {
            let v: f64 = f.parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid coordinate {f:?}"),
            })?;
            point.push(v);
        }
        labels.push(label);
        coords.push(point);
    }
    PositionSet::new(labels, coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn ps(coords: Vec<Vec<f64>>) -> PositionSet {
        let labels = gen_labels(coords.len());
        PositionSet::new(labels, coords).unwrap()
    }

    #[test]
    fn pythagorean_pair() {
        let d = pairwise_distances(&ps(vec![vec![0.0, 0.0], vec![3.0, 4.0]]));
        assert_eq!(d.entry(0, 1), 5.0);
        assert_eq!(d.entry(1, 0), 5.0);
        assert_eq!(d.entry(0, 0), 0.0);
        assert_eq!(d.entry(1, 1), 0.0);
    }

    #[test]
    fn distances_match_scalar_oracle() {
        let layout = generate_layout(LayoutKind::Random2d, &LayoutParams {
            count: Some(10),
            shift: 0.0,
        }, 7)
        .unwrap();
        let d = pairwise_distances(&layout);
        for i in 0..10 {
            for j in 0..10 {
                // independent per-entry recomputation
                let expect = layout.point(i)
                    .iter()
                    .zip(layout.point(j))
                    .fold(0.0f64, |acc, (a, b)| acc + (a - b).powi(2))
                    .sqrt();
                assert_relative_eq!(d.entry(i, j), expect, max_relative = 1e-14);
            }
        }
    }

    #[test]
    fn grid80_is_8_by_10() {
        let g = grid2d(80).unwrap();
        assert_eq!(g.len(), 80);
        let xs: std::collections::BTreeSet<String> =
            g.coords().iter().map(|p| format!("{:.9}", p[0])).collect();
        let ys: std::collections::BTreeSet<String> =
            g.coords().iter().map(|p| format!("{:.9}", p[1])).collect();
        assert_eq!(xs.len(), 10);
        assert_eq!(ys.len(), 8);
    }

    #[test]
    fn strip_pairs_differ_only_in_short_axis() {
        let s = strip(40, 0.0).unwrap();
        assert_eq!(s.len(), 40);
        for i in 0..20 {
            let a = s.point(i);
            let b = s.point(i + 20);
            assert_eq!(a[0], b[0]);
            assert!(a[1] != b[1]);
        }
    }

    #[test]
    fn strip_shift_offsets_second_row() {
        let s = strip(40, 0.5).unwrap();
        let spacing = s.point(1)[0] - s.point(0)[0];
        assert_relative_eq!(s.point(20)[0] - s.point(0)[0], 0.5 * spacing, max_relative = 1e-12);
    }

    #[test]
    fn random_layouts_are_seed_deterministic() {
        let p = LayoutParams {
            count: Some(30),
            shift: 0.0,
        };
        let a = generate_layout(LayoutKind::Random2d, &p, 123).unwrap();
        let b = generate_layout(LayoutKind::Random2d, &p, 123).unwrap();
        assert_eq!(a, b);
        let c = generate_layout(LayoutKind::Random2d, &p, 124).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn factory_ships_58_positions() {
        let f = generate_layout(LayoutKind::Factory, &LayoutParams::default(), 0).unwrap();
        assert_eq!(f.len(), 58);
        assert_eq!(f.dim(), 2);
    }

    #[test]
    fn biaxial_uniform_81_splits_41_40() {
        let b = biaxial_uniform(81).unwrap();
        assert_eq!(b.len(), 81);
        let on_x = b.coords().iter().filter(|p| p[1] == 0.0).count();
        let on_y = b.coords().iter().filter(|p| p[0] == 0.0 && p[1] != 0.0).count();
        assert_eq!(on_x, 41);
        assert_eq!(on_y, 40);
    }

    #[test]
    fn default_counts_match_published_experiments() {
        for (kind, count) in [
            (LayoutKind::Factory, 58),
            (LayoutKind::Grid2d, 80),
            (LayoutKind::Random2d, 80),
            (LayoutKind::BiaxialUniform, 81),
            (LayoutKind::BiaxialRandom, 81),
            (LayoutKind::Strip, 40),
            (LayoutKind::Grid3d, 120),
            (LayoutKind::Random3d, 120),
        ] {
            let ps = generate_layout(kind, &LayoutParams::default(), 1).unwrap();
            assert_eq!(ps.len(), count, "{kind}");
        }
    }

    #[test]
    fn rejects_bad_counts() {
        assert!(grid2d(7).is_err());
        assert!(strip(41, 0.0).is_err());
        assert!(biaxial_uniform(80).is_err());
        assert!(grid3d(7).is_err());
    }

    #[test]
    fn csv_two_point_roundtrip() {
        let loaded = load_layout_csv_str("label,x,y\na,0,0\nb,1,0\n").unwrap();
        assert_eq!(loaded.len(), 2);
        assert_eq!(loaded.dim(), 2);
        assert_eq!(loaded.point(1), &[1.0, 0.0]);
    }

    #[test]
    fn save_load_is_identity() {
        let layout = generate_layout(LayoutKind::Random3d, &LayoutParams {
            count: Some(12),
            shift: 0.0,
        }, 5)
        .unwrap();
        let text = layout_to_csv(&layout);
        let back = load_layout_csv_str(&text).unwrap();
        assert_eq!(layout, back);
        let text2 = layout_to_csv(&back);
        assert_eq!(text, text2);

        let json = layout_to_json(&layout).unwrap();
        assert_eq!(load_layout_json_str(&json).unwrap(), layout);
    }

    #[test]
    fn mixed_dimensionality_is_rejected_with_line_number() {
        let err = load_layout_csv_str("label,x,y\na,0,0\nb,1,0,2\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn duplicate_label_is_rejected() {
        assert!(load_layout_csv_str("label,x,y\na,0,0\na,1,0\n").is_err());
    }

    proptest! {
        #[test]
        fn distance_matrix_invariants(seed in 0u64..1000, count in 3usize..20) {
            let layout = generate_layout(
                LayoutKind::Random2d,
                &LayoutParams { count: Some(count), shift: 0.0 },
                seed,
            ).unwrap();
            let d = pairwise_distances(&layout);
            for i in 0..count {
                prop_assert_eq!(d.entry(i, i), 0.0);
                for j in 0..count {
                    prop_assert!(d.entry(i, j) >= 0.0);
                    prop_assert_eq!(d.entry(i, j), d.entry(j, i));
                    for k in 0..count {
                        prop_assert!(d.entry(i, j) <= d.entry(i, k) + d.entry(k, j) + 1e-12);
                    }
                }
            }
        }
    }
}
