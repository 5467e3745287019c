//! Node-to-position assignment: embedded cost matrices, the Hungarian
//! algorithm, and resolution of the per-axis sign ambiguity left by the
//! eigendecomposition (anchor alignment or exhaustive orientation
//! search).
//!
//! The solver is the O(M^3) augmenting-path variant with row/column
//! potentials. A Ramshaw-Tarjan style O(M^2 sqrt(M) log M) solver would
//! slot in behind [`hungarian`] for very large M; it is not implemented.
//!
//! On noiseless data, orientation search and anchor alignment agree and
//! both recover the hidden permutation exactly:
//!
//! ```
//! use wlmp::embedding::embed;
//! use wlmp::geometry::{generate_layout, pairwise_distances, GroundTruth, LayoutKind, LayoutParams};
//! use wlmp::matching::{match_with_anchor, match_with_orientation_search};
//!
//! let layout = generate_layout(LayoutKind::Random2d, &LayoutParams::default(), 17)?;
//! let d = pairwise_distances(&layout);
//! let positions = embed(&d, &[1, 2])?;
//!
//! // simulate nodes: same geometry, secretly shuffled
//! let truth = GroundTruth::random(layout.len(), 3);
//! let nodes = embed(&d.permuted(truth.permutation()), &[1, 2])?;
//!
//! let searched = match_with_orientation_search(&nodes, &positions)?;
//! let anchored = match_with_anchor(&nodes, &positions, 0, truth.position_of(0))?;
//! assert_eq!(searched.pairs, anchored.pairs);
//! assert!((0..layout.len()).all(|i| searched.pairs[i] == truth.position_of(i)));
//! # Ok::<(), wlmp::Error>(())
//! ```

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::embedding::Embedding;
use crate::error::{Error, Result};

/// Relative cost difference under which two orientations count as tied.
pub const ORIENTATION_TIE_TOLERANCE: f64 = 1e-6;

/// M x M matrix of embedded-space distances between nodes (rows) and
/// positions (columns).
#[derive(Debug, Clone, PartialEq)]
pub struct CostMatrix {
    entries: DMatrix<f64>,
}

impl CostMatrix {
    pub fn new(entries: DMatrix<f64>) -> Result<Self> {
        if entries.nrows() != entries.ncols() {
            return Err(Error::ShapeMismatch(format!(
                "cost matrix must be square, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        if entries.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidArgument(
                "cost matrix entries must be finite and nonnegative".into(),
            ));
        }
        Ok(Self { entries })
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
}

/// A perfect node-to-position matching together with the orientation
/// that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assignment {
    /// `pairs[i]` is the position index assigned to node `i`.
    pub pairs: Vec<usize>,
    pub pair_costs: Vec<f64>,
    pub total_cost: f64,
    /// Per-embedding-column sign applied to the node coordinates.
    pub orientation: Vec<i8>,
    /// True when another orientation's cost was within
    /// [`ORIENTATION_TIE_TOLERANCE`] of the winner (fundamentally
    /// ambiguous layouts such as symmetric lattices).
    pub ambiguous: bool,
    /// The orientations involved in a tie, winner included.
    pub tied_orientations: Vec<Vec<i8>>,
}

impl Assignment {
    /// Permutation cost recomputed from a cost matrix.
    fn from_permutation(e: &CostMatrix, pairs: Vec<usize>, orientation: Vec<i8>) -> Self {
        let pair_costs: Vec<f64> = pairs
            .iter()
            .enumerate()
            .map(|(i, &j)| e.entry(i, j))
            .collect();
        let total_cost = pair_costs.iter().sum();
        Self {
            pairs,
            pair_costs,
            total_cost,
            orientation,
            ambiguous: false,
            tied_orientations: Vec::new(),
        }
    }
}

/// Euclidean distances between sign-adjusted node coordinates and
/// position coordinates: `E[i][j] = ||signs . N_i - P_j||`.
pub fn cost_matrix(n: &Embedding, p: &Embedding, signs: &[i8]) -> Result<CostMatrix> {
    if n.rows() != p.rows() || n.k() != p.k() {
        return Err(Error::ShapeMismatch(format!(
            "node embedding is {}x{} but position embedding is {}x{}",
            n.rows(),
            n.k(),
            p.rows(),
            p.k()
        )));
    }
    if signs.len() != n.k() {
        return Err(Error::ShapeMismatch(format!(
            "{} signs for {} embedding columns",
            signs.len(),
            n.k()
        )));
    }
    let m = n.rows();
    let k = n.k();
    let mut entries = DMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            let mut acc = 0.0;
            for (c, &s) in signs.iter().enumerate().take(k) {
                let d = s as f64 * n.coords[(i, c)] - p.coords[(j, c)];
                acc += d * d;
            }
            entries[(i, j)] = acc.sqrt();
        }
    }
    CostMatrix::new(entries)
}

/// Minimum-total-cost perfect matching. Ties between optimal matchings
/// are broken toward the lexicographically smallest permutation.
pub fn hungarian(e: &CostMatrix) -> Assignment {
    let (pairs, u, v) = solve_lap(&e.entries);
    let pairs = lexicographic_tie_break(&e.entries, pairs, &u, &v);
    Assignment::from_permutation(e, pairs, Vec::new())
}

/// Augmenting-path Hungarian with potentials. Returns the optimal
/// row -> column assignment and the final dual variables.
fn solve_lap(cost: &DMatrix<f64>) -> (Vec<usize>, Vec<f64>, Vec<f64>) {
    let n = cost.nrows();
    let mut u = vec![0.0f64; n]; // row potentials
    let mut v = vec![0.0f64; n + 1]; // column potentials, index n is virtual
    let mut owner: Vec<Option<usize>> = vec![None; n + 1]; // owner[j] = row on column j

    for row in 0..n {
        owner[n] = Some(row);
        let mut j0 = n;
        let mut min_to = vec![f64::INFINITY; n + 1];
        let mut prev = vec![n; n + 1];
        let mut in_tree = vec![false; n + 1];
        loop {
            in_tree[j0] = true;
            let i0 = owner[j0].expect("tree column has an owner");
            let mut delta = f64::INFINITY;
            let mut j1 = n;
            for j in 0..n {
                if !in_tree[j] {
                    let reduced = cost[(i0, j)] - u[i0] - v[j];
                    if reduced < min_to[j] {
                        min_to[j] = reduced;
                        prev[j] = j0;
                    }
                    if min_to[j] < delta {
                        delta = min_to[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if in_tree[j] {
                    u[owner[j].expect("tree column has an owner")] += delta;
                    v[j] -= delta;
                } else {
                    min_to[j] -= delta;
                }
            }
            j0 = j1;
            if owner[j0].is_none() {
                break;
            }
        }
        // Augment along the alternating path.
        while j0 != n {
            let j1 = prev[j0];
            owner[j0] = owner[j1];
            j0 = j1;
        }
    }

    let mut pairs = vec![0usize; n];
    for (j, &o) in owner.iter().take(n).enumerate() {
        if let Some(i) = o {
            pairs[i] = j;
        }
    }
    v.truncate(n);
    (pairs, u, v)
}

/// Every minimum-cost matching uses only edges that are tight under the
/// optimal duals (complementary slackness), so the lexicographically
/// smallest optimum is the lexicographically smallest perfect matching
/// of the tight-edge graph.
fn lexicographic_tie_break(
    cost: &DMatrix<f64>,
    pairs: Vec<usize>,
    u: &[f64],
    v: &[f64],
) -> Vec<usize> {
    let n = cost.nrows();
    let scale = cost.iter().fold(0.0f64, |a, &c| a.max(c.abs()));
    let eps = 1e-9 * (1.0 + scale);
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| cost[(i, j)] - u[i] - v[j] <= eps)
                .collect()
        })
        .collect();
    if adj.iter().all(|a| a.len() <= 1) {
        return pairs; // unique optimum
    }

    let mut result = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for i in 0..n {
        let mut chosen = None;
        for &j in &adj[i] {
            if used[j] {
                continue;
            }
            used[j] = true;
            if can_complete(&adj, &used, i + 1, n) {
                chosen = Some(j);
                break;
            }
            used[j] = false;
        }
        match chosen {
            Some(j) => result[i] = j,
            // Tolerance artifact: fall back to the solver's matching.
            None => return pairs,
        }
    }
    result
}

/// Can rows `from..n` be perfectly matched into unused columns of the
/// tight graph? Kuhn's algorithm.
fn can_complete(adj: &[Vec<usize>], used: &[bool], from: usize, n: usize) -> bool {
    let mut col_owner: Vec<Option<usize>> = vec![None; n];
    fn try_row(
        row: usize,
        adj: &[Vec<usize>],
        used: &[bool],
        visited: &mut [bool],
        col_owner: &mut [Option<usize>],
    ) -> bool {
        for &j in &adj[row] {
            if used[j] || visited[j] {
                continue;
            }
            visited[j] = true;
            if col_owner[j].is_none()
                || try_row(col_owner[j].unwrap(), adj, used, visited, col_owner)
            {
                col_owner[j] = Some(row);
                return true;
            }
        }
        false
    }
    for row in from..n {
        let mut visited = vec![false; n];
        if !try_row(row, adj, used, &mut visited, &mut col_owner) {
            return false;
        }
    }
    true
}

/// Per-column signs that make the known anchor node's coordinates agree
/// in sign with its known position.
pub fn align_with_anchor(
    n: &Embedding,
    p: &Embedding,
    anchor_node: usize,
    anchor_position: usize,
) -> Result<Vec<i8>> {
    if n.k() != p.k() {
        return Err(Error::ShapeMismatch(format!(
            "node embedding has {} columns, position embedding {}",
            n.k(),
            p.k()
        )));
    }
    let mut signs = Vec::with_capacity(n.k());
    for col in 0..n.k() {
        let a = n.coords[(anchor_node, col)];
        let b = p.coords[(anchor_position, col)];
        let floor_n = 1e-6 * n.coords.column(col).abs().max();
        let floor_p = 1e-6 * p.coords.column(col).abs().max();
        if a.abs() <= floor_n || b.abs() <= floor_p {
            return Err(Error::AmbiguousAnchor { column: col });
        }
        signs.push(if a * b < 0.0 { -1 } else { 1 });
    }
    Ok(signs)
}

/// Matching with the sign ambiguity resolved by a known node.
pub fn match_with_anchor(
    n: &Embedding,
    p: &Embedding,
    anchor_node: usize,
    anchor_position: usize,
) -> Result<Assignment> {
    let signs = align_with_anchor(n, p, anchor_node, anchor_position)?;
    let e = cost_matrix(n, p, &signs)?;
    let mut a = hungarian(&e);
    a.orientation = signs;
    Ok(a)
}

/// All `2^k` sign-pattern matchings in lexicographic mask order, plus
/// the index of the cheapest and the tie tolerance at that cost level.
fn orientation_candidates(n: &Embedding, p: &Embedding) -> Result<(Vec<Assignment>, usize, f64)> {
    let k = n.k();
    if k > 8 {
        return Err(Error::TooManyOrientations { k });
    }
    let count = 1usize << k;
    let signs_for = |mask: usize| -> Vec<i8> {
        (0..k)
            .map(|c| if mask >> (k - 1 - c) & 1 == 1 { -1 } else { 1 })
            .collect()
    };

    let mut candidates = Vec::with_capacity(count);
    for mask in 0..count {
        let signs = signs_for(mask);
        let e = cost_matrix(n, p, &signs)?;
        let mut a = hungarian(&e);
        a.orientation = signs;
        candidates.push(a);
    }
    // Tie-break after all costs are gathered, so the result cannot depend
    // on evaluation order.
    let mut best = 0;
    for i in 1..count {
        if candidates[i].total_cost < candidates[best].total_cost {
            best = i;
        }
    }
    // Absolute floor so exact symmetries still register when the best
    // cost itself is numerically zero (noiseless self-matches).
    let tol = ORIENTATION_TIE_TOLERANCE * candidates[best].total_cost + 1e-9;
    Ok((candidates, best, tol))
}

/// Runs the matching for all `2^k` per-column sign assignments and keeps
/// the cheapest. Exact ties go to the lexicographically smallest sign
/// vector (+1 before -1); near-ties within the relative tolerance are
/// reported through the `ambiguous` flag.
pub fn match_with_orientation_search(n: &Embedding, p: &Embedding) -> Result<Assignment> {
    let (mut candidates, best, tol) = orientation_candidates(n, p)?;
    let best_cost = candidates[best].total_cost;
    let tied: Vec<Vec<i8>> = candidates
        .iter()
        .filter(|a| (a.total_cost - best_cost).abs() <= tol)
        .map(|a| a.orientation.clone())
        .collect();
    let mut winner = candidates.swap_remove(best);
    if tied.len() > 1 {
        winner.ambiguous = true;
        winner.tied_orientations = tied;
    }
    Ok(winner)
}

/// Orientation search disambiguated by one known node: among the
/// near-tied cheapest sign patterns, the one that assigns `anchor_node`
/// to `anchor_position` wins. This handles layouts where per-column sign
/// comparison is impossible because the anchor (indeed every position)
/// sits on a nodal line of some eigenvector, e.g. the biaxial layouts.
pub fn match_with_anchored_search(
    n: &Embedding,
    p: &Embedding,
    anchor_node: usize,
    anchor_position: usize,
) -> Result<Assignment> {
    let (candidates, best, tol) = orientation_candidates(n, p)?;
    let best_cost = candidates[best].total_cost;
    let tied_idx: Vec<usize> = (0..candidates.len())
        .filter(|&i| (candidates[i].total_cost - best_cost).abs() <= tol)
        .collect();
    let consistent: Vec<usize> = tied_idx
        .iter()
        .copied()
        .filter(|&i| candidates[i].pairs[anchor_node] == anchor_position)
        .collect();
    let (winner_idx, still_ambiguous) = match consistent.as_slice() {
        [] => (best, tied_idx.len() > 1),
        [only] => (*only, false),
        [first, ..] => (*first, true),
    };
    let tied: Vec<Vec<i8>> = tied_idx
        .iter()
        .map(|&i| candidates[i].orientation.clone())
        .collect();
    let mut winner = candidates[winner_idx].clone();
    if still_ambiguous {
        winner.ambiguous = true;
        winner.tied_orientations = tied;
    }
    Ok(winner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::embed;
    use crate::geometry::{self, generate_layout, LayoutKind, LayoutParams};
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cm(rows: &[&[f64]]) -> CostMatrix {
        let m = rows.len();
        CostMatrix::new(DMatrix::from_fn(m, m, |i, j| rows[i][j])).unwrap()
    }

    fn emb(rows: &[&[f64]]) -> Embedding {
        let m = rows.len();
        let k = rows[0].len();
        Embedding {
            coords: DMatrix::from_fn(m, k, |i, j| rows[i][j]),
            selected_indices: (1..=k).collect(),
        }
    }

    /// Exhaustive oracle: minimum-cost permutation, lexicographically
    /// smallest among ties. Independent of the Hungarian implementation.
    fn brute_force(e: &CostMatrix) -> (Vec<usize>, f64) {
        // generates in lexicographic order, so the first strict minimum is
        // the lexicographically smallest optimal permutation
        fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
            if items.len() <= 1 {
                return vec![items.to_vec()];
            }
            let mut out = Vec::new();
            for idx in 0..items.len() {
                let first = items[idx];
                let rest: Vec<usize> = items
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != idx)
                    .map(|(_, &v)| v)
                    .collect();
                for mut p in permutations(&rest) {
                    p.insert(0, first);
                    out.push(p);
                }
            }
            out
        }
        let n = e.len();
        let items: Vec<usize> = (0..n).collect();
        let mut best: Option<(Vec<usize>, f64)> = None;
        for p in permutations(&items) {
            let cost: f64 = p.iter().enumerate().map(|(i, &j)| e.entry(i, j)).sum();
            if best.as_ref().is_none_or(|(_, bc)| cost < *bc) {
                best = Some((p, cost));
            }
        }
        best.unwrap()
    }

    #[test]
    fn brute_force_enumerates_all_permutations() {
        // sanity-check the oracle itself
        let e = cm(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert_eq!(brute_force(&e).0, vec![0, 1]);
        let e = cm(&[&[5.0, 1.0], &[1.0, 5.0]]);
        assert_eq!(brute_force(&e).0, vec![1, 0]);
    }

    #[test]
    fn cost_matrix_self_match_has_zero_diagonal() {
        let n = emb(&[&[0.1, 0.2], &[-0.3, 0.4], &[0.5, -0.6]]);
        let e = cost_matrix(&n, &n, &[1, 1]).unwrap();
        for i in 0..3 {
            assert_eq!(e.entry(i, i), 0.0);
        }
    }

    #[test]
    fn cost_matrix_one_column_hand_example() {
        let n = emb(&[&[0.0], &[1.0]]);
        let p = emb(&[&[0.0], &[1.0]]);
        let e = cost_matrix(&n, &p, &[-1]).unwrap();
        assert_eq!(e.entry(0, 0), 0.0);
        assert_eq!(e.entry(0, 1), 1.0);
        assert_eq!(e.entry(1, 0), 1.0);
        assert_eq!(e.entry(1, 1), 2.0);
    }

    #[test]
    fn joint_column_reflection_leaves_costs_unchanged() {
        let n = emb(&[&[0.1, 0.2], &[-0.3, 0.4], &[0.5, -0.6]]);
        let p = emb(&[&[0.2, -0.1], &[0.0, 0.3], &[-0.4, 0.5]]);
        let e1 = cost_matrix(&n, &p, &[1, 1]).unwrap();
        let mut n2 = n.clone();
        let mut p2 = p.clone();
        for i in 0..3 {
            n2.coords[(i, 1)] = -n2.coords[(i, 1)];
            p2.coords[(i, 1)] = -p2.coords[(i, 1)];
        }
        let e2 = cost_matrix(&n2, &p2, &[1, 1]).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_relative_eq!(e1.entry(i, j), e2.entry(i, j), max_relative = 1e-14);
            }
        }
    }

    #[test]
    fn cost_matrix_rejects_shape_mismatch() {
        let n = emb(&[&[0.0], &[1.0]]);
        let p = emb(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert!(cost_matrix(&n, &p, &[1]).is_err());
        assert!(cost_matrix(&n, &n, &[1, 1]).is_err());
    }

    #[test]
    fn hungarian_three_by_three() {
        let e = cm(&[&[4.0, 1.0, 3.0], &[2.0, 0.0, 5.0], &[3.0, 2.0, 2.0]]);
        let a = hungarian(&e);
        assert_eq!(a.pairs, vec![1, 0, 2]);
        assert_eq!(a.total_cost, 5.0);
        // agrees with the exhaustive oracle
        assert_eq!(brute_force(&e), (a.pairs.clone(), a.total_cost));
    }

    #[test]
    fn hungarian_zero_diagonal_returns_identity() {
        let e = cm(&[&[0.0, 3.0, 4.0], &[2.0, 0.0, 9.0], &[5.0, 1.0, 0.0]]);
        let a = hungarian(&e);
        assert_eq!(a.pairs, vec![0, 1, 2]);
        assert_eq!(a.total_cost, 0.0);
    }

    #[test]
    fn hungarian_matches_brute_force_on_random_7x7() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..100 {
            let e = CostMatrix::new(DMatrix::from_fn(7, 7, |_, _| rng.random::<f64>() * 10.0))
                .unwrap();
            let a = hungarian(&e);
            let (_, oracle_cost) = brute_force(&e);
            assert_relative_eq!(a.total_cost, oracle_cost, max_relative = 1e-10);
        }
    }

    #[test]
    fn tie_break_is_lexicographic() {
        // all-equal costs: every permutation is optimal
        let e = cm(&[&[1.0, 1.0, 1.0], &[1.0, 1.0, 1.0], &[1.0, 1.0, 1.0]]);
        assert_eq!(hungarian(&e).pairs, vec![0, 1, 2]);
        // two optima: (0->0, 1->1) and (0->1, 1->0) both cost 2
        let e = cm(&[&[1.0, 1.0], &[1.0, 1.0]]);
        assert_eq!(hungarian(&e).pairs, vec![0, 1]);
    }

    #[test]
    fn anchor_on_identical_embeddings_gives_all_plus() {
        let n = emb(&[&[0.1, 0.2], &[-0.3, 0.4], &[0.5, -0.6]]);
        assert_eq!(align_with_anchor(&n, &n, 1, 1).unwrap(), vec![1, 1]);
    }

    #[test]
    fn anchor_detects_negated_column() {
        let n = emb(&[&[0.1, 0.2], &[-0.3, 0.4], &[0.5, -0.6]]);
        let mut p = n.clone();
        for i in 0..3 {
            p.coords[(i, 1)] = -p.coords[(i, 1)];
        }
        assert_eq!(align_with_anchor(&n, &p, 0, 0).unwrap(), vec![1, -1]);
    }

    #[test]
    fn anchor_near_zero_coordinate_is_rejected() {
        let n = emb(&[&[1e-12, 0.2], &[-0.3, 0.4], &[0.5, -0.6]]);
        match align_with_anchor(&n, &n, 0, 0) {
            Err(Error::AmbiguousAnchor { column }) => assert_eq!(column, 0),
            other => panic!("expected ambiguous anchor, got {other:?}"),
        }
    }

    #[test]
    fn orientation_search_recovers_any_sign_pattern() {
        let layout = generate_layout(
            LayoutKind::Random2d,
            &LayoutParams { count: Some(30), shift: 0.0 },
            11,
        )
        .unwrap();
        let d = geometry::pairwise_distances(&layout);
        let p = embed(&d, &[1, 2]).unwrap();
        for (s0, s1) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let mut n = p.clone();
            for i in 0..30 {
                n.coords[(i, 0)] *= s0 as f64;
                n.coords[(i, 1)] *= s1 as f64;
            }
            let a = match_with_orientation_search(&n, &p).unwrap();
            assert_eq!(a.pairs, (0..30).collect::<Vec<_>>(), "signs ({s0}, {s1})");
            assert!(a.total_cost < 1e-9);
        }
    }

    #[test]
    fn symmetric_lattice_is_flagged_ambiguous() {
        // A 3x3 square grid is fundamentally ambiguous: reflections tie.
        let layout = generate_layout(
            LayoutKind::Grid2d,
            &LayoutParams { count: Some(9), shift: 0.0 },
            0,
        )
        .unwrap();
        let d = geometry::pairwise_distances(&layout);
        let p = embed(&d, &[1, 2]).unwrap();
        let a = match_with_orientation_search(&p, &p).unwrap();
        let b = match_with_orientation_search(&p, &p).unwrap();
        assert_eq!(a, b); // deterministic via the tie-break
        assert!(a.ambiguous);
        assert!(a.tied_orientations.len() >= 2);
    }

    #[test]
    fn anchored_search_resolves_lattice_tie() {
        let layout = generate_layout(
            LayoutKind::Grid2d,
            &LayoutParams { count: Some(9), shift: 0.0 },
            0,
        )
        .unwrap();
        let d = geometry::pairwise_distances(&layout);
        let p = embed(&d, &[1, 2]).unwrap();
        // Self-match with a known corner node: the tie collapses to the
        // identity assignment.
        let a = match_with_anchored_search(&p, &p, 0, 0).unwrap();
        assert_eq!(a.pairs, (0..9).collect::<Vec<_>>());
        assert!(!a.ambiguous);
        // An anchor on the grid center keeps two reflections tied.
        let b = match_with_anchored_search(&p, &p, 4, 4).unwrap();
        assert!(b.ambiguous);
        assert_eq!(b.pairs[4], 4);
    }

    #[test]
    fn search_absorbs_axis_aligned_reflection_of_positions() {
        let layout = generate_layout(
            LayoutKind::Random2d,
            &LayoutParams { count: Some(25), shift: 0.0 },
            17,
        )
        .unwrap();
        let d = geometry::pairwise_distances(&layout);
        let p = embed(&d, &[1, 2]).unwrap();
        let n = p.clone();
        let a = match_with_orientation_search(&n, &p).unwrap();
        let mut p2 = p.clone();
        for i in 0..25 {
            p2.coords[(i, 0)] = -p2.coords[(i, 0)];
        }
        let b = match_with_orientation_search(&n, &p2).unwrap();
        assert_relative_eq!(a.total_cost, b.total_cost, epsilon = 1e-9);
        assert_eq!(a.pairs, b.pairs);
    }

    #[test]
    fn too_many_columns_demands_an_anchor() {
        let coords = DMatrix::from_element(12, 9, 0.5);
        let e = Embedding {
            coords,
            selected_indices: (1..=9).collect(),
        };
        assert!(matches!(
            match_with_orientation_search(&e, &e),
            Err(Error::TooManyOrientations { k: 9 })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn hungarian_beats_every_sampled_permutation(
            seed in 0u64..10_000,
            m in 2usize..12,
        ) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let e = CostMatrix::new(DMatrix::from_fn(m, m, |_, _| rng.random::<f64>())).unwrap();
            let a = hungarian(&e);
            let mut perm: Vec<usize> = (0..m).collect();
            for _ in 0..50 {
                use rand::seq::SliceRandom;
                perm.shuffle(&mut rng);
                let cost: f64 = perm.iter().enumerate().map(|(i, &j)| e.entry(i, j)).sum();
                prop_assert!(a.total_cost <= cost + 1e-9);
            }
        }

        #[test]
        fn hungarian_equals_brute_force_up_to_8(
            seed in 0u64..10_000,
            m in 2usize..=8,
        ) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let e = CostMatrix::new(DMatrix::from_fn(m, m, |_, _| rng.random::<f64>())).unwrap();
            let a = hungarian(&e);
            let (perm, cost) = brute_force(&e);
            prop_assert!((a.total_cost - cost).abs() <= 1e-10 * (1.0 + cost));
            prop_assert_eq!(a.pairs, perm);
        }
    }
}
