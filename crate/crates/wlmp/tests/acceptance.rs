//! The acceptance gate: every release-blocking property of the pipeline
//! in one place, one pass/fail line per check (run with `--nocapture`
//! to see them on success).

use std::time::Instant;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use wlmp::channel::PropagationModel;
use wlmp::embedding::{decompose, embed, kernel_bandwidth, similarity};
use wlmp::experiments::{
    build_sweep_configs, derive_seed, log_grid, preset, run_sweep, run_trial, spearman,
    AlignmentMode, EigenvectorChoice, PreparedPipeline, SweepConfig, TrialConfig,
};
use wlmp::geometry::{
    builtin_layouts, generate_layout, pairwise_distances, GroundTruth, LayoutKind, LayoutParams,
};
use wlmp::matching::{hungarian, match_with_orientation_search, CostMatrix};

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn check(&mut self, name: &str, pass: bool, detail: String) {
        let verdict = if pass { "pass" } else { "FAIL" };
        println!("[{verdict}] {name}: {detail}");
        if !pass {
            self.failures.push(format!("{name}: {detail}"));
        }
    }
}

#[test]
fn acceptance() {
    let mut gate = Gate {
        failures: Vec::new(),
    };
    hungarian_oracle(&mut gate);
    spectral_correctness(&mut gate);
    noiseless_matching(&mut gate);
    factory_low_snr(&mut gate);
    strip_eigenvector_sets(&mut gate);
    shifted_strip(&mut gate);
    three_dimensional_layouts(&mut gate);
    anchor_equivalence(&mut gate);
    invariances(&mut gate);
    large_instance_speed(&mut gate);
    assert!(
        gate.failures.is_empty(),
        "acceptance failures:\n{}",
        gate.failures.join("\n")
    );
}

/// Exhaustive minimum-cost assignment, the oracle for the solver.
fn brute_force_min(c: &CostMatrix) -> f64 {
    fn rec(c: &CostMatrix, row: usize, used: &mut Vec<bool>, acc: f64, best: &mut f64) {
        if row == c.len() {
            *best = best.min(acc);
            return;
        }
        for j in 0..c.len() {
            if !used[j] {
                used[j] = true;
                rec(c, row + 1, used, acc + c.entry(row, j), best);
                used[j] = false;
            }
        }
    }
    let mut best = f64::INFINITY;
    rec(c, 0, &mut vec![false; c.len()], 0.0, &mut best);
    best
}

fn hungarian_oracle(gate: &mut Gate) {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut mismatches = 0usize;
    for m in 2..=8 {
        for _ in 0..200 {
            let entries =
                nalgebra::DMatrix::from_fn(m, m, |_, _| 10.0 * rng.random::<f64>());
            let c = CostMatrix::new(entries).unwrap();
            let a = hungarian(&c);
            if a.total_cost != brute_force_min(&c) {
                mismatches += 1;
            }
        }
    }
    let elapsed = t.elapsed();
    gate.check(
        "assignment cost equals exhaustive minimum",
        mismatches == 0 && elapsed.as_secs_f64() < 10.0,
        format!("{mismatches} mismatches over 1400 instances in {elapsed:.2?} (limit 10s)"),
    );
}

fn spectral_correctness(gate: &mut Gate) {
    let mut worst_residual = 0.0f64;
    let mut worst_eigenvalue = 0.0f64;
    let mut bad_zero_counts = Vec::new();
    for (name, layout) in builtin_layouts() {
        let d = pairwise_distances(&layout);
        let dec = decompose(&d).unwrap();
        if dec.near_zero_count() != 1 {
            bad_zero_counts.push(format!("{name}:{}", dec.near_zero_count()));
        }
        worst_eigenvalue =
            worst_eigenvalue.min(dec.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min));

        // Rebuild L_rw = I - G^{-1} C independently and check the pairs.
        let sigma2 = kernel_bandwidth(&d).unwrap();
        let c = similarity(&d, sigma2).unwrap();
        let m = d.len();
        let degrees: Vec<f64> = (0..m).map(|j| c.matrix().column(j).sum()).collect();
        let mut l = nalgebra::DMatrix::identity(m, m);
        for i in 0..m {
            for j in 0..m {
                l[(i, j)] -= c.entry(i, j) / degrees[i];
            }
        }
        for k in 0..m {
            let v = dec.eigenvectors.column(k);
            let r = &l * v - dec.eigenvalues[k] * v;
            worst_residual = worst_residual.max(r.amax());
        }
    }
    gate.check(
        "one zero eigenvalue, nonnegative spectrum, small residuals",
        bad_zero_counts.is_empty() && worst_eigenvalue >= -1e-9 && worst_residual <= 1e-8,
        format!(
            "zero-count exceptions {bad_zero_counts:?}, min eigenvalue {worst_eigenvalue:.2e}, \
             max residual {worst_residual:.2e} (limit 1e-8)"
        ),
    );
}

fn noiseless_matching(gate: &mut Gate) {
    let t = Instant::now();
    let mut imperfect = Vec::new();
    for (name, layout) in builtin_layouts() {
        let truth = GroundTruth::random(layout.len(), 5);
        let model = PropagationModel::calibrated(&pairwise_distances(&layout)).unwrap();
        let out = run_trial(&TrialConfig {
            layout,
            truth,
            model,
            eigenvectors: EigenvectorChoice::auto(),
            alignment: AlignmentMode::AutoAnchor,
            snr: 1e6,
            seed: 1,
        })
        .unwrap();
        if out.accuracy != 1.0 {
            imperfect.push(format!("{name}:{:.3}", out.accuracy));
        }
    }
    let elapsed = t.elapsed();
    gate.check(
        "noiseless trials match perfectly on every built-in layout",
        imperfect.is_empty() && elapsed.as_secs_f64() < 30.0,
        format!("imperfect {imperfect:?} in {elapsed:.2?} (limit 30s)"),
    );
}

/// One preset curve with the SNR grid replaced.
fn curve_config(preset_name: &str, label: &str, grid: Vec<f64>, seed: u64) -> SweepConfig {
    let p = preset(preset_name).unwrap();
    let mut cfg = build_sweep_configs(&p, seed)
        .unwrap()
        .into_iter()
        .find(|(l, _)| l == label)
        .unwrap_or_else(|| panic!("no curve {label} in {preset_name}"))
        .1;
    cfg.snr_grid = grid;
    cfg
}

fn factory_low_snr(gate: &mut Gate) {
    let t = Instant::now();
    let cfg = curve_config("fig1", "factory", vec![5.0, 10.0], 0);
    let r = run_sweep(&cfg).unwrap();
    let (at5, at10) = (r.points[0].mean_accuracy, r.points[1].mean_accuracy);
    let elapsed = t.elapsed();
    gate.check(
        "factory floor stays accurate at low SNR",
        at5 >= 0.95 && at10 >= 0.99 && elapsed.as_secs_f64() < 300.0,
        format!("mean accuracy {at5:.3} at SNR 5 (need 0.95), {at10:.3} at SNR 10 (need 0.99), {elapsed:.2?}"),
    );
}

fn strip_eigenvector_sets(gate: &mut Gate) {
    let run = |label: &str| {
        run_sweep(&curve_config("fig3", label, vec![100.0], 0)).unwrap().points[0].mean_accuracy
    };
    // The {1,2,3} plateau height for one fixed ground truth is a single
    // binomial draw (exact column ties resolve deterministically per row
    // pair), so the 100 realizations are spread over 10 permutations.
    let a123 = {
        let mut acc = 0.0;
        for truth_seed in 0..10 {
            let mut cfg = curve_config("fig3", "ev123", vec![100.0], 0);
            cfg.truth = GroundTruth::random(cfg.layout.len(), 1000 + truth_seed);
            cfg.realizations = 10;
            cfg.master_seed = truth_seed;
            acc += run_sweep(&cfg).unwrap().points[0].mean_accuracy;
        }
        acc / 10.0
    };
    let (a14, a1234) = (run("ev14"), run("ev1234"));
    gate.check(
        "strip accuracy depends on the eigenvector set",
        (0.4..=0.6).contains(&a123) && a14 >= 0.95 && a1234 >= 0.95,
        format!(
            "at SNR 100: {{1,2,3}} {a123:.3} (need 0.4..0.6), {{1,4}} {a14:.3} and \
             {{1,2,3,4}} {a1234:.3} (need 0.95)"
        ),
    );
}

fn shifted_strip(gate: &mut Gate) {
    let half = run_sweep(&curve_config("fig4", "shift0.5_ev1", vec![10.0, 50.0], 0)).unwrap();
    let slight = run_sweep(&curve_config("fig4", "shift0.01_ev1", vec![10.0], 0)).unwrap();
    let half_at50 = half.points[1].mean_accuracy;
    let half_at10 = half.points[0].mean_accuracy;
    let slight_at10 = slight.points[0].mean_accuracy;
    gate.check(
        "row shift rescues single-eigenvector strip matching",
        half_at50 >= 0.9 && half_at10 > slight_at10,
        format!(
            "shift 0.5 with {{1}}: {half_at50:.3} at SNR 50 (need 0.9); at SNR 10 \
             shift 0.5 {half_at10:.3} vs shift 0.01 {slight_at10:.3} (need strict >)"
        ),
    );
}

fn three_dimensional_layouts(gate: &mut Gate) {
    let at5 = |preset_name: &str, label: &str| {
        run_sweep(&curve_config(preset_name, label, vec![5.0], 0)).unwrap().points[0].mean_accuracy
    };
    let g3 = at5("fig5", "grid3d");
    let r3 = at5("fig5", "random3d");
    let g2 = at5("fig2", "grid2d");
    gate.check(
        "3D layouts match at least as well as the 2D grid",
        g3 >= g2 && r3 >= g2,
        format!("at SNR 5: grid3d {g3:.3}, random3d {r3:.3}, grid2d {g2:.3}"),
    );
}

fn anchor_equivalence(gate: &mut Gate) {
    let p = preset("fig1").unwrap();
    let base = build_sweep_configs(&p, 0).unwrap().remove(0).1;
    let prepare = |alignment| {
        PreparedPipeline::new(&base.layout, &base.truth, base.model, &base.eigenvectors, alignment)
            .unwrap()
    };
    let search = prepare(AlignmentMode::OrientationSearch);
    let anchored = prepare(AlignmentMode::AutoAnchor);
    let mut identical = 0;
    let mut total = 0;
    for (si, &snr) in [5.0, 10.0, 30.0, 100.0].iter().enumerate() {
        for r in 0..25u64 {
            let seed = derive_seed(42, si as u64, r);
            let a = search.run(snr, seed).unwrap().assignment;
            let b = anchored.run(snr, seed).unwrap().assignment;
            total += 1;
            if a.pairs == b.pairs {
                identical += 1;
            }
        }
    }
    gate.check(
        "anchor alignment equals orientation search on the factory floor",
        identical == total,
        format!("{identical}/{total} identical assignments"),
    );
}

fn invariances(gate: &mut Gate) {
    // Uniform scaling of all distances leaves the embedding untouched.
    let layout = generate_layout(LayoutKind::Random2d, &LayoutParams::default(), 11).unwrap();
    let d = pairwise_distances(&layout);
    let e1 = embed(&d, &[1, 2]).unwrap();
    let e2 = embed(&d.scaled(3.7), &[1, 2]).unwrap();
    let scale_diff = (&e1.coords - &e2.coords).amax();

    // Relabeling the nodes permutes the embedding rows, nothing else.
    let perm = GroundTruth::random(layout.len(), 23);
    let ep = embed(&d.permuted(perm.permutation()), &[1, 2]).unwrap();
    let mut relabel_diff = 0.0f64;
    for i in 0..layout.len() {
        for c in 0..2 {
            relabel_diff = relabel_diff
                .max((ep.coords[(i, c)] - e1.coords[(perm.position_of(i), c)]).abs());
        }
    }

    // Accuracy grows monotonically with SNR across the transition region
    // of every built-in layout.
    let grids: &[(&str, f64, f64)] = &[
        ("factory", 0.5, 4.0),
        ("grid2d", 0.5, 8.0),
        ("random2d", 0.5, 10.0),
        ("biaxial_uniform", 0.5, 20.0),
        ("biaxial_random", 0.5, 50.0),
        ("strip_shift_0", 1.0, 50.0),
        ("strip_shift_0.01", 1.0, 50.0),
        ("strip_shift_0.5", 0.5, 8.0),
        ("grid3d", 0.3, 2.5),
        ("random3d", 0.2, 2.0),
    ];
    let mut worst_rho = f64::INFINITY;
    let mut worst_name = String::new();
    for (name, layout) in builtin_layouts() {
        let (_, lo, hi) = *grids.iter().find(|(n, _, _)| *n == name).unwrap();
        let truth = GroundTruth::random(layout.len(), 99);
        let model = PropagationModel::calibrated(&pairwise_distances(&layout)).unwrap();
        let cfg = SweepConfig {
            layout,
            truth,
            model,
            eigenvectors: EigenvectorChoice::auto(),
            alignment: AlignmentMode::AutoAnchor,
            snr_grid: log_grid(lo, hi, 10),
            realizations: 50,
            master_seed: 7,
        };
        let r = run_sweep(&cfg).unwrap();
        let accs: Vec<f64> = r.points.iter().map(|p| p.mean_accuracy).collect();
        let rho = spearman(&cfg.snr_grid, &accs);
        if rho < worst_rho {
            worst_rho = rho;
            worst_name = name;
        }
    }

    gate.check(
        "scale invariance, relabeling equivariance, SNR monotonicity",
        scale_diff < 1e-10 && relabel_diff < 1e-8 && worst_rho > 0.9,
        format!(
            "scale diff {scale_diff:.2e} (limit 1e-10), relabel diff {relabel_diff:.2e}, \
             worst Spearman {worst_rho:.3} on {worst_name} (need > 0.9)"
        ),
    );
}

fn large_instance_speed(gate: &mut Gate) {
    let t = Instant::now();
    let layout = generate_layout(
        LayoutKind::Random2d,
        &LayoutParams { count: Some(1000), shift: 0.0 },
        3,
    )
    .unwrap();
    let d = pairwise_distances(&layout);
    let p = embed(&d, &[1, 2]).unwrap();
    let truth = GroundTruth::random(1000, 8);
    let n = embed(&d.permuted(truth.permutation()), &[1, 2]).unwrap();
    let a = match_with_orientation_search(&n, &p).unwrap();
    let elapsed = t.elapsed();
    gate.check(
        "M = 1000 pipeline finishes quickly",
        elapsed.as_secs_f64() < 60.0 && a.total_cost < 1e-6,
        format!("{elapsed:.2?} (limit 60s), total cost {:.2e}", a.total_cost),
    );
}
