//! End-to-end tests of the `wlmp` binary: exit codes, file outputs, and
//! byte-for-byte reproducibility.

use std::path::Path;
use std::process::{Command, Output};

use wlmp::channel::{rssi_csv_from_distances, PropagationModel};
use wlmp::geometry::{generate_layout, pairwise_distances, LayoutKind, LayoutParams, PositionSet};

fn wlmp(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wlmp"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("spawn wlmp")
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

/// Noiseless measurement CSV for `layout` with node labels shuffled by
/// `truth_seed`; node label == true position label.
fn write_measurements(layout: &PositionSet, truth_seed: u64, path: &Path) {
    use wlmp::geometry::GroundTruth;
    let truth = GroundTruth::random(layout.len(), truth_seed);
    let d = pairwise_distances(layout).permuted(truth.permutation());
    let labels: Vec<String> = (0..layout.len())
        .map(|i| layout.labels()[truth.position_of(i)].clone())
        .collect();
    let model = PropagationModel::default();
    std::fs::write(path, rssi_csv_from_distances(&d, &labels, &model).unwrap()).unwrap();
}

#[test]
fn generate_writes_layout_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = wlmp(dir.path(), &["generate", "--kind", "strip", "--count", "40", "-o", "strip.csv"]);
    assert_exit(&out, 0);
    let text = std::fs::read_to_string(dir.path().join("strip.csv")).unwrap();
    assert_eq!(text.lines().count(), 41);
    assert!(text.starts_with("label,x,y\n"));

    let out = wlmp(dir.path(), &["generate", "--kind", "grid3d", "-o", "g3.csv"]);
    assert_exit(&out, 0);
    let text = std::fs::read_to_string(dir.path().join("g3.csv")).unwrap();
    assert_eq!(text.lines().count(), 121);
    assert!(text.starts_with("label,x,y,z\n"));

    let out = wlmp(dir.path(), &["generate", "--kind", "nonsense"]);
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());
}

#[test]
fn match_reports_perfect_accuracy_on_noiseless_data() {
    let dir = tempfile::tempdir().unwrap();
    let layout = generate_layout(LayoutKind::Factory, &LayoutParams::default(), 0).unwrap();
    wlmp(dir.path(), &["generate", "--kind", "factory", "-o", "pos.csv"]);
    write_measurements(&layout, 7, &dir.path().join("rssi.csv"));

    let out = wlmp(
        dir.path(),
        &["match", "--positions", "pos.csv", "--measurements", "rssi.csv", "--format", "json"],
    );
    assert_exit(&out, 0);
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["accuracy"], 1.0);
    assert_eq!(summary["ambiguous"], false);

    // File output: assignment CSV plus JSON summary next to it.
    let out = wlmp(
        dir.path(),
        &["match", "--positions", "pos.csv", "--measurements", "rssi.csv", "-o", "assign.csv"],
    );
    assert_exit(&out, 0);
    let csv = std::fs::read_to_string(dir.path().join("assign.csv")).unwrap();
    assert!(csv.starts_with("node_label,position_label,pair_cost\n"));
    assert_eq!(csv.lines().count(), 59);
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("assign.json")).unwrap())
            .unwrap();
    assert_eq!(summary["accuracy"], 1.0);
}

#[test]
fn match_auto_selection_reports_strip_eigenvectors() {
    let dir = tempfile::tempdir().unwrap();
    let layout = generate_layout(LayoutKind::Strip, &LayoutParams::default(), 0).unwrap();
    wlmp(dir.path(), &["generate", "--kind", "strip", "-o", "pos.csv"]);
    write_measurements(&layout, 3, &dir.path().join("rssi.csv"));

    let out = wlmp(
        dir.path(),
        &[
            "match", "--positions", "pos.csv", "--measurements", "rssi.csv",
            "--eigenvectors", "auto", "--anchor", "p00=p00", "--format", "json",
        ],
    );
    assert_exit(&out, 0);
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let selected: Vec<u64> = summary["selected_eigenvectors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert!(selected.contains(&4), "selected {selected:?}");
    assert_eq!(summary["accuracy"], 1.0);
}

#[test]
fn match_error_exit_codes_are_distinct() {
    let dir = tempfile::tempdir().unwrap();
    let layout = generate_layout(LayoutKind::Strip, &LayoutParams::default(), 0).unwrap();
    wlmp(dir.path(), &["generate", "--kind", "strip", "-o", "pos.csv"]);
    write_measurements(&layout, 3, &dir.path().join("rssi.csv"));
    let full = std::fs::read_to_string(dir.path().join("rssi.csv")).unwrap();

    // malformed header -> parse error
    std::fs::write(dir.path().join("bad.csv"), "a,b,c\np0,p1,-50\n").unwrap();
    let out = wlmp(dir.path(), &["match", "--positions", "pos.csv", "--measurements", "bad.csv"]);
    assert_exit(&out, 2);

    // a dropped pair -> missing-pair error
    let truncated: Vec<&str> = full.lines().take(full.lines().count() - 1).collect();
    std::fs::write(dir.path().join("missing.csv"), truncated.join("\n")).unwrap();
    let out =
        wlmp(dir.path(), &["match", "--positions", "pos.csv", "--measurements", "missing.csv"]);
    assert_exit(&out, 3);

    // an anchor label nobody measured
    let out = wlmp(
        dir.path(),
        &[
            "match", "--positions", "pos.csv", "--measurements", "rssi.csv",
            "--anchor", "nosuch=p00",
        ],
    );
    assert_exit(&out, 4);

    // fewer nodes than positions
    let small: Vec<&str> = full.lines().take(4).collect();
    std::fs::write(dir.path().join("small.csv"), small.join("\n")).unwrap();
    let out = wlmp(dir.path(), &["match", "--positions", "pos.csv", "--measurements", "small.csv"]);
    assert_exit(&out, 5);

    // the center of a 3x3 grid sits on every nodal line, so its
    // coordinates carry no sign information
    let grid = generate_layout(
        LayoutKind::Grid2d,
        &LayoutParams { count: Some(9), shift: 0.0 },
        0,
    )
    .unwrap();
    wlmp(dir.path(), &["generate", "--kind", "grid2d", "--count", "9", "-o", "grid.csv"]);
    write_measurements(&grid, 1, &dir.path().join("grid_rssi.csv"));
    let out = wlmp(
        dir.path(),
        &[
            "match", "--positions", "grid.csv", "--measurements", "grid_rssi.csv",
            "--eigenvectors", "1,2", "--anchor", "p4=p4",
        ],
    );
    assert_exit(&out, 6);
}

#[test]
fn sweep_outputs_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "sweep", "--kind", "random2d", "--count", "30", "--snr-points", "4",
        "--realizations", "8", "--seed", "9",
    ];
    let out = wlmp(dir.path(), &[&args[..], &["-o", "a.csv"]].concat());
    assert_exit(&out, 0);
    let out = wlmp(dir.path(), &[&args[..], &["-o", "b.csv", "--jobs", "1"]].concat());
    assert_exit(&out, 0);
    let a = std::fs::read(dir.path().join("a.random2d.csv")).unwrap();
    let b = std::fs::read(dir.path().join("b.random2d.csv")).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn preset_sweep_writes_one_csv_per_curve_and_a_plot() {
    let dir = tempfile::tempdir().unwrap();
    let out = wlmp(
        dir.path(),
        &["sweep", "--preset", "fig3", "--realizations", "5", "--seed", "1", "--plot", "-o", "fig3.csv"],
    );
    assert_exit(&out, 0);
    for curve in ["ev123", "ev14", "ev1234"] {
        let path = dir.path().join(format!("fig3.{curve}.csv"));
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("snr,mean_accuracy,ci_half_width,realizations\n"));
        assert_eq!(text.lines().count(), 21);
    }
    let svg = std::fs::read_to_string(dir.path().join("fig3.svg")).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<polyline").count(), 3);

    let out = wlmp(dir.path(), &["sweep", "--preset", "fig9", "-o", "x.csv"]);
    assert_exit(&out, 1);
}

#[test]
fn embed_and_inspect_report_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let out = wlmp(dir.path(), &["embed", "--kind", "grid2d", "--count", "12", "-o", "eig.csv"]);
    assert_exit(&out, 0);
    let text = std::fs::read_to_string(dir.path().join("eig.csv")).unwrap();
    // header, eigenvalue row, and one row per position
    assert_eq!(text.lines().count(), 14);

    let out = wlmp(dir.path(), &["inspect", "--kind", "strip", "--format", "json"]);
    assert_exit(&out, 0);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["resolved"], true);
    let selected: Vec<u64> = report["selected_eigenvectors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert!(selected.contains(&4));
}
