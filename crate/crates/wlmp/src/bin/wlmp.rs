//! Command-line frontend for the matching pipeline: layout generation,
//! embedding inspection, matching of measured or synthetic data, and
//! accuracy-vs-SNR sweeps with CSV/SVG output.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use wlmp::channel::{distance_matrix_from_rssi, parse_rssi_csv, PropagationModel};
use wlmp::embedding::{
    decompose, eigen_dump_csv, embed, embed_first_k, select_eigenvectors, DEFAULT_RESOLUTION,
};
use wlmp::experiments::{
    build_sweep_configs, log_grid, preset, run_sweep, sweep_csv, AlignmentMode, CurveSpec,
    EigenvectorChoice, Preset, SweepResult,
};
use wlmp::geometry::{
    generate_layout, load_layout, pairwise_distances, save_layout, LayoutKind, LayoutParams,
    PositionSet,
};
use wlmp::matching::{match_with_anchor, match_with_orientation_search, Assignment};
use wlmp::plot::sweep_svg;
use wlmp::Error;

#[derive(Parser)]
#[command(name = "wlmp", version, about = "Match wireless nodes to blueprint positions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a built-in layout and write it as CSV or JSON.
    Generate(GenerateArgs),
    /// Match measured RSSI data against a blueprint.
    Match(MatchArgs),
    /// Run an accuracy-vs-SNR Monte-Carlo sweep.
    Sweep(SweepArgs),
    /// Dump the eigen-decomposition of a layout or of measured data.
    Embed(EmbedArgs),
    /// Report eigenvector selection diagnostics for a blueprint.
    Inspect(InspectArgs),
}

#[derive(Args)]
struct LayoutSource {
    /// Blueprint file (`label,x,y[,z]` CSV, or JSON by extension).
    #[arg(long, conflicts_with = "kind")]
    positions: Option<PathBuf>,
    /// Built-in layout kind to generate instead of loading a file.
    #[arg(long)]
    kind: Option<LayoutKind>,
    /// Position count for generated layouts (kind-specific default).
    #[arg(long, requires = "kind")]
    count: Option<usize>,
    /// Row shift in lattice units (strip layout only).
    #[arg(long, default_value_t = 0.0)]
    shift: f64,
}

impl LayoutSource {
    fn load(&self, seed: u64) -> Result<PositionSet, Error> {
        match (&self.positions, self.kind) {
            (Some(path), None) => load_layout(path),
            (None, Some(kind)) => {
                let params = LayoutParams {
                    count: self.count,
                    shift: self.shift,
                };
                generate_layout(kind, &params, seed)
            }
            _ => Err(Error::InvalidArgument(
                "exactly one of --positions and --kind is required".into(),
            )),
        }
    }
}

#[derive(Args)]
struct ModelArgs {
    /// Reference power at the reference distance, dBm.
    #[arg(long, default_value_t = -40.0)]
    ref_power: f64,
    /// Reference distance, meters.
    #[arg(long, default_value_t = 1.0)]
    ref_distance: f64,
    /// Path-loss exponent.
    #[arg(long, default_value_t = 2.0)]
    path_loss_exponent: f64,
}

impl ModelArgs {
    fn build(&self) -> Result<PropagationModel, Error> {
        PropagationModel::new(self.ref_power, self.ref_distance, self.path_loss_exponent)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct GenerateArgs {
    /// Layout kind.
    #[arg(long)]
    kind: LayoutKind,
    /// Position count (kind-specific default).
    #[arg(long)]
    count: Option<usize>,
    /// Row shift in lattice units (strip layout only).
    #[arg(long, default_value_t = 0.0)]
    shift: f64,
    /// RNG seed for the random layout kinds.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path; `.json` selects JSON, anything else CSV.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MatchArgs {
    /// Blueprint file (`label,x,y[,z]` CSV, or JSON by extension).
    #[arg(long)]
    positions: PathBuf,
    /// Measurement CSV (`node_a,node_b,rssi_dbm`), dense over all pairs.
    #[arg(long)]
    measurements: PathBuf,
    /// `auto` or a comma-separated 1-based index list such as `1,4`.
    #[arg(long, default_value = "auto")]
    eigenvectors: String,
    /// Resolve the sign ambiguity with a known node: `NODE=POSITION`.
    #[arg(long)]
    anchor: Option<String>,
    #[command(flatten)]
    model: ModelArgs,
    /// Assignment CSV path; a JSON summary lands next to it.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Stdout format when no --out is given.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct SweepArgs {
    /// Preset experiment name (fig1..fig5).
    #[arg(long, conflicts_with_all = ["kind", "positions"])]
    preset: Option<String>,
    #[command(flatten)]
    layout: LayoutSource,
    /// `auto` or a comma-separated index list (explicit sweeps).
    #[arg(long, default_value = "auto")]
    eigenvectors: String,
    /// Use the exhaustive orientation search instead of an auto anchor
    /// (explicit sweeps; presets carry their own alignment).
    #[arg(long)]
    orientation_search: bool,
    /// Lowest SNR of the grid (explicit sweeps).
    #[arg(long, default_value_t = 1.0)]
    snr_min: f64,
    /// Highest SNR of the grid (explicit sweeps).
    #[arg(long, default_value_t = 100.0)]
    snr_max: f64,
    /// Number of logarithmically spaced grid points (explicit sweeps).
    #[arg(long, default_value_t = 20)]
    snr_points: usize,
    /// Trials per grid point; overrides the preset's default.
    #[arg(long)]
    realizations: Option<usize>,
    /// Master seed; every trial seed derives from it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads for the sweep (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Also emit an SVG plot next to the CSV output.
    #[arg(long)]
    plot: bool,
    /// Output stem: each curve lands at `<stem>.<curve>.csv`.
    #[arg(long, short)]
    out: PathBuf,
}

#[derive(Args)]
struct EmbedArgs {
    #[command(flatten)]
    layout: LayoutSource,
    /// Decompose distances recovered from this measurement CSV instead
    /// of the blueprint's exact distances.
    #[arg(long)]
    measurements: Option<PathBuf>,
    #[command(flatten)]
    model: ModelArgs,
    /// RNG seed for generated random layouts.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output CSV path (stdout when omitted).
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InspectArgs {
    #[command(flatten)]
    layout: LayoutSource,
    /// Resolution threshold relative to the median neighbor distance.
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    resolution: f64,
    /// Largest eigenvector index considered.
    #[arg(long, default_value_t = 8)]
    kmax: usize,
    /// RNG seed for generated random layouts.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("WLMP_LOG")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Match(args) => cmd_match(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Embed(args) => cmd_embed(args),
        Command::Inspect(args) => cmd_inspect(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Stdout write that surfaces errors (notably closed pipes) instead of
/// panicking like `print!`.
fn emit(text: &str) -> Result<(), Error> {
    use std::io::Write;
    std::io::stdout().write_all(text.as_bytes())?;
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::MissingPair { .. } => 3,
        Error::UnknownLabel(_) => 4,
        Error::SizeMismatch(_) => 5,
        Error::AmbiguousAnchor { .. } => 6,
        _ => 1,
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<(), Error> {
    let params = LayoutParams {
        count: args.count,
        shift: args.shift,
    };
    let layout = generate_layout(args.kind, &params, args.seed)?;
    match &args.out {
        Some(path) => save_layout(&layout, path)?,
        None => emit(&wlmp::geometry::layout_to_csv(&layout))?,
    }
    Ok(())
}

fn parse_eigenvector_flag(s: &str) -> Result<EigenvectorChoice, Error> {
    if s == "auto" {
        return Ok(EigenvectorChoice::auto());
    }
    let indices: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse()).collect();
    match indices {
        Ok(v) if !v.is_empty() => Ok(EigenvectorChoice::Fixed(v)),
        _ => Err(Error::InvalidArgument(format!(
            "--eigenvectors expects `auto` or a comma-separated index list, got {s:?}"
        ))),
    }
}

fn resolve_indices(
    choice: &EigenvectorChoice,
    positions: &PositionSet,
) -> Result<Vec<usize>, Error> {
    match choice {
        EigenvectorChoice::Fixed(v) => Ok(v.clone()),
        EigenvectorChoice::Auto { resolution, kmax } => {
            let dpos = pairwise_distances(positions);
            let kmax = (*kmax).min(positions.len() - 1);
            let candidates = embed_first_k(&dpos, kmax)?;
            Ok(select_eigenvectors(&candidates, positions.dim(), *resolution).indices)
        }
    }
}

fn label_index(labels: &[String], label: &str) -> Result<usize, Error> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
}

/// Unique node labels in order of first appearance in the measurement file.
fn node_labels(records: &[wlmp::channel::RssiRecord]) -> Vec<String> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in records {
        for l in [&r.node_a, &r.node_b] {
            if seen.insert(l.clone()) {
                out.push(l.clone());
            }
        }
    }
    out
}

fn assignment_csv(a: &Assignment, nodes: &[String], positions: &PositionSet) -> String {
    let mut out = String::from("node_label,position_label,pair_cost\n");
    for (i, &j) in a.pairs.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{}\n",
            nodes[i],
            positions.labels()[j],
            a.pair_costs[i]
        ));
    }
    out
}

fn assignment_summary(
    a: &Assignment,
    nodes: &[String],
    positions: &PositionSet,
    selected: &[usize],
) -> serde_json::Value {
    // With shared label sets the true position of each node is its own
    // label, so accuracy is directly observable.
    let accuracy = {
        let sorted_nodes: BTreeSet<_> = nodes.iter().collect();
        let sorted_pos: BTreeSet<_> = positions.labels().iter().collect();
        if sorted_nodes == sorted_pos {
            let correct = a
                .pairs
                .iter()
                .enumerate()
                .filter(|&(i, &j)| nodes[i] == positions.labels()[j])
                .count();
            Some(correct as f64 / nodes.len() as f64)
        } else {
            None
        }
    };
    json!({
        "total_cost": a.total_cost,
        "orientation": a.orientation,
        "ambiguous": a.ambiguous,
        "tied_orientations": a.tied_orientations,
        "selected_eigenvectors": selected,
        "accuracy": accuracy,
    })
}

fn cmd_match(args: MatchArgs) -> Result<(), Error> {
    let positions = load_layout(&args.positions)?;
    let records = parse_rssi_csv(&std::fs::read_to_string(&args.measurements)?)?;
    let nodes = node_labels(&records);
    if nodes.len() != positions.len() {
        return Err(Error::SizeMismatch(format!(
            "{} measured nodes but {} blueprint positions",
            nodes.len(),
            positions.len()
        )));
    }
    let model = args.model.build()?;
    let dnode = distance_matrix_from_rssi(&records, &nodes, &model)?;
    let dpos = pairwise_distances(&positions);

    let choice = parse_eigenvector_flag(&args.eigenvectors)?;
    let selected = resolve_indices(&choice, &positions)?;
    let p = embed(&dpos, &selected)?;
    let n = embed(&dnode, &selected)?;

    let assignment = match &args.anchor {
        Some(spec) => {
            let (node_label, pos_label) = spec.split_once('=').ok_or_else(|| {
                Error::InvalidArgument(format!("--anchor expects NODE=POSITION, got {spec:?}"))
            })?;
            let node = label_index(&nodes, node_label)?;
            let position = label_index(positions.labels(), pos_label)?;
            match_with_anchor(&n, &p, node, position)?
        }
        None => match_with_orientation_search(&n, &p)?,
    };

    let csv = assignment_csv(&assignment, &nodes, &positions);
    let summary = assignment_summary(&assignment, &nodes, &positions, &selected);
    match &args.out {
        Some(path) => {
            std::fs::write(path, csv)?;
            let json_path = path.with_extension("json");
            std::fs::write(&json_path, format!("{:#}\n", summary))?;
        }
        None => match args.format {
            Format::Csv => emit(&csv)?,
            Format::Json => emit(&format!("{:#}\n", summary))?,
        },
    }
    Ok(())
}

/// `out` stem with `.csv` stripped, so `results.csv` yields
/// `results.<curve>.csv` rather than `results.csv.<curve>.csv`.
fn out_stem(out: &Path) -> PathBuf {
    if out.extension().is_some_and(|e| e == "csv") {
        out.with_extension("")
    } else {
        out.to_path_buf()
    }
}

fn cmd_sweep(args: SweepArgs) -> Result<(), Error> {
    if let Some(jobs) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    }

    let recipe: Preset = match &args.preset {
        Some(name) => {
            let mut p = preset(name)?;
            if let Some(r) = args.realizations {
                p.realizations = r;
            }
            p
        }
        None => {
            let kind = args.layout.kind.ok_or_else(|| {
                Error::InvalidArgument("either --preset or --kind is required".into())
            })?;
            let alignment = if args.orientation_search {
                AlignmentMode::OrientationSearch
            } else {
                AlignmentMode::AutoAnchor
            };
            Preset {
                name: kind.to_string(),
                description: String::new(),
                curves: vec![CurveSpec {
                    label: kind.to_string(),
                    kind,
                    params: LayoutParams {
                        count: args.layout.count,
                        shift: args.layout.shift,
                    },
                    eigenvectors: parse_eigenvector_flag(&args.eigenvectors)?,
                    alignment,
                }],
                snr_grid: log_grid(args.snr_min, args.snr_max, args.snr_points),
                realizations: args.realizations.unwrap_or(100),
            }
        }
    };

    let stem = out_stem(&args.out);
    let mut curves: Vec<(String, SweepResult)> = Vec::new();
    for (label, cfg) in build_sweep_configs(&recipe, args.seed)? {
        let result = run_sweep(&cfg)?;
        let path = stem.with_extension(format!("{label}.csv"));
        std::fs::write(&path, sweep_csv(&result))?;
        log::info!("wrote {}", path.display());
        curves.push((label, result));
    }
    if args.plot {
        let svg_path = stem.with_extension("svg");
        std::fs::write(&svg_path, sweep_svg(&curves, &recipe.name))?;
        log::info!("wrote {}", svg_path.display());
    }
    Ok(())
}

fn cmd_embed(args: EmbedArgs) -> Result<(), Error> {
    let layout = args.layout.load(args.seed)?;
    let distances = match &args.measurements {
        Some(path) => {
            let records = parse_rssi_csv(&std::fs::read_to_string(path)?)?;
            let labels = node_labels(&records);
            distance_matrix_from_rssi(&records, &labels, &args.model.build()?)?
        }
        None => pairwise_distances(&layout),
    };
    let decomposition = decompose(&distances)?;
    let csv = eigen_dump_csv(&decomposition);
    match &args.out {
        Some(path) => std::fs::write(path, csv)?,
        None => emit(&csv)?,
    }
    Ok(())
}

fn cmd_inspect(args: InspectArgs) -> Result<(), Error> {
    let layout = args.layout.load(args.seed)?;
    let dpos = pairwise_distances(&layout);
    let kmax = args.kmax.min(layout.len() - 1);
    let candidates = embed_first_k(&dpos, kmax)?;
    let selection = select_eigenvectors(&candidates, layout.dim(), args.resolution);
    let unresolved: Vec<[String; 2]> = selection
        .unresolved
        .iter()
        .map(|&(i, j)| [layout.labels()[i].clone(), layout.labels()[j].clone()])
        .collect();
    match args.format {
        Format::Json => {
            let report = json!({
                "positions": layout.len(),
                "spatial_dim": layout.dim(),
                "kmax": kmax,
                "resolution": args.resolution,
                "selected_eigenvectors": selection.indices,
                "resolved": selection.is_resolved(),
                "unresolved_pairs": unresolved,
            });
            emit(&format!("{:#}\n", report))?;
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&format!("positions,{}\n", layout.len()));
            out.push_str(&format!("spatial_dim,{}\n", layout.dim()));
            out.push_str(&format!("kmax,{kmax}\n"));
            out.push_str(&format!("resolution,{}\n", args.resolution));
            out.push_str(&format!(
                "selected_eigenvectors,{}\n",
                selection
                    .indices
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            out.push_str(&format!("resolved,{}\n", selection.is_resolved()));
            for [a, b] in &unresolved {
                out.push_str(&format!("unresolved_pair,{a} {b}\n"));
            }
            emit(&out)?;
        }
    }
    Ok(())
}
