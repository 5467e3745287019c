//! Match anonymous wireless nodes to the labeled positions of a
//! blueprint using nothing but pairwise signal-strength measurements.
//!
//! Given `M` nodes that can measure RSSI between each other and `M`
//! candidate positions from a floor plan, the pipeline is:
//!
//! 1. [`channel`] converts RSSI to distance estimates through a
//!    log-distance path-loss model (and, in simulation, the other way
//!    plus Gaussian noise at a prescribed SNR).
//! 2. [`embedding`] turns each distance matrix into diffusion-map
//!    coordinates: Gaussian-kernel similarities, the random-walk
//!    normalized Laplacian, and its lowest non-trivial eigenvectors.
//! 3. [`matching`] resolves the per-axis sign ambiguity (anchor node or
//!    exhaustive orientation search) and computes the minimum-cost
//!    node-to-position assignment with the Hungarian algorithm.
//! 4. [`experiments`] wraps the whole thing in a reproducible
//!    Monte-Carlo harness with accuracy-vs-SNR sweeps and confidence
//!    intervals.
//!
//! The `book/` directory of the repository walks through the same
//! pipeline chapter by chapter; the examples there mirror the doc-tests
//! below.
//!
//! # Example: noiseless self-matching
//!
//! ```
//! use wlmp::geometry::{generate_layout, pairwise_distances, LayoutKind, LayoutParams};
//! use wlmp::embedding::embed;
//! use wlmp::matching::match_with_orientation_search;
//!
//! let layout = generate_layout(LayoutKind::Factory, &LayoutParams::default(), 0)?;
//! let distances = pairwise_distances(&layout);
//! let positions = embed(&distances, &[1, 2])?;
//! let nodes = embed(&distances, &[1, 2])?;
//! let assignment = match_with_orientation_search(&nodes, &positions)?;
//! assert_eq!(assignment.pairs, (0..layout.len()).collect::<Vec<_>>());
//! assert!(assignment.total_cost < 1e-9);
//! # Ok::<(), wlmp::Error>(())
//! ```
//!
//! # Example: one noisy simulated trial
//!
//! ```
//! use wlmp::channel::PropagationModel;
//! use wlmp::experiments::{run_trial, AlignmentMode, EigenvectorChoice, TrialConfig};
//! use wlmp::geometry::{generate_layout, pairwise_distances, GroundTruth, LayoutKind, LayoutParams};
//!
//! let layout = generate_layout(LayoutKind::Grid2d, &LayoutParams::default(), 0)?;
//! let truth = GroundTruth::random(layout.len(), 7);
//! let model = PropagationModel::calibrated(&pairwise_distances(&layout))?;
//! let outcome = run_trial(&TrialConfig {
//!     layout,
//!     truth,
//!     model,
//!     eigenvectors: EigenvectorChoice::auto(),
//!     alignment: AlignmentMode::AutoAnchor,
//!     snr: 50.0,
//!     seed: 1,
//! })?;
//! assert!(outcome.accuracy > 0.9);
//! # Ok::<(), wlmp::Error>(())
//! ```

pub mod channel;
pub mod embedding;
pub mod error;
pub mod experiments;
pub mod geometry;
pub mod matching;
pub mod plot;

pub use error::{Error, Result};
