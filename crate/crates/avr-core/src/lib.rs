//! Task-agnostic core for abstract visual reasoning.
//!
//! A problem panel is an ordered sequence of items (pixel images in the real
//! pipeline, plain symbols in the exact oracle). Every task supported here
//! reduces to one quantity: the predictability of a target item given the
//! remaining panel items. The judgment functions in [`judge`] turn
//! predictability scores into task answers without any training:
//!
//! - selection (RPM / VAP): argmax over candidates of the score at the
//!   missing position,
//! - odd-one-out: argmin over positions of each item's score given the rest,
//! - two-panel classification: compare the score of a query appended to each
//!   panel.
//!
//! Everything in this crate is immutable after construction and estimators
//! are read-only, so all functions are safe for concurrent use.

mod error;
mod estimator;
mod image;
pub mod judge;
mod metrics;
mod panel;
mod problem;

pub use error::AvrError;
pub use estimator::PredictabilityEstimator;
pub use image::Image;
pub use judge::{solve_o3, solve_selection, solve_svrt, O3Outcome, SelectionOutcome, SvrtVerdict};
pub use metrics::{nearest_candidate, selection_accuracy};
pub use panel::{edit_panel, Context, EditOutcome, Panel, PanelEdit};
pub use problem::{O3Problem, PanelSide, RpmProblem, SvrtProblem, VapProblem};
