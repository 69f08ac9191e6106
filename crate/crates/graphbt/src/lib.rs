//! Front end for `graphbt-core`: JSON problem specs and reports, mode
//! selection, a brute-force oracle, and the grid and subdirect experiment suites.

pub mod corpus;
pub mod experiment;
pub mod grid;
pub mod oracle;
pub mod run;
pub mod spec;
pub mod subdirect;

pub use graphbt_core as core;

pub use grid::{grid_spec, make_grid_group, GridKind};
pub use oracle::oracle;
pub use run::{run, run_with, verify_report, ResultReport, Solutions};
pub use spec::{ConstraintSpec, Goal, Mode, ProblemSpec};
pub use subdirect::{make_subdirect, subdirect_spec, transitive_catalogue};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid spec: {0}")]
    Spec(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] graphbt_core::Error),
    #[error("too large for the oracle: {0}")]
    OracleTooLarge(String),
    #[error("invalid experiment: {0}")]
    Experiment(String),
    #[error("no proper subdirect product found after {0} attempts")]
    Generation(usize),
}
