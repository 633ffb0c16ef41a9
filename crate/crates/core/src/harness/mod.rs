//! Claim registry, deterministic parallel sweeps and report emitters.

use thiserror::Error;

use crate::divisibility::DivisibilityError;
use crate::floor::FloorError;
use crate::qseries::QError;

pub mod registry;
pub mod report;
pub mod sweep;

pub use registry::{claims, list_claims, lookup, Bounds, ClaimKind, ClaimRecord, Param, MAX_Q_DEGREE};
pub use report::{emit_report, Counterexample, Format, RunReport, Verdict};
pub use sweep::{default_workers, run_claim};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown claim `{0}` (see `binodiv list`)")]
    UnknownClaim(String),
    #[error("{claim}: {param} = {value} exceeds the cap {cap}")]
    RangeTooLarge {
        claim: String,
        param: String,
        value: u64,
        cap: u64,
    },
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("unknown report format `{0}` (expected json, csv or text)")]
    UnknownFormat(String),
    #[error(transparent)]
    Divisibility(#[from] DivisibilityError),
    #[error(transparent)]
    Floor(#[from] FloorError),
    #[error(transparent)]
    Q(#[from] QError),
    #[error("report serialization: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl HarnessError {
    /// Usage and validation problems, as opposed to failures inside a check.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            HarnessError::UnknownClaim(_)
                | HarnessError::RangeTooLarge { .. }
                | HarnessError::InvalidRange(_)
                | HarnessError::UnknownFormat(_)
        )
    }
}
