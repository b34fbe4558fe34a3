//! Guard against accidentally unbounded enumerations.

use num_bigint::BigUint;
use thiserror::Error;

/// Environment variable that overrides [`WorkLimit::DEFAULT`].
pub const MAX_WORK_ENV: &str = "CLUSTERCOMB_MAX_WORK";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("estimated {estimate} objects exceeds the work limit of {limit}; set {MAX_WORK_ENV} to raise it")]
pub struct SizeLimitExceeded {
    pub estimate: BigUint,
    pub limit: u64,
}

/// Upper bound on the number of objects an exhaustive routine may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorkLimit {
    max: u64,
}

impl WorkLimit {
    pub const DEFAULT: u64 = 2_000_000;

    pub fn new(max: u64) -> Self {
        WorkLimit { max }
    }

    pub fn unbounded() -> Self {
        WorkLimit { max: u64::MAX }
    }

    /// Reads [`MAX_WORK_ENV`], falling back to [`WorkLimit::DEFAULT`] when the
    /// variable is unset or unparsable.
    pub fn from_env() -> Self {
        let max = std::env::var(MAX_WORK_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .unwrap_or(Self::DEFAULT);
        WorkLimit { max }
    }

    pub fn max(&self) -> u64 {
        self.max
    }

    pub fn check(&self, estimate: &BigUint) -> Result<(), SizeLimitExceeded> {
        if *estimate > BigUint::from(self.max) {
            Err(SizeLimitExceeded {
                estimate: estimate.clone(),
                limit: self.max,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for WorkLimit {
    fn default() -> Self {
        Self::from_env()
    }
}
