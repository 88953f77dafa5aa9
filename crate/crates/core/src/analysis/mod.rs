//! Log-concavity reports, exact reflected identities, and the numerical
//! probes of reflected-coefficient growth for the TG_{m,t} family.

mod identities;
mod logconcave;
mod probe;
mod sweep;

use thiserror::Error;

pub use identities::{check_reflected_identities, verify_reflected_identities, IdentityFailure, ReflectedIdentity};
pub use logconcave::{is_unimodal, log_concavity_report, LogConcavityReport};
pub use probe::{
    asymptotic_probe, asymptotic_probes, even_index_gaps, log2_big, predicted_exponent,
    reflected_coefficient, reflected_tg, AsymptoticProbe, DRIFT_LOG_FACTOR, DRIFT_SLACK,
    SLOPE_TOLERANCE,
};
pub use sweep::{expected_violation_pattern, minimal_t, theorem_sweep, SweepRow, TheoremSweep};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("coefficient {index} is negative")]
    NegativeCoefficient { index: usize },
    #[error("the zero polynomial has no coefficient sequence to analyse")]
    ZeroPolynomial,
    #[error("TG_{{m,t}} requires m >= 1")]
    ZeroM,
    #[error("coefficient index {k} exceeds the degree {degree}")]
    IndexOutOfRange { k: usize, degree: usize },
    #[error("k = {k} lies outside the window k <= 2m = {window}")]
    OutsideWindow { k: usize, window: usize },
    #[error("probe needs at least two t values, got {0}")]
    ShortRange(usize),
    #[error(transparent)]
    Identity(#[from] IdentityFailure),
}
