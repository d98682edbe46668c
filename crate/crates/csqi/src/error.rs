//! Error type shared across the crate.

use std::path::PathBuf;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, CsqiError>;

#[derive(Debug, Error)]
pub enum CsqiError {
    #[error("invalid length: {0}")]
    InvalidLength(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("no fiducial points found")]
    NoFiducials,
    #[error("need at least {needed} fiducial points, found {found}")]
    InsufficientFiducials { needed: usize, found: usize },
    #[error("estimated period of {0} samples is too short")]
    PeriodTooShort(usize),
    #[error(
        "template training failed: {accepted} of {visited} windows accepted (minimum {min})"
    )]
    TemplateTrainingFailed {
        accepted: usize,
        visited: usize,
        min: usize,
    },
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("non-finite sample at stream position {0}")]
    InvalidSample(u64),
    #[error("engine not primed")]
    NotPrimed,
    #[error("template is flat: zero variance after mean removal")]
    DegenerateTemplate,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("region {start}..{end} invalid for length {len}")]
    InvalidRegion {
        start: usize,
        end: usize,
        len: usize,
    },
    #[error("signal has zero power over the mix region")]
    DegenerateSignal,
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: parse error: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },
    #[error("sample rate missing: no `# fs=` header and no override given")]
    MissingSampleRate,
    #[error("unsupported template file version: {0:?}")]
    UnsupportedVersion(String),
    #[error("corrupt template file: {0}")]
    CorruptTemplate(String),
    #[error("arithmetic instrumentation disabled; rebuild with the `opcount` feature")]
    InstrumentationDisabled,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("configuration mismatch: {0}")]
    ConfigMismatch(String),
    #[error("sweep cell failed (kind={kind}, snr={snr_db} dB, instance={instance}): {source}")]
    SweepCell {
        kind: String,
        snr_db: f64,
        instance: u32,
        #[source]
        source: Box<CsqiError>,
    },
}
