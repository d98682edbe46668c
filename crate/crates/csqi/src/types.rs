//! Core domain types: sampled records, analysis windows, lag-indexed
//! correlation sequences.

use crate::error::{CsqiError, Result};

/// A uniformly sampled real-valued sequence with its sampling rate.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalRecord {
    pub samples: Vec<f64>,
    pub fs: f64,
}

impl SignalRecord {
    /// Validates that every sample is finite and `fs > 0`.
    pub fn new(samples: Vec<f64>, fs: f64) -> Result<Self> {
        if !(fs > 0.0) || !fs.is_finite() {
            return Err(CsqiError::InvalidConfig(format!(
                "sampling rate must be positive, got {fs}"
            )));
        }
        if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
            return Err(CsqiError::InvalidSample(i as u64));
        }
        Ok(Self { samples, fs })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.samples.len() as f64 / self.fs
    }
}

/// A window of odd length `2M+1` centered on a sample of the source record.
#[derive(Debug, Clone, PartialEq)]
pub struct Window {
    pub values: Vec<f64>,
    pub center_index: usize,
}

impl Window {
    pub fn new(values: Vec<f64>, center_index: usize) -> Result<Self> {
        if values.is_empty() || values.len() % 2 == 0 {
            return Err(CsqiError::InvalidLength(format!(
                "window length must be odd, got {}",
                values.len()
            )));
        }
        Ok(Self {
            values,
            center_index,
        })
    }

    /// Window of length `2m+1` centered at `center` in `record`.
    pub fn from_record(record: &SignalRecord, center: usize, m: usize) -> Result<Self> {
        let len = 2 * m + 1;
        if center < m || center + m >= record.len() {
            return Err(CsqiError::InsufficientData(format!(
                "window of length {len} centered at {center} does not fit in {} samples",
                record.len()
            )));
        }
        Ok(Self {
            values: record.samples[center - m..=center + m].to_vec(),
            center_index: center,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn half_length(&self) -> usize {
        (self.values.len() - 1) / 2
    }
}

/// Correlation values indexed by lag, lags running `-M..=M` in order.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrSequence {
    values: Vec<f64>,
}

impl CorrSequence {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() || values.len() % 2 == 0 {
            return Err(CsqiError::InvalidLength(format!(
                "correlation sequence length must be odd, got {}",
                values.len()
            )));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Half-length M; lags run from `-M` to `M`.
    pub fn m(&self) -> usize {
        (self.values.len() - 1) / 2
    }

    pub fn lags(&self) -> impl Iterator<Item = i64> + '_ {
        let m = self.m() as i64;
        -m..=m
    }

    pub fn value_at_lag(&self, lag: i64) -> Option<f64> {
        let i = lag + self.m() as i64;
        if i < 0 || i as usize >= self.values.len() {
            None
        } else {
            Some(self.values[i as usize])
        }
    }
}
