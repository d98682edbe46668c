//! Thread-local multiply/add tallies for the signal-path arithmetic.
//!
//! Divisions are tallied as multiplies; square roots and comparisons are not
//! counted. Only the numeric kernels record here (correlations, variance,
//! score, template accumulation), so the tallies track the arithmetic the
//! complexity tables budget for, not control flow.

#[cfg(feature = "opcount")]
mod imp {
    use std::cell::Cell;

    thread_local! {
        static MULS: Cell<u64> = Cell::new(0);
        static ADDS: Cell<u64> = Cell::new(0);
    }

    pub fn enabled() -> bool {
        true
    }

    pub fn reset() {
        MULS.with(|c| c.set(0));
        ADDS.with(|c| c.set(0));
    }

    /// (multiplies, additions) tallied on this thread since the last reset.
    pub fn snapshot() -> (u64, u64) {
        (MULS.with(Cell::get), ADDS.with(Cell::get))
    }

    #[inline]
    pub fn record(muls: u64, adds: u64) {
        MULS.with(|c| c.set(c.get() + muls));
        ADDS.with(|c| c.set(c.get() + adds));
    }
}

#[cfg(not(feature = "opcount"))]
mod imp {
    pub fn enabled() -> bool {
        false
    }

    pub fn reset() {}

    pub fn snapshot() -> (u64, u64) {
        (0, 0)
    }

    #[inline(always)]
    pub fn record(_muls: u64, _adds: u64) {}
}

pub use imp::{enabled, record, reset, snapshot};
