//! Correlation primitives shared by template training and streaming scoring:
//! circular shifts, circular and zero-padded linear cross-correlation,
//! mean-removed variance, and a deterministic lag argmax.

use crate::error::{CsqiError, Result};
use crate::opcount;
use crate::types::CorrSequence;

/// Left rotation by `t`: `out[j] = v[(j + t) mod L]`. Any `t` is reduced mod L.
pub fn circular_shift(v: &[f64], t: i64) -> Result<Vec<f64>> {
    if v.is_empty() {
        return Err(CsqiError::InvalidLength("cannot shift an empty sequence".into()));
    }
    let len = v.len();
    let t = t.rem_euclid(len as i64) as usize;
    let mut out = Vec::with_capacity(len);
    out.extend_from_slice(&v[t..]);
    out.extend_from_slice(&v[..t]);
    Ok(out)
}

/// Exhaustive circular correlation over lags `-M..=M`:
/// `out[lag] = sum_j w[j] * t[(j + lag) mod L]` with `L = 2M+1`.
///
/// This is the direct (full-cost) form; the streaming engine maintains the
/// same sequence incrementally and uses this as its refresh and oracle path.
pub fn circular_correlation(w: &[f64], t: &[f64]) -> Result<CorrSequence> {
    if w.len() != t.len() {
        return Err(CsqiError::LengthMismatch {
            left: w.len(),
            right: t.len(),
        });
    }
    if w.is_empty() || w.len() % 2 == 0 {
        return Err(CsqiError::InvalidLength(format!(
            "circular correlation needs odd length, got {}",
            w.len()
        )));
    }
    let len = w.len();
    let m = (len - 1) / 2;
    let mut values = vec![0.0; len];
    for (i, out) in values.iter_mut().enumerate() {
        let lag = i as i64 - m as i64;
        let mut acc = 0.0;
        for (j, &wj) in w.iter().enumerate() {
            let tj = (j as i64 + lag).rem_euclid(len as i64) as usize;
            acc += wj * t[tj];
        }
        *out = acc;
    }
    opcount::record((len * len) as u64, (len * (len - 1)) as u64);
    CorrSequence::new(values)
}

/// Zero-padded linear cross-correlation over lags `-(L-1)..=L-1`:
/// `out[lag] = sum_j a[j] * b[j - lag]`, out-of-range `b` terms zero.
pub fn linear_cross_correlation(a: &[f64], b: &[f64]) -> Result<CorrSequence> {
    if a.is_empty() || b.is_empty() {
        return Err(CsqiError::InvalidLength(
            "cannot correlate an empty sequence".into(),
        ));
    }
    if a.len() != b.len() {
        return Err(CsqiError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let len = a.len() as i64;
    let mut values = Vec::with_capacity(2 * a.len() - 1);
    let mut muls = 0u64;
    let mut adds = 0u64;
    for lag in -(len - 1)..=(len - 1) {
        // b[j - lag] in range needs lag <= j <= len-1+lag.
        let j_lo = lag.max(0);
        let j_hi = (len - 1 + lag).min(len - 1);
        let mut acc = 0.0;
        for j in j_lo..=j_hi {
            acc += a[j as usize] * b[(j - lag) as usize];
        }
        let n = (j_hi - j_lo + 1) as u64;
        muls += n;
        adds += n - 1;
        values.push(acc);
    }
    opcount::record(muls, adds);
    CorrSequence::new(values)
}

/// Population variance after mean removal: `(1/L) * sum (v[j] - mean)^2`.
pub fn mean_removed_variance(v: &[f64]) -> Result<f64> {
    let len = v.len();
    if len < 2 {
        return Err(CsqiError::InvalidLength(format!(
            "variance needs at least 2 samples, got {len}"
        )));
    }
    let mean = v.iter().sum::<f64>() / len as f64;
    let acc = v.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>();
    opcount::record(len as u64 + 2, 3 * len as u64 - 2);
    Ok(acc / len as f64)
}

/// Lag of the maximum signed value. Ties break toward the smallest `|lag|`,
/// then the negative lag, so the result is deterministic.
pub fn argmax_lag(c: &CorrSequence) -> i64 {
    let m = c.m() as i64;
    let mut best_lag = -m;
    let mut best = f64::NEG_INFINITY;
    for (i, &v) in c.values().iter().enumerate() {
        let lag = i as i64 - m;
        let better = v > best
            || (v == best
                && (lag.abs() < best_lag.abs()
                    || (lag.abs() == best_lag.abs() && lag < best_lag)));
        if better {
            best = v;
            best_lag = lag;
        }
    }
    best_lag
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn random_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
        (0..len).map(|_| rng.random_range(-1.0..1.0)).collect()
    }

    // Independent double-loop oracle for the circular form.
    fn circular_oracle(w: &[f64], t: &[f64]) -> Vec<f64> {
        let len = w.len();
        let m = (len - 1) / 2;
        let mut out = vec![0.0; len];
        for i in 0..len {
            let lag = i as i64 - m as i64;
            for j in 0..len {
                let tj = (j as i64 + lag).rem_euclid(len as i64) as usize;
                out[i] += w[j] * t[tj];
            }
        }
        out
    }

    // Independent double-loop oracle for the zero-padded linear form.
    fn linear_oracle(a: &[f64], b: &[f64]) -> Vec<f64> {
        let len = a.len() as i64;
        let mut out = Vec::new();
        for lag in -(len - 1)..=(len - 1) {
            let mut acc = 0.0;
            for j in 0..len {
                let k = j - lag;
                if k >= 0 && k < len {
                    acc += a[j as usize] * b[k as usize];
                }
            }
            out.push(acc);
        }
        out
    }

    #[test]
    fn shift_basic() {
        assert_eq!(circular_shift(&[1.0, 2.0, 3.0], 1).unwrap(), vec![2.0, 3.0, 1.0]);
        assert_eq!(circular_shift(&[1.0, 2.0, 3.0], 3).unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(circular_shift(&[1.0, 2.0, 3.0], -1).unwrap(), vec![3.0, 1.0, 2.0]);
        assert_eq!(circular_shift(&[1.0, 2.0, 3.0], 0).unwrap(), vec![1.0, 2.0, 3.0]);
        assert!(matches!(
            circular_shift(&[], 1),
            Err(CsqiError::InvalidLength(_))
        ));
    }

    #[test]
    fn circular_delta_autocorrelation() {
        let c = circular_correlation(&[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(c.values(), &[0.0, 1.0, 0.0]);
    }

    #[test]
    fn circular_rotation_moves_the_peak() {
        // w = shift(t, r) peaks at lag r: corr[lag] = autocorr(t)[lag - r].
        let mut r = rng(11);
        let m = 8usize;
        let t = random_vec(&mut r, 2 * m + 1);
        for rot in [-8i64, -3, -1, 0, 1, 2, 5, 8] {
            let w = circular_shift(&t, rot).unwrap();
            let c = circular_correlation(&w, &t).unwrap();
            assert_eq!(argmax_lag(&c), rot, "rotation {rot}");
        }
    }

    #[test]
    fn circular_matches_double_loop_oracle() {
        let mut r = rng(42);
        let m = 8usize;
        let w = random_vec(&mut r, 2 * m + 1);
        let t = random_vec(&mut r, 2 * m + 1);
        let got = circular_correlation(&w, &t).unwrap();
        let want = circular_oracle(&w, &t);
        for (g, w_) in got.values().iter().zip(&want) {
            assert!((g - w_).abs() < 1e-12, "{g} vs {w_}");
        }
    }

    #[test]
    fn circular_rejects_bad_lengths() {
        assert!(matches!(
            circular_correlation(&[1.0, 2.0], &[1.0, 2.0, 3.0]),
            Err(CsqiError::LengthMismatch { .. })
        ));
        assert!(circular_correlation(&[1.0, 2.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn linear_delta() {
        let c = linear_cross_correlation(&[1.0, 0.0, 0.0], &[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(c.values(), &[0.0, 0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn linear_pure_offset() {
        // a is b delayed by two samples; the peak sits at lag +2.
        let c = linear_cross_correlation(&[0.0, 0.0, 1.0], &[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(argmax_lag(&c), 2);
        assert_eq!(c.value_at_lag(2), Some(1.0));
    }

    #[test]
    fn linear_matches_double_loop_oracle() {
        let mut r = rng(7);
        let a = random_vec(&mut r, 17);
        let b = random_vec(&mut r, 17);
        let got = linear_cross_correlation(&a, &b).unwrap();
        let want = linear_oracle(&a, &b);
        for (g, w_) in got.values().iter().zip(&want) {
            assert!((g - w_).abs() < 1e-12, "{g} vs {w_}");
        }
    }

    #[test]
    fn linear_rejects_bad_lengths() {
        assert!(matches!(
            linear_cross_correlation(&[1.0], &[1.0, 2.0]),
            Err(CsqiError::LengthMismatch { .. })
        ));
        assert!(matches!(
            linear_cross_correlation(&[], &[]),
            Err(CsqiError::InvalidLength(_))
        ));
    }

    #[test]
    fn variance_examples() {
        assert_eq!(mean_removed_variance(&[5.0, 5.0, 5.0, 5.0]).unwrap(), 0.0);
        assert_eq!(mean_removed_variance(&[1.0, -1.0, 1.0, -1.0]).unwrap(), 1.0);
        // mean 1.5, squared deviations sum 5, over 4.
        assert_eq!(mean_removed_variance(&[0.0, 1.0, 2.0, 3.0]).unwrap(), 1.25);
        assert!(mean_removed_variance(&[1.0]).is_err());
    }

    #[test]
    fn argmax_tie_breaking() {
        let c = CorrSequence::new(vec![0.0, 1.0, 0.0]).unwrap();
        assert_eq!(argmax_lag(&c), 0);
        let c = CorrSequence::new(vec![3.0, 3.0, 3.0]).unwrap();
        assert_eq!(argmax_lag(&c), 0);
        let c = CorrSequence::new(vec![5.0, 2.0, 5.0]).unwrap();
        assert_eq!(argmax_lag(&c), -1);
        // Signed max: a large negative value never wins.
        let c = CorrSequence::new(vec![-9.0, 1.0, 0.5]).unwrap();
        assert_eq!(argmax_lag(&c), 0);
    }
}
