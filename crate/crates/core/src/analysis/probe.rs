use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::AnalysisError;
use crate::engines::closed_form_tg;
use crate::poly::DensePolynomial;

/// Allowed gap between the fitted slope and the predicted exponent.
pub const SLOPE_TOLERANCE: f64 = 0.05;
/// Residual drift bound: |r(t) - r(t_max)| <= DRIFT_LOG_FACTOR * log2(t_max / t) + DRIFT_SLACK.
pub const DRIFT_LOG_FACTOR: f64 = 3.0;
pub const DRIFT_SLACK: f64 = 2.0;

/// Growth exponent u_k = k + floor(k/2) of the k-th reflected coefficient.
pub fn predicted_exponent(k: usize) -> usize {
    k + k / 2
}

/// log2 of a positive integer from its bit length and top 64 bits.
pub fn log2_big(n: &BigInt) -> f64 {
    assert!(n.is_positive(), "log2 of a non-positive integer");
    let bits = n.bits();
    if bits <= 64 {
        return (n.to_u64().expect("fits in 64 bits") as f64).log2();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().expect("top 64 bits");
    (top as f64).log2() + shift as f64
}

/// R I(TG_{m,t}), whose coefficients are the c_k(m,t).
pub fn reflected_tg(m: u32, t: u32) -> Result<DensePolynomial, AnalysisError> {
    if m == 0 {
        return Err(AnalysisError::ZeroM);
    }
    Ok(closed_form_tg(u64::from(m), u64::from(t))
        .reflect()
        .expect("independence polynomials are nonzero"))
}

/// c_k(m,t), the coefficient of x^{alpha - k} in I(TG_{m,t}).
pub fn reflected_coefficient(m: u32, t: u32, k: usize) -> Result<BigInt, AnalysisError> {
    let r = reflected_tg(m, t)?;
    let degree = r.degree().expect("nonzero");
    if k > degree {
        return Err(AnalysisError::IndexOutOfRange { k, degree });
    }
    Ok(r.coeff(k))
}

/// c_k c_{k+2} - c_{k+1}^2 for the even indices k = 0, 2, ..., 2(m-1).
pub fn even_index_gaps(m: u32, t: u32) -> Result<Vec<(usize, BigInt)>, AnalysisError> {
    let r = reflected_tg(m, t)?;
    Ok((0..m as usize)
        .map(|j| {
            let k = 2 * j;
            let gap = r.coeff(k) * r.coeff(k + 2) - r.coeff(k + 1) * r.coeff(k + 1);
            (k, gap)
        })
        .collect())
}

/// Growth of one reflected coefficient c_k(m,t) over a window of t.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticProbe {
    pub m: u32,
    pub k: usize,
    pub t_values: Vec<u32>,
    pub bit_lengths: Vec<u64>,
    pub log2_values: Vec<f64>,
    /// log2 c_k(m,t) - u_k t, one per probed t.
    pub residuals: Vec<f64>,
    /// Least-squares slope of log2 c_k(m,t) against t.
    pub measured_slope: f64,
    pub predicted_exponent: usize,
}

impl AsymptoticProbe {
    pub fn slope_error(&self) -> f64 {
        (self.measured_slope - self.predicted_exponent as f64).abs()
    }

    /// Largest excess of |r(t) - r(t_last)| over its allowance; <= 0 means bounded.
    pub fn worst_drift_excess(&self) -> f64 {
        let (&t_last, &r_last) = match (self.t_values.last(), self.residuals.last()) {
            (Some(t), Some(r)) => (t, r),
            _ => return 0.0,
        };
        self.t_values
            .iter()
            .zip(&self.residuals)
            .map(|(&t, &r)| {
                let allowance = DRIFT_LOG_FACTOR * (f64::from(t_last) / f64::from(t)).log2() + DRIFT_SLACK;
                (r - r_last).abs() - allowance
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn residuals_bounded(&self) -> bool {
        self.worst_drift_excess() <= 0.0
    }

    pub fn passes(&self) -> bool {
        self.slope_error() <= SLOPE_TOLERANCE && self.residuals_bounded()
    }
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Probes every k in `ks` over the same t window, building each R I(TG_{m,t}) once.
pub fn asymptotic_probes(
    m: u32,
    ks: &[usize],
    t_range: RangeInclusive<u32>,
) -> Result<Vec<AsymptoticProbe>, AnalysisError> {
    if m == 0 {
        return Err(AnalysisError::ZeroM);
    }
    let window = 2 * m as usize;
    if let Some(&k) = ks.iter().find(|&&k| k > window) {
        return Err(AnalysisError::OutsideWindow { k, window });
    }
    let t_values: Vec<u32> = t_range.collect();
    if t_values.len() < 2 {
        return Err(AnalysisError::ShortRange(t_values.len()));
    }
    let reflected: Vec<DensePolynomial> = t_values
        .iter()
        .map(|&t| reflected_tg(m, t))
        .collect::<Result<_, _>>()?;

    Ok(ks
        .iter()
        .map(|&k| {
            let u = predicted_exponent(k);
            let coeffs: Vec<BigInt> = reflected.iter().map(|r| r.coeff(k)).collect();
            let log2_values: Vec<f64> = coeffs.iter().map(log2_big).collect();
            let residuals = t_values
                .iter()
                .zip(&log2_values)
                .map(|(&t, &l)| l - (u as f64) * f64::from(t))
                .collect();
            let ts: Vec<f64> = t_values.iter().map(|&t| f64::from(t)).collect();
            AsymptoticProbe {
                m,
                k,
                t_values: t_values.clone(),
                bit_lengths: coeffs.iter().map(BigInt::bits).collect(),
                measured_slope: least_squares_slope(&ts, &log2_values),
                log2_values,
                residuals,
                predicted_exponent: u,
            }
        })
        .collect())
}

pub fn asymptotic_probe(
    m: u32,
    k: usize,
    t_range: RangeInclusive<u32>,
) -> Result<AsymptoticProbe, AnalysisError> {
    Ok(asymptotic_probes(m, &[k], t_range)?.remove(0))
}
