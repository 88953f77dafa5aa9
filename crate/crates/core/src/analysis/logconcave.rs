use num_bigint::BigInt;
use num_traits::Signed;

use super::AnalysisError;
use crate::poly::DensePolynomial;

/// Interior differences a_k^2 - a_{k-1} a_{k+1} and what they imply.
#[derive(Debug, Clone, PartialEq)]
pub struct LogConcavityReport {
    pub degree: usize,
    /// `diffs[k - 1]` holds the difference at index k, for 1 <= k <= degree - 1.
    pub diffs: Vec<BigInt>,
    /// Indices k with a_k^2 < a_{k-1} a_{k+1}, ascending.
    pub violations: Vec<usize>,
    pub unimodal: bool,
    /// First position of a maximal coefficient.
    pub mode_index: usize,
    /// Degree below two: no interior index exists.
    pub trivial: bool,
}

impl LogConcavityReport {
    pub fn diff(&self, k: usize) -> Option<&BigInt> {
        k.checked_sub(1).and_then(|i| self.diffs.get(i))
    }

    pub fn is_log_concave(&self) -> bool {
        self.violations.is_empty()
    }

    /// One of `+`, `-`, `0` per interior index.
    pub fn diffs_sign(&self) -> String {
        self.diffs
            .iter()
            .map(|d| {
                if d.is_positive() {
                    '+'
                } else if d.is_negative() {
                    '-'
                } else {
                    '0'
                }
            })
            .collect()
    }
}


pub fn log_concavity_report(p: &DensePolynomial) -> Result<LogConcavityReport, AnalysisError> {
    let a = p.coeffs();
    let degree = p.degree().ok_or(AnalysisError::ZeroPolynomial)?;
    if let Some(index) = a.iter().position(Signed::is_negative) {
        return Err(AnalysisError::NegativeCoefficient { index });
    }
    let diffs: Vec<BigInt> = (1..degree)
        .map(|k| &a[k] * &a[k] - &a[k - 1] * &a[k + 1])
        .collect();
    let violations = diffs
        .iter()
        .enumerate()
        .filter(|(_, d)| d.is_negative())
        .map(|(i, _)| i + 1)
        .collect();
    let mode_index = a
        .iter()
        .enumerate()
        .fold(0, |best, (k, c)| if c > &a[best] { k } else { best });
    Ok(LogConcavityReport {
        degree,
        diffs,
        violations,
        unimodal: is_unimodal(a),
        mode_index,
        trivial: degree < 2,
    })
}

/// Weakly rises to a maximum, then weakly falls.
pub fn is_unimodal(a: &[BigInt]) -> bool {
    let mut falling = false;
    for w in a.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if falling && w[1] > w[0] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> DensePolynomial {
        DensePolynomial::from_i64s(c)
    }

    #[test]
    fn binomials_are_log_concave() {
        let r = log_concavity_report(&p(&[1, 1]).pow(8)).unwrap();
        assert!(r.violations.is_empty());
        assert!(r.unimodal);
        assert_eq!(r.mode_index, 4);
        assert_eq!(r.diffs.len(), 7);
        assert_eq!(r.diffs_sign(), "+++++++");
    }

    #[test]
    fn single_break() {
        let r = log_concavity_report(&p(&[1, 1, 2])).unwrap();
        assert_eq!(r.violations, vec![1]);
        assert_eq!(r.diff(1), Some(&BigInt::from(-1)));
        assert_eq!(r.diffs_sign(), "-");
        assert!(r.unimodal);
    }

    #[test]
    fn zero_difference_is_not_a_break() {
        // 1, 2, 4: 4 - 4 = 0
        let r = log_concavity_report(&p(&[1, 2, 4])).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.diffs_sign(), "0");
        assert!(r.diff(0).is_none());
        assert!(r.diff(2).is_none());
    }

    #[test]
    fn short_sequences_are_trivial() {
        for q in [p(&[3]), p(&[1, 5])] {
            let r = log_concavity_report(&q).unwrap();
            assert!(r.trivial && r.is_log_concave() && r.diffs.is_empty());
        }
        assert_eq!(
            log_concavity_report(&DensePolynomial::zero()),
            Err(AnalysisError::ZeroPolynomial)
        );
    }

    #[test]
    fn rejects_negative_coefficients() {
        assert_eq!(
            log_concavity_report(&p(&[1, -2, 1])),
            Err(AnalysisError::NegativeCoefficient { index: 1 })
        );
    }

    #[test]
    fn unimodality() {
        let v = |c: &[i64]| c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert!(is_unimodal(&v(&[1, 3, 3, 2, 2, 1])));
        assert!(!is_unimodal(&v(&[1, 3, 2, 4])));
        assert!(is_unimodal(&v(&[])));
    }
}
