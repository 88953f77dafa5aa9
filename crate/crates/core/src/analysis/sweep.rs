use super::logconcave::log_concavity_report;
use super::AnalysisError;
use crate::engines::closed_form_tg;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub t: u32,
    pub degree: usize,
    pub violations: Vec<usize>,
}

/// Violation sets of I(TG_{m,t}) for t = 0..=t_max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremSweep {
    pub m: u32,
    pub t_max: u32,
    pub rows: Vec<SweepRow>,
    /// Smallest t from which every row up to t_max has exactly m violations.
    pub minimal_t: Option<u32>,
    /// Every row from `minimal_t` on breaks exactly at degree - 1 - 2j, j < m.
    pub pattern_holds: bool,
}

/// {alpha - 1 - 2j : 0 <= j < m}, ascending.
pub fn expected_violation_pattern(m: u32, degree: usize) -> Vec<usize> {
    (0..m as usize).rev().map(|j| degree - 1 - 2 * j).collect()
}

pub fn theorem_sweep(m: u32, t_max: u32) -> Result<TheoremSweep, AnalysisError> {
    if m == 0 {
        return Err(AnalysisError::ZeroM);
    }
    let rows = (0..=t_max)
        .map(|t| {
            let poly = closed_form_tg(u64::from(m), u64::from(t));
            let report = log_concavity_report(&poly)?;
            Ok(SweepRow {
                t,
                degree: report.degree,
                violations: report.violations,
            })
        })
        .collect::<Result<Vec<_>, AnalysisError>>()?;

    let exact = |row: &SweepRow| row.violations.len() == m as usize;
    let tail = rows.iter().rev().take_while(|r| exact(r)).count();
    let minimal_t = (tail > 0).then(|| rows[rows.len() - tail].t);
    let pattern_holds = tail > 0
        && rows[rows.len() - tail..]
            .iter()
            .all(|r| r.violations == expected_violation_pattern(m, r.degree));
    Ok(TheoremSweep {
        m,
        t_max,
        rows,
        minimal_t,
        pattern_holds,
    })
}

/// Smallest t <= t_max with exactly m violations at every t' in [t, t_max].
pub fn minimal_t(m: u32, t_max: u32) -> Result<Option<u32>, AnalysisError> {
    Ok(theorem_sweep(m, t_max)?.minimal_t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern() {
        assert_eq!(expected_violation_pattern(2, 37), vec![34, 36]);
        assert_eq!(expected_violation_pattern(4, 85), vec![78, 80, 82, 84]);
    }

    #[test]
    fn small_sweep() {
        let sweep = theorem_sweep(2, 6).unwrap();
        assert_eq!(sweep.rows.len(), 7);
        assert_eq!(sweep.rows[5].violations, vec![34, 36]);
        assert_eq!(sweep.rows[5].degree, 37);
        assert!(sweep.minimal_t.unwrap() <= 5);
        assert!(sweep.pattern_holds);
    }

    #[test]
    fn no_tail_means_not_found() {
        // TG_{5,t} for t <= 5 is log-concave
        let sweep = theorem_sweep(5, 5).unwrap();
        assert_eq!(sweep.minimal_t, None);
        assert!(!sweep.pattern_holds);
        assert_eq!(theorem_sweep(0, 3).unwrap_err(), AnalysisError::ZeroM);
    }
}
