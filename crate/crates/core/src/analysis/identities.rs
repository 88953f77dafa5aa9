use std::fmt;

use thiserror::Error;

use super::AnalysisError;
use crate::engines::indpoly_dp;
use crate::poly::DensePolynomial;
use crate::tree::{star2, tree_t, tree_tg};

/// The exact reflected-polynomial identities checked for TG_{m,t}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReflectedIdentity {
    /// R I(TG_{m,t}) = (x+1) R I(T_{3,t})^m + R I(S_{2,t})^{3m}
    Tg,
    /// R I(S_{2,t}) = (x+1)^t + x (x+2)^t
    Star,
    /// R I(T_{3,t}) = R I(S_{2,t})^3 + x^2 (x+2)^{3t}
    T3,
}

impl fmt::Display for ReflectedIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReflectedIdentity::Tg => "R I(TG_{m,t}) = (x+1) R I(T_{3,t})^m + R I(S_{2,t})^{3m}",
            ReflectedIdentity::Star => "R I(S_{2,t}) = (x+1)^t + x (x+2)^t",
            ReflectedIdentity::T3 => "R I(T_{3,t}) = R I(S_{2,t})^3 + x^2 (x+2)^{3t}",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("identity {identity} fails for m = {m}, t = {t}: first difference at x^{first_difference}")]
pub struct IdentityFailure {
    pub identity: ReflectedIdentity,
    pub m: u32,
    pub t: u32,
    pub first_difference: usize,
}

fn first_difference(a: &DensePolynomial, b: &DensePolynomial) -> Option<usize> {
    let len = a.coeffs().len().max(b.coeffs().len());
    (0..len).find(|&k| a.coeff(k) != b.coeff(k))
}

/// Computes I(S_{2,t}), I(T_{3,t}) and I(TG_{m,t}) with the tree DP on the
/// constructed trees, reflects them, and compares against the right-hand
/// sides built from binomial powers. Errors name the first failing identity.
pub fn check_reflected_identities(m: u32, t: u32) -> Result<(), AnalysisError> {
    if m == 0 {
        return Err(AnalysisError::ZeroM);
    }
    let (mu, tu) = (m as usize, t as usize);
    let refl = |p: DensePolynomial| p.reflect().expect("independence polynomials are nonzero");
    let r_star = refl(indpoly_dp(&star2(tu)));
    let r_t3 = refl(indpoly_dp(&tree_t(3, tu)));
    let r_tg = refl(indpoly_dp(&tree_tg(mu, tu)));

    let x_plus_1 = DensePolynomial::linear(1, 1);
    let x_plus_2 = DensePolynomial::linear(2, 1);
    let (m64, t64) = (u64::from(m), u64::from(t));

    let checks = [
        (
            ReflectedIdentity::Star,
            &r_star,
            x_plus_1.pow(t64).add(&x_plus_2.pow(t64).shift(1)),
        ),
        (
            ReflectedIdentity::T3,
            &r_t3,
            r_star.pow(3).add(&x_plus_2.pow(3 * t64).shift(2)),
        ),
        (
            ReflectedIdentity::Tg,
            &r_tg,
            x_plus_1.mul(&r_t3.pow(m64)).add(&r_star.pow(3 * m64)),
        ),
    ];
    for (identity, lhs, rhs) in checks {
        if let Some(k) = first_difference(lhs, &rhs) {
            return Err(IdentityFailure {
                identity,
                m,
                t,
                first_difference: k,
            }
            .into());
        }
    }
    Ok(())
}

pub fn verify_reflected_identities(m: u32, t: u32) -> bool {
    check_reflected_identities(m, t).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn holds_on_small_instances() {
        assert!(verify_reflected_identities(1, 1));
        assert!(verify_reflected_identities(2, 5));
        assert!(verify_reflected_identities(1, 0));
    }

    #[test]
    fn t_zero_collapse() {
        let lhs = DensePolynomial::linear(1, 1).pow(0).add(&DensePolynomial::linear(2, 1).pow(0).shift(1));
        assert_eq!(lhs, DensePolynomial::linear(1, 1));
    }

    #[test]
    fn rejects_m_zero() {
        assert_eq!(check_reflected_identities(0, 3), Err(AnalysisError::ZeroM));
        assert!(!verify_reflected_identities(0, 3));
    }

    #[test]
    fn reports_first_difference() {
        let a = DensePolynomial::from_i64s(&[1, 2, 3]);
        let b = DensePolynomial::from_i64s(&[1, 2, 4, 1]);
        assert_eq!(first_difference(&a, &b), Some(2));
        assert_eq!(first_difference(&a, &a), None);
    }
}
