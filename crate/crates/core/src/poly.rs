//! Dense polynomials with arbitrary-precision integer coefficients.
//!
//! `coeffs[k]` is the coefficient of x^k. The vector is normalized: it is
//! either empty (the zero polynomial) or ends in a nonzero entry.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial has no degree and cannot be reflected")]
    ZeroPolynomial,
    #[error("coefficient {index} is not a decimal integer: {text:?}")]
    BadCoefficient { index: usize, text: String },
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DensePolynomial {
    coeffs: Vec<BigInt>,
}

impl DensePolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DensePolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        DensePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        DensePolynomial {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// `a + b x`, the building block for (1+x), (1+2x), (x+2), ...
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64s(&[a, b])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of x^k; zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DensePolynomial { coeffs }
    }

    /// Value at x = 1.
    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Self::new(coeffs)
    }

    /// Schoolbook convolution.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// The reflected polynomial x^n p(1/x) with n = deg p: the coefficient
    /// sequence reversed. Leading zeros of the reversal (from p(0) = 0) drop.
    pub fn reflect(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(Self::new(self.coeffs.iter().rev().cloned().collect()))
    }

    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            coeffs: self.coeffs.iter().map(BigInt::to_string).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("string vector serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, PolyError> {
        let raw: PolyJson =
            serde_json::from_str(text).map_err(|e| PolyError::Json(e.to_string()))?;
        raw.try_into()
    }
}

/// Wire form: `{"coeffs": ["1", "12", ...]}`, decimal strings indexed by power.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

impl TryFrom<PolyJson> for DensePolynomial {
    type Error = PolyError;

    fn try_from(raw: PolyJson) -> Result<Self, Self::Error> {
        raw.coeffs
            .iter()
            .enumerate()
            .map(|(index, text)| {
                text.parse::<BigInt>().map_err(|_| PolyError::BadCoefficient {
                    index,
                    text: text.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(DensePolynomial::new)
    }
}

impl Add for &DensePolynomial {
    type Output = DensePolynomial;

    fn add(self, rhs: Self) -> DensePolynomial {
        DensePolynomial::add(self, rhs)
    }
}

impl Mul for &DensePolynomial {
    type Output = DensePolynomial;

    fn mul(self, rhs: Self) -> DensePolynomial {
        DensePolynomial::mul(self, rhs)
    }
}

impl fmt::Display for DensePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
