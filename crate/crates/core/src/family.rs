//! Symbolic descriptions of the tree families and their command-line syntax
//! (`P,m`, `S2,t`, `T,m,t`, `TG,m,t`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::{self, RootedTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    #[serde(rename = "P")]
    Path,
    #[serde(rename = "S2")]
    Star2,
    #[serde(rename = "T")]
    TFamily,
    #[serde(rename = "TG")]
    TGFamily,
}

impl FamilyKind {
    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::Path => "P",
            FamilyKind::Star2 => "S2",
            FamilyKind::TFamily => "T",
            FamilyKind::TGFamily => "TG",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{0}")]
    Constraint(&'static str),
    #[error("unknown family {0:?}; expected one of P, S2, T, TG")]
    UnknownKind(String),
    #[error("family {kind} takes {expected} parameter(s), got {found}")]
    Arity {
        kind: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("invalid parameter {0:?}: expected a nonnegative integer")]
    BadNumber(String),
}

/// A family member such as TG_{2,5}. Unused parameters are zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub m: u32,
    pub t: u32,
}

impl FamilySpec {
    pub fn path(m: u32) -> Self {
        FamilySpec { kind: FamilyKind::Path, m, t: 0 }
    }

    pub fn star2(t: u32) -> Self {
        FamilySpec { kind: FamilyKind::Star2, m: 0, t }
    }

    pub fn tree_t(m: u32, t: u32) -> Self {
        FamilySpec { kind: FamilyKind::TFamily, m, t }
    }

    pub fn tree_tg(m: u32, t: u32) -> Self {
        FamilySpec { kind: FamilyKind::TGFamily, m, t }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        match self.kind {
            FamilyKind::Path if self.m == 0 => {
                Err(FamilyError::Constraint("path P_m requires m >= 1"))
            }
            FamilyKind::TGFamily if self.m == 0 => {
                Err(FamilyError::Constraint("TG_{m,t} requires m >= 1"))
            }
            _ => Ok(()),
        }
    }

    /// Vertex count predicted from the parameters, without building the tree.
    pub fn vertex_count(&self) -> u64 {
        let (m, t) = (u64::from(self.m), u64::from(self.t));
        match self.kind {
            FamilyKind::Path => m,
            FamilyKind::Star2 => 1 + 2 * t,
            FamilyKind::TFamily => 1 + m * (1 + 2 * t),
            FamilyKind::TGFamily => 2 + m * (4 + 6 * t),
        }
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<RootedTree, FamilyError> {
    spec.validate()?;
    let (m, t) = (spec.m as usize, spec.t as usize);
    Ok(match spec.kind {
        FamilyKind::Path => tree::path(m).expect("validated m >= 1"),
        FamilyKind::Star2 => tree::star2(t),
        FamilyKind::TFamily => tree::tree_t(m, t),
        FamilyKind::TGFamily => tree::tree_tg(m, t),
    })
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Path => write!(f, "P,{}", self.m),
            FamilyKind::Star2 => write!(f, "S2,{}", self.t),
            FamilyKind::TFamily => write!(f, "T,{},{}", self.m, self.t),
            FamilyKind::TGFamily => write!(f, "TG,{},{}", self.m, self.t),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(',');
        let head = parts.next().unwrap_or_default();
        let nums = parts
            .map(|p| p.parse::<u32>().map_err(|_| FamilyError::BadNumber(p.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let kind = match head {
            "P" | "path" => FamilyKind::Path,
            "S2" | "star2" => FamilyKind::Star2,
            "T" => FamilyKind::TFamily,
            "TG" => FamilyKind::TGFamily,
            other => return Err(FamilyError::UnknownKind(other.to_string())),
        };
        let expected = match kind {
            FamilyKind::Path | FamilyKind::Star2 => 1,
            _ => 2,
        };
        if nums.len() != expected {
            return Err(FamilyError::Arity {
                kind: kind.tag(),
                expected,
                found: nums.len(),
            });
        }
        let spec = match kind {
            FamilyKind::Path => FamilySpec::path(nums[0]),
            FamilyKind::Star2 => FamilySpec::star2(nums[0]),
            FamilyKind::TFamily => FamilySpec::tree_t(nums[0], nums[1]),
            FamilyKind::TGFamily => FamilySpec::tree_tg(nums[0], nums[1]),
        };
        spec.validate()?;
        Ok(spec)
    }
}
