//! Independence polynomial engines.
//!
//! [`indpoly_dp`] is the production engine. [`indpoly_recursive`] applies the
//! vertex-deletion recursion literally and [`indpoly_bruteforce`] enumerates
//! subsets; both exist to cross-check it. The closed forms cover the
//! S_{2,t}, T_{m,t} and TG_{m,t} families directly from their parameters.

mod bruteforce;
mod closed_form;
mod dp;
mod recursive;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use bruteforce::{indpoly_bruteforce, BRUTE_FORCE_MAX_VERTICES};
pub use closed_form::{closed_form_s, closed_form_t, closed_form_tg};
pub use dp::{independence_number, indpoly_dp, subtree_table, SubtreeTable};
pub use recursive::indpoly_recursive;

use crate::family::{FamilyKind, FamilySpec};
use crate::poly::DensePolynomial;
use crate::tree::RootedTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("brute force is limited to {max} vertices, tree has {n}")]
    TooLarge { n: usize, max: usize },
    #[error("the closed-form engine covers the S2, T and TG families only")]
    NoClosedForm,
    #[error("unknown engine {0:?}; expected dp, recursive, bruteforce or closed-form")]
    Unknown(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Dp,
    Recursive,
    BruteForce,
    ClosedForm,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Dp => "dp",
            Engine::Recursive => "recursive",
            Engine::BruteForce => "bruteforce",
            Engine::ClosedForm => "closed-form",
        }
    }

    /// Runs a tree-based engine. The closed form needs a family, see [`Engine::run_family`].
    pub fn run_tree(self, tree: &RootedTree) -> Result<DensePolynomial, EngineError> {
        match self {
            Engine::Dp => Ok(indpoly_dp(tree)),
            Engine::Recursive => Ok(indpoly_recursive(tree)),
            Engine::BruteForce => indpoly_bruteforce(tree),
            Engine::ClosedForm => Err(EngineError::NoClosedForm),
        }
    }

    /// Runs any engine on a family member. Brute force size is checked before
    /// the tree is built.
    pub fn run_family(self, spec: &FamilySpec, tree: &RootedTree) -> Result<DensePolynomial, EngineError> {
        match self {
            Engine::ClosedForm => {
                let (m, t) = (u64::from(spec.m), u64::from(spec.t));
                match spec.kind {
                    FamilyKind::Path => Err(EngineError::NoClosedForm),
                    FamilyKind::Star2 => Ok(closed_form_s(t)),
                    FamilyKind::TFamily => Ok(closed_form_t(m, t)),
                    FamilyKind::TGFamily => Ok(closed_form_tg(m, t)),
                }
            }
            other => other.run_tree(tree),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dp" => Ok(Engine::Dp),
            "recursive" => Ok(Engine::Recursive),
            "bruteforce" | "brute-force" => Ok(Engine::BruteForce),
            "closed-form" | "closed" => Ok(Engine::ClosedForm),
            other => Err(EngineError::Unknown(other.to_string())),
        }
    }
}
