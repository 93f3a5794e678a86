//! Error types shared across the crate.

use crate::poly::Polynomial;

/// A single broken restriction condition: the two fixed-point values of an
/// assignment disagree on the stabilizer of a stratum.
#[derive(Debug, Clone, PartialEq)]
pub struct CongruenceViolation {
    pub stratum: String,
    pub point_a: String,
    pub point_b: String,
    /// Canonical representative of `f(a) - f(b)` on the stabilizer; nonzero.
    pub residue: Polynomial,
}

impl std::fmt::Display for CongruenceViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "stratum {}: values at {} and {} differ on the stabilizer (residue {})",
            self.stratum, self.point_a, self.point_b, self.residue
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("xi is not generic: {0}")]
    NonGenericXi(String),

    #[error("assignment violates {} restriction condition(s); first: {}", .0.len(), .0[0])]
    Congruence(Vec<CongruenceViolation>),

    #[error("zero Euler class at {0} (a fixed point has a zero weight)")]
    ZeroEulerClass(String),

    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    #[error("missing canonical classes: {0}")]
    MissingClasses(String),

    #[error("torsion exponent exceeds cap {0}")]
    CapExceeded(u32),

    #[error("negative defect at degree 2*{k}: dim A = {dim_a} < dim H = {dim_h} (inconsistent input data)")]
    NegativeDefect { k: usize, dim_a: usize, dim_h: usize },

    #[error("invalid map data: {0}")]
    InvalidMapData(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
