use qdirac::dirac::{Family, Ratio, TProfile};
use qdirac::{AlgebraError, Scalar, Uq};
use thiserror::Error;

use crate::literal::parse_scalar;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("rank {0} is outside the supported range 2..=4")]
    RankOutOfRange(usize),
    #[error("degree bound {bound} is too small for rank {rank}; the minimal sufficient bound is {minimal}")]
    BoundTooSmall { rank: usize, bound: usize, minimal: usize },
    #[error("cannot parse literal {literal:?}: {reason}")]
    Literal { literal: String, reason: String },
    #[error("c0 must be nonzero")]
    ZeroC0,
    #[error("c0 and c1 must both be numeric or both be \"symbolic\"")]
    MixedSymbolic,
    #[error("unknown check group {0:?}")]
    UnknownCheck(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Scaling constant: an exact literal or the free parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CValue {
    Value(Scalar),
    Symbolic,
}

impl CValue {
    pub fn parse(src: &str) -> Result<Self, ConfigError> {
        if src.trim() == "symbolic" {
            return Ok(Self::Symbolic);
        }
        parse_scalar(src).map(Self::Value)
    }

    pub fn render(&self) -> String {
        match self {
            Self::Value(x) => x.to_string(),
            Self::Symbolic => "symbolic".into(),
        }
    }
}

/// Which scalings feed the Dirac checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CProfile {
    /// `c_k = c_0 (c_1/c_0)^k q^{-k(k−1)}`.
    TProfile,
    /// `c_k = (c_1²/c_0) q^{-k(k−1)}` for `k ≥ 2`.
    Printed,
    /// `c_k ≡ 1`: the ratio condition fails and the theorem checks become
    /// negative controls.
    AllOnes,
}

impl CProfile {
    pub fn name(self) -> &'static str {
        match self {
            Self::TProfile => "tprofile",
            Self::Printed => "tprofile-printed",
            Self::AllOnes => "all-ones",
        }
    }
}

pub const CHECK_GROUPS: [&str; 7] = ["scalar", "freealg", "uqalg", "rootvec", "qext", "qcliff", "dirac"];

/// Smallest completion bound for which every check stays within the
/// truncated rewriting system and the PBW counts reach height 6; found by
/// sweeping the bound and comparing reports.
pub fn minimal_bound(rank: usize) -> usize {
    (rank + 3).max(6)
}

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub rank: usize,
    pub degree_bound: usize,
    pub c0: CValue,
    pub c1: CValue,
    pub c_profile: CProfile,
    /// Check-id prefixes; empty means everything.
    pub checks: Vec<String>,
    pub extended: bool,
    pub timings: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            rank: 2,
            degree_bound: Uq::default_bound(2),
            c0: CValue::Value(Scalar::one()),
            c1: CValue::Value(Scalar::one()),
            c_profile: CProfile::TProfile,
            checks: Vec::new(),
            extended: false,
            timings: false,
        }
    }
}

impl CheckConfig {
    pub fn for_rank(rank: usize) -> Self {
        Self {
            rank,
            degree_bound: Uq::default_bound(rank),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(2..=4).contains(&self.rank) {
            return Err(ConfigError::RankOutOfRange(self.rank));
        }
        let minimal = minimal_bound(self.rank);
        if self.degree_bound < minimal {
            return Err(ConfigError::BoundTooSmall {
                rank: self.rank,
                bound: self.degree_bound,
                minimal,
            });
        }
        for c in &self.checks {
            let group = c.split('.').next().unwrap_or_default();
            if !CHECK_GROUPS.contains(&group) {
                return Err(ConfigError::UnknownCheck(c.clone()));
            }
        }
        self.t_profile().map(|_| ())
    }

    /// The profile family with `s = c_1/c_0`.
    pub fn t_profile(&self) -> Result<TProfile, ConfigError> {
        let family = match self.c_profile {
            CProfile::Printed => Family::Printed,
            _ => Family::Recursive,
        };
        match (&self.c0, &self.c1) {
            (CValue::Symbolic, CValue::Symbolic) => Ok(TProfile::new(self.rank, Ratio::Symbolic, family)),
            (CValue::Value(c0), CValue::Value(c1)) => {
                if c0.is_zero() {
                    return Err(ConfigError::ZeroC0);
                }
                Ok(TProfile::from_c(self.rank, c0, c1, family)?)
            }
            _ => Err(ConfigError::MixedSymbolic),
        }
    }

    /// Whether a check id or group passes the prefix filter.
    pub fn selects(&self, id: &str) -> bool {
        self.checks.is_empty() || self.checks.iter().any(|f| id.starts_with(f.as_str()))
    }

    /// Whether any check of `group` can pass the filter.
    pub fn selects_group(&self, group: &str) -> bool {
        self.checks.is_empty()
            || self
                .checks
                .iter()
                .any(|f| f.split('.').next() == Some(group))
    }
}
