//! Budgets shared by every exhaustive computation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on `dim u(L)`.
pub const DEFAULT_DIM_CAP: usize = 1024;
/// Default cap on the number of elements any enumeration may visit (3^8).
pub const DEFAULT_ENUM_CAP: u64 = 6561;

/// Environment variable overriding [`DEFAULT_DIM_CAP`].
pub const ENV_DIM_CAP: &str = "SUPERLIE_CAP_DIM";
/// Environment variable overriding [`DEFAULT_ENUM_CAP`].
pub const ENV_ENUM_CAP: &str = "SUPERLIE_ENUM_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest enveloping algebra that will be built.
    pub dim_cap: usize,
    /// Largest element count an exhaustive enumeration may visit.
    pub enum_cap: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            dim_cap: DEFAULT_DIM_CAP,
            enum_cap: DEFAULT_ENUM_CAP,
        }
    }
}

impl Caps {
    /// Defaults, overridden by `SUPERLIE_CAP_DIM` / `SUPERLIE_ENUM_CAP` when
    /// those hold positive integers.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Some(v) = read_env(ENV_DIM_CAP) {
            caps.dim_cap = v as usize;
        }
        if let Some(v) = read_env(ENV_ENUM_CAP) {
            caps.enum_cap = v;
        }
        caps
    }
}

fn read_env(name: &str) -> Option<u64> {
    std::env::var(name)
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .filter(|&v| v > 0)
}

/// `p^dim` as an exact count, saturating at `u128::MAX`.
pub fn element_count(p: u32, dim: usize) -> u128 {
    let mut n: u128 = 1;
    for _ in 0..dim {
        n = n.saturating_mul(p as u128);
    }
    n
}

/// Fails with [`Error::EnumerationBudget`] when `p^dim > cap`.
pub fn check_enumeration(p: u32, dim: usize, cap: u64) -> Result<u64> {
    let needed = element_count(p, dim);
    if needed > cap as u128 {
        Err(Error::EnumerationBudget { needed, cap })
    } else {
        Ok(needed as u64)
    }
}
