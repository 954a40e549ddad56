//! Serial or parallel evaluation with order-preserving results.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default number of candidate evaluations an audit may spend.
pub const DEFAULT_MAX_CANDIDATES: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExecMode {
    Serial,
    Parallel,
}

/// Evaluation settings shared by the enumeration audits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditConfig {
    pub mode: ExecMode,
    pub max_candidates: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig { mode: ExecMode::Parallel, max_candidates: DEFAULT_MAX_CANDIDATES }
    }
}

impl AuditConfig {
    pub fn serial() -> Self {
        AuditConfig { mode: ExecMode::Serial, ..Self::default() }
    }

    pub fn with_mode(mut self, mode: ExecMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_max_candidates(mut self, max: u64) -> Self {
        self.max_candidates = max;
        self
    }

    /// Maps `f` over `items`; the output order always matches the input order.
    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self.mode {
            ExecMode::Serial => items.iter().map(f).collect(),
            ExecMode::Parallel => items.par_iter().map(f).collect(),
        }
    }

    /// Like [`AuditConfig::map`] but stops at the first error in input order.
    pub fn try_map<T, R, F>(&self, items: &[T], f: F) -> Result<Vec<R>>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Result<R> + Sync + Send,
    {
        self.map(items, f).into_iter().collect()
    }

    pub fn budget(&self, during: &str) -> Budget {
        Budget { limit: self.max_candidates, spent: 0, during: during.to_string() }
    }
}

/// Deterministic counter charged by serial enumerators.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    spent: u64,
    during: String,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { limit: u64::MAX, spent: 0, during: String::new() }
    }

    pub fn charge(&mut self, n: u64) -> Result<()> {
        self.spent = self.spent.saturating_add(n);
        if self.spent > self.limit {
            return Err(Error::BudgetExceeded { limit: self.limit, during: self.during.clone() });
        }
        Ok(())
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }
}
