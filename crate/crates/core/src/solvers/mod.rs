//! Exact, brute-force and heuristic solvers, plus certificate checking.

mod certificate;
mod exact;
mod greedy;
mod improve;
mod oracle;
mod search;

use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::core::ShiftVector;
use crate::graphs::WeightedTree;

pub use certificate::{verify_certificate, Certificate};
pub use exact::{search_space_size, solve_exact};
pub use greedy::solve_greedy;
pub use improve::{improve_disconnected, improve_to_fixed_point};
pub use oracle::{default_radius, solve_oracle, solve_over_candidates};

/// Default refusal threshold for enumerated candidates.
pub const DEFAULT_GUARD_LIMIT: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Oracle,
    Greedy,
    Local,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::Oracle => "oracle",
            Method::Greedy => "greedy",
            Method::Local => "local",
        })
    }
}

/// Cooperative cancellation flag shared between a caller and a solver.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Largest search space a solver agrees to enumerate.
    pub guard_limit: u128,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    pub cancel: Option<CancelToken>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            guard_limit: DEFAULT_GUARD_LIMIT,
            threads: None,
            cancel: None,
        }
    }
}

impl SolveOptions {
    pub fn with_guard_limit(mut self, limit: u128) -> Self {
        self.guard_limit = limit;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    pub fn with_cancel(mut self, token: CancelToken) -> Self {
        self.cancel = Some(token);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Normalized: the first label's shift is zero.
    pub shifts: ShiftVector,
    pub value: usize,
    pub method: Method,
    /// Candidates examined: (tree, weights) pairs, box points or merge probes.
    pub explored: u64,
    /// False when the search was cut short or the method is a heuristic.
    pub optimal: bool,
    /// The winning (tree, weights) pair, for the exact solver.
    pub certificate: Option<WeightedTree>,
}
