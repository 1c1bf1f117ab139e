//! JSON reports written by the command-line driver.
//!
//! Field names are a stable interface; see the README for their meaning.

use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::core::{evaluate, Instance, ShiftVector};
use crate::error::Result;
use crate::solvers::{Method, SolveResult};

pub fn digest(input: &str) -> String {
    hex::encode(Sha256::digest(input.as_bytes()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    /// SHA-256 of the input file, hex encoded.
    pub input_digest: String,
    pub method: Method,
    pub value: usize,
    pub shifts: ShiftVector,
    pub explored: u64,
    pub wall_ms: f64,
    pub optimal: bool,
}

impl RunReport {
    /// Re-evaluates the shifts so the reported value can be trusted.
    pub fn new(instance: &Instance, input: &str, result: &SolveResult, elapsed: Duration) -> Result<Self> {
        let value = evaluate(instance, &result.shifts)?.value;
        assert_eq!(value, result.value, "solver reported a stale value");
        Ok(Self {
            input_digest: digest(input),
            method: result.method,
            value,
            shifts: result.shifts.clone(),
            explored: result.explored,
            wall_ms: elapsed.as_secs_f64() * 1e3,
            optimal: result.optimal,
        })
    }

    /// Whether `shifts` still evaluate to `value` on `instance`.
    pub fn is_consistent(&self, instance: &Instance) -> bool {
        evaluate(instance, &self.shifts).is_ok_and(|o| o.value == self.value)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReduceReport {
    pub input_digest: String,
    pub n: usize,
    pub k: usize,
    pub s: i64,
    pub root_size: usize,
    pub threshold: usize,
    pub trivially_yes: bool,
    /// Edge label to `[y, z]` (original vertex names).
    pub edges: indexmap::IndexMap<String, [String; 2]>,
    /// The instance text when no output file was given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecodeReport {
    pub input_digest: String,
    pub value: usize,
    /// `value - |X_root|`
    pub excess: i64,
    pub cover: Vec<String>,
    pub cover_size: usize,
    pub is_cover: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub input_digest: String,
    pub budget: u64,
    pub value: usize,
    pub verified: bool,
}
