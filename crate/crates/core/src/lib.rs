//! Shift-alignment of finite integer sets.
//!
//! Given a labeled family of non-empty finite sets `X_a ⊂ ℤ`, the *minimum
//! soapy union* problem asks for one integer shift `t_a` per set minimizing
//! `|⋃ (X_a + t_a)|`. This crate provides
//!
//! - the instance model and objective ([`core`]),
//! - graph machinery: intersection graphs, spanning trees, Prüfer decoding
//!   and antisymmetric edge-weight systems ([`graphs`]),
//! - an exact solver enumerating weighted spanning trees, a brute-force box
//!   oracle, a certificate verifier and a greedy heuristic ([`solvers`]),
//! - Golomb ruler gadgets and the reduction from vertex cover, with its
//!   cover decoder ([`reductions`]),
//! - text formats, JSON reports and the command-line driver ([`cli`]).
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod core;
pub mod error;
pub mod generators;
pub mod graphs;
pub mod reductions;
pub mod solvers;

pub use crate::core::{difference_set, evaluate, normalize, Instance, Objective, ShiftVector};
pub use crate::error::{Error, Result};
