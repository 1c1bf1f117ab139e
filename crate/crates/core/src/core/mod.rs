//! Instance model, objective evaluation and translation invariance.

pub(crate) mod counter;
mod instance;

pub use instance::{difference_set, evaluate, normalize, Instance, Objective, ShiftVector};
