use crate::core::counter::UnionCounter;
use crate::core::Instance;
use crate::error::{Error, Result};

use super::search::{minimize, ProductSpace};
use super::{Method, SolveOptions, SolveResult};

/// `(|A| - 1) * (max U - min U)`: no optimum needs a larger relative shift,
/// since tree-path differences of an optimum lie in `U - U`.
pub fn default_radius(instance: &Instance) -> Result<i64> {
    let universe = instance.universe();
    let span = universe
        .last()
        .zip(universe.first())
        .map_or(Some(0), |(hi, lo)| hi.checked_sub(*lo))
        .ok_or(Error::Overflow("measuring the universe"))?;
    span.checked_mul(instance.len() as i64 - 1)
        .ok_or(Error::Overflow("computing the oracle radius"))
}

/// Brute force over the box `{0} × [-radius, radius]^(|A|-1)`.
pub fn solve_oracle(instance: &Instance, radius: Option<i64>, opts: &SolveOptions) -> Result<SolveResult> {
    let radius = match radius {
        Some(r) => r.max(0),
        None => default_radius(instance)?,
    };
    let window: Vec<i64> = (-radius..=radius).collect();
    let mut choices = vec![window; instance.len()];
    choices[0] = vec![0];
    solve_over_candidates(instance, &choices, opts)
}

/// Brute force over the Cartesian product of per-label candidate shifts
/// (`choices[i]` belongs to the `i`-th label).
pub fn solve_over_candidates(
    instance: &Instance,
    choices: &[Vec<i64>],
    opts: &SolveOptions,
) -> Result<SolveResult> {
    assert_eq!(choices.len(), instance.len(), "one candidate list per label");
    let count = ProductSpace::size(choices);
    if count > opts.guard_limit || choices.iter().any(Vec::is_empty) {
        return Err(Error::GuardLimit {
            count: if choices.iter().any(Vec::is_empty) { 0 } else { count },
            limit: opts.guard_limit,
        });
    }
    let max_shift = choices
        .iter()
        .flatten()
        .map(|t| t.checked_abs().ok_or(Error::Overflow("bounding candidate shifts")))
        .try_fold(0i64, |acc, t| t.map(|t| acc.max(t)))?;
    let counter = UnionCounter::new(instance.set_vecs(), max_shift)?;
    let space = ProductSpace {
        choices: choices.to_vec(),
    };
    let outcome = minimize(&space, &counter, opts);
    let best = outcome.best.ok_or(Error::Cancelled)?;
    Ok(SolveResult {
        shifts: instance.shifts_from_values(&best.shifts).normalize()?,
        value: best.value,
        method: Method::Oracle,
        explored: outcome.explored,
        optimal: !outcome.cancelled,
        certificate: None,
    })
}
