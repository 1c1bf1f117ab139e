use std::cmp::Ordering;

use rayon::prelude::*;

use crate::core::counter::UnionCounter;
use crate::error::Result;

use super::SolveOptions;

const BLOCK: u64 = 1 << 14;

/// An indexed, finite collection of candidate shift vectors.
pub(crate) trait Space: Sync {
    fn len(&self) -> u64;

    /// Visits candidates `start..end` in index order.
    fn visit(&self, start: u64, end: u64, f: &mut dyn FnMut(u64, &[i64]));
}

#[derive(Debug, Clone)]
pub(crate) struct Best {
    pub value: usize,
    pub shifts: Vec<i64>,
    pub index: u64,
}

impl Best {
    fn key_cmp(&self, other: &Best) -> Ordering {
        self.value
            .cmp(&other.value)
            .then_with(|| self.shifts.cmp(&other.shifts))
            .then_with(|| self.index.cmp(&other.index))
    }
}

#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub best: Option<Best>,
    pub explored: u64,
    pub cancelled: bool,
}

impl Outcome {
    fn merge(mut self, other: Outcome) -> Outcome {
        self.explored += other.explored;
        self.cancelled |= other.cancelled;
        self.best = match (self.best, other.best) {
            (Some(a), Some(b)) => Some(if b.key_cmp(&a) == Ordering::Less { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Minimizes the union size over a space, breaking ties by the
/// lexicographically smallest shift vector and then the smallest index.
///
/// Blocks are evaluated independently and merged with an associative,
/// commutative rule, so the result does not depend on scheduling.
pub(crate) fn minimize<S: Space>(space: &S, counter: &UnionCounter, opts: &SolveOptions) -> Outcome {
    let blocks = space.len().div_ceil(BLOCK);
    let work = || {
        (0..blocks)
            .into_par_iter()
            .map_init(
                || counter.clone(),
                |ctr, block| {
                    if opts.cancel.as_ref().is_some_and(|c| c.is_cancelled()) {
                        return Outcome {
                            cancelled: true,
                            ..Outcome::default()
                        };
                    }
                    let start = block * BLOCK;
                    let end = (start + BLOCK).min(space.len());
                    let mut best: Option<Best> = None;
                    space.visit(start, end, &mut |index, shifts| {
                        let cutoff = best.as_ref().map_or(usize::MAX, |b| b.value);
                        let value = ctr.count(shifts, cutoff);
                        let better = match &best {
                            None => true,
                            Some(b) => value < b.value || (value == b.value && shifts < &b.shifts[..]),
                        };
                        if better {
                            best = Some(Best {
                                value,
                                shifts: shifts.to_vec(),
                                index,
                            });
                        }
                    });
                    Outcome {
                        best,
                        explored: end - start,
                        cancelled: false,
                    }
                },
            )
            .reduce(Outcome::default, Outcome::merge)
    };
    match in_pool(opts.threads, work) {
        Ok(outcome) => outcome,
        Err(_) => work(),
    }
}

/// Runs `f` on a dedicated pool with `threads` workers, or inline on the
/// global pool when unspecified.
pub(crate) fn in_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, rayon::ThreadPoolBuildError> {
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build()?;
            Ok(pool.install(f))
        }
    }
}

/// Cartesian product of per-label candidate lists.
pub(crate) struct ProductSpace {
    pub choices: Vec<Vec<i64>>,
}

impl ProductSpace {
    pub(crate) fn size(choices: &[Vec<i64>]) -> u128 {
        choices
            .iter()
            .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128))
            .unwrap_or(u128::MAX)
    }
}

impl Space for ProductSpace {
    fn len(&self) -> u64 {
        Self::size(&self.choices) as u64
    }

    fn visit(&self, start: u64, end: u64, f: &mut dyn FnMut(u64, &[i64])) {
        let k = self.choices.len();
        // mixed-radix digits, last label varies fastest
        let mut digits = vec![0usize; k];
        let mut rest = start;
        for (d, c) in digits.iter_mut().zip(&self.choices).rev() {
            *d = (rest % c.len() as u64) as usize;
            rest /= c.len() as u64;
        }
        let mut shifts: Vec<i64> = digits
            .iter()
            .zip(&self.choices)
            .map(|(&d, c)| c[d])
            .collect();
        for index in start..end {
            f(index, &shifts);
            for pos in (0..k).rev() {
                digits[pos] += 1;
                if digits[pos] < self.choices[pos].len() {
                    shifts[pos] = self.choices[pos][digits[pos]];
                    break;
                }
                digits[pos] = 0;
                shifts[pos] = self.choices[pos][0];
            }
        }
    }
}
