use crate::error::{Error, Result};

// Widest value window served by the stamp table; beyond it we sort.
const MAX_TABLE: i64 = 1 << 22;

/// Reusable union-cardinality counter for a fixed family of sets and a known
/// bound on the absolute value of any shift applied to them.
#[derive(Debug, Clone)]
pub(crate) struct UnionCounter {
    sets: Vec<Vec<i64>>,
    mode: Mode,
}

#[derive(Debug, Clone)]
enum Mode {
    Stamp {
        offset: i64,
        stamps: Vec<u32>,
        generation: u32,
    },
    Sort {
        buffer: Vec<i64>,
    },
}

impl UnionCounter {
    pub(crate) fn new(sets: Vec<Vec<i64>>, max_abs_shift: i64) -> Result<Self> {
        let lo = sets.iter().flatten().copied().min().unwrap_or(0);
        let hi = sets.iter().flatten().copied().max().unwrap_or(0);
        let overflow = Error::Overflow("bounding shifted elements");
        let lo = lo.checked_sub(max_abs_shift).ok_or(overflow.clone())?;
        let hi = hi.checked_add(max_abs_shift).ok_or(overflow.clone())?;
        let width = hi.checked_sub(lo).and_then(|w| w.checked_add(1));
        let mode = match width {
            Some(w) if w <= MAX_TABLE => Mode::Stamp {
                offset: lo,
                stamps: vec![0; w as usize],
                generation: 0,
            },
            _ => Mode::Sort {
                buffer: Vec::with_capacity(sets.iter().map(Vec::len).sum()),
            },
        };
        Ok(Self { sets, mode })
    }

    /// Counts `|⋃ (X_a + t_a)|`, possibly stopping early once the count
    /// exceeds `cutoff` (the returned value is then some number > cutoff).
    pub(crate) fn count(&mut self, shifts: &[i64], cutoff: usize) -> usize {
        debug_assert_eq!(shifts.len(), self.sets.len());
        match &mut self.mode {
            Mode::Stamp {
                offset,
                stamps,
                generation,
            } => {
                if *generation == u32::MAX {
                    stamps.iter_mut().for_each(|s| *s = 0);
                    *generation = 0;
                }
                *generation += 1;
                let g = *generation;
                let mut count = 0;
                for (set, &t) in self.sets.iter().zip(shifts) {
                    let base = t - *offset;
                    for &x in set {
                        let slot = &mut stamps[(x + base) as usize];
                        if *slot != g {
                            *slot = g;
                            count += 1;
                        }
                    }
                    if count > cutoff {
                        return count;
                    }
                }
                count
            }
            Mode::Sort { buffer } => {
                buffer.clear();
                for (set, &t) in self.sets.iter().zip(shifts) {
                    buffer.extend(set.iter().map(|&x| x + t));
                }
                buffer.sort_unstable();
                buffer.dedup();
                buffer.len()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let sets = vec![vec![0, 1, 3], vec![0, 2], vec![5]];
        let mut table = UnionCounter::new(sets.clone(), 10).unwrap();
        let mut sorted = UnionCounter {
            sets: sets.clone(),
            mode: Mode::Sort { buffer: Vec::new() },
        };
        for shifts in [[0, 0, 0], [0, 1, -5], [0, -10, 10], [0, 3, -2]] {
            assert_eq!(
                table.count(&shifts, usize::MAX),
                sorted.count(&shifts, usize::MAX)
            );
        }
    }

    #[test]
    fn wide_ranges_fall_back_to_sorting() {
        let counter = UnionCounter::new(vec![vec![0, 1 << 40]], 0).unwrap();
        assert!(matches!(counter.mode, Mode::Sort { .. }));
    }

    #[test]
    fn detects_bound_overflow() {
        assert!(UnionCounter::new(vec![vec![i64::MAX - 1]], 5).is_err());
    }
}
