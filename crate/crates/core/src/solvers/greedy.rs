use std::collections::HashMap;

use crate::core::{evaluate, Instance};
use crate::error::{Error, Result};

use super::{improve_to_fixed_point, Method, SolveResult};

struct Cluster {
    members: Vec<usize>,
    union: Vec<i64>,
}

/// Repeatedly merges the two clusters whose best relative shift overlaps
/// them the most, then removes any remaining disconnection.
pub fn solve_greedy(instance: &Instance) -> Result<SolveResult> {
    let mut shifts = vec![0i64; instance.len()];
    let mut clusters: Vec<Cluster> = (0..instance.len())
        .map(|i| Cluster {
            members: vec![i],
            union: instance.set_at(i).to_vec(),
        })
        .collect();
    let mut explored = 0u64;

    while clusters.len() > 1 {
        // (overlap, i, j, delta): cluster j moves by delta
        let mut best: Option<(usize, usize, usize, i64)> = None;
        for i in 0..clusters.len() {
            for j in i + 1..clusters.len() {
                let mut overlap: HashMap<i64, usize> = HashMap::new();
                for &x in &clusters[i].union {
                    for &y in &clusters[j].union {
                        let delta = x.checked_sub(y).ok_or(Error::Overflow("scoring a merge"))?;
                        *overlap.entry(delta).or_default() += 1;
                    }
                }
                explored += overlap.len() as u64;
                let (delta, count) = overlap
                    .into_iter()
                    .max_by(|(da, ca), (db, cb)| ca.cmp(cb).then(db.cmp(da)))
                    .expect("clusters are non-empty");
                if best.is_none_or(|(c, ..)| count > c) {
                    best = Some((count, i, j, delta));
                }
            }
        }
        let (_, i, j, delta) = best.expect("at least two clusters");
        let moved = clusters.remove(j);
        for &m in &moved.members {
            shifts[m] = shifts[m]
                .checked_add(delta)
                .ok_or(Error::Overflow("merging clusters"))?;
        }
        let target = &mut clusters[i];
        target.members.extend(moved.members);
        target.union.extend(moved.union.iter().map(|y| y + delta));
        target.union.sort_unstable();
        target.union.dedup();
    }

    let shifts = improve_to_fixed_point(instance, &instance.shifts_from_values(&shifts))?;
    let value = evaluate(instance, &shifts)?.value;
    Ok(SolveResult {
        shifts,
        value,
        method: Method::Greedy,
        explored,
        optimal: instance.len() == 1,
        certificate: None,
    })
}
