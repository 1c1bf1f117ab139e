use std::fmt;

use serde::Serialize;

use crate::core::Instance;
use crate::error::Result;

use super::encode::{edge_set, ReducedInstance, ROOT_LABEL};

/// A failed gadget property, reported rather than raised.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GadgetViolation {
    /// `(X_e - s) \ X_root` should be exactly `{y_e}`.
    LowerShift { edge: String, expected: i64, found: Vec<i64> },
    /// `(X_e + n) \ X_root` should be exactly `{z_e}`.
    UpperShift { edge: String, expected: i64, found: Vec<i64> },
    /// Some `t ∉ {-s, +n}` leaves fewer than `n` ruler marks outside the root.
    RulerTranslation { t: i64, outside: usize },
}

impl fmt::Display for GadgetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetViolation::LowerShift { edge, expected, found } => {
                write!(f, "{edge}: shifting by -s leaves {found:?}, expected [{expected}]")
            }
            GadgetViolation::UpperShift { edge, expected, found } => {
                write!(f, "{edge}: shifting by +n leaves {found:?}, expected [{expected}]")
            }
            GadgetViolation::RulerTranslation { t, outside } => {
                write!(f, "ruler shifted by {t} has only {outside} marks outside the root")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetReport {
    /// Translations examined for the ruler property.
    pub window: (i64, i64),
    pub violations: Vec<GadgetViolation>,
}

impl GadgetReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn outside(set: &[i64], t: i64, root: &[i64]) -> Vec<i64> {
    set.iter()
        .map(|&x| x + t)
        .filter(|x| root.binary_search(x).is_err())
        .collect()
}

/// Checks the two edge-gadget identities for every edge and scans every
/// ruler translation that can touch the root set.
///
/// Translations outside the scanned window miss the root entirely, so they
/// leave all `n + 4` marks outside and cannot violate the ruler property;
/// the scan is therefore exhaustive for this instance.
pub fn check_gadget_lemmas(ri: &ReducedInstance) -> GadgetReport {
    let root = ri.root_set();
    let n = ri.n as i64;
    let mut violations = Vec::new();

    for e in &ri.edges {
        let set = ri.instance.set(&e.label).expect("edge label");
        let low = outside(set, -ri.s, root);
        if low != [e.y] {
            violations.push(GadgetViolation::LowerShift {
                edge: e.label.clone(),
                expected: e.y,
                found: low,
            });
        }
        let high = outside(set, n, root);
        if high != [e.z] {
            violations.push(GadgetViolation::UpperShift {
                edge: e.label.clone(),
                expected: e.z,
                found: high,
            });
        }
    }

    let marks = ri.ruler.elements();
    let lo = root[0] - ri.ruler.max();
    let hi = root[root.len() - 1] - ri.ruler.min();
    for t in lo..=hi {
        if t == -ri.s || t == n {
            continue;
        }
        let left = outside(marks, t, root).len();
        if left < ri.n {
            violations.push(GadgetViolation::RulerTranslation { t, outside: left });
        }
    }

    GadgetReport {
        window: (lo, hi),
        violations,
    }
}

/// Deliberate corruptions of a reduced instance, each of which breaks at
/// least one gadget property when the graph has an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetMutation {
    /// Remove the largest mark of `R + n` from the root set.
    DropRulerPoint,
    /// Move the `y_e + s` point of the first edge set up by one.
    ShiftEdgeEndpoint,
    /// Record `s + 1` as the offset while keeping the sets.
    WrongOffset,
}

impl GadgetMutation {
    pub const ALL: [GadgetMutation; 3] = [
        GadgetMutation::DropRulerPoint,
        GadgetMutation::ShiftEdgeEndpoint,
        GadgetMutation::WrongOffset,
    ];
}

pub fn mutate(ri: &ReducedInstance, mutation: GadgetMutation) -> Result<ReducedInstance> {
    let mut out = ri.clone();
    let n = ri.n as i64;
    let mut family: Vec<(String, Vec<i64>)> = ri
        .instance
        .iter()
        .map(|(l, s)| (l.to_owned(), s.to_vec()))
        .collect();
    match mutation {
        GadgetMutation::DropRulerPoint => {
            let dropped = ri.ruler.max() + n;
            family[0].1.retain(|&x| x != dropped);
        }
        GadgetMutation::ShiftEdgeEndpoint => {
            if let Some(e) = ri.edges.first() {
                let index = ri.instance.index_of(&e.label).expect("edge label");
                let mut set = edge_set(e.y, e.z, n, ri.s, ri.ruler.elements())?;
                set.retain(|&x| x != e.y + ri.s);
                set.push(e.y + ri.s + 1);
                family[index].1 = set;
            }
        }
        GadgetMutation::WrongOffset => out.s += 1,
    }
    debug_assert_eq!(family[0].0, ROOT_LABEL);
    out.instance = Instance::new(family)?;
    Ok(out)
}
