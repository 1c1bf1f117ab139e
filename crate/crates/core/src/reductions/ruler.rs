use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};

/// The ruler `{(i - 1) n² + i² : 1 ≤ i ≤ n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ruler {
    n: usize,
    elements: Vec<i64>,
}

impl Ruler {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn min(&self) -> i64 {
        self.elements[0]
    }

    pub fn max(&self) -> i64 {
        *self.elements.last().expect("rulers are non-empty")
    }

    /// Smallest distance between consecutive marks (`None` for one mark).
    pub fn min_gap(&self) -> Option<i64> {
        self.elements.windows(2).map(|w| w[1] - w[0]).min()
    }

    pub fn properties(&self) -> RulerProperties {
        let n = self.n as i64;
        RulerProperties {
            min_is_one: self.min() == 1,
            max_is_cube: n.checked_pow(3) == Some(self.max()),
            cardinality_is_n: self.elements.len() == self.n,
            gaps_at_least_n2_plus_3: self.min_gap().is_none_or(|g| g >= n * n + 3),
            golomb: is_golomb(&self.elements),
        }
    }
}

/// Outcome of checking a ruler against its four structural properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RulerProperties {
    pub min_is_one: bool,
    pub max_is_cube: bool,
    pub cardinality_is_n: bool,
    pub gaps_at_least_n2_plus_3: bool,
    pub golomb: bool,
}

impl RulerProperties {
    pub fn all(&self) -> bool {
        self.min_is_one
            && self.max_is_cube
            && self.cardinality_is_n
            && self.gaps_at_least_n2_plus_3
            && self.golomb
    }
}

pub fn ruler(n: usize) -> Result<Ruler> {
    if n == 0 {
        return Err(Error::InvalidRulerOrder);
    }
    let overflow = || Error::Overflow("building a ruler");
    let order = i64::try_from(n).map_err(|_| overflow())?;
    let square = order.checked_mul(order).ok_or_else(overflow)?;
    let elements = (1..=order)
        .map(|i| {
            (i - 1)
                .checked_mul(square)
                .and_then(|a| a.checked_add(i.checked_mul(i)?))
                .ok_or_else(overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Ruler { n, elements })
}

/// True iff all pairwise differences of distinct elements are distinct.
pub fn is_golomb(marks: &[i64]) -> bool {
    let marks: Vec<i64> = marks.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let mut seen = HashSet::new();
    for (i, &a) in marks.iter().enumerate() {
        for &b in &marks[i + 1..] {
            match b.checked_sub(a) {
                Some(d) if seen.insert(d) => {}
                _ => return false,
            }
        }
    }
    true
}
