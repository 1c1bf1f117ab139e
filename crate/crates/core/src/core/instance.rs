use std::collections::BTreeSet;
use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A labeled family of non-empty finite integer sets.
///
/// Labels keep their declared order. Each set is stored sorted and without
/// duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    sets: IndexMap<String, Vec<i64>>,
}

impl Instance {
    pub fn new<I, L, S>(family: I) -> Result<Self>
    where
        I: IntoIterator<Item = (L, S)>,
        L: Into<String>,
        S: IntoIterator<Item = i64>,
    {
        let mut sets = IndexMap::new();
        for (label, elements) in family {
            let label = label.into();
            let mut elements: Vec<i64> = elements.into_iter().collect();
            elements.sort_unstable();
            elements.dedup();
            if elements.is_empty() {
                return Err(Error::EmptySet(label));
            }
            if sets.contains_key(&label) {
                return Err(Error::DuplicateLabel(label));
            }
            sets.insert(label, elements);
        }
        if sets.is_empty() {
            return Err(Error::EmptyInstance);
        }
        Ok(Self { sets })
    }

    /// Number of sets (the size of the index set).
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.sets.keys().map(String::as_str)
    }

    pub fn label(&self, index: usize) -> &str {
        self.sets.get_index(index).expect("label index in range").0
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.sets.get_index_of(label)
    }

    pub fn set(&self, label: &str) -> Option<&[i64]> {
        self.sets.get(label).map(Vec::as_slice)
    }

    pub fn set_at(&self, index: usize) -> &[i64] {
        self.sets.get_index(index).expect("set index in range").1
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[i64])> + '_ {
        self.sets.iter().map(|(l, s)| (l.as_str(), s.as_slice()))
    }

    pub(crate) fn set_vecs(&self) -> Vec<Vec<i64>> {
        self.sets.values().cloned().collect()
    }

    pub fn max_set_len(&self) -> usize {
        self.sets.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn total_len(&self) -> usize {
        self.sets.values().map(Vec::len).sum()
    }

    /// The union of all sets, sorted ascending.
    pub fn universe(&self) -> Vec<i64> {
        let all: BTreeSet<i64> = self.sets.values().flatten().copied().collect();
        all.into_iter().collect()
    }

    /// Returns the family `(X_a + t_a)` under the same labels.
    pub fn shifted(&self, shifts: &ShiftVector) -> Result<Instance> {
        let values = self.aligned_shifts(shifts)?;
        let mut sets = IndexMap::with_capacity(self.len());
        for ((label, set), t) in self.sets.iter().zip(values) {
            let moved = set
                .iter()
                .map(|&x| x.checked_add(t).ok_or(Error::Overflow("shifting a set")))
                .collect::<Result<Vec<_>>>()?;
            sets.insert(label.clone(), moved);
        }
        Ok(Instance { sets })
    }

    /// Shift values in declared label order, after checking the domain.
    pub fn aligned_shifts(&self, shifts: &ShiftVector) -> Result<Vec<i64>> {
        let missing: Vec<String> = self
            .sets
            .keys()
            .filter(|l| shifts.get(l).is_none())
            .cloned()
            .collect();
        let extra: Vec<String> = shifts
            .labels()
            .filter(|l| !self.sets.contains_key(*l))
            .map(str::to_owned)
            .collect();
        if !missing.is_empty() || !extra.is_empty() {
            return Err(Error::DomainMismatch { missing, extra });
        }
        Ok(self
            .sets
            .keys()
            .map(|l| shifts.get(l).expect("domain checked"))
            .collect())
    }

    /// Builds a shift vector over this instance's labels from aligned values.
    pub fn shifts_from_values(&self, values: &[i64]) -> ShiftVector {
        assert_eq!(values.len(), self.len(), "one shift per label");
        ShiftVector {
            shifts: self
                .sets
                .keys()
                .cloned()
                .zip(values.iter().copied())
                .collect(),
        }
    }

    pub fn zero_shifts(&self) -> ShiftVector {
        self.shifts_from_values(&vec![0; self.len()])
    }
}

/// One integer translation per label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShiftVector {
    shifts: IndexMap<String, i64>,
}

impl ShiftVector {
    pub fn new<I, L>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (L, i64)>,
        L: Into<String>,
    {
        let mut shifts = IndexMap::new();
        for (label, t) in pairs {
            let label = label.into();
            if shifts.insert(label.clone(), t).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
        }
        Ok(Self { shifts })
    }

    pub fn get(&self, label: &str) -> Option<i64> {
        self.shifts.get(label).copied()
    }

    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.shifts.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> + '_ {
        self.shifts.iter().map(|(l, &t)| (l.as_str(), t))
    }

    pub fn values(&self) -> Vec<i64> {
        self.shifts.values().copied().collect()
    }

    /// Adds `u` to every shift.
    pub fn translate(&self, u: i64) -> Result<ShiftVector> {
        let shifts = self
            .shifts
            .iter()
            .map(|(l, &t)| {
                t.checked_add(u)
                    .map(|v| (l.clone(), v))
                    .ok_or(Error::Overflow("translating shifts"))
            })
            .collect::<Result<_>>()?;
        Ok(ShiftVector { shifts })
    }

    /// The translate whose first shift is zero.
    ///
    /// Fails only if the translation overflows.
    pub fn normalize(&self) -> Result<ShiftVector> {
        match self.shifts.first() {
            None => Ok(self.clone()),
            Some((_, &first)) => {
                let u = first
                    .checked_neg()
                    .ok_or(Error::Overflow("normalizing shifts"))?;
                self.translate(u)
            }
        }
    }
}

impl fmt::Display for ShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (l, t)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}: {t}")?;
        }
        f.write_str("}")
    }
}

/// Cardinality of a shifted union together with the union itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Objective {
    pub value: usize,
    pub union: Vec<i64>,
}

/// Computes `|⋃ (X_a + t_a)|`.
pub fn evaluate(instance: &Instance, shifts: &ShiftVector) -> Result<Objective> {
    let values = instance.aligned_shifts(shifts)?;
    let mut union = Vec::with_capacity(instance.total_len());
    for ((_, set), t) in instance.iter().zip(values) {
        for &x in set {
            union.push(
                x.checked_add(t)
                    .ok_or(Error::Overflow("evaluating the union"))?,
            );
        }
    }
    union.sort_unstable();
    union.dedup();
    Ok(Objective {
        value: union.len(),
        union,
    })
}

/// Translates `shifts` so that the first label's shift is zero.
pub fn normalize(shifts: &ShiftVector) -> Result<ShiftVector> {
    shifts.normalize()
}

/// `U − U` for `U` the union of all sets, sorted ascending.
pub fn difference_set(instance: &Instance) -> Result<Vec<i64>> {
    let universe = instance.universe();
    let mut diffs = BTreeSet::new();
    for &x in &universe {
        for &y in &universe {
            diffs.insert(
                x.checked_sub(y)
                    .ok_or(Error::Overflow("computing the difference set"))?,
            );
        }
    }
    Ok(diffs.into_iter().collect())
}
