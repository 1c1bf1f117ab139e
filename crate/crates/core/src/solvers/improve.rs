use crate::core::{Instance, ShiftVector};
use crate::error::{Error, Result};
use crate::graphs::{find_disconnection, intersection_graph};

/// If the shifted sets split into two groups that do not meet, translates
/// each group so that its smallest element lands on 0. The two groups then
/// share 0, so the union shrinks by at least one.
///
/// Returns `None` when the intersection graph of the shifted sets is
/// connected.
pub fn improve_disconnected(instance: &Instance, shifts: &ShiftVector) -> Result<Option<ShiftVector>> {
    let shifted = instance.shifted(shifts)?;
    let Some(split) = find_disconnection(&intersection_graph(&shifted)) else {
        return Ok(None);
    };
    let group_min = |labels: &[String]| {
        labels
            .iter()
            .map(|l| shifted.set(l).expect("label from instance")[0])
            .min()
            .expect("groups are non-empty")
    };
    let r = group_min(&split.left);
    let s = group_min(&split.right);
    let mut improved = Vec::with_capacity(instance.len());
    for (label, _) in instance.iter() {
        let anchor = if split.left.iter().any(|l| l == label) { r } else { s };
        let t = shifts.get(label).expect("domain checked by shifted");
        improved.push((
            label,
            t.checked_sub(anchor)
                .ok_or(Error::Overflow("merging disconnected groups"))?,
        ));
    }
    Ok(Some(ShiftVector::new(improved)?))
}

/// Applies [`improve_disconnected`] until the intersection graph is
/// connected, returning a normalized vector.
pub fn improve_to_fixed_point(instance: &Instance, shifts: &ShiftVector) -> Result<ShiftVector> {
    let mut current = shifts.normalize()?;
    while let Some(next) = improve_disconnected(instance, &current)? {
        current = next.normalize()?;
    }
    Ok(current)
}
