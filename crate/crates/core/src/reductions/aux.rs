use num_rational::Ratio;

use crate::core::Instance;

/// `f(x) = (x/4 + 2)³ + x/2 - 4`, exactly.
pub fn aux_bound(x: u64) -> Ratio<i128> {
    let x = Ratio::from_integer(i128::from(x));
    let quarter = Ratio::new(1, 4);
    let half = Ratio::new(1, 2);
    let base = x * quarter + Ratio::from_integer(2);
    base * base * base + x * half - Ratio::from_integer(4)
}

/// Whether every element's absolute value is at most `f(max_a |X_a|)`.
pub fn is_aux(instance: &Instance) -> bool {
    let bound = aux_bound(instance.max_set_len() as u64);
    instance
        .iter()
        .flat_map(|(_, s)| s.iter())
        .all(|&e| Ratio::from_integer(i128::from(e).abs()) <= bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(aux_bound(16), Ratio::from_integer(220));
        assert_eq!(aux_bound(0), Ratio::from_integer(4));
        // (1/4 + 2)^3 + 1/2 - 4 = 729/64 - 224/64
        assert_eq!(aux_bound(1), Ratio::new(505, 64));
    }

    #[test]
    fn aux_membership() {
        let x = Instance::new([("a", vec![-4, 4])]).unwrap();
        // max |X_a| = 2, f(2) = (2.5)^3 - 3 = 12.625
        assert!(is_aux(&x));
        let y = Instance::new([("a", vec![13, 0])]).unwrap();
        assert!(!is_aux(&y));
    }
}
