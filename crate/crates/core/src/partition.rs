//! Integer partitions, dominance order and enumeration.

use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing tuple of non-negative integers.
///
/// Trailing zeros are significant: `(1,0,0)` labels a polynomial in three
/// variables, `(1,0)` one in two.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of stored entries, zeros included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of non-zero parts.
    pub fn length(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `λ_i - λ_j` with 0-based indices.
    pub fn diff(&self, i: usize, j: usize) -> usize {
        self.part(i) - self.part(j)
    }

    pub fn largest(&self) -> usize {
        self.part(0)
    }

    pub fn smallest(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn trimmed(&self) -> Partition {
        Partition(self.0[..self.length()].to_vec())
    }

    /// Pads with zeros (or drops trailing zeros) to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Result<Partition> {
        if self.length() > n {
            return Err(Error::VariableCount {
                expected: n,
                found: self.length(),
            });
        }
        let mut parts = self.0[..self.length()].to_vec();
        parts.resize(n, 0);
        Ok(Partition(parts))
    }

    /// Adds `s` to every stored part.
    pub fn shifted(&self, s: usize) -> Partition {
        Partition(self.0.iter().map(|p| p + s).collect())
    }

    /// Subtracts the smallest part from every part.
    pub fn reduced(&self) -> Partition {
        let s = self.smallest();
        Partition(self.0.iter().map(|p| p - s).collect())
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.largest();
        Partition(
            (1..=cols)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// Multiplicity of the part `k` (k ≥ 1).
    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `μ ⪯ λ` in dominance order. Both must have the same weight.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.weight() != lambda.weight() {
        return Err(Error::WeightMismatch {
            left: mu.parts().to_vec(),
            right: lambda.parts().to_vec(),
        });
    }
    let len = mu.len().max(lambda.len());
    let (mut sm, mut sl) = (0, 0);
    for i in 0..len {
        sm += mu.part(i);
        sl += lambda.part(i);
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `weight` with at most `max_len` parts, padded to
/// `max_len` entries, in decreasing lexicographic order.
pub fn partitions_of(weight: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(max_len);
    fill(weight, weight, max_len, &mut current, &mut out);
    out
}

fn fill(
    remaining: usize,
    cap: usize,
    slots: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition(current.clone()));
        }
        return;
    }
    if remaining > cap * slots {
        return;
    }
    let hi = remaining.min(cap);
    for p in (0..=hi).rev() {
        current.push(p);
        fill(remaining - p, p, slots - 1, current, out);
        current.pop();
    }
}

/// Partitions of `weight` with at most `max_len` parts, each part ≤ `max_part`,
/// without zero padding, in decreasing lexicographic order.
pub fn partitions_bounded(weight: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    partitions_of(weight, max_len)
        .into_iter()
        .filter(|p| p.largest() <= max_part)
        .map(|p| p.trimmed())
        .collect()
}

/// All distinct rearrangements of `parts`.
pub fn distinct_permutations(parts: &[usize]) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = parts.to_vec();
    current.sort_unstable();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 0]), &p(&[2, 0])).unwrap());
        assert!(dominance_leq(&p(&[1, 1]), &p(&[2, 0])).unwrap());
        assert!(dominance_leq(&p(&[2, 1, 1]), &p(&[3, 1, 0])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1, 0]), &p(&[2, 1, 1])).unwrap());
        // (3,1,1,1) and (2,2,2) are incomparable
        assert!(!dominance_leq(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])).unwrap());
        assert!(!dominance_leq(&p(&[2, 2, 2]), &p(&[3, 1, 1, 1])).unwrap());
        assert!(dominance_leq(&p(&[1]), &p(&[2])).is_err());
    }

    #[test]
    fn derived_quantities() {
        let l = p(&[4, 2, 1]);
        assert_eq!(l.weight(), 7);
        assert_eq!(l.diff(0, 2), 3);
        assert_eq!(l.diff(1, 2), 1);
        assert_eq!(l.conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(l.reduced(), p(&[3, 1, 0]));
        assert_eq!(p(&[2, 0, 0]).length(), 1);
        assert_eq!(p(&[2, 0, 0]).padded(2).unwrap(), p(&[2, 0]));
        assert!(p(&[2, 1, 1]).padded(2).is_err());
    }

    #[test]
    fn enumeration() {
        let parts = partitions_of(4, 3);
        let expected: Vec<Partition> = [[4, 0, 0], [3, 1, 0], [2, 2, 0], [2, 1, 1]]
            .iter()
            .map(|q| p(q))
            .collect();
        assert_eq!(parts, expected);
        assert_eq!(partitions_of(0, 2), vec![p(&[0, 0])]);
        assert_eq!(partitions_of(10, 10).len(), 42);
        assert_eq!(partitions_bounded(4, 4, 2).len(), 3);
    }

    #[test]
    fn permutations() {
        assert_eq!(distinct_permutations(&[1, 1, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }

    fn all_up_to(w: usize) -> Vec<Partition> {
        (0..=w).flat_map(|k| partitions_of(k, w.max(1))).collect()
    }

    #[test]
    fn dominance_is_a_partial_order() {
        let all = all_up_to(10);
        for w in 0..=10 {
            let same: Vec<&Partition> = all.iter().filter(|q| q.weight() == w).collect();
            for a in &same {
                assert!(dominance_leq(a, a).unwrap());
                for b in &same {
                    let ab = dominance_leq(a, b).unwrap();
                    let ba = dominance_leq(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &same {
                        if dominance_leq(b, c).unwrap() {
                            assert!(dominance_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn conjugate_is_involutive(parts in proptest::collection::vec(0usize..8, 0..6)) {
            let q = Partition::from_unsorted(parts).trimmed();
            prop_assert_eq!(q.conjugate().conjugate(), q.clone());
            prop_assert_eq!(q.conjugate().weight(), q.weight());
        }
    }
}
