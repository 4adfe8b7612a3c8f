//! Integer partitions: enumeration, centralizer orders, hook lengths.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{factorial, Int};

/// A partition: weakly decreasing positive parts. Indexes both Schur
/// functions (as a shape) and cycle types (as orbit lengths).
///
/// The derived ordering is lexicographic on the part vectors; the canonical
/// enumeration order of [`partitions_of`] is its reverse (largest part
/// first, so `(n)` comes first and `(1,...,1)` last).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Build from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u64>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition (n); empty for n = 0.
    pub fn row(n: u64) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition (1^n).
    pub fn column(n: u64) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part value -> multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<u64, u64> {
        let mut mult = BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        mult
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            parts.push(self.parts.iter().filter(|&&p| p as usize > j).count() as u64);
        }
        Partition { parts }
    }
}

impl core::fmt::Display for Partition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of n, largest part first (reverse-lexicographic), so the
/// list starts with (n) and ends with (1,...,1). partitions_of(0) = [()].
pub fn partitions_of(n: u64) -> Vec<Partition> {
    fn gen(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            prefix.push(p);
            gen(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    gen(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// Centralizer order z_mu = prod_j j^{m_j} m_j! of a permutation with cycle
/// type mu; n!/z_mu is the size of the conjugacy class.
pub fn z_of(mu: &Partition) -> Int {
    let mut z = BigInt::one();
    for (part, mult) in mu.multiplicities() {
        z *= BigInt::from(part).pow(mult as u32);
        z *= factorial(mult);
    }
    z
}

/// Number of standard Young tableaux of shape lambda, by the hook-length
/// formula n! / prod(hooks).
pub fn hook_dimension(lambda: &Partition) -> Int {
    let n = lambda.weight();
    if n == 0 {
        return BigInt::one();
    }
    let conj = lambda.conjugate();
    let mut hooks = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row - 1 - j as u64;
            let leg = conj.parts()[j] - 1 - i as u64;
            hooks *= BigInt::from(arm + leg + 1);
        }
    }
    let (q, r) = factorial(n).div_rem(&hooks);
    assert!(r.is_zero(), "hook product must divide n!");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_count_and_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let p4 = partitions_of(4);
        assert_eq!(p4.len(), 5);
        assert_eq!(p4[0], Partition::new(vec![4]));
        assert_eq!(p4[1], Partition::new(vec![3, 1]));
        assert_eq!(p4[2], Partition::new(vec![2, 2]));
        assert_eq!(p4[3], Partition::new(vec![2, 1, 1]));
        assert_eq!(p4[4], Partition::column(4));
        assert_eq!(partitions_of(10).len(), 42);
        // first differences of the classical counting sequence
        let counts: Vec<usize> = (0..=12).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn enumeration_is_strictly_decreasing() {
        for n in 0..=10u64 {
            let ps = partitions_of(n);
            for w in ps.windows(2) {
                assert!(w[0] > w[1], "order violated at {} vs {}", w[0], w[1]);
            }
            for p in &ps {
                assert_eq!(p.weight(), n);
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(&Partition::column(3)), Int::from(6));
        assert_eq!(z_of(&Partition::new(vec![2, 1])), Int::from(2));
        assert_eq!(z_of(&Partition::new(vec![3, 3, 2])), Int::from(36));
        assert_eq!(z_of(&Partition::empty()), Int::from(1));
    }

    #[test]
    fn z_sums_to_factorial() {
        // sum over mu of n!/z_mu = n! counts all permutations
        for n in 0..=8u64 {
            let total: Int = partitions_of(n)
                .iter()
                .map(|mu| factorial(n) / z_of(mu))
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn conjugate_involution() {
        for n in 0..=8u64 {
            for p in partitions_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().weight(), n);
            }
        }
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(hook_dimension(&Partition::row(7)), Int::from(1));
        assert_eq!(hook_dimension(&Partition::new(vec![2, 1])), Int::from(2));
        assert_eq!(hook_dimension(&Partition::new(vec![3, 2])), Int::from(5));
        assert_eq!(hook_dimension(&Partition::column(5)), Int::from(1));
    }

    #[test]
    fn hook_dimension_squares_sum_to_factorial() {
        for n in 0..=8u64 {
            let total: Int = partitions_of(n)
                .iter()
                .map(|p| {
                    let d = hook_dimension(p);
                    &d * &d
                })
                .sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }
}
