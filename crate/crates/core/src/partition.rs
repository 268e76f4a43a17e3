//! Integer partitions indexing elliptic classes.

use crate::error::{Error, Result};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition of a positive integer, stored weakly decreasing.
///
/// Prefix-sum computations index the parts ascending (l_1 <= ... <= l_mu),
/// matching the convention used by the lift constructions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(parts: impl Into<Vec<u64>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".to_string()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".to_string()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Parts in weakly decreasing order (the display order).
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Parts in weakly increasing order: l_1 <= l_2 <= ... <= l_mu.
    pub fn ascending(&self) -> Vec<u64> {
        let mut v = self.parts.clone();
        v.reverse();
        v
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts, written mu.
    pub fn mu(&self) -> usize {
        self.parts.len()
    }

    /// Prefix sums over the ascending view: l'_nu = l_1 + ... + l_{nu-1},
    /// so l'_1 = 0 and l'_mu + l_mu = total.
    pub fn prefix_sums(&self) -> Vec<u64> {
        let asc = self.ascending();
        let mut sums = Vec::with_capacity(asc.len());
        let mut acc = 0;
        for &part in &asc {
            sums.push(acc);
            acc += part;
        }
        sums
    }

    pub fn lcm(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| acc.lcm(&p))
    }

    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
    }

    /// All partitions of `n`, in lexicographically descending order:
    /// (n) first, (1, 1, ..., 1) last.
    pub fn all_of(n: u64) -> Vec<Partition> {
        fn rec(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            let mut part = remaining.min(max_part);
            while part >= 1 {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
                part -= 1;
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_zero() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn sorts_descending() {
        let p = Partition::new(vec![1, 4, 4, 5]).unwrap();
        assert_eq!(p.parts(), &[5, 4, 4, 1]);
        assert_eq!(p.ascending(), vec![1, 4, 4, 5]);
    }

    #[test]
    fn prefix_sums_single_part() {
        let p = Partition::new(vec![1]).unwrap();
        assert_eq!(p.prefix_sums(), vec![0]);
    }

    #[test]
    fn prefix_sums_ascending_view() {
        let p = Partition::new(vec![5, 4, 4, 1]).unwrap();
        assert_eq!(p.prefix_sums(), vec![0, 1, 5, 9]);
        let q = Partition::new(vec![3, 3]).unwrap();
        assert_eq!(q.prefix_sums(), vec![0, 3]);
    }

    #[test]
    fn prefix_sum_last_plus_last_part_is_total() {
        for p in Partition::all_of(9) {
            let sums = p.prefix_sums();
            let asc = p.ascending();
            assert_eq!(sums[0], 0);
            assert_eq!(sums[p.mu() - 1] + asc[p.mu() - 1], p.total());
        }
    }

    #[test]
    fn enumeration_order_is_lex_descending() {
        let parts: Vec<Vec<u64>> = Partition::all_of(4)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            parts,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn partition_counts_match_reference() {
        // p(1)..p(12)
        let reference = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &expected) in reference.iter().enumerate() {
            assert_eq!(Partition::all_of(n as u64 + 1).len(), expected);
        }
    }

    #[test]
    fn lcm_of_parts() {
        assert_eq!(Partition::new(vec![5, 4, 4, 1]).unwrap().lcm(), 20);
        assert_eq!(Partition::new(vec![3, 3]).unwrap().lcm(), 3);
    }
}
