//! Site subsets and their lexicographic enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{MemsError, Result};

/// A non-empty, strictly increasing set of site indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SiteSubset(Vec<usize>);

impl SiteSubset {
    /// Validates `indices` against a system of `n_sites` sites. Indices are
    /// accepted in any order and sorted; duplicates are rejected.
    pub fn new(mut indices: Vec<usize>, n_sites: usize) -> Result<Self> {
        let invalid = |indices: Vec<usize>| MemsError::SubsetInvalid { indices, n_sites };
        if indices.is_empty() {
            return Err(invalid(indices));
        }
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) || indices[indices.len() - 1] >= n_sites {
            return Err(invalid(indices));
        }
        Ok(SiteSubset(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, site: usize) -> bool {
        self.0.binary_search(&site).is_ok()
    }

    /// Sites not in this subset, in increasing order. Empty when the subset
    /// covers the whole system.
    pub fn complement_indices(&self, n_sites: usize) -> Vec<usize> {
        (0..n_sites).filter(|s| !self.contains(*s)).collect()
    }

    /// The complementary subset, if non-empty.
    pub fn complement(&self, n_sites: usize) -> Option<SiteSubset> {
        let rest = self.complement_indices(n_sites);
        (!rest.is_empty()).then_some(SiteSubset(rest))
    }
}

impl fmt::Display for SiteSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Binomial coefficient C(n, k); saturates at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Iterator over all `k`-subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Subsets {
    type Item = SiteSubset;

    fn next(&mut self) -> Option<SiteSubset> {
        let cur = self.current.as_mut()?;
        let out = SiteSubset(cur.clone());
        let k = cur.len();
        // rightmost position that can still advance
        match (0..k).rev().find(|&p| cur[p] < self.n - k + p) {
            Some(p) => {
                cur[p] += 1;
                for q in p + 1..k {
                    cur[q] = cur[q - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// All subsets of size `k` drawn from `n_sites` sites, lexicographically.
pub fn subsets_of_size(n_sites: usize, k: usize) -> Result<Subsets> {
    if k == 0 || k > n_sites {
        return Err(MemsError::InvalidSize { n: n_sites, k });
    }
    Ok(Subsets {
        n: n_sites,
        current: Some((0..k).collect()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(n: usize, k: usize) -> Vec<Vec<usize>> {
        subsets_of_size(n, k)
            .unwrap()
            .map(|s| s.indices().to_vec())
            .collect()
    }

    #[test]
    fn four_choose_two_in_order() {
        assert_eq!(
            collect(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn full_subset_and_six_choose_three() {
        assert_eq!(collect(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(collect(6, 3).len(), 20);
    }

    #[test]
    fn out_of_range_sizes() {
        assert!(matches!(subsets_of_size(4, 0), Err(MemsError::InvalidSize { .. })));
        assert!(matches!(subsets_of_size(4, 5), Err(MemsError::InvalidSize { .. })));
    }

    #[test]
    fn counts_match_binomial() {
        for n in 1..=20 {
            for k in 1..=n {
                let count = subsets_of_size(n, k).unwrap().count() as u64;
                assert_eq!(count, binomial(n, k), "n={n} k={k}");
            }
        }
        assert_eq!(binomial(20, 10), 184_756);
    }

    #[test]
    fn subset_validation() {
        assert_eq!(SiteSubset::new(vec![2, 0], 3).unwrap().indices(), &[0, 2]);
        assert!(SiteSubset::new(vec![], 3).is_err());
        assert!(SiteSubset::new(vec![1, 1], 3).is_err());
        assert!(SiteSubset::new(vec![3], 3).is_err());
        let s = SiteSubset::new(vec![1], 3).unwrap();
        assert_eq!(s.complement(3).unwrap().indices(), &[0, 2]);
        assert_eq!(s.to_string(), "{1}");
    }
}
