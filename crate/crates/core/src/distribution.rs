//! Exact occurrence-count distributions over `S_n`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Error;
use crate::exec::{Execution, Sn};
use crate::mesh::MeshPattern;

/// Number of permutations of length `n` with exactly `k` occurrences, for each `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Distribution {
    pub n: usize,
    pub counts: BTreeMap<usize, u64>,
}

/// Number of permutations with `k` occurrences of the first pattern and `l`
/// of the second, keyed by `(k, l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointDistribution {
    pub n: usize,
    pub counts: BTreeMap<(usize, usize), u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Row {
    pub n: usize,
    pub k: usize,
    pub count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JointRow {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub count: u64,
}

impl Distribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, k: usize) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn rows(&self) -> Vec<Row> {
        self.counts
            .iter()
            .map(|(&k, &count)| Row {
                n: self.n,
                k,
                count,
            })
            .collect()
    }

    fn from_dense(n: usize, dense: &[u64]) -> Self {
        let counts = dense
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| (k, c))
            .collect();
        Self { n, counts }
    }
}

impl JointDistribution {
    pub fn get(&self, k: usize, l: usize) -> u64 {
        self.counts.get(&(k, l)).copied().unwrap_or(0)
    }

    /// Invariant under swapping the two coordinates.
    pub fn is_symmetric(&self) -> bool {
        self.counts.iter().all(|(&(k, l), &c)| self.get(l, k) == c)
    }

    pub fn marginals(&self) -> (Distribution, Distribution) {
        let mut a = BTreeMap::new();
        let mut b = BTreeMap::new();
        for (&(k, l), &c) in &self.counts {
            *a.entry(k).or_insert(0) += c;
            *b.entry(l).or_insert(0) += c;
        }
        (
            Distribution {
                n: self.n,
                counts: a,
            },
            Distribution {
                n: self.n,
                counts: b,
            },
        )
    }

    pub fn rows(&self) -> Vec<JointRow> {
        self.counts
            .iter()
            .map(|(&(k, l), &count)| JointRow {
                n: self.n,
                k,
                l,
                count,
            })
            .collect()
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn add_into(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Distribution of `p` over `S_n`.
pub fn distribution(p: &MeshPattern, n: usize, exec: Execution) -> Result<Distribution, Error> {
    distribution_in(p, Sn::new(n)?, exec)
}

pub fn distribution_in(p: &MeshPattern, sn: Sn, exec: Execution) -> Result<Distribution, Error> {
    let width = binomial(sn.n(), p.k()) + 1;
    let dense = sn.fold(
        exec,
        || vec![0u64; width],
        |acc, host| acc[p.count_occurrences(host)] += 1,
        add_into,
    );
    Ok(Distribution::from_dense(sn.n(), &dense))
}

/// Joint distribution of `(p1, p2)` over `S_n`.
pub fn joint_distribution(
    p1: &MeshPattern,
    p2: &MeshPattern,
    n: usize,
    exec: Execution,
) -> Result<JointDistribution, Error> {
    let sn = Sn::new(n)?;
    let w1 = binomial(n, p1.k()) + 1;
    let w2 = binomial(n, p2.k()) + 1;
    let dense = sn.fold(
        exec,
        || vec![0u64; w1 * w2],
        |acc, host| acc[p1.count_occurrences(host) * w2 + p2.count_occurrences(host)] += 1,
        add_into,
    );
    let counts = dense
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| ((i / w2, i % w2), c))
        .collect();
    Ok(JointDistribution { n, counts })
}

/// Smallest `n <= max_n` at which the two distributions differ.
pub fn first_divergence(
    p1: &MeshPattern,
    p2: &MeshPattern,
    max_n: usize,
    exec: Execution,
) -> Result<Option<usize>, Error> {
    Sn::new(max_n)?;
    for n in 0..=max_n {
        let sn = Sn::unbounded(n);
        if distribution_in(p1, sn, exec)? != distribution_in(p2, sn, exec)? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Number of avoiders of `p` in `S_n` for `n = 0..=max_n`.
pub fn avoidance_sequence(
    p: &MeshPattern,
    max_n: usize,
    exec: Execution,
) -> Result<Vec<u64>, Error> {
    Sn::new(max_n)?;
    (0..=max_n)
        .map(|n| Ok(distribution_in(p, Sn::unbounded(n), exec)?.get(0)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_inversions() {
        let p = MeshPattern::of("21", &[]).unwrap();
        let d = distribution(&p, 4, Execution::Sequential).unwrap();
        // Mahonian numbers for n = 4.
        let expected = [1, 3, 5, 6, 5, 3, 1];
        for (k, &e) in expected.iter().enumerate() {
            assert_eq!(d.get(k), e);
        }
        assert_eq!(d.total(), 24);
    }

    #[test]
    fn joint_marginals_match() {
        let p1 = MeshPattern::of("123", &[(0, 0)]).unwrap();
        let p2 = MeshPattern::of("132", &[(0, 0)]).unwrap();
        let j = joint_distribution(&p1, &p2, 5, Execution::Parallel).unwrap();
        let (a, b) = j.marginals();
        assert_eq!(a, distribution(&p1, 5, Execution::Sequential).unwrap());
        assert_eq!(b, distribution(&p2, 5, Execution::Sequential).unwrap());
    }

    #[test]
    fn empty_and_trivial_lengths() {
        let p = MeshPattern::of("132", &[]).unwrap();
        assert_eq!(
            avoidance_sequence(&p, 2, Execution::Sequential).unwrap(),
            vec![1, 1, 2]
        );
    }
}
