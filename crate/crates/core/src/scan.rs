//! Exhaustive search for symmetric shadings `R` on which `(123, R)` and
//! `(132, R)` are equidistributed.
//!
//! Each permutation is reduced to the box masks of its 123- and 132-triples.
//! Two routes turn those masks into per-shading occurrence counts:
//!
//! * [`ScanStrategy::Direct`] tests every mask against every shading.
//! * [`ScanStrategy::Zeta`] projects masks onto the ten diagonal orbits,
//!   histograms them and takes subset sums, after which the count for the
//!   shading with orbit set `s` is the subset sum at the complement of `s`.

use serde::Serialize;

use crate::error::Error;
use crate::exec::{Execution, Sn};
use crate::mesh::{diagonal_orbits, symmetric_shadings, Shading};

const ORBITS: usize = 10;
const SHADINGS: usize = 1 << ORBITS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanStrategy {
    Direct,
    #[default]
    Zeta,
}

/// Outcome for one shading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanRecord {
    pub shading: Shading,
    /// First length at which the two distributions differ, if any up to `max_n`.
    pub first_divergence: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub max_n: usize,
    /// One record per symmetric shading, in orbit-subset order.
    pub records: Vec<ScanRecord>,
}

#[derive(Serialize)]
pub struct ScanLine {
    pub shading: Vec<(usize, usize)>,
    pub verdict: &'static str,
    pub first_divergence_n: Option<usize>,
}

impl ScanRecord {
    pub fn to_line(&self) -> ScanLine {
        ScanLine {
            shading: self.shading.boxes(),
            verdict: if self.first_divergence.is_none() {
                "equidistributed"
            } else {
                "diverges"
            },
            first_divergence_n: self.first_divergence,
        }
    }
}

impl ScanReport {
    pub fn survivors(&self) -> Vec<Shading> {
        self.records
            .iter()
            .filter(|r| r.first_divergence.is_none())
            .map(|r| r.shading)
            .collect()
    }

    pub fn record(&self, s: &Shading) -> Option<&ScanRecord> {
        self.records.iter().find(|r| r.shading == *s)
    }
}

/// Per-shading occurrence-count histograms over `S_n` for both patterns.
///
/// `first[s * width + c]` is the number of permutations with exactly `c`
/// occurrences of `(123, R_s)`; `second` is the same for 132.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanTables {
    pub n: usize,
    pub width: usize,
    pub first: Vec<u32>,
    pub second: Vec<u32>,
}

impl ScanTables {
    fn zero(n: usize) -> Self {
        let width = n * n.saturating_sub(1) * n.saturating_sub(2) / 6 + 1;
        Self {
            n,
            width,
            first: vec![0; SHADINGS * width],
            second: vec![0; SHADINGS * width],
        }
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.first.iter_mut().zip(&other.first) {
            *a += b;
        }
        for (a, b) in self.second.iter_mut().zip(&other.second) {
            *a += b;
        }
        self
    }

    pub fn row_first(&self, s: usize) -> &[u32] {
        &self.first[s * self.width..(s + 1) * self.width]
    }

    pub fn row_second(&self, s: usize) -> &[u32] {
        &self.second[s * self.width..(s + 1) * self.width]
    }

    pub fn differs(&self, s: usize) -> bool {
        self.row_first(s) != self.row_second(s)
    }
}

/// Appends the 16-bit box masks of the 123-triples to `m123` and of the
/// 132-triples to `m132`.
pub fn triple_masks(host: &[u8], m123: &mut Vec<u16>, m132: &mut Vec<u16>) {
    let n = host.len();
    for i in 0..n {
        let a = host[i];
        for j in i + 1..n {
            let b = host[j];
            if b < a {
                continue;
            }
            for l in j + 1..n {
                let c = host[l];
                if c < a {
                    continue;
                }
                let (lo, mid, hi) = if b < c { (a, b, c) } else { (a, c, b) };
                let mut mask = 0u16;
                for (p, &v) in host.iter().enumerate() {
                    if p == i || p == j || p == l {
                        continue;
                    }
                    let col = (p > i) as u16 + (p > j) as u16 + (p > l) as u16;
                    let row = (v > lo) as u16 + (v > mid) as u16 + (v > hi) as u16;
                    mask |= 1 << (col * 4 + row);
                }
                if b < c {
                    m123.push(mask);
                } else {
                    m132.push(mask);
                }
            }
        }
    }
}

/// Orbit-set projection of every 16-bit mask.
fn orbit_table() -> Vec<u16> {
    let orbits: Vec<u32> = diagonal_orbits(3).iter().map(Shading::bits).collect();
    (0u32..1 << 16)
        .map(|m| {
            orbits
                .iter()
                .enumerate()
                .filter(|(_, &o)| m & o != 0)
                .fold(0u16, |acc, (t, _)| acc | 1 << t)
        })
        .collect()
}

fn subset_sums(h: &mut [u16; SHADINGS]) {
    for b in 0..ORBITS {
        let bit = 1 << b;
        for s in 0..SHADINGS {
            if s & bit != 0 {
                h[s] += h[s ^ bit];
            }
        }
    }
}

/// Per-shading histograms for one length.
pub fn scan_tables(n: usize, exec: Execution, strategy: ScanStrategy) -> Result<ScanTables, Error> {
    scan_tables_in(Sn::new(n)?, exec, strategy)
}

fn scan_tables_in(sn: Sn, exec: Execution, strategy: ScanStrategy) -> Result<ScanTables, Error> {
    let n = sn.n();
    let shadings: Vec<u16> = symmetric_shadings(3)
        .iter()
        .map(|s| s.bits() as u16)
        .collect();
    let orbit_of = match strategy {
        ScanStrategy::Zeta => orbit_table(),
        ScanStrategy::Direct => Vec::new(),
    };
    struct Acc {
        tables: ScanTables,
        m123: Vec<u16>,
        m132: Vec<u16>,
    }
    let acc = sn.fold(
        exec,
        || Acc {
            tables: ScanTables::zero(n),
            m123: Vec::new(),
            m132: Vec::new(),
        },
        |acc, host| {
            acc.m123.clear();
            acc.m132.clear();
            triple_masks(host, &mut acc.m123, &mut acc.m132);
            let w = acc.tables.width;
            match strategy {
                ScanStrategy::Direct => {
                    for (s, &r) in shadings.iter().enumerate() {
                        let c1 = acc.m123.iter().filter(|&&m| m & r == 0).count();
                        let c2 = acc.m132.iter().filter(|&&m| m & r == 0).count();
                        acc.tables.first[s * w + c1] += 1;
                        acc.tables.second[s * w + c2] += 1;
                    }
                }
                ScanStrategy::Zeta => {
                    let mut h1 = [0u16; SHADINGS];
                    let mut h2 = [0u16; SHADINGS];
                    for &m in &acc.m123 {
                        h1[orbit_of[m as usize] as usize] += 1;
                    }
                    for &m in &acc.m132 {
                        h2[orbit_of[m as usize] as usize] += 1;
                    }
                    subset_sums(&mut h1);
                    subset_sums(&mut h2);
                    let full = SHADINGS - 1;
                    for s in 0..SHADINGS {
                        acc.tables.first[s * w + h1[full ^ s] as usize] += 1;
                        acc.tables.second[s * w + h2[full ^ s] as usize] += 1;
                    }
                }
            }
        },
        |a, b| Acc {
            tables: a.tables.merge(b.tables),
            m123: a.m123,
            m132: a.m132,
        },
    );
    Ok(acc.tables)
}

/// Scans every symmetric shading for `n = 0..=max_n`.
pub fn scan_symmetric(
    max_n: usize,
    exec: Execution,
    strategy: ScanStrategy,
) -> Result<ScanReport, Error> {
    scan_symmetric_in(Sn::new(max_n)?, exec, strategy)
}

/// As [`scan_symmetric`] with a caller-checked bound.
pub fn scan_symmetric_in(
    max: Sn,
    exec: Execution,
    strategy: ScanStrategy,
) -> Result<ScanReport, Error> {
    let shadings = symmetric_shadings(3);
    let mut first: Vec<Option<usize>> = vec![None; SHADINGS];
    // Fewer than three entries leave no room for an occurrence.
    for n in 3..=max.n() {
        let t = scan_tables_in(Sn::unbounded(n), exec, strategy)?;
        for (s, slot) in first.iter_mut().enumerate() {
            if slot.is_none() && t.differs(s) {
                *slot = Some(n);
            }
        }
    }
    let records = shadings
        .into_iter()
        .zip(first)
        .map(|(shading, first_divergence)| ScanRecord {
            shading,
            first_divergence,
        })
        .collect();
    Ok(ScanReport {
        max_n: max.n(),
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::distribution;
    use crate::mesh::MeshPattern;

    #[test]
    fn routes_agree() {
        for n in 0..=6 {
            let d = scan_tables(n, Execution::Sequential, ScanStrategy::Direct).unwrap();
            let z = scan_tables(n, Execution::Parallel, ScanStrategy::Zeta).unwrap();
            assert_eq!(d, z, "n={n}");
        }
    }

    #[test]
    fn rows_match_generic_counter() {
        let n = 5;
        let t = scan_tables(n, Execution::Parallel, ScanStrategy::Zeta).unwrap();
        let all = symmetric_shadings(3);
        for s in [0usize, 1, 37, 512, 1023] {
            let p = MeshPattern::new("123".parse().unwrap(), all[s]).unwrap();
            let d = distribution(&p, n, Execution::Sequential).unwrap();
            for (c, &count) in t.row_first(s).iter().enumerate() {
                assert_eq!(d.get(c), count as u64, "shading {s} count {c}");
            }
        }
    }

    #[test]
    fn orbit_projection() {
        let t = orbit_table();
        // Box (0,1) lies in the first off-diagonal orbit.
        assert_eq!(t[1 << 1], 1 << 4);
        assert_eq!(t[0], 0);
        assert_eq!(t[0xffff], 0x3ff);
    }
}
