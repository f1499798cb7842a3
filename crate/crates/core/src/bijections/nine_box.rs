//! Block-wise largest-element swap procedure.
//!
//! Occurrences sharing a second or third entry are merged into blocks.
//! First entries are not linked, since under the 2x2 core one entry can
//! start several otherwise independent occurrences. Inside a block let
//! `i_1 < ... < i_s` be the positions of all second and third occurrence
//! entries; for `r = 1..s-1` the value at `i_r` is swapped with the largest
//! value currently held in `i_{r+1}..i_s`.

use crate::error::Error;
use crate::mesh::Shading;
use crate::perm::Permutation;

use super::{ltr_intervals, sh, Bijection, FamilyTag, PatternPair};

/// Core shading and the boxes that may be shaded on top of it.
const CORES: [(&str, &str); 4] = [
    ("11,12,13,21,22,23,31,32,33", "00,01,02,10,20"),
    ("22,23,32,33", "00,01,10,11"),
    ("12,13,21,22,23,31,32,33", "00,01,02,10,20"),
    ("02,03,20,22,23,30,32,33", "00,01,10,11"),
];

pub(super) const PER_INTERVAL_SHADINGS: [&str; 2] = [
    "00,01,02,10,20,22,23,32,33",
    "00,01,02,10,11,20,22,23,32,33",
];

pub(super) fn supported(r: &Shading) -> bool {
    CORES.iter().any(|(core, extra)| {
        let core = sh(3, core);
        let allowed = core.union(&sh(3, extra));
        core.is_subset(r) && r.is_subset(&allowed)
    })
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Sorted second/third positions of each block, blocks ordered by their
/// largest first-entry value, descending.
fn blocks(v: &[u8], occurrences: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = v.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for o in occurrences {
        let (a, b) = (find(&mut parent, o[1]), find(&mut parent, o[2]));
        parent[a] = b;
    }
    // root -> (largest first value, tail positions)
    let mut groups: Vec<(u8, Vec<usize>)> = vec![(0, Vec::new()); n];
    for o in occurrences {
        let root = find(&mut parent, o[1]);
        let g = &mut groups[root];
        g.0 = g.0.max(v[o[0]]);
        g.1.extend_from_slice(&o[1..]);
    }
    let mut out: Vec<(u8, Vec<usize>)> = groups.into_iter().filter(|g| !g.1.is_empty()).collect();
    for g in &mut out {
        g.1.sort_unstable();
        g.1.dedup();
    }
    out.sort_by_key(|g| std::cmp::Reverse(g.0));
    out.into_iter().map(|g| g.1).collect()
}

fn run_block(cur: &mut [u8], block: &[usize], steps: &mut Option<&mut Vec<Permutation>>) {
    for r in 0..block.len().saturating_sub(1) {
        let top = *block[r + 1..]
            .iter()
            .max_by_key(|&&q| cur[q])
            .expect("nonempty tail");
        cur.swap(block[r], top);
        if let Some(s) = steps.as_mut() {
            s.push(Permutation::from_vec_unchecked(cur.to_vec()));
        }
    }
}

fn procedure(
    p: &Permutation,
    pair: &PatternPair,
    mut steps: Option<&mut Vec<Permutation>>,
) -> Permutation {
    let v = p.as_slice();
    let occ = pair.occurrences(v);
    let mut cur = v.to_vec();
    for b in blocks(v, &occ) {
        run_block(&mut cur, &b, &mut steps);
    }
    Permutation::from_vec_unchecked(cur)
}

/// The procedure on any pair, without checking that it is meaningful there.
pub fn nine_box_unchecked(p: &Permutation, pair: &PatternPair) -> Permutation {
    procedure(p, pair, None)
}

/// Every intermediate permutation of the unchecked procedure, one per swap.
pub fn nine_box_steps_unchecked(p: &Permutation, pair: &PatternPair) -> Vec<Permutation> {
    let mut steps = Vec::new();
    procedure(p, pair, Some(&mut steps));
    steps
}

pub fn nine_box_transform(p: &Permutation, shading: Shading) -> Result<Permutation, Error> {
    Ok(Bijection::new(FamilyTag::NineBox, PatternPair::same_shading(shading)?)?.apply(p))
}

pub(super) fn per_interval_unchecked(p: &Permutation, pair: &PatternPair) -> Permutation {
    let v = p.as_slice();
    let occ = pair.occurrences(v);
    let mut cur = v.to_vec();
    for a in ltr_intervals(p) {
        let inside: Vec<Vec<usize>> = occ
            .iter()
            .filter(|o| a.binary_search(&o[1]).is_ok() && a.binary_search(&o[2]).is_ok())
            .cloned()
            .collect();
        for b in blocks(v, &inside) {
            run_block(&mut cur, &b, &mut None);
        }
    }
    Permutation::from_vec_unchecked(cur)
}

/// The procedure applied separately inside every interval `A_i`.
pub fn per_interval_nine_box(p: &Permutation, shading: Shading) -> Result<Permutation, Error> {
    Ok(Bijection::new(
        FamilyTag::PerIntervalNineBox,
        PatternPair::same_shading(shading)?,
    )?
    .apply(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pair(s: &str) -> PatternPair {
        PatternPair::same_shading(sh(3, s)).unwrap()
    }

    #[test]
    fn single_occurrence() {
        let p = pair("11,12,13,21,22,23,31,32,33");
        assert_eq!(nine_box_unchecked(&perm("123"), &p), perm("132"));
        assert_eq!(nine_box_unchecked(&perm("132"), &p), perm("123"));
        assert_eq!(nine_box_unchecked(&perm("321"), &p), perm("321"));
    }

    #[test]
    fn support() {
        assert!(supported(&sh(3, "11,12,13,21,22,23,31,32,33")));
        assert!(supported(&sh(3, "00,11,12,13,21,22,23,31,32,33")));
        assert!(!supported(&sh(3, "03,11,12,13,21,22,23,30,31,32,33")));
        assert!(!supported(&sh(3, "13,22,23,31,32,33")));
    }
}
