//! Transforms organised around the left-to-right minima `x_1 > x_2 > ...`.
//!
//! With `x_0 = n + 1`, the value interval `X_i` is `(x_i, x_{i-1})` and the
//! position interval `A_i` holds the entries between `x_i` and `x_{i+1}`
//! whose values lie in `X_i`.

use crate::error::Error;
use crate::mesh::Shading;
use crate::perm::Permutation;

use super::{Bijection, FamilyTag, PatternPair};

pub(super) const PAIR_SWAP_SHADINGS: [&str; 2] = [
    "00,02,11,12,13,20,21,22,23,31,32",
    "00,02,03,11,12,13,20,21,22,23,30,31,32",
];

/// 0-based positions of each `A_i`, one entry per left-to-right minimum.
pub fn ltr_intervals(p: &Permutation) -> Vec<Vec<usize>> {
    let v = p.as_slice();
    let minima = p.ltr_minima();
    let mut upper = v.len() as u8 + 1;
    let mut out = Vec::with_capacity(minima.len());
    for (t, &m) in minima.iter().enumerate() {
        let end = minima.get(t + 1).copied().unwrap_or(v.len());
        let x = v[m];
        out.push((m + 1..end).filter(|&q| v[q] > x && v[q] < upper).collect());
        upper = x;
    }
    out
}

/// Complements every value interval `X_i` in place.
pub fn ltr_interval_complement(p: &Permutation) -> Permutation {
    let v = p.as_slice();
    let mut upper = v.len() as u8 + 1;
    let mut out = p.clone();
    for m in p.ltr_minima() {
        let x = v[m];
        let set: Vec<u8> = (x + 1..upper).collect();
        out = out.complement_on_set(&set);
        upper = x;
    }
    out
}

/// Swaps the second and third entries of every occurrence, visiting each
/// distinct position pair once.
pub(crate) fn swap_second_third(p: &Permutation, pair: &PatternPair) -> Permutation {
    let mut tails: Vec<(usize, usize)> = pair
        .occurrences(p.as_slice())
        .iter()
        .map(|o| (o[1], o[2]))
        .collect();
    tails.sort_unstable();
    tails.dedup();
    let mut out = p.clone();
    for (a, b) in tails {
        out = out.swapped(a, b);
    }
    out
}

pub(crate) fn pair_swap_unchecked(p: &Permutation, pair: &PatternPair) -> Permutation {
    swap_second_third(p, pair)
}

pub fn pair_swap_transform(p: &Permutation, shading: Shading) -> Result<Permutation, Error> {
    Ok(Bijection::new(FamilyTag::PairSwap, PatternPair::same_shading(shading)?)?.apply(p))
}

/// Complements the set of values occurring as a second or third entry of
/// some occurrence, without checking the shading.
///
/// This is the literal reading of `A_1`. It reproduces the known failure on
/// `{00,02,03,20,22,30}` but is not a bijection for every supported shading;
/// [`a1_complement`] uses [`a1_interval_complement`] instead.
pub fn a1_complement_unchecked(p: &Permutation, pair: &PatternPair) -> Permutation {
    let v = p.as_slice();
    let values: Vec<u8> = pair
        .occurrences(v)
        .iter()
        .flat_map(|o| [v[o[1]], v[o[2]]])
        .collect();
    p.complement_on_set(&values)
}

/// Largest window `l..=r` around `a..=b`, starting after `floor`, whose
/// values form a contiguous range.
fn widest_interval(v: &[u8], floor: usize, a: usize, b: usize) -> (usize, usize) {
    let (mut lo, mut hi) = (a, b);
    for l in (floor..=a).rev() {
        let (mut min, mut max) = (u8::MAX, 0u8);
        for &w in &v[l..b] {
            min = min.min(w);
            max = max.max(w);
        }
        for (r, &w) in v.iter().enumerate().skip(b) {
            min = min.min(w);
            max = max.max(w);
            if (max - min) as usize == r - l {
                lo = lo.min(l);
                hi = hi.max(r);
            }
        }
    }
    (lo, hi)
}

/// Complements, for every occurrence `x b c`, the widest window around
/// `b..c` with a contiguous value range that lies right of every entry
/// smaller than `x`; overlapping windows are merged first.
pub fn a1_interval_complement(p: &Permutation, pair: &PatternPair) -> Permutation {
    let v = p.as_slice();
    let mut windows: Vec<(usize, usize)> = pair
        .occurrences(v)
        .iter()
        .map(|o| {
            let x = v[o[0]];
            let floor = v.iter().rposition(|&w| w < x).map_or(o[0], |q| q.max(o[0])) + 1;
            widest_interval(v, floor, o[1], o[2])
        })
        .collect();
    windows.sort_unstable();
    let mut merged: Vec<(usize, usize)> = Vec::new();
    for (a, b) in windows {
        match merged.last_mut() {
            Some(last) if a <= last.1 => last.1 = last.1.max(b),
            _ => merged.push((a, b)),
        }
    }
    let mut out = p.clone();
    for (a, b) in merged {
        out = out.complement_on_set(&v[a..=b]);
    }
    out
}

pub fn a1_complement(p: &Permutation, shading: Shading) -> Result<Permutation, Error> {
    Ok(Bijection::new(FamilyTag::A1Complement, PatternPair::same_shading(shading)?)?.apply(p))
}
