//! The right-to-left sweep exchanging `(12, R)` and `(21, R)`, and the
//! length-3 families that reduce to it.
//!
//! The sweep is defined for the base shadings `R0 = {00,01,10,11}` and
//! `R1 = R0 + {22}`; any shading in their dihedral orbit is handled by
//! conjugating with the symmetry that carries it onto the base.

use crate::error::Error;
use crate::mesh::Shading;
use crate::perm::{standardize, Permutation};

use super::{inner_shading, ltr_intervals, sh, PatternPair};

const R0: &str = "00,01,10,11";
const R1: &str = "00,01,10,11,22";

/// A dihedral symmetry, applied as inverse, then reverse, then complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) struct D4 {
    inverse: bool,
    reverse: bool,
    complement: bool,
}

impl D4 {
    fn all() -> impl Iterator<Item = D4> {
        (0..8u8).map(|b| D4 {
            inverse: b & 1 != 0,
            reverse: b & 2 != 0,
            complement: b & 4 != 0,
        })
    }

    fn on_shading(&self, r: &Shading) -> Shading {
        let mut s = *r;
        if self.inverse {
            s = s.transpose();
        }
        if self.reverse {
            s = s.reverse();
        }
        if self.complement {
            s = s.complement();
        }
        s
    }

    fn forward(&self, p: &Permutation) -> Permutation {
        let mut q = p.clone();
        if self.inverse {
            q = q.inverse();
        }
        if self.reverse {
            q = q.reverse();
        }
        if self.complement {
            q = q.complement();
        }
        q
    }

    fn backward(&self, p: &Permutation) -> Permutation {
        let mut q = p.clone();
        if self.complement {
            q = q.complement();
        }
        if self.reverse {
            q = q.reverse();
        }
        if self.inverse {
            q = q.inverse();
        }
        q
    }
}

fn base(tail_box: bool) -> Shading {
    sh(2, if tail_box { R1 } else { R0 })
}

/// Symmetry carrying `r` onto the base shading. Without `all_symmetries`
/// only the identity and the complement are tried, since those are the
/// ones that keep an interval's left end in place.
pub(super) fn conjugation_to_base(r: &Shading, tail_box: bool, all_symmetries: bool) -> Option<D4> {
    if r.k() != 2 {
        return None;
    }
    let target = base(tail_box);
    D4::all()
        .filter(|s| all_symmetries || !(s.inverse || s.reverse))
        .find(|s| s.on_shading(r) == target)
}

fn any_conjugation(r: &Shading, all_symmetries: bool) -> Option<(D4, bool)> {
    [false, true]
        .into_iter()
        .find_map(|t| conjugation_to_base(r, t, all_symmetries).map(|s| (s, t)))
}

/// The sweep on a base shading: repeatedly take the occurrence whose second
/// entry is rightmost among those left of the previous one, and swap it.
fn sweep(p: &Permutation, tail_box: bool) -> Permutation {
    let pair = PatternPair::same_shading(base(tail_box)).expect("length-2 pair");
    let mut cur = p.clone();
    let mut bound = p.len();
    loop {
        let next = pair
            .occurrences(cur.as_slice())
            .into_iter()
            .filter(|o| o[1] < bound)
            .max_by_key(|o| o[1]);
        match next {
            Some(o) => {
                cur = cur.swapped(o[0], o[1]);
                bound = o[1];
            }
            None => return cur,
        }
    }
}

fn conjugated_sweep(p: &Permutation, s: D4, tail_box: bool) -> Permutation {
    s.backward(&sweep(&s.forward(p), tail_box))
}

pub(super) fn swap_unchecked(p: &Permutation, r: &Shading) -> Permutation {
    let (s, t) = any_conjugation(r, true).expect("shading checked at construction");
    conjugated_sweep(p, s, t)
}

/// Exchanges occurrences of `(12, r)` and `(21, r)`.
pub fn len2_swap_transform(p: &Permutation, r: &Shading) -> Result<Permutation, Error> {
    let (s, t) = any_conjugation(r, true).ok_or_else(|| unsupported("LEN2_SWAP", r))?;
    Ok(conjugated_sweep(p, s, t))
}

fn unsupported(family: &str, r: &Shading) -> Error {
    Error::UnsupportedShading {
        family: family.to_string(),
        shading: r.compact(),
    }
}

/// Runs `f` on the standardized subsequence at `positions` and writes the
/// result back onto the same set of values.
fn on_subsequence(
    p: &Permutation,
    positions: &[usize],
    f: impl Fn(&Permutation) -> Permutation,
) -> Permutation {
    if positions.len() < 2 {
        return p.clone();
    }
    let v = p.as_slice();
    let sub: Vec<u8> = positions.iter().map(|&q| v[q]).collect();
    let mut sorted = sub.clone();
    sorted.sort_unstable();
    let image = f(&standardize(&sub));
    let mut out = v.to_vec();
    for (&q, &w) in positions.iter().zip(image.as_slice()) {
        out[q] = sorted[w as usize - 1];
    }
    Permutation::from_vec_unchecked(out)
}

pub(super) fn reduction_unchecked(p: &Permutation, r: &Shading) -> Permutation {
    if p.as_slice().first() != Some(&1) {
        return p.clone();
    }
    let (s, t) = any_conjugation(&inner_shading(r), true).expect("shading checked at construction");
    let rest: Vec<usize> = (1..p.len()).collect();
    on_subsequence(p, &rest, |q| conjugated_sweep(q, s, t))
}

/// For permutations starting with 1, runs the length-2 sweep on the rest.
pub fn len2_reduction(p: &Permutation, r: &Shading) -> Result<Permutation, Error> {
    if r.k() != 3 || any_conjugation(&inner_shading(r), true).is_none() {
        return Err(unsupported("LEN2_REDUCTION", r));
    }
    Ok(reduction_unchecked(p, r))
}

pub(super) fn per_interval_unchecked(p: &Permutation, r: &Shading) -> Permutation {
    let (s, t) =
        any_conjugation(&inner_shading(r), false).expect("shading checked at construction");
    let mut out = p.clone();
    for a in ltr_intervals(p) {
        out = on_subsequence(&out, &a, |q| conjugated_sweep(q, s, t));
    }
    out
}

/// Runs the length-2 sweep independently inside every interval `A_i`.
pub fn per_interval_len2(p: &Permutation, r: &Shading) -> Result<Permutation, Error> {
    if r.k() != 3 || any_conjugation(&inner_shading(r), false).is_none() {
        return Err(unsupported("PER_INTERVAL_LEN2", r));
    }
    Ok(per_interval_unchecked(p, r))
}
