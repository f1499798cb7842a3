use serde::Serialize;

use crate::error::Error;
use crate::exec::{Execution, Sn};
use crate::perm::{factorial, lex_rank, Permutation};

use super::{Bijection, PatternPair};

/// Outcome of an exhaustive check of a transform over `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub bijective: bool,
    /// Every image carries the first pattern's count of its preimage as its
    /// second-pattern count, and the other way round.
    pub joint_swap: bool,
    pub involution: bool,
    /// First failing input: a joint-swap failure, else the second preimage
    /// of a repeated image, else a point where `f(f(x)) != x`.
    pub counterexample: Option<Permutation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.joint_swap
    }
}

struct Acc {
    seen: Vec<u64>,
    collision: bool,
    swap_fail: Option<Permutation>,
    invol_fail: Option<Permutation>,
}

fn merge(mut a: Acc, b: Acc) -> Acc {
    for (x, y) in a.seen.iter_mut().zip(&b.seen) {
        a.collision |= *x & *y != 0;
        *x |= *y;
    }
    a.collision |= b.collision;
    a.swap_fail = a.swap_fail.or(b.swap_fail);
    a.invol_fail = a.invol_fail.or(b.invol_fail);
    a
}

/// Checks `f` against `pair` on every permutation of length `n`.
pub fn verify_with<F>(
    pair: &PatternPair,
    f: F,
    n: usize,
    exec: Execution,
) -> Result<VerificationReport, Error>
where
    F: Fn(&Permutation) -> Permutation + Sync,
{
    let sn = Sn::new(n)?;
    let words = (factorial(n) as usize).div_ceil(64);
    let acc = sn.fold(
        exec,
        || Acc {
            seen: vec![0; words],
            collision: false,
            swap_fail: None,
            invol_fail: None,
        },
        |acc, host| {
            let p = Permutation::from_vec_unchecked(host.to_vec());
            let q = f(&p);
            let (a, b) = pair.counts(host);
            let (c, d) = pair.counts(q.as_slice());
            if acc.swap_fail.is_none() && (a, b) != (d, c) {
                acc.swap_fail = Some(p.clone());
            }
            let r = lex_rank(q.as_slice()) as usize;
            let bit = 1u64 << (r % 64);
            acc.collision |= acc.seen[r / 64] & bit != 0;
            acc.seen[r / 64] |= bit;
            if acc.invol_fail.is_none() && f(&q) != p {
                acc.invol_fail = Some(p);
            }
        },
        merge,
    );
    let collision_witness = if acc.collision {
        first_collision(n, &f)
    } else {
        None
    };
    Ok(VerificationReport {
        n,
        bijective: !acc.collision,
        joint_swap: acc.swap_fail.is_none(),
        involution: acc.invol_fail.is_none(),
        counterexample: acc.swap_fail.or(collision_witness).or(acc.invol_fail),
    })
}

/// Sequential rescan for the first input whose image was already produced.
fn first_collision<F: Fn(&Permutation) -> Permutation>(n: usize, f: &F) -> Option<Permutation> {
    let mut seen = vec![false; factorial(n) as usize];
    crate::perm::permutations(n).find(|p| {
        let r = lex_rank(f(p).as_slice()) as usize;
        std::mem::replace(&mut seen[r], true)
    })
}

impl Bijection {
    pub fn verify(&self, n: usize, exec: Execution) -> Result<VerificationReport, Error> {
        verify_with(self.pair(), |p| self.apply(p), n, exec)
    }
}
