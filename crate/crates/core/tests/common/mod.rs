//! Exhaustive invariant checks shared by the acceptance and invariant suites.
//! Each returns the first violation as a message.

#![allow(dead_code)]

use meshperm::bijections::Bijection;
use meshperm::catalog::builtin;
use meshperm::mesh::{occurrence_box_mask, symmetric_shadings, Symmetry};
use meshperm::perm::{permutations, standardize};
use meshperm::{Execution, MeshPattern, Permutation, Shading};

pub type Check = Result<(), String>;

pub fn pattern(tau: &str, r: Shading) -> MeshPattern {
    MeshPattern::new(tau.parse().unwrap(), r).unwrap()
}

/// All increasing index tuples of length `k` below `n`.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Occurrence test straight from the definition: order-isomorphic, and no
/// other host point falls in a shaded box.
pub fn naive_is_occurrence(p: &MeshPattern, host: &[u8], pos: &[usize]) -> bool {
    let sub: Vec<u8> = pos.iter().map(|&i| host[i]).collect();
    if standardize(&sub) != *p.tau() {
        return false;
    }
    let mut vals = sub.clone();
    vals.sort_unstable();
    (0..host.len()).filter(|i| !pos.contains(i)).all(|i| {
        let col = pos.iter().filter(|&&q| q < i).count();
        let row = vals.iter().filter(|&&v| v < host[i]).count();
        !p.shading().contains(col, row)
    })
}

pub fn naive_count(p: &MeshPattern, host: &[u8]) -> usize {
    tuples(host.len(), p.k())
        .iter()
        .filter(|t| naive_is_occurrence(p, host, t))
        .count()
}

/// `count(p, pi) = count(s(p), s(pi))` for the three generating symmetries.
pub fn conjugation(max_n: usize) -> Check {
    let shadings = symmetric_shadings(3);
    for n in 0..=max_n {
        for pi in permutations(n) {
            for tau in ["123", "132"] {
                for r in &shadings {
                    let p = pattern(tau, *r);
                    let c = p.count_occurrences(pi.as_slice());
                    for (s, img) in [
                        (Symmetry::Reverse, pi.reverse()),
                        (Symmetry::Complement, pi.complement()),
                        (Symmetry::Inverse, pi.inverse()),
                    ] {
                        if p.transform(s).count_occurrences(img.as_slice()) != c {
                            return Err(format!("{p:?} {s:?} on {pi}"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Shading one more box never creates occurrences.
pub fn monotonicity(max_n: usize) -> Check {
    for n in 0..=max_n {
        for pi in permutations(n) {
            for tau in ["123", "132"] {
                for bits in (0u32..1 << 16).step_by(61) {
                    let r = Shading::from_bits(3, bits).unwrap();
                    let c = pattern(tau, r).count_occurrences(pi.as_slice());
                    for b in 0..16 {
                        if bits & 1 << b == 0 {
                            let wider = Shading::from_bits(3, bits | 1 << b).unwrap();
                            if pattern(tau, wider).count_occurrences(pi.as_slice()) > c {
                                return Err(format!("{tau} {} + bit {b} on {pi}", r.compact()));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The bitmask occurrence test agrees with the definition, and with
/// `mask & R == 0` once the order matches.
pub fn mask_equivalence(max_n: usize) -> Check {
    let shadings = symmetric_shadings(3);
    for n in 3..=max_n {
        let all = tuples(n, 3);
        for pi in permutations(n) {
            let host = pi.as_slice();
            for t in &all {
                let mask = occurrence_box_mask(host, t);
                let sub: Vec<u8> = t.iter().map(|&i| host[i]).collect();
                for tau in ["123", "132"] {
                    let order = standardize(&sub) == tau.parse::<Permutation>().unwrap();
                    for r in shadings.iter().step_by(5) {
                        let p = pattern(tau, *r);
                        let fast = p.is_occurrence(host, t);
                        if fast != naive_is_occurrence(&p, host, t)
                            || fast != (order && mask & r.bits() == 0)
                        {
                            return Err(format!("{p:?} at {t:?} in {pi}"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Reverse, complement and inverse are involutions and reverse commutes with
/// complement.
pub fn symmetry_involutions(max_n: usize) -> Check {
    for n in 0..=max_n {
        for pi in permutations(n) {
            if pi.reverse().reverse() != pi
                || pi.complement().complement() != pi
                || pi.inverse().inverse() != pi
            {
                return Err(format!("involution on {pi}"));
            }
            if pi.reverse().complement() != pi.complement().reverse() {
                return Err(format!("reverse/complement on {pi}"));
            }
        }
    }
    Ok(())
}

fn bijections() -> Vec<(u32, Bijection)> {
    builtin()
        .entries()
        .iter()
        .filter_map(|e| Some((e.id, e.bijection().ok()?)))
        .collect()
}

/// Involution families satisfy `f(f(x)) = x`.
pub fn family_involutions(max_n: usize) -> Check {
    for (id, b) in bijections() {
        if !b.family().is_involution() {
            continue;
        }
        for n in 0..=max_n {
            let rep = b
                .verify(n, Execution::Parallel)
                .map_err(|x| x.to_string())?;
            if !rep.involution {
                return Err(format!("pair {id} at n={n}: {:?}", rep.counterexample));
            }
        }
    }
    Ok(())
}

/// Every family fixes permutations with no occurrence of either pattern.
pub fn occurrence_free_identity(max_n: usize) -> Check {
    let all = bijections();
    for n in 0..=max_n {
        for pi in permutations(n) {
            for (id, b) in &all {
                if b.pair().counts(pi.as_slice()) == (0, 0) && b.apply(&pi) != pi {
                    return Err(format!("pair {id} moves {pi}"));
                }
            }
        }
    }
    Ok(())
}

/// Proved entries pass the bijection harness (involution included for the
/// involution families).
pub fn harness(max_n: usize, fast_max_n: usize) -> Check {
    for (id, b) in bijections() {
        let top = if b.family().is_fast() {
            fast_max_n
        } else {
            max_n
        };
        for n in 0..=top {
            let rep = b
                .verify(n, Execution::Parallel)
                .map_err(|x| x.to_string())?;
            if !rep.passed() || (b.family().is_involution() && !rep.involution) {
                return Err(format!("pair {id} at n={n}: {rep:?}"));
            }
        }
    }
    Ok(())
}
