use crate::error::Error;
use crate::mesh::Shading;
use crate::perm::Permutation;

use super::{ltr, sh, PatternPair};

const DIRECT_SHADINGS: [&str; 11] = [
    "00,01,02,03,10,11,12,13,20,21,22,23,30,31,32,33",
    "00,01,02,03,10,11,12,13,20,21,22,23,30,31,32",
    "01,02,03,10,11,12,13,20,21,22,23,30,31,32,33",
    "00,01,02,03,10,11,12,13,20,21,23,30,31,32,33",
    "00,01,02,03,10,12,13,20,21,22,23,30,31,32,33",
    "00,01,02,10,11,12,13,20,21,22,23,31,32,33",
    "00,01,02,10,11,12,13,20,21,22,23,31,32",
    "01,02,10,11,12,13,20,21,22,23,31,32,33",
    "02,03,12,13,20,21,22,23,30,31,32,33",
    "00,02,03,12,13,20,21,22,23,30,31,32,33",
    "02,03,11,12,13,20,21,22,23,30,31,32,33",
];

const OTH1_SHADING: &str = "00,01,10,11,12,13,21,22,23,31,32";

/// Shading handled by `DIRECT(id)`.
pub fn direct_shading(id: u8) -> Option<Shading> {
    DIRECT_SHADINGS
        .get((id as usize).checked_sub(1)?)
        .map(|s| sh(3, s))
}

pub fn oth1_shading() -> Shading {
    sh(3, OTH1_SHADING)
}

/// The piecewise map for directly controlled pair `id`.
pub fn direct_transform(p: &Permutation, id: u8) -> Result<Permutation, Error> {
    let r = direct_shading(id).ok_or_else(|| Error::UnknownFamily(format!("DIRECT({id})")))?;
    let n = p.len();
    let v = p.as_slice();
    if n < 3 {
        return Ok(p.clone());
    }
    let top = n as u8;
    let last_two_top =
        (v[n - 2] == top && v[n - 1] == top - 1) || (v[n - 2] == top - 1 && v[n - 1] == top);
    let out = match id {
        1 if n == 3 && v[0] == 1 => p.swapped(1, 2),
        2 if v[0] == 1 && v[1] <= 3 && v[2] <= 3 => p.swapped(1, 2),
        3 if v[n - 3] == top - 2 && last_two_top => p.swapped(n - 2, n - 1),
        4 if v[0] == 1 && ((v[1] == 2 && v[n - 1] == top) || (v[1] == top && v[n - 1] == 2)) => {
            p.swapped(1, n - 1)
        }
        5 if v[0] == 1 && last_two_top => p.swapped(n - 2, n - 1),
        6..=8 => ltr::swap_second_third(p, &PatternPair::same_shading(r)?),
        9..=11 if last_two_top => p.swapped(n - 2, n - 1),
        _ => p.clone(),
    };
    Ok(out)
}

/// At each left-to-right minimum, scanned left to right on the evolving
/// permutation, swap the top two entries of the occurrence starting there.
pub fn oth1_transform(p: &Permutation) -> Permutation {
    let pair = PatternPair::same_shading(oth1_shading()).expect("length-3 pair");
    let mut cur = p.clone();
    for m in p.ltr_minima() {
        let occ = pair
            .occurrences(cur.as_slice())
            .into_iter()
            .find(|o| o[0] == m);
        if let Some(o) = occ {
            cur = cur.swapped(o[1], o[2]);
        }
    }
    cur
}

/// Complements the values `2..=n` when the permutation starts with 1.
pub fn complement_after_one(p: &Permutation) -> Permutation {
    let v = p.as_slice();
    if v.first() != Some(&1) {
        return p.clone();
    }
    let rest: Vec<u8> = (2..=v.len() as u8).collect();
    p.complement_on_set(&rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn shadings_are_symmetric() {
        for id in 1..=11 {
            assert!(direct_shading(id).unwrap().is_symmetric(), "{id}");
        }
        assert!(oth1_shading().is_symmetric());
        assert!(direct_shading(0).is_none());
        assert!(direct_shading(12).is_none());
    }

    #[test]
    fn small_cases() {
        assert_eq!(direct_transform(&perm("123"), 1).unwrap(), perm("132"));
        assert_eq!(direct_transform(&perm("1324"), 1).unwrap(), perm("1324"));
        assert_eq!(direct_transform(&perm("13245"), 2).unwrap(), perm("12345"));
        assert_eq!(direct_transform(&perm("21345"), 3).unwrap(), perm("21354"));
        assert_eq!(direct_transform(&perm("12345"), 4).unwrap(), perm("15342"));
        assert_eq!(direct_transform(&perm("13254"), 5).unwrap(), perm("13245"));
        assert_eq!(direct_transform(&perm("2134"), 9).unwrap(), perm("2143"));
    }

    #[test]
    fn complement_after_one_example() {
        assert_eq!(complement_after_one(&perm("12435")), perm("15342"));
        assert_eq!(complement_after_one(&perm("21435")), perm("21435"));
    }
}
