//! Permutations in one-line notation and the elementary operations on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Largest length representable; values are stored as `u8`.
pub const MAX_LEN: usize = u8::MAX as usize;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=n`.
    pub fn new(values: Vec<u8>) -> Result<Self, Error> {
        let n = values.len();
        if n > MAX_LEN {
            return Err(Error::InvalidPermutation(format!(
                "length {n} exceeds {MAX_LEN}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{values:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self(values))
    }

    pub fn from_slice(values: &[u8]) -> Result<Self, Error> {
        Self::new(values.to_vec())
    }

    /// Wraps values already known to form a permutation.
    pub(crate) fn from_vec_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self(values)
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.0
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    pub fn reverse(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        Self(v)
    }

    pub fn complement(&self) -> Self {
        let n = self.len() as u8;
        Self(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Self(inv)
    }

    /// 0-based positions of the left-to-right minima, in order.
    pub fn ltr_minima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut best = u8::MAX;
        for (i, &v) in self.0.iter().enumerate() {
            if v < best {
                best = v;
                out.push(i);
            }
        }
        out
    }

    /// 0-based positions of the right-to-left maxima, in order.
    pub fn rtl_maxima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut best = 0u8;
        for (i, &v) in self.0.iter().enumerate().rev() {
            if v > best {
                best = v;
                out.push(i);
            }
        }
        out.reverse();
        out
    }

    /// Reverses the value order among the entries whose values lie in `values`:
    /// the j-th smallest such value is replaced by the j-th largest.
    pub fn complement_on_set(&self, values: &[u8]) -> Self {
        let mut members: Vec<u8> = values.to_vec();
        members.sort_unstable();
        members.dedup();
        let mut out = self.0.clone();
        for v in out.iter_mut() {
            if let Ok(j) = members.binary_search(v) {
                *v = members[members.len() - 1 - j];
            }
        }
        Self(out)
    }

    /// Swaps the entries at 0-based positions `i` and `j`.
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i, j);
        Self(v)
    }

    /// Lexicographic rank in `S_n`, starting from 0.
    pub fn rank(&self) -> u64 {
        lex_rank(&self.0)
    }
}

/// Order-isomorphic reduction of a sequence of distinct values to a permutation.
pub fn standardize<T: Ord + Copy>(seq: &[T]) -> Permutation {
    let mut idx: Vec<usize> = (0..seq.len()).collect();
    idx.sort_by_key(|&i| seq[i]);
    let mut out = vec![0u8; seq.len()];
    for (r, &i) in idx.iter().enumerate() {
        out[i] = (r + 1) as u8;
    }
    Permutation(out)
}

/// Advances `a` to the next permutation in lexicographic order.
/// Returns `false` (leaving `a` untouched) when `a` is the last one.
pub fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Lexicographic rank of a permutation of `1..=n` given as a slice.
pub fn lex_rank(a: &[u8]) -> u64 {
    let n = a.len();
    let mut rank = 0u64;
    let mut used = 0u128;
    for (i, &v) in a.iter().enumerate() {
        let below = (used & ((1u128 << v) - 1)).count_ones() as u64;
        let smaller_unused = v as u64 - 1 - below;
        rank = rank * (n - i) as u64 + smaller_unused;
        used |= 1u128 << v;
    }
    rank
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut cur: Option<Vec<u8>> = Some((1..=n as u8).collect());
    std::iter::from_fn(move || {
        let out = cur.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            cur = Some(next);
        }
        Some(Permutation(out))
    })
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Accepts `9,11,4,12` or, for n <= 9, the compact digit form `31524`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = |what: &str| Error::InvalidPermutation(format!("{what} in {s:?}"));
        if s.is_empty() {
            return Ok(Self(Vec::new()));
        }
        let values: Vec<u8> = if s.contains(',') || s.contains(' ') {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.trim().parse::<u8>().map_err(|_| bad("bad entry")))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| bad("bad digit"))
                })
                .collect::<Result<_, _>>()?
        };
        Self::new(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<u8>::deserialize(d)?;
        Self::new(v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_both_forms() {
        assert_eq!(p("31524").as_slice(), &[3, 1, 5, 2, 4]);
        assert_eq!(p("9,11,4,12,8,10,5,7,1,3,13,6,2").len(), 13);
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("0".parse::<Permutation>().is_err());
        assert!("1,3".parse::<Permutation>().is_err());
    }

    #[test]
    fn symmetries() {
        let x = p("31524");
        assert_eq!(x.reverse(), p("42513"));
        assert_eq!(x.complement(), p("35142"));
        assert_eq!(x.inverse(), p("24153"));
        assert_eq!(x.inverse().inverse(), x);
    }

    #[test]
    fn minima_and_standardize() {
        assert_eq!(p("4,6,2,5,1,3").ltr_minima(), vec![0, 2, 4]);
        assert_eq!(p("426153").rtl_maxima(), vec![2, 4, 5]);
        assert_eq!(standardize(&[40, 10, 70, 20]), p("3142"));
    }

    #[test]
    fn complement_on_values() {
        assert_eq!(p("1,5,2,4,3").complement_on_set(&[2, 4, 5]), p("1,2,5,4,3"));
    }

    #[test]
    fn lex_enumeration_and_rank() {
        let all: Vec<_> = permutations(4).collect();
        assert_eq!(all.len(), 24);
        for (i, q) in all.iter().enumerate() {
            assert_eq!(q.rank(), i as u64);
        }
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(permutations(0).count(), 1);
    }
}
