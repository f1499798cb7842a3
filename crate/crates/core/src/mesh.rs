//! Mesh patterns, their shadings and occurrence detection.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::perm::Permutation;

/// Longest classical pattern supported. Shadings of a length-`k` pattern use
/// `(k+1)^2` bits, so 4 keeps them inside a `u32`.
pub const MAX_K: usize = 4;

/// Bit index of box `(i, j)` for a length-`k` pattern.
#[inline]
pub fn box_bit(k: usize, i: usize, j: usize) -> u32 {
    (i * (k + 1) + j) as u32
}

/// A set of shaded boxes `(i, j)`, `0 <= i, j <= k`.
///
/// `i` indexes the vertical strip (positions) and `j` the horizontal strip
/// (values). Box `(i, j)` is stored at bit `i*(k+1)+j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shading {
    k: u8,
    bits: u32,
}

impl Shading {
    pub fn empty(k: usize) -> Self {
        assert!(k <= MAX_K, "pattern length {k} above {MAX_K}");
        Self {
            k: k as u8,
            bits: 0,
        }
    }

    pub fn from_bits(k: usize, bits: u32) -> Result<Self, Error> {
        if k > MAX_K {
            return Err(Error::InvalidPattern(format!(
                "pattern length {k} above {MAX_K}"
            )));
        }
        let width = (k + 1) * (k + 1);
        if width < 32 && bits >> width != 0 {
            return Err(Error::InvalidPattern(format!(
                "bits {bits:#x} outside a {k}-grid"
            )));
        }
        Ok(Self { k: k as u8, bits })
    }

    pub fn from_boxes<I>(k: usize, boxes: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut s = Self::from_bits(k, 0)?;
        for (i, j) in boxes {
            if i > k || j > k {
                return Err(Error::InvalidPattern(format!(
                    "box ({i},{j}) outside a {k}-grid"
                )));
            }
            s.bits |= 1 << box_bit(k, i, j);
        }
        Ok(s)
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits >> box_bit(self.k(), i, j) & 1 == 1
    }

    pub fn with(mut self, i: usize, j: usize) -> Self {
        self.bits |= 1 << box_bit(self.k(), i, j);
        self
    }

    pub fn union(&self, other: &Shading) -> Self {
        assert_eq!(self.k, other.k);
        Self {
            k: self.k,
            bits: self.bits | other.bits,
        }
    }

    pub fn is_subset(&self, other: &Shading) -> bool {
        self.k == other.k && self.bits & !other.bits == 0
    }

    /// Boxes in increasing `(i, j)` order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let k = self.k();
        let mut out = Vec::with_capacity(self.len());
        for i in 0..=k {
            for j in 0..=k {
                if self.contains(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn map(&self, f: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        let k = self.k();
        let mut out = Self::empty(k);
        for (i, j) in self.boxes() {
            let (a, b) = f(i, j);
            out.bits |= 1 << box_bit(k, a, b);
        }
        out
    }

    pub fn reverse(&self) -> Self {
        let k = self.k();
        self.map(|i, j| (k - i, j))
    }

    pub fn complement(&self) -> Self {
        let k = self.k();
        self.map(|i, j| (i, k - j))
    }

    /// Reflection in the main diagonal, matching permutation inverse.
    pub fn transpose(&self) -> Self {
        self.map(|i, j| (j, i))
    }

    pub fn apply(&self, s: Symmetry) -> Self {
        match s {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::Inverse => self.transpose(),
        }
    }

    /// Invariant under the diagonal reflection.
    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Paper-style listing, e.g. `{00,02,20}`.
    pub fn compact(&self) -> String {
        let inner: Vec<String> = self
            .boxes()
            .iter()
            .map(|(i, j)| format!("{i}{j}"))
            .collect();
        format!("{{{}}}", inner.join(","))
    }

    /// Parses `0/0,0/2`, `00,02` or `{00,02}`; an empty string is the empty shading.
    pub fn parse(k: usize, s: &str) -> Result<Self, Error> {
        let s = s
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .trim();
        let bad = || Error::InvalidPattern(format!("cannot parse shading {s:?}"));
        let mut boxes = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = if let Some((a, b)) = tok.split_once('/') {
                (
                    a.trim().parse().map_err(|_| bad())?,
                    b.trim().parse().map_err(|_| bad())?,
                )
            } else {
                let d: Vec<usize> = tok
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(bad)?;
                if d.len() != 2 {
                    return Err(bad());
                }
                (d[0], d[1])
            };
            boxes.push((a, b));
        }
        Self::from_boxes(k, boxes)
    }
}

impl fmt::Display for Shading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .boxes()
            .iter()
            .map(|(i, j)| format!("{i}/{j}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Shading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Shading{}", self.compact())
    }
}

/// Orbits of the boxes of a `k`-grid under the diagonal reflection:
/// diagonal boxes first, then off-diagonal pairs `(i, j)`, `i < j`, in order.
pub fn diagonal_orbits(k: usize) -> Vec<Shading> {
    let mut out: Vec<Shading> = (0..=k).map(|i| Shading::empty(k).with(i, i)).collect();
    for i in 0..=k {
        for j in i + 1..=k {
            out.push(Shading::empty(k).with(i, j).with(j, i));
        }
    }
    out
}

/// Every symmetric shading of a `k`-grid. The shading at index `s` is the
/// union of the orbits selected by the bits of `s`.
pub fn symmetric_shadings(k: usize) -> Vec<Shading> {
    let orbits = diagonal_orbits(k);
    (0u32..1 << orbits.len())
        .map(|s| {
            let bits = orbits
                .iter()
                .enumerate()
                .filter(|(o, _)| s >> o & 1 == 1)
                .fold(0, |acc, (_, sh)| acc | sh.bits());
            Shading { k: k as u8, bits }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    Inverse,
}

/// A classical pattern together with a shading.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PatternRepr", into = "PatternRepr")]
pub struct MeshPattern {
    tau: Permutation,
    shading: Shading,
}

#[derive(Serialize, Deserialize)]
struct PatternRepr {
    tau: Vec<u8>,
    boxes: Vec<(usize, usize)>,
}

impl TryFrom<PatternRepr> for MeshPattern {
    type Error = Error;
    fn try_from(r: PatternRepr) -> Result<Self, Error> {
        let k = r.tau.len();
        let tau = Permutation::new(r.tau)?;
        MeshPattern::new(tau, Shading::from_boxes(k, r.boxes)?)
    }
}

impl From<MeshPattern> for PatternRepr {
    fn from(p: MeshPattern) -> Self {
        PatternRepr {
            tau: p.tau.into_vec(),
            boxes: p.shading.boxes(),
        }
    }
}

impl MeshPattern {
    pub fn new(tau: Permutation, shading: Shading) -> Result<Self, Error> {
        if tau.len() > MAX_K {
            return Err(Error::InvalidPattern(format!(
                "pattern length {} above {MAX_K}",
                tau.len()
            )));
        }
        if tau.len() != shading.k() {
            return Err(Error::InvalidPattern(format!(
                "shading grid {} does not match pattern length {}",
                shading.k(),
                tau.len()
            )));
        }
        Ok(Self { tau, shading })
    }

    /// Shorthand used by tests and tables: `tau` in digit form, boxes as pairs.
    pub fn of(tau: &str, boxes: &[(usize, usize)]) -> Result<Self, Error> {
        let tau: Permutation = tau.parse()?;
        let k = tau.len();
        Self::new(tau, Shading::from_boxes(k, boxes.iter().copied())?)
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    pub fn shading(&self) -> Shading {
        self.shading
    }

    pub fn k(&self) -> usize {
        self.tau.len()
    }

    pub fn transform(&self, s: Symmetry) -> Self {
        let tau = match s {
            Symmetry::Reverse => self.tau.reverse(),
            Symmetry::Complement => self.tau.complement(),
            Symmetry::Inverse => self.tau.inverse(),
        };
        Self {
            tau,
            shading: self.shading.apply(s),
        }
    }

    /// Whether the entries of `host` at the increasing 0-based `positions`
    /// form an occurrence.
    pub fn is_occurrence(&self, host: &[u8], positions: &[usize]) -> bool {
        positions.len() == self.k()
            && positions.windows(2).all(|w| w[0] < w[1])
            && positions.last().is_none_or(|&p| p < host.len())
            && self.order_matches(host, positions)
            && occurrence_box_mask(host, positions) & self.shading.bits == 0
    }

    fn order_matches(&self, host: &[u8], positions: &[usize]) -> bool {
        let tau = self.tau.as_slice();
        (0..positions.len())
            .all(|a| (0..a).all(|b| (host[positions[b]] < host[positions[a]]) == (tau[b] < tau[a])))
    }

    /// All occurrences, as 0-based position tuples in lexicographic order.
    pub fn occurrences(&self, host: &[u8]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.search(host, &mut Vec::with_capacity(self.k()), 0, &mut |pos| {
            out.push(pos.to_vec())
        });
        out
    }

    pub fn count_occurrences(&self, host: &[u8]) -> usize {
        let mut c = 0;
        self.search(host, &mut Vec::with_capacity(self.k()), 0, &mut |_| c += 1);
        c
    }

    pub fn avoids(&self, host: &[u8]) -> bool {
        let mut found = false;
        self.search(host, &mut Vec::with_capacity(self.k()), 0, &mut |_| {
            found = true
        });
        !found
    }

    fn search(
        &self,
        host: &[u8],
        chosen: &mut Vec<usize>,
        from: usize,
        emit: &mut dyn FnMut(&[usize]),
    ) {
        let k = self.k();
        let t = chosen.len();
        if t == k {
            if occurrence_box_mask(host, chosen) & self.shading.bits == 0 {
                emit(chosen);
            }
            return;
        }
        let tau = self.tau.as_slice();
        let Some(last) = (host.len() + t + 1).checked_sub(k) else {
            return;
        };
        for p in from..last {
            let v = host[p];
            if chosen
                .iter()
                .enumerate()
                .all(|(b, &q)| (host[q] < v) == (tau[b] < tau[t]))
            {
                chosen.push(p);
                self.search(host, chosen, p + 1, emit);
                chosen.pop();
            }
        }
    }
}

/// Boxes of the `k`-grid that contain at least one point of `host`, where the
/// grid is spanned by the entries at the increasing `positions` (`k` of them).
pub fn occurrence_box_mask(host: &[u8], positions: &[usize]) -> u32 {
    let k = positions.len();
    let mut vals: [u8; MAX_K] = [0; MAX_K];
    for (t, &p) in positions.iter().enumerate() {
        vals[t] = host[p];
    }
    let vals = &mut vals[..k];
    vals.sort_unstable();
    let mut mask = 0u32;
    let mut col = 0;
    for (p, &v) in host.iter().enumerate() {
        if col < k && positions[col] == p {
            col += 1;
            continue;
        }
        let row = vals.iter().filter(|&&w| w < v).count();
        mask |= 1 << box_bit(k, col, row);
    }
    mask
}

impl fmt::Display for MeshPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.tau.as_slice() {
            write!(f, "{v}")?;
        }
        write!(f, "|{}", self.shading)
    }
}

impl fmt::Debug for MeshPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.tau, self.shading.compact())
    }
}

/// Accepts the literal `123|0/0,0/1` or the JSON object form.
impl FromStr for MeshPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::InvalidPattern(e.to_string()));
        }
        let (tau, boxes) = s.split_once('|').unwrap_or((s, ""));
        let tau: Permutation = tau
            .parse()
            .map_err(|e: Error| Error::InvalidPattern(e.to_string()))?;
        let k = tau.len();
        Self::new(tau, Shading::parse(k, boxes)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn host(s: &str) -> Vec<u8> {
        s.parse::<Permutation>().unwrap().into_vec()
    }

    #[test]
    fn classical_counts() {
        let p = MeshPattern::of("12", &[]).unwrap();
        assert_eq!(p.count_occurrences(&host("2413")), 3);
        let q = MeshPattern::of("132", &[]).unwrap();
        assert_eq!(q.count_occurrences(&host("1432")), 3);
        assert!(q.avoids(&host("2341")));
        assert!(!q.avoids(&host("1432")));
        assert!(q.avoids(&[]));
    }

    #[test]
    fn box_semantics() {
        // In 213 the entry 2 lies left of the occurrence 1,3 and between its values.
        let h = host("213");
        assert_eq!(occurrence_box_mask(&h, &[1, 2]), 1 << box_bit(2, 0, 1));
        let p = MeshPattern::of("12", &[(0, 1)]).unwrap();
        assert!(!p.is_occurrence(&h, &[1, 2]));
        assert!(p.is_occurrence(&h, &[0, 2]));
    }

    #[test]
    fn literal_roundtrip() {
        let p: MeshPattern = "123|0/0,0/1,2/3".parse().unwrap();
        assert_eq!(p.to_string(), "123|0/0,0/1,2/3");
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"tau":[1,2,3],"boxes":[[0,0],[0,1],[2,3]]}"#);
        assert_eq!(j.parse::<MeshPattern>().unwrap(), p);
        assert!("123|4/0".parse::<MeshPattern>().is_err());
        assert!("12|0/0,".parse::<MeshPattern>().is_ok());
    }

    #[test]
    fn symmetric_count() {
        let all = symmetric_shadings(3);
        assert_eq!(all.len(), 1024);
        assert!(all.iter().all(Shading::is_symmetric));
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 1024);
    }

    #[test]
    fn shading_maps() {
        let s = Shading::parse(3, "{01,23}").unwrap();
        assert_eq!(s.reverse().compact(), "{13,31}");
        assert_eq!(s.complement().compact(), "{02,20}");
        assert_eq!(s.transpose().compact(), "{10,32}");
    }
}
