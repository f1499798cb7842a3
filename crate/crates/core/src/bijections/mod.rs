//! Occurrence-swapping bijections between `(123, R)` and `(132, R)`, and the
//! harness that checks them exhaustively.

mod direct;
mod family;
mod len2;
mod ltr;
mod nine_box;
mod verify;

pub use direct::{
    complement_after_one, direct_shading, direct_transform, oth1_shading, oth1_transform,
};
pub use family::FamilyTag;
pub use len2::{len2_reduction, len2_swap_transform, per_interval_len2};
pub use ltr::{
    a1_complement, a1_complement_unchecked, a1_interval_complement, ltr_interval_complement,
    ltr_intervals, pair_swap_transform,
};
pub use nine_box::{
    nine_box_steps_unchecked, nine_box_transform, nine_box_unchecked, per_interval_nine_box,
};
pub use verify::{verify_with, VerificationReport};

use crate::error::Error;
use crate::mesh::{MeshPattern, Shading};
use crate::perm::Permutation;

/// The two patterns whose occurrences a bijection exchanges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternPair {
    pub first: MeshPattern,
    pub second: MeshPattern,
}

impl PatternPair {
    pub fn new(first: MeshPattern, second: MeshPattern) -> Self {
        Self { first, second }
    }

    /// `(123, R)` and `(132, R)` for a 3-grid shading, `(12, R)` and `(21, R)` for a 2-grid one.
    pub fn same_shading(shading: Shading) -> Result<Self, Error> {
        let (a, b) = match shading.k() {
            3 => ("123", "132"),
            2 => ("12", "21"),
            k => {
                return Err(Error::InvalidPattern(format!(
                    "no standard pair for length {k}"
                )))
            }
        };
        Ok(Self {
            first: MeshPattern::new(a.parse()?, shading)?,
            second: MeshPattern::new(b.parse()?, shading)?,
        })
    }

    pub fn counts(&self, host: &[u8]) -> (usize, usize) {
        (
            self.first.count_occurrences(host),
            self.second.count_occurrences(host),
        )
    }

    /// Occurrences of either pattern, as position tuples in lexicographic order.
    pub fn occurrences(&self, host: &[u8]) -> Vec<Vec<usize>> {
        let mut all = self.first.occurrences(host);
        all.extend(self.second.occurrences(host));
        all.sort();
        all
    }

    /// The shading both patterns share, if they share one and are 123/132 or 12/21.
    fn standard_shading(&self) -> Option<Shading> {
        let s = self.first.shading();
        (Self::same_shading(s).ok()? == *self).then_some(s)
    }
}

/// Boxes forcing the first element of an occurrence to be the entry 1 in position 1.
const FIRST_CROSS: &str = "00,01,02,03,10,20,30";

fn sh(k: usize, s: &str) -> Shading {
    Shading::parse(k, s).expect("well-formed shading constant")
}

/// Boxes `(i, j)` with `i, j >= 1`, shifted down to a `(k-1)`-grid.
pub(crate) fn inner_shading(r: &Shading) -> Shading {
    let k = r.k();
    Shading::from_boxes(
        k - 1,
        r.boxes()
            .into_iter()
            .filter(|&(i, j)| i > 0 && j > 0)
            .map(|(i, j)| (i - 1, j - 1)),
    )
    .expect("inner boxes fit")
}

/// Inner part is unchanged by the horizontal flip `j -> k+1-j`.
fn inner_flip_symmetric(r: &Shading) -> bool {
    let k = r.k();
    (1..=k).all(|i| (1..=k).all(|j| r.contains(i, j) == r.contains(i, k + 1 - j)))
}

/// A transform bound to the pattern pair it has been checked against.
#[derive(Debug, Clone)]
pub struct Bijection {
    family: FamilyTag,
    pair: PatternPair,
}

impl Bijection {
    /// Binds `family` to `pair`, rejecting shadings the family does not handle.
    pub fn new(family: FamilyTag, pair: PatternPair) -> Result<Self, Error> {
        let reject = || Error::UnsupportedShading {
            family: family.to_string(),
            shading: format!("{:?} / {:?}", pair.first, pair.second),
        };
        let r = pair.standard_shading().ok_or_else(reject)?;
        let ok = match family {
            FamilyTag::Len2Swap { tail_box } => {
                r.k() == 2 && len2::conjugation_to_base(&r, tail_box, true).is_some()
            }
            _ if r.k() != 3 => false,
            FamilyTag::Direct(id) => direct_shading(id) == Some(r),
            FamilyTag::Oth1 => r == oth1_shading(),
            FamilyTag::ComplementAfterOne => {
                sh(3, FIRST_CROSS).is_subset(&r) && inner_flip_symmetric(&r)
            }
            FamilyTag::Len2Reduction { tail_box } => {
                sh(3, FIRST_CROSS).is_subset(&r)
                    && len2::conjugation_to_base(&inner_shading(&r), tail_box, true).is_some()
            }
            FamilyTag::LtrComplementX => {
                sh(3, "00,02,20").is_subset(&r)
                    && !r.contains(0, 3)
                    && !r.contains(3, 0)
                    && r.contains(0, 1) == r.contains(1, 0)
                    && inner_flip_symmetric(&r)
            }
            FamilyTag::PerIntervalLen2 { tail_box } => {
                let outer: Vec<_> = r
                    .boxes()
                    .into_iter()
                    .filter(|&(i, j)| i == 0 || j == 0)
                    .collect();
                outer == sh(3, "00,01,02,10,20").boxes()
                    && len2::conjugation_to_base(&inner_shading(&r), tail_box, false).is_some()
            }
            FamilyTag::A1Complement => {
                sh(3, "00,02,03,12,20,21,30").is_subset(&r) && inner_flip_symmetric(&r)
            }
            FamilyTag::PairSwap => ltr::PAIR_SWAP_SHADINGS.iter().any(|s| sh(3, s) == r),
            FamilyTag::NineBox => nine_box::supported(&r),
            FamilyTag::PerIntervalNineBox => nine_box::PER_INTERVAL_SHADINGS
                .iter()
                .any(|s| sh(3, s) == r),
        };
        if ok {
            Ok(Self { family, pair })
        } else {
            Err(reject())
        }
    }

    pub fn family(&self) -> FamilyTag {
        self.family
    }

    pub fn pair(&self) -> &PatternPair {
        &self.pair
    }

    /// Image of `p`. Permutations with no occurrence of either pattern are
    /// fixed: a joint-swap bijection maps that class onto itself, so fixing
    /// it pointwise keeps the map bijective (and an involution if it was one).
    pub fn apply(&self, p: &Permutation) -> Permutation {
        if self.pair.counts(p.as_slice()) == (0, 0) {
            return p.clone();
        }
        let r = self.pair.first.shading();
        match self.family {
            FamilyTag::Direct(id) => direct_transform(p, id).expect("id checked at construction"),
            FamilyTag::Oth1 => oth1_transform(p),
            FamilyTag::ComplementAfterOne => complement_after_one(p),
            FamilyTag::Len2Reduction { .. } => len2::reduction_unchecked(p, &r),
            FamilyTag::LtrComplementX => ltr_interval_complement(p),
            FamilyTag::PerIntervalLen2 { .. } => len2::per_interval_unchecked(p, &r),
            FamilyTag::A1Complement => a1_interval_complement(p, &self.pair),
            FamilyTag::PairSwap => ltr::pair_swap_unchecked(p, &self.pair),
            FamilyTag::NineBox => nine_box_unchecked(p, &self.pair),
            FamilyTag::PerIntervalNineBox => nine_box::per_interval_unchecked(p, &self.pair),
            FamilyTag::Len2Swap { .. } => len2::swap_unchecked(p, &r),
        }
    }
}
