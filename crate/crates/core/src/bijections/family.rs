use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Proof technique behind a catalogued equidistribution, one per bijection family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    /// Piecewise maps for the small table of directly controlled pairs (ids 1 to 11).
    Direct(u8),
    /// Swap at each left-to-right minimum, largest first.
    Oth1,
    /// Complement `2..=n` whenever the permutation starts with 1.
    ComplementAfterOne,
    /// Strip a leading 1 and run the length-2 sweep on the rest.
    Len2Reduction { tail_box: bool },
    /// Complement every value interval between consecutive left-to-right minima.
    LtrComplementX,
    /// Length-2 sweep inside every interval `A_i`.
    PerIntervalLen2 { tail_box: bool },
    /// Complement the values of all second and third occurrence elements.
    A1Complement,
    /// Swap the adjacent second and third elements of every occurrence.
    PairSwap,
    /// Block-wise largest-element swap procedure.
    NineBox,
    /// Nine-box procedure run independently inside every interval `A_i`.
    PerIntervalNineBox,
    /// Length-2 sweep on a pair `(12, R)`, `(21, R)`.
    Len2Swap { tail_box: bool },
}

impl FamilyTag {
    /// Families whose map is its own inverse.
    pub fn is_involution(&self) -> bool {
        matches!(
            self,
            FamilyTag::Direct(_)
                | FamilyTag::Oth1
                | FamilyTag::ComplementAfterOne
                | FamilyTag::LtrComplementX
                | FamilyTag::A1Complement
                | FamilyTag::PairSwap
        )
    }

    /// Families cheap enough for exhaustive checks one length further.
    pub fn is_fast(&self) -> bool {
        matches!(
            self,
            FamilyTag::Direct(_) | FamilyTag::ComplementAfterOne | FamilyTag::LtrComplementX
        )
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Direct(id) => write!(f, "DIRECT({id})"),
            FamilyTag::Oth1 => f.write_str("OTH1"),
            FamilyTag::ComplementAfterOne => f.write_str("COMPLEMENT_AFTER_ONE"),
            FamilyTag::Len2Reduction { tail_box } => {
                write!(f, "LEN2_REDUCTION(tail_box={tail_box})")
            }
            FamilyTag::LtrComplementX => f.write_str("LTR_COMPLEMENT_X"),
            FamilyTag::PerIntervalLen2 { tail_box } => {
                write!(f, "PER_INTERVAL_LEN2(tail_box={tail_box})")
            }
            FamilyTag::A1Complement => f.write_str("A1_COMPLEMENT"),
            FamilyTag::PairSwap => f.write_str("PAIR_SWAP"),
            FamilyTag::NineBox => f.write_str("NINE_BOX"),
            FamilyTag::PerIntervalNineBox => f.write_str("PER_INTERVAL_NINE_BOX"),
            FamilyTag::Len2Swap { tail_box } => write!(f, "LEN2_SWAP(tail_box={tail_box})"),
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::UnknownFamily(s.to_string());
        let (name, arg) = match s.split_once('(') {
            Some((name, rest)) => (name, Some(rest.strip_suffix(')').ok_or_else(bad)?.trim())),
            None => (s, None),
        };
        let tail = |arg: Option<&str>| -> Result<bool, Error> {
            match arg.map(|a| a.strip_prefix("tail_box=").unwrap_or(a)) {
                Some("true") => Ok(true),
                Some("false") => Ok(false),
                _ => Err(bad()),
            }
        };
        let tag = match (name, arg) {
            ("DIRECT", Some(a)) => {
                let id: u8 = a.parse().map_err(|_| bad())?;
                if !(1..=11).contains(&id) {
                    return Err(bad());
                }
                FamilyTag::Direct(id)
            }
            ("OTH1", None) => FamilyTag::Oth1,
            ("COMPLEMENT_AFTER_ONE", None) => FamilyTag::ComplementAfterOne,
            ("LEN2_REDUCTION", a) => FamilyTag::Len2Reduction { tail_box: tail(a)? },
            ("LTR_COMPLEMENT_X", None) => FamilyTag::LtrComplementX,
            ("PER_INTERVAL_LEN2", a) => FamilyTag::PerIntervalLen2 { tail_box: tail(a)? },
            ("A1_COMPLEMENT", None) => FamilyTag::A1Complement,
            ("PAIR_SWAP", None) => FamilyTag::PairSwap,
            ("NINE_BOX", None) => FamilyTag::NineBox,
            ("PER_INTERVAL_NINE_BOX", None) => FamilyTag::PerIntervalNineBox,
            ("LEN2_SWAP", a) => FamilyTag::Len2Swap { tail_box: tail(a)? },
            _ => return Err(bad()),
        };
        Ok(tag)
    }
}

impl serde::Serialize for FamilyTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for FamilyTag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let tags = [
            FamilyTag::Direct(4),
            FamilyTag::Oth1,
            FamilyTag::ComplementAfterOne,
            FamilyTag::Len2Reduction { tail_box: true },
            FamilyTag::LtrComplementX,
            FamilyTag::PerIntervalLen2 { tail_box: false },
            FamilyTag::A1Complement,
            FamilyTag::PairSwap,
            FamilyTag::NineBox,
            FamilyTag::PerIntervalNineBox,
            FamilyTag::Len2Swap { tail_box: false },
        ];
        for t in tags {
            assert_eq!(t.to_string().parse::<FamilyTag>().unwrap(), t);
        }
        assert!("DIRECT(12)".parse::<FamilyTag>().is_err());
        assert!("NINE_BOX(1)".parse::<FamilyTag>().is_err());
        assert!("LEN2_REDUCTION".parse::<FamilyTag>().is_err());
    }
}
