//! Registry of catalogued pattern pairs, one JSON object per line.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bijections::{Bijection, FamilyTag, PatternPair};
use crate::error::Error;
use crate::mesh::{MeshPattern, Shading, MAX_K};
use crate::perm::Permutation;

const BUILTIN: &str = include_str!("../data/catalog.jsonl");

/// Tables whose entries must carry symmetric shadings.
const SYMMETRIC_TABLES: [&str; 6] = ["1", "2", "3", "5", "6", "7"];

/// Expected sizes of the symmetric tables and of the non-symmetric one.
const TABLE_SIZES: [(&str, usize); 7] = [
    ("1", 12),
    ("2", 6),
    ("3", 4),
    ("5", 23),
    ("6", 30),
    ("7", 18),
    ("8", 36),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Proved,
    Conjectured,
    Refuted,
    NonsymmetricProved,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: u32,
    pub table: String,
    pub tau_pair: [String; 2],
    pub boxes: Vec<(usize, usize)>,
    /// Shading of the second pattern when it differs from the first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boxes2: Option<Vec<(usize, usize)>>,
    pub status: Status,
    pub family: Option<FamilyTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_divergence: Option<usize>,
    #[serde(default)]
    pub notes: String,
}

impl CatalogEntry {
    fn k(&self) -> usize {
        self.tau_pair[0].len()
    }

    pub fn shading(&self) -> Result<Shading, Error> {
        Shading::from_boxes(self.k(), self.boxes.iter().copied())
    }

    pub fn pair(&self) -> Result<PatternPair, Error> {
        let first = self.shading()?;
        let second = match &self.boxes2 {
            Some(b) => Shading::from_boxes(self.tau_pair[1].len(), b.iter().copied())?,
            None => first,
        };
        Ok(PatternPair::new(
            MeshPattern::new(self.tau_pair[0].parse()?, first)?,
            MeshPattern::new(self.tau_pair[1].parse()?, second)?,
        ))
    }

    pub fn is_proved(&self) -> bool {
        matches!(self.status, Status::Proved | Status::NonsymmetricProved)
    }

    /// The entry's bijection; only proved entries with a family have one.
    pub fn bijection(&self) -> Result<Bijection, Error> {
        match self.family {
            Some(f) if self.is_proved() => Bijection::new(f, self.pair()?),
            _ => Err(Error::NoFamily { id: self.id }),
        }
    }
}

/// Applies the bijection catalogued for `entry`.
pub fn apply_family(p: &Permutation, entry: &CatalogEntry) -> Result<Permutation, Error> {
    Ok(entry.bijection()?.apply(p))
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, id: u32) -> Result<&CatalogEntry, Error> {
        self.entries
            .iter()
            .find(|e| e.id == id)
            .ok_or(Error::UnknownPair(id))
    }

    pub fn proved(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(|e| e.is_proved())
    }

    /// Lowest-id proved entry with a bijection for this symmetric shading.
    pub fn find_proved(&self, shading: &Shading) -> Option<&CatalogEntry> {
        self.proved()
            .filter(|e| e.family.is_some() && e.boxes2.is_none())
            .filter(|e| e.shading().ok().as_ref() == Some(shading))
            .min_by_key(|e| e.id)
    }
}

pub fn parse_catalog(text: &str) -> Result<Catalog, Error> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let entry: CatalogEntry = serde_json::from_str(line).map_err(|e| Error::CatalogParse {
            line: i + 1,
            msg: e.to_string(),
        })?;
        entries.push(entry);
    }
    Ok(Catalog { entries })
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Catalog, Error> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_catalog(&text)
}

/// The catalog shipped with the crate.
pub fn builtin() -> Catalog {
    parse_catalog(BUILTIN).expect("bundled catalog parses")
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ValidationReport {
    pub table_counts: BTreeMap<String, usize>,
    /// Proved entries among the symmetric tables.
    pub proved: usize,
    pub conjectured: usize,
    /// Distinct shadings among the proved symmetric entries.
    pub distinct_proved_shadings: usize,
    pub violations: Vec<String>,
    /// Groups of ids in the symmetric tables that carry the same shading.
    pub duplicate_shadings: Vec<Vec<u32>>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_catalog(cat: &Catalog) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let mut ids = HashSet::new();
    let mut by_shading: HashMap<(String, u32), Vec<u32>> = HashMap::new();
    let mut proved_shadings = HashSet::new();
    for e in cat.entries() {
        let tag = format!("entry {}", e.id);
        if !ids.insert(e.id) {
            rep.violations.push(format!("{tag}: duplicate id"));
        }
        *rep.table_counts.entry(e.table.clone()).or_default() += 1;
        let k = e.k();
        let all_boxes = e.boxes.iter().chain(e.boxes2.iter().flatten());
        if k == 0 || k > MAX_K || all_boxes.clone().any(|&(i, j)| i > k || j > k) {
            rep.violations.push(format!("{tag}: box outside the grid"));
            continue;
        }
        let pair = match e.pair() {
            Ok(p) => p,
            Err(err) => {
                rep.violations.push(format!("{tag}: {err}"));
                continue;
            }
        };
        let shading = pair.first.shading();
        let symmetric_table = SYMMETRIC_TABLES.contains(&e.table.as_str());
        if symmetric_table {
            if !shading.is_symmetric() {
                rep.violations.push(format!(
                    "{tag}: table {} needs a symmetric shading",
                    e.table
                ));
            }
            by_shading
                .entry((e.tau_pair.join("/"), shading.bits()))
                .or_default()
                .push(e.id);
            match e.status {
                Status::Proved => {
                    rep.proved += 1;
                    proved_shadings.insert(shading.bits());
                }
                Status::Conjectured => rep.conjectured += 1,
                _ => rep
                    .violations
                    .push(format!("{tag}: unexpected status in table {}", e.table)),
            }
        }
        match (e.status, e.family) {
            (Status::Proved, None) => rep
                .violations
                .push(format!("{tag}: proved without a family")),
            (Status::Conjectured | Status::Refuted, Some(_)) => rep
                .violations
                .push(format!("{tag}: unproved entry with a family")),
            _ => {}
        }
        if e.is_proved() && e.family.is_some() {
            if let Err(err) = e.bijection() {
                rep.violations.push(format!("{tag}: {err}"));
            }
        }
        if e.status == Status::Refuted && e.first_divergence.is_none() {
            rep.violations
                .push(format!("{tag}: refuted without a recorded divergence"));
        }
    }
    for (table, want) in TABLE_SIZES {
        let got = rep.table_counts.get(table).copied().unwrap_or(0);
        if got != want {
            rep.violations
                .push(format!("table {table}: {got} entries, expected {want}"));
        }
    }
    rep.distinct_proved_shadings = proved_shadings.len();
    rep.duplicate_shadings = by_shading
        .into_values()
        .filter(|ids| ids.len() > 1)
        .collect();
    rep.duplicate_shadings.sort();
    rep
}
