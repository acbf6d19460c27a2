//! JSON file formats.
//!
//! ```text
//! structure  {"universe": ["a","b","c"], "covering": [["a","b"],["b","c"]]}
//!            {"universe": ["a","b"], "relation": [["a","b"],["b","b"]]}
//! family     {"universe": ["a","b","c"], "family": [[],["b"],["a","b"]]}
//! fixture    {"command": "...", "seed": 0, "count": 2, "families": [[[]],[[],["b"]]]}
//! ```
//!
//! A family's members are resolved against the universe of the structure it
//! is checked on; its own `universe` field, when present, must name the same
//! labels (in any order).

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::neighborhood::{neighborhoods_of_covering, successor_neighborhoods, NeighborhoodMap};
use crate::structure::{BinaryRelation, Covering};
use crate::universe::Universe;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Covering(Covering),
    Relation(BinaryRelation),
}

impl Structure {
    pub fn universe(&self) -> &Arc<Universe> {
        match self {
            Structure::Covering(c) => c.universe(),
            Structure::Relation(r) => r.universe(),
        }
    }

    pub fn neighborhoods(&self) -> NeighborhoodMap {
        match self {
            Structure::Covering(c) => neighborhoods_of_covering(c),
            Structure::Relation(r) => successor_neighborhoods(r),
        }
    }

    pub fn as_covering(&self) -> Result<&Covering> {
        match self {
            Structure::Covering(c) => Ok(c),
            Structure::Relation(_) => Err(Error::Precondition("a covering is required here, got a relation".into())),
        }
    }

    pub fn as_relation(&self) -> Result<&BinaryRelation> {
        match self {
            Structure::Relation(r) => Ok(r),
            Structure::Covering(_) => Err(Error::Precondition("a relation is required here, got a covering".into())),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StructureJson {
    universe: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    covering: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    relation: Option<Vec<(String, String)>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    universe: Option<Vec<String>>,
    family: Vec<Vec<String>>,
}

pub fn parse_structure(text: &str) -> Result<Structure> {
    let raw: StructureJson = serde_json::from_str(text)?;
    let universe = Arc::new(Universe::new(raw.universe)?);
    match (raw.covering, raw.relation) {
        (Some(blocks), None) => Ok(Structure::Covering(Covering::from_labels(universe, blocks)?)),
        (None, Some(pairs)) => Ok(Structure::Relation(BinaryRelation::from_labels(universe, pairs)?)),
        (Some(_), Some(_)) => Err(Error::Parse(
            "structure must have exactly one of `covering` and `relation`, found both".into(),
        )),
        (None, None) => Err(Error::Parse(
            "structure must have exactly one of `covering` and `relation`".into(),
        )),
    }
}

/// Parses a family file against `universe`.
pub fn parse_family(text: &str, universe: &Arc<Universe>) -> Result<SetFamily> {
    let raw: FamilyJson = serde_json::from_str(text)?;
    if let Some(labels) = raw.universe {
        let declared: BTreeSet<&str> = labels.iter().map(String::as_str).collect();
        let expected: BTreeSet<&str> = universe.labels().iter().map(String::as_str).collect();
        if declared.len() != labels.len() {
            return Err(Error::Parse("family universe lists a label twice".into()));
        }
        if declared != expected {
            let extra: Vec<&str> = declared.difference(&expected).copied().collect();
            let missing: Vec<&str> = expected.difference(&declared).copied().collect();
            return Err(Error::UniverseMismatch(format!(
                "family universe differs from the structure's (extra: {extra:?}, missing: {missing:?})"
            )));
        }
    }
    SetFamily::from_labels(universe.clone(), raw.family)
}

/// Parses a family file over its own declared universe.
pub fn parse_standalone_family(text: &str) -> Result<SetFamily> {
    let raw: FamilyJson = serde_json::from_str(text)?;
    let labels = raw
        .universe
        .ok_or_else(|| Error::Parse("family file needs a `universe` here".into()))?;
    SetFamily::from_labels(Arc::new(Universe::new(labels)?), raw.family)
}

pub fn read_structure(path: &Path) -> Result<Structure> {
    parse_structure(&fs::read_to_string(path)?)
}

pub fn read_family(path: &Path, universe: &Arc<Universe>) -> Result<SetFamily> {
    parse_family(&fs::read_to_string(path)?, universe)
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("plain data serializes");
    out.push('\n');
    out
}

pub fn structure_to_json(s: &Structure) -> String {
    let u = s.universe();
    let raw = match s {
        Structure::Covering(c) => StructureJson {
            universe: u.labels().to_vec(),
            covering: Some(c.blocks().iter().map(|&b| u.member_labels(b)).collect()),
            relation: None,
        },
        Structure::Relation(r) => StructureJson {
            universe: u.labels().to_vec(),
            covering: None,
            relation: Some(
                r.pairs()
                    .into_iter()
                    .map(|(x, y)| (u.label(x).to_string(), u.label(y).to_string()))
                    .collect(),
            ),
        },
    };
    pretty(&raw)
}

/// Family file text; re-ingests to an equal family.
pub fn family_to_json(fam: &SetFamily) -> String {
    pretty(&FamilyJson {
        universe: Some(fam.universe().labels().to_vec()),
        family: fam.to_labels(),
    })
}

/// A frozen enumeration result together with the command that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub command: String,
    pub seed: u64,
    pub count: usize,
    pub families: Vec<Vec<Vec<String>>>,
}

impl Fixture {
    pub fn new(command: impl Into<String>, seed: u64, families: &[SetFamily]) -> Self {
        Fixture {
            command: command.into(),
            seed,
            count: families.len(),
            families: families.iter().map(SetFamily::to_labels).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        pretty(self)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let fixture: Fixture = serde_json::from_str(text)?;
        if fixture.count != fixture.families.len() {
            return Err(Error::Parse(format!(
                "fixture count {} disagrees with {} listed families",
                fixture.count,
                fixture.families.len()
            )));
        }
        Ok(fixture)
    }

    /// The listed families resolved against `universe`.
    pub fn families_in(&self, universe: &Arc<Universe>) -> Result<Vec<SetFamily>> {
        self.families
            .iter()
            .map(|f| SetFamily::from_labels(universe.clone(), f))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn covering_round_trip() {
        let c = fixtures::six_block_covering();
        let s = Structure::Covering(c.clone());
        let back = parse_structure(&structure_to_json(&s)).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.as_covering().unwrap(), &c);
        assert!(back.as_relation().is_err());
    }

    #[test]
    fn relation_round_trip() {
        let s = Structure::Relation(fixtures::relation_r1());
        assert_eq!(parse_structure(&structure_to_json(&s)).unwrap(), s);
    }

    #[test]
    fn structure_errors() {
        let both = r#"{"universe":["a"],"covering":[["a"]],"relation":[["a","a"]]}"#;
        assert!(matches!(parse_structure(both), Err(Error::Parse(_))));
        let neither = r#"{"universe":["a"]}"#;
        assert!(matches!(parse_structure(neither), Err(Error::Parse(_))));
        let unknown = r#"{"universe":["a","b"],"covering":[["a","z"]]}"#;
        assert!(matches!(parse_structure(unknown), Err(Error::UnknownLabel(l)) if l == "z"));
        let uncovered = r#"{"universe":["a","b"],"covering":[["a"]]}"#;
        assert!(matches!(parse_structure(uncovered), Err(Error::InvalidCovering(_))));
        let extra = r#"{"universe":["a"],"covering":[["a"]],"blocks":[]}"#;
        assert!(matches!(parse_structure(extra), Err(Error::Json(_))));
        assert!(matches!(parse_structure("{"), Err(Error::Json(_))));
    }

    #[test]
    fn family_round_trip_and_universe_rules() {
        let c = fixtures::two_block_covering();
        let u = c.universe().clone();
        let fam = SetFamily::parse(u.clone(), "{} {b} {a,b}").unwrap();
        assert_eq!(parse_family(&family_to_json(&fam), &u).unwrap(), fam);
        assert_eq!(parse_standalone_family(&family_to_json(&fam)).unwrap(), fam);

        let reordered = r#"{"universe":["c","b","a"],"family":[["b"],[]]}"#;
        assert_eq!(parse_family(reordered, &u).unwrap().len(), 2);
        let bare = r#"{"family":[["a","b"]]}"#;
        assert_eq!(parse_family(bare, &u).unwrap().len(), 1);
        let mismatch = r#"{"universe":["a","b","d"],"family":[]}"#;
        assert!(matches!(parse_family(mismatch, &u), Err(Error::UniverseMismatch(_))));
        let dup = r#"{"family":[["a","a"]]}"#;
        assert!(matches!(parse_family(dup, &u), Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn fixture_round_trip() {
        let u = fixtures::two_block_covering().universe().clone();
        let fams = vec![
            SetFamily::parse(u.clone(), "{}").unwrap(),
            SetFamily::parse(u.clone(), "{} {b}").unwrap(),
        ];
        let fx = Fixture::new("covrough enumerate c.json", 4, &fams);
        let back = Fixture::parse(&fx.to_json()).unwrap();
        assert_eq!(back, fx);
        assert_eq!(back.families_in(&u).unwrap(), fams);
        let bad = r#"{"command":"x","seed":0,"count":3,"families":[]}"#;
        assert!(Fixture::parse(bad).is_err());
    }
}
