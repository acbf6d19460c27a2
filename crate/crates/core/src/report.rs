//! Verdicts with re-checkable witnesses.
//!
//! Every checker returns a [`CheckReport`]. A failed report names the first
//! violated axiom (in the checker's axiom order) and carries the witness that
//! instantiates its quantifiers; `axioms` lists the outcome of every axiom
//! that was evaluated. Witness sets keep their bitmask so they can be replayed
//! against the axiom predicate.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::universe::{Subset, Universe};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessEntry {
    pub role: String,
    pub set: Subset,
    pub labels: Vec<String>,
}

/// Named sets instantiating an axiom's quantifiers, e.g. `I1`, `I2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    entries: Vec<WitnessEntry>,
}

impl Witness {
    pub fn new() -> Self {
        Witness::default()
    }

    pub fn with(mut self, universe: &Universe, role: &str, set: Subset) -> Self {
        self.entries.push(WitnessEntry {
            role: role.to_string(),
            set,
            labels: universe.member_labels(set),
        });
        self
    }

    pub fn entries(&self) -> &[WitnessEntry] {
        &self.entries
    }

    pub fn get(&self, role: &str) -> Option<Subset> {
        self.entries.iter().find(|e| e.role == role).map(|e| e.set)
    }

    /// Witness sets in insertion order.
    pub fn sets(&self) -> Vec<Subset> {
        self.entries.iter().map(|e| e.set).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn describe(&self, universe: &Universe) -> String {
        self.entries
            .iter()
            .map(|e| format!("{}={}", e.role, universe.format_set(e.set)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for e in &self.entries {
            map.serialize_entry(&e.role, &e.labels)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomOutcome {
    pub axiom: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub pass: bool,
    pub failed_axiom: Option<String>,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub axioms: Vec<AxiomOutcome>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub facts: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            pass: true,
            failed_axiom: None,
            witness: None,
            axioms: Vec::new(),
            facts: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    /// Records an axiom outcome; the first failure becomes the headline.
    pub fn record(&mut self, axiom: impl Into<String>, witness: Option<Witness>) {
        let axiom = axiom.into();
        let holds = witness.is_none();
        if !holds && self.pass {
            self.pass = false;
            self.failed_axiom = Some(axiom.clone());
            self.witness = witness.clone();
        }
        self.axioms.push(AxiomOutcome {
            axiom,
            holds,
            witness,
        });
    }

    pub fn fact(&mut self, name: &str, value: impl Into<serde_json::Value>) {
        self.facts.insert(name.to_string(), value.into());
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn outcome(&self, axiom: &str) -> Option<&AxiomOutcome> {
        self.axioms.iter().find(|a| a.axiom == axiom)
    }

    /// True when `axiom` was evaluated and failed.
    pub fn failed(&self, axiom: &str) -> bool {
        self.outcome(axiom).is_some_and(|a| !a.holds)
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.axioms
            .iter()
            .filter(|a| !a.holds)
            .map(|a| a.axiom.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Human-readable rendering; not a stable format.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}: {}\n",
            self.check,
            if self.pass { "PASS" } else { "FAIL" }
        );
        for a in &self.axioms {
            out.push_str(&format!("  {:<24} {}", a.axiom, if a.holds { "ok" } else { "violated" }));
            if let Some(w) = &a.witness {
                let parts: Vec<String> = w
                    .entries()
                    .iter()
                    .map(|e| format!("{}={{{}}}", e.role, e.labels.join(",")))
                    .collect();
                out.push_str(&format!("  [{}]", parts.join(", ")));
            }
            out.push('\n');
        }
        for (k, v) in &self.facts {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_headline_and_json_keeps_role_order() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let mut r = CheckReport::new("demo");
        r.record("X1", None);
        let w = Witness::new()
            .with(&u, "I2", u.parse_set("{c}").unwrap())
            .with(&u, "I1", u.parse_set("{a,b}").unwrap());
        r.record("X2", Some(w.clone()));
        r.record("X3", Some(Witness::new()));
        assert!(!r.pass);
        assert_eq!(r.failed_axiom.as_deref(), Some("X2"));
        assert_eq!(r.failed_axioms(), ["X2", "X3"]);
        let json = serde_json::to_string(&r.witness).unwrap();
        assert_eq!(json, r#"{"I2":["c"],"I1":["a","b"]}"#);
        assert!(r.to_text().contains("X2"));
    }
}
