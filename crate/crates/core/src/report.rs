//! Structured results shared by the structural checks and the bound verifiers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::lattice::{ElementId, GradedLattice};

/// One offending object: a short reason plus the faces involved, each face
/// given as a list of labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub reason: String,
    pub faces: Vec<Vec<String>>,
}

impl Witness {
    pub fn new(reason: impl Into<String>) -> Self {
        Self {
            reason: reason.into(),
            faces: Vec::new(),
        }
    }

    pub fn with_face(mut self, face: Vec<String>) -> Self {
        self.faces.push(face);
        self
    }

    /// Lattice elements rendered by label, one single-label face each.
    pub fn with_elements(mut self, lattice: &GradedLattice, ids: &[ElementId]) -> Self {
        for &x in ids {
            self.faces.push(vec![lattice.display_label(x)]);
        }
        self
    }
}

/// Outcome of a check. `passed` holds exactly when there are no witnesses.
/// A skipped report (precondition not met) has no witnesses and counts as
/// passed, with the reason in its notes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    check: String,
    params: BTreeMap<String, Value>,
    passed: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    skipped: bool,
    witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            params: BTreeMap::new(),
            passed: true,
            skipped: false,
            witnesses: Vec::new(),
            notes: Vec::new(),
            seed: None,
        }
    }

    /// A report whose check did not run because its precondition failed.
    pub fn skipped(check: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = Self::new(check);
        r.skipped = true;
        r.notes.push(reason.into());
        r
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.set_param(key, value);
        self
    }

    pub fn set_param(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report parameters are plain data");
        self.params.insert(key.to_string(), v);
    }

    pub fn push_witness(&mut self, w: Witness) {
        self.witnesses.push(w);
        self.passed = false;
    }

    pub fn push_note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn check(&self) -> &str {
        &self.check
    }

    pub fn params(&self) -> &BTreeMap<String, Value> {
        &self.params
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn is_skipped(&self) -> bool {
        self.skipped
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// JSON with keys sorted at every level.
    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("report serializes")
    }

    /// Rebuilds a report from JSON, re-deriving `passed` from the witnesses.
    pub fn from_json(text: &str) -> crate::Result<Self> {
        let mut r: Self = serde_json::from_str(text)?;
        r.passed = r.witnesses.is_empty();
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passed_tracks_witnesses() {
        let mut r = CheckReport::new("diamond").param("d", 3);
        assert!(r.passed());
        r.push_witness(Witness::new("interval [0, 5] has 3 middle elements"));
        assert!(!r.passed());
        assert_eq!(r.witnesses().len(), 1);
    }

    #[test]
    fn json_keys_are_sorted_and_round_trip() {
        let r = CheckReport::new("grunbaum")
            .param("s", 2)
            .param("d", 4)
            .with_seed(7);
        let text = r.to_json_pretty();
        let check = text.find("\"check\"").unwrap();
        let params = text.find("\"params\"").unwrap();
        let seed = text.find("\"seed\"").unwrap();
        assert!(check < params && params < seed);
        assert!(text.find("\"d\"").unwrap() < text.find("\"s\"").unwrap());
        assert_eq!(CheckReport::from_json(&text).unwrap(), r);
    }

    #[test]
    fn skipped_reports_pass_without_witnesses() {
        let r = CheckReport::skipped("grunbaum", "s = 4 exceeds d = 3");
        assert!(r.passed() && r.is_skipped());
        assert!(r.to_json_pretty().contains("\"skipped\": true"));
    }
}
