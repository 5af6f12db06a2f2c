//! One check on one instance, serialized as a JSON line.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
    Undecided,
}

/// Hypotheses are kept apart from the conclusion so that an instance whose
/// hypotheses fail reads as `skipped`, never as `pass`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub lemma: String,
    pub instance_id: String,
    pub hypotheses: BTreeMap<String, bool>,
    pub conclusion: bool,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl VerificationRecord {
    pub fn new(lemma: &str) -> Self {
        VerificationRecord {
            lemma: lemma.to_string(),
            instance_id: String::new(),
            hypotheses: BTreeMap::new(),
            conclusion: false,
            outcome: Outcome::Skipped,
            witness: None,
        }
    }

    pub fn for_instance(mut self, id: impl Into<String>) -> Self {
        self.instance_id = id.into();
        self
    }

    pub fn hypothesis(mut self, name: &str, holds: bool) -> Self {
        self.hypotheses.insert(name.to_string(), holds);
        self
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.values().all(|&h| h)
    }

    /// Sets the conclusion and derives the outcome from it and the hypotheses.
    pub fn conclude(mut self, holds: bool) -> Self {
        self.conclusion = holds;
        self.outcome = match (self.hypotheses_hold(), holds) {
            (false, _) => Outcome::Skipped,
            (true, true) => Outcome::Pass,
            (true, false) => Outcome::Fail,
        };
        self
    }

    pub fn undecided(mut self) -> Self {
        self.conclusion = false;
        self.outcome = Outcome::Undecided;
        self
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn is_failure(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn from_json_line(line: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(line)
    }
}

/// Tally of outcomes across a batch of records.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub undecided: usize,
}

impl Summary {
    pub fn add(&mut self, r: &VerificationRecord) {
        match r.outcome {
            Outcome::Pass => self.pass += 1,
            Outcome::Fail => self.fail += 1,
            Outcome::Skipped => self.skipped += 1,
            Outcome::Undecided => self.undecided += 1,
        }
    }

    pub fn of<'a>(records: impl IntoIterator<Item = &'a VerificationRecord>) -> Self {
        let mut s = Summary::default();
        for r in records {
            s.add(r);
        }
        s
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped + self.undecided
    }

    pub fn clean(&self) -> bool {
        self.fail == 0 && self.undecided == 0
    }

    pub fn merge(&mut self, other: Summary) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.skipped += other.skipped;
        self.undecided += other.undecided;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn outcome_follows_hypotheses() {
        let r = VerificationRecord::new("x").hypothesis("h", false).conclude(true);
        assert_eq!(r.outcome, Outcome::Skipped);
        let r = VerificationRecord::new("x").hypothesis("h", true).conclude(false);
        assert_eq!(r.outcome, Outcome::Fail);
        let r = VerificationRecord::new("x").conclude(true);
        assert_eq!(r.outcome, Outcome::Pass);
    }

    #[test]
    fn json_line_shape_and_round_trip() {
        let r = VerificationRecord::new("parity")
            .for_instance("K4")
            .hypothesis("full", true)
            .hypothesis("k_is_delta", true)
            .conclude(true);
        let line = r.to_json_line();
        assert_eq!(
            line,
            r#"{"lemma":"parity","instance_id":"K4","hypotheses":{"full":true,"k_is_delta":true},"conclusion":true,"outcome":"pass"}"#
        );
        assert_eq!(VerificationRecord::from_json_line(&line).unwrap(), r);
        let w = r.clone().with_witness(json!({"edge": [0, 1]}));
        assert_eq!(VerificationRecord::from_json_line(&w.to_json_line()).unwrap(), w);
    }

    #[test]
    fn summary_counts() {
        let rs = [
            VerificationRecord::new("a").conclude(true),
            VerificationRecord::new("a").conclude(false),
            VerificationRecord::new("a").undecided(),
        ];
        let s = Summary::of(&rs);
        assert_eq!((s.pass, s.fail, s.undecided, s.total()), (1, 1, 1, 3));
        assert!(!s.clean());
    }
}
