//! Structured verdicts produced by the criterion checkers.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::assoc::AssSet;
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::ring::{Monomial, RingContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    /// Both sides of the stated equivalence were evaluated and agree.
    EquivalenceEstablished,
    /// The criterion certifies that the queried prime is not associated.
    PNotAssociated,
    /// A one-way implication or identity was checked and holds.
    Verified,
    /// Some hypothesis failed; the criterion says nothing.
    NotApplicable,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::EquivalenceEstablished => "equivalence-established",
            Conclusion::PNotAssociated => "p-not-associated",
            Conclusion::Verified => "verified",
            Conclusion::NotApplicable => "not-applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub verified: bool,
    pub detail: String,
}

/// Evidence attached to a report. `value` is in the text grammar of its
/// `kind`, so it can be re-parsed to reproduce the check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub kind: &'static str,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub criterion: String,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Conclusion,
    pub witnesses: Vec<Witness>,
    pub oracle_agreement: Option<bool>,
}

impl CriterionReport {
    pub fn new(criterion: impl Into<String>) -> Self {
        CriterionReport {
            criterion: criterion.into(),
            hypotheses: Vec::new(),
            conclusion: Conclusion::NotApplicable,
            witnesses: Vec::new(),
            oracle_agreement: None,
        }
    }

    pub fn hypothesis(
        &mut self,
        name: impl Into<String>,
        verified: bool,
        detail: impl Into<String>,
    ) -> bool {
        self.hypotheses.push(Hypothesis {
            name: name.into(),
            verified,
            detail: detail.into(),
        });
        verified
    }

    pub fn all_hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.verified)
    }

    pub fn failed_hypotheses(&self) -> impl Iterator<Item = &Hypothesis> {
        self.hypotheses.iter().filter(|h| !h.verified)
    }

    /// Sets the conclusion, downgrading to not-applicable when a hypothesis failed.
    pub fn conclude(&mut self, conclusion: Conclusion) {
        self.conclusion = if self.all_hypotheses_hold() {
            conclusion
        } else {
            Conclusion::NotApplicable
        };
    }

    pub fn monomial(&mut self, label: &str, ctx: &RingContext, m: &Monomial) {
        self.push(label, "monomial", m.to_text(ctx));
    }

    pub fn ideal(&mut self, label: &str, ideal: &MonomialIdeal) {
        self.push(label, "ideal", ideal.to_string());
    }

    pub fn prime(&mut self, label: &str, p: &MonomialPrime) {
        self.push(label, "prime", p.to_string());
    }

    pub fn ass(&mut self, label: &str, ass: &AssSet) {
        self.push(label, "ass-set", ass.to_string());
    }

    pub fn flag(&mut self, label: &str, value: bool) {
        self.push(label, "flag", value.to_string());
    }

    pub fn push(&mut self, label: &str, kind: &'static str, value: String) {
        self.witnesses.push(Witness {
            label: label.to_string(),
            kind,
            value,
        });
    }

    pub fn witness(&self, label: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.label == label)
    }

    pub fn flag_value(&self, label: &str) -> Option<bool> {
        self.witness(label)
            .filter(|w| w.kind == "flag")
            .map(|w| w.value == "true")
    }

    /// A run passes when it reached a conclusion the oracles did not contradict.
    pub fn passes(&self) -> bool {
        self.oracle_agreement != Some(false)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn transcript(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "criterion: {}", self.criterion);
        for h in &self.hypotheses {
            let mark = if h.verified { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  [{mark}] {}: {}", h.name, h.detail);
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "  {} ({}) = {}", w.label, w.kind, w.value);
        }
        let _ = writeln!(out, "conclusion: {}", self.conclusion);
        if let Some(agree) = self.oracle_agreement {
            let _ = writeln!(out, "oracle agreement: {agree}");
        }
        out
    }
}
