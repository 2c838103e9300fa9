//! Structured pass/fail records for law checks.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::morphism::{EqualityConfig, Morphism, Witness};
use crate::seq::{PreDSeq, SeqComparison};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub axiom: String,
    pub n: usize,
    pub k: usize,
    pub pass: bool,
    pub compared_depth: usize,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LawReport {
    pub suite: String,
    pub entries: Vec<Entry>,
}

#[derive(Serialize, Deserialize)]
struct ReportDoc {
    suite: String,
    pass: bool,
    entries: Vec<Entry>,
}

impl Serialize for LawReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ReportDoc {
            suite: self.suite.clone(),
            pass: self.passed(),
            entries: self.entries.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LawReport {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = ReportDoc::deserialize(d)?;
        Ok(LawReport {
            suite: doc.suite,
            entries: doc.entries,
        })
    }
}

impl LawReport {
    pub fn new(suite: impl Into<String>) -> Self {
        LawReport {
            suite: suite.into(),
            entries: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    /// Axiom names with at least one failing instance, sorted and deduplicated.
    pub fn failed_axioms(&self) -> Vec<String> {
        let mut v: Vec<String> = self.failures().map(|e| e.axiom.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn count(&self, axiom: &str) -> usize {
        self.entries.iter().filter(|e| e.axiom == axiom).count()
    }

    pub fn push(
        &mut self,
        axiom: &str,
        n: usize,
        k: usize,
        compared_depth: usize,
        witness: Option<Witness>,
    ) {
        self.entries.push(Entry {
            axiom: axiom.to_string(),
            n,
            k,
            pass: witness.is_none(),
            compared_depth,
            witness,
        });
    }

    pub fn push_comparison(&mut self, axiom: &str, n: usize, k: usize, cmp: SeqComparison) {
        self.push(axiom, n, k, cmp.depth, cmp.failure.map(|(_, w)| w));
    }

    /// Records whether two morphisms agree.
    pub fn check_mor<M: Morphism>(
        &mut self,
        axiom: &str,
        n: usize,
        k: usize,
        lhs: &M,
        rhs: &M,
        cfg: &EqualityConfig,
    ) -> Result<bool> {
        let w = lhs.compare(rhs, cfg)?;
        let pass = w.is_none();
        self.push(axiom, n, k, 0, w);
        Ok(pass)
    }

    /// Records whether two sequences agree up to their common order.
    pub fn check_seq<M: Morphism>(
        &mut self,
        axiom: &str,
        n: usize,
        k: usize,
        lhs: &PreDSeq<M>,
        rhs: &PreDSeq<M>,
        cfg: &EqualityConfig,
    ) -> Result<bool> {
        let cmp = lhs.compare_upto(rhs, cfg)?;
        let pass = cmp.passed();
        self.push_comparison(axiom, n, k, cmp);
        Ok(pass)
    }

    /// Deterministic order: by axiom, then `n`, then `k`.
    pub fn sort(&mut self) {
        self.entries
            .sort_by(|a, b| (&a.axiom, a.n, a.k).cmp(&(&b.axiom, b.n, b.k)));
    }

    pub fn extend(&mut self, other: LawReport) {
        self.entries.extend(other.entries);
    }

    /// One line per axiom: `axiom passed/total`.
    pub fn summary_lines(&self) -> Vec<String> {
        let mut names: Vec<&str> = Vec::new();
        for e in &self.entries {
            if !names.contains(&e.axiom.as_str()) {
                names.push(&e.axiom);
            }
        }
        names
            .into_iter()
            .map(|name| {
                let total = self.count(name);
                let ok = self
                    .entries
                    .iter()
                    .filter(|e| e.axiom == name && e.pass)
                    .count();
                format!(
                    "{} {name} {ok}/{total}",
                    if ok == total { "ok  " } else { "FAIL" }
                )
            })
            .collect()
    }
}

/// The `{"suites": [...]}` envelope emitted by the `check` command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteBundle {
    pub pass: bool,
    pub suites: Vec<LawReport>,
}

impl SuiteBundle {
    pub fn new(suites: Vec<LawReport>) -> Self {
        SuiteBundle {
            pass: suites.iter().all(LawReport::passed),
            suites,
        }
    }
}
