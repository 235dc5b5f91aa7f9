//! Claim outcomes, witnesses and aggregated reports.

use std::fmt::Write as _;

use crate::error::Error;
use crate::io;
use crate::poset::FinitePoset;

/// Witnesses kept per report; counts stay exact.
pub const WITNESS_CAP: usize = 10;

/// A failing instance: the poset plus labeled auxiliary data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub poset: FinitePoset,
    pub notes: Vec<(String, String)>,
}

impl Witness {
    pub fn new(poset: &FinitePoset) -> Self {
        Witness {
            poset: poset.clone(),
            notes: Vec::new(),
        }
    }

    pub fn note(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.notes.push((key.into(), value.into()));
        self
    }

    /// Poset text followed by `# key = value` lines.
    pub fn render(&self) -> String {
        let mut s = io::write_poset(&self.poset);
        for (k, v) in &self.notes {
            let _ = writeln!(s, "# {k} = {v}");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails(Witness),
    Inapplicable(String),
}

impl Outcome {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self, Outcome::Fails(_))
    }

    pub fn is_inapplicable(&self) -> bool {
        matches!(self, Outcome::Inapplicable(_))
    }

    pub fn keyword(&self) -> &'static str {
        match self {
            Outcome::Holds => "HOLDS",
            Outcome::Fails(_) => "FAILS",
            Outcome::Inapplicable(_) => "INAPPLICABLE",
        }
    }

    /// `Holds` when `ok`, otherwise a failure built lazily.
    pub fn check(ok: bool, witness: impl FnOnce() -> Witness) -> Outcome {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Fails(witness())
        }
    }

    /// Cap overruns and unmet hypotheses become `Inapplicable`; other
    /// errors are passed through.
    pub fn from_result(r: Result<Outcome, Error>) -> Result<Outcome, Error> {
        match r {
            Ok(o) => Ok(o),
            Err(e @ Error::SizeCapExceeded { .. }) => {
                Ok(Outcome::Inapplicable(format!("size cap: {e}")))
            }
            Err(Error::Inapplicable(msg)) => Ok(Outcome::Inapplicable(msg)),
            Err(e) => Err(e),
        }
    }
}

/// Aggregated result for one claim over one population.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: String,
    pub system: String,
    pub size: usize,
    pub mode: String,
    pub holds: usize,
    pub fails: usize,
    pub inapplicable: usize,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl ClaimReport {
    pub fn new(claim: &str, system: &str, size: usize, mode: &str) -> Self {
        ClaimReport {
            claim: claim.to_string(),
            system: system.to_string(),
            size,
            mode: mode.to_string(),
            holds: 0,
            fails: 0,
            inapplicable: 0,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// A report over a single instance.
    pub fn single(claim: &str, system: &str, p: &FinitePoset, outcome: Outcome) -> Self {
        let mut r = ClaimReport::new(claim, system, p.len(), "single");
        r.record(outcome);
        r
    }

    pub fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Holds => self.holds += 1,
            Outcome::Fails(w) => {
                self.fails += 1;
                if self.witnesses.len() < WITNESS_CAP {
                    self.witnesses.push(w);
                }
            }
            Outcome::Inapplicable(_) => self.inapplicable += 1,
        }
    }

    pub fn add_note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    pub fn total(&self) -> usize {
        self.holds + self.fails + self.inapplicable
    }

    pub fn all_hold(&self) -> bool {
        self.fails == 0
    }

    /// Collapses a single-instance report back into an outcome.
    pub fn outcome(&self) -> Outcome {
        if let Some(w) = self.witnesses.first() {
            Outcome::Fails(w.clone())
        } else if self.holds > 0 || self.inapplicable == 0 {
            Outcome::Holds
        } else {
            Outcome::Inapplicable(self.notes.first().cloned().unwrap_or_default())
        }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "CLAIM {} {} n={} holds={} fails={} inapplicable={}",
            self.claim, self.system, self.size, self.holds, self.fails, self.inapplicable
        )
    }

    /// Summary line, notes, then one block per witness.
    pub fn render(&self) -> String {
        let mut s = self.summary_line();
        s.push('\n');
        for n in &self.notes {
            let _ = writeln!(s, "# note: {n}");
        }
        for w in &self.witnesses {
            s.push_str(&w.render());
        }
        s
    }
}

pub fn render_all(reports: &[ClaimReport]) -> String {
    reports.iter().map(ClaimReport::render).collect()
}
