//! Registered claims checked over every small graph.
//!
//! Each claim scans the graphs without isolated vertices up to a bound (or
//! a finite list of constructions) and collects counterexamples. Scans run
//! on a rayon pool but results are merged in enumeration order, so reports
//! do not depend on the worker count.

mod claims;

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

pub use claims::{claim, claims, Claim};

use crate::error::VerifyError;
use crate::graph::Graph;
use crate::graph6::write_graph6;

/// At most this many counterexamples are stored per report.
pub const COUNTEREXAMPLE_CAP: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub anchor: String,
    pub space: String,
    pub n_max: usize,
    pub verified: usize,
    pub counterexample_count: usize,
    /// graph6 strings, first [`COUNTEREXAMPLE_CAP`] only.
    pub counterexamples: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn success(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn status(&self) -> &'static str {
        if self.success() {
            "ok"
        } else {
            "FAILED"
        }
    }

    pub fn to_text(&self, timing: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} [{}] {}", self.claim, self.status(), self.anchor);
        let _ = writeln!(out, "  space: {}", self.space);
        let _ = writeln!(out, "  verified: {}", self.verified);
        let _ = writeln!(out, "  counterexamples: {}", self.counterexample_count);
        for c in &self.counterexamples {
            let _ = writeln!(out, "    {c}");
        }
        for note in &self.notes {
            let _ = writeln!(out, "  note: {note}");
        }
        if timing {
            let _ = writeln!(out, "  elapsed: {:.3}s", self.elapsed.as_secs_f64());
        }
        out
    }

    /// One JSON object on one line.
    pub fn to_record(&self, timing: bool) -> String {
        let mut value = serde_json::to_value(self).expect("plain data serializes");
        value["status"] = self.status().into();
        if timing {
            value["elapsed_ms"] = (self.elapsed.as_millis() as u64).into();
        }
        value.to_string()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub n_max: usize,
    /// `None` uses rayon's global pool.
    pub workers: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 8,
            workers: None,
        }
    }
}

/// Runs one claim, or every claim for the id `all`.
pub fn verify(id: &str, opts: VerifyOptions) -> Result<Vec<VerificationReport>, VerifyError> {
    let selected: Vec<&Claim> = if id == "all" {
        claims().iter().collect()
    } else {
        vec![claim(id)?]
    };
    let run = || {
        selected
            .iter()
            .map(|c| c.run(opts.n_max))
            .collect::<Result<Vec<_>, _>>()
    };
    match opts.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| VerifyError::Pool(e.to_string()))?
            .install(run),
        None => run(),
    }
}

/// What a claim body returns before timing and formatting.
#[derive(Default)]
pub(crate) struct Tally {
    pub checked: usize,
    pub bad: Vec<Graph>,
    pub notes: Vec<String>,
}

impl Tally {
    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.bad.extend(other.bad);
        self.notes.extend(other.notes);
    }

    fn into_report(
        self,
        c: &Claim,
        n_max: usize,
        space: String,
        start: Instant,
    ) -> VerificationReport {
        let counterexamples = self
            .bad
            .iter()
            .take(COUNTEREXAMPLE_CAP)
            .map(|g| write_graph6(g).expect("small graph"))
            .collect();
        VerificationReport {
            claim: c.id.to_string(),
            anchor: c.anchor.to_string(),
            space,
            n_max,
            verified: self.checked,
            counterexample_count: self.bad.len(),
            counterexamples,
            notes: self.notes,
            elapsed: start.elapsed(),
        }
    }
}

pub(crate) enum Verdict {
    Skip,
    Pass,
    Fail,
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// Applies `f` to every graph in parallel; counts passes and failures in order.
pub(crate) fn scan<F>(graphs: &[Graph], f: F) -> Tally
where
    F: Fn(&Graph) -> Verdict + Sync,
{
    let verdicts: Vec<Verdict> = graphs.par_iter().map(&f).collect();
    let mut t = Tally::default();
    for (g, v) in graphs.iter().zip(verdicts) {
        match v {
            Verdict::Skip => {}
            Verdict::Pass => t.checked += 1,
            Verdict::Fail => {
                t.checked += 1;
                t.bad.push(*g);
            }
        }
    }
    t
}

impl Claim {
    pub fn run(&self, n_max: usize) -> Result<VerificationReport, VerifyError> {
        let start = Instant::now();
        let n = n_max.min(self.cap);
        let (tally, space) = (self.body)(n)?;
        Ok(tally.into_report(self, n, space, start))
    }
}
