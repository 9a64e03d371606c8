//! Seeded property suites. Each suite draws `cases` independent instances,
//! one ChaCha stream per case index, evaluates them in parallel and tallies
//! every claim. Enforced claims decide pass/fail; logged claims record
//! observations such as a displayed identity that does not hold as printed.

mod algebra;
mod blocks;
pub mod gen;
mod graphs;

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmat::{rank, Matrix};
use crate::geninv::one_inverse;
use gen::CaseRng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Enforced,
    Logged,
}

#[derive(Clone, Debug)]
struct Observation {
    claim: &'static str,
    kind: Kind,
    ok: bool,
    detail: String,
}

/// Observations collected while evaluating one case.
#[derive(Default)]
pub struct Case {
    obs: Vec<Observation>,
}

impl Case {
    /// Records an enforced claim; `detail` is only evaluated on failure.
    pub fn check(&mut self, claim: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.push(claim, Kind::Enforced, ok, detail);
    }

    /// Records a logged claim that does not affect the verdict.
    pub fn log(&mut self, claim: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.push(claim, Kind::Logged, ok, detail);
    }

    fn push(&mut self, claim: &'static str, kind: Kind, ok: bool, detail: impl FnOnce() -> String) {
        let detail = if ok { String::new() } else { detail() };
        self.obs.push(Observation { claim, kind, ok, detail });
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimTally {
    pub claim: String,
    pub kind: Kind,
    pub passed: usize,
    pub failed: usize,
    /// Case index and detail of the first failing case.
    pub first_failure: Option<(usize, String)>,
}

impl ClaimTally {
    pub fn total(&self) -> usize {
        self.passed + self.failed
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub description: String,
    pub seed: u64,
    pub cases: usize,
    /// Sorted by claim name.
    pub claims: Vec<ClaimTally>,
    /// Cases in which a library call returned an error.
    pub errors: Vec<(usize, String)>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.errors.is_empty()
            && self
                .claims
                .iter()
                .all(|c| c.kind == Kind::Logged || c.failed == 0)
    }

    pub fn claim(&self, name: &str) -> Option<&ClaimTally> {
        self.claims.iter().find(|c| c.claim == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (seed {}, {} cases)", self.suite, self.seed, self.cases)?;
        writeln!(f, "  {}", self.description)?;
        for c in &self.claims {
            let tag = match (c.kind, c.failed) {
                (Kind::Logged, _) => "log ",
                (Kind::Enforced, 0) => "pass",
                (Kind::Enforced, _) => "FAIL",
            };
            writeln!(f, "  {tag}  {:<40} {}/{}", c.claim, c.passed, c.total())?;
            if let Some((case, detail)) = &c.first_failure {
                let label = if c.kind == Kind::Logged { "first counterexample" } else { "first failure" };
                writeln!(f, "        {label} (case {case}): {detail}")?;
            }
        }
        for (case, e) in &self.errors {
            writeln!(f, "  ERROR case {case}: {e}")?;
        }
        write!(f, "result: {}", if self.passed() { "pass" } else { "FAIL" })
    }
}

/// Independent Drazin oracle: `A^k X A^k` for any {1}-inverse `X` of
/// `A^{2k+1}`, with `k` read off the rank sequence.
pub(crate) fn oracle_drazin(a: &Matrix) -> Matrix {
    let mut k = 0;
    let mut prev = rank(&a.p(0));
    loop {
        let r = rank(&a.p(k + 1));
        if r == prev {
            break;
        }
        prev = r;
        k += 1;
    }
    let ak = a.p(k);
    &(&ak * &one_inverse(&a.p(2 * k + 1))) * &ak
}

/// Least `k` with `N^k = 0`, if `N` is nilpotent.
pub(crate) fn nilpotency_index(n: &Matrix) -> Option<usize> {
    (0..=n.rows()).find(|&k| n.p(k).is_zero())
}

type CaseFn = fn(&mut CaseRng, &mut Case) -> Result<()>;

pub struct Suite {
    pub name: &'static str,
    pub description: &'static str,
    run: CaseFn,
}

pub fn suites() -> Vec<Suite> {
    let mut all = Vec::new();
    all.extend(algebra::suites());
    all.extend(blocks::suites());
    all.extend(graphs::suites());
    all
}

pub fn suite_names() -> Vec<&'static str> {
    suites().iter().map(|s| s.name).collect()
}

fn case_rng(seed: u64, index: usize) -> CaseRng {
    let mut rng = CaseRng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub fn run_suite(name: &str, cases: usize, seed: u64) -> Result<SuiteReport> {
    let suite = suites()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    let results: Vec<(usize, Result<Vec<Observation>>)> = (0..cases)
        .into_par_iter()
        .map(|i| {
            let mut rng = case_rng(seed, i);
            let mut case = Case::default();
            let r = (suite.run)(&mut rng, &mut case).map(|()| case.obs);
            (i, r)
        })
        .collect();
    let mut tallies: BTreeMap<&'static str, ClaimTally> = BTreeMap::new();
    let mut errors = Vec::new();
    for (i, r) in results {
        match r {
            Err(e) => errors.push((i, e.to_string())),
            Ok(obs) => {
                for o in obs {
                    let t = tallies.entry(o.claim).or_insert_with(|| ClaimTally {
                        claim: o.claim.to_string(),
                        kind: o.kind,
                        passed: 0,
                        failed: 0,
                        first_failure: None,
                    });
                    if o.ok {
                        t.passed += 1;
                    } else {
                        t.failed += 1;
                        t.first_failure.get_or_insert((i, o.detail));
                    }
                }
            }
        }
    }
    Ok(SuiteReport {
        suite: suite.name.to_string(),
        description: suite.description.to_string(),
        seed,
        cases,
        claims: tallies.into_values().collect(),
        errors,
    })
}
