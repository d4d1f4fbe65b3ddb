//! Identity grids and the suite runner.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use rug::Rational;
use serde::{Deserialize, Serialize};

use super::identities::{verify_identity, IdentityCase, IdentityInput, IdentityReport, RevisitedCase, ShiftStep};
use super::{degree_set, ExceptionalSpec};
use crate::error::Error;
use crate::partitions::{MayaDiagram, Partition};
use crate::polyalg::rat;
use crate::wronskian::{FamilySpec, FourTypeSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridSize {
    /// Partitions of size ≤ 3, Maya diagrams with ≤ 3 boxes, two parameter pairs.
    Default,
    /// Partitions of size ≤ 4, three parameter pairs.
    Full,
}

impl std::str::FromStr for GridSize {
    type Err = Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "default" => Ok(GridSize::Default),
            "full" => Ok(GridSize::Full),
            other => Err(Error::Parse(format!("unknown grid '{other}' (expected default or full)"))),
        }
    }
}

impl fmt::Display for IdentityInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityInput::Duality(s) | IdentityInput::Conjugation(s) | IdentityInput::Reflection(s) => {
                write!(f, "{s}")
            }
            IdentityInput::Shift(s) => write!(f, "M1={} M2={} α={} β={}", s.m1, s.m2, s.alpha, s.beta),
            IdentityInput::ShiftStep(s, _) => write!(f, "M1={} M2={} α={} β={}", s.m1, s.m2, s.alpha, s.beta),
            IdentityInput::ReflectionExceptional(s) | IdentityInput::Type23(s) => write!(f, "{s}"),
            IdentityInput::Xm { m, n, alpha, beta } => write!(f, "m={m} n={n} α={alpha} β={beta}"),
            IdentityInput::Revisited(_, s, deg) => {
                write!(f, "M1={} M2={} α={} β={} s={deg}", s.m1, s.m2, s.alpha, s.beta)
            }
            IdentityInput::TildeDuality(s, n) => write!(f, "{s} n={n}"),
        }
    }
}

fn parameter_pairs(grid: GridSize) -> Vec<(Rational, Rational)> {
    let mut v = vec![(rat(1, 3), rat(7, 2)), (rat(-2, 5), rat(9, 4))];
    if grid == GridSize::Full {
        v.push((rat(5, 2), rat(1, 7)));
    }
    v
}

/// Decreasing subsets of {0, .., max-1} with at most two elements.
fn small_sets(max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for a in 0..max {
        out.push(vec![a]);
        for b in 0..a {
            out.push(vec![a, b]);
        }
    }
    out
}

fn wanted(suite: Option<IdentityCase>, case: IdentityCase) -> bool {
    suite.is_none_or(|s| s == case)
}

/// Inputs for every identity (or one identity when `suite` is given).
pub fn identity_grid(grid: GridSize, suite: Option<IdentityCase>) -> Vec<IdentityInput> {
    let max_size = match grid {
        GridSize::Default => 3,
        GridSize::Full => 4,
    };
    let params = parameter_pairs(grid);
    let mut parts = Vec::new();
    for n in 0..=max_size {
        parts.extend(Partition::all_of_size(n));
    }
    let mut out = Vec::new();

    for l in &parts {
        for m in &parts {
            for (a, b) in &params {
                let f = FamilySpec::new(l.clone(), m.clone(), a.clone(), b.clone());
                if wanted(suite, IdentityCase::Duality) {
                    out.push(IdentityInput::Duality(f.clone()));
                }
                if wanted(suite, IdentityCase::Conjugation) {
                    out.push(IdentityInput::Conjugation(f.clone()));
                }
                if wanted(suite, IdentityCase::Reflection) {
                    out.push(IdentityInput::Reflection(f.clone()));
                }
                for n in degree_set(l, m, 12).into_iter().take(2) {
                    let Ok(spec) = ExceptionalSpec::new(f.clone(), n) else { continue };
                    if wanted(suite, IdentityCase::ReflectionExceptional) {
                        out.push(IdentityInput::ReflectionExceptional(spec.clone()));
                    }
                    if wanted(suite, IdentityCase::TildeDuality) {
                        out.push(IdentityInput::TildeDuality(f.clone(), n));
                    }
                    if wanted(suite, IdentityCase::Type23) && !m.is_empty() {
                        out.push(IdentityInput::Type23(spec));
                    }
                }
            }
        }
    }

    if wanted(suite, IdentityCase::Xm) {
        let xm_params = [(rat(1, 2), rat(3, 2)), (rat(7, 3), rat(-1, 4)), (rat(5, 2), rat(5, 2))];
        for (a, b) in &xm_params {
            for m in 0..=4 {
                for n in m..=10 {
                    out.push(IdentityInput::Xm {
                        m,
                        n,
                        alpha: a.clone(),
                        beta: b.clone(),
                    });
                }
            }
        }
    }

    let four = wanted(suite, IdentityCase::Shift)
        || wanted(suite, IdentityCase::ShiftStep)
        || wanted(suite, IdentityCase::Revisited);
    if four {
        let sets = small_sets(3);
        for n1 in &sets {
            for p1 in &sets {
                for n2 in &sets {
                    for p2 in &sets {
                        if n1.len() + p1.len() + n2.len() + p2.len() > 3 {
                            continue;
                        }
                        for (a, b) in &params {
                            let spec = FourTypeSpec {
                                m1: MayaDiagram::from_slices(n1, p1),
                                m2: MayaDiagram::from_slices(n2, p2),
                                alpha: a.clone(),
                                beta: b.clone(),
                            };
                            if wanted(suite, IdentityCase::Shift) {
                                out.push(IdentityInput::Shift(spec.clone()));
                            }
                            if wanted(suite, IdentityCase::ShiftStep) {
                                for st in [ShiftStep::A, ShiftStep::B, ShiftStep::C, ShiftStep::D] {
                                    out.push(IdentityInput::ShiftStep(spec.clone(), st));
                                }
                            }
                            if wanted(suite, IdentityCase::Revisited) {
                                for case in [RevisitedCase::A, RevisitedCase::B, RevisitedCase::C, RevisitedCase::D] {
                                    for s in 0..4 {
                                        out.push(IdentityInput::Revisited(case, spec.clone(), s));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CaseTally {
    pub pass: usize,
    pub fail: usize,
    /// Inputs outside the identity's hypotheses.
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<IdentityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub cases: BTreeMap<String, CaseTally>,
    pub evaluated: usize,
    pub passed: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Evaluates every input; inputs outside an identity's hypotheses count as skipped.
pub fn run_suite(inputs: &[IdentityInput]) -> SuiteReport {
    let results: Vec<_> = inputs
        .par_iter()
        .map(|inp| (inp, verify_identity(inp)))
        .collect();
    let mut cases: BTreeMap<String, CaseTally> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let mut passed = 0;
    for (inp, res) in results {
        let label = inp.label();
        let tally = cases.entry(label).or_default();
        match res {
            Ok(r) if r.holds => {
                tally.pass += 1;
                passed += 1;
            }
            Ok(r) => {
                tally.fail += 1;
                counterexamples.push(Counterexample {
                    input: inp.to_string(),
                    report: Some(r),
                    error: None,
                });
            }
            Err(Error::Admissibility { .. }) | Err(Error::Domain(_)) => tally.skipped += 1,
            Err(e) => {
                tally.fail += 1;
                counterexamples.push(Counterexample {
                    input: inp.to_string(),
                    report: None,
                    error: Some(e.to_string()),
                });
            }
        }
    }
    SuiteReport {
        evaluated: passed + counterexamples.len(),
        cases,
        passed,
        counterexamples,
    }
}
