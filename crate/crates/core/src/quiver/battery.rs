//! Necessary conditions for a quiver to be a McKay quiver.
//!
//! Each test reports pass, fail or unknown. A failure is a proof that the
//! quiver is not a McKay quiver within that test's scope; unknown means a
//! prerequisite was missing or the evidence was inconclusive.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::{automorphism_orbits, reduced_weight_vector, scc, wcc, Quiver, WeightVector};
use crate::galois::{component_solvability, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ObstructionTest {
    pub name: &'static str,
    /// What a failure rules out.
    pub scope: &'static str,
    pub outcome: Outcome,
    pub details: String,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ObstructionReport {
    pub tests: Vec<ObstructionTest>,
}

pub mod names {
    pub const STRONG_CONNECTIVITY: &str = "strong connectivity";
    pub const REDUCED_WEIGHTS: &str = "reduced weight vector";
    pub const WEIGHT_MULTISET: &str = "weight multiset";
    pub const WEIGHT_ONE_ORBIT: &str = "weight-1 orbit";
    pub const SOLVABILITY: &str = "char poly solvability";
}

const FAITHFUL: &str = "McKay quiver of a faithful representation";

impl ObstructionReport {
    /// True when no test failed; unknown outcomes do not count as failures.
    pub fn passed(&self) -> bool {
        self.tests.iter().all(|t| t.outcome != Outcome::Fail)
    }

    pub fn test(&self, name: &str) -> Option<&ObstructionTest> {
        self.tests.iter().find(|t| t.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ObstructionTest> {
        self.tests.iter().filter(|t| t.outcome == Outcome::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.tests.iter().enumerate() {
            let tag = match t.outcome {
                Outcome::Pass => "PASS",
                Outcome::Fail => "FAIL",
                Outcome::Unknown => "UNKNOWN",
            };
            let _ = writeln!(out, "({}) {:<24} {tag:<8} {}", i + 1, t.name, t.details);
        }
        out
    }
}

fn test(name: &'static str, scope: &'static str, outcome: Outcome, details: String, witness: Value) -> ObstructionTest {
    ObstructionTest { name, scope, outcome, details, witness }
}

fn one_based(blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    blocks.iter().map(|b| b.iter().map(|v| v + 1).collect()).collect()
}

fn weight_conditions(w: &[u64]) -> Result<String, String> {
    let total: u64 = w.iter().map(|x| x * x).sum();
    if !w.contains(&1) {
        return Err(format!("no vertex has weight 1 (weights {w:?})"));
    }
    if let Some(x) = w.iter().find(|&&x| total % x != 0) {
        return Err(format!("weight {x} does not divide the sum of squares {total}"));
    }
    let ones = w.iter().filter(|&&x| x == 1).count() as u64;
    if total % ones != 0 {
        return Err(format!("{ones} weight-1 vertices do not divide the sum of squares {total}"));
    }
    Ok(format!("necessary conditions hold (sum of squares {total})"))
}

/// Runs the five obstruction tests in order.
pub fn mckay_obstruction_battery(q: &Quiver, prime_budget: u64) -> ObstructionReport {
    let mut tests = Vec::new();
    let strong = scc(q);
    let connected = strong.len() == 1;
    tests.push(if connected {
        test(
            names::STRONG_CONNECTIVITY,
            FAITHFUL,
            Outcome::Pass,
            "one strongly connected component".into(),
            Value::Null,
        )
    } else {
        test(
            names::STRONG_CONNECTIVITY,
            FAITHFUL,
            Outcome::Fail,
            format!("{} strongly connected components", strong.len()),
            json!({ "components": one_based(&strong) }),
        )
    });

    let weights: Option<WeightVector> = if connected { reduced_weight_vector(q).ok().flatten() } else { None };
    tests.push(match (&weights, connected) {
        (_, false) => test(
            names::REDUCED_WEIGHTS,
            FAITHFUL,
            Outcome::Unknown,
            "requires a strongly connected quiver".into(),
            Value::Null,
        ),
        (Some(w), true) => test(
            names::REDUCED_WEIGHTS,
            FAITHFUL,
            Outcome::Pass,
            format!("k = {}, weights {:?}", w.k, w.weights),
            json!({ "k": w.k, "weights": w.weights }),
        ),
        (None, true) => test(
            names::REDUCED_WEIGHTS,
            FAITHFUL,
            Outcome::Fail,
            "no integer k admits a positive integer eigenvector".into(),
            Value::Null,
        ),
    });

    tests.push(match &weights {
        None => test(names::WEIGHT_MULTISET, FAITHFUL, Outcome::Unknown, "no reduced weights".into(), Value::Null),
        Some(w) => match weight_conditions(&w.weights) {
            Ok(d) => test(names::WEIGHT_MULTISET, FAITHFUL, Outcome::Pass, d, Value::Null),
            Err(d) => test(names::WEIGHT_MULTISET, FAITHFUL, Outcome::Fail, d, json!({ "weights": w.weights })),
        },
    });

    tests.push(match &weights {
        None => test(names::WEIGHT_ONE_ORBIT, FAITHFUL, Outcome::Unknown, "no reduced weights".into(), Value::Null),
        Some(w) => {
            let orbits = automorphism_orbits(q, Some(&w.weights));
            let hit: Vec<Vec<usize>> = orbits
                .iter()
                .map(|o| o.iter().copied().filter(|&v| w.weights[v] == 1).collect::<Vec<_>>())
                .filter(|o| !o.is_empty())
                .collect();
            match hit.len() {
                0 => test(
                    names::WEIGHT_ONE_ORBIT,
                    FAITHFUL,
                    Outcome::Unknown,
                    "no weight-1 vertices".into(),
                    Value::Null,
                ),
                1 => test(
                    names::WEIGHT_ONE_ORBIT,
                    FAITHFUL,
                    Outcome::Pass,
                    "automorphisms act transitively on the weight-1 vertices".into(),
                    Value::Null,
                ),
                _ => test(
                    names::WEIGHT_ONE_ORBIT,
                    FAITHFUL,
                    Outcome::Fail,
                    format!("weight-1 vertices split into orbits {:?}", one_based(&hit)),
                    json!({ "orbits": one_based(&hit) }),
                ),
            }
        }
    });

    let mut outcome = Outcome::Pass;
    let mut lines = Vec::new();
    let mut verdicts = Vec::new();
    for block in wcc(q) {
        let comp = q.induced(&block);
        let label: Vec<usize> = block.iter().map(|v| v + 1).collect();
        match component_solvability(&comp, prime_budget) {
            Ok(v) => {
                match v.verdict {
                    Verdict::NotSolvable => outcome = Outcome::Fail,
                    Verdict::Unknown if outcome == Outcome::Pass => outcome = Outcome::Unknown,
                    _ => {}
                }
                lines.push(format!("{label:?}: {:?}", v.verdict));
                verdicts.push(json!({ "component": label, "verdict": v }));
            }
            Err(e) => {
                if outcome == Outcome::Pass {
                    outcome = Outcome::Unknown;
                }
                lines.push(format!("{label:?}: {e}"));
                verdicts.push(json!({ "component": label, "error": e.to_string() }));
            }
        }
    }
    tests.push(test(
        names::SOLVABILITY,
        "connected component of any McKay quiver",
        outcome,
        lines.join("; "),
        Value::Array(verdicts),
    ));
    ObstructionReport { tests }
}
