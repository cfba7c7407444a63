//! The `analyze` report: everything the library can say about one quiver.

use std::fmt::Write as _;

use mckay::galois::{factor_over_q, solvability, Factorization, SolvabilityVerdict};
use mckay::quiver::{
    ade_classify, automorphism_orbits, mckay_obstruction_battery, reduced_weight_vector, scc, wcc, ObstructionReport,
};
use mckay::Quiver;
use serde::Serialize;

#[derive(Serialize)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub adjacency: Vec<Vec<u64>>,
}

#[derive(Serialize)]
pub struct Weighting {
    /// The strongly connected component, 1-based.
    pub component: Vec<usize>,
    pub k: Option<u64>,
    pub weights: Option<Vec<u64>>,
}

#[derive(Serialize)]
pub struct Polynomial {
    pub char_poly: String,
    pub factorization: Option<Factorization>,
    pub solvability: Option<SolvabilityVerdict>,
    pub error: Option<String>,
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub vertices: Vec<String>,
    pub strong_components: Vec<Vec<usize>>,
    pub components: Vec<Component>,
    pub weightings: Vec<Weighting>,
    pub automorphism_orbits: Vec<Vec<usize>>,
    pub ade: Option<String>,
    pub polynomial: Polynomial,
    pub obstructions: ObstructionReport,
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

pub fn analyze(q: &Quiver, prime_budget: u64) -> AnalyzeReport {
    let strong = scc(q);
    let components = wcc(q)
        .iter()
        .map(|b| Component { vertices: one_based(b), adjacency: q.induced(b).adjacency().to_vec() })
        .collect();
    let weightings = strong
        .iter()
        .map(|b| {
            let w = reduced_weight_vector(&q.induced(b)).ok().flatten();
            Weighting { component: one_based(b), k: w.as_ref().map(|w| w.k), weights: w.map(|w| w.weights) }
        })
        .collect();
    let f = q.char_poly();
    let polynomial = match (factor_over_q(&f), solvability(&f, prime_budget)) {
        (Ok(fz), Ok(v)) => {
            Polynomial { char_poly: f.to_string(), factorization: Some(fz), solvability: Some(v), error: None }
        }
        (Err(e), _) | (_, Err(e)) => {
            Polynomial { char_poly: f.to_string(), factorization: None, solvability: None, error: Some(e.to_string()) }
        }
    };
    AnalyzeReport {
        vertices: (0..q.len()).map(|i| q.label(i)).collect(),
        strong_components: strong.iter().map(|b| one_based(b)).collect(),
        components,
        weightings,
        automorphism_orbits: automorphism_orbits(q, q.weights()).iter().map(|o| one_based(o)).collect(),
        ade: ade_classify(q).map(|t| t.to_string()),
        polynomial,
        obstructions: mckay_obstruction_battery(q, prime_budget),
    }
}

impl AnalyzeReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "vertices: {}", self.vertices.join(", "));
        let _ = writeln!(out, "strongly connected components: {:?}", self.strong_components);
        let _ = writeln!(out, "connected components:");
        for c in &self.components {
            let _ = writeln!(out, "  {:?}: {:?}", c.vertices, c.adjacency);
        }
        let _ = writeln!(out, "weightings:");
        for w in &self.weightings {
            match (&w.k, &w.weights) {
                (Some(k), Some(ws)) => {
                    let _ = writeln!(out, "  {:?}: k = {k}, reduced weights {ws:?}", w.component);
                }
                _ => {
                    let _ = writeln!(out, "  {:?}: no integer weighting", w.component);
                }
            }
        }
        let _ = writeln!(out, "automorphism orbits: {:?}", self.automorphism_orbits);
        let _ = writeln!(out, "extended Dynkin type: {}", self.ade.as_deref().unwrap_or("none"));
        let p = &self.polynomial;
        let _ = writeln!(out, "characteristic polynomial: {}", p.char_poly);
        if let Some(fz) = &p.factorization {
            let parts: Vec<String> =
                fz.factors.iter().map(|(f, m)| if *m == 1 { format!("({f})") } else { format!("({f})^{m}") }).collect();
            let _ = writeln!(out, "  factors: {}", parts.join(" "));
        }
        if let Some(v) = &p.solvability {
            let _ = writeln!(out, "  solvability: {:?}", v.verdict);
            for c in v.certificates() {
                let _ = writeln!(out, "    {}: {}", c.factor, c.explanation);
            }
        }
        if let Some(e) = &p.error {
            let _ = writeln!(out, "  error: {e}");
        }
        let _ = writeln!(out, "obstructions:");
        out.push_str(&self.obstructions.render_text());
        out
    }
}
