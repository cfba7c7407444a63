//! Finite quivers given by adjacency matrices: connectivity, integer
//! eigenvector weightings, symmetry, extended Dynkin recognition and the
//! obstructions that rule a quiver out as a McKay quiver.

mod ade;
mod battery;
mod iso;

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::galois::IntPolynomial;
use crate::linalg::{char_poly_small, positive_combination};
use crate::{IntMatrix, Rational, RationalMatrix};

pub use ade::{ade_classify, AdeType};
pub use battery::{mckay_obstruction_battery, names as obstruction_names, ObstructionReport, ObstructionTest, Outcome};
pub use iso::{automorphism_orbits, is_automorphism, quiver_isomorphic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("malformed quiver: {0}")]
    Malformed(String),
    #[error("the quiver is not strongly connected")]
    NotStronglyConnected,
}

/// A quiver on vertices `0..n` with `adjacency[i][j]` arrows `i → j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    adjacency: Vec<Vec<u64>>,
    labels: Option<Vec<String>>,
    weights: Option<Vec<u64>>,
}

/// On-disk form: `{"vertices": [...], "weights": [...], "adjacency": [[...]]}`
/// with the first two keys optional.
#[derive(Serialize, Deserialize)]
struct QuiverFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<i64>>,
    adjacency: Vec<Vec<i64>>,
}

impl Quiver {
    pub fn new(adjacency: Vec<Vec<u64>>) -> Result<Self, QuiverError> {
        let n = adjacency.len();
        if n == 0 {
            return Err(QuiverError::Malformed("a quiver needs at least one vertex".into()));
        }
        if let Some(i) = adjacency.iter().position(|row| row.len() != n) {
            return Err(QuiverError::Malformed(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                adjacency[i].len()
            )));
        }
        Ok(Quiver { adjacency, labels: None, weights: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, QuiverError> {
        if labels.len() != self.len() {
            return Err(QuiverError::Malformed(format!("{} vertex names for {} vertices", labels.len(), self.len())));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_weights(mut self, weights: Vec<u64>) -> Result<Self, QuiverError> {
        if weights.len() != self.len() {
            return Err(QuiverError::Malformed(format!("{} weights for {} vertices", weights.len(), self.len())));
        }
        if weights.contains(&0) {
            return Err(QuiverError::Malformed("weights must be positive".into()));
        }
        self.weights = Some(weights);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn adjacency(&self) -> &[Vec<u64>] {
        &self.adjacency
    }

    pub fn arrows(&self, i: usize, j: usize) -> u64 {
        self.adjacency[i][j]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn weights(&self) -> Option<&[u64]> {
        self.weights.as_deref()
    }

    /// Name of vertex `i`: its label, or `v{i+1}`.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("v{}", i + 1),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..i).all(|j| self.adjacency[i][j] == self.adjacency[j][i]))
    }

    /// Full subquiver on `vertices`, keeping labels and weights.
    pub fn induced(&self, vertices: &[usize]) -> Quiver {
        Quiver {
            adjacency: vertices.iter().map(|&i| vertices.iter().map(|&j| self.adjacency[i][j]).collect()).collect(),
            labels: self.labels.as_ref().map(|l| vertices.iter().map(|&i| l[i].clone()).collect()),
            weights: self.weights.as_ref().map(|w| vertices.iter().map(|&i| w[i]).collect()),
        }
    }

    /// Sum of row `i`, the number of arrows leaving vertex `i`.
    pub fn out_degree(&self, i: usize) -> u64 {
        self.adjacency[i].iter().sum()
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.adjacency.iter().map(|row| row.iter().map(|&a| BigInt::from(a)).collect()).collect())
    }

    pub fn from_json(text: &str) -> Result<Self, QuiverError> {
        let file: QuiverFile =
            serde_json::from_str(text).map_err(|e| QuiverError::Malformed(format!("invalid quiver JSON: {e}")))?;
        let nonneg =
            |v: i64, what: &str| u64::try_from(v).map_err(|_| QuiverError::Malformed(format!("negative {what} {v}")));
        let adjacency = file
            .adjacency
            .iter()
            .map(|row| row.iter().map(|&a| nonneg(a, "arrow count")).collect())
            .collect::<Result<Vec<Vec<u64>>, _>>()?;
        let mut q = Quiver::new(adjacency)?;
        if let Some(names) = file.vertices {
            q = q.with_labels(names)?;
        }
        if let Some(w) = file.weights {
            q = q.with_weights(w.iter().map(|&x| nonneg(x, "weight")).collect::<Result<_, _>>()?)?;
        }
        Ok(q)
    }

    pub fn to_json(&self) -> String {
        let file = QuiverFile {
            vertices: self.labels.clone(),
            weights: self.weights.as_ref().map(|w| w.iter().map(|&x| x as i64).collect()),
            adjacency: self.adjacency.iter().map(|row| row.iter().map(|&a| a as i64).collect()).collect(),
        };
        serde_json::to_string_pretty(&file).expect("quiver serialization cannot fail")
    }

    /// Graphviz rendering. A pair of opposite arrows is drawn as one
    /// undirected edge; the JSON form keeps every arrow.
    pub fn to_dot(&self) -> String {
        let n = self.len();
        let mut out = String::from("digraph quiver {\n");
        for i in 0..n {
            let mut label = self.label(i);
            if let Some(w) = &self.weights {
                let _ = write!(label, " ({})", w[i]);
            }
            let _ = writeln!(out, "  v{} [label=\"{}\"];", i + 1, label.replace('"', "\\\""));
        }
        let edge = |out: &mut String, i: usize, j: usize, undirected: bool| {
            let attr = if undirected { " [dir=none]" } else { "" };
            let _ = writeln!(out, "  v{} -> v{}{attr};", i + 1, j + 1);
        };
        for i in 0..n {
            let loops = self.adjacency[i][i];
            for _ in 0..loops / 2 {
                edge(&mut out, i, i, true);
            }
            if loops % 2 == 1 {
                edge(&mut out, i, i, false);
            }
            for j in i + 1..n {
                let (a, b) = (self.adjacency[i][j], self.adjacency[j][i]);
                for _ in 0..a.min(b) {
                    edge(&mut out, i, j, true);
                }
                for _ in b..a {
                    edge(&mut out, i, j, false);
                }
                for _ in a..b {
                    edge(&mut out, j, i, false);
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Monic `det(xI - A)`.
    pub fn char_poly(&self) -> IntPolynomial {
        match char_poly_small(&self.adjacency) {
            Some(c) => IntPolynomial::new(c.into_iter().map(BigInt::from).collect()),
            None => IntPolynomial::new(self.to_matrix().char_poly()),
        }
    }
}

/// Strongly connected components (Tarjan), blocks sorted and ordered by
/// their least vertex.
pub fn scc(q: &Quiver) -> Vec<Vec<usize>> {
    struct State<'a> {
        q: &'a Quiver,
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        blocks: Vec<Vec<usize>>,
    }

    fn visit(s: &mut State<'_>, v: usize) {
        s.index[v] = Some(s.next);
        s.low[v] = s.next;
        s.next += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for w in 0..s.q.len() {
            if s.q.adjacency[v][w] == 0 {
                continue;
            }
            match s.index[w] {
                None => {
                    visit(s, w);
                    s.low[v] = s.low[v].min(s.low[w]);
                }
                Some(iw) if s.on_stack[w] => s.low[v] = s.low[v].min(iw),
                Some(_) => {}
            }
        }
        if Some(s.low[v]) == s.index[v] {
            let mut block = Vec::new();
            loop {
                let w = s.stack.pop().unwrap();
                s.on_stack[w] = false;
                block.push(w);
                if w == v {
                    break;
                }
            }
            s.blocks.push(block);
        }
    }

    let n = q.len();
    let mut s = State {
        q,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        blocks: Vec::new(),
    };
    for v in 0..n {
        if s.index[v].is_none() {
            visit(&mut s, v);
        }
    }
    normalize(s.blocks)
}

/// Weakly connected components, ordered by least vertex.
pub fn wcc(q: &Quiver) -> Vec<Vec<usize>> {
    let n = q.len();
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut block = vec![start];
        let mut k = 0;
        while k < block.len() {
            let v = block[k];
            k += 1;
            for w in 0..n {
                if !seen[w] && (q.adjacency[v][w] > 0 || q.adjacency[w][v] > 0) {
                    seen[w] = true;
                    block.push(w);
                }
            }
        }
        blocks.push(block);
    }
    normalize(blocks)
}

pub(crate) fn normalize(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_unstable_by_key(|b| b[0]);
    blocks
}

pub fn is_strongly_connected(q: &Quiver) -> bool {
    scc(q).len() == 1
}

/// A positive integer vector `w` with `A w = k w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightVector {
    pub k: u64,
    pub weights: Vec<u64>,
}

/// Scales a positive rational vector to the coprime positive integer vector
/// on the same ray.
fn primitive_integer(v: &[Rational]) -> Vec<u64> {
    let denom = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(denom.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    ints.iter().map(|x| (x / &g).to_u64().expect("weight fits in u64")).collect()
}

/// A positive integer `k`-eigenvector of the adjacency matrix, if any.
///
/// When the eigenspace has dimension at least two, existence of a strictly
/// positive vector in it is decided by Fourier–Motzkin elimination.
pub fn k_weight_vector(q: &Quiver, k: u64) -> Option<WeightVector> {
    let m: RationalMatrix = q.to_matrix().map(|a| Rational::from_integer(a.clone()));
    let basis = m.shift_diagonal(&Rational::from_integer(BigInt::from(k))).nullspace();
    let v = match basis.len() {
        0 => return None,
        1 => {
            let v = &basis[0];
            if v.iter().all(Signed::is_positive) {
                v.clone()
            } else if v.iter().all(Signed::is_negative) {
                v.iter().map(|x| -x).collect()
            } else {
                return None;
            }
        }
        _ => positive_combination(&basis)?,
    };
    Some(WeightVector { k, weights: primitive_integer(&v) })
}

/// The unique reduced weighting of a strongly connected quiver.
///
/// A positive eigenvector's eigenvalue lies between the least and greatest
/// row sums, so only those integers are tried. By Perron–Frobenius at most
/// one of them admits a positive eigenvector.
pub fn reduced_weight_vector(q: &Quiver) -> Result<Option<WeightVector>, QuiverError> {
    if !is_strongly_connected(q) {
        return Err(QuiverError::NotStronglyConnected);
    }
    let sums: Vec<u64> = (0..q.len()).map(|i| q.out_degree(i)).collect();
    let lo = sums.iter().copied().min().unwrap().max(1);
    let hi = sums.iter().copied().max().unwrap();
    let f = q.char_poly();
    Ok((lo..=hi).filter(|&k| f.eval(&BigInt::from(k)).is_zero()).find_map(|k| k_weight_vector(q, k)))
}
