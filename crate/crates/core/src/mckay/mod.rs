//! McKay matrices `A_ρ(G)`: `a_ij` is the multiplicity of `σ_j` in `ρ ⊗ σ_i`.
//!
//! Everything is computed from the character table. The structural facts
//! (columns are eigenvectors, duals reverse arrows, components match the
//! kernel of ρ) are re-derived independently and cross-checked, so a
//! disagreement surfaces as [`McKayError::Inconsistent`].

use std::collections::HashMap;
use std::ops::RangeInclusive;

use serde::Serialize;
use thiserror::Error;

use crate::chartab::ambient::{Ambient, Sparse};
use crate::chartab::{proportional, Quotient};
use crate::quiver::{is_automorphism, normalize, scc, wcc, Quiver};
use crate::{CharacterTable, Cyclotomic, TableError};

#[derive(Debug, Error)]
pub enum McKayError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// The McKay quiver of `ρ = ⊕ σ_k^{rho[k]}` over a character table.
#[derive(Clone, Debug)]
pub struct McKayQuiver<'t> {
    pub table: &'t CharacterTable,
    pub rho: Vec<u64>,
    pub adjacency: Vec<Vec<u64>>,
}

impl<'t> McKayQuiver<'t> {
    pub fn dims(&self) -> &'t [u64] {
        self.table.dims()
    }

    /// Degree of ρ.
    pub fn rho_dim(&self) -> u64 {
        self.rho.iter().zip(self.dims()).map(|(m, d)| m * d).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.adjacency.len();
        (0..n).all(|i| (0..n).all(|j| self.adjacency[i][j] == self.adjacency[j][i]))
    }

    /// Vertex names `χ1, χ2, ...` and weights the dimensions.
    pub fn to_quiver(&self) -> Quiver {
        let r = self.adjacency.len();
        Quiver::new(self.adjacency.clone())
            .and_then(|q| q.with_labels((1..=r).map(|i| format!("χ{i}")).collect()))
            .and_then(|q| q.with_weights(self.dims().to_vec()))
            .expect("McKay adjacency is square with positive weights")
    }
}

fn check_rho(t: &CharacterTable, rho: &[u64]) -> Result<(), McKayError> {
    if rho.len() != t.num_classes() {
        return Err(McKayError::InvalidRep(format!(
            "{} multiplicities given for {} irreducibles",
            rho.len(),
            t.num_classes()
        )));
    }
    if rho.iter().all(|&m| m == 0) {
        return Err(McKayError::InvalidRep("the zero representation".into()));
    }
    Ok(())
}

fn sparse_tensor_multiplicities(amb: &Ambient, f: &[Sparse]) -> Option<Vec<Vec<u64>>> {
    amb.rows
        .iter()
        .map(|chi| {
            let prod = amb.mul_all(f, chi)?;
            (0..amb.rows.len()).map(|j| amb.multiplicity(&prod, j)).collect()
        })
        .collect()
}

/// `m[i][j] = ⟨f·χ_i, χ_j⟩` for a character `f`.
fn tensor_multiplicities(t: &CharacterTable, f: &[Cyclotomic]) -> Result<Vec<Vec<u64>>, McKayError> {
    let r = t.num_classes();
    let fast = t.ambient().and_then(|amb| sparse_tensor_multiplicities(amb, &amb.lift_all(f)?));
    if let Some(m) = fast {
        return Ok(m);
    }
    (0..r)
        .map(|i| {
            let prod: Vec<Cyclotomic> = f.iter().zip(t.character(i)).map(|(a, b)| a.mul_ref(b)).collect();
            t.decompose_values(&prod)
                .map_err(|e| McKayError::Inconsistent(format!("ρ⊗σ{} is not a character: {e}", i + 1)))
        })
        .collect()
}

/// `A_ρ(G)` computed from inner products.
pub fn mckay_matrix<'t>(t: &'t CharacterTable, rho: &[u64]) -> Result<McKayQuiver<'t>, McKayError> {
    check_rho(t, rho)?;
    let chi = t.character_of(rho)?.into_values();
    let adjacency = tensor_multiplicities(t, &chi)?;
    let q = McKayQuiver { table: t, rho: rho.to_vec(), adjacency };
    let deg = q.rho_dim();
    let dims = t.dims();
    for (i, row) in q.adjacency.iter().enumerate() {
        let total: u64 = row.iter().zip(dims).map(|(a, d)| a * d).sum();
        if total != deg * dims[i] {
            return Err(McKayError::Inconsistent(format!(
                "row {} has weighted sum {total}, expected {}",
                i + 1,
                deg * dims[i]
            )));
        }
    }
    Ok(q)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenViolation {
    /// 0-based class index.
    pub class: usize,
    /// First row where `(A·col)_i ≠ χ_ρ(c)·χ_i(c)`.
    pub row: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenReport {
    pub violations: Vec<EigenViolation>,
}

impl EigenReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `A·col_c = χ_ρ(c)·col_c` for every class `c`.
pub fn eigen_check(q: &McKayQuiver<'_>) -> EigenReport {
    let t = q.table;
    let r = t.num_classes();
    let chi = t.character_of(&q.rho).expect("rho validated at construction").into_values();
    let fast = t.ambient().and_then(|amb| {
        let lchi = amb.lift_all(&chi)?;
        let mut bad = Vec::new();
        for c in 0..r {
            for i in 0..r {
                let mut lhs = Vec::new();
                for j in 0..r {
                    let a = q.adjacency[i][j] as i128;
                    if a != 0 {
                        for &(e, x) in &amb.rows[j][c] {
                            lhs.push((e, x.checked_mul(a)?));
                        }
                    }
                }
                let rhs = amb.mul(&lchi[c], &amb.rows[i][c])?;
                if amb.reduced(&lhs) != amb.reduced(&rhs) {
                    bad.push(EigenViolation { class: c, row: i });
                    break;
                }
            }
        }
        Some(bad)
    });
    let violations = fast.unwrap_or_else(|| {
        (0..r)
            .filter_map(|c| {
                (0..r)
                    .find(|&i| {
                        let lhs: Cyclotomic = (0..r)
                            .filter(|&j| q.adjacency[i][j] > 0)
                            .map(|j| t.character(j)[c].clone() * Cyclotomic::from(q.adjacency[i][j] as i64))
                            .sum();
                        lhs != chi[c].mul_ref(&t.character(i)[c])
                    })
                    .map(|row| EigenViolation { class: c, row })
            })
            .collect()
    });
    EigenReport { violations }
}

/// Multiplicities of the dual representation `ρ*`.
pub fn dual_multiplicities(t: &CharacterTable, rho: &[u64]) -> Result<Vec<u64>, McKayError> {
    check_rho(t, rho)?;
    let perm = t.dual_permutation().ok_or_else(|| McKayError::Inconsistent("dual rows missing".into()))?;
    let mut out = vec![0; rho.len()];
    for (i, &m) in rho.iter().enumerate() {
        out[perm[i]] = m;
    }
    Ok(out)
}

/// Whether `A_ρ^T = A_{ρ*}`.
pub fn dual_reversal_check(t: &CharacterTable, rho: &[u64]) -> Result<bool, McKayError> {
    let a = mckay_matrix(t, rho)?;
    let b = mckay_matrix(t, &dual_multiplicities(t, rho)?)?;
    let n = a.adjacency.len();
    Ok((0..n).all(|i| (0..n).all(|j| a.adjacency[i][j] == b.adjacency[j][i])))
}

/// Classes in the kernel of ρ.
pub fn kernel_classes(q: &McKayQuiver<'_>) -> Vec<usize> {
    q.table.character_of(&q.rho).expect("rho validated at construction").kernel_classes_unchecked()
}

/// Rows grouped by proportionality of their restrictions to the kernel of ρ.
fn proportionality_blocks(q: &McKayQuiver<'_>) -> Vec<Vec<usize>> {
    let t = q.table;
    let kernel = kernel_classes(q);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..t.num_classes() {
        match blocks.iter_mut().find(|b| proportional(t.character(b[0]), t.character(i), &kernel)) {
            Some(b) => b.push(i),
            None => blocks.push(vec![i]),
        }
    }
    normalize(blocks)
}

/// Connected components, computed as strongly connected components, as
/// weakly connected components and by proportionality on the kernel of ρ,
/// and required to agree.
pub fn component_partition(q: &McKayQuiver<'_>) -> Result<Vec<Vec<usize>>, McKayError> {
    let quiver = q.to_quiver();
    let strong = scc(&quiver);
    let weak = wcc(&quiver);
    let prop = proportionality_blocks(q);
    if strong != weak || strong != prop {
        return Err(McKayError::Inconsistent(format!(
            "component partitions disagree: strong {strong:?}, weak {weak:?}, proportional {prop:?}"
        )));
    }
    Ok(strong)
}

/// Number of components, which equals the number of classes in the kernel of ρ.
pub fn component_count(t: &CharacterTable, rho: &[u64]) -> Result<usize, McKayError> {
    let q = mckay_matrix(t, rho)?;
    let blocks = component_partition(&q)?.len();
    let kernel = kernel_classes(&q).len();
    if blocks != kernel {
        return Err(McKayError::Inconsistent(format!("{blocks} components but {kernel} kernel classes")));
    }
    Ok(blocks)
}

/// The McKay quiver of the faithful descent of ρ to `G/ker ρ`.
#[derive(Clone, Debug)]
pub struct PrincipalComponent {
    pub quotient: Quotient,
    /// Multiplicities of the descended representation over the quotient's rows.
    pub rho: Vec<u64>,
    pub adjacency: Vec<Vec<u64>>,
}

impl PrincipalComponent {
    pub fn mckay(&self) -> McKayQuiver<'_> {
        McKayQuiver { table: &self.quotient.table, rho: self.rho.clone(), adjacency: self.adjacency.clone() }
    }

    /// Rows of `G` forming the component through the trivial character.
    pub fn vertices(&self) -> &[usize] {
        &self.quotient.rows
    }
}

/// Builds the principal component from the quotient table and checks it
/// against the component of the trivial vertex in `Γ_ρ(G)`, vertex by vertex.
pub fn principal_component(t: &CharacterTable, rho: &[u64]) -> Result<PrincipalComponent, McKayError> {
    let full = mckay_matrix(t, rho)?;
    let quotient = t.quotient(&kernel_classes(&full))?;
    let mut descended = vec![0; quotient.rows.len()];
    for (l, &row) in quotient.rows.iter().enumerate() {
        descended[l] = rho[row];
    }
    if descended.iter().sum::<u64>() != rho.iter().sum::<u64>() {
        return Err(McKayError::Inconsistent("a constituent of ρ does not descend to G/ker ρ".into()));
    }
    let small = mckay_matrix(&quotient.table, &descended)?;
    let adjacency = small.adjacency;
    let blocks = component_partition(&full)?;
    let mut verts = quotient.rows.clone();
    verts.sort_unstable();
    if blocks[0] != verts {
        return Err(McKayError::Inconsistent(format!(
            "inflated rows {verts:?} differ from the trivial component {:?}",
            blocks[0]
        )));
    }
    let rows = &quotient.rows;
    for (a, &i) in rows.iter().enumerate() {
        for (b, &j) in rows.iter().enumerate() {
            if adjacency[a][b] != full.adjacency[i][j] {
                return Err(McKayError::Inconsistent(format!(
                    "quotient arrows {}→{} differ from χ{}→χ{}",
                    a + 1,
                    b + 1,
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(PrincipalComponent { quotient, rho: descended, adjacency })
}

/// Multiplication by a one-dimensional character, as a permutation of rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualAction {
    /// 0-based row of the linear character.
    pub character: usize,
    /// `permutation[i] = k` when `χ·χ_i = χ_k`.
    pub permutation: Vec<usize>,
}

fn dual_permutations(t: &CharacterTable) -> Result<Vec<DualAction>, McKayError> {
    let index: HashMap<&[Cyclotomic], usize> =
        t.characters().iter().enumerate().map(|(i, row)| (row.as_slice(), i)).collect();
    let mut out = Vec::new();
    for (k, &d) in t.dims().iter().enumerate() {
        if d != 1 {
            continue;
        }
        let lin = t.character(k);
        let permutation = (0..t.num_classes())
            .map(|i| {
                let prod: Vec<Cyclotomic> = lin.iter().zip(t.character(i)).map(|(a, b)| a.mul_ref(b)).collect();
                index
                    .get(prod.as_slice())
                    .copied()
                    .ok_or_else(|| McKayError::Inconsistent(format!("χ{}·χ{} is not an irreducible row", k + 1, i + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(DualAction { character: k, permutation });
    }
    Ok(out)
}

/// Same permutations computed in the ambient ring; `None` on overflow.
fn dual_permutations_fast(t: &CharacterTable, amb: &Ambient) -> Option<Result<Vec<DualAction>, McKayError>> {
    let key = |row: &[Sparse]| -> Vec<Vec<i128>> { row.iter().map(|v| amb.reduced(v)).collect() };
    let index: HashMap<Vec<Vec<i128>>, usize> = amb.rows.iter().enumerate().map(|(i, row)| (key(row), i)).collect();
    let mut out = Vec::new();
    for (k, &d) in t.dims().iter().enumerate() {
        if d != 1 {
            continue;
        }
        let mut permutation = Vec::with_capacity(t.num_classes());
        for i in 0..t.num_classes() {
            let prod = amb.mul_all(&amb.rows[k], &amb.rows[i])?;
            match index.get(&key(&prod)) {
                Some(&j) => permutation.push(j),
                None => {
                    return Some(Err(McKayError::Inconsistent(format!(
                        "χ{}·χ{} is not an irreducible row",
                        k + 1,
                        i + 1
                    ))))
                }
            }
        }
        out.push(DualAction { character: k, permutation });
    }
    Some(Ok(out))
}

/// The action of the group of linear characters on the vertices. When `rho`
/// is given, each permutation is checked to be an automorphism of `Γ_ρ(G)`.
pub fn dual_group_action(t: &CharacterTable, rho: Option<&[u64]>) -> Result<Vec<DualAction>, McKayError> {
    let out = match t.ambient().and_then(|amb| dual_permutations_fast(t, amb)) {
        Some(fast) => fast?,
        None => dual_permutations(t)?,
    };
    if let Some(rho) = rho {
        let q = mckay_matrix(t, rho)?.to_quiver();
        if let Some(a) = out.iter().find(|a| !is_automorphism(&q, &a.permutation, q.weights())) {
            return Err(McKayError::Inconsistent(format!(
                "multiplication by χ{} is not an automorphism",
                a.character + 1
            )));
        }
    }
    Ok(out)
}

fn matrix_product(a: &[Vec<u64>], b: &[Vec<u64>]) -> Result<Vec<Vec<u64>>, McKayError> {
    let n = a.len();
    let overflow = || McKayError::Inconsistent("walk count overflows u64".into());
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                let add = a[i][k].checked_mul(b[k][j]).ok_or_else(overflow)?;
                out[i][j] = out[i][j].checked_add(add).ok_or_else(overflow)?;
            }
        }
    }
    Ok(out)
}

/// `⟨χ_ρ^L·χ_i, χ_j⟩` for every `L` in `lengths`, each checked against `A^L`.
fn character_walks(q: &McKayQuiver<'_>, lengths: RangeInclusive<u32>) -> Result<Vec<Vec<Vec<u64>>>, McKayError> {
    let t = q.table;
    let n = q.adjacency.len();
    let chi = t.character_of(&q.rho)?;
    let lifted = t.ambient().and_then(|amb| Some((amb, amb.lift_all(chi.values())?)));
    let mut sparse_power = lifted.as_ref().map(|(amb, _)| amb.rows[0].clone());
    let mut a_power: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    let mut out = Vec::new();
    for length in 0..=*lengths.end() {
        if length > 0 {
            a_power = matrix_product(&a_power, &q.adjacency)?;
            sparse_power = match (&lifted, sparse_power) {
                (Some((amb, base)), Some(p)) => amb.mul_all(&p, base),
                _ => None,
            };
        }
        if !lengths.contains(&length) {
            continue;
        }
        let fast = match (&lifted, &sparse_power) {
            (Some((amb, _)), Some(p)) => sparse_tensor_multiplicities(amb, p),
            _ => None,
        };
        let via_characters = match fast {
            Some(m) => m,
            None => tensor_multiplicities(t, &chi.pow(length).into_values())?,
        };
        if via_characters != a_power {
            return Err(McKayError::Inconsistent(format!("walks of length {length} disagree with A^{length}")));
        }
        out.push(via_characters);
    }
    Ok(out)
}

/// All `⟨χ_ρ^L·χ_i, χ_j⟩`, checked against `A^L`.
pub fn walk_multiplicities(t: &CharacterTable, rho: &[u64], length: u32) -> Result<Vec<Vec<u64>>, McKayError> {
    let q = mckay_matrix(t, rho)?;
    Ok(character_walks(&q, length..=length)?.pop().expect("one length requested"))
}

/// Walk counts for every length up to `max_length`, sharing one quiver and
/// one running power of `χ_ρ`.
pub fn walk_check(q: &McKayQuiver<'_>, max_length: u32) -> Result<Vec<Vec<Vec<u64>>>, McKayError> {
    character_walks(q, 0..=max_length)
}

/// Number of walks of length `length` from `v_i` to `v_j`.
pub fn walk_multiplicity(t: &CharacterTable, rho: &[u64], length: u32, i: usize, j: usize) -> Result<u64, McKayError> {
    let r = t.num_classes();
    if i >= r || j >= r {
        return Err(McKayError::InvalidRep(format!("vertex index out of range 1..={r}")));
    }
    Ok(walk_multiplicities(t, rho, length)?[i][j])
}
