//! Finite groups as character tables.
//!
//! A group is represented entirely by its conjugacy-class data (sizes,
//! squaring map, inversion map) and the matrix of irreducible character
//! values. Every construction in the crate is a computation on this data.

pub(crate) mod ambient;
mod json;
mod quotient;
mod verify;

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{Cyclotomic, NotRational, ParseError, Rational};
use ambient::Ambient;

pub use quotient::Quotient;
pub use verify::{names as check_names, Check, VerificationReport};

#[derive(Debug, Error)]
pub enum TableError {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("class functions belong to different tables")]
    TableMismatch,
    #[error("not a character: inner product with χ{} is {value}", index + 1)]
    NotACharacter { index: usize, value: String },
    #[error(transparent)]
    NotRational(#[from] NotRational),
    #[error("invalid kernel: {0}")]
    InvalidKernel(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("character χ{}, class {}: {source}", row + 1, col + 1)]
    Value { row: usize, col: usize, source: ParseError },
    #[error("table failed verification: {0}")]
    Unverified(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjClass {
    pub name: String,
    pub size: u64,
    /// Class containing the squares of elements of this class.
    pub power2: usize,
    /// Class containing the inverses of elements of this class.
    pub inverse: usize,
}

impl ConjClass {
    pub fn new(name: impl Into<String>, size: u64, power2: usize, inverse: usize) -> Self {
        ConjClass { name: name.into(), size, power2, inverse }
    }
}

pub struct CharacterTable {
    name: String,
    order: u64,
    classes: Vec<ConjClass>,
    characters: Vec<Vec<Cyclotomic>>,
    dims: Vec<u64>,
    ambient: OnceLock<Option<Ambient>>,
    dual: OnceLock<Option<Vec<usize>>>,
}

impl CharacterTable {
    /// Builds a table after structural checks only: shape, index ranges and
    /// positive integral degrees. Use [`CharacterTable::verify`] for the
    /// orthogonality relations.
    pub fn new(
        name: impl Into<String>,
        order: u64,
        classes: Vec<ConjClass>,
        characters: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self, TableError> {
        let r = classes.len();
        let bad = |m: String| Err(TableError::Malformed(m));
        if r == 0 {
            return bad("no classes".into());
        }
        if order == 0 {
            return bad("group order must be positive".into());
        }
        if characters.len() != r {
            return bad(format!("{} classes but {} characters", r, characters.len()));
        }
        for (c, class) in classes.iter().enumerate() {
            if class.size == 0 {
                return bad(format!("class {} has size 0", c + 1));
            }
            if class.power2 >= r || class.inverse >= r {
                return bad(format!("class {} refers to a class index out of range", c + 1));
            }
        }
        let mut dims = Vec::with_capacity(r);
        for (i, row) in characters.iter().enumerate() {
            if row.len() != r {
                return bad(format!("χ{} has {} values, expected {}", i + 1, row.len(), r));
            }
            let d = row[0]
                .to_rational()
                .ok()
                .filter(|q| q.is_integer())
                .and_then(|q| q.to_integer().to_u64())
                .filter(|&d| d > 0);
            match d {
                Some(d) => dims.push(d),
                None => return bad(format!("χ{} has degree {}, not a positive integer", i + 1, row[0])),
            }
        }
        Ok(CharacterTable {
            name: name.into(),
            order,
            classes,
            characters,
            dims,
            ambient: OnceLock::new(),
            dual: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn characters(&self) -> &[Vec<Cyclotomic>] {
        &self.characters
    }

    pub fn character(&self, i: usize) -> &[Cyclotomic] {
        &self.characters[i]
    }

    /// Degrees `χ_i(1)`.
    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub(crate) fn ambient(&self) -> Option<&Ambient> {
        self.ambient
            .get_or_init(|| {
                let sizes: Vec<u64> = self.classes.iter().map(|c| c.size).collect();
                Ambient::build(&sizes, self.order, &self.characters)
            })
            .as_ref()
    }

    pub fn irreducible(&self, i: usize) -> ClassFunction<'_> {
        ClassFunction { table: self, values: self.characters[i].clone() }
    }

    pub fn class_function(&self, values: Vec<Cyclotomic>) -> Result<ClassFunction<'_>, TableError> {
        if values.len() != self.num_classes() {
            return Err(TableError::Malformed(format!(
                "class function has {} values, table has {} classes",
                values.len(),
                self.num_classes()
            )));
        }
        Ok(ClassFunction { table: self, values })
    }

    /// The character `Σ m_i χ_i`.
    pub fn character_of(&self, multiplicities: &[u64]) -> Result<ClassFunction<'_>, TableError> {
        let r = self.num_classes();
        if multiplicities.len() != r {
            return Err(TableError::Malformed(format!(
                "{} multiplicities given for {} irreducibles",
                multiplicities.len(),
                r
            )));
        }
        let values = (0..r)
            .map(|c| {
                multiplicities
                    .iter()
                    .zip(&self.characters)
                    .filter(|(m, _)| **m > 0)
                    .map(|(&m, row)| row[c].scale(&Rational::from_integer(BigInt::from(m))))
                    .sum()
            })
            .collect();
        Ok(ClassFunction { table: self, values })
    }

    /// `(1/|G|) Σ_c size(c) f(c) conj(g(c))`.
    pub(crate) fn pairing(&self, f: &[Cyclotomic], g: &[Cyclotomic]) -> Cyclotomic {
        if let Some(amb) = self.ambient() {
            if let (Some(lf), Some(lg)) = (amb.lift_all(f), amb.lift_all(g)) {
                if let Some(v) = amb.pairing(&lf, &lg) {
                    return v;
                }
            }
        }
        self.generic_pairing(f, g)
    }

    fn generic_pairing(&self, f: &[Cyclotomic], g: &[Cyclotomic]) -> Cyclotomic {
        let total: Cyclotomic = f
            .iter()
            .zip(g)
            .zip(&self.classes)
            .map(|((a, b), class)| a.mul_ref(&b.conj()).scale(&Rational::from_integer(BigInt::from(class.size))))
            .sum();
        total.scale(&Rational::new(BigInt::from(1), BigInt::from(self.order)))
    }

    /// `⟨f, χ_j⟩` for every irreducible `χ_j`.
    pub(crate) fn inner_products(&self, f: &[Cyclotomic]) -> Vec<Cyclotomic> {
        if let Some(amb) = self.ambient() {
            if let Some(lf) = amb.lift_all(f) {
                let fast: Option<Vec<_>> = amb.rows.iter().map(|row| amb.pairing(&lf, row)).collect();
                if let Some(v) = fast {
                    return v;
                }
            }
        }
        self.characters.iter().map(|row| self.generic_pairing(f, row)).collect()
    }

    pub(crate) fn decompose_values(&self, f: &[Cyclotomic]) -> Result<Vec<u64>, TableError> {
        self.inner_products(f)
            .into_iter()
            .enumerate()
            .map(|(index, v)| {
                v.to_rational()
                    .ok()
                    .filter(|q| q.is_integer())
                    .and_then(|q| q.to_integer().to_u64())
                    .ok_or_else(|| TableError::NotACharacter { index, value: v.to_string() })
            })
            .collect()
    }

    /// Index of the row equal to the complex conjugate of row `i`.
    pub fn dual_index(&self, i: usize) -> Option<usize> {
        let conj: Vec<Cyclotomic> = self.characters[i].iter().map(Cyclotomic::conj).collect();
        self.characters.iter().position(|row| *row == conj)
    }

    /// Row permutation `i ↦ dual(i)`; `None` if some conjugate row is missing.
    pub fn dual_permutation(&self) -> Option<Vec<usize>> {
        self.dual
            .get_or_init(|| {
                let index: HashMap<&[Cyclotomic], usize> =
                    self.characters.iter().enumerate().map(|(i, row)| (row.as_slice(), i)).collect();
                self.characters
                    .iter()
                    .map(|row| {
                        let conj: Vec<Cyclotomic> = row.iter().map(Cyclotomic::conj).collect();
                        index.get(conj.as_slice()).copied()
                    })
                    .collect()
            })
            .clone()
    }

    /// Frobenius–Schur indicators of the irreducibles.
    pub fn fs_indicators(&self) -> Result<Vec<i8>, TableError> {
        (0..self.num_classes())
            .map(|i| {
                let nu = self.irreducible(i).fs_indicator()?;
                match nu.to_i8() {
                    Some(v @ -1..=1) if nu.is_integer() => Ok(v),
                    _ => Err(TableError::Malformed(format!("χ{} has Frobenius–Schur indicator {nu}", i + 1))),
                }
            })
            .collect()
    }

    /// Whether the representation `⊕ σ_i^{m_i}` preserves a non-degenerate
    /// skew-symmetric form: real constituents need even multiplicity and
    /// complex ones must pair with their duals.
    pub fn is_symplectic(&self, multiplicities: &[u64]) -> Result<bool, TableError> {
        if multiplicities.len() != self.num_classes() {
            return Err(TableError::Malformed("multiplicity vector has the wrong length".into()));
        }
        let nus = self.fs_indicators()?;
        for (i, &m) in multiplicities.iter().enumerate() {
            if m == 0 {
                continue;
            }
            match nus[i] {
                1 if m % 2 == 1 => return Ok(false),
                0 => {
                    let d = self
                        .dual_index(i)
                        .ok_or_else(|| TableError::Malformed(format!("dual of χ{} is not a row", i + 1)))?;
                    if multiplicities[d] != m {
                        return Ok(false);
                    }
                }
                _ => {}
            }
        }
        Ok(true)
    }

    /// Classic grid: class names, class sizes, then one row per character.
    pub fn render_text(&self) -> String {
        let r = self.num_classes();
        let mut grid: Vec<Vec<String>> = Vec::with_capacity(r + 2);
        grid.push(std::iter::once("class".to_string()).chain(self.classes.iter().map(|c| c.name.clone())).collect());
        grid.push(std::iter::once("#".to_string()).chain(self.classes.iter().map(|c| c.size.to_string())).collect());
        for (i, row) in self.characters.iter().enumerate() {
            grid.push(std::iter::once(format!("χ{}", i + 1)).chain(row.iter().map(|v| v.to_string())).collect());
        }
        let widths: Vec<usize> =
            (0..=r).map(|c| grid.iter().map(|row| row[c].chars().count()).max().unwrap_or(0)).collect();
        let mut out = format!("{} (order {})\n", self.name, self.order);
        for (k, row) in grid.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(c, (cell, &w))| {
                    let pad = w - cell.chars().count();
                    if c == 0 {
                        format!("{cell}{}", " ".repeat(pad))
                    } else {
                        format!("{}{cell}", " ".repeat(pad))
                    }
                })
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
            if k == 1 {
                let total: usize = widths.iter().sum::<usize>() + 2 * r;
                out.push_str(&"-".repeat(total));
                out.push('\n');
            }
        }
        out
    }
}

impl Clone for CharacterTable {
    fn clone(&self) -> Self {
        CharacterTable {
            name: self.name.clone(),
            order: self.order,
            classes: self.classes.clone(),
            characters: self.characters.clone(),
            dims: self.dims.clone(),
            ambient: OnceLock::new(),
            dual: OnceLock::new(),
        }
    }
}

impl PartialEq for CharacterTable {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.order == other.order
            && self.classes == other.classes
            && self.characters == other.characters
    }
}

impl fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CharacterTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("classes", &self.classes)
            .field("characters", &self.characters)
            .finish()
    }
}

/// A function on the classes of a particular table.
#[derive(Clone)]
pub struct ClassFunction<'t> {
    table: &'t CharacterTable,
    values: Vec<Cyclotomic>,
}

impl<'t> ClassFunction<'t> {
    pub fn table(&self) -> &'t CharacterTable {
        self.table
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    pub fn into_values(self) -> Vec<Cyclotomic> {
        self.values
    }

    fn same_table(&self, other: &ClassFunction<'_>) -> Result<(), TableError> {
        if std::ptr::eq(self.table, other.table) || self.table == other.table {
            Ok(())
        } else {
            Err(TableError::TableMismatch)
        }
    }

    pub fn inner_product(&self, other: &ClassFunction<'_>) -> Result<Cyclotomic, TableError> {
        self.same_table(other)?;
        Ok(self.table.pairing(&self.values, &other.values))
    }

    /// Multiplicities `⟨f, χ_j⟩` as non-negative integers.
    pub fn decompose(&self) -> Result<Vec<u64>, TableError> {
        self.table.decompose_values(&self.values)
    }

    pub fn dual(&self) -> ClassFunction<'t> {
        ClassFunction { table: self.table, values: self.values.iter().map(Cyclotomic::conj).collect() }
    }

    /// `(1/|G|) Σ_c size(c) f(power2(c))`. Fails when the sum is irrational,
    /// which cannot happen for characters.
    pub fn fs_indicator(&self) -> Result<Rational, TableError> {
        let t = self.table;
        let total: Cyclotomic =
            t.classes.iter().map(|c| self.values[c.power2].scale(&Rational::from_integer(BigInt::from(c.size)))).sum();
        Ok(total.to_rational()? / Rational::from_integer(BigInt::from(t.order)))
    }

    /// Classes on which the character takes its degree; these make up its kernel.
    pub fn kernel_classes(&self) -> Result<Vec<usize>, TableError> {
        self.decompose()?;
        Ok(self.kernel_classes_unchecked())
    }

    pub(crate) fn kernel_classes_unchecked(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&c| self.values[c] == self.values[0]).collect()
    }

    /// Whether the restrictions to `subset` are nonzero scalar multiples of
    /// each other.
    pub fn proportional_on_classes(&self, other: &ClassFunction<'_>, subset: &[usize]) -> Result<bool, TableError> {
        self.same_table(other)?;
        Ok(proportional(&self.values, &other.values, subset))
    }

    pub fn mul(&self, other: &ClassFunction<'_>) -> Result<ClassFunction<'t>, TableError> {
        self.same_table(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.mul_ref(b)).collect();
        Ok(ClassFunction { table: self.table, values })
    }

    pub fn add(&self, other: &ClassFunction<'_>) -> Result<ClassFunction<'t>, TableError> {
        self.same_table(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.add_ref(b)).collect();
        Ok(ClassFunction { table: self.table, values })
    }

    pub fn pow(&self, exp: u32) -> ClassFunction<'t> {
        let values = self.values.iter().map(|v| v.pow(exp as i64).expect("non-negative power")).collect();
        ClassFunction { table: self.table, values }
    }
}

impl PartialEq for ClassFunction<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_table(other).is_ok() && self.values == other.values
    }
}

impl fmt::Debug for ClassFunction<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.values.iter().map(|v| v.to_string())).finish()
    }
}

/// Cross-ratio test against an anchor class where `f` is nonzero.
pub(crate) fn proportional(f: &[Cyclotomic], g: &[Cyclotomic], subset: &[usize]) -> bool {
    let Some(&anchor) = subset.iter().find(|&&c| !f[c].is_zero()) else {
        return false;
    };
    if g[anchor].is_zero() {
        return false;
    }
    subset.iter().all(|&c| f[c].mul_ref(&g[anchor]) == g[c].mul_ref(&f[anchor]))
}

#[cfg(test)]
mod tests;
