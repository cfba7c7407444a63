use std::collections::HashMap;

use super::{CharacterTable, ConjClass, TableError};
use crate::Cyclotomic;

/// Character table of `G/N` together with its relation to the table of `G`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quotient {
    pub table: CharacterTable,
    /// `rows[l]` is the row of `G` inflated from row `l` of the quotient.
    pub rows: Vec<usize>,
    /// `class_map[c]` is the quotient class containing the image of class `c`.
    pub class_map: Vec<usize>,
}

impl CharacterTable {
    pub fn quotient_table(&self, kernel: &[usize]) -> Result<CharacterTable, TableError> {
        self.quotient(kernel).map(|q| q.table)
    }

    /// Table of `G/N` where `N` is the union of the classes in `kernel`.
    /// Surviving rows are those constant on `N`; classes are fused when all
    /// surviving rows agree on them.
    pub fn quotient(&self, kernel: &[usize]) -> Result<Quotient, TableError> {
        let r = self.num_classes();
        let bad = |m: String| Err(TableError::InvalidKernel(m));
        let mut kernel = kernel.to_vec();
        kernel.sort_unstable();
        kernel.dedup();
        if kernel.first() != Some(&0) {
            return bad("kernel must contain the identity class".into());
        }
        if kernel.iter().any(|&c| c >= r) {
            return bad("class index out of range".into());
        }
        let n_order: u64 = kernel.iter().map(|&c| self.classes[c].size).sum();
        if self.order % n_order != 0 {
            return bad(format!("|N| = {n_order} does not divide {}", self.order));
        }

        let rows: Vec<usize> =
            (0..r).filter(|&i| kernel.iter().all(|&c| self.characters[i][c] == self.characters[i][0])).collect();

        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut class_map = vec![0; r];
        let mut seen: HashMap<Vec<&Cyclotomic>, usize> = HashMap::new();
        for c in 0..r {
            let key: Vec<&Cyclotomic> = rows.iter().map(|&i| &self.characters[i][c]).collect();
            let g = *seen.entry(key).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(c);
            class_map[c] = g;
        }

        if groups.len() != rows.len() {
            return bad(format!("{} surviving characters but {} fused classes", rows.len(), groups.len()));
        }
        if groups[0] != kernel {
            return bad("the kernel is not the common kernel of the surviving characters".into());
        }
        let mut classes = Vec::with_capacity(groups.len());
        for members in &groups {
            let total: u64 = members.iter().map(|&c| self.classes[c].size).sum();
            if total % n_order != 0 {
                return bad(format!("fused class size {total} is not divisible by |N| = {n_order}"));
            }
            let p2 = class_map[self.classes[members[0]].power2];
            let inv = class_map[self.classes[members[0]].inverse];
            for &c in members {
                if class_map[self.classes[c].power2] != p2 || class_map[self.classes[c].inverse] != inv {
                    return bad("power maps are not compatible with the fusion".into());
                }
            }
            let name = members.iter().map(|&c| self.classes[c].name.as_str()).collect::<Vec<_>>().join("|");
            classes.push(ConjClass::new(name, total / n_order, p2, inv));
        }

        let characters: Vec<Vec<Cyclotomic>> = rows
            .iter()
            .map(|&i| groups.iter().map(|members| self.characters[i][members[0]].clone()).collect())
            .collect();
        let kernel_names: Vec<&str> = kernel.iter().map(|&c| self.classes[c].name.as_str()).collect();
        let name =
            if kernel == [0] { self.name.clone() } else { format!("{}/{{{}}}", self.name, kernel_names.join(",")) };
        let table = CharacterTable::new(name, self.order / n_order, classes, characters)
            .map_err(|e| TableError::InvalidKernel(e.to_string()))?;
        let report = table.verify();
        if !report.passed() {
            let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
            return bad(format!("quotient fails verification: {}", failed.join(", ")));
        }
        Ok(Quotient { table, rows, class_map })
    }
}
