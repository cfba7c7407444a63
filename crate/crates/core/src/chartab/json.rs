use serde::{Deserialize, Serialize};

use super::{CharacterTable, ConjClass, TableError, VerificationReport};
use crate::Cyclotomic;

#[derive(Serialize, Deserialize)]
struct TableFile {
    name: String,
    order: u64,
    classes: Vec<ConjClass>,
    characters: Vec<Vec<String>>,
}

impl CharacterTable {
    pub fn to_json(&self) -> String {
        let file = TableFile {
            name: self.name.clone(),
            order: self.order,
            classes: self.classes.clone(),
            characters: self.characters.iter().map(|row| row.iter().map(|v| v.to_string()).collect()).collect(),
        };
        serde_json::to_string_pretty(&file).expect("table serializes")
    }

    /// Parses a table file with structural checks only.
    pub fn from_json(text: &str) -> Result<CharacterTable, TableError> {
        let file: TableFile = serde_json::from_str(text).map_err(|e| TableError::Json(e.to_string()))?;
        let mut characters = Vec::with_capacity(file.characters.len());
        for (row, values) in file.characters.iter().enumerate() {
            let parsed = values
                .iter()
                .enumerate()
                .map(|(col, s)| s.parse::<Cyclotomic>().map_err(|source| TableError::Value { row, col, source }))
                .collect::<Result<Vec<_>, _>>()?;
            characters.push(parsed);
        }
        CharacterTable::new(file.name, file.order, file.classes, characters)
    }

    /// Parses and verifies a table file. A failing table is rejected unless
    /// `force` is set; the report is returned either way.
    pub fn load(text: &str, force: bool) -> Result<(CharacterTable, VerificationReport), TableError> {
        let table = CharacterTable::from_json(text)?;
        let report = table.verify();
        if !report.passed() && !force {
            let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
            return Err(TableError::Unverified(failed.join(", ")));
        }
        Ok((table, report))
    }
}
