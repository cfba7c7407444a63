//! Tables transcribed by hand, used as independent references in tests.

use crate::chartab::{CharacterTable, ConjClass};
use crate::Cyclotomic;

fn rows(values: &[&[&str]]) -> Vec<Vec<Cyclotomic>> {
    values.iter().map(|r| r.iter().map(|v| v.parse().unwrap()).collect()).collect()
}

/// Binary dihedral group of order 12 with the given sizes for the two
/// x-classes and the two y-classes.
pub fn bd12(x_size: u64, y_size: u64) -> CharacterTable {
    let classes = vec![
        ConjClass::new("1", 1, 0, 0),
        ConjClass::new("-1", 1, 0, 1),
        ConjClass::new("x", x_size, 1, 3),
        ConjClass::new("-x", x_size, 1, 2),
        ConjClass::new("y", y_size, 5, 4),
        ConjClass::new("y^2", y_size, 5, 5),
    ];
    let chars = rows(&[
        &["1", "1", "1", "1", "1", "1"],
        &["1", "1", "-1", "-1", "1", "1"],
        &["1", "-1", "E(4)", "-E(4)", "-1", "1"],
        &["1", "-1", "-E(4)", "E(4)", "-1", "1"],
        &["2", "2", "0", "0", "-1", "-1"],
        &["2", "-2", "0", "0", "1", "-1"],
    ]);
    CharacterTable::new("BD:12", 12, classes, chars).unwrap()
}

/// Binary dihedral group of order 24.
pub fn bd24() -> CharacterTable {
    let s3 = "E(12)-E(12)^5";
    let m3 = "-E(12)+E(12)^5";
    let classes = vec![
        ConjClass::new("1", 1, 0, 0),
        ConjClass::new("-1", 1, 0, 1),
        ConjClass::new("x", 6, 1, 2),
        ConjClass::new("xy", 6, 1, 3),
        ConjClass::new("y", 2, 5, 4),
        ConjClass::new("y^2", 2, 7, 5),
        ConjClass::new("y^3", 2, 1, 6),
        ConjClass::new("y^4", 2, 7, 7),
        ConjClass::new("y^5", 2, 5, 8),
    ];
    let chars = rows(&[
        &["1", "1", "1", "1", "1", "1", "1", "1", "1"],
        &["1", "1", "1", "-1", "-1", "1", "-1", "1", "-1"],
        &["1", "1", "-1", "1", "-1", "1", "-1", "1", "-1"],
        &["1", "1", "-1", "-1", "1", "1", "1", "1", "1"],
        &["2", "-2", "0", "0", s3, "1", "0", "-1", m3],
        &["2", "-2", "0", "0", m3, "1", "0", "-1", s3],
        &["2", "2", "0", "0", "1", "-1", "-2", "-1", "1"],
        &["2", "2", "0", "0", "-1", "-1", "2", "-1", "-1"],
        &["2", "-2", "0", "0", "0", "-2", "0", "2", "0"],
    ]);
    CharacterTable::new("BD:24", 24, classes, chars).unwrap()
}
