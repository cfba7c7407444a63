//! Binary tetrahedral, octahedral and icosahedral groups.
//!
//! These tables are entered by hand; [`CharacterTable::verify`] is what
//! vouches for them.

use crate::chartab::{CharacterTable, ConjClass};
use crate::Cyclotomic;

fn table(name: &str, order: u64, classes: &[(&str, u64, usize, usize)], rows: &[&[&str]]) -> CharacterTable {
    let classes = classes.iter().map(|&(n, s, p, i)| ConjClass::new(n, s, p, i)).collect();
    let characters = rows
        .iter()
        .map(|row| row.iter().map(|v| v.parse::<Cyclotomic>().expect("catalog value parses")).collect())
        .collect();
    CharacterTable::new(name, order, classes, characters).expect("catalog table is well formed")
}

pub(super) fn binary_tetrahedral() -> CharacterTable {
    const W: &str = "E(3)";
    const W2: &str = "E(3)^2";
    const MW: &str = "-E(3)";
    const MW2: &str = "-E(3)^2";
    table(
        "2T",
        24,
        &[
            ("1", 1, 0, 0),
            ("-1", 1, 0, 1),
            ("3A", 4, 3, 3),
            ("3B", 4, 2, 2),
            ("6A", 4, 3, 5),
            ("6B", 4, 2, 4),
            ("4A", 6, 1, 6),
        ],
        &[
            &["1", "1", "1", "1", "1", "1", "1"],
            &["1", "1", W, W2, W, W2, "1"],
            &["1", "1", W2, W, W2, W, "1"],
            &["2", "-2", "-1", "-1", "1", "1", "0"],
            &["2", "-2", MW, MW2, W, W2, "0"],
            &["2", "-2", MW2, MW, W2, W, "0"],
            &["3", "3", "0", "0", "0", "0", "-1"],
        ],
    )
}

pub(super) fn binary_octahedral() -> CharacterTable {
    const R2: &str = "E(8)-E(8)^3";
    const MR2: &str = "-E(8)+E(8)^3";
    table(
        "2O",
        48,
        &[
            ("1", 1, 0, 0),
            ("-1", 1, 0, 1),
            ("4A", 6, 1, 2),
            ("8A", 6, 2, 3),
            ("8B", 6, 2, 4),
            ("3A", 8, 5, 5),
            ("6A", 8, 5, 6),
            ("4B", 12, 1, 7),
        ],
        &[
            &["1", "1", "1", "1", "1", "1", "1", "1"],
            &["1", "1", "1", "-1", "-1", "1", "1", "-1"],
            &["2", "2", "2", "0", "0", "-1", "-1", "0"],
            &["2", "-2", "0", R2, MR2, "-1", "1", "0"],
            &["2", "-2", "0", MR2, R2, "-1", "1", "0"],
            &["3", "3", "-1", "1", "1", "0", "0", "-1"],
            &["3", "3", "-1", "-1", "-1", "0", "0", "1"],
            &["4", "-4", "0", "0", "0", "1", "-1", "0"],
        ],
    )
}

pub(super) fn binary_icosahedral() -> CharacterTable {
    // golden ratio and friends in Q(ζ_5)
    const PHI: &str = "-E(5)^2-E(5)^3";
    const MPHI: &str = "E(5)^2+E(5)^3";
    const PHI1: &str = "E(5)+E(5)^4";
    const MPHI1: &str = "-E(5)-E(5)^4";
    table(
        "2I",
        120,
        &[
            ("1", 1, 0, 0),
            ("-1", 1, 0, 1),
            ("5A", 12, 3, 2),
            ("5B", 12, 2, 3),
            ("10A", 12, 2, 4),
            ("10B", 12, 3, 5),
            ("3A", 20, 6, 6),
            ("6A", 20, 6, 7),
            ("4A", 30, 1, 8),
        ],
        &[
            &["1", "1", "1", "1", "1", "1", "1", "1", "1"],
            &["2", "-2", PHI1, MPHI, PHI, MPHI1, "-1", "1", "0"],
            &["2", "-2", MPHI, PHI1, MPHI1, PHI, "-1", "1", "0"],
            &["3", "3", MPHI1, PHI, PHI, MPHI1, "0", "0", "-1"],
            &["3", "3", PHI, MPHI1, MPHI1, PHI, "0", "0", "-1"],
            &["4", "4", "-1", "-1", "-1", "-1", "1", "1", "0"],
            &["4", "-4", "-1", "-1", "1", "1", "1", "-1", "0"],
            &["5", "5", "0", "0", "0", "0", "-1", "-1", "1"],
            &["6", "-6", "1", "1", "-1", "-1", "0", "0", "0"],
        ],
    )
}
