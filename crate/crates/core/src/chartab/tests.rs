use super::check_names::*;
use super::*;
use crate::testdata::{bd12, bd24};

fn int(v: i64) -> Cyclotomic {
    Cyclotomic::from_integer(v)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn inner_products_on_bd12() {
    let t = bd12(3, 2);
    assert_eq!(t.irreducible(0).inner_product(&t.irreducible(0)).unwrap(), int(1));
    assert_eq!(t.irreducible(0).inner_product(&t.irreducible(1)).unwrap(), int(0));
    assert_eq!(t.irreducible(2).inner_product(&t.irreducible(3)).unwrap(), int(0));
}

#[test]
fn inner_product_on_bd24() {
    let t = bd24();
    // by hand over the nine classes: 4·1 + ... gives 24/24
    let prod = t.irreducible(6).mul(&t.irreducible(4)).unwrap();
    assert_eq!(prod.inner_product(&t.irreducible(8)).unwrap(), int(1));
}

#[test]
fn fast_and_generic_pairings_agree() {
    let t = bd24();
    for i in 0..9 {
        for j in 0..9 {
            let f = t.irreducible(i).mul(&t.irreducible(j)).unwrap();
            for k in 0..9 {
                let fast = t.pairing(f.values(), t.character(k));
                let slow = t.generic_pairing(f.values(), t.character(k));
                assert_eq!(fast, slow, "({i},{j},{k})");
            }
        }
    }
}

#[test]
fn decomposition() {
    let t = bd12(3, 2);
    assert_eq!(t.irreducible(0).decompose().unwrap(), vec![1, 0, 0, 0, 0, 0]);
    let sq = t.irreducible(4).mul(&t.irreducible(4)).unwrap();
    assert_eq!(sq.decompose().unwrap(), vec![1, 1, 0, 0, 1, 0]);
    let delta = t.class_function(vec![int(1), int(0), int(0), int(0), int(0), int(0)]).unwrap();
    // <δ, χ_j> = χ_j(1)/12
    match delta.decompose() {
        Err(TableError::NotACharacter { index: 0, value }) => assert_eq!(value, "1/12"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn tensor_squares_decompose_with_matching_degree() {
    let t = bd24();
    for i in 0..9 {
        for j in 0..9 {
            let f = t.irreducible(i).mul(&t.irreducible(j)).unwrap();
            let m = f.decompose().unwrap();
            let deg: u64 = m.iter().zip(t.dims()).map(|(a, b)| a * b).sum();
            assert_eq!(deg, t.dims()[i] * t.dims()[j]);
        }
    }
}

#[test]
fn duals() {
    let t = bd12(3, 2);
    assert_eq!(t.irreducible(2).dual(), t.irreducible(3));
    assert_eq!(t.irreducible(4).dual(), t.irreducible(4));
    let f = t.irreducible(2).add(&t.irreducible(5)).unwrap();
    assert_eq!(f.dual().dual(), f);
    assert_eq!(t.dual_permutation().unwrap(), vec![0, 1, 3, 2, 4, 5]);
}

#[test]
fn frobenius_schur() {
    let t = bd12(3, 2);
    assert_eq!(t.irreducible(0).fs_indicator().unwrap(), q(1, 1));
    assert_eq!(t.irreducible(5).fs_indicator().unwrap(), q(-1, 1));
    assert_eq!(t.irreducible(2).fs_indicator().unwrap(), q(0, 1));
    assert_eq!(t.fs_indicators().unwrap(), vec![1, 1, 0, 0, 1, -1]);
}

#[test]
fn symplectic_criterion() {
    let t = bd12(3, 2);
    assert!(t.is_symplectic(&[0, 0, 0, 0, 0, 1]).unwrap());
    assert!(!t.is_symplectic(&[0, 0, 0, 0, 1, 0]).unwrap());
    assert!(t.is_symplectic(&[0, 0, 1, 1, 0, 0]).unwrap());
    assert!(!t.is_symplectic(&[0, 0, 1, 0, 0, 0]).unwrap());
    assert!(t.is_symplectic(&[0, 0, 0, 0, 2, 0]).unwrap());
}

#[test]
fn kernels() {
    let t = bd24();
    assert_eq!(t.irreducible(6).kernel_classes().unwrap(), vec![0, 1]);
    assert_eq!(t.irreducible(0).kernel_classes().unwrap(), (0..9).collect::<Vec<_>>());
    let b = bd12(3, 2);
    assert_eq!(b.irreducible(5).kernel_classes().unwrap(), vec![0]);
    let bogus = b.class_function(vec![int(3), int(3), int(0), int(0), int(0), int(0)]).unwrap();
    assert!(matches!(bogus.kernel_classes(), Err(TableError::NotACharacter { .. })));
}

#[test]
fn kernel_of_product_contains_intersection() {
    let t = bd24();
    for i in 0..9 {
        for j in 0..9 {
            let ki = t.irreducible(i).kernel_classes().unwrap();
            let kj = t.irreducible(j).kernel_classes().unwrap();
            let kp = t.irreducible(i).mul(&t.irreducible(j)).unwrap().kernel_classes().unwrap();
            assert!(ki.iter().filter(|c| kj.contains(c)).all(|c| kp.contains(c)));
        }
    }
}

#[test]
fn proportionality() {
    let t = bd24();
    let n = [0, 1];
    assert!(t.irreducible(4).proportional_on_classes(&t.irreducible(8), &n).unwrap());
    assert!(!t.irreducible(4).proportional_on_classes(&t.irreducible(6), &n).unwrap());
    let all: Vec<usize> = (0..9).collect();
    for i in 0..9 {
        assert!(t.irreducible(i).proportional_on_classes(&t.irreducible(i), &all).unwrap());
    }
}

#[test]
fn table_mismatch_is_reported() {
    let a = bd12(3, 2);
    let b = bd24();
    assert!(matches!(a.irreducible(0).inner_product(&b.irreducible(0)), Err(TableError::TableMismatch)));
    let a2 = a.clone();
    assert!(a.irreducible(0).inner_product(&a2.irreducible(0)).is_ok());
}

#[test]
fn verification_passes_on_consistent_tables() {
    for t in [bd12(3, 2), bd24()] {
        let report = t.verify();
        assert!(report.passed(), "{}", report.render_text());
    }
}

#[test]
fn printed_bd12_sizes_fail_orthogonality() {
    let report = bd12(2, 3).verify();
    assert!(!report.passed());
    assert!(report.check(CLASS_SIZES).unwrap().passed);
    let rows = report.check(FIRST_ORTHOGONALITY).unwrap();
    assert!(!rows.passed);
    // (1 + 1 - 2 - 2 + 3 + 3) / 12
    assert!(rows.details.iter().any(|d| d == "<χ1, χ2> = 1/3"), "{:?}", rows.details);
}

#[test]
fn perturbed_entry_fails() {
    let t = bd24();
    let mut chars = t.characters().to_vec();
    chars[7][4] = int(3);
    let bad = CharacterTable::new("bad", 24, t.classes().to_vec(), chars).unwrap();
    let report = bad.verify();
    assert!(!report.check(FIRST_ORTHOGONALITY).unwrap().passed);
    assert!(!report.check(SECOND_ORTHOGONALITY).unwrap().passed);
}

#[test]
fn structural_errors() {
    let t = bd12(3, 2);
    let mut chars = t.characters().to_vec();
    chars[3].pop();
    assert!(matches!(CharacterTable::new("x", 12, t.classes().to_vec(), chars), Err(TableError::Malformed(_))));
    let mut classes = t.classes().to_vec();
    classes[2].power2 = 17;
    assert!(CharacterTable::new("x", 12, classes, t.characters().to_vec()).is_err());
    let mut chars = t.characters().to_vec();
    chars[1][0] = "E(4)".parse().unwrap();
    assert!(CharacterTable::new("x", 12, t.classes().to_vec(), chars).is_err());
}

#[test]
fn quotients() {
    let t = bd12(3, 2);
    let s3 = t.quotient(&[0, 1]).unwrap();
    assert_eq!(s3.table.order(), 6);
    assert_eq!(s3.table.dims(), &[1, 1, 2]);
    assert_eq!(s3.rows, vec![0, 1, 4]);
    assert_eq!(s3.class_map, vec![0, 0, 1, 1, 2, 2]);
    assert_eq!(s3.table.classes().iter().map(|c| c.size).collect::<Vec<_>>(), vec![1, 3, 2]);

    assert_eq!(t.quotient_table(&[0]).unwrap(), t);

    let big = bd24().quotient(&[0, 1]).unwrap();
    assert_eq!(big.table.order(), 12);
    assert_eq!(big.table.dims(), &[1, 1, 1, 1, 2, 2]);
    assert_eq!(big.rows, vec![0, 1, 2, 3, 6, 7]);
}

#[test]
fn invalid_kernels() {
    let t = bd24();
    assert!(matches!(t.quotient(&[1]), Err(TableError::InvalidKernel(_))));
    // {1, x} is not a union of classes forming a normal subgroup
    assert!(matches!(t.quotient(&[0, 2]), Err(TableError::InvalidKernel(_))));
}

#[test]
fn json_round_trip() {
    let t = bd24();
    let text = t.to_json();
    let back = CharacterTable::from_json(&text).unwrap();
    assert_eq!(back, t);
    assert_eq!(back.to_json(), text);
    let (loaded, report) = CharacterTable::load(&text, false).unwrap();
    assert_eq!(loaded, t);
    assert!(report.passed());
}

#[test]
fn loading_rejects_unverified_tables_unless_forced() {
    let text = bd12(2, 3).to_json();
    assert!(matches!(CharacterTable::load(&text, false), Err(TableError::Unverified(_))));
    let (_, report) = CharacterTable::load(&text, true).unwrap();
    assert!(!report.passed());
    let broken = text.replace("E(4)", "E(0)");
    assert!(matches!(CharacterTable::from_json(&broken), Err(TableError::Value { .. })));
    assert!(matches!(CharacterTable::from_json("{"), Err(TableError::Json(_))));
}

#[test]
fn text_grid() {
    let text = bd12(3, 2).render_text();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "BD:12 (order 12)");
    assert!(lines[1].starts_with("class"));
    assert!(lines[6].contains("E(4)"));
    assert_eq!(lines.len(), 10);
}
