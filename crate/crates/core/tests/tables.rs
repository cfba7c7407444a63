use mckay::catalog::{build, direct_product, regular_character};
use mckay::chartab::check_names;
use mckay::{CharacterTable, ConjClass, Cyclotomic, GroupSpec};

fn table(s: &str) -> CharacterTable {
    build(&s.parse::<GroupSpec>().unwrap()).unwrap()
}

fn c(s: &str) -> Cyclotomic {
    s.parse().unwrap()
}

/// BD:12 written out by hand in the classes `1, -1, x, -x, y, y^2`.
fn bd12_by_hand(x_size: u64, y_size: u64) -> CharacterTable {
    let classes = vec![
        ConjClass::new("1", 1, 0, 0),
        ConjClass::new("-1", 1, 0, 1),
        ConjClass::new("x", x_size, 1, 3),
        ConjClass::new("-x", x_size, 1, 2),
        ConjClass::new("y", y_size, 5, 4),
        ConjClass::new("y^2", y_size, 5, 5),
    ];
    let rows = [
        ["1", "1", "1", "1", "1", "1"],
        ["1", "1", "-1", "-1", "1", "1"],
        ["1", "-1", "E(4)", "-E(4)", "-1", "1"],
        ["1", "-1", "-E(4)", "E(4)", "-1", "1"],
        ["2", "2", "0", "0", "-1", "-1"],
        ["2", "-2", "0", "0", "1", "-1"],
    ];
    let chars = rows.iter().map(|r| r.iter().map(|v| c(v)).collect()).collect();
    CharacterTable::new("BD:12", 12, classes, chars).unwrap()
}

#[test]
fn bd12_matches_hand_computation() {
    let t = bd12_by_hand(3, 2);
    assert!(t.verify().passed());
    assert_eq!(table("BD:12"), t);
}

#[test]
fn swapped_class_sizes_break_orthogonality() {
    let report = bd12_by_hand(2, 3).verify();
    assert!(!report.passed());
    let failing: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
    assert!(failing.contains(&check_names::FIRST_ORTHOGONALITY), "{failing:?}");
    // Sizes still sum to 12 and degrees are unchanged.
    assert!(report.check(check_names::CLASS_SIZES).unwrap().passed);
    assert!(report.check(check_names::DEGREES).unwrap().passed);
}

#[test]
fn sqrt3_in_bd24() {
    let s = c("E(12)-E(12)^5");
    assert_eq!(s.mul_ref(&s), Cyclotomic::from_integer(3));
    let t = table("BD:24");
    assert!(t.characters().iter().flatten().any(|v| *v == s));
}

#[test]
fn catalog_tables_verify() {
    for s in ["C:1", "C:12", "BD:8", "Q8", "BD:36", "2T", "2O", "2I", "C:3xBD:12", "Q8xQ8"] {
        let t = table(s);
        assert!(t.verify().passed(), "{s}");
        assert_eq!(t.order(), s.parse::<GroupSpec>().unwrap().order(), "{s}");
    }
}

#[test]
fn direct_product_matches_catalog() {
    let a = table("C:3");
    let b = table("Q8");
    let p = direct_product(&a, &b);
    assert!(p.verify().passed());
    assert_eq!(p.order(), 24);
    assert_eq!(p.num_classes(), 15);
    assert_eq!(p.characters(), table("C:3xQ8").characters());
}

#[test]
fn regular_character_decomposes_by_degree() {
    for s in ["BD:20", "2O", "C:2xC:6"] {
        let t = table(s);
        let m = regular_character(&t).decompose().unwrap();
        assert_eq!(m, t.dims(), "{s}");
    }
}

#[test]
fn tensor_square_of_natural_plane() {
    // For SU(2) subgroups, V ⊗ V = trivial ⊕ adjoint.
    let t = table("2T");
    let nat = (0..t.num_classes()).find(|&i| t.dims()[i] == 2 && t.fs_indicators().unwrap()[i] == -1).unwrap();
    let v = t.irreducible(nat);
    let m = v.mul(&v).unwrap().decompose().unwrap();
    assert_eq!(m[0], 1);
    assert_eq!(m.iter().zip(t.dims()).map(|(a, d)| a * d).sum::<u64>(), 4);
}

#[test]
fn quotient_by_center() {
    let t = table("BD:24");
    let center: Vec<usize> = (0..t.num_classes()).filter(|&c| t.classes()[c].size == 1).collect();
    assert_eq!(center, [0, 1]);
    let q = t.quotient(&center).unwrap();
    assert_eq!(q.table.order(), 12);
    assert!(q.table.verify().passed());
    // Inflated rows are exactly those trivial on the center.
    for (l, &row) in q.rows.iter().enumerate() {
        for (cl, &qc) in q.class_map.iter().enumerate() {
            assert_eq!(t.character(row)[cl], q.table.character(l)[qc]);
        }
    }
    assert!(t.quotient(&[1]).is_err());
}

#[test]
fn json_round_trip() {
    for s in ["BD:24", "2I", "C:5xC:5"] {
        let t = table(s);
        let back = CharacterTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t, "{s}");
        assert_eq!(back.to_json(), t.to_json(), "{s}");
    }
}

#[test]
fn frobenius_schur_indicators() {
    assert_eq!(table("BD:12").fs_indicators().unwrap(), vec![1, 1, 0, 0, 1, -1]);
    assert_eq!(table("Q8").fs_indicators().unwrap().iter().filter(|&&v| v == -1).count(), 1);
    assert!(table("C:5").fs_indicators().unwrap()[1..].iter().all(|&v| v == 0));
}
