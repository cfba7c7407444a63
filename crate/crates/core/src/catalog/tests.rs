use super::*;
use crate::testdata::{bd12, bd24};

fn spec(s: &str) -> GroupSpec {
    s.parse().unwrap()
}

fn table(s: &str) -> CharacterTable {
    build(&spec(s)).unwrap()
}

#[test]
fn spec_grammar() {
    assert_eq!(spec("C:5"), GroupSpec::Cyclic(5));
    assert_eq!(spec("BD:12"), GroupSpec::Dicyclic(12));
    assert_eq!(spec("Q8"), GroupSpec::Quaternion8);
    assert_eq!(spec("C:2xC:3"), GroupSpec::Product(Box::new(GroupSpec::Cyclic(2)), Box::new(GroupSpec::Cyclic(3))));
    assert_eq!(spec("2TxC:2xQ8").to_string(), "2TxC:2xQ8");
    for bad in ["BD:13", "BD:4", "C:0", "C:", "D:4", "", "C:2x", "C:-1"] {
        assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
    }
}

#[test]
fn bd12_matches_reference_with_consistent_sizes() {
    assert_eq!(table("BD:12"), bd12(3, 2));
}

#[test]
fn bd24_matches_reference() {
    assert_eq!(table("BD:24"), bd24());
}

#[test]
fn every_small_catalog_table_verifies() {
    let mut specs: Vec<String> = (1..=24).map(|n| format!("C:{n}")).collect();
    specs.extend((2..=12).map(|n| format!("BD:{}", 4 * n)));
    specs.extend(["Q8", "2T", "2O", "2I", "C:2xC:2", "C:3xBD:8", "2TxC:2"].map(String::from));
    for s in specs {
        let t = table(&s);
        let report = t.verify();
        assert!(report.passed(), "{s}\n{}", report.render_text());
        assert_eq!(t.name(), s);
    }
}

#[test]
fn family_dimensions() {
    assert_eq!(table("C:7").dims(), &[1; 7]);
    let bd = table("BD:32");
    assert_eq!(bd.num_classes(), 8 + 3);
    assert_eq!(&bd.dims()[..4], &[1, 1, 1, 1]);
    assert!(bd.dims()[4..].iter().all(|&d| d == 2));
    assert_eq!(table("Q8"), dicyclic(2, "Q8".into()));
    assert_eq!(table("2T").dims(), &[1, 1, 1, 2, 2, 2, 3]);
    assert_eq!(table("2O").dims(), &[1, 1, 2, 2, 2, 3, 3, 4]);
    assert_eq!(table("2I").dims(), &[1, 2, 2, 3, 3, 4, 4, 5, 6]);
    let one = table("C:1");
    assert_eq!(one.num_classes(), 1);
    assert_eq!(one.characters()[0][0], Cyclotomic::one());
}

#[test]
fn direct_products() {
    let v4 = table("C:2xC:2");
    assert_eq!(v4.num_classes(), 4);
    assert_eq!(v4.dims(), &[1, 1, 1, 1]);
    let big = table("C:2xBD:12");
    assert_eq!(big.order(), 24);
    assert_eq!(big.num_classes(), 12);
}

#[test]
fn c2_times_c3_matches_c6_up_to_reordering() {
    let a = table("C:2xC:3");
    let b = table("C:6");
    let column_multisets = |t: &CharacterTable| {
        let mut cols: Vec<Vec<String>> = (0..t.num_classes())
            .map(|c| {
                let mut col: Vec<String> = t.characters().iter().map(|row| row[c].to_string()).collect();
                col.sort();
                col
            })
            .collect();
        cols.sort();
        cols
    };
    assert_eq!(column_multisets(&a), column_multisets(&b));
}

#[test]
fn natural_representations() {
    assert_eq!(natural_rep(&spec("BD:12")).unwrap(), vec![0, 0, 0, 0, 0, 1]);
    assert_eq!(natural_rep(&spec("C:3")).unwrap(), vec![0, 1, 1]);
    assert_eq!(natural_rep(&spec("C:2")).unwrap(), vec![0, 2]);
    assert_eq!(natural_rep(&spec("C:1")).unwrap(), vec![2]);
    assert!(matches!(natural_rep(&spec("C:2xC:2")), Err(CatalogError::NoNaturalRep(_))));
    for s in ["C:1", "C:2", "C:5", "BD:8", "BD:12", "BD:20", "Q8", "2T", "2O", "2I"] {
        let t = table(s);
        let m = natural_rep(&spec(s)).unwrap();
        let chi = t.character_of(&m).unwrap();
        assert_eq!(chi.value(0), &Cyclotomic::from_integer(2), "{s}");
        if s != "C:1" {
            assert_eq!(chi.kernel_classes().unwrap(), vec![0], "{s}");
        }
        assert!(t.is_symplectic(&m).unwrap(), "{s}");
    }
}

#[test]
fn regular_characters() {
    let c2 = table("C:2");
    assert_eq!(regular_character(&c2).values(), &[Cyclotomic::from_integer(2), Cyclotomic::zero()]);
    let t = table("BD:12");
    let reg = regular_character(&t);
    assert_eq!(reg.value(0), &Cyclotomic::from_integer(12));
    assert_eq!(reg.decompose().unwrap(), vec![1, 1, 1, 1, 2, 2]);
    for s in ["2O", "C:2xBD:8", "2I"] {
        let t = table(s);
        assert_eq!(regular_character(&t).decompose().unwrap(), regular_rep(&t));
    }
}
