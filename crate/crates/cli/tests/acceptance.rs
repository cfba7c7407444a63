//! Acceptance criteria 1-8, one PASS/FAIL line each.

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use mckay::catalog::{build, natural_rep, regular_rep};
use mckay::chartab::check_names;
use mckay::galois::{factor_over_q, solvability, Verdict, DEFAULT_PRIME_BUDGET};
use mckay::mckay::{
    component_count, component_partition, dual_group_action, dual_multiplicities, eigen_check, kernel_classes,
    mckay_matrix, walk_check, DualAction,
};
use mckay::quiver::{
    ade_classify, is_automorphism, mckay_obstruction_battery, obstruction_names, quiver_isomorphic,
    reduced_weight_vector, AdeType,
};
use mckay::{CharacterTable, ConjClass, Cyclotomic, GroupSpec, IntPolynomial};

type Checked = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table(s: &str) -> CharacterTable {
    build(&s.parse::<GroupSpec>().unwrap()).unwrap()
}

fn irr(t: &CharacterTable, k: usize) -> Vec<u64> {
    let mut v = vec![0; t.num_classes()];
    v[k - 1] = 1;
    v
}

fn values(rows: &[&[&str]]) -> Vec<Vec<Cyclotomic>> {
    rows.iter().map(|r| r.iter().map(|v| v.parse().unwrap()).collect()).collect()
}

/// The BD:12 table in the usual presentation, with the given sizes for the
/// x- and y-classes. The commonly printed sizes (2, 3) are swapped.
fn bd12_table(x_size: u64, y_size: u64) -> CharacterTable {
    let classes = vec![
        ConjClass::new("1", 1, 0, 0),
        ConjClass::new("-1", 1, 0, 1),
        ConjClass::new("x", x_size, 1, 3),
        ConjClass::new("-x", x_size, 1, 2),
        ConjClass::new("y", y_size, 5, 4),
        ConjClass::new("y^2", y_size, 5, 5),
    ];
    let chars = values(&[
        &["1", "1", "1", "1", "1", "1"],
        &["1", "1", "-1", "-1", "1", "1"],
        &["1", "-1", "E(4)", "-E(4)", "-1", "1"],
        &["1", "-1", "-E(4)", "E(4)", "-1", "1"],
        &["2", "2", "0", "0", "-1", "-1"],
        &["2", "-2", "0", "0", "1", "-1"],
    ]);
    CharacterTable::new("BD:12", 12, classes, chars).unwrap()
}

/// Expected BD:24 values; √3 written as `E(12)-E(12)^5`.
fn bd24_values() -> Vec<Vec<Cyclotomic>> {
    let s = "E(12)-E(12)^5";
    let m = "-E(12)+E(12)^5";
    values(&[
        &["1", "1", "1", "1", "1", "1", "1", "1", "1"],
        &["1", "1", "1", "-1", "-1", "1", "-1", "1", "-1"],
        &["1", "1", "-1", "1", "-1", "1", "-1", "1", "-1"],
        &["1", "1", "-1", "-1", "1", "1", "1", "1", "1"],
        &["2", "-2", "0", "0", s, "1", "0", "-1", m],
        &["2", "-2", "0", "0", m, "1", "0", "-1", s],
        &["2", "2", "0", "0", "1", "-1", "-2", "-1", "1"],
        &["2", "2", "0", "0", "-1", "-1", "2", "-1", "-1"],
        &["2", "-2", "0", "0", "0", "-2", "0", "2", "0"],
    ])
}

fn criterion1() -> Checked {
    let start = Instant::now();
    let mut cases: Vec<(String, AdeType)> = (2..=12).map(|n| (format!("C:{n}"), AdeType::A(n - 1))).collect();
    cases.extend((2..=8).map(|n| (format!("BD:{}", 4 * n), AdeType::D(n + 2))));
    cases.extend([("2T".into(), AdeType::E6), ("2O".into(), AdeType::E7), ("2I".into(), AdeType::E8)]);
    for (s, expected) in &cases {
        let spec: GroupSpec = s.parse().unwrap();
        let t = build(&spec).unwrap();
        let q = mckay_matrix(&t, &natural_rep(&spec).unwrap()).map_err(|e| e.to_string())?.to_quiver();
        let got = ade_classify(&q);
        ensure(got == Some(*expected), || format!("{s}: expected {expected}, got {got:?}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{} groups classified in {:.2?}", cases.len(), elapsed))
}

fn criterion2() -> Checked {
    let bd12 = table("BD:12");
    ensure(bd12.characters() == bd12_table(2, 3).characters(), || {
        "BD:12 values differ from the reference table".into()
    })?;
    ensure(bd12 == bd12_table(3, 2), || "BD:12 differs from the reference table with sizes (3, 2)".into())?;
    let bd24 = table("BD:24");
    ensure(bd24.characters() == bd24_values().as_slice(), || "BD:24 values differ from the reference table".into())?;
    let sizes: Vec<u64> = bd24.classes().iter().map(|c| c.size).collect();
    ensure(sizes == [1, 1, 6, 6, 2, 2, 2, 2, 2], || format!("BD:24 sizes {sizes:?}"))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let printed = dir.path().join("bd12_swapped_sizes.json");
    std::fs::write(&printed, bd12_table(2, 3).to_json()).map_err(|e| e.to_string())?;
    let out =
        Command::new(env!("CARGO_BIN_EXE_mckay")).arg("verify").arg(&printed).output().map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(1), || format!("verify exit {:?}", out.status.code()))?;
    ensure(text.contains(check_names::FIRST_ORTHOGONALITY), || format!("no orthogonality failure in\n{text}"))?;
    let catalog = dir.path().join("bd12.json");
    std::fs::write(&catalog, bd12.to_json()).map_err(|e| e.to_string())?;
    let ok =
        Command::new(env!("CARGO_BIN_EXE_mckay")).arg("verify").arg(&catalog).output().map_err(|e| e.to_string())?;
    ensure(ok.status.code() == Some(0), || "catalog BD:12 file did not verify".into())?;
    Ok("BD:12 and BD:24 match the reference tables; swapped class sizes fail verify with exit 1".into())
}

fn criterion3() -> Checked {
    let t = table("BD:24");
    let rho = irr(&t, 7);
    let count = component_count(&t, &rho).map_err(|e| e.to_string())?;
    ensure(count == 2, || format!("component count {count}"))?;
    let q = mckay_matrix(&t, &rho).map_err(|e| e.to_string())?;
    let blocks = component_partition(&q).map_err(|e| e.to_string())?;
    let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
    ensure(sizes == [6, 3], || format!("block sizes {sizes:?}"))?;
    ensure(blocks[1] == [4, 5, 8], || format!("minor block {:?}", blocks[1]))?;
    let minor = q.to_quiver().induced(&blocks[1]);
    ensure(minor.adjacency() == [vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 0]], || {
        format!("minor adjacency {:?}", minor.adjacency())
    })?;
    let w = reduced_weight_vector(&minor).map_err(|e| e.to_string())?.ok_or("no reduced weights")?;
    ensure(w.weights == [1, 1, 1], || format!("weights {:?}", w.weights))?;
    let report = mckay_obstruction_battery(&minor, DEFAULT_PRIME_BUDGET);
    let failed: Vec<&str> = report.failures().map(|t| t.name).collect();
    ensure(failed == [obstruction_names::WEIGHT_ONE_ORBIT], || format!("failed tests {failed:?}"))?;
    Ok(format!(
        "2 components of sizes 6 and 3, k = {}, weights (1,1,1), battery fails only the weight-1 orbit test",
        w.k
    ))
}

fn criterion4() -> Checked {
    let t = table("BD:12");
    let a3 = mckay_matrix(&t, &irr(&t, 3)).map_err(|e| e.to_string())?;
    ensure(!a3.is_symmetric(), || "Γ_σ3 is symmetric".into())?;
    let a5 = mckay_matrix(&t, &irr(&t, 5)).map_err(|e| e.to_string())?;
    ensure(a5.is_symmetric(), || "Γ_σ5 is not symmetric".into())?;
    ensure((0..6).any(|i| a5.adjacency[i][i] % 2 == 1), || "Γ_σ5 has no odd loop count".into())?;
    let a6 = mckay_matrix(&t, &irr(&t, 6)).map_err(|e| e.to_string())?;
    ensure(a6.is_symmetric(), || "Γ_σ6 is not symmetric".into())?;
    ensure((0..6).all(|i| a6.adjacency[i][i] % 2 == 0), || "Γ_σ6 has an odd loop count".into())?;
    ensure(t.is_symplectic(&irr(&t, 6)).map_err(|e| e.to_string())?, || "σ6 not symplectic".into())?;
    Ok("σ3 directed; σ5 symmetric with odd loops; σ6 symmetric, even diagonal, symplectic".into())
}

fn criterion5() -> Checked {
    let start = Instant::now();
    let quintic: IntPolynomial = "x^5+2*x^4-44*x^3-40*x^2+400*x+128".parse().unwrap();
    let v = solvability(&quintic, DEFAULT_PRIME_BUDGET).map_err(|e| e.to_string())?;
    ensure(v.verdict == Verdict::NotSolvable, || format!("verdict {:?}", v.verdict))?;
    let cert = v.certificates().next().ok_or("no certificate")?;
    ensure(cert.replay(), || "certificate does not replay".into())?;
    let product = "x-8".parse::<IntPolynomial>().unwrap().mul(&quintic);
    let fz = factor_over_q(&product).map_err(|e| e.to_string())?;
    let expected = vec![("x-8".parse().unwrap(), 1), (quintic.clone(), 1)];
    ensure(fz.factors == expected, || format!("factors {:?}", fz.factors))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "NotSolvable via p = {} with cycle type {:?}; (x-8)·quintic factors as printed; {:.2?}",
        cert.witness.prime, cert.witness.pattern, elapsed
    ))
}

/// Base catalog groups of order at most `n`, as (spec, order).
fn base_groups(n: u64) -> Vec<(String, u64)> {
    let mut out: Vec<(String, u64)> = (1..=n).map(|k| (format!("C:{k}"), k)).collect();
    out.extend((2..=n / 4).map(|k| (format!("BD:{}", 4 * k), 4 * k)));
    out.push(("Q8".into(), 8));
    out.extend([("2T", 24), ("2O", 48), ("2I", 120)].into_iter().filter(|g| g.1 <= n).map(|(s, o)| (s.into(), o)));
    out
}

/// Every base group of order at most `n`, every product of two nontrivial
/// base groups within the bound, and the elementary abelian and mixed
/// products with three or four factors.
fn catalog_up_to(n: u64) -> Vec<String> {
    let base = base_groups(n);
    let mut specs: Vec<String> = base.iter().map(|g| g.0.clone()).collect();
    let factors: Vec<&(String, u64)> = base.iter().filter(|g| g.1 > 1).collect();
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            if a.1 * b.1 <= n {
                specs.push(format!("{}x{}", a.0, b.0));
            }
        }
    }
    let longer =
        [("C:2xC:2xC:2", 8), ("C:2xC:2xC:4", 16), ("C:2xC:2xC:6", 24), ("C:2xC:2xQ8", 32), ("C:2xC:2xC:2xC:2", 16)];
    specs.extend(longer.iter().filter(|g| g.1 <= n).map(|g| g.0.to_string()));
    specs
}

fn criterion6() -> Checked {
    let specs = catalog_up_to(24);
    for s in &specs {
        let t = table(s);
        let a = mckay_matrix(&t, &regular_rep(&t)).map_err(|e| e.to_string())?.adjacency;
        let d = t.dims();
        ensure((0..d.len()).all(|i| (0..d.len()).all(|j| a[i][j] == d[i] * d[j])), || format!("{s}: a_ij ≠ d_i d_j"))?;
    }
    let c4 = table("C:4");
    let v4 = table("C:2xC:2");
    let q1 = mckay_matrix(&c4, &regular_rep(&c4)).map_err(|e| e.to_string())?.to_quiver();
    let q2 = mckay_matrix(&v4, &regular_rep(&v4)).map_err(|e| e.to_string())?.to_quiver();
    ensure(quiver_isomorphic(&q1, &q2, true).is_some(), || "C:4 and C:2xC:2 regular quivers differ".into())?;
    Ok(format!("{} groups of order ≤ 24; C:4 ≅ C:2xC:2 regular quivers", specs.len()))
}

fn sweep_one(
    t: &CharacterTable,
    k: usize,
    actions: &[DualAction],
    cache: &mut HashMap<IntPolynomial, Verdict>,
) -> Result<(), String> {
    let name = t.name();
    let rho = irr(t, k);
    let q = mckay_matrix(t, &rho).map_err(|e| e.to_string())?;
    ensure(eigen_check(&q).passed(), || format!("{name} χ{k}: eigen check"))?;
    let blocks = component_partition(&q).map_err(|e| format!("{name} χ{k}: {e}"))?;
    let kernel = kernel_classes(&q);
    ensure(blocks.len() == kernel.len(), || format!("{name} χ{k}: blocks vs kernel"))?;
    walk_check(&q, 3).map_err(|e| format!("{name} χ{k}: {e}"))?;
    let dual = mckay_matrix(t, &dual_multiplicities(t, &rho).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let r = t.num_classes();
    ensure((0..r).all(|i| (0..r).all(|j| q.adjacency[i][j] == dual.adjacency[j][i])), || {
        format!("{name} χ{k}: transpose differs from dual quiver")
    })?;
    let quiver = q.to_quiver();
    for a in actions {
        ensure(is_automorphism(&quiver, &a.permutation, quiver.weights()), || {
            format!("{name} χ{k}: χ{} does not act by automorphisms", a.character + 1)
        })?;
    }
    if kernel == [0] {
        let w = reduced_weight_vector(&quiver).map_err(|e| e.to_string())?.ok_or("no weights")?;
        ensure(w.weights == t.dims(), || format!("{name} χ{k}: reduced weights {:?}", w.weights))?;
    }
    for b in &blocks {
        let f = quiver.induced(b).char_poly();
        let v = match cache.get(&f) {
            Some(v) => *v,
            None => {
                let v = solvability(&f, DEFAULT_PRIME_BUDGET).map_err(|e| e.to_string())?.verdict;
                cache.insert(f.clone(), v);
                v
            }
        };
        ensure(v != Verdict::NotSolvable, || format!("{name} χ{k}: component char poly {f} not solvable"))?;
    }
    Ok(())
}

fn simply_transitive(t: &CharacterTable, actions: &[DualAction]) -> Result<(), String> {
    let linear: Vec<usize> = (0..t.num_classes()).filter(|&i| t.dims()[i] == 1).collect();
    for &v in &linear {
        let mut images: Vec<usize> = actions.iter().map(|a| a.permutation[v]).collect();
        images.sort_unstable();
        ensure(images == linear, || format!("{}: dual group not simply transitive at χ{}", t.name(), v + 1))?;
    }
    Ok(())
}

fn criterion7() -> Checked {
    let start = Instant::now();
    let specs = catalog_up_to(48);
    let mut cache = HashMap::new();
    let mut pairs = 0;
    for s in &specs {
        let t = table(s);
        let actions = dual_group_action(&t, None).map_err(|e| e.to_string())?;
        simply_transitive(&t, &actions)?;
        for k in 1..=t.num_classes() {
            sweep_one(&t, k, &actions, &mut cache)?;
            pairs += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    let unknown = cache.values().filter(|&&v| v == Verdict::Unknown).count();
    Ok(format!(
        "{pairs} (group, ρ) pairs over {} groups in {:.2?}; {} distinct component polynomials, {unknown} unknown, none NotSolvable",
        specs.len(),
        elapsed,
        cache.len()
    ))
}

fn criterion8() -> Checked {
    let t = table("BD:12");
    let nu = t.fs_indicators().map_err(|e| e.to_string())?;
    let got = [nu[0], nu[2], nu[4], nu[5]];
    ensure(got == [1, 0, 1, -1], || format!("indicators {nu:?}"))?;
    Ok("ν(χ1)=1, ν(χ3)=0, ν(χ5)=1, ν(χ6)=-1".into())
}

fn main() {
    let criteria: [(&str, fn() -> Checked); 8] = [
        ("McKay correspondence", criterion1),
        ("reference tables", criterion2),
        ("disconnected quiver of BD:24", criterion3),
        ("BD:12 quiver symmetry", criterion4),
        ("quintic solvability", criterion5),
        ("regular representations", criterion6),
        ("property sweep", criterion7),
        ("Frobenius-Schur indicators", criterion8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
