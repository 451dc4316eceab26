//! Acceptance battery: one line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed. Exits
//! non-zero if any criterion disagrees with its recorded expectation; the only
//! expected failure is criterion 2, whose displayed matrix has a sign misprint
//! (see `DISPLAYED_S_MATRIX`).

use std::collections::BTreeMap;
use std::process::ExitCode;

use cubic_brauer::classifier::{
    all_classes, classify_h1, h1_by_bar_cohomology, normalize, StructureKind, SurfaceInput,
};
use cubic_brauer::cohomology::{bar_cohomology, tate_h_minus1, GLattice};
use cubic_brauer::geometry::{action_on_pic, FieldAutomorphism, LineFamily, LineLabel};
use cubic_brauer::suite::{
    full_report, pic_lattice, run_check, s_group, Fault, ReferenceTables, SuiteInput, SuiteReport, CHECK_NAMES,
    DISPLAYED_S_MATRIX,
};
use num_bigint::BigInt;

type Verdict = Result<String, String>;

fn check(report: &SuiteReport, names: &[&str]) -> Verdict {
    for n in names {
        let c = report.get(n).ok_or(format!("{n} missing"))?;
        if let Some(f) = &c.failure {
            return Err(format!("{n}: {f}"));
        }
    }
    Ok(format!("{} pass", names.join(", ")))
}

fn criterion1(report: &SuiteReport) -> Verdict {
    check(report, &["geometry"])?;
    let cert = &report.get("geometry").unwrap().certificate;
    Ok(format!(
        "27 lines, {}-regular, {} edges, blowdown lines skew, [L′(0)] = {}, [L″(0)] = {}",
        cert["degree"], cert["edges"], cert["class_Lp0"], cert["class_Ldp0"]
    ))
}

fn criterion2() -> Verdict {
    let s = action_on_pic(FieldAutomorphism::s()).map_err(|e| e.to_string())?;
    let basis: Vec<Vec<i64>> = ReferenceTables::default().geometry.rank5_basis.iter().map(|v| v.to_vec()).collect();
    let mut mismatches = Vec::new();
    for (i, v) in basis.iter().enumerate() {
        let image: Vec<i64> = s
            .mul_vec(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        let row = GLattice::coordinates_in(&basis, &image).ok_or("s leaves the rank-5 lattice")?;
        for j in 0..5 {
            if row[j] != DISPLAYED_S_MATRIX[i][j] {
                mismatches.push(format!("({i}, {j}): computed {}, displayed {}", row[j], DISPLAYED_S_MATRIX[i][j]));
            }
        }
    }
    if mismatches.is_empty() {
        Ok("matches the displayed matrix entry for entry".into())
    } else {
        Err(format!(
            "{}; the displayed sign contradicts s·h = h, corrected value used by the battery",
            mismatches.join("; ")
        ))
    }
}

fn criterion3() -> Verdict {
    let s = s_group();
    // Pic over the field cut out by w: the w-invariant rank-5 sublattice
    let basis: Vec<Vec<i64>> = ReferenceTables::default().geometry.rank5_basis.iter().map(|v| v.to_vec()).collect();
    let pic = pic_lattice(&s).and_then(|p| p.restrict(&s, &basis)).map_err(|e| e.to_string())?;
    let tate = tate_h_minus1(&pic.int_matrix(FieldAutomorphism::s()), 3).map_err(|e| e.to_string())?;
    let bar = bar_cohomology(&s, &pic, 1).map_err(|e| e.to_string())?;
    if tate.factors != bar || bar != vec![BigInt::from(3)] {
        return Err(format!("Ĥ⁻¹ = {:?}, H¹ = {bar:?}", tate.factors));
    }
    let cases = [((1, 1, 1, 2), StructureKind::Z3Squared), ((1, 1, 2, 3), StructureKind::Z3), ((1, 2, 3, 48), StructureKind::Trivial)];
    let mut seen = Vec::new();
    for ((a, b, c, d), want) in cases {
        let input = SurfaceInput::from_integers(a, b, c, d).map_err(|e| e.to_string())?;
        let n = normalize(&input).map_err(|e| e.to_string())?;
        let bar = h1_by_bar_cohomology(&n.lambda, &n.mu, &n.nu).map_err(|e| e.to_string())?;
        let split = classify_h1(&n.lambda, &n.mu, &n.nu).kind;
        if bar != want || split != want {
            return Err(format!("({a},{b},{c},{d}): bar {bar}, case split {split}, expected {want}"));
        }
        seen.push(format!("({a},{b},{c},{d}) → {bar}"));
    }
    Ok(format!("Ĥ⁻¹ = H¹ = Z/3 for ⟨s⟩ on the rank-5 lattice; {}", seen.join(", ")))
}

fn criterion5(report: &SuiteReport) -> Verdict {
    check(report, &["step1"])?;
    let cert = &report.get("step1").unwrap().certificate;
    Ok(format!(
        "∂φ matches at {} pairs, δ∂φ at {} triples",
        cert["partial_phi_entries_compared"], cert["delta_partial_phi_entries_compared"]
    ))
}

fn criterion6(report: &SuiteReport) -> Verdict {
    check(report, &["steps2to4"])?;
    let cert = &report.get("steps2to4").unwrap().certificate;
    Ok(format!("dψ = (δ∂φ)³ at {} triples; Φ is a μ₃-valued 3-cocycle", cert["d_psi_triples_compared"]))
}

fn criterion7(report: &SuiteReport) -> Verdict {
    check(report, &["generators", "steps2to4"])?;
    if !report.implication.certified {
        return Err("implication not certified".into());
    }
    Ok(format!("r̄Φ cocycle, Ψ ~ r̄Φ with no F₃ witness, r̄Ψ ≠ 0; certified: {}", report.implication.statement))
}

fn criterion8() -> Verdict {
    let triples = |m: usize| {
        let classes = all_classes(m);
        let mut out = Vec::new();
        for l in &classes {
            for u in &classes {
                for n in &classes {
                    out.push(classify_h1(l, u, n).kind);
                }
            }
        }
        out
    };
    let m1 = triples(1);
    if m1.contains(&StructureKind::Z3) {
        return Err("a triple at m = 1 gives Z/3".into());
    }
    let m2 = triples(2);
    let z3 = m2.iter().filter(|k| **k == StructureKind::Z3).count();
    if z3 == 0 {
        return Err("no triple at m = 2 gives Z/3".into());
    }
    Ok(format!("{} triples at m = 1 without Z/3; {z3} of {} triples at m = 2 give Z/3", m1.len(), m2.len()))
}

fn criterion9() -> Verdict {
    let reference = ReferenceTables::default();
    let entries = reference.entries();
    // a check reads only its own slice: confirm each fault touches only its owner,
    // that the owner fails, and (for one fault per check) that nothing else does
    let slice_json = |t: &ReferenceTables| -> BTreeMap<&str, serde_json::Value> {
        BTreeMap::from([
            ("geometry", serde_json::to_value(&t.geometry).unwrap()),
            ("generators", serde_json::to_value(&t.generators).unwrap()),
            ("theorem1", serde_json::to_value(&t.theorem1).unwrap()),
            ("step1", serde_json::to_value(&t.step1).unwrap()),
            ("steps2to4", serde_json::to_value(&t.steps2to4).unwrap()),
        ])
    };
    let base = slice_json(&reference);
    let threads = std::thread::available_parallelism().map_or(4, |n| n.get());
    let problems: Vec<String> = std::thread::scope(|scope| {
        let handles: Vec<_> = entries
            .chunks(entries.len().div_ceil(threads))
            .map(|part| {
                let base = &base;
                let slice_json = &slice_json;
                scope.spawn(move || {
                    let mut bad = Vec::new();
                    for (name, owner) in part {
                        let mut input = SuiteInput::default();
                        input.inject(&Fault::Table(name.clone()));
                        for (check, value) in slice_json(&input.tables) {
                            if (check == *owner) == (value == base[check]) {
                                bad.push(format!("{name} touches {check}"));
                            }
                        }
                        if run_check(owner, &input).unwrap().passed() {
                            bad.push(format!("{name} not caught by {owner}"));
                        }
                    }
                    bad
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
    });
    if let Some(p) = problems.first() {
        return Err(p.clone());
    }
    let mut faults: Vec<Fault> = CHECK_NAMES
        .iter()
        .map(|owner| Fault::Table(entries.iter().find(|(_, o)| o == owner).unwrap().0.clone()))
        .collect();
    faults.push(Fault::Edge(LineLabel::new(LineFamily::Ldp, 0), LineLabel::new(LineFamily::L, 1)));
    for fault in &faults {
        let mut input = SuiteInput::default();
        input.inject(fault);
        let failed: Vec<String> = full_report(&input).checks.into_iter().filter(|c| !c.passed()).map(|c| c.name).collect();
        if failed.len() != 1 {
            return Err(format!("{fault:?} fails {failed:?}"));
        }
    }
    Ok(format!("{} table faults and one incidence fault each flip exactly the owning check", entries.len()))
}

fn main() -> ExitCode {
    let report = full_report(&SuiteInput::default());
    let results: Vec<(u8, Verdict, bool)> = vec![
        (1, criterion1(&report), true),
        (2, criterion2(), false),
        (3, criterion3(), true),
        (4, check(&report, &["theorem1"]).map(|_| "∂′φ′ = symbol on all 9 pairs; div-image has an integer witness mapping to [φ′]".into()), true),
        (5, criterion5(&report), true),
        (6, criterion6(&report), true),
        (7, criterion7(&report), true),
        (8, criterion8(), true),
        (9, criterion9(), true),
    ];
    let mut unexpected = 0;
    for (n, verdict, expected_pass) in &results {
        let note = if verdict.is_ok() == *expected_pass { "" } else { " [UNEXPECTED]" };
        if !note.is_empty() {
            unexpected += 1;
        }
        match verdict {
            Ok(detail) => println!("criterion {n}: PASS — {detail}{note}"),
            Err(detail) => {
                let known = if *expected_pass { "" } else { " [known: misprint in the displayed matrix]" };
                println!("criterion {n}: FAIL — {detail}{known}{note}")
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
