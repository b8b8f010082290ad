//! Exhaustive acceptance checks, all in exact arithmetic.
//!
//! Each test prints a single `[PASS]`/`[FAIL]` line summarizing its criterion
//! over ℓ = 1, 2, 3, then asserts. Run with `--nocapture` to also see the
//! per-ℓ breakdown.

use std::io::Write;

use hecke_skew::classify::{check_weight_condition, reconstruct, ViolationKind};
use hecke_skew::cyclo::{int, rat};
use hecke_skew::modules::{build_module, Generator, ModuleRep};
use hecke_skew::suite::{self, half_offset_corpus, CriterionResult};
use hecke_skew::{CycNumber, Matrix, SkewShape, Weight};

const ELLS: [u32; 3] = [1, 2, 3];

fn q(r: hecke_skew::Rational) -> CycNumber {
    CycNumber::from_rational(1, r)
}

fn two_one() -> ModuleRep {
    build_module(&SkewShape::from_multipartition(&[vec![2, 1]]).unwrap()).unwrap()
}

/// Prints the summary line and fails the test if anything failed.
fn conclude(id: u32, name: &str, per_ell: Vec<CriterionResult>, spot: Vec<String>) {
    let checked: usize = per_ell.iter().map(|r| r.checked).sum();
    let mut failures: Vec<String> = per_ell.iter().flat_map(|r| r.failures.clone()).collect();
    failures.extend(spot);
    let pass = failures.is_empty() && per_ell.iter().all(|r| r.pass);
    for (ell, r) in ELLS.iter().zip(&per_ell) {
        println!("  ell={ell}: {r}");
    }
    // written straight to the handle so libtest's capture does not swallow it
    let _ = writeln!(
        std::io::stderr(),
        "[{}] criterion {id:>2} {name}: {checked} items checked, {} failures",
        if pass { "PASS" } else { "FAIL" },
        failures.len()
    );
    for f in failures.iter().take(20) {
        println!("    {f}");
    }
    assert!(pass, "criterion {id} ({name}) failed: {:?}", failures.first());
}

#[test]
fn criterion_01_relations() {
    let per_ell = ELLS.iter().map(|&l| suite::relations(l, 4)).collect();
    let mut spot = Vec::new();
    let half: usize = ELLS.iter().map(|&l| half_offset_corpus(l, 4).len()).sum();
    if half < 5 {
        spot.push(format!("only {half} half-offset shapes in the corpus"));
    }
    // negative control: a perturbed s_2 must be caught with a nonzero witness
    let m = two_one();
    let mut bad = m.s()[1].clone();
    bad.add_to(0, 0, &q(int(1)));
    let r = m.with_s(2, bad).verify_relations().unwrap();
    match r.failures().find(|c| c.relation == "s2^2=1") {
        Some(c) if c.witness.as_ref().is_some_and(|w| !w.value.is_zero()) => {}
        _ => spot.push("corrupted s_2 not detected by s2^2=1".into()),
    }
    conclude(1, "relations", per_ell, spot);
}

#[test]
fn criterion_02_intertwiners() {
    let per_ell = ELLS.iter().map(|&l| suite::intertwiners(l, 4)).collect();
    let mut spot = Vec::new();
    let tau = two_one().generator_matrix(Generator::Tau(2)).unwrap();
    if &tau * &tau != Matrix::scalar(1, 2, &q(rat(3, 4))) {
        spot.push("tau_2^2 on (2,1) is not 3/4 I".into());
    }
    conclude(2, "intertwiners", per_ell, spot);
}

#[test]
fn criterion_03_jucys_murphy() {
    let per_ell = ELLS.iter().map(|&l| suite::jucys_murphy(l, 4)).collect();
    conclude(3, "jucys-murphy", per_ell, Vec::new());
}

#[test]
fn criterion_04_hook_formula() {
    let per_ell = ELLS.iter().map(|&l| suite::hook_formula(l, 6)).collect();
    conclude(4, "hook-formula", per_ell, Vec::new());
}

#[test]
fn criterion_05_irreducibility() {
    let per_ell = ELLS.iter().map(|&l| suite::irreducibility(l, 4)).collect();
    let mut spot = Vec::new();
    let m = two_one();
    let c = m.direct_sum(&m).unwrap().commutant_dimension();
    if c != 4 {
        spot.push(format!("double of (2,1) has commutant dimension {c}, expected 4"));
    }
    conclude(5, "irreducibility", per_ell, spot);
}

#[test]
fn criterion_06_classification_roundtrip() {
    let per_ell = ELLS.iter().map(|&l| suite::roundtrip(l, 5)).collect();
    let mut spot = Vec::new();
    let w = Weight::new(1, vec![int(0), int(1), int(-1)], vec![0, 0, 0]).unwrap();
    match reconstruct(&w, 1) {
        Ok((d, t)) if d == SkewShape::from_multipartition(&[vec![2, 1]]).unwrap() => {
            if t.labels() != [1, 2, 3] {
                spot.push(format!("(0,1,-1) gives labels {:?}", t.labels()));
            }
        }
        other => spot.push(format!("(0,1,-1) reconstructs to {other:?}")),
    }
    conclude(6, "classification-roundtrip", per_ell, spot);
}

#[test]
fn criterion_07_rejection() {
    let per_ell = ELLS.iter().map(|&l| suite::rejection(l, 4)).collect();
    let mut spot = Vec::new();
    let w = Weight::new(1, vec![int(0), int(0)], vec![0, 0]).unwrap();
    match check_weight_condition(&w, 1) {
        Err(v) if v.kind == ViolationKind::AdjacentEqual && v.recheck(&w, 1) => {}
        other => spot.push(format!("(0,0) gives {other:?}")),
    }
    if reconstruct(&w, 1).is_ok() {
        spot.push("(0,0) reconstructed".into());
    }
    conclude(7, "rejection", per_ell, spot);
}

#[test]
fn criterion_08_tableau_lemmas() {
    let per_ell = ELLS.iter().map(|&l| suite::tableau_lemmas(l, 5, 6)).collect();
    conclude(8, "tableau-lemmas", per_ell, Vec::new());
}

#[test]
fn criterion_09_twists() {
    let per_ell = ELLS.iter().map(|&l| suite::twists(l, 4)).collect();
    conclude(9, "twists", per_ell, Vec::new());
}

#[test]
fn criterion_10_central_character() {
    let per_ell = ELLS.iter().map(|&l| suite::central_character(l, 4)).collect();
    let mut spot = Vec::new();
    let (eu, ez) = two_one().central_character().unwrap();
    if eu != [q(int(0)), q(int(-1)), q(int(0))] || ez != [q(int(3)), q(int(3)), q(int(1))] {
        spot.push(format!("(2,1): e(u) = {eu:?}, e(zeta) = {ez:?}"));
    }
    conclude(10, "central-character", per_ell, spot);
}
