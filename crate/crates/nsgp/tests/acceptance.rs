//! Acceptance gate: twelve criteria covering the worked examples, the
//! theorem sweeps, and the sampled duplication equivalence. Every
//! comparison is exact integer equality.

use nsgp::duplication::{
    min_genus_symmetric_double, min_genus_symmetric_double_almost_symmetric, symmetric_doubles,
};
use nsgp::formulas::{
    quotient_frobenius_d_symmetric, raw_quotient_frobenius, FormulaError,
};
use nsgp::ideal::{containment_witness, RelativeIdeal};
use nsgp::notation::parse_semigroup;
use nsgp::oracle::suites::{run_suite, SuiteBounds};
use nsgp::oracle::{census, enumerate_by_gap_subsets, enumerate_by_genus, enumerate_dfolds};
use nsgp::quotient::{construct_min_genus_dfold, expected_min_fold_type, min_genus_dfold_value};
use nsgp::NumericalSemigroup;

fn s(text: &str) -> NumericalSemigroup {
    parse_semigroup(text).unwrap()
}

fn run(name: &str) {
    let report = run_suite(name, &SuiteBounds::default()).unwrap();
    assert!(
        report.passed(),
        "suite {name} failed on {} of {} instances: {:?}",
        report.failures.len(),
        report.instances_checked,
        report.failures
    );
    assert!(report.instances_checked > 0);
}

#[test]
fn criterion_01_triple_of_three_six() {
    let base = s("0,3,6->");
    assert_eq!(min_genus_dfold_value(&base, 3), Ok(9));
    let constructed = construct_min_genus_dfold(&base, 3).unwrap();
    assert_eq!(constructed.fold.to_string(), "0,8,9,10,11,13,14,16->");
    assert_eq!(constructed.genus, 9);
    let folds = enumerate_dfolds(&base, 3, 15).unwrap();
    let minimizers: Vec<&NumericalSemigroup> =
        folds.iter().filter(|t| t.genus() == 9).collect();
    assert!(minimizers.len() >= 2);
    assert!(minimizers
        .iter()
        .any(|t| t.to_string() == "0,7,9,10,11,13,14,16->"));
    assert!(minimizers.iter().all(|t| t.frobenius() == 15));
    println!("PASS criterion 01: triple of {{0,3,6->}} has minimal genus 9 with the two known minimizers");
}

#[test]
fn criterion_02_four_folds_with_both_types() {
    let base = s("0,5,6,7,10->");
    let t = s("0,19,20,21,22,23,24,25,26,27,28,29,30,31,33,34,35,37->");
    let t_prime = s("0,14,19,20,21,23,24,25,26,27,28,29,30,31,33,34,35,37->");
    assert_eq!(t.quotient(4), base);
    assert_eq!(t_prime.quotient(4), base);
    assert_eq!(min_genus_dfold_value(&base, 4), Ok(20));
    assert_eq!(t.genus(), 20);
    assert_eq!(t_prime.genus(), 20);
    assert_eq!(t.type_of(), Ok(3));
    assert_eq!(t_prime.type_of(), Ok(2));
    assert_eq!(expected_min_fold_type(&base, 4), Ok((2, 3)));
    println!("PASS criterion 02: both listed 4-folds of {{0,5,6,7,10->}} have genus 20 with types 3 and 2");
}

#[test]
fn criterion_03_canonical_ideal_and_minimal_symmetric_double() {
    let base = s("0,5,7,8,10,12->");
    let k = RelativeIdeal::canonical(&base).unwrap();
    assert_eq!(k.offset(), 0);
    assert_eq!(k.small_shifts(), &[0, 2, 5, 7, 8, 9, 10, 12]);
    assert_eq!(containment_witness(&k, &k, 5), Ok(Some((2, 2))));
    assert_eq!(containment_witness(&k, &k, 7), Ok(Some((0, 2))));
    assert_eq!(containment_witness(&k, &k, 13), Ok(None));
    let min = min_genus_symmetric_double(&base);
    assert_eq!(min.b, 13);
    assert_eq!(min.genus, 18);
    assert_eq!(
        min.double.to_string(),
        "0,10,13,14,16,17,20,23,24,26,27,28,29,30,31,32,33,34,36->"
    );
    assert_eq!(min_genus_dfold_value(&base, 2), Ok(13));
    let fold = construct_min_genus_dfold(&base, 2).unwrap();
    assert_eq!(fold.fold.to_string(), "0,10,13,14,15,16,17,19,20,21,23->");
    assert_eq!(fold.genus, 13);
    println!("PASS criterion 03: canonical ideal, witnesses, b = 13 double, and the minimal 2-fold all match");
}

#[test]
fn criterion_04_almost_symmetric_shortcut() {
    let base = s("0,6,7,11,12,13,14,16->");
    assert_eq!(base.is_almost_symmetric(), Ok(true));
    let shortcut = min_genus_symmetric_double_almost_symmetric(&base).unwrap();
    assert_eq!(shortcut.b, 7);
    assert_eq!(shortcut.genus, 19);
    assert_eq!(
        shortcut.double.to_string(),
        "0,7,12,14,17,19,21,22,24,26,27,28,29,31,32,33,34,35,36,38->"
    );
    assert_eq!(shortcut, min_genus_symmetric_double(&base));
    println!("PASS criterion 04: almost symmetric shortcut yields b = 7, genus 19, matching the general search");
}

#[test]
fn criterion_05_three_symmetric_formula_and_refusal() {
    let base = s("0,6,9,10,12,14->");
    assert!(base.is_d_symmetric(3));
    assert!(!base.is_d_symmetric(4));
    let direct3 = base.quotient(3).frobenius();
    assert_eq!(quotient_frobenius_d_symmetric(&base, 3), Ok(1));
    assert_eq!(direct3, 1);
    let direct4 = base.quotient(4).frobenius();
    assert_eq!(direct4, 2);
    assert_eq!(raw_quotient_frobenius(&base, 4), 1);
    assert_ne!(direct4, raw_quotient_frobenius(&base, 4));
    assert_eq!(
        quotient_frobenius_d_symmetric(&base, 4),
        Err(FormulaError::NotDSymmetric { d: 4 })
    );
    println!("PASS criterion 05: 3-symmetric formula exact, 4-symmetric refused with raw disagreement 1 vs 2");
}

#[test]
fn criterion_06_counterexample_family() {
    for d in 2..=10 {
        let base = s(&format!("0,{}->", d + 2));
        assert_eq!(base.is_almost_symmetric(), Ok(true), "d = {d}");
        let q = base.quotient(d);
        assert_eq!(q.to_string(), "0,2->", "d = {d}");
        assert_eq!(q.frobenius(), 1, "d = {d}");
        assert_eq!(raw_quotient_frobenius(&base, d), -1, "d = {d}");
        assert_ne!(q.frobenius(), raw_quotient_frobenius(&base, d), "d = {d}");
    }
    println!("PASS criterion 06: formula fails on {{0,d+2->}} for every d in 2..=10 (raw -1 vs true 1)");
}

#[test]
fn criterion_07_minimal_genus_theorem_sweep() {
    run("min-genus-dfold");
    println!("PASS criterion 07: minimal-genus theorem sweep (exhaustive to genus 6, constructions to genus 8)");
}

#[test]
fn criterion_08_quotient_frobenius_sweep() {
    run("d-symmetric-frobenius");
    println!("PASS criterion 08: d-symmetric and symmetric/pseudo-symmetric formula sweep to genus 8, d in 2..=6");
}

#[test]
fn criterion_09_corollary_sweeps() {
    run("formula-corollaries");
    println!("PASS criterion 09: two-generator, mod-5 consecutive, and smallest-odd-generator sweeps");
}

#[test]
fn criterion_10_family_formulas() {
    run("family-formulas");
    println!("PASS criterion 10: three-generator family, four-generator harvest, and free arrangements");
}

#[test]
fn criterion_11_enumeration_self_check() {
    assert_eq!(census(8).unwrap(), vec![1, 1, 2, 4, 7, 12, 23, 39, 67]);
    let mut tree: Vec<NumericalSemigroup> = enumerate_by_genus(6).unwrap().collect();
    tree.sort_by(|a, b| (a.genus(), a.small_elements()).cmp(&(b.genus(), b.small_elements())));
    assert_eq!(tree, enumerate_by_gap_subsets(6).unwrap());
    println!("PASS criterion 11: census 1,1,2,4,7,12,23,39,67 with independent enumerations agreeing to genus 6");
}

#[test]
fn criterion_12_duplication_iff_samples() {
    // the symmetric-doubles suite’s sampled phase draws 200 seeded
    // (S, odd b) pairs and asserts validity iff K + K + b ⊆ S, plus the
    // Frobenius, genus, and halving identities on every success
    run("symmetric-doubles");
    let bounds = SuiteBounds::default();
    assert_eq!(bounds.sample_count, 200);
    println!("PASS criterion 12: 200 sampled duplication instances match the containment criterion exactly");
}

#[test]
fn doubles_listing_is_consistent_with_the_minimum() {
    // supporting check: the b = 13 double is the head of the full listing
    let base = s("0,5,7,8,10,12->");
    let all = symmetric_doubles(&base, base.frobenius() + 2).unwrap();
    assert_eq!(all.first().unwrap().b, 13);
    assert_eq!(all.first().unwrap(), &min_genus_symmetric_double(&base));
}
