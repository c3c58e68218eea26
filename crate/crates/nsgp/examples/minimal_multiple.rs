//! Multiples of a numerical semigroup: among all T with T/d = S, find
//! the least possible genus, build a semigroup attaining it, and compare
//! with an exhaustive enumeration.
//!
//! Run with: cargo run --example minimal_multiple

use nsgp::oracle::enumerate_dfolds;
use nsgp::quotient::{construct_min_genus_dfold, expected_min_fold_type, min_genus_dfold_value};
use nsgp::NumericalSemigroup;

fn main() {
    let s = NumericalSemigroup::generated_by(&[3, 7, 8]).unwrap();
    let d = 3;
    println!("S = {s}   (genus {}, frobenius {})", s.genus(), s.frobenius());

    // the closed form: g(S) + ceil((d-1) f / 2)
    let value = min_genus_dfold_value(&s, d).unwrap();
    println!("minimal genus among {d}-folds: {value}");

    // a deterministic witness
    let report = construct_min_genus_dfold(&s, d).unwrap();
    println!(
        "constructed minimizer: {}   (genus {}, frobenius {}, type {})",
        report.fold, report.genus, report.frobenius, report.fold_type
    );

    // every minimizer shares the Frobenius number d * f(S), so an
    // exhaustive search below that ceiling finds them all
    let folds = enumerate_dfolds(&s, d, d * s.frobenius()).unwrap();
    println!("\nall {d}-folds with frobenius exactly {}:", d * s.frobenius());
    for t in &folds {
        let marker = if t.genus() == value { "  << minimal" } else { "" };
        println!("  {t}   genus {}{marker}", t.genus());
    }

    // the type of a minimizer is constrained by the base
    let (lo, hi) = expected_min_fold_type(&s, d).unwrap();
    println!("\ntype of any minimizer lies in [{lo}, {hi}]");

    // the quotient recovers the base from any fold
    assert_eq!(report.fold.quotient(d), s);
    println!("quotient check: constructed fold / {d} = {}", report.fold.quotient(d));
}
