//! Symmetric doubles via numerical duplication: every symmetric T with
//! T/2 = S arises as 2·S ∪ (2·K + b) for an odd b in S with K+K+b ⊆ S,
//! and the least such b gives the unique double of minimal genus.
//!
//! Run with: cargo run --example symmetric_double

use nsgp::duplication::{
    min_genus_symmetric_double, min_genus_symmetric_double_almost_symmetric, numerical_duplication,
    symmetric_doubles,
};
use nsgp::{NumericalSemigroup, RelativeIdeal};

fn main() {
    let s = NumericalSemigroup::from_small_elements(&[0, 5, 7, 8, 10, 12], 12).unwrap();
    println!("S = {s}   (frobenius {})", s.frobenius());

    // all symmetric doubles with b up to f + 2; past f the containment
    // condition always holds, so the search is complete
    let limit = s.frobenius() + 2;
    println!("\nsymmetric doubles with b <= {limit}:");
    for r in symmetric_doubles(&s, limit).unwrap() {
        println!(
            "  b = {:>2}: genus {}, frobenius {}\n          {}",
            r.b, r.genus, r.frobenius, r.double
        );
    }

    let min = min_genus_symmetric_double(&s);
    println!("\nminimal-genus symmetric double (b = {}): genus {}", min.b, min.genus);
    assert_eq!(min.double.quotient(2), s);
    assert_eq!(min.frobenius, 2 * s.frobenius() + min.b);
    assert_eq!(min.genus, s.frobenius() + (min.b + 1) / 2);

    // an explicit duplication along a larger b
    let k = RelativeIdeal::canonical(&s).unwrap();
    let bigger = numerical_duplication(&s, &k, 15).unwrap();
    println!("duplication at b = 15: {bigger}");

    // almost symmetric bases skip the search: the least odd element works
    let almost = NumericalSemigroup::from_small_elements(&[0, 6, 7, 11, 12, 13, 14, 16], 16).unwrap();
    println!("\nS' = {almost}   (almost symmetric)");
    let shortcut = min_genus_symmetric_double_almost_symmetric(&almost).unwrap();
    println!(
        "shortcut minimal double: b = {}, genus {}\n  {}",
        shortcut.b, shortcut.genus, shortcut.double
    );
    assert_eq!(shortcut, min_genus_symmetric_double(&almost));
}
