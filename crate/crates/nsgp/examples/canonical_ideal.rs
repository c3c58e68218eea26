//! Relative ideals and the canonical ideal: the mirror of the gap set,
//! the ideal arithmetic used by duplication, and containment witnesses.
//!
//! Run with: cargo run --example canonical_ideal

use nsgp::ideal::{containment_witness, sum_plus_scalar_contained};
use nsgp::{NumericalSemigroup, RelativeIdeal};

fn main() {
    let s = NumericalSemigroup::from_small_elements(&[0, 5, 7, 8, 10, 12], 12).unwrap();
    println!("S = {s}   (frobenius {}, genus {})", s.frobenius(), s.genus());

    // K = { k : f - k is not in S } mirrors the gap set
    let k = RelativeIdeal::canonical(&s).unwrap();
    println!("K = {k}");
    println!("  threshold {} (every shift beyond it belongs)", k.threshold());
    println!("  is_canonical: {}", k.is_canonical());

    // translation and sums stay within relative-ideal arithmetic
    let shifted = k.translate(3);
    println!("K + 3 = {shifted}");
    let sum = k.sum(&k).unwrap();
    println!("K + K = {sum}");

    // K + K + b lands inside S only for suitable b; the first failing
    // pair of summands is reported as a witness
    for b in [5, 7, 9, 11, 13] {
        match containment_witness(&k, &k, b).unwrap() {
            Some((x, y)) => println!(
                "b = {b:>2}: K+K+{b} escapes S  ({x} + {y} + {b} = {} is outside)",
                x + y + b
            ),
            None => println!("b = {b:>2}: K+K+{b} is contained in S"),
        }
        assert_eq!(
            sum_plus_scalar_contained(&k, &k, b).unwrap(),
            containment_witness(&k, &k, b).unwrap().is_none()
        );
    }

    // the semigroup itself is the smallest relative ideal containing 0
    let e = RelativeIdeal::from_semigroup(&s);
    println!("\nS as an ideal over itself: {e}");
}
