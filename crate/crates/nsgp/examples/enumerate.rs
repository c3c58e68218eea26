//! Enumerate every numerical semigroup up to a genus bound and count
//! the symmetry classes in each layer.
//!
//! Run with: cargo run --example enumerate

use nsgp::oracle::{census, enumerate_by_genus};

fn main() {
    let max_genus = 8;

    println!("census by genus: {:?}", census(max_genus).unwrap());
    println!();
    println!("genus    total   symmetric   pseudo-sym   almost-sym");

    for g in 0..=max_genus {
        let mut total = 0u64;
        let mut symmetric = 0u64;
        let mut pseudo = 0u64;
        let mut almost = 0u64;
        for s in enumerate_by_genus(max_genus).unwrap() {
            if s.genus() != g {
                continue;
            }
            total += 1;
            if s.is_full() {
                continue; // the natural numbers carry no type
            }
            symmetric += u64::from(s.is_symmetric().unwrap());
            pseudo += u64::from(s.is_pseudo_symmetric().unwrap());
            almost += u64::from(s.is_almost_symmetric().unwrap());
        }
        println!("{g:>5} {total:>8} {symmetric:>11} {pseudo:>12} {almost:>12}");
    }

    println!();
    println!("semigroups of genus 4:");
    for s in enumerate_by_genus(4).unwrap() {
        if s.genus() == 4 {
            println!("  {s}");
        }
    }
}
