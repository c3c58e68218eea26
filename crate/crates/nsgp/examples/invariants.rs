//! Core invariants of a numerical semigroup: membership, gaps, genus,
//! Frobenius number, Apéry sets, pseudo-Frobenius numbers, and the
//! symmetry classification.
//!
//! Run with: cargo run --example invariants

use nsgp::NumericalSemigroup;

fn describe(s: &NumericalSemigroup) {
    println!("S = {s}");
    println!("  multiplicity     {}", s.multiplicity());
    println!("  frobenius        {}", s.frobenius());
    println!("  conductor        {}", s.conductor());
    println!("  gaps             {:?}", s.gaps());
    println!("  genus            {}", s.genus());
    println!(
        "  generators       {:?}",
        s.minimal_generators().as_slice()
    );
    println!(
        "  apery({})         {:?}",
        s.multiplicity(),
        s.apery_set(s.multiplicity()).unwrap()
    );
    // the natural numbers have no gaps, so the gap-based invariants
    // are refused rather than given conventional values
    match s.pseudo_frobenius() {
        Ok(pf) => {
            println!("  pf               {pf:?} (type {})", s.type_of().unwrap());
            println!(
                "  symmetric        {}",
                s.is_symmetric().unwrap()
            );
            println!(
                "  pseudo-symmetric {}",
                s.is_pseudo_symmetric().unwrap()
            );
            println!(
                "  almost symmetric {}",
                s.is_almost_symmetric().unwrap()
            );
        }
        Err(e) => println!("  pf               refused: {e}"),
    }
    println!();
}

fn main() {
    // a semigroup is usually given by generators...
    let coins = NumericalSemigroup::generated_by(&[6, 9, 20]).unwrap();
    describe(&coins);

    // ...or by its small elements, with a trailing ray
    let running = NumericalSemigroup::from_small_elements(&[0, 5, 6, 7, 10], 10).unwrap();
    describe(&running);

    // symmetric: the gaps mirror the elements inside [0, f]
    describe(&NumericalSemigroup::generated_by(&[5, 7]).unwrap());

    // pseudo-symmetric: f is even and only f/2 breaks the mirror
    describe(&NumericalSemigroup::generated_by(&[3, 4, 5]).unwrap());

    // the degenerate member of the family
    describe(&NumericalSemigroup::natural());
}
