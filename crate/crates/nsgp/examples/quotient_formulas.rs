//! Closed forms for the Frobenius number of a quotient S/d, from the
//! d-symmetric theorem down to the generator-family special cases.
//!
//! Run with: cargo run --example quotient_formulas

use nsgp::formulas::{
    coefficient_table, fifth_quotient_consecutive, four_gen_symmetric_non_ci_half_frobenius,
    free_semigroup_half_frobenius, half_quotient_frobenius_symmetric, half_quotient_two_generators,
    quotient_frobenius_d_symmetric, raw_quotient_frobenius, sylvester_frobenius,
    three_gen_symmetric_half_frobenius, x_for_consecutive_mod5, FamilyParameters,
};
use nsgp::NumericalSemigroup;

fn main() {
    // the two-generator baseline: f(<a,b>) = ab - a - b
    println!("sylvester:  f(<5,7>)  = {}", sylvester_frobenius(5, 7).unwrap());

    // d-symmetric theorem: f(S/d) = (f - x)/d with x the least element
    // congruent to f modulo d
    let s = NumericalSemigroup::from_small_elements(&[0, 6, 9, 10, 12, 14], 14).unwrap();
    println!("\nS = {s}   (frobenius {})", s.frobenius());
    for d in 2..=5 {
        let direct = s.quotient(d).frobenius();
        let x = s.smallest_element_congruent_to_frobenius(d);
        match quotient_frobenius_d_symmetric(&s, d) {
            Ok(v) => println!(
                "  d = {d}: {d}-symmetric, x = {x:>2}, formula {v} = direct {direct}"
            ),
            Err(e) => println!(
                "  d = {d}: {e}; raw value {} vs direct {direct}",
                raw_quotient_frobenius(&s, d)
            ),
        }
    }

    // the formula does not extend to almost symmetric semigroups:
    // S = {0, d+2 ->} has f(S/d) = 1 but raw value -1
    println!("\ncounterexample family {{0, d+2 ->}}:");
    for d in [2, 5, 10] {
        let almost = NumericalSemigroup::from_small_elements(&[0, d + 2], d + 2).unwrap();
        println!(
            "  d = {d:>2}: almost symmetric {}, direct {}, raw {}",
            almost.is_almost_symmetric().unwrap(),
            almost.quotient(d).frobenius(),
            raw_quotient_frobenius(&almost, d),
        );
    }

    // symmetric semigroups halve along their smallest odd generator
    let sym = NumericalSemigroup::generated_by(&[4, 9]).unwrap();
    println!(
        "\nf(<4,9>/2) = {} (smallest-odd-generator formula)",
        half_quotient_frobenius_symmetric(&sym).unwrap()
    );
    println!(
        "f(<a,b>/2) two-generator split: <4,9> -> {}, <5,7> -> {}",
        half_quotient_two_generators(4, 9).unwrap(),
        half_quotient_two_generators(5, 7).unwrap(),
    );

    // <a, a+1>/5 falls into four closed forms by a mod 5
    println!("\nf(<a,a+1>/5) for consecutive generators:");
    for a in 5..=9 {
        println!(
            "  a = {a}: formula {:>2}, x = {:>2}",
            fifth_quotient_consecutive(a),
            x_for_consecutive_mod5(a)
        );
    }

    // three-generator symmetric family <a m1, a m2, b m1 + c m2>
    let p = FamilyParameters::new(2, 1, 1, 2, 3).unwrap();
    let fam = p.semigroup().unwrap();
    println!(
        "\nfamily {:?} gives {fam}: half-quotient frobenius {}",
        p.generators(),
        three_gen_symmetric_half_frobenius(&p).unwrap()
    );

    // four-generator symmetric non-complete-intersection: the formula
    // depends on the arrangement of the generators
    let arr = [5, 6, 8, 7];
    println!(
        "four-generator arrangement {arr:?}: half-quotient frobenius {}",
        four_gen_symmetric_non_ci_half_frobenius(&arr).unwrap()
    );
    let table = coefficient_table(&arr).unwrap();
    println!("  c-coefficients {:?}, representation rows {:?}", table.c, table.rows);

    // free (telescopic) arrangements
    for gens in [vec![4, 6, 9], vec![8, 12, 18, 27]] {
        println!(
            "free arrangement {gens:?}: half-quotient frobenius {}",
            free_semigroup_half_frobenius(&gens).unwrap()
        );
    }
}
