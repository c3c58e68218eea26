//! Run the verification suites from code, with bounds tuned for a quick
//! demonstration, and inspect the structured reports.
//!
//! Run with: cargo run --example verify

use nsgp::oracle::suites::{run_suite, SuiteBounds, SUITE_NAMES};

fn main() {
    // the default bounds are the acceptance configuration; here the
    // sweeps are trimmed for a fast run
    let bounds = SuiteBounds {
        max_genus: 6,
        dfold_brute_genus: 5,
        doubles_brute_genus: 6,
        symmetric_genus: 8,
        harvest_genus: 8,
        sample_count: 50,
        ..SuiteBounds::default()
    };

    println!("available suites: {SUITE_NAMES:?}\n");

    let mut all_passed = true;
    for name in SUITE_NAMES {
        let report = run_suite(name, &bounds).unwrap();
        println!(
            "{:<24} {:>6} instances  {:>3} failures  {:>5} ms  {}",
            report.suite,
            report.instances_checked,
            report.failures.len(),
            report.elapsed_ms,
            if report.passed() { "PASS" } else { "FAIL" },
        );
        for failure in &report.failures {
            println!("    {failure:?}");
        }
        for warning in &report.warnings {
            println!("    warning: {warning}");
        }
        all_passed &= report.passed();
    }

    println!(
        "\n{}",
        if all_passed {
            "every claim checked out against the oracles"
        } else {
            "disagreements found - see the failures above"
        }
    );
    std::process::exit(i32::from(!all_passed));
}
