//! Command-line interface.
//!
//! Exit codes: `0` success; `1` verification suites ran and reported
//! failures; `2` unusable invocation — parse errors, invalid notation,
//! or a request the library refuses (invalid `b`, bounds out of range,
//! premises not met).

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::duplication::{
    min_genus_symmetric_double, numerical_duplication, symmetric_doubles, DoubleReport,
};
use crate::formulas::quotient_frobenius_d_symmetric;
use crate::ideal::RelativeIdeal;
use crate::notation::{parse_element_set, parse_generator_list};
use crate::oracle::suites::{run_all, run_suite, SuiteBounds, VerificationReport};
use crate::oracle::enumerate_dfolds;
use crate::quotient::construct_min_genus_dfold;
use crate::semigroup::NumericalSemigroup;

#[derive(Parser)]
#[command(
    name = "nsgp",
    version,
    about = "Numerical semigroup quotients, multiples, and duplications"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SemigroupArg {
    /// Generators, e.g. "5,7,9"
    #[arg(long, value_name = "LIST", conflicts_with = "set", required_unless_present = "set")]
    gens: Option<String>,
    /// Small elements in arrow notation, e.g. "0,5,7,8,10,12->"
    #[arg(long, value_name = "SET")]
    set: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a numerical semigroup
    Info {
        #[command(flatten)]
        semigroup: SemigroupArg,
        /// Also report d-symmetry for these divisors, e.g. "3" or "3,4"
        #[arg(long, value_name = "LIST")]
        d: Option<String>,
    },
    /// The quotient S/d
    Quotient {
        #[command(flatten)]
        semigroup: SemigroupArg,
        /// Divisor (at least 1)
        #[arg(long)]
        d: i64,
    },
    /// The d-fold of S with minimal genus
    Multiple {
        #[command(flatten)]
        semigroup: SemigroupArg,
        /// Fold multiplier (at least 2)
        #[arg(long)]
        d: i64,
    },
    /// Every d-fold of S with Frobenius number at most the bound
    Multiples {
        #[command(flatten)]
        semigroup: SemigroupArg,
        /// Fold multiplier (at least 1)
        #[arg(long)]
        d: i64,
        /// Frobenius ceiling for the enumeration
        #[arg(long, value_name = "F")]
        f_bound: i64,
    },
    /// The numerical duplication of S with its canonical ideal
    Duplicate {
        #[command(flatten)]
        semigroup: SemigroupArg,
        /// Odd element of S to duplicate along (default: the least valid b)
        #[arg(long)]
        b: Option<i64>,
    },
    /// Symmetric doubles of S for every valid b up to a limit
    Doubles {
        #[command(flatten)]
        semigroup: SemigroupArg,
        /// Largest b to try (at least frobenius + 2)
        #[arg(
            long,
            value_name = "B",
            conflicts_with = "min_genus",
            required_unless_present = "min_genus"
        )]
        b_limit: Option<i64>,
        /// Report only the symmetric double of least genus
        #[arg(long)]
        min_genus: bool,
    },
    /// Frobenius number of S/d by the d-symmetric formula
    FrobeniusQuotient {
        #[command(flatten)]
        semigroup: SemigroupArg,
        /// Divisor (at least 1)
        #[arg(long)]
        d: i64,
    },
    /// Run verification suites against the brute-force oracles
    Verify {
        /// Suite name (see --help for the list), or use --all
        #[arg(
            long,
            value_name = "NAME",
            conflicts_with = "all",
            required_unless_present = "all"
        )]
        suite: Option<String>,
        /// Run every suite
        #[arg(long)]
        all: bool,
        /// Override the genus ceiling of the main sweeps
        #[arg(long, value_name = "G")]
        max_genus: Option<i64>,
        /// Override the fold multipliers of the d-fold sweeps, e.g. "2,3"
        #[arg(long, value_name = "LIST")]
        d: Option<String>,
    },
}

/// Parses `std::env::args` and executes; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 2 on usage errors and 0 on --help/--version
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn load(arg: &SemigroupArg) -> Result<NumericalSemigroup, String> {
    if let Some(gens) = &arg.gens {
        let list = parse_generator_list(gens).map_err(|e| e.to_string())?;
        NumericalSemigroup::from_generators(&list).map_err(|e| e.to_string())
    } else {
        let set = arg.set.as_deref().expect("clap enforces gens xor set");
        parse_element_set(set).map_err(|e| e.to_string())
    }
}

fn execute(cli: &Cli) -> Result<i32, String> {
    match &cli.command {
        Command::Info { semigroup, d } => {
            let ds = match d {
                Some(list) => parse_d_list(list, 1)?,
                None => Vec::new(),
            };
            let s = load(semigroup)?;
            print_info(&s, &ds, cli.format);
            Ok(0)
        }
        Command::Quotient { semigroup, d } => {
            if *d < 1 {
                return Err(format!("divisor must be at least 1, got {d}"));
            }
            let s = load(semigroup)?;
            let q = s.quotient(*d);
            match cli.format {
                Format::Text => println!("{q}"),
                Format::Json => print_json(&json!({
                    "base": s,
                    "d": d,
                    "quotient": q,
                    "frobenius": q.frobenius(),
                    "genus": q.genus(),
                })),
            }
            Ok(0)
        }
        Command::Multiple { semigroup, d } => {
            let s = load(semigroup)?;
            let report = construct_min_genus_dfold(&s, *d).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => {
                    println!("base: {}", report.base);
                    println!("d: {}", report.d);
                    println!("fold: {}", report.fold);
                    println!("genus: {}", report.genus);
                    println!("frobenius: {}", report.frobenius);
                    println!("type: {}", report.fold_type);
                }
                Format::Json => print_json(
                    &serde_json::to_value(&report).expect("report serializes"),
                ),
            }
            Ok(0)
        }
        Command::Multiples {
            semigroup,
            d,
            f_bound,
        } => {
            if *d < 1 {
                return Err(format!("fold multiplier must be at least 1, got {d}"));
            }
            let s = load(semigroup)?;
            let folds = enumerate_dfolds(&s, *d, *f_bound).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => {
                    for t in &folds {
                        println!("{t}");
                    }
                }
                Format::Json => print_json(&json!({
                    "base": s,
                    "d": d,
                    "f_bound": f_bound,
                    "count": folds.len(),
                    "folds": folds,
                })),
            }
            Ok(0)
        }
        Command::Duplicate { semigroup, b } => {
            let s = load(semigroup)?;
            let report = match b {
                Some(b) => {
                    let k = RelativeIdeal::canonical(&s).map_err(|e| e.to_string())?;
                    let double =
                        numerical_duplication(&s, &k, *b).map_err(|e| e.to_string())?;
                    DoubleReport {
                        base: s,
                        b: *b,
                        genus: double.genus(),
                        frobenius: double.frobenius(),
                        double,
                    }
                }
                None => min_genus_symmetric_double(&s),
            };
            match cli.format {
                Format::Text => {
                    println!("base: {}", report.base);
                    println!("b: {}", report.b);
                    println!("double: {}", report.double);
                    println!("genus: {}", report.genus);
                    println!("frobenius: {}", report.frobenius);
                }
                Format::Json => print_json(
                    &serde_json::to_value(&report).expect("report serializes"),
                ),
            }
            Ok(0)
        }
        Command::Doubles {
            semigroup,
            b_limit,
            min_genus,
        } => {
            let s = load(semigroup)?;
            if *min_genus {
                let r = min_genus_symmetric_double(&s);
                match cli.format {
                    Format::Text => print_double_line(&r),
                    Format::Json => {
                        print_json(&serde_json::to_value(&r).expect("report serializes"))
                    }
                }
                return Ok(0);
            }
            let b_limit = b_limit.expect("clap enforces b_limit xor min_genus");
            let reports = symmetric_doubles(&s, b_limit).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => {
                    for r in &reports {
                        print_double_line(r);
                    }
                }
                Format::Json => print_json(&json!({
                    "base": s,
                    "b_limit": b_limit,
                    "count": reports.len(),
                    "doubles": reports,
                })),
            }
            Ok(0)
        }
        Command::FrobeniusQuotient { semigroup, d } => {
            if *d < 1 {
                return Err(format!("divisor must be at least 1, got {d}"));
            }
            let s = load(semigroup)?;
            let frobenius = quotient_frobenius_d_symmetric(&s, *d).map_err(|e| e.to_string())?;
            let x = s.smallest_element_congruent_to_frobenius(*d);
            match cli.format {
                Format::Text => {
                    println!("base: {s}");
                    println!("d: {d}");
                    println!("x: {x}");
                    println!("frobenius: {frobenius}");
                }
                Format::Json => print_json(&json!({
                    "base": s,
                    "d": d,
                    "x": x,
                    "frobenius": frobenius,
                })),
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            all,
            max_genus,
            d,
        } => {
            let mut bounds = SuiteBounds::default();
            if let Some(g) = max_genus {
                if *g < 0 {
                    return Err(format!("genus ceiling must be nonnegative, got {g}"));
                }
                bounds.max_genus = *g;
            }
            if let Some(list) = d {
                bounds.d_values = parse_d_list(list, 2)?;
            }
            let reports = if *all {
                run_all(&bounds).map_err(|e| e.to_string())?
            } else {
                let name = suite.as_deref().expect("clap enforces suite xor all");
                vec![run_suite(name, &bounds).map_err(|e| e.to_string())?]
            };
            let failed = reports.iter().filter(|r| !r.passed()).count();
            match cli.format {
                Format::Text => {
                    for (i, r) in reports.iter().enumerate() {
                        if i > 0 {
                            println!();
                        }
                        print_report_text(r);
                    }
                    if reports.len() > 1 {
                        println!();
                        if failed == 0 {
                            println!("all {} suites passed", reports.len());
                        } else {
                            println!("{failed} of {} suites failed", reports.len());
                        }
                    }
                }
                Format::Json => {
                    if *all {
                        print_json(&serde_json::to_value(&reports).expect("reports serialize"));
                    } else {
                        print_json(
                            &serde_json::to_value(&reports[0]).expect("report serializes"),
                        );
                    }
                }
            }
            Ok(if failed > 0 { 1 } else { 0 })
        }
    }
}

fn print_info(s: &NumericalSemigroup, ds: &[i64], format: Format) {
    match format {
        Format::Text => {
            println!("semigroup: {s}");
            println!("frobenius: {}", s.frobenius());
            println!("genus: {}", s.genus());
            println!(
                "generators: {}",
                join(s.minimal_generators().as_slice())
            );
            match s.type_of() {
                Ok(t) => println!("type: {t}"),
                Err(_) => println!("type: -"),
            }
            match s.pseudo_frobenius() {
                Ok(pf) => println!("pf: {}", join(&pf)),
                Err(_) => println!("pf: -"),
            }
            match (
                s.is_symmetric(),
                s.is_pseudo_symmetric(),
                s.is_almost_symmetric(),
            ) {
                (Ok(sym), Ok(psym), Ok(alm)) => {
                    println!("symmetric: {sym}");
                    println!("pseudo-symmetric: {psym}");
                    println!("almost-symmetric: {alm}");
                }
                _ => {
                    println!("symmetric: -");
                    println!("pseudo-symmetric: -");
                    println!("almost-symmetric: -");
                }
            }
            for &d in ds {
                println!("{d}-symmetric: {}", s.is_d_symmetric(d));
            }
        }
        Format::Json => {
            let mut flags = if s.is_full() {
                json!({
                    "symmetric": null,
                    "pseudo_symmetric": null,
                    "almost_symmetric": null,
                })
            } else {
                json!({
                    "symmetric": s.is_symmetric().expect("not full"),
                    "pseudo_symmetric": s.is_pseudo_symmetric().expect("not full"),
                    "almost_symmetric": s.is_almost_symmetric().expect("not full"),
                })
            };
            if !ds.is_empty() {
                let map: serde_json::Map<String, serde_json::Value> = ds
                    .iter()
                    .map(|&d| (d.to_string(), json!(s.is_d_symmetric(d))))
                    .collect();
                flags["d_symmetric"] = serde_json::Value::Object(map);
            }
            print_json(&json!({
                "small_elements": s.small_elements(),
                "frobenius": s.frobenius(),
                "genus": s.genus(),
                "type": s.type_of().ok(),
                "pf": s.pseudo_frobenius().ok(),
                "flags": flags,
            }));
        }
    }
}

fn print_report_text(r: &VerificationReport) {
    println!("suite: {}", r.suite);
    println!("universe: {}", r.universe);
    println!("instances: {}", r.instances_checked);
    println!("failures: {}", r.failures.len());
    for f in &r.failures {
        println!("  FAIL {}: expected {}, got {}", f.instance, f.expected, f.got);
    }
    for w in &r.warnings {
        println!("  warn: {w}");
    }
    println!("elapsed: {} ms", r.elapsed_ms);
    println!(
        "result: {}",
        if r.passed() { "PASS" } else { "FAIL" }
    );
}

fn print_double_line(r: &DoubleReport) {
    println!(
        "b={} genus={} frobenius={} double={}",
        r.b, r.genus, r.frobenius, r.double
    );
}

fn parse_d_list(text: &str, minimum: i64) -> Result<Vec<i64>, String> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let d: i64 = part
            .trim()
            .parse()
            .map_err(|_| format!("invalid divisor {:?} in list {text:?}", part.trim()))?;
        if d < minimum {
            return Err(format!("divisor must be at least {minimum}, got {d}"));
        }
        out.push(d);
    }
    Ok(out)
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("values serialize")
    );
}

fn join(xs: &[i64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
