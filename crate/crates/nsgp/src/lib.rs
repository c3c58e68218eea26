//! Exact arithmetic on numerical semigroups: invariants, quotients,
//! d-folds of minimal genus, numerical duplication, and closed-form
//! Frobenius formulas, together with brute-force oracles that verify the
//! fast paths over bounded universes.
//!
//! A numerical semigroup is a cofinite submonoid of the natural numbers,
//! stored as its conductor plus the elements below it. Everything here is an
//! immutable value and every operation is a pure function, so results are
//! reproducible bit for bit.
//!
//! # Quick start
//!
//! ```
//! use nsgp::{NumericalSemigroup, quotient::min_genus_dfold_value};
//!
//! let s = NumericalSemigroup::generated_by(&[3, 7, 8]).unwrap();
//! assert_eq!(s.to_string(), "0,3,6->");
//! assert_eq!(s.frobenius(), 5);
//! assert_eq!(s.genus(), 4);
//! // least genus among semigroups T with T/3 = S
//! assert_eq!(min_genus_dfold_value(&s, 3).unwrap(), 9);
//! ```
//!
//! # Modules
//!
//! * [`semigroup`] — the core type, constructors, membership, gaps, Apéry
//!   sets, pseudo-Frobenius numbers, symmetry predicates.
//! * [`notation`] — the `0,3,6->` set form and `3,7,8` generator form.
//! * [`ideal`] — relative ideals, the canonical ideal, translates and sums.
//! * [`quotient`] — quotients by an integer and minimal-genus d-folds.
//! * [`duplication`] — numerical duplication and symmetric doubles.
//! * [`formulas`] — closed-form Frobenius values for quotients of symmetric,
//!   pseudo-symmetric and d-symmetric semigroups, plus generator-family
//!   formulas.
//! * [`oracle`] — enumeration by genus, bounded d-fold enumeration,
//!   brute-force invariant recomputation, and the named verification suites.
//! * [`cli`] — the `nsgp` command-line interface.
//!
//! # Examples
//!
//! Each major capability has a runnable example under `examples/`:
//!
//! ```text
//! cargo run --example invariants          # invariants of one semigroup
//! cargo run --example enumerate           # counts by genus
//! cargo run --example minimal_multiple    # d-folds of least genus
//! cargo run --example canonical_ideal     # ideal arithmetic and containment
//! cargo run --example symmetric_double    # duplication doubles
//! cargo run --example quotient_formulas   # closed-form Frobenius values
//! cargo run --example verify              # run every verification suite
//! ```

pub mod cli;
pub mod duplication;
pub mod formulas;
pub mod ideal;
pub mod notation;
pub mod oracle;
pub mod quotient;
pub mod semigroup;

pub use ideal::RelativeIdeal;
pub use semigroup::{GeneratorList, NumericalSemigroup, SemigroupError};
