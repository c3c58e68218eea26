//! Frobenius-number formulas for quotients, and the corollaries they chain
//! through.
//!
//! The backbone identity: when `S` is d-symmetric (gaps mirror onto
//! elements through multiples of `d`), the quotient satisfies
//! `f(S/d) = (f(S) - x) / d` where `x` is the least element of `S`
//! congruent to `f(S)` modulo `d`. Symmetric semigroups are d-symmetric
//! for every `d`; pseudo-symmetric ones are d-symmetric exactly when `2d`
//! does not divide `f(S)`, yet the formula above still holds for them in
//! every case.
//!
//! Specializing `d = 2` and feeding in closed forms for `f(S)` gives
//! half-quotient formulas for two-generator semigroups, the symmetric
//! three-generator family `<a*m1, a*m2, b*m1 + c*m2>`, symmetric
//! non-complete-intersection semigroups with four generators, and free
//! semigroups. The latter two depend on coefficients `c_i` (least multiple
//! of one generator reachable from the others) and on a representation row
//! `r_1j`; both are computed here, and every family formula is
//! cross-checked against the semigroup actually generated, so a wrong
//! premise surfaces as `CrossCheckFailed` instead of a silent wrong
//! answer.

use serde::Serialize;
use thiserror::Error;

use crate::semigroup::{max_conductor, NumericalSemigroup};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("generators are not coprime: gcd = {gcd}")]
    NonCoprime { gcd: i64 },
    #[error("premise violated: {reason}")]
    PremiseViolated { reason: String },
    #[error("the semigroup is not {d}-symmetric")]
    NotDSymmetric { d: i64 },
    #[error("no representation exists within the search bounds")]
    RepresentationNotFound,
    #[error("formula cross-check failed: implied Frobenius {implied}, actual {actual}")]
    CrossCheckFailed { implied: i64, actual: i64 },
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

fn check_positive(gens: &[i64]) -> Result<(), FormulaError> {
    if gens.is_empty() {
        return Err(FormulaError::PremiseViolated {
            reason: "generator list is empty".into(),
        });
    }
    if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
        return Err(FormulaError::PremiseViolated {
            reason: format!("generators must be positive, got {bad}"),
        });
    }
    Ok(())
}

fn check_coprime(gens: &[i64]) -> Result<(), FormulaError> {
    let g = gcd_all(gens);
    if g != 1 {
        return Err(FormulaError::NonCoprime { gcd: g });
    }
    Ok(())
}

/// `f(<a, b>) = ab - a - b` for coprime `a, b >= 2`.
pub fn sylvester_frobenius(a: i64, b: i64) -> Result<i64, FormulaError> {
    if a < 2 || b < 2 {
        return Err(FormulaError::PremiseViolated {
            reason: format!("both generators must be at least 2, got {a} and {b}"),
        });
    }
    let g = gcd(a, b);
    if g != 1 {
        return Err(FormulaError::NonCoprime { gcd: g });
    }
    Ok(a * b - a - b)
}

/// `(f(S) - x) / d` with `x` the least element congruent to `f(S)` mod
/// `d` — the right-hand side of the quotient formula, evaluated without
/// any symmetry check. Correct when `S` is d-symmetric (and in a few cases
/// beyond); in general it can disagree with `f(S/d)`, which is the point
/// of the counterexample family.
pub fn raw_quotient_frobenius(s: &NumericalSemigroup, d: i64) -> i64 {
    assert!(d >= 1, "d must be a positive integer");
    let x = s.smallest_element_congruent_to_frobenius(d);
    (s.frobenius() - x) / d
}

/// The quotient formula for d-symmetric semigroups:
/// `f(S/d) = (f(S) - x) / d`. Refused when `S` is not d-symmetric.
pub fn quotient_frobenius_d_symmetric(
    s: &NumericalSemigroup,
    d: i64,
) -> Result<i64, FormulaError> {
    if d < 2 {
        return Err(FormulaError::PremiseViolated {
            reason: format!("d must be at least 2, got {d}"),
        });
    }
    if !s.is_d_symmetric(d) {
        return Err(FormulaError::NotDSymmetric { d });
    }
    Ok(raw_quotient_frobenius(s, d))
}

/// The quotient formula under the classical hypotheses: `S` symmetric or
/// pseudo-symmetric. Symmetric semigroups are d-symmetric for every `d`;
/// pseudo-symmetric ones may fail d-symmetry (exactly when `2d` divides
/// `f(S)`), but the formula holds regardless. The full semigroup counts as
/// symmetric here since `2 * genus = f + 1` holds trivially.
pub fn quotient_frobenius_sym_or_psym(
    s: &NumericalSemigroup,
    d: i64,
) -> Result<i64, FormulaError> {
    if d < 2 {
        return Err(FormulaError::PremiseViolated {
            reason: format!("d must be at least 2, got {d}"),
        });
    }
    if !s.is_full() {
        let ok = s.is_symmetric().expect("not full") || s.is_pseudo_symmetric().expect("not full");
        if !ok {
            return Err(FormulaError::PremiseViolated {
                reason: format!("{s} is neither symmetric nor pseudo-symmetric"),
            });
        }
    }
    Ok(raw_quotient_frobenius(s, d))
}

/// Specialization to `d = 2` for symmetric `S`:
/// `f(S/2) = (f(S) - x) / 2` with `x` the smallest odd minimal generator.
pub fn half_quotient_frobenius_symmetric(s: &NumericalSemigroup) -> Result<i64, FormulaError> {
    if s.is_full() {
        return Ok(-1);
    }
    if !s.is_symmetric().expect("not full") {
        return Err(FormulaError::PremiseViolated {
            reason: format!("{s} is not symmetric"),
        });
    }
    let x = s
        .minimal_generators()
        .smallest_odd()
        .expect("coprime generators always include an odd one");
    Ok((s.frobenius() - x) / 2)
}

/// The same half-quotient formula evaluated from an arbitrary (not
/// necessarily minimal) generating system: `x` may be read off as the
/// smallest odd entry of any system generating `S`, and the value agrees.
pub fn half_quotient_symmetric_with_generators(gens: &[i64]) -> Result<i64, FormulaError> {
    check_positive(gens)?;
    check_coprime(gens)?;
    let s = NumericalSemigroup::generated_by(gens).map_err(|e| FormulaError::PremiseViolated {
        reason: e.to_string(),
    })?;
    if s.is_full() {
        return Ok(-1);
    }
    if !s.is_symmetric().expect("not full") {
        return Err(FormulaError::PremiseViolated {
            reason: format!("{s} is not symmetric"),
        });
    }
    let x = *gens
        .iter()
        .filter(|&&g| g % 2 == 1)
        .min()
        .expect("coprime generators always include an odd one");
    Ok((s.frobenius() - x) / 2)
}

/// Closed form for `f(<a, b> / 2)` with coprime `2 <= a < b`:
/// `(ab - b)/2 - a` when `a` is odd, `(ab - a)/2 - b` when `a` is even.
pub fn half_quotient_two_generators(a: i64, b: i64) -> Result<i64, FormulaError> {
    if a < 2 || a >= b {
        return Err(FormulaError::PremiseViolated {
            reason: format!("need 2 <= a < b, got a = {a}, b = {b}"),
        });
    }
    let g = gcd(a, b);
    if g != 1 {
        return Err(FormulaError::NonCoprime { gcd: g });
    }
    if a % 2 == 1 {
        Ok((a * b - b) / 2 - a)
    } else {
        Ok((a * b - a) / 2 - b)
    }
}

/// Closed form for `f(<a, a+1> / 5)`, split by `a mod 5`.
pub fn fifth_quotient_consecutive(a: i64) -> i64 {
    assert!(a >= 2, "a must be at least 2");
    match a % 5 {
        0 => (a * a) / 5 - a - 1,
        1 | 2 => (a * a - 3 * a - 3) / 5,
        3 => (a * a - a - 1) / 5,
        _ => (a * a - 1) / 5 - a,
    }
}

/// The matching `x` (least element of `<a, a+1>` congruent to the
/// Frobenius number mod 5) for `fifth_quotient_consecutive`.
pub fn x_for_consecutive_mod5(a: i64) -> i64 {
    assert!(a >= 2, "a must be at least 2");
    match a % 5 {
        0 => 4 * (a + 1),
        1 | 2 => 2 * (a + 1),
        3 => 0,
        _ => 4 * a,
    }
}

/// Membership of `target` in the monoid generated by `gens` (all assumed
/// positive), by bounded dynamic programming.
fn monoid_contains(gens: &[i64], target: i64) -> Result<bool, FormulaError> {
    if target < 0 {
        return Ok(false);
    }
    if target == 0 {
        return Ok(true);
    }
    if target > max_conductor() {
        return Err(FormulaError::PremiseViolated {
            reason: format!("membership target {target} exceeds the size guardrail"),
        });
    }
    let n = target as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for x in 1..=n {
        reach[x] = gens
            .iter()
            .any(|&g| (g as usize) <= x && reach[x - g as usize]);
    }
    Ok(reach[n])
}

/// `c_i`: the least positive `k` with `k * gens[index]` in the monoid
/// generated by the remaining entries. Always at most the least of those
/// entries. `index` is zero-based.
pub fn c_coefficient(gens: &[i64], index: usize) -> Result<i64, FormulaError> {
    check_positive(gens)?;
    check_coprime(gens)?;
    if gens.len() < 2 || index >= gens.len() {
        return Err(FormulaError::PremiseViolated {
            reason: "need at least two generators and a valid index".into(),
        });
    }
    let n = gens[index];
    let others: Vec<i64> = gens
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != index)
        .map(|(_, &g)| g)
        .collect();
    let bound = *others.iter().min().unwrap();
    for k in 1..=bound {
        if monoid_contains(&others, k * n)? {
            return Ok(k);
        }
    }
    unreachable!("k equal to another generator always reaches a multiple")
}

/// The lexicographically smallest representation row for
/// `c_i * gens[index]` over the other generators, as a full-length vector
/// with a zero at `index`. Entry `j` is the coefficient of `gens[j]`.
pub fn representation(gens: &[i64], index: usize) -> Result<Vec<i64>, FormulaError> {
    let c = c_coefficient(gens, index)?;
    let positions: Vec<usize> = (0..gens.len()).filter(|&j| j != index).collect();
    let mut row = vec![0i64; gens.len()];
    if fill_smallest(gens, &positions, c * gens[index], &mut row) {
        Ok(row)
    } else {
        Err(FormulaError::RepresentationNotFound)
    }
}

fn fill_smallest(gens: &[i64], positions: &[usize], target: i64, row: &mut [i64]) -> bool {
    match positions.split_first() {
        None => target == 0,
        Some((&j, rest)) => {
            for r in 0..=target / gens[j] {
                row[j] = r;
                if fill_smallest(gens, rest, target - r * gens[j], row) {
                    return true;
                }
            }
            row[j] = 0;
            false
        }
    }
}

/// Every representation row for `c_i * gens[index]` over the other
/// generators, in lexicographic order.
pub fn representations(gens: &[i64], index: usize) -> Result<Vec<Vec<i64>>, FormulaError> {
    let c = c_coefficient(gens, index)?;
    let positions: Vec<usize> = (0..gens.len()).filter(|&j| j != index).collect();
    let mut row = vec![0i64; gens.len()];
    let mut out = Vec::new();
    fill_all(gens, &positions, c * gens[index], &mut row, &mut out);
    if out.is_empty() {
        return Err(FormulaError::RepresentationNotFound);
    }
    Ok(out)
}

fn fill_all(
    gens: &[i64],
    positions: &[usize],
    target: i64,
    row: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    match positions.split_first() {
        None => {
            if target == 0 {
                out.push(row.clone());
            }
        }
        Some((&j, rest)) => {
            for r in 0..=target / gens[j] {
                row[j] = r;
                fill_all(gens, rest, target - r * gens[j], row, out);
            }
            row[j] = 0;
        }
    }
}

/// The `c_i` coefficients and lexicographically smallest representation
/// rows for every index of a generator arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientTable {
    pub generators: Vec<i64>,
    pub c: Vec<i64>,
    pub rows: Vec<Vec<i64>>,
}

pub fn coefficient_table(gens: &[i64]) -> Result<CoefficientTable, FormulaError> {
    let mut c = Vec::with_capacity(gens.len());
    let mut rows = Vec::with_capacity(gens.len());
    for i in 0..gens.len() {
        c.push(c_coefficient(gens, i)?);
        rows.push(representation(gens, i)?);
    }
    Ok(CoefficientTable {
        generators: gens.to_vec(),
        c,
        rows,
    })
}

/// Parameters of the symmetric three-generator family
/// `<a*m1, a*m2, b*m1 + c*m2>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyParameters {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub m1: i64,
    pub m2: i64,
}

impl FamilyParameters {
    pub fn new(a: i64, b: i64, c: i64, m1: i64, m2: i64) -> Result<Self, FormulaError> {
        if a < 2 || b < 0 || c < 0 || b + c < 2 || m1 < 1 || m2 < 1 {
            return Err(FormulaError::PremiseViolated {
                reason: format!(
                    "need a >= 2, b, c >= 0 with b + c >= 2, m1, m2 >= 1; got \
                     a = {a}, b = {b}, c = {c}, m1 = {m1}, m2 = {m2}"
                ),
            });
        }
        let g = gcd(m1, m2);
        if g != 1 {
            return Err(FormulaError::NonCoprime { gcd: g });
        }
        let third = b * m1 + c * m2;
        let g = gcd(a, third);
        if g != 1 {
            return Err(FormulaError::NonCoprime { gcd: g });
        }
        Ok(FamilyParameters { a, b, c, m1, m2 })
    }

    pub fn generators(&self) -> [i64; 3] {
        [
            self.a * self.m1,
            self.a * self.m2,
            self.b * self.m1 + self.c * self.m2,
        ]
    }

    pub fn semigroup(&self) -> Result<NumericalSemigroup, FormulaError> {
        NumericalSemigroup::generated_by(&self.generators()).map_err(|e| {
            FormulaError::PremiseViolated {
                reason: e.to_string(),
            }
        })
    }
}

/// `f(S/2)` for the three-generator symmetric family: the implied
/// Frobenius number `a(m1*m2 - m1 - m2) + (a - 1)(b*m1 + c*m2)` is
/// cross-checked against the semigroup the parameters actually generate
/// before the half-quotient value is returned.
pub fn three_gen_symmetric_half_frobenius(p: &FamilyParameters) -> Result<i64, FormulaError> {
    let s = p.semigroup()?;
    if s.is_full() || !s.is_symmetric().expect("not full") {
        return Err(FormulaError::PremiseViolated {
            reason: format!("family parameters {p:?} generated a non-symmetric semigroup"),
        });
    }
    let implied = p.a * (p.m1 * p.m2 - p.m1 - p.m2) + (p.a - 1) * (p.b * p.m1 + p.c * p.m2);
    let actual = s.frobenius();
    if implied != actual {
        return Err(FormulaError::CrossCheckFailed { implied, actual });
    }
    let x = *p
        .generators()
        .iter()
        .filter(|&&g| g % 2 == 1)
        .min()
        .expect("coprime generators always include an odd one");
    Ok((actual - x) / 2)
}

/// `f(S/2)` for a symmetric, non-complete-intersection semigroup given by
/// the ordered arrangement `n1, n2, n3, n4` of its four minimal
/// generators: `(n2*c2 + n3*c3 + n4*r14 - (n1 + n2 + n3 + n4 + x)) / 2`.
/// The value depends on the arrangement (and, through `r14`, on the
/// representation, for which the lexicographically smallest row is fixed);
/// the implied Frobenius number is cross-checked against the actual one,
/// so an unsuitable arrangement or a complete intersection is refused
/// rather than miscomputed.
pub fn four_gen_symmetric_non_ci_half_frobenius(gens: &[i64]) -> Result<i64, FormulaError> {
    check_positive(gens)?;
    if gens.len() != 4 {
        return Err(FormulaError::PremiseViolated {
            reason: format!("need exactly four generators, got {}", gens.len()),
        });
    }
    check_coprime(gens)?;
    let s = NumericalSemigroup::generated_by(gens).map_err(|e| FormulaError::PremiseViolated {
        reason: e.to_string(),
    })?;
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    if s.minimal_generators().as_slice() != sorted {
        return Err(FormulaError::PremiseViolated {
            reason: "the four entries must be the minimal generating system".into(),
        });
    }
    if !s.is_symmetric().expect("four minimal generators") {
        return Err(FormulaError::PremiseViolated {
            reason: format!("{s} is not symmetric"),
        });
    }
    let c2 = c_coefficient(gens, 1)?;
    let c3 = c_coefficient(gens, 2)?;
    let r14 = representation(gens, 0)?[3];
    let implied = gens[1] * c2 + gens[2] * c3 + gens[3] * r14 - gens.iter().sum::<i64>();
    let actual = s.frobenius();
    if implied != actual {
        return Err(FormulaError::CrossCheckFailed { implied, actual });
    }
    let x = *gens
        .iter()
        .filter(|&&g| g % 2 == 1)
        .min()
        .expect("coprime generators always include an odd one");
    Ok((actual - x) / 2)
}

/// Telescopic data for an arrangement: `c_i = d_{i-1} / d_i` where
/// `d_i = gcd(n_1, ..., n_i)`. Returns the `c_i` (indexed from the second
/// generator) when the arrangement is free, `None` otherwise.
fn telescopic_coefficients(gens: &[i64]) -> Result<Option<Vec<i64>>, FormulaError> {
    let mut d = gens[0];
    let mut cs = Vec::new();
    for i in 1..gens.len() {
        let next = gcd(d, gens[i]);
        let ci = d / next;
        if !monoid_contains(&gens[..i], ci * gens[i])? {
            return Ok(None);
        }
        cs.push(ci);
        d = next;
    }
    Ok(Some(cs))
}

/// Whether the generators, in the given order, form a free (telescopic)
/// arrangement: each `c_i * n_i` must lie in the monoid generated by the
/// earlier entries.
pub fn is_free_arrangement(gens: &[i64]) -> Result<bool, FormulaError> {
    check_positive(gens)?;
    if gcd_all(gens) != 1 {
        return Ok(false);
    }
    Ok(telescopic_coefficients(gens)?.is_some())
}

/// `f(S/2)` for a semigroup free for the given arrangement:
/// `((c2 - 1) n2 + ... + (ce - 1) ne - n1 - x) / 2`, cross-checked against
/// the actual Frobenius number of the generated semigroup.
pub fn free_semigroup_half_frobenius(gens: &[i64]) -> Result<i64, FormulaError> {
    check_positive(gens)?;
    check_coprime(gens)?;
    let cs = telescopic_coefficients(gens)?.ok_or_else(|| FormulaError::PremiseViolated {
        reason: "the arrangement is not free (telescopic condition fails)".into(),
    })?;
    let s = NumericalSemigroup::generated_by(gens).map_err(|e| FormulaError::PremiseViolated {
        reason: e.to_string(),
    })?;
    let implied = cs
        .iter()
        .zip(&gens[1..])
        .map(|(&c, &n)| (c - 1) * n)
        .sum::<i64>()
        - gens[0];
    let actual = s.frobenius();
    if implied != actual {
        return Err(FormulaError::CrossCheckFailed { implied, actual });
    }
    let x = *gens
        .iter()
        .filter(|&&g| g % 2 == 1)
        .min()
        .expect("coprime generators always include an odd one");
    Ok((actual - x) / 2)
}
