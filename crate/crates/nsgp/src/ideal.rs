//! Relative ideals of a numerical semigroup.
//!
//! A relative ideal `E` of an ambient semigroup `S` is a set of integers,
//! bounded below, with `E + S ⊆ E`. It is stored as its least element (the
//! offset, which may be negative after translation) plus the sorted shifts
//! above it, with the last shift acting as a threshold: past it the ideal
//! contains every integer. The threshold mirrors the semigroup conductor
//! and is kept minimal, so structural equality is semantic equality.
//!
//! The canonical ideal `K = { k : f - k not in S }` (with `f` the Frobenius
//! number) is the pivot of the duplication construction: `K` is normalized
//! to least element 0 and its largest gap is `f` itself.

use std::fmt;

use thiserror::Error;

use crate::semigroup::NumericalSemigroup;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("ideals live over different ambient semigroups")]
    AmbientMismatch,
    #[error("element list is empty")]
    EmptyElements,
    #[error("not an ideal: {element} + {summand} falls outside the set")]
    NotAnIdeal { element: i64, summand: i64 },
    #[error("the canonical ideal is undefined for the full semigroup")]
    FullSemigroup,
}

/// A relative ideal in canonical form. `small_shifts` is sorted, starts at
/// 0, ends at the threshold, and lists exactly the shifts `t` with
/// `offset + t` in the ideal and `t <=` threshold.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    ambient: NumericalSemigroup,
    offset: i64,
    small_shifts: Vec<i64>,
}

impl RelativeIdeal {
    /// Builds an ideal from an explicit element list, which denotes
    /// `elements ∪ [max(elements), ∞)` exactly as in semigroup set notation.
    /// Validates `E + S ⊆ E` and reports a witness pair on failure.
    pub fn new(ambient: NumericalSemigroup, elements: &[i64]) -> Result<Self, IdealError> {
        if elements.is_empty() {
            return Err(IdealError::EmptyElements);
        }
        let mut els = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        let offset = els[0];
        let threshold = *els.last().unwrap() - offset;
        let shifts: Vec<i64> = els.iter().map(|&x| x - offset).collect();
        let in_shift_set = |u: i64| u >= threshold || shifts.binary_search(&u).is_ok();

        // Absorbing the ambient's cofinite tail: starting from any element,
        // adding conductor, conductor + 1, ... must stay inside, which pins
        // every integer in [conductor, threshold) as a shift.
        let c = ambient.conductor();
        for u in c..threshold {
            if !in_shift_set(u) {
                return Err(IdealError::NotAnIdeal {
                    element: offset,
                    summand: u,
                });
            }
        }
        // Finite part: each listed shift plus each positive small element.
        for &t in &shifts {
            for &s in ambient.small_elements() {
                if s == 0 {
                    continue;
                }
                if !in_shift_set(t + s) {
                    return Err(IdealError::NotAnIdeal {
                        element: offset + t,
                        summand: s,
                    });
                }
            }
        }
        Ok(Self::normalized(ambient, offset, shifts))
    }

    /// Canonical form: minimal threshold, shifts truncated at it.
    fn normalized(ambient: NumericalSemigroup, offset: i64, shifts: Vec<i64>) -> Self {
        let last = *shifts.last().unwrap();
        let mut present = vec![false; (last + 1) as usize];
        for &t in &shifts {
            present[t as usize] = true;
        }
        let mut threshold = last;
        while threshold > 0 && present[(threshold - 1) as usize] {
            threshold -= 1;
        }
        let small_shifts = shifts.into_iter().filter(|&t| t <= threshold).collect();
        RelativeIdeal {
            ambient,
            offset,
            small_shifts,
        }
    }

    /// The semigroup viewed as an ideal of itself.
    pub fn from_semigroup(s: &NumericalSemigroup) -> Self {
        RelativeIdeal {
            ambient: s.clone(),
            offset: 0,
            small_shifts: s.small_elements().to_vec(),
        }
    }

    /// The canonical ideal `K = { k : f - k not in S }`, normalized to least
    /// element 0. Its largest gap is `f` itself. Undefined for the natural
    /// numbers.
    pub fn canonical(ambient: &NumericalSemigroup) -> Result<Self, IdealError> {
        if ambient.is_full() {
            return Err(IdealError::FullSemigroup);
        }
        let f = ambient.frobenius();
        let elements: Vec<i64> = (0..=ambient.conductor())
            .filter(|&k| !ambient.contains(f - k))
            .collect();
        // K + S ⊆ K holds by construction; new() re-validates cheaply
        Self::new(ambient.clone(), &elements)
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    /// Least element of the ideal.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Minimal shift from which the ideal contains every integer onward.
    pub fn threshold(&self) -> i64 {
        *self.small_shifts.last().unwrap()
    }

    pub fn small_shifts(&self) -> &[i64] {
        &self.small_shifts
    }

    pub fn contains(&self, x: i64) -> bool {
        let u = x - self.offset;
        if u < 0 {
            return false;
        }
        u >= self.threshold() || self.small_shifts.binary_search(&u).is_ok()
    }

    /// Sorted elements `<= bound`, including the tail.
    pub fn elements_up_to(&self, bound: i64) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .small_shifts
            .iter()
            .map(|&t| self.offset + t)
            .filter(|&x| x <= bound)
            .collect();
        let mut x = self.offset + self.threshold() + 1;
        while x <= bound {
            out.push(x);
            x += 1;
        }
        out
    }

    /// The translate `E + x`; offsets may go negative.
    pub fn translate(&self, x: i64) -> Self {
        RelativeIdeal {
            ambient: self.ambient.clone(),
            offset: self.offset + x,
            small_shifts: self.small_shifts.clone(),
        }
    }

    /// The ideal sum `E + F = { e + f }` over a common ambient.
    pub fn sum(&self, other: &Self) -> Result<Self, IdealError> {
        if self.ambient != other.ambient {
            return Err(IdealError::AmbientMismatch);
        }
        // Past min of the two thresholds (shifted by the other offset) the
        // sum contains everything, so finitely many pairs decide it.
        let tail = self.offset + other.offset + self.threshold().min(other.threshold());
        let mut elements = Vec::new();
        for &e in &self.elements_up_to(tail - other.offset) {
            for &f in &other.elements_up_to(tail - e) {
                elements.push(e + f);
            }
        }
        elements.push(tail);
        Self::new(self.ambient.clone(), &elements)
    }

    /// Whether this ideal is a translate of the canonical ideal. Over the
    /// natural numbers every ideal is one.
    pub fn is_canonical(&self) -> bool {
        if self.ambient.is_full() {
            return true;
        }
        let k = Self::canonical(&self.ambient).expect("ambient is not full");
        self.small_shifts == k.small_shifts
    }
}

impl fmt::Display for RelativeIdeal {
    /// `offset; shift,shift,...->` — offset first, then the shift set in the
    /// same trailing-arrow convention as semigroup notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.small_shifts.iter().map(|t| t.to_string()).collect();
        write!(f, "{}; {}->", self.offset, parts.join(","))
    }
}

/// First pair `(e, f)` in ascending lexicographic order with
/// `e + f + b` outside the ambient semigroup, or `None` if
/// `E + F + b ⊆ S`. The pair order makes reported witnesses reproducible.
pub fn containment_witness(
    e: &RelativeIdeal,
    f: &RelativeIdeal,
    b: i64,
) -> Result<Option<(i64, i64)>, IdealError> {
    if e.ambient() != f.ambient() {
        return Err(IdealError::AmbientMismatch);
    }
    let c = e.ambient().conductor();
    // Pairs with e + f + b >= conductor always land inside; only the finite
    // block below it can fail. Negative sums fail membership and are caught
    // by the same check.
    for &x in &e.elements_up_to(c - b - f.offset() - 1) {
        for &y in &f.elements_up_to(c - b - x - 1) {
            if !e.ambient().contains(x + y + b) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// Decides `E + F + b ⊆ S` for ideals over the ambient `S`.
pub fn sum_plus_scalar_contained(
    e: &RelativeIdeal,
    f: &RelativeIdeal,
    b: i64,
) -> Result<bool, IdealError> {
    Ok(containment_witness(e, f, b)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> NumericalSemigroup {
        crate::notation::parse_semigroup(text).unwrap()
    }

    #[test]
    fn canonical_ideal_examples() {
        let k = RelativeIdeal::canonical(&s("0,5,7,8,10,12->")).unwrap();
        assert_eq!(k.to_string(), "0; 0,2,5,7,8,9,10,12->");
        assert_eq!(k.offset(), 0);
        // largest gap of K is the Frobenius number of the ambient
        assert!(!k.contains(11));
        assert!(k.contains(12));

        // symmetric: K = S
        let sym = s("2,3");
        let k2 = RelativeIdeal::canonical(&sym).unwrap();
        assert_eq!(k2, RelativeIdeal::from_semigroup(&sym));
        assert!(k2.is_canonical());

        // pseudo-symmetric: K = S with the half-Frobenius gap filled in
        let k3 = RelativeIdeal::canonical(&s("3,4,5")).unwrap();
        assert_eq!(k3.to_string(), "0; 0,1,3->");

        assert_eq!(
            RelativeIdeal::canonical(&NumericalSemigroup::natural()),
            Err(IdealError::FullSemigroup)
        );
    }

    #[test]
    fn canonical_of_almost_symmetric_is_elements_plus_pf_minus_frobenius() {
        let t = s("0,6,7,11,12,13,14,16->");
        let mut expected: Vec<i64> = t.elements_up_to(t.conductor());
        expected.extend(t.pseudo_frobenius().unwrap());
        expected.retain(|&x| x != t.frobenius());
        expected.sort_unstable();
        let k = RelativeIdeal::canonical(&t).unwrap();
        assert_eq!(RelativeIdeal::new(t.clone(), &expected).unwrap(), k);
        assert_eq!(k.to_string(), "0; 0,5,6,7,10,11,12,13,14,16->");
    }

    #[test]
    fn ideal_validation_reports_witnesses() {
        let amb = s("2,3");
        match RelativeIdeal::new(amb, &[0, 3]) {
            Err(IdealError::NotAnIdeal { element, summand }) => {
                assert_eq!((element, summand), (0, 2));
            }
            other => panic!("expected NotAnIdeal, got {other:?}"),
        }
        assert_eq!(
            RelativeIdeal::new(s("2,3"), &[]),
            Err(IdealError::EmptyElements)
        );
    }

    #[test]
    fn threshold_is_renormalized() {
        // listing the tail beyond the minimal threshold changes nothing
        let amb = s("0,5,7,8,10,12->");
        let a = RelativeIdeal::new(amb.clone(), &[0, 2, 5, 7, 8, 9, 10, 12]).unwrap();
        let b = RelativeIdeal::new(amb, &[0, 2, 5, 7, 8, 9, 10, 12, 13, 14, 15]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.threshold(), 12);
    }

    #[test]
    fn translates_and_membership() {
        let k = RelativeIdeal::canonical(&s("0,5,7,8,10,12->")).unwrap();
        let shifted = k.translate(-3);
        assert_eq!(shifted.offset(), -3);
        assert!(shifted.contains(-3));
        assert!(!shifted.contains(-4));
        assert!(shifted.contains(9)); // 12 - 3
        assert_eq!(shifted.translate(3), k);
    }

    #[test]
    fn ideal_sums() {
        let sym = s("2,3");
        let as_ideal = RelativeIdeal::from_semigroup(&sym);
        // S + S = S
        assert_eq!(as_ideal.sum(&as_ideal).unwrap(), as_ideal);

        let amb = s("0,5,7,8,10,12->");
        let k = RelativeIdeal::canonical(&amb).unwrap();
        let kk = k.sum(&k).unwrap();
        // 2 + 2 lies in K + K
        assert!(kk.contains(4));
        assert_eq!(kk.offset(), 0);

        let other = RelativeIdeal::from_semigroup(&sym);
        assert_eq!(k.sum(&other), Err(IdealError::AmbientMismatch));
    }

    #[test]
    fn containment_witnesses_for_duplication() {
        let amb = s("0,5,7,8,10,12->");
        let k = RelativeIdeal::canonical(&amb).unwrap();
        assert_eq!(containment_witness(&k, &k, 5).unwrap(), Some((2, 2)));
        assert_eq!(containment_witness(&k, &k, 7).unwrap(), Some((0, 2)));
        assert_eq!(containment_witness(&k, &k, 13).unwrap(), None);
        assert!(sum_plus_scalar_contained(&k, &k, 13).unwrap());
        assert!(!sum_plus_scalar_contained(&k, &k, 5).unwrap());
    }

    #[test]
    fn scalar_beyond_frobenius_always_contains() {
        for text in ["0,5,7,8,10,12->", "0,6,7,11,12,13,14,16->", "0,5,6,7,10->"] {
            let amb = s(text);
            let k = RelativeIdeal::canonical(&amb).unwrap();
            for b in amb.frobenius() + 1..amb.frobenius() + 6 {
                assert!(
                    sum_plus_scalar_contained(&k, &k, b).unwrap(),
                    "K+K+{b} should land in {text}"
                );
            }
        }
    }

    #[test]
    fn ideals_of_the_natural_numbers() {
        let n = NumericalSemigroup::natural();
        let e = RelativeIdeal::new(n, &[4]).unwrap();
        assert_eq!(e.small_shifts(), &[0]);
        assert!(e.is_canonical());
        assert_eq!(e.to_string(), "4; 0->");
    }
}
