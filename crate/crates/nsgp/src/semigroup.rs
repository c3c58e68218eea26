//! Numerical semigroups: cofinite submonoids of the natural numbers.
//!
//! A numerical semigroup is represented by its conductor `c` (the least
//! element from which the semigroup contains every integer onward) together
//! with the sorted list of its elements in `[0, c]`. Membership of any `x`
//! then reduces to `x >= c` or a binary search. The natural numbers
//! themselves are the degenerate case `c = 0` with Frobenius number `-1`.
//!
//! Constructors validate their input and reject anything that is not a
//! numerical semigroup; the only silent repair is renormalizing a declared
//! conductor down to the minimal valid one. Values are immutable once
//! built, so every derived quantity is a pure function of the data.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

/// Default ceiling on conductors accepted by constructors. Override with the
/// `NSGP_MAX_CONDUCTOR` environment variable (read once per process).
pub const DEFAULT_MAX_CONDUCTOR: i64 = 1 << 20;

/// Active conductor guardrail: `NSGP_MAX_CONDUCTOR` if set and parseable,
/// otherwise [`DEFAULT_MAX_CONDUCTOR`].
pub fn max_conductor() -> i64 {
    static LIMIT: OnceLock<i64> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var("NSGP_MAX_CONDUCTOR")
            .ok()
            .and_then(|v| v.trim().parse::<i64>().ok())
            .filter(|&v| v > 0)
            .unwrap_or(DEFAULT_MAX_CONDUCTOR)
    })
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyGeneratorList,
    #[error("generator {value} is not a positive integer")]
    NonPositiveGenerator { value: i64 },
    #[error("generators have gcd {gcd}, so they do not generate a cofinite semigroup")]
    NonCoprimeGenerators { gcd: i64 },
    #[error("element set does not contain 0")]
    MissingZero,
    #[error("element {value} is negative")]
    NegativeElement { value: i64 },
    #[error("set is not closed under addition: {a} + {b} is missing")]
    NotClosedUnderAddition { a: i64, b: i64 },
    #[error("conductor {conductor} exceeds the limit {limit} (set NSGP_MAX_CONDUCTOR to raise it)")]
    ConductorTooLarge { conductor: i64, limit: i64 },
    #[error("operation is undefined for the full semigroup of natural numbers")]
    FullSemigroup,
    #[error("{value} is not a positive element of the semigroup")]
    NotAnElement { value: i64 },
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A nonempty sorted list of positive integers used as a generating system.
/// The list need not be minimal; duplicates are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorList {
    gens: Vec<i64>,
}

impl GeneratorList {
    /// Validates positivity and overall gcd 1 (cofiniteness).
    pub fn new(mut gens: Vec<i64>) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGeneratorList);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(SemigroupError::NonPositiveGenerator { value: bad });
        }
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::NonCoprimeGenerators { gcd: g });
        }
        Ok(GeneratorList { gens })
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Least odd member, if any. Every generating system of a semigroup with
    /// an odd element has one, and it is the same for all systems.
    pub fn smallest_odd(&self) -> Option<i64> {
        self.gens.iter().copied().find(|g| g % 2 == 1)
    }
}

impl fmt::Display for GeneratorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A numerical semigroup in canonical form: `small_elements` is exactly the
/// set of elements `<= conductor`, sorted, starting at 0 and ending at the
/// conductor, and `conductor - 1` is a gap unless the conductor is 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    conductor: i64,
    small_elements: Vec<i64>,
}

impl NumericalSemigroup {
    /// The full semigroup of natural numbers (conductor 0, Frobenius -1).
    pub fn natural() -> Self {
        NumericalSemigroup {
            conductor: 0,
            small_elements: vec![0],
        }
    }

    /// Closure of a validated generating system.
    ///
    /// Works residue-by-residue modulo the least generator `a`: `w[r]` is the
    /// least element congruent to `r (mod a)`, computed by relaxation, and the
    /// Frobenius number is `max(w) - a`.
    pub fn from_generators(gens: &GeneratorList) -> Result<Self, SemigroupError> {
        let gs = gens.as_slice();
        let a = gs[0];
        if a == 1 {
            return Ok(Self::natural());
        }
        let a_us = a as usize;
        let mut w = vec![i64::MAX; a_us];
        w[0] = 0;
        let mut changed = true;
        while changed {
            changed = false;
            for r in 0..a_us {
                if w[r] == i64::MAX {
                    continue;
                }
                for &g in &gs[1..] {
                    let nr = ((r as i64 + g) % a) as usize;
                    let cand = w[r] + g;
                    if cand < w[nr] {
                        w[nr] = cand;
                        changed = true;
                    }
                }
            }
        }
        // gcd 1 guarantees every residue class is eventually reached
        let frobenius = w.iter().max().copied().unwrap() - a;
        let conductor = frobenius + 1;
        let limit = max_conductor();
        if conductor > limit {
            return Err(SemigroupError::ConductorTooLarge { conductor, limit });
        }
        let small_elements = (0..=conductor)
            .filter(|&x| w[(x % a) as usize] <= x)
            .collect();
        Ok(NumericalSemigroup {
            conductor,
            small_elements,
        })
    }

    /// Convenience wrapper: validate `gens` and take the closure.
    pub fn generated_by(gens: &[i64]) -> Result<Self, SemigroupError> {
        Self::from_generators(&GeneratorList::new(gens.to_vec())?)
    }

    /// Builds a semigroup from an explicit element list. The list denotes
    /// `elements ∪ [max(elements), ∞)`; the `conductor` argument is the
    /// caller's claim and is silently renormalized to the minimal valid value
    /// (so `{0,2,3}` with a declared conductor of 5 comes back as `{0,2,...}`
    /// with conductor 2).
    pub fn from_small_elements(elements: &[i64], conductor: i64) -> Result<Self, SemigroupError> {
        let _ = conductor; // advisory only; the element list determines the set
        let mut els = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        if let Some(&bad) = els.iter().find(|&&x| x < 0) {
            return Err(SemigroupError::NegativeElement { value: bad });
        }
        if els.first() != Some(&0) {
            return Err(SemigroupError::MissingZero);
        }
        let last = *els.last().unwrap();
        let limit = max_conductor();
        if last > limit {
            return Err(SemigroupError::ConductorTooLarge {
                conductor: last,
                limit,
            });
        }
        // Closure check below the ray start; sums at or past it are free.
        let mut member = vec![false; (last + 1) as usize];
        for &x in &els {
            member[x as usize] = true;
        }
        for (i, &x) in els.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &y in &els[i..] {
                let s = x + y;
                if s >= last {
                    break;
                }
                if !member[s as usize] {
                    return Err(SemigroupError::NotClosedUnderAddition { a: x, b: y });
                }
            }
        }
        Ok(Self::renormalized(els))
    }

    /// Renormalizes a sorted, deduplicated, closed element list (ray from its
    /// last entry) into canonical form. Internal: callers guarantee closure.
    pub(crate) fn renormalized(els: Vec<i64>) -> Self {
        debug_assert!(els.first() == Some(&0));
        let last = *els.last().unwrap();
        let mut present = vec![false; (last + 1) as usize];
        for &x in &els {
            present[x as usize] = true;
        }
        let mut conductor = last;
        while conductor > 0 && present[(conductor - 1) as usize] {
            conductor -= 1;
        }
        let small_elements = els.into_iter().filter(|&x| x <= conductor).collect();
        NumericalSemigroup {
            conductor,
            small_elements,
        }
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Largest gap; -1 for the natural numbers.
    pub fn frobenius(&self) -> i64 {
        self.conductor - 1
    }

    /// Elements in `[0, conductor]`, sorted.
    pub fn small_elements(&self) -> &[i64] {
        &self.small_elements
    }

    /// True exactly for the natural numbers.
    pub fn is_full(&self) -> bool {
        self.conductor == 0
    }

    /// Least positive element.
    pub fn multiplicity(&self) -> i64 {
        if self.small_elements.len() > 1 {
            self.small_elements[1]
        } else {
            1 // the natural numbers
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        if x >= self.conductor {
            return true;
        }
        self.small_elements.binary_search(&x).is_ok()
    }

    /// Sorted elements `<= bound` (including the cofinite tail).
    pub fn elements_up_to(&self, bound: i64) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .small_elements
            .iter()
            .copied()
            .filter(|&x| x <= bound)
            .collect();
        let mut x = self.conductor + 1;
        while x <= bound {
            out.push(x);
            x += 1;
        }
        out
    }

    /// The complement in the natural numbers, sorted.
    pub fn gaps(&self) -> Vec<i64> {
        let mut out = Vec::new();
        let mut next = 0;
        for &x in &self.small_elements {
            for g in next..x {
                out.push(g);
            }
            next = x + 1;
        }
        out
    }

    /// Number of gaps.
    pub fn genus(&self) -> i64 {
        // |[0, conductor]| minus the elements in that range
        self.conductor + 1 - self.small_elements.len() as i64
    }

    /// The unique minimal generating system: positive elements that are not
    /// sums of two positive elements. Candidates beyond
    /// `conductor + multiplicity` are never minimal.
    pub fn minimal_generators(&self) -> GeneratorList {
        if self.is_full() {
            return GeneratorList { gens: vec![1] };
        }
        let m = self.multiplicity();
        let bound = self.conductor + m;
        let els = self.elements_up_to(bound);
        let mut gens = Vec::new();
        for &n in &els {
            if n == 0 {
                continue;
            }
            let mut decomposable = false;
            for &x in &els {
                if x == 0 {
                    continue;
                }
                if x > n - x {
                    break;
                }
                if self.contains(n - x) {
                    decomposable = true;
                    break;
                }
            }
            if !decomposable {
                gens.push(n);
            }
        }
        GeneratorList { gens }
    }

    /// Apéry set with respect to a positive element `n`: for each residue
    /// class mod `n`, the least element of the semigroup in that class.
    /// Returned sorted by value.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>, SemigroupError> {
        if n <= 0 || !self.contains(n) {
            return Err(SemigroupError::NotAnElement { value: n });
        }
        let mut by_residue = vec![i64::MIN; n as usize];
        let mut found = 0usize;
        let mut x = 0;
        while found < n as usize {
            if self.contains(x) {
                let r = (x % n) as usize;
                if by_residue[r] == i64::MIN {
                    by_residue[r] = x;
                    found += 1;
                }
            }
            x += 1;
        }
        by_residue.sort_unstable();
        Ok(by_residue)
    }

    /// Pseudo-Frobenius numbers: gaps `x` with `x + s` in the semigroup for
    /// every positive element `s`. It suffices to test the minimal
    /// generators. Undefined for the natural numbers.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>, SemigroupError> {
        if self.is_full() {
            return Err(SemigroupError::FullSemigroup);
        }
        let gens = self.minimal_generators();
        let pf = self
            .gaps()
            .into_iter()
            .filter(|&x| gens.as_slice().iter().all(|&g| self.contains(x + g)))
            .collect();
        Ok(pf)
    }

    /// The type: number of pseudo-Frobenius numbers.
    pub fn type_of(&self) -> Result<i64, SemigroupError> {
        Ok(self.pseudo_frobenius()?.len() as i64)
    }

    /// Gaps `x` whose mirror `frobenius - x` is also a gap. The Frobenius
    /// number itself never qualifies (its mirror is 0).
    pub fn l_set(&self) -> Result<Vec<i64>, SemigroupError> {
        if self.is_full() {
            return Err(SemigroupError::FullSemigroup);
        }
        let f = self.frobenius();
        Ok(self
            .gaps()
            .into_iter()
            .filter(|&x| x != f && !self.contains(f - x))
            .collect())
    }

    /// Symmetric: every integer `x` satisfies exactly one of `x` in the
    /// semigroup, `frobenius - x` in the semigroup. Equivalent to
    /// `2 * genus = frobenius + 1` and to type 1.
    pub fn is_symmetric(&self) -> Result<bool, SemigroupError> {
        if self.is_full() {
            return Err(SemigroupError::FullSemigroup);
        }
        Ok(2 * self.genus() == self.frobenius() + 1)
    }

    /// Pseudo-symmetric: the Frobenius number is even and every gap other
    /// than `frobenius / 2` has its mirror in the semigroup.
    pub fn is_pseudo_symmetric(&self) -> Result<bool, SemigroupError> {
        if self.is_full() {
            return Err(SemigroupError::FullSemigroup);
        }
        let f = self.frobenius();
        if f % 2 != 0 {
            return Ok(false);
        }
        Ok(self
            .gaps()
            .into_iter()
            .all(|n| n == f / 2 || self.contains(f - n)))
    }

    /// Almost symmetric: every mirror-gap pair member is pseudo-Frobenius
    /// (`l_set ⊆ pseudo_frobenius`). Equivalent to
    /// `2 * genus = frobenius + type`.
    pub fn is_almost_symmetric(&self) -> Result<bool, SemigroupError> {
        let pf = self.pseudo_frobenius()?;
        Ok(self.l_set()?.iter().all(|x| pf.contains(x)))
    }

    /// d-symmetric: every multiple of `d` is in the semigroup or has its
    /// mirror in it. Only multiples in `(0, frobenius]` need checking; the
    /// rest hold automatically. The natural numbers are d-symmetric for
    /// every `d`.
    pub fn is_d_symmetric(&self, d: i64) -> bool {
        assert!(d >= 1, "d must be a positive integer");
        let f = self.frobenius();
        let mut n = d;
        while n <= f {
            if !self.contains(n) && !self.contains(f - n) {
                return false;
            }
            n += d;
        }
        true
    }

    /// Least element congruent to the Frobenius number modulo `d`. Always
    /// exists (the cofinite tail covers every residue class).
    pub fn smallest_element_congruent_to_frobenius(&self, d: i64) -> i64 {
        assert!(d >= 1, "d must be a positive integer");
        let target = self.frobenius().rem_euclid(d);
        for &x in &self.small_elements {
            if x % d == target {
                return x;
            }
        }
        let mut x = self.conductor;
        while x % d != target {
            x += 1;
        }
        x
    }
}

impl fmt::Display for NumericalSemigroup {
    /// Set notation: the small elements joined by commas with a trailing
    /// `->` marking the start of the cofinite ray, e.g. `0,3,6->`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.small_elements.iter().map(|x| x.to_string()).collect();
        write!(f, "{}->", parts.join(","))
    }
}

impl serde::Serialize for NumericalSemigroup {
    /// Semigroups appear in JSON reports as their set-notation string.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
