//! Numerical duplication: doubling a semigroup along a relative ideal.
//!
//! Given a semigroup `S`, a relative ideal `E` of `S`, and an odd `b` in
//! `S`, the duplication is `2S ∪ (2E + b)` — evens from the doubled
//! semigroup, odds from the doubled ideal. The union is a numerical
//! semigroup exactly when `E + E + b ⊆ S`, and then its Frobenius number is
//! `2 f(E) + b` with `f(E)` the largest integer outside `E`.
//!
//! The symmetric doubles of `S` — symmetric semigroups `T` with `T/2 = S` —
//! are precisely the duplications along the canonical ideal `K`, one for
//! each odd `b` in `S` with `K + K + b ⊆ S`. Their genus grows with `b`, so
//! the least valid `b` yields the minimal-genus symmetric double; when `S`
//! is almost symmetric the least odd element of `S` already works.

use serde::Serialize;
use thiserror::Error;

use crate::ideal::{containment_witness, RelativeIdeal};
use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DuplicationError {
    #[error("the ideal lives over a different ambient semigroup")]
    AmbientMismatch,
    #[error("invalid b = {b}: {reason}")]
    InvalidB { b: i64, reason: String },
    #[error("duplication is not a semigroup: {x} + {y} + {b} falls outside the base")]
    NotASemigroup { x: i64, y: i64, b: i64 },
    #[error("b_limit too small: some b <= {needed} always yields a symmetric double")]
    LimitTooSmall { needed: i64 },
    #[error("the full semigroup is handled by min_genus_symmetric_double directly")]
    FullSemigroup,
    #[error("premise violated: {reason}")]
    PremiseViolated { reason: String },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// One symmetric (or general) double of a base semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleReport {
    pub base: NumericalSemigroup,
    pub b: i64,
    pub double: NumericalSemigroup,
    pub genus: i64,
    pub frobenius: i64,
}

/// The numerical duplication `2S ∪ (2E + b)`. Fails with a witness pair
/// when `E + E + b` is not contained in `S`, which is exactly the
/// condition for the union to be closed under addition.
pub fn numerical_duplication(
    s: &NumericalSemigroup,
    e: &RelativeIdeal,
    b: i64,
) -> Result<NumericalSemigroup, DuplicationError> {
    if e.ambient() != s {
        return Err(DuplicationError::AmbientMismatch);
    }
    if b % 2 == 0 {
        return Err(DuplicationError::InvalidB {
            b,
            reason: "b must be odd".into(),
        });
    }
    if !s.contains(b) {
        return Err(DuplicationError::InvalidB {
            b,
            reason: "b must be an element of the base".into(),
        });
    }
    // Both parities are complete from this point on (evens past twice the
    // conductor, odds past twice the ideal threshold plus b).
    let top = (2 * s.conductor()).max(2 * (e.offset() + e.threshold()) + b) + 1;
    let mut elements: Vec<i64> = s
        .elements_up_to(top / 2)
        .into_iter()
        .map(|t| 2 * t)
        .collect();
    elements.extend(
        e.elements_up_to((top - b) / 2)
            .into_iter()
            .map(|x| 2 * x + b),
    );
    let fails = elements.iter().any(|&x| x < 0);
    let built = if fails {
        None
    } else {
        match NumericalSemigroup::from_small_elements(&elements, top) {
            Ok(t) => Some(t),
            Err(SemigroupError::NotClosedUnderAddition { .. }) => None,
            Err(other) => return Err(other.into()),
        }
    };
    match built {
        Some(t) => Ok(t),
        None => {
            let (x, y) = containment_witness(e, e, b)
                .expect("same ambient")
                .expect("a non-closed duplication always has a containment witness");
            Err(DuplicationError::NotASemigroup { x, y, b })
        }
    }
}

/// All symmetric doubles of `s` with `b <= b_limit`, ascending in `b`:
/// duplications along the canonical ideal at each odd `b` in `s` for which
/// `K + K + b ⊆ S`. Requires `b_limit >= frobenius + 2`, which always
/// admits at least one double.
pub fn symmetric_doubles(
    s: &NumericalSemigroup,
    b_limit: i64,
) -> Result<Vec<DoubleReport>, DuplicationError> {
    if s.is_full() {
        return Err(DuplicationError::FullSemigroup);
    }
    let needed = s.frobenius() + 2;
    if b_limit < needed {
        return Err(DuplicationError::LimitTooSmall { needed });
    }
    let k = RelativeIdeal::canonical(s).map_err(|_| DuplicationError::FullSemigroup)?;
    let mut out = Vec::new();
    let mut b = 1;
    while b <= b_limit {
        if s.contains(b)
            && containment_witness(&k, &k, b)
                .expect("same ambient")
                .is_none()
        {
            let double = numerical_duplication(s, &k, b)?;
            out.push(make_report(s, b, double));
        }
        b += 2;
    }
    Ok(out)
}

/// The symmetric double of least genus: duplication along the canonical
/// ideal at the least valid odd `b`. The natural numbers double to
/// themselves with `b = 1`.
pub fn min_genus_symmetric_double(s: &NumericalSemigroup) -> DoubleReport {
    if s.is_full() {
        let n = NumericalSemigroup::natural();
        return DoubleReport {
            base: n.clone(),
            b: 1,
            double: n,
            genus: 0,
            frobenius: -1,
        };
    }
    let k = RelativeIdeal::canonical(s).expect("not full");
    let mut b = 1;
    while b <= s.frobenius() + 2 {
        if s.contains(b)
            && containment_witness(&k, &k, b)
                .expect("same ambient")
                .is_none()
        {
            let double = numerical_duplication(s, &k, b).expect("containment verified");
            return make_report(s, b, double);
        }
        b += 2;
    }
    unreachable!("the first odd b past the Frobenius number always works")
}

/// Shortcut for almost symmetric bases: the least odd element of `s`
/// already gives the minimal-genus symmetric double.
pub fn min_genus_symmetric_double_almost_symmetric(
    s: &NumericalSemigroup,
) -> Result<DoubleReport, DuplicationError> {
    if !s.is_almost_symmetric()? {
        return Err(DuplicationError::PremiseViolated {
            reason: format!("{s} is not almost symmetric"),
        });
    }
    let b = least_odd_element(s);
    let k = RelativeIdeal::canonical(s).expect("not full");
    let double = numerical_duplication(s, &k, b)?;
    Ok(make_report(s, b, double))
}

fn least_odd_element(s: &NumericalSemigroup) -> i64 {
    // the conductor or its successor is odd, so the scan always ends
    s.elements_up_to(s.conductor() + 1)
        .into_iter()
        .find(|x| x % 2 == 1)
        .expect("every numerical semigroup has odd elements")
}

fn make_report(s: &NumericalSemigroup, b: i64, double: NumericalSemigroup) -> DoubleReport {
    DoubleReport {
        base: s.clone(),
        b,
        genus: double.genus(),
        frobenius: double.frobenius(),
        double,
    }
}
