//! Brute-force oracles: exhaustive enumeration and definition-level
//! recomputation, used to corroborate the optimized library routines.
//!
//! Everything here is deliberately naive. The genus tree enumerates every
//! numerical semigroup up to a genus bound by removing minimal generators
//! beyond the Frobenius number; a second, independent enumeration filters
//! raw gap subsets. d-folds are enumerated by deciding each non-multiple
//! position with a pruned depth-first search. Frobenius numbers and the
//! full invariant battery are recomputed from membership alone.
//!
//! The verification suites in [`suites`] sweep these oracles against the
//! main API and report any disagreement.

pub mod suites;

use thiserror::Error;

use crate::semigroup::{max_conductor, NumericalSemigroup};

/// Genus ceiling for the tree enumeration (the tree grows roughly
/// exponentially in genus).
pub const MAX_ENUMERATION_GENUS: i64 = 20;

/// Genus ceiling for the subset-filter enumeration, which scans all
/// `2^(2g - 1)` gap subsets.
pub const MAX_SUBSET_GENUS: i64 = 8;

/// Ceiling on undecided positions in the d-fold search; each one doubles
/// the worst-case search space.
pub const MAX_DFOLD_FREE_POSITIONS: i64 = 22;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration bound exceeded: {detail}")]
    BoundExceeded { detail: String },
    #[error("bound too small: need at least {needed}")]
    BoundTooSmall { needed: i64 },
    #[error("unknown suite '{name}'")]
    UnknownSuite { name: String },
}

/// Lazy depth-first enumeration of all numerical semigroups of genus at
/// most the bound, each exactly once, starting from the natural numbers.
pub struct GenusIterator {
    stack: Vec<NumericalSemigroup>,
    max_genus: i64,
}

impl Iterator for GenusIterator {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        let s = self.stack.pop()?;
        if s.genus() < self.max_genus {
            let f = s.frobenius();
            // Removing a minimal generator beyond the Frobenius number
            // keeps closure and raises genus by one; each child is reached
            // from exactly one parent, so the walk is duplicate-free.
            for &m in s.minimal_generators().as_slice().iter().rev() {
                if m > f {
                    self.stack.push(remove_element(&s, m));
                }
            }
        }
        Some(s)
    }
}

fn remove_element(s: &NumericalSemigroup, m: i64) -> NumericalSemigroup {
    let elements: Vec<i64> = s
        .elements_up_to(m + 1)
        .into_iter()
        .filter(|&x| x != m)
        .collect();
    NumericalSemigroup::renormalized(elements)
}

/// Iterator over every numerical semigroup of genus `<= max_genus`.
pub fn enumerate_by_genus(max_genus: i64) -> Result<GenusIterator, OracleError> {
    if max_genus > MAX_ENUMERATION_GENUS {
        return Err(OracleError::BoundExceeded {
            detail: format!("genus bound {max_genus} exceeds {MAX_ENUMERATION_GENUS}"),
        });
    }
    let stack = if max_genus < 0 {
        Vec::new()
    } else {
        vec![NumericalSemigroup::natural()]
    };
    Ok(GenusIterator { stack, max_genus })
}

/// Number of numerical semigroups of each genus `0..=max_genus`.
pub fn census(max_genus: i64) -> Result<Vec<u64>, OracleError> {
    let mut counts = vec![0u64; (max_genus.max(-1) + 1) as usize];
    for s in enumerate_by_genus(max_genus)? {
        counts[s.genus() as usize] += 1;
    }
    Ok(counts)
}

/// Independent enumeration: every subset of `[1, 2*max_genus - 1]` whose
/// complement is closed under addition, as a sorted list. Exponential in
/// the bound, hence the low ceiling.
pub fn enumerate_by_gap_subsets(max_genus: i64) -> Result<Vec<NumericalSemigroup>, OracleError> {
    if max_genus > MAX_SUBSET_GENUS {
        return Err(OracleError::BoundExceeded {
            detail: format!("subset-filter genus bound {max_genus} exceeds {MAX_SUBSET_GENUS}"),
        });
    }
    let mut out = Vec::new();
    if max_genus < 0 {
        return Ok(out);
    }
    let bound = (2 * max_genus - 1).max(0);
    for mask in 0u32..(1u32 << bound) {
        if i64::from(mask.count_ones()) > max_genus {
            continue;
        }
        let gap = |x: i64| x >= 1 && x <= bound && mask & (1 << (x - 1)) != 0;
        let mut closed = true;
        'scan: for x in 1..=bound {
            if gap(x) {
                continue;
            }
            for y in x..=bound - x {
                if !gap(y) && gap(x + y) {
                    closed = false;
                    break 'scan;
                }
            }
        }
        if !closed {
            continue;
        }
        let top = (1..=bound).filter(|&x| gap(x)).max().unwrap_or(-1) + 1;
        let elements: Vec<i64> = (0..=top).filter(|&x| !gap(x)).collect();
        out.push(NumericalSemigroup::renormalized(elements));
    }
    out.sort_by(|a, b| {
        (a.genus(), a.small_elements()).cmp(&(b.genus(), b.small_elements()))
    });
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    In,
    Out,
    Free,
}

/// Every d-fold `T` of `s` (that is, `T/d = s`) with Frobenius number at
/// most `f_bound`, sorted by genus then elements. Positions that are
/// multiples of `d` are forced by `s`; the remaining positions up to
/// `f_bound` are decided by depth-first search with closure pruning.
pub fn enumerate_dfolds(
    s: &NumericalSemigroup,
    d: i64,
    f_bound: i64,
) -> Result<Vec<NumericalSemigroup>, OracleError> {
    assert!(d >= 1, "d must be a positive integer");
    let min_f = d * s.frobenius();
    if f_bound < min_f {
        return Err(OracleError::BoundTooSmall { needed: min_f });
    }
    if f_bound < -1 {
        // no numerical semigroup has Frobenius number below -1
        return Ok(Vec::new());
    }
    let free_count = f_bound - f_bound.div_euclid(d);
    if free_count > MAX_DFOLD_FREE_POSITIONS {
        return Err(OracleError::BoundExceeded {
            detail: format!(
                "{free_count} undecided positions exceed {MAX_DFOLD_FREE_POSITIONS}"
            ),
        });
    }

    let n = (f_bound.max(0) + 1) as usize;
    let mut status = vec![Status::Free; n + 1];
    status[0] = Status::In;
    for x in 1..=f_bound {
        if x % d == 0 {
            status[x as usize] = if s.contains(x / d) {
                Status::In
            } else {
                Status::Out
            };
        }
    }
    let free_positions: Vec<i64> = (1..=f_bound).filter(|x| x % d != 0).collect();
    let mut results = Vec::new();
    search(&free_positions, 0, &mut status, f_bound, &mut results);
    results.sort_by(|a, b| {
        (a.genus(), a.small_elements()).cmp(&(b.genus(), b.small_elements()))
    });
    Ok(results)
}

fn search(
    positions: &[i64],
    i: usize,
    status: &mut Vec<Status>,
    f_bound: i64,
    results: &mut Vec<NumericalSemigroup>,
) {
    if i == positions.len() {
        // everything beyond f_bound is in; collect the decided set
        let elements: Vec<i64> = (0..=f_bound.max(0) + 1)
            .filter(|&x| x > f_bound || status[x as usize] == Status::In)
            .collect();
        results.push(NumericalSemigroup::renormalized(elements));
        return;
    }
    let p = positions[i];
    // Option 1: p is an element. Sums with earlier-decided elements must
    // not land on a decided gap (sums beyond f_bound are always in).
    status[p as usize] = Status::In;
    let mut ok = true;
    for x in 1..=f_bound {
        if status[x as usize] == Status::In {
            let q = p + x;
            if q <= f_bound && status[q as usize] == Status::Out {
                ok = false;
                break;
            }
        }
    }
    if ok {
        search(positions, i + 1, status, f_bound, results);
    }
    // Option 2: p is a gap. No pair of elements may sum to it; everything
    // below p is already decided, so this check is final.
    status[p as usize] = Status::Out;
    let mut ok = true;
    for x in 1..=p / 2 {
        if status[x as usize] == Status::In && status[(p - x) as usize] == Status::In {
            ok = false;
            break;
        }
    }
    if ok {
        search(positions, i + 1, status, f_bound, results);
    }
    status[p as usize] = Status::Free;
}

fn oracle_gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Frobenius number by plain sieving: mark reachable sums until a full
/// window of consecutive reachable values (of width the least generator)
/// appears; the last unreachable value before it is the answer.
pub fn brute_frobenius(gens: &[i64]) -> Result<i64, OracleError> {
    assert!(!gens.is_empty(), "generator list must be nonempty");
    assert!(gens.iter().all(|&g| g > 0), "generators must be positive");
    assert_eq!(
        gens.iter().fold(0, |acc, &g| oracle_gcd(acc, g)),
        1,
        "generators must be coprime"
    );
    let window = *gens.iter().min().unwrap();
    let cap = max_conductor() + window + 1;
    let mut reachable = vec![true]; // position 0
    let mut last_gap = -1i64;
    let mut run = 0i64;
    let mut x = 1i64;
    loop {
        let hit = gens
            .iter()
            .any(|&g| g <= x && reachable[(x - g) as usize]);
        reachable.push(hit);
        if hit {
            run += 1;
            if run == window {
                return Ok(last_gap);
            }
        } else {
            last_gap = x;
            run = 0;
        }
        x += 1;
        if x > cap {
            return Err(OracleError::BoundExceeded {
                detail: format!("sieve passed {cap} without stabilizing"),
            });
        }
    }
}

/// The invariant battery recomputed from membership alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteInvariants {
    pub gaps: Vec<i64>,
    pub genus: i64,
    pub frobenius: i64,
    pub minimal_generators: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    pub semigroup_type: i64,
    pub l_set: Vec<i64>,
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub almost_symmetric: bool,
}

/// Recomputes every invariant by definition, using only `contains` and the
/// conductor as a scan bound. For the natural numbers the pseudo-Frobenius
/// set is empty and the predicates take their vacuous values.
pub fn brute_invariants(s: &NumericalSemigroup) -> BruteInvariants {
    let c = s.conductor();
    let gaps: Vec<i64> = (0..=c).filter(|&x| !s.contains(x)).collect();
    let genus = gaps.len() as i64;
    let frobenius = gaps.last().copied().unwrap_or(-1);

    let multiplicity = (1..=c.max(1)).find(|&x| s.contains(x)).unwrap_or(c.max(1));
    // past conductor + multiplicity every element splits as a sum
    let mut minimal_generators = Vec::new();
    for candidate in 1..=c + multiplicity {
        if !s.contains(candidate) {
            continue;
        }
        let splits =
            (1..candidate).any(|x| s.contains(x) && s.contains(candidate - x));
        if !splits {
            minimal_generators.push(candidate);
        }
    }

    let positives: Vec<i64> = (1..=c).filter(|&x| s.contains(x)).collect();
    let pseudo_frobenius: Vec<i64> = gaps
        .iter()
        .copied()
        .filter(|&x| positives.iter().all(|&p| s.contains(x + p)))
        .collect();
    let semigroup_type = pseudo_frobenius.len() as i64;

    let l_set: Vec<i64> = gaps
        .iter()
        .copied()
        .filter(|&x| x != frobenius && !s.contains(frobenius - x))
        .collect();

    let symmetric = (0..=frobenius).all(|x| s.contains(x) != s.contains(frobenius - x));
    let pseudo_symmetric = frobenius >= 0
        && frobenius % 2 == 0
        && gaps
            .iter()
            .all(|&x| 2 * x == frobenius || s.contains(frobenius - x));
    let almost_symmetric = l_set.iter().all(|x| pseudo_frobenius.contains(x));

    BruteInvariants {
        gaps,
        genus,
        frobenius,
        minimal_generators,
        pseudo_frobenius,
        semigroup_type,
        l_set,
        symmetric,
        pseudo_symmetric,
        almost_symmetric,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> NumericalSemigroup {
        crate::notation::parse_semigroup(text).unwrap()
    }

    #[test]
    fn census_matches_the_known_sequence() {
        assert_eq!(census(8).unwrap(), vec![1, 1, 2, 4, 7, 12, 23, 39, 67]);
        assert_eq!(
            enumerate_by_genus(8).unwrap().count(),
            1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67
        );
        assert!(enumerate_by_genus(21).is_err());
    }

    #[test]
    fn tree_and_subset_enumerations_agree() {
        let mut tree: Vec<NumericalSemigroup> = enumerate_by_genus(6).unwrap().collect();
        tree.sort_by(|a, b| {
            (a.genus(), a.small_elements()).cmp(&(b.genus(), b.small_elements()))
        });
        let subsets = enumerate_by_gap_subsets(6).unwrap();
        assert_eq!(tree, subsets);
        assert_eq!(tree.len(), 1 + 1 + 2 + 4 + 7 + 12 + 23);
        assert!(enumerate_by_gap_subsets(9).is_err());
    }

    #[test]
    fn dfold_enumeration_recovers_known_minimizers() {
        let base = s("0,3,6->");
        let folds = enumerate_dfolds(&base, 3, 15).unwrap();
        assert!(!folds.is_empty());
        for t in &folds {
            assert_eq!(t.quotient(3), base);
        }
        let best = folds.iter().map(|t| t.genus()).min().unwrap();
        assert_eq!(best, 9);
        let minimizers: Vec<String> = folds
            .iter()
            .filter(|t| t.genus() == best)
            .map(|t| t.to_string())
            .collect();
        assert!(minimizers.contains(&"0,8,9,10,11,13,14,16->".to_string()));
        assert!(minimizers.contains(&"0,7,9,10,11,13,14,16->".to_string()));
        for t in folds.iter().filter(|t| t.genus() == best) {
            assert_eq!(t.frobenius(), 15);
        }
    }

    #[test]
    fn dfold_enumeration_respects_bounds() {
        let base = s("0,3,6->");
        assert_eq!(
            enumerate_dfolds(&base, 3, 14),
            Err(OracleError::BoundTooSmall { needed: 15 })
        );
        // 27 undecided positions: refused by the guardrail
        assert!(matches!(
            enumerate_dfolds(&s("0,5,6,7,10->"), 4, 36),
            Err(OracleError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn dfolds_of_the_natural_numbers() {
        let n = NumericalSemigroup::natural();
        let folds = enumerate_dfolds(&n, 2, 3).unwrap();
        let listed: Vec<String> = folds.iter().map(|t| t.to_string()).collect();
        assert_eq!(listed, vec!["0->", "0,2->", "0,2,4->"]);
        assert_eq!(enumerate_dfolds(&n, 2, -1).unwrap().len(), 1);
        assert!(enumerate_dfolds(&n, 2, -2).unwrap().is_empty());
    }

    #[test]
    fn brute_frobenius_on_classics() {
        assert_eq!(brute_frobenius(&[3, 7, 8]).unwrap(), 5);
        assert_eq!(brute_frobenius(&[6, 9, 20]).unwrap(), 43);
        assert_eq!(brute_frobenius(&[2, 3]).unwrap(), 1);
        assert_eq!(brute_frobenius(&[1]).unwrap(), -1);
        assert_eq!(brute_frobenius(&[5, 7]).unwrap(), 23);
    }

    #[test]
    fn brute_invariants_on_the_running_example() {
        let b = brute_invariants(&s("0,5,6,7,10->"));
        assert_eq!(b.gaps, vec![1, 2, 3, 4, 8, 9]);
        assert_eq!((b.genus, b.frobenius), (6, 9));
        assert_eq!(b.minimal_generators, vec![5, 6, 7]);
        assert_eq!(b.pseudo_frobenius, vec![8, 9]);
        assert_eq!(b.semigroup_type, 2);
        assert_eq!(b.l_set, vec![1, 8]);
        assert!(!b.symmetric && !b.pseudo_symmetric && !b.almost_symmetric);

        let n = brute_invariants(&NumericalSemigroup::natural());
        assert_eq!(n.frobenius, -1);
        assert!(n.pseudo_frobenius.is_empty());
        assert_eq!(n.minimal_generators, vec![1]);
        assert!(n.symmetric && !n.pseudo_symmetric && n.almost_symmetric);
    }
}
