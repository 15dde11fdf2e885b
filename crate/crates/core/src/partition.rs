//! Minimal sets of "quasi-required" summands.
//!
//! Given `A` and a finite `B`, a set `K` of positive integers is a solution
//! when it avoids ⟨A⟩ and every partition of every `b ∈ B` has a summand in
//! `K`. The inclusion-minimal solutions are precisely the gap sets of the
//! semigroups in ℳ(A, B).

use std::fmt;

use crate::error::{Error, Result};
use crate::genset::{GenSet, Submonoid};
use crate::maximal::maximal_avoiding_with;
use crate::oracle::{first_partition, PartitionTuple};
use crate::par::Workers;
use crate::semigroup::NumericalSemigroup;

/// One minimal solution, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionSet(Vec<u32>);

impl SolutionSet {
    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    /// The semigroup `ℕ ∖ K`.
    pub fn complement(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_gaps(self.0.iter().copied())
            .expect("a solution set is the gap set of a semigroup")
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl From<&NumericalSemigroup> for SolutionSet {
    fn from(s: &NumericalSemigroup) -> Self {
        SolutionSet(s.gaps())
    }
}

impl fmt::Display for SolutionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", GenSet::normalize(self.0.iter().copied()))
    }
}

/// All minimal solutions, sorted lexicographically.
pub fn solve(required: &GenSet, forbidden: &GenSet) -> Result<Vec<SolutionSet>> {
    solve_with(required, forbidden, Workers::sequential())
}

pub fn solve_with(required: &GenSet, forbidden: &GenSet, workers: Workers) -> Result<Vec<SolutionSet>> {
    let mut out: Vec<SolutionSet> = maximal_avoiding_with(required, forbidden, workers)?
        .iter()
        .map(SolutionSet::from)
        .collect();
    out.sort();
    Ok(out)
}

/// A partition of some `b ∈ B` none of whose summands lies in `K`, if any.
///
/// Summands in ⟨A⟩ never count as hits, so when `K ∩ ⟨A⟩ = ∅` this is exactly
/// a partition whose reduced summand set misses `K`.
pub fn unhit_partition(k: &[u32], forbidden: &GenSet) -> Option<PartitionTuple> {
    forbidden
        .iter()
        .find_map(|b| first_partition(b, |x| k.binary_search(&x).is_err()))
}

/// `K ∩ ⟨A⟩ = ∅` and `K` meets every reduced partition of every `b ∈ B`.
pub fn check_solution(k: &[u32], required: &GenSet, forbidden: &GenSet) -> bool {
    let k = GenSet::normalize(k.iter().copied());
    if let Some(top) = k.max() {
        let monoid = Submonoid::new(required, top);
        if k.iter().any(|x| monoid.contains(x)) {
            return false;
        }
    }
    unhit_partition(k.as_slice(), forbidden).is_none()
}

/// Whether dropping any single element breaks the solution.
pub fn is_minimal_solution(k: &[u32], required: &GenSet, forbidden: &GenSet) -> Result<bool> {
    if !check_solution(k, required, forbidden) {
        return Err(Error::NotASolution);
    }
    let k = GenSet::normalize(k.iter().copied());
    let minimal = k.iter().all(|c| {
        let rest: Vec<u32> = k.iter().filter(|&x| x != c).collect();
        !check_solution(&rest, required, forbidden)
    });
    Ok(minimal)
}
