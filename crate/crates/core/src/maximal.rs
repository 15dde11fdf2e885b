//! ℳ(A, B): the maximal semigroups that contain `A` and avoid every element of `B`.
//!
//! With `n = max(B) + 1`, each candidate is an intersection of one irreducible
//! from every ℐ(A, b), b ∈ B. Intersections become componentwise maxima of
//! θₙ vectors, and the maximal semigroups are exactly those whose vector is
//! minimal in the product order.

use std::collections::HashSet;

use crate::apery::{semigroup_from_theta, theta, AperyVector};
use crate::error::{Error, Result};
use crate::genset::{GenSet, Submonoid};
use crate::irreducible::enumerate_irreducibles_with;
use crate::par::Workers;
use crate::semigroup::NumericalSemigroup;

/// Upper bound on joins evaluated when folding in one more forbidden element.
pub const MAX_JOIN_WORK: u64 = 10_000_000;

/// `B ∩ ⟨A⟩ = ∅`.
pub fn check_feasible(required: &GenSet, forbidden: &GenSet) -> bool {
    first_generated(required, forbidden).is_none()
}

fn first_generated(required: &GenSet, forbidden: &GenSet) -> Option<crate::error::Combination> {
    let top = forbidden.max()?;
    let monoid = Submonoid::new(required, top);
    forbidden.iter().find_map(|b| monoid.combination(b))
}

/// A feasible pair `(A, B)` with its modulus `n = max(B) + 1`.
#[derive(Clone, Debug)]
pub struct AvoidanceProblem {
    required: GenSet,
    forbidden: GenSet,
    modulus: u32,
}

impl AvoidanceProblem {
    pub fn new(required: &GenSet, forbidden: &GenSet) -> Result<Self> {
        let top = forbidden.max().ok_or(Error::EmptyForbidden)?;
        if let Some(witness) = first_generated(required, forbidden) {
            return Err(Error::Infeasible(witness));
        }
        Ok(AvoidanceProblem {
            required: required.clone(),
            forbidden: forbidden.clone(),
            modulus: top + 1,
        })
    }

    pub fn required(&self) -> &GenSet {
        &self.required
    }

    pub fn forbidden(&self) -> &GenSet {
        &self.forbidden
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Minimal(Θ(A, B)), sorted.
    ///
    /// The product is folded one forbidden element at a time, keeping only the
    /// minimal partial joins: joining is monotone, so a dominated partial join
    /// can only produce dominated (or duplicate) final vectors.
    pub fn minimal_joins(&self, workers: Workers) -> Result<Vec<AperyVector>> {
        let n = self.modulus;
        let mut front: Option<Vec<AperyVector>> = None;
        for b in self.forbidden.iter() {
            let family = theta_family_with(&self.required, b, n, workers)?;
            front = Some(match front {
                // irreducibles sharing a Frobenius number are pairwise incomparable
                None => family,
                Some(prev) => {
                    let work = prev.len() as u64 * family.len() as u64;
                    if work > MAX_JOIN_WORK {
                        return Err(Error::CapacityExceeded {
                            what: "joins per stage",
                            got: work,
                            limit: MAX_JOIN_WORK,
                        });
                    }
                    let partial = workers.map(&prev, |p| {
                        let joins: Vec<AperyVector> =
                            family.iter().map(|e| p.join_unchecked(e)).collect();
                        pareto_min(joins)
                    });
                    pareto_min(partial.into_iter().flatten().collect())
                }
            });
        }
        Ok(front.expect("forbidden set is non-empty"))
    }

    /// ℳ(A, B), sorted canonically.
    pub fn solve(&self, workers: Workers) -> Result<Vec<NumericalSemigroup>> {
        let mut out = self
            .minimal_joins(workers)?
            .iter()
            .map(semigroup_from_theta)
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        Ok(out)
    }
}

/// `{θₙ(S) : S ∈ ℐ(A, b)}`, sorted. Requires `n > b`, so `n` lies in every such `S`.
pub fn theta_family(required: &GenSet, b: u32, n: u32) -> Result<Vec<AperyVector>> {
    theta_family_with(required, b, n, Workers::sequential())
}

fn theta_family_with(
    required: &GenSet,
    b: u32,
    n: u32,
    workers: Workers,
) -> Result<Vec<AperyVector>> {
    assert!(n > b, "modulus {n} must exceed {b}");
    let mut v = enumerate_irreducibles_with(required, b, workers)?
        .iter()
        .map(|s| theta(s, n))
        .collect::<Result<Vec<_>>>()?;
    v.sort();
    Ok(v)
}

/// Elements of `e` minimal under the product order, deduplicated and sorted.
pub fn minimal_tuples(e: &[AperyVector]) -> Result<Vec<AperyVector>> {
    if let Some(first) = e.first() {
        for v in e {
            if v.modulus() != first.modulus() {
                return Err(Error::ModulusMismatch {
                    left: first.modulus(),
                    right: v.modulus(),
                });
            }
        }
    }
    Ok(pareto_min(e.to_vec()))
}

fn pareto_min(mut v: Vec<AperyVector>) -> Vec<AperyVector> {
    // a strict dominator has a strictly smaller coordinate sum, so it is seen first
    v.sort_by_cached_key(|x| x.coord_sum());
    let mut seen = HashSet::new();
    let mut kept: Vec<AperyVector> = Vec::new();
    for x in v {
        if !seen.insert(x.clone()) {
            continue;
        }
        if !kept.iter().any(|k| k.dominated_by(&x)) {
            kept.push(x);
        }
    }
    kept.sort();
    kept
}

/// ℳ(A, B), sorted canonically.
pub fn maximal_avoiding(required: &GenSet, forbidden: &GenSet) -> Result<Vec<NumericalSemigroup>> {
    maximal_avoiding_with(required, forbidden, Workers::sequential())
}

pub fn maximal_avoiding_with(
    required: &GenSet,
    forbidden: &GenSet,
    workers: Workers,
) -> Result<Vec<NumericalSemigroup>> {
    AvoidanceProblem::new(required, forbidden)?.solve(workers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irreducible::enumerate_irreducibles;

    fn sg(gens: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&GenSet::normalize(gens.iter().copied())).unwrap()
    }

    fn v(n: u32, c: &[u32]) -> AperyVector {
        AperyVector::new(n, c.to_vec()).unwrap()
    }

    #[test]
    fn feasibility() {
        assert!(check_feasible(&GenSet::from([4, 9]), &GenSet::from([11, 14])));
        assert!(!check_feasible(&GenSet::from([4, 9]), &GenSet::from([13])));
        assert!(check_feasible(&GenSet::empty(), &GenSet::from([1])));
        match AvoidanceProblem::new(&GenSet::from([4, 9]), &GenSet::from([11, 13])) {
            Err(Error::Infeasible(w)) => assert_eq!(w.to_string(), "13 = 4 + 9"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            AvoidanceProblem::new(&GenSet::from([4]), &GenSet::empty()),
            Err(Error::EmptyForbidden)
        ));
    }

    #[test]
    fn theta_families() {
        let a = GenSet::from([4, 9]);
        let e1 = theta_family(&a, 11, 15).unwrap();
        let mut want = vec![
            v(15, &[16, 17, 18, 4, 20, 6, 22, 8, 9, 10, 26, 12, 13, 14]),
            v(15, &[16, 17, 18, 4, 5, 21, 22, 8, 9, 10, 26, 12, 13, 14]),
        ];
        want.sort();
        assert_eq!(e1, want);
        assert_eq!(
            theta_family(&a, 14, 15).unwrap(),
            vec![v(15, &[16, 17, 18, 4, 20, 21, 22, 8, 9, 25, 11, 12, 13, 29])]
        );
        assert_eq!(theta_family(&GenSet::empty(), 1, 2).unwrap(), vec![v(2, &[3])]);
    }

    #[test]
    fn minimal_selection() {
        let one = vec![v(3, &[4, 5])];
        assert_eq!(minimal_tuples(&one).unwrap(), one);
        let e = vec![v(3, &[1, 2]), v(3, &[4, 2]), v(3, &[4, 5]), v(3, &[1, 2]), v(3, &[7, 5])];
        assert_eq!(minimal_tuples(&e).unwrap(), vec![v(3, &[1, 2])]);
        let e = vec![v(3, &[4, 5]), v(3, &[7, 2]), v(3, &[7, 5])];
        assert_eq!(minimal_tuples(&e).unwrap(), vec![v(3, &[4, 5]), v(3, &[7, 2])]);
        assert!(matches!(
            minimal_tuples(&[v(3, &[1, 2]), v(2, &[1])]),
            Err(Error::ModulusMismatch { .. })
        ));
        assert!(minimal_tuples(&[]).unwrap().is_empty());
        let raw = |c: [u32; 2]| AperyVector::raw(3, c.to_vec());
        assert_eq!(
            minimal_tuples(&[raw([1, 4]), raw([2, 3]), raw([2, 4])]).unwrap(),
            vec![raw([1, 4]), raw([2, 3])]
        );
    }

    #[test]
    fn joined_front_example() {
        let p = AvoidanceProblem::new(&GenSet::from([4, 9]), &GenSet::from([11, 14])).unwrap();
        assert_eq!(
            p.minimal_joins(Workers::sequential()).unwrap(),
            vec![v(15, &[16, 17, 18, 4, 20, 21, 22, 8, 9, 25, 26, 12, 13, 29])]
        );
    }

    #[test]
    fn maximal_examples() {
        assert_eq!(
            maximal_avoiding(&GenSet::from([4, 9]), &GenSet::from([11, 14])).unwrap(),
            vec![sg(&[4, 9, 15])]
        );
        assert_eq!(
            maximal_avoiding(&GenSet::empty(), &GenSet::from([4])).unwrap(),
            vec![sg(&[3, 5, 7])]
        );
        assert_eq!(
            maximal_avoiding(&GenSet::from([2]), &GenSet::from([3])).unwrap(),
            vec![sg(&[2, 5])]
        );
    }

    #[test]
    fn singleton_forbidden_set_gives_irreducibles() {
        for (a, b) in [(vec![], 13u32), (vec![4], 11), (vec![3, 5], 7), (vec![6], 17)] {
            let a = GenSet::normalize(a);
            assert_eq!(
                maximal_avoiding(&a, &GenSet::from([b])).unwrap(),
                enumerate_irreducibles(&a, b).unwrap()
            );
        }
    }

    #[test]
    fn outputs_are_sound_and_incomparable() {
        let a = GenSet::from([5]);
        let b = GenSet::from([3, 8, 12, 13]);
        let out = maximal_avoiding(&a, &b).unwrap();
        assert!(!out.is_empty());
        for (i, s) in out.iter().enumerate() {
            assert!(s.contains_genset(&a) && s.avoids_genset(&b));
            assert!(s.frobenius() <= b.max().unwrap());
            for t in &out[i + 1..] {
                assert!(!s.is_subset_of(t) && !t.is_subset_of(s));
            }
        }
        let par = maximal_avoiding_with(&a, &b, Workers::new(4)).unwrap();
        assert_eq!(par, out);
    }
}
