//! Brute-force references built only from the definitions.
//!
//! Nothing here calls the tree, class or Apéry machinery; the functions scan
//! subsets and partitions directly so they can be used to cross-check the
//! fast paths. Their cost is exponential and capped accordingly.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::genset::{GenSet, Submonoid};
use crate::semigroup::NumericalSemigroup;

pub const MAX_ORACLE_FROBENIUS: u32 = 16;
pub const MAX_PARTITION_TARGET: u32 = 40;
pub const MAX_HITTING_TARGET: u32 = 14;

/// A partition of `target`, summands non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionTuple {
    pub summands: Vec<u32>,
    pub target: u32,
}

fn cap(what: &'static str, got: u32, limit: u32) -> Result<()> {
    if got > limit {
        return Err(Error::CapacityExceeded {
            what,
            got: got as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}

/// Every `{0} ∪ X ∪ {F+1, →}` with `X ⊆ {1, …, F−1}` that is closed under
/// addition and contains `A`, sorted canonically.
pub fn all_semigroups_with_frobenius(frobenius: u32, required: &GenSet) -> Result<Vec<NumericalSemigroup>> {
    cap("F", frobenius, MAX_ORACLE_FROBENIUS)?;
    assert!(frobenius >= 1);
    let f = frobenius;
    let is_member = |mask: u32, x: u32| x == 0 || x > f || (x < f && mask >> (x - 1) & 1 == 1);
    let mut out = Vec::new();
    for mask in 0u32..1 << (f - 1) {
        if !required.iter().all(|a| is_member(mask, a)) {
            continue;
        }
        let closed = (1..f).all(|x| {
            !is_member(mask, x) || (x..f).all(|y| !is_member(mask, y) || is_member(mask, x + y))
        });
        if closed {
            let members = (0..f).filter(|&x| is_member(mask, x));
            out.push(NumericalSemigroup::from_small_elements(members, f)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Members of the family above that have no strict superset in it.
pub fn irreducibles_bruteforce(frobenius: u32, required: &GenSet) -> Result<Vec<NumericalSemigroup>> {
    let family = all_semigroups_with_frobenius(frobenius, required)?;
    Ok(maximal_by_inclusion(&family))
}

fn maximal_by_inclusion(family: &[NumericalSemigroup]) -> Vec<NumericalSemigroup> {
    family
        .iter()
        .filter(|s| !family.iter().any(|t| t != *s && s.is_subset_of(t)))
        .cloned()
        .collect()
}

/// Maximal members of `{S : A ⊆ S, S ∩ B = ∅}`, by scanning every semigroup
/// with Frobenius number at most `max(B)`.
pub fn maximal_avoiding_bruteforce(required: &GenSet, forbidden: &GenSet) -> Result<Vec<NumericalSemigroup>> {
    let top = forbidden.max().ok_or(Error::EmptyForbidden)?;
    cap("max(B)", top, MAX_ORACLE_FROBENIUS)?;
    let mut family = Vec::new();
    for f in 1..=top {
        family.extend(
            all_semigroups_with_frobenius(f, required)?
                .into_iter()
                .filter(|s| s.avoids_genset(forbidden)),
        );
    }
    let mut out = maximal_by_inclusion(&family);
    out.sort();
    Ok(out)
}

/// Calls `visit` with each partition of `target` made of parts accepted by
/// `allowed`, in lexicographically descending order, until it breaks.
pub fn visit_partitions<P, V>(target: u32, allowed: P, mut visit: V) -> ControlFlow<()>
where
    P: Fn(u32) -> bool,
    V: FnMut(&[u32]) -> ControlFlow<()>,
{
    fn go<P, V>(rest: u32, largest: u32, parts: &mut Vec<u32>, allowed: &P, visit: &mut V) -> ControlFlow<()>
    where
        P: Fn(u32) -> bool,
        V: FnMut(&[u32]) -> ControlFlow<()>,
    {
        if rest == 0 {
            return visit(parts);
        }
        for p in (1..=largest.min(rest)).rev() {
            if !allowed(p) {
                continue;
            }
            parts.push(p);
            let flow = go(rest - p, p, parts, allowed, visit);
            parts.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    go(target, target, &mut Vec::new(), &allowed, &mut visit)
}

/// The first partition of `target` (descending lexicographic order) using only
/// parts accepted by `allowed`.
///
/// Dead `(remaining, largest part)` states are memoized, so the search stays
/// polynomial in `target`.
pub fn first_partition<P>(target: u32, allowed: P) -> Option<PartitionTuple>
where
    P: Fn(u32) -> bool,
{
    fn go<P: Fn(u32) -> bool>(rest: u32, largest: u32, parts: &mut Vec<u32>, allowed: &P, dead: &mut BTreeSet<(u32, u32)>) -> bool {
        if rest == 0 {
            return true;
        }
        if dead.contains(&(rest, largest)) {
            return false;
        }
        for p in (1..=largest.min(rest)).rev() {
            if allowed(p) {
                parts.push(p);
                if go(rest - p, p, parts, allowed, dead) {
                    return true;
                }
                parts.pop();
            }
        }
        dead.insert((rest, largest));
        false
    }
    let mut parts = Vec::new();
    go(target, target, &mut parts, &allowed, &mut BTreeSet::new()).then_some(PartitionTuple {
        summands: parts,
        target,
    })
}

/// All partitions of `b`, lexicographically descending.
pub fn partitions(b: u32) -> Result<Vec<PartitionTuple>> {
    cap("b", b, MAX_PARTITION_TARGET)?;
    let mut out = Vec::new();
    let _ = visit_partitions(b, |_| true, |p| {
        out.push(PartitionTuple {
            summands: p.to_vec(),
            target: b,
        });
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// `{ {x₁,…,xₖ} ∖ ⟨A⟩ : x₁+⋯+xₖ a partition of some b ∈ B }`, sorted.
pub fn g_family(required: &GenSet, forbidden: &GenSet) -> Result<Vec<Vec<u32>>> {
    let Some(top) = forbidden.max() else {
        return Ok(Vec::new());
    };
    cap("max(B)", top, MAX_PARTITION_TARGET)?;
    let monoid = Submonoid::new(required, top);
    let mut family = BTreeSet::new();
    for b in forbidden.iter() {
        for p in partitions(b)? {
            let x: BTreeSet<u32> = p.summands.into_iter().filter(|&s| !monoid.contains(s)).collect();
            family.insert(x.into_iter().collect::<Vec<_>>());
        }
    }
    Ok(family.into_iter().collect())
}

/// Inclusion-minimal `K ⊆ {1, …, max(B)} ∖ ⟨A⟩` meeting every set of
/// [`g_family`], each ascending, the family sorted.
pub fn minimal_hitting_sets(required: &GenSet, forbidden: &GenSet) -> Result<Vec<Vec<u32>>> {
    let Some(top) = forbidden.max() else {
        return Ok(vec![Vec::new()]);
    };
    cap("max(B)", top, MAX_HITTING_TARGET)?;
    let monoid = Submonoid::new(required, top);
    let universe: Vec<u32> = (1..=top).filter(|&x| !monoid.contains(x)).collect();
    let index = |x: u32| universe.binary_search(&x).expect("summand outside ⟨A⟩ is ≤ max(B)");
    let targets: Vec<u32> = g_family(required, forbidden)?
        .iter()
        .map(|x| x.iter().fold(0u32, |m, &s| m | 1 << index(s)))
        .collect();
    let hitting: Vec<u32> = (0u32..1 << universe.len())
        .filter(|k| targets.iter().all(|t| k & t != 0))
        .collect();
    let mut minimal: Vec<Vec<u32>> = hitting
        .iter()
        .filter(|&&k| !hitting.iter().any(|&j| j != k && j & k == j))
        .map(|&k| {
            (0..universe.len())
                .filter(|i| k >> i & 1 == 1)
                .map(|i| universe[i])
                .collect()
        })
        .collect();
    minimal.sort();
    Ok(minimal)
}
