//! The irreducible semigroups ℐ(A, F) and the tree rooted at C(A, F).
//!
//! Every S ∈ ℐ(A, F) other than the root has a parent obtained by swapping
//! its least "free" small generator α(S) for F − α(S); the children of a node
//! are the inverse swaps. A breadth-first walk from the root therefore visits
//! each member of ℐ(A, F) exactly once.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::genset::{GenSet, Submonoid};
use crate::par::Workers;
use crate::semigroup::NumericalSemigroup;

/// α(S), with `Infinite` for the root. `Finite(_) < Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlphaValue {
    Finite(u32),
    Infinite,
}

/// Fixed `(A, F)` with `F ∉ ⟨A⟩` and the root `C(A, F)`.
#[derive(Clone, Debug)]
pub struct IrreducibleContext {
    required: GenSet,
    frobenius: u32,
    monoid: Submonoid,
    root: NumericalSemigroup,
}

impl IrreducibleContext {
    pub fn new(required: &GenSet, frobenius: u32) -> Result<Self> {
        assert!(frobenius >= 1, "Frobenius number must be positive");
        let monoid = Submonoid::new(required, frobenius);
        if let Some(witness) = monoid.combination(frobenius) {
            return Err(Error::Infeasible(witness));
        }
        let root = delta(&NumericalSemigroup::cofinite_extension(&monoid, frobenius))?;
        Ok(IrreducibleContext {
            required: required.clone(),
            frobenius,
            monoid,
            root,
        })
    }

    pub fn required(&self) -> &GenSet {
        &self.required
    }

    pub fn frobenius(&self) -> u32 {
        self.frobenius
    }

    /// ⟨A⟩ tabulated on `[0, F]`.
    pub fn monoid(&self) -> &Submonoid {
        &self.monoid
    }

    /// C(A, F).
    pub fn root(&self) -> &NumericalSemigroup {
        &self.root
    }

    /// `min{x ∈ msg(S) : x ∉ A, 2x < F}`.
    pub fn alpha(&self, s: &NumericalSemigroup) -> AlphaValue {
        let f = self.frobenius;
        s.msg()
            .iter()
            .copied()
            .take_while(|&x| 2 * x < f)
            .find(|&x| {
                // a minimal generator of S ⊇ A can't be a non-trivial combination of A
                debug_assert!(self.required.contains(x) || !self.monoid.contains(x));
                !self.required.contains(x)
            })
            .map_or(AlphaValue::Infinite, AlphaValue::Finite)
    }

    /// `(S ∖ {α(S)}) ∪ {F − α(S)}`.
    pub fn parent(&self, s: &NumericalSemigroup) -> Result<NumericalSemigroup> {
        match self.alpha(s) {
            AlphaValue::Infinite => Err(Error::AtRoot),
            AlphaValue::Finite(a) => Ok(s.exchange(a, self.frobenius - a)),
        }
    }

    /// Children of `s` in the tree, ordered by the swapped generator.
    pub fn children(&self, s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
        let f = self.frobenius;
        let alpha = self.alpha(s);
        s.msg()
            .iter()
            .copied()
            .filter(|&x| {
                f < 2 * x
                    && x < f
                    && !self.required.contains(x)
                    && !s.contains(2 * x - f)
                    && 3 * x as u64 != 2 * f as u64
                    && 4 * x as u64 != 3 * f as u64
                    && AlphaValue::Finite(f - x) < alpha
            })
            .map(|x| s.exchange(x, f - x))
            .collect()
    }

    /// ℐ(A, F) in canonical (gap-lexicographic) order.
    pub fn enumerate(&self, workers: Workers) -> Vec<NumericalSemigroup> {
        let mut all = vec![self.root.clone()];
        let mut level = vec![self.root.clone()];
        while !level.is_empty() {
            let next: Vec<NumericalSemigroup> =
                workers.map(&level, |s| self.children(s)).into_iter().flatten().collect();
            all.extend(next.iter().cloned());
            level = next;
        }
        let distinct: HashSet<&NumericalSemigroup> = all.iter().collect();
        assert_eq!(distinct.len(), all.len(), "tree walk produced a duplicate");
        all.sort();
        all
    }
}

/// `g(S) = ⌈(F+1)/2⌉`. Errors on ℕ.
pub fn is_irreducible(s: &NumericalSemigroup) -> Result<bool> {
    if s.is_full() {
        return Err(Error::FullSemigroup);
    }
    let f = s.frobenius();
    let by_genus = s.genus() == (f + 2) / 2;
    debug_assert_eq!(
        by_genus,
        s.gaps_iter().all(|x| s.contains(f - x) || 2 * x == f),
        "genus test and witness-set test disagree on {s}"
    );
    Ok(by_genus)
}

/// Δ(S) = S ∪ {x ∉ S : F − x ∉ S, 2x > F}: the irreducible closure with the same F.
pub fn delta(s: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if s.is_full() {
        return Err(Error::FullSemigroup);
    }
    let f = s.frobenius();
    let extra: Vec<u32> = s
        .gaps_iter()
        .filter(|&x| 2 * x > f && !s.contains(f - x))
        .collect();
    Ok(s.with_members(extra))
}

/// C(A, F) = Δ(⟨A⟩ ∪ {F+1, →}).
pub fn c_of(required: &GenSet, frobenius: u32) -> Result<NumericalSemigroup> {
    Ok(IrreducibleContext::new(required, frobenius)?.root)
}

/// ℐ(A, F), sorted canonically.
pub fn enumerate_irreducibles(required: &GenSet, frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
    enumerate_irreducibles_with(required, frobenius, Workers::sequential())
}

pub fn enumerate_irreducibles_with(
    required: &GenSet,
    frobenius: u32,
    workers: Workers,
) -> Result<Vec<NumericalSemigroup>> {
    Ok(IrreducibleContext::new(required, frobenius)?.enumerate(workers))
}
