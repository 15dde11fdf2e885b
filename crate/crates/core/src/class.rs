//! Frobenius classes: every S ∈ 𝒮(A, F) has an irreducible closure Δ(S), and
//! the fibre over an irreducible S is the interval [Γ(S), S] of semigroups.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::genset::{GenSet, Submonoid};
use crate::irreducible::{delta, IrreducibleContext};
use crate::par::Workers;
use crate::semigroup::NumericalSemigroup;

/// Largest removable set `D(S)` expanded subset-by-subset.
pub const MAX_D_SIZE: usize = 30;

/// The class `[S]` of an irreducible `S`.
#[derive(Clone, Debug)]
pub struct FrobeniusClass {
    pub top: NumericalSemigroup,
    pub bottom: NumericalSemigroup,
    /// `S ∖ Γ(S)`, ascending.
    pub d_set: Vec<u32>,
    /// Traces `T(B)` for all `B ⊆ D(S)`, each ascending, the family sorted.
    pub k_family: Vec<Vec<u32>>,
    /// Sorted canonically.
    pub members: Vec<NumericalSemigroup>,
}

/// Γ(S) = ⟨A ∪ {x ∈ S : 2x < F}⟩ ∪ {F+1, →}.
pub fn gamma(s: &NumericalSemigroup, ctx: &IrreducibleContext) -> NumericalSemigroup {
    let f = ctx.frobenius();
    let gens = GenSet::normalize(
        ctx.required()
            .iter()
            .chain(s.small_elements().filter(|&x| 2 * x < f)),
    );
    NumericalSemigroup::cofinite_extension(&Submonoid::new(&gens, f), f)
}

/// Tables `T(d) = ({d} + Γ(S)) ∩ D(S)` as bitmasks over the positions of `d_set`.
struct Traces<'a> {
    d_set: &'a [u32],
    singles: Vec<u64>,
}

impl<'a> Traces<'a> {
    fn new(d_set: &'a [u32], bottom: &NumericalSemigroup) -> Self {
        let singles = d_set
            .iter()
            .map(|&d| {
                d_set
                    .iter()
                    .enumerate()
                    .filter(|&(_, &e)| e >= d && bottom.contains(e - d))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        Traces { d_set, singles }
    }

    fn trace(&self, subset: &[u32]) -> Result<u64> {
        subset.iter().try_fold(0u64, |m, &b| {
            let i = self.d_set.binary_search(&b).map_err(|_| Error::NotInD(b))?;
            Ok(m | self.singles[i])
        })
    }

    fn decode(&self, mask: u64) -> Vec<u32> {
        (0..self.d_set.len())
            .filter(|j| mask >> j & 1 == 1)
            .map(|j| self.d_set[j])
            .collect()
    }

    /// `{T(B) : B ⊆ D}` as the union-closure of the singleton traces plus ∅.
    fn family(&self) -> Vec<u64> {
        let mut seen: HashSet<u64> = HashSet::from([0]);
        let mut family = vec![0u64];
        for &t in &self.singles {
            for i in 0..family.len() {
                let u = family[i] | t;
                if seen.insert(u) {
                    family.push(u);
                }
            }
        }
        family
    }
}

/// `T(B) = ⋃_{b ∈ B} ({b} + Γ(S)) ∩ D(S)`, ascending.
pub fn t_of(subset: &[u32], class: &FrobeniusClass) -> Result<Vec<u32>> {
    let traces = Traces::new(&class.d_set, &class.bottom);
    Ok(traces.decode(traces.trace(subset)?))
}

/// Builds `[S]` for `S ∈ ℐ(A, F)`.
pub fn class_of(s: &NumericalSemigroup, ctx: &IrreducibleContext) -> Result<FrobeniusClass> {
    let bottom = gamma(s, ctx);
    let d_set: Vec<u32> = s.small_elements().filter(|&x| !bottom.contains(x)).collect();
    if d_set.len() > MAX_D_SIZE {
        return Err(Error::CapacityExceeded {
            what: "|D(S)|",
            got: d_set.len() as u64,
            limit: MAX_D_SIZE as u64,
        });
    }
    let f = ctx.frobenius();
    let traces = Traces::new(&d_set, &bottom);
    let masks = traces.family();
    let mut k_family: Vec<Vec<u32>> = masks.iter().map(|&m| traces.decode(m)).collect();
    k_family.sort();
    let mut members = k_family
        .iter()
        .map(|x| NumericalSemigroup::from_small_elements(bottom.small_elements().chain(x.iter().copied()), f))
        .collect::<Result<Vec<_>>>()?;
    members.sort();
    debug_assert!(members.iter().all(|t| delta(t).as_ref() == Ok(s)));
    Ok(FrobeniusClass {
        top: s.clone(),
        bottom,
        d_set,
        k_family,
        members,
    })
}

/// 𝒮(A, F) = ⋃_{S ∈ ℐ(A,F)} [S], sorted canonically.
pub fn enumerate_with_frobenius(required: &GenSet, frobenius: u32) -> Result<Vec<NumericalSemigroup>> {
    enumerate_with_frobenius_with(required, frobenius, Workers::sequential())
}

pub fn enumerate_with_frobenius_with(
    required: &GenSet,
    frobenius: u32,
    workers: Workers,
) -> Result<Vec<NumericalSemigroup>> {
    let mut all: Vec<NumericalSemigroup> = classes_with(required, frobenius, workers)?
        .into_iter()
        .flat_map(|c| c.members)
        .collect();
    let distinct: HashSet<&NumericalSemigroup> = all.iter().collect();
    assert_eq!(distinct.len(), all.len(), "classes of distinct irreducibles overlap");
    all.sort();
    Ok(all)
}

/// All classes `[S]` for `S ∈ ℐ(A, F)`, in the canonical order of their tops.
pub fn classes_with(
    required: &GenSet,
    frobenius: u32,
    workers: Workers,
) -> Result<Vec<FrobeniusClass>> {
    let ctx = IrreducibleContext::new(required, frobenius)?;
    let tops = ctx.enumerate(workers);
    workers.map(&tops, |s| class_of(s, &ctx)).into_iter().collect()
}
