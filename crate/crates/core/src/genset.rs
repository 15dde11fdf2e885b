//! Finite generator sets and the submonoids of (ℕ, +) they generate.

use std::fmt;

use crate::error::Combination;

/// A normalized finite set of positive integers: strictly increasing, no zeros.
///
/// Used both for the required set `A` and the forbidden set `B`. The empty set
/// is allowed and generates the trivial monoid `{0}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GenSet(Vec<u32>);

impl GenSet {
    /// Sorts, deduplicates and drops zeros.
    pub fn normalize<I: IntoIterator<Item = u32>>(raw: I) -> Self {
        let mut v: Vec<u32> = raw.into_iter().filter(|&x| x != 0).collect();
        v.sort_unstable();
        v.dedup();
        GenSet(v)
    }

    pub fn empty() -> Self {
        GenSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn min(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn gcd(&self) -> u32 {
        self.0.iter().fold(0, |g, &x| gcd(g, x))
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// The minimal generating set of ⟨self⟩.
    ///
    /// Scans in increasing order and keeps an element iff it is not generated
    /// by the elements kept so far.
    pub fn msg(&self) -> GenSet {
        let Some(top) = self.max() else {
            return GenSet::empty();
        };
        let top = top as usize;
        let mut member = vec![false; top + 1];
        member[0] = true;
        let mut kept = Vec::new();
        for m in self.iter() {
            if member[m as usize] {
                continue;
            }
            kept.push(m);
            let m = m as usize;
            for x in m..=top {
                if member[x - m] {
                    member[x] = true;
                }
            }
        }
        GenSet(kept)
    }
}

impl From<Vec<u32>> for GenSet {
    fn from(v: Vec<u32>) -> Self {
        GenSet::normalize(v)
    }
}

impl<const N: usize> From<[u32; N]> for GenSet {
    fn from(v: [u32; N]) -> Self {
        GenSet::normalize(v)
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Membership table of ⟨generators⟩ on `[0, bound]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submonoid {
    generators: GenSet,
    bound: u32,
    member: Vec<bool>,
}

impl Submonoid {
    /// Forward dynamic programming: `x` is a member iff `x - g` is for some generator `g ≤ x`.
    pub fn new(generators: &GenSet, bound: u32) -> Self {
        let n = bound as usize;
        let mut member = vec![false; n + 1];
        member[0] = true;
        for x in 1..=n {
            member[x] = generators
                .iter()
                .take_while(|&g| g as usize <= x)
                .any(|g| member[x - g as usize]);
        }
        Submonoid {
            generators: generators.clone(),
            bound,
            member,
        }
    }

    pub fn generators(&self) -> &GenSet {
        &self.generators
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Membership for `x ≤ bound`.
    ///
    /// Panics if `x` exceeds the table bound.
    pub fn contains(&self, x: u32) -> bool {
        assert!(x <= self.bound, "{x} beyond submonoid bound {}", self.bound);
        self.member[x as usize]
    }

    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(x, _)| x as u32)
    }

    /// A witness `x = Σ cᵢ·gᵢ` when `x` is a member.
    pub fn combination(&self, x: u32) -> Option<Combination> {
        if !self.contains(x) {
            return None;
        }
        let mut counts: Vec<(u32, u32)> = self.generators.iter().map(|g| (0, g)).collect();
        let mut rest = x as usize;
        while rest > 0 {
            let (slot, g) = counts
                .iter()
                .enumerate()
                .rev()
                .map(|(i, &(_, g))| (i, g as usize))
                .find(|&(_, g)| g <= rest && self.member[rest - g])
                .expect("member has a predecessor");
            counts[slot].0 += 1;
            rest -= g;
        }
        Some(Combination {
            value: x,
            terms: counts.into_iter().filter(|&(c, _)| c > 0).collect(),
        })
    }
}
