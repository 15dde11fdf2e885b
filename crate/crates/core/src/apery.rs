//! Apéry sets and the vectors θₙ(S) with their join and product order.

use std::fmt;

use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::semigroup::NumericalSemigroup;

/// `(w(1), …, w(n−1))`, where `w(i)` is the least member congruent to `i` mod `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AperyVector {
    modulus: u32,
    coords: Vec<u32>,
}

impl AperyVector {
    /// Wraps raw coordinates; checks only the residue and positivity invariants.
    pub fn new(modulus: u32, coords: Vec<u32>) -> Result<Self> {
        assert!(modulus >= 2, "modulus must be at least 2");
        if coords.len() != modulus as usize - 1 {
            return Err(Error::NotInImage { modulus });
        }
        let ok = coords
            .iter()
            .enumerate()
            .all(|(i, &w)| w as usize > i && w % modulus == (i as u32 + 1));
        if !ok {
            return Err(Error::NotInImage { modulus });
        }
        Ok(AperyVector { modulus, coords })
    }

    #[cfg(test)]
    pub(crate) fn raw(modulus: u32, coords: Vec<u32>) -> Self {
        AperyVector { modulus, coords }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        Ok(AperyVector {
            modulus: self.modulus,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        })
    }

    /// Componentwise `≤`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_modulus(other)?;
        Ok(self.dominated_by(other))
    }

    pub(crate) fn dominated_by(&self, other: &Self) -> bool {
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    pub(crate) fn join_unchecked(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        AperyVector {
            modulus: self.modulus,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    fn check_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }

    pub(crate) fn coord_sum(&self) -> u64 {
        self.coords.iter().map(|&x| x as u64).sum()
    }
}

impl fmt::Display for AperyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for AperyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "θ{}{}", self.modulus, self)
    }
}

/// `Ap(S, n)` listed by residue: entry `i` is the least member `≡ i (mod n)`.
pub fn apery(s: &NumericalSemigroup, n: u32) -> Result<Vec<u32>> {
    if n == 0 || !s.contains(n) {
        return Err(Error::NotAMember(n));
    }
    Ok((0..n)
        .map(|i| {
            // every residue class has a member in [i, F + n]
            let mut x = i;
            while !s.contains(x) {
                x += n;
            }
            x
        })
        .collect())
}

/// θₙ(S): the Apéry set of `n` without `w(0) = 0`.
pub fn theta(s: &NumericalSemigroup, n: u32) -> Result<AperyVector> {
    if n < 2 {
        // n = 1 only belongs to ℕ and gives an empty vector; the modulus must be ≥ 2
        return Err(Error::NotAMember(n));
    }
    let mut w = apery(s, n)?;
    w.remove(0);
    Ok(AperyVector {
        modulus: n,
        coords: w,
    })
}

/// `⟨x₁, …, xₙ₋₁, n⟩`, rejected with `NotInImage` unless its θₙ gives back `v`.
pub fn semigroup_from_theta(v: &AperyVector) -> Result<NumericalSemigroup> {
    let n = v.modulus();
    let gens = GenSet::normalize(v.coords().iter().copied().chain([n]));
    let s = NumericalSemigroup::from_generators(&gens)
        .map_err(|_| Error::NotInImage { modulus: n })?;
    if theta(&s, n)? != *v {
        return Err(Error::NotInImage { modulus: n });
    }
    Ok(s)
}
